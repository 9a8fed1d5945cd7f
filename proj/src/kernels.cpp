#include "covest/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace covest {

namespace {

constexpr KernelSet kScalar{KernelIsa::Scalar, "scalar", &detail::conj_product_scalar,
                            &detail::accumulate_row_scalar};

#if defined(COVEST_HAVE_AVX2)
constexpr KernelSet kAvx2{KernelIsa::Avx2, "avx2", &detail::conj_product_avx2,
                          &detail::accumulate_row_avx2};
#endif

#if defined(COVEST_HAVE_NEON)
constexpr KernelSet kNeon{KernelIsa::Neon, "neon", &detail::conj_product_neon,
                          &detail::accumulate_row_neon};
#endif

const KernelSet* best_simd() {
#if defined(COVEST_HAVE_AVX2)
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2"))
        return &kAvx2;
#endif
#if defined(COVEST_HAVE_NEON)
    return &kNeon;
#endif
    return nullptr;
}

const KernelSet& select() {
    if (const char* env = std::getenv("COVEST_KERNELS"); env && std::string_view(env) == "scalar")
        return kScalar;
    if (const KernelSet* simd = best_simd())
        return *simd;
    return kScalar;
}

} // namespace

const KernelSet& scalar_kernels() { return kScalar; }

std::vector<const KernelSet*> available_kernels() {
    std::vector<const KernelSet*> out{&kScalar};
    if (const KernelSet* simd = best_simd())
        out.push_back(simd);
    return out;
}

const KernelSet& active_kernels() {
    static const KernelSet& chosen = select();
    return chosen;
}

} // namespace covest
