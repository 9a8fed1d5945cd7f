#pragma once

// Combination-based covariance estimation.
//
// Each unique combination computes every one of its products exactly once
// and adds each product to all the output indices it contributes to. Three
// execution modes share that per-combination routine:
//
//   SeqDirect     adds straight into the packed output (diagonal-strided).
//   SeqOptimized  stages each combination in a contiguous scratch array of
//                 eta entries, then writes it back to its diagonal segments.
//   Parallel(t)   SeqOptimized's routine on t workers pulling combinations
//                 from a shared queue; workers write the shared output with
//                 plain stores, relying on the combinations' disjoint write
//                 sets. No locks or atomic updates touch the output.
//
// Within a combination, pairs are visited in a fixed order, so every output
// entry receives the same additions in the same order in every mode: all
// modes agree bitwise, for any thread count.

#include <chrono>
#include <cstdint>
#include <span>
#include <vector>

#include "covest/combinations.hpp"
#include "covest/core.hpp"
#include "covest/kernels.hpp"

namespace covest {

struct ExecMode {
    enum class Kind { SeqDirect, SeqOptimized, Parallel };

    Kind kind = Kind::SeqOptimized;
    std::size_t threads = 1;

    static ExecMode seq_direct() { return {Kind::SeqDirect, 1}; }
    static ExecMode seq_optimized() { return {Kind::SeqOptimized, 1}; }
    static ExecMode parallel(std::size_t threads) { return {Kind::Parallel, threads}; }
};

/// Order in which combinations are handed to workers.
enum class DispatchOrder {
    CostDescending,  // by mu * eta, largest first; ties keep enumeration order
    Enumeration,     // UC enumeration order
};

struct EngineOptions {
    DispatchOrder order = DispatchOrder::CostDescending;
    /// Kernel set override; nullptr uses active_kernels().
    const KernelSet* kernels = nullptr;
};

struct CombinationCounters {
    Combination combination;
    std::size_t matrix = 0;
    std::uint64_t multiplications = 0;
    /// Product-to-output accumulations (one per product per window).
    std::uint64_t additions = 0;
    std::chrono::nanoseconds elapsed{0};
};

struct OpCounters {
    std::uint64_t multiplications = 0;
    std::uint64_t additions = 0;
    /// In UC enumeration order regardless of dispatch order.
    std::vector<CombinationCounters> per_combination;
    /// Scratch entries allocated across all workers (0 for SeqDirect).
    std::size_t scratch_entries = 0;
};

struct EstimateResult {
    CovarianceMatrix matrix;
    OpCounters counters;
};

struct BatchResult {
    std::vector<CovarianceMatrix> matrices;
    std::vector<OpCounters> counters;
    std::size_t task_count = 0;
};

EstimateResult estimate_combinations(const InputMatrix& a, const WindowSpec& w, ExecMode mode,
                                     const EngineOptions& options = {});

EstimateResult estimate_seq_optimized(const InputMatrix& a, const WindowSpec& w,
                                      const EngineOptions& options = {});

/// Throws ParameterError for threads == 0.
EstimateResult estimate_parallel(const InputMatrix& a, const WindowSpec& w, std::size_t threads,
                                 const EngineOptions& options = {});

/// One task pool of matrices.size() * |UC| (matrix, combination) tasks.
/// All matrices must share dimensions.
BatchResult estimate_batch(std::span<const InputMatrix> matrices, const WindowSpec& w,
                           std::size_t threads, const EngineOptions& options = {});

/// Combinations in the order they are dispatched.
std::vector<Combination> dispatch_order(const WindowSpec& w, std::size_t rows, std::size_t cols,
                                        DispatchOrder order);

} // namespace covest
