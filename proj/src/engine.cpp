#include "covest/engine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <thread>

namespace covest {

namespace {

using Clock = std::chrono::steady_clock;

struct Workspace {
    std::vector<Complex> scratch;
    std::vector<Complex> products;
};

struct Task {
    std::size_t matrix;
    std::size_t combination;  // index into the UC enumeration
};

// Computes one combination's products and accumulates them. With Staged the
// sums build up in ws.scratch (laid out by SegmentLayout) and are written to
// the combination's diagonal segments at the end; otherwise every addition
// goes straight into the packed output.
template <bool Staged>
CombinationCounters run_combination(const InputMatrix& a, const WindowSpec& w, Combination comb,
                                    const KernelSet& kernels, Workspace& ws, CovarianceMatrix& out) {
    const auto start = Clock::now();
    const std::size_t n = a.rows();
    const std::size_t m = a.cols();
    const std::size_t ph = w.height;
    const std::size_t qw = w.width;
    const std::size_t dim = out.dim();
    const SegmentLayout layout(comb, w);
    const std::size_t diag = layout.diagonal();
    const auto dc = static_cast<std::size_t>(comb.dc);
    const std::size_t row_len = m - dc;
    const std::size_t r1_lo = static_cast<std::size_t>(std::max(1, 1 - comb.dr));
    const std::size_t r1_hi = comb.dr >= 0 ? n - static_cast<std::size_t>(comb.dr) : n;

    Complex* const packed = out.packed().data();
    Complex* const scratch = ws.scratch.data();
    Complex* const prod = ws.products.data();
    if constexpr (Staged)
        std::fill_n(scratch, layout.size(), Complex{});

    CombinationCounters counters;
    counters.combination = comb;

    // Window columns holding each pair of a row; the same for every row.
    const std::size_t last_q = m - qw + 1;
    std::uint64_t shifts_per_row = 0;
    for (std::size_t c1 = 1; c1 <= row_len; ++c1) {
        const std::size_t q_lo = c1 + dc > qw ? c1 + dc - qw + 1 : 1;
        shifts_per_row += std::min(c1, last_q) - q_lo + 1;
    }

    RowShifts shifts;
    shifts.row_len = row_len;
    shifts.dc = dc;
    shifts.window_width = qw;
    shifts.cols = m;
    shifts.column_stride = layout.height();

    for (std::size_t r1 = r1_lo; r1 <= r1_hi; ++r1) {
        const std::size_t r2 = static_cast<std::size_t>(static_cast<std::int64_t>(r1) + comb.dr);
        kernels.conj_product(a.row(r1).data(), a.row(r2).data() + dc, prod, row_len);
        counters.multiplications += row_len;

        // Rows of the windows containing both elements.
        const std::size_t r_min = std::min(r1, r2);
        const std::size_t r_max = std::max(r1, r2);
        const std::size_t p_lo = r_max > ph ? r_max - ph + 1 : 1;
        const std::size_t p_hi = std::min(r_min, n - ph + 1);
        const std::size_t np = p_hi - p_lo + 1;
        const std::size_t r_rel_lo = r1 - p_hi + 1;
        counters.additions += np * shifts_per_row;

        if constexpr (Staged) {
            shifts.slot_base = r_rel_lo - layout.first_row();
            shifts.span = np;
            kernels.accumulate_row(shifts, prod, scratch);
        } else {
            for (std::size_t j = 0; j < row_len; ++j) {
                const std::size_t c1 = j + 1;
                const std::size_t q_lo = c1 + dc > qw ? c1 + dc - qw + 1 : 1;
                const std::size_t q_hi = std::min(c1, last_q);
                const Complex val = prod[j];
                for (std::size_t q = q_lo; q <= q_hi; ++q) {
                    const std::size_t row0 = r_rel_lo + ph * (c1 - q);
                    for (std::size_t row = row0; row < row0 + np; ++row)
                        packed[packed_offset_unchecked(row, row + diag, dim)] += val;
                }
            }
        }
    }

    if constexpr (Staged) {
        std::size_t slot = 0;
        for (std::size_t c_rel = 1; c_rel <= layout.width(); ++c_rel) {
            const std::size_t row0 = layout.first_row() + ph * (c_rel - 1);
            for (std::size_t row = row0; row < row0 + layout.height(); ++row, ++slot)
                packed[packed_offset_unchecked(row, row + diag, dim)] += scratch[slot];
        }
    }

    counters.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
    return counters;
}

std::vector<std::size_t> dispatch_indices(const std::vector<Combination>& combos, const WindowSpec& w,
                                          std::size_t rows, std::size_t cols, DispatchOrder order) {
    std::vector<std::size_t> idx(combos.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    if (order == DispatchOrder::CostDescending) {
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
            return mu(combos[x], rows, cols) * eta(combos[x], w) >
                   mu(combos[y], rows, cols) * eta(combos[y], w);
        });
    }
    return idx;
}

struct PoolOutput {
    std::vector<CovarianceMatrix> matrices;
    std::vector<OpCounters> counters;
    std::size_t task_count = 0;
};

// Runs every (matrix, combination) task on `workers` workers. The calling
// thread is worker 0. Tasks are claimed from a shared counter; the output
// matrices are written without synchronization.
PoolOutput run_tasks(std::span<const InputMatrix> mats, const WindowSpec& w, bool staged,
                     std::size_t workers, const EngineOptions& options) {
    if (mats.empty())
        throw ParameterError("no input matrices");
    const std::size_t n = mats.front().rows();
    const std::size_t m = mats.front().cols();
    for (const auto& a : mats) {
        if (a.rows() != n || a.cols() != m)
            throw ParameterError("batch matrices must share dimensions");
    }
    w.validate_for(n, m);
    const std::size_t dim = w.stack_length();
    const KernelSet& kernels = options.kernels ? *options.kernels : active_kernels();

    const auto combos = enumerate_unique_combinations(w);
    const auto order = dispatch_indices(combos, w, n, m, options.order);
    std::vector<Task> tasks;
    tasks.reserve(order.size() * mats.size());
    for (std::size_t ci : order)
        for (std::size_t mi = 0; mi < mats.size(); ++mi)
            tasks.push_back({mi, ci});

    PoolOutput result;
    result.task_count = tasks.size();
    result.matrices.reserve(mats.size());
    for (std::size_t i = 0; i < mats.size(); ++i)
        result.matrices.emplace_back(dim);

    // Indexed by matrix * |UC| + combination; each task owns its slot.
    std::vector<CombinationCounters> slots(tasks.size());

    workers = std::max<std::size_t>(1, std::min(workers, tasks.size()));
    const std::size_t scratch_len = staged ? dim : 0;
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);

    auto work = [&](std::size_t worker) {
        try {
            Workspace ws{std::vector<Complex>(scratch_len), std::vector<Complex>(m)};
            for (;;) {
                const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= tasks.size())
                    break;
                const Task t = tasks[i];
                auto& out = result.matrices[t.matrix];
                const InputMatrix& a = mats[t.matrix];
                CombinationCounters c =
                    staged ? run_combination<true>(a, w, combos[t.combination], kernels, ws, out)
                           : run_combination<false>(a, w, combos[t.combination], kernels, ws, out);
                c.matrix = t.matrix;
                slots[t.matrix * combos.size() + t.combination] = c;
            }
        } catch (...) {
            errors[worker] = std::current_exception();
        }
    };

    {
        std::vector<std::jthread> pool;
        pool.reserve(workers - 1);
        for (std::size_t i = 1; i < workers; ++i)
            pool.emplace_back(work, i);
        work(0);
    }
    for (const auto& e : errors) {
        if (e)
            std::rethrow_exception(e);
    }

    result.counters.resize(mats.size());
    for (std::size_t mi = 0; mi < mats.size(); ++mi) {
        auto& oc = result.counters[mi];
        oc.scratch_entries = workers * scratch_len;
        oc.per_combination.assign(slots.begin() + static_cast<std::ptrdiff_t>(mi * combos.size()),
                                  slots.begin() + static_cast<std::ptrdiff_t>((mi + 1) * combos.size()));
        for (const auto& c : oc.per_combination) {
            oc.multiplications += c.multiplications;
            oc.additions += c.additions;
        }
    }
    return result;
}

EstimateResult single(PoolOutput out) {
    return {std::move(out.matrices.front()), std::move(out.counters.front())};
}

} // namespace

std::vector<Combination> dispatch_order(const WindowSpec& w, std::size_t rows, std::size_t cols,
                                        DispatchOrder order) {
    const auto combos = enumerate_unique_combinations(w);
    std::vector<Combination> out;
    out.reserve(combos.size());
    for (std::size_t i : dispatch_indices(combos, w, rows, cols, order))
        out.push_back(combos[i]);
    return out;
}

EstimateResult estimate_combinations(const InputMatrix& a, const WindowSpec& w, ExecMode mode,
                                     const EngineOptions& options) {
    std::span<const InputMatrix> one(&a, 1);
    switch (mode.kind) {
    case ExecMode::Kind::SeqDirect:
        return single(run_tasks(one, w, false, 1, options));
    case ExecMode::Kind::SeqOptimized:
        return single(run_tasks(one, w, true, 1, options));
    case ExecMode::Kind::Parallel:
        if (mode.threads == 0)
            throw ParameterError("parallel mode needs at least one thread");
        return single(run_tasks(one, w, true, mode.threads, options));
    }
    throw ParameterError("unknown execution mode");
}

EstimateResult estimate_seq_optimized(const InputMatrix& a, const WindowSpec& w,
                                      const EngineOptions& options) {
    return estimate_combinations(a, w, ExecMode::seq_optimized(), options);
}

EstimateResult estimate_parallel(const InputMatrix& a, const WindowSpec& w, std::size_t threads,
                                 const EngineOptions& options) {
    return estimate_combinations(a, w, ExecMode::parallel(threads), options);
}

BatchResult estimate_batch(std::span<const InputMatrix> matrices, const WindowSpec& w,
                           std::size_t threads, const EngineOptions& options) {
    if (threads == 0)
        throw ParameterError("batch mode needs at least one thread");
    auto out = run_tasks(matrices, w, true, threads, options);
    return {std::move(out.matrices), std::move(out.counters), out.task_count};
}

} // namespace covest
