#pragma once

// Deterministic list-scheduling simulator over per-combination costs.
//
// Tasks are handed out greedily: whenever a core frees up it takes the next
// task in policy order. Costs are integer work units, either from the
// mu * (1 + eta) model (one multiplication plus up to eta additions per
// product) or from measured per-combination times. The model describes the
// algorithm's work structure; it is not a cycle model of any machine.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "covest/combinations.hpp"
#include "covest/engine.hpp"

namespace covest {

struct TaskCost {
    std::size_t id = 0;
    Combination combination;
    std::size_t matrix = 0;
    std::uint64_t cost = 0;
};

enum class SchedPolicy { Fifo, LongestFirst };

struct Assignment {
    std::uint64_t time = 0;
    std::size_t core = 0;
    std::size_t task = 0;  // TaskCost::id
};

struct SchedResult {
    std::uint64_t makespan = 0;
    std::uint64_t total_work = 0;
    std::vector<std::uint64_t> per_core_busy;
    double speedup = 0.0;
    std::vector<Assignment> trace;
};

struct SimOptions {
    /// Work units a core spends taking each task; counted as busy time.
    std::uint64_t dispatch_overhead = 0;
};

/// |UC| * batch tasks with cost mu * (1 + eta); ids run matrix-major in UC
/// enumeration order.
std::vector<TaskCost> model_costs(const WindowSpec& w, std::size_t rows, std::size_t cols,
                                  std::size_t batch);

/// Measured per-combination times (nanoseconds) as tasks; ids as in model_costs.
std::vector<TaskCost> measured_costs(std::span<const OpCounters> runs);

/// Greedy list scheduling. Ties go to the lowest core index; LongestFirst
/// is a stable sort, so equal costs keep input order. Throws ParameterError
/// for cores == 0, an empty list, or all-zero costs.
SchedResult simulate(std::span<const TaskCost> tasks, std::size_t cores, SchedPolicy policy,
                     const SimOptions& options = {});

/// I: near-optimal, II: sub-linear, III: starvation.
enum class Region { NearOptimal, SubLinear, Starvation };

const char* region_label(Region r);

struct SweepPoint {
    std::size_t cores = 0;
    std::uint64_t makespan = 0;
    double speedup = 0.0;
    Region region = Region::NearOptimal;
};

/// One simulation per core count. A point is region I when speedup is at
/// least 0.95 * cores, region III when it improves on the previous point
/// by less than 1%, region II otherwise.
std::vector<SweepPoint> sweep(std::span<const TaskCost> tasks, std::span<const std::size_t> core_counts,
                              SchedPolicy policy, const SimOptions& options = {});

/// CSV "task_id,dr,dc,cost".
void write_cost_trace(std::ostream& out, std::span<const TaskCost> tasks);

/// Parses a cost trace. Costs must be finite and non-negative and are
/// rounded to whole units. With expected_count set, a different row count
/// is rejected. Throws FormatError.
std::vector<TaskCost> ingest_measured_costs(std::istream& in,
                                            std::optional<std::size_t> expected_count = std::nullopt);
std::vector<TaskCost> ingest_measured_costs(const std::string& path,
                                            std::optional<std::size_t> expected_count = std::nullopt);

/// CSV "cores,makespan,speedup,region".
void write_sweep(std::ostream& out, std::span<const SweepPoint> points);

} // namespace covest
