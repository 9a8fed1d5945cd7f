#include "covest/schedsim.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

#include "checked.hpp"

namespace covest {

namespace {

std::string shortest(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

template <typename T>
T parse_field(const std::string& field, std::size_t line, const char* name) {
    T v{};
    auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (res.ec != std::errc() || res.ptr != field.data() + field.size())
        throw FormatError("cost trace line " + std::to_string(line) + ": bad " + name + " '" + field + "'");
    return v;
}

} // namespace

std::vector<TaskCost> model_costs(const WindowSpec& w, std::size_t rows, std::size_t cols,
                                  std::size_t batch) {
    w.validate_for(rows, cols);
    if (batch == 0)
        throw ParameterError("batch must be at least 1");
    const auto combos = enumerate_unique_combinations(w);
    std::vector<TaskCost> out;
    out.reserve(combos.size() * batch);
    for (std::size_t mi = 0; mi < batch; ++mi) {
        for (const auto& c : combos) {
            const std::uint64_t cost =
                detail::checked_mul(mu(c, rows, cols), detail::checked_add(1, eta(c, w)));
            out.push_back({out.size(), c, mi, cost});
        }
    }
    return out;
}

std::vector<TaskCost> measured_costs(std::span<const OpCounters> runs) {
    std::vector<TaskCost> out;
    for (std::size_t mi = 0; mi < runs.size(); ++mi) {
        for (const auto& c : runs[mi].per_combination) {
            out.push_back({out.size(), c.combination, mi,
                           static_cast<std::uint64_t>(std::max<std::int64_t>(0, c.elapsed.count()))});
        }
    }
    return out;
}

SchedResult simulate(std::span<const TaskCost> tasks, std::size_t cores, SchedPolicy policy,
                     const SimOptions& options) {
    if (cores == 0)
        throw ParameterError("simulation needs at least one core");
    if (tasks.empty())
        throw ParameterError("simulation needs at least one task");

    std::vector<const TaskCost*> queue;
    queue.reserve(tasks.size());
    for (const auto& t : tasks)
        queue.push_back(&t);
    if (policy == SchedPolicy::LongestFirst) {
        std::stable_sort(queue.begin(), queue.end(),
                         [](const TaskCost* a, const TaskCost* b) { return a->cost > b->cost; });
    }

    SchedResult r;
    r.per_core_busy.assign(cores, 0);
    r.trace.reserve(tasks.size());

    // (time the core becomes free, core index); smallest first.
    using Slot = std::pair<std::uint64_t, std::size_t>;
    std::priority_queue<Slot, std::vector<Slot>, std::greater<>> free_at;
    for (std::size_t c = 0; c < cores; ++c)
        free_at.push({0, c});

    for (const TaskCost* t : queue) {
        const auto [now, core] = free_at.top();
        free_at.pop();
        const std::uint64_t work = detail::checked_add(t->cost, options.dispatch_overhead);
        const std::uint64_t done = detail::checked_add(now, work);
        r.trace.push_back({now, core, t->id});
        r.per_core_busy[core] += work;
        r.total_work = detail::checked_add(r.total_work, work);
        r.makespan = std::max(r.makespan, done);
        free_at.push({done, core});
    }

    if (r.makespan == 0)
        throw ParameterError("all task costs are zero");
    r.speedup = static_cast<double>(r.total_work) / static_cast<double>(r.makespan);
    return r;
}

const char* region_label(Region r) {
    switch (r) {
    case Region::NearOptimal:
        return "I";
    case Region::SubLinear:
        return "II";
    case Region::Starvation:
        return "III";
    }
    return "?";
}

std::vector<SweepPoint> sweep(std::span<const TaskCost> tasks, std::span<const std::size_t> core_counts,
                              SchedPolicy policy, const SimOptions& options) {
    if (core_counts.empty())
        throw ParameterError("sweep needs at least one core count");
    std::vector<SweepPoint> out;
    out.reserve(core_counts.size());
    for (std::size_t cores : core_counts) {
        const auto r = simulate(tasks, cores, policy, options);
        SweepPoint pt{cores, r.makespan, r.speedup, Region::SubLinear};
        if (r.speedup >= 0.95 * static_cast<double>(cores))
            pt.region = Region::NearOptimal;
        else if (!out.empty() && r.speedup < 1.01 * out.back().speedup)
            pt.region = Region::Starvation;
        out.push_back(pt);
    }
    return out;
}

void write_cost_trace(std::ostream& out, std::span<const TaskCost> tasks) {
    out << "task_id,dr,dc,cost\n";
    for (const auto& t : tasks)
        out << t.id << ',' << t.combination.dr << ',' << t.combination.dc << ',' << t.cost << '\n';
}

std::vector<TaskCost> ingest_measured_costs(std::istream& in, std::optional<std::size_t> expected_count) {
    std::string line;
    if (!std::getline(in, line))
        throw FormatError("empty cost trace");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != "task_id,dr,dc,cost")
        throw FormatError("cost trace header must be \"task_id,dr,dc,cost\"");

    std::vector<TaskCost> out;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::vector<std::string> fields;
        std::istringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ','))
            fields.push_back(f);
        if (fields.size() != 4)
            throw FormatError("cost trace line " + std::to_string(lineno) + ": expected 4 fields");
        TaskCost t;
        t.id = parse_field<std::size_t>(fields[0], lineno, "task_id");
        t.combination = {parse_field<int>(fields[1], lineno, "dr"), parse_field<int>(fields[2], lineno, "dc")};
        const double cost = parse_field<double>(fields[3], lineno, "cost");
        if (!std::isfinite(cost) || cost < 0.0 || cost >= 0x1p63)
            throw FormatError("cost trace line " + std::to_string(lineno) +
                              ": cost must be finite, non-negative and below 2^63");
        t.cost = static_cast<std::uint64_t>(std::llround(cost));
        out.push_back(t);
    }
    if (expected_count && out.size() != *expected_count)
        throw FormatError("cost trace has " + std::to_string(out.size()) + " tasks, expected " +
                          std::to_string(*expected_count));
    return out;
}

std::vector<TaskCost> ingest_measured_costs(const std::string& path, std::optional<std::size_t> expected_count) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "' for reading");
    return ingest_measured_costs(in, expected_count);
}

void write_sweep(std::ostream& out, std::span<const SweepPoint> points) {
    out << "cores,makespan,speedup,region\n";
    for (const auto& pt : points)
        out << pt.cores << ',' << pt.makespan << ',' << shortest(pt.speedup) << ',' << region_label(pt.region)
            << '\n';
}

} // namespace covest
