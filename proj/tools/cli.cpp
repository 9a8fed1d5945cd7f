#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "covest/analysis.hpp"
#include "covest/baseline.hpp"
#include "covest/engine.hpp"
#include "covest/matrix_io.hpp"
#include "covest/schedsim.hpp"

namespace covest::cli {

namespace {

enum class Mode { Naive, Seq, SeqOpt, Par };

struct RunConfig {
    std::string command;
    std::string in;
    std::string out;
    std::string trace;
    std::string costs;
    std::size_t n = 32;
    std::size_t m = 32;
    std::size_t p = 13;
    std::size_t q = 13;
    std::optional<Mode> mode;
    std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t seed = 1;
    std::size_t batch = 1;
    std::size_t repeats = 5;
    std::vector<std::size_t> cores{1, 2, 4, 8, 16, 32, 64, 128};
    SchedPolicy policy = SchedPolicy::LongestFirst;
    DispatchOrder order = DispatchOrder::CostDescending;
    std::uint64_t overhead = 0;
};

const char* mode_name(Mode m) {
    switch (m) {
    case Mode::Naive:
        return "naive";
    case Mode::Seq:
        return "seq";
    case Mode::SeqOpt:
        return "seq-opt";
    case Mode::Par:
        return "par";
    }
    return "?";
}

ExecMode exec_mode(Mode m, std::size_t threads) {
    switch (m) {
    case Mode::Seq:
        return ExecMode::seq_direct();
    case Mode::SeqOpt:
        return ExecMode::seq_optimized();
    default:
        return ExecMode::parallel(threads);
    }
}

std::string fmt_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// Writes to --out when given, otherwise to the command's stdout stream.
template <typename Fn>
void emit(const RunConfig& cfg, std::ostream& out, Fn&& fn) {
    if (cfg.out.empty()) {
        fn(out);
        return;
    }
    std::ofstream file(cfg.out);
    if (!file)
        throw std::runtime_error("cannot open '" + cfg.out + "' for writing");
    fn(file);
}

InputMatrix load_or_generate(const RunConfig& cfg, std::size_t index = 0) {
    if (!cfg.in.empty())
        return load_input_matrix(cfg.in);
    return InputMatrix::random(cfg.n, cfg.m, cfg.seed + index);
}

WindowSpec window(const RunConfig& cfg) { return {cfg.p, cfg.q}; }

EngineOptions engine_options(const RunConfig& cfg) {
    EngineOptions o;
    o.order = cfg.order;
    return o;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
    const auto a = InputMatrix::random(cfg.n, cfg.m, cfg.seed);
    emit(cfg, out, [&](std::ostream& os) { write_matrix(os, a); });
    return 0;
}

int cmd_estimate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Mode mode = cfg.mode.value_or(Mode::SeqOpt);
    const WindowSpec w = window(cfg);
    if (cfg.batch > 1) {
        if (!cfg.in.empty())
            throw ParameterError("--batch > 1 generates its inputs; drop --in");
        if (cfg.out.empty())
            throw ParameterError("--batch > 1 needs --out (files <out>.0, <out>.1, ...)");
        std::vector<InputMatrix> mats;
        for (std::size_t i = 0; i < cfg.batch; ++i)
            mats.push_back(load_or_generate(cfg, i));
        const auto res = estimate_batch(mats, w, cfg.threads, engine_options(cfg));
        for (std::size_t i = 0; i < res.matrices.size(); ++i)
            save_matrix(cfg.out + "." + std::to_string(i), res.matrices[i]);
        if (!cfg.trace.empty()) {
            std::ofstream tr(cfg.trace);
            write_cost_trace(tr, measured_costs(res.counters));
        }
        err << "batch=" << cfg.batch << " tasks=" << res.task_count << '\n';
        return 0;
    }

    const auto a = load_or_generate(cfg);
    const auto start = std::chrono::steady_clock::now();
    if (mode == Mode::Naive) {
        const auto c = estimate_naive(a, w);
        const std::chrono::duration<double> s = std::chrono::steady_clock::now() - start;
        emit(cfg, out, [&](std::ostream& os) { write_matrix(os, c); });
        err << "mode=naive seconds=" << fmt_double(s.count()) << '\n';
        return 0;
    }
    const auto res = estimate_combinations(a, w, exec_mode(mode, cfg.threads), engine_options(cfg));
    const std::chrono::duration<double> s = std::chrono::steady_clock::now() - start;
    emit(cfg, out, [&](std::ostream& os) { write_matrix(os, res.matrix); });
    if (!cfg.trace.empty()) {
        std::ofstream tr(cfg.trace);
        if (!tr)
            throw std::runtime_error("cannot open '" + cfg.trace + "' for writing");
        write_cost_trace(tr, measured_costs(std::span(&res.counters, 1)));
    }
    err << "mode=" << mode_name(mode) << " mults=" << res.counters.multiplications
        << " adds=" << res.counters.additions << " seconds=" << fmt_double(s.count()) << '\n';
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    constexpr double kTolerance = 1e-10;
    const auto a = load_or_generate(cfg);
    const WindowSpec w = window(cfg);
    const auto oracle = estimate_naive(a, w);

    struct Row {
        std::string mode;
        std::size_t threads;
        CovarianceMatrix c;
    };
    std::vector<Row> rows;
    const auto opts = engine_options(cfg);
    rows.push_back({"seq", 1, estimate_combinations(a, w, ExecMode::seq_direct(), opts).matrix});
    rows.push_back({"seq-opt", 1, estimate_combinations(a, w, ExecMode::seq_optimized(), opts).matrix});
    rows.push_back({"par", cfg.threads, estimate_parallel(a, w, cfg.threads, opts).matrix});

    bool ok = true;
    std::ostringstream report;
    report << "mode,threads,max_rel_diff,frobenius_rel_diff,result\n";
    for (const auto& r : rows) {
        const double max_rel = max_relative_entry_difference(r.c.packed(), oracle.packed());
        const double frob = relative_frobenius_distance(r.c.packed(), oracle.packed());
        const bool pass = max_rel <= kTolerance && frob <= kTolerance;
        ok = ok && pass;
        report << r.mode << ',' << r.threads << ',' << fmt_double(max_rel) << ',' << fmt_double(frob) << ','
               << (pass ? "PASS" : "FAIL") << '\n';
    }
    // Staging and scheduling must not change a single bit.
    const bool bitwise = rows[0].c == rows[1].c && rows[1].c == rows[2].c;
    ok = ok && bitwise;
    report << "combination modes bitwise identical: " << (bitwise ? "yes" : "no") << '\n';
    report << "verify: " << (ok ? "PASS" : "FAIL") << '\n';
    emit(cfg, out, [&](std::ostream& os) { os << report.str(); });
    return ok ? 0 : 1;
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
    const auto cm = closed_form_counts(cfg.n, cfg.m, cfg.p, cfg.q);
    emit(cfg, out, [&](std::ostream& os) {
        os << "N,M,P,Q,SM,SA,UM1,UM2,UM,UMHAT,RATIO\n";
        os << cm.n << ',' << cm.m << ',' << cm.p << ',' << cm.q << ',' << cm.sm << ',' << cm.sa << ','
           << cm.um1 << ',' << cm.um2 << ',' << cm.um << ',' << cm.um_hat << ',' << cm.ratio_decimal() << '\n';
    });
    return 0;
}

int cmd_simsched(const RunConfig& cfg, std::ostream& out) {
    const WindowSpec w = window(cfg);
    std::vector<TaskCost> tasks;
    if (!cfg.costs.empty()) {
        const std::size_t expected = enumerate_unique_combinations(w).size() * cfg.batch;
        tasks = ingest_measured_costs(cfg.costs, expected);
    } else {
        tasks = model_costs(w, cfg.n, cfg.m, cfg.batch);
    }
    SimOptions so;
    so.dispatch_overhead = cfg.overhead;
    const auto pts = sweep(tasks, cfg.cores, cfg.policy, so);
    emit(cfg, out, [&](std::ostream& os) { write_sweep(os, pts); });
    return 0;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
    const auto a = load_or_generate(cfg);
    const WindowSpec w = window(cfg);
    w.validate_for(a.rows(), a.cols());

    auto time_min = [&](auto&& fn) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < cfg.repeats; ++i) {
            const auto t0 = std::chrono::steady_clock::now();
            fn();
            const std::chrono::duration<double> d = std::chrono::steady_clock::now() - t0;
            best = std::min(best, d.count());
        }
        return best;
    };

    const double naive_s = time_min([&] { (void)estimate_naive(a, w); });
    const std::uint64_t windows = (a.rows() - w.height + 1) * (a.cols() - w.width + 1);
    const std::uint64_t naive_ops = windows * CovarianceMatrix::packed_size(w.stack_length());

    std::vector<Mode> modes;
    if (cfg.mode && *cfg.mode != Mode::Naive)
        modes.push_back(*cfg.mode);
    else if (!cfg.mode)
        modes = {Mode::Seq, Mode::SeqOpt, Mode::Par};

    std::ostringstream csv;
    csv << "mode,threads,N,M,P,Q,seconds,speedup_vs_naive,mults,adds\n";
    auto row = [&](const char* name, std::size_t threads, double secs, std::uint64_t mults, std::uint64_t adds) {
        csv << name << ',' << threads << ',' << a.rows() << ',' << a.cols() << ',' << w.height << ','
            << w.width << ',' << fmt_double(secs) << ',' << fmt_double(naive_s / secs) << ',' << mults << ','
            << adds << '\n';
    };
    row("naive", 1, naive_s, naive_ops, naive_ops);
    const auto opts = engine_options(cfg);
    for (Mode m : modes) {
        const ExecMode em = exec_mode(m, cfg.threads);
        EstimateResult last = estimate_combinations(a, w, em, opts);
        const double s = time_min([&] { last = estimate_combinations(a, w, em, opts); });
        row(mode_name(m), em.threads, s, last.counters.multiplications, last.counters.additions);
    }
    emit(cfg, out, [&](std::ostream& os) { os << csv.str(); });
    return 0;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Covariance-method estimated covariance matrix: combination-based estimator, "
                 "operation counts and scheduling simulator"};
    RunConfig cfg;

    const std::map<std::string, Mode> modes{
        {"naive", Mode::Naive}, {"seq", Mode::Seq}, {"seq-opt", Mode::SeqOpt}, {"par", Mode::Par}};
    const std::map<std::string, SchedPolicy> policies{{"fifo", SchedPolicy::Fifo},
                                                      {"longest", SchedPolicy::LongestFirst}};
    const std::map<std::string, DispatchOrder> orders{{"cost", DispatchOrder::CostDescending},
                                                      {"enum", DispatchOrder::Enumeration}};
    Mode mode = Mode::SeqOpt;

    app.add_option("--cmd", cfg.command, "Command to run")
        ->required()
        ->check(CLI::IsMember({"gen", "estimate", "verify", "count", "simsched", "bench"}));
    app.add_option("--in", cfg.in, "Input matrix file (otherwise generated from --n/--m/--seed)");
    app.add_option("--out", cfg.out, "Output file (default: stdout)");
    app.add_option("--n", cfg.n, "Input rows N")->check(CLI::PositiveNumber);
    app.add_option("--m", cfg.m, "Input columns M")->check(CLI::PositiveNumber);
    app.add_option("--p", cfg.p, "Window height P")->check(CLI::PositiveNumber);
    app.add_option("--q", cfg.q, "Window width Q")->check(CLI::PositiveNumber);
    auto* mode_opt = app.add_option("--mode", mode, "Computation path")
                         ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    app.add_option("--threads", cfg.threads, "Worker threads for par mode")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Generator seed");
    app.add_option("--batch", cfg.batch, "Matrices per task pool")->check(CLI::PositiveNumber);
    app.add_option("--repeats", cfg.repeats, "Timing repeats for bench (minimum is reported)")
        ->check(CLI::PositiveNumber);
    app.add_option("--cores", cfg.cores, "Core counts for simsched")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    app.add_option("--policy", cfg.policy, "Simulator dispatch policy")
        ->transform(CLI::CheckedTransformer(policies, CLI::ignore_case));
    app.add_option("--order", cfg.order, "Engine dispatch order")
        ->transform(CLI::CheckedTransformer(orders, CLI::ignore_case));
    app.add_option("--trace", cfg.trace, "estimate: write per-combination timing CSV here");
    app.add_option("--costs", cfg.costs, "simsched: read task costs from a timing CSV");
    app.add_option("--overhead", cfg.overhead, "simsched: work units per dispatch");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }
    if (mode_opt->count() > 0)
        cfg.mode = mode;

    try {
        if (cfg.command == "gen")
            return cmd_gen(cfg, out);
        if (cfg.command == "estimate")
            return cmd_estimate(cfg, out, err);
        if (cfg.command == "verify")
            return cmd_verify(cfg, out);
        if (cfg.command == "count")
            return cmd_count(cfg, out);
        if (cfg.command == "simsched")
            return cmd_simsched(cfg, out);
        return cmd_bench(cfg, out);
    } catch (const InvalidWindow& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ParameterError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace covest::cli
