#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "covest/analysis.hpp"
#include "covest/matrix_io.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"covest"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out;
    std::ostringstream err;
    const int code = covest::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);)
        out.push_back(l);
    return out;
}

std::vector<std::string> fields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    for (std::string f; std::getline(is, f, ',');)
        out.push_back(f);
    return out;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("covest_test_" + name);
}

} // namespace

TEST_CASE("gen is reproducible and parses back") {
    const auto a = run({"--cmd", "gen", "--n", "2", "--m", "2", "--seed", "7"});
    const auto b = run({"--cmd", "gen", "--n", "2", "--m", "2", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != run({"--cmd", "gen", "--n", "2", "--m", "2", "--seed", "8"}).out);

    const auto path = temp_file("gen.txt");
    CHECK(run({"--cmd", "gen", "--n", "32", "--m", "32", "--seed", "1", "--out", path.c_str()}).code == 0);
    const auto m = covest::load_input_matrix(path.string());
    CHECK(m.rows() == 32);
    CHECK(m.cols() == 32);
    std::filesystem::remove(path);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"--cmd", "gen", "--n", "0", "--m", "2"}).code == 2);
    CHECK(run({"--cmd", "nope"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--cmd", "estimate", "--n", "3", "--m", "3", "--p", "4", "--q", "1"}).code == 2);
    CHECK(run({"--cmd", "verify", "--n", "4", "--m", "4", "--p", "2", "--q", "2", "--mode", "fast"}).code == 2);
}

TEST_CASE("count reports the closed-form ratio") {
    const auto r = run({"--cmd", "count", "--n", "32", "--m", "32", "--p", "13", "--q", "13"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == "N,M,P,Q,SM,SA,UM1,UM2,UM,UMHAT,RATIO");
    const auto f = fields(ls[1]);
    REQUIRE(f.size() == 11);
    CHECK(f[8] == "207880");
    CHECK(f[10] == "45.125");
}

TEST_CASE("verify passes on random and zero inputs") {
    const auto r = run({"--cmd", "verify", "--n", "20", "--m", "20", "--p", "8", "--q", "8", "--threads", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify: PASS") != std::string::npos);

    const auto path = temp_file("zeros.txt");
    {
        std::ofstream f(path);
        covest::write_matrix(f, covest::InputMatrix(5, 6));
    }
    const auto z = run({"--cmd", "verify", "--in", path.c_str(), "--p", "2", "--q", "3", "--threads", "2"});
    CHECK(z.code == 0);
    CHECK(z.out.find("max_rel_diff") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("estimate writes a covariance matrix") {
    const auto path = temp_file("est.txt");
    const auto r = run({"--cmd", "estimate", "--n", "6", "--m", "5", "--p", "2", "--q", "3", "--mode", "par",
                        "--threads", "2", "--out", path.c_str()});
    CHECK(r.code == 0);
    CHECK(covest::load_covariance_matrix(path.string()).dim() == 6);
    std::filesystem::remove(path);
    CHECK(run({"--cmd", "estimate", "--in", "/nonexistent/covest.txt", "--p", "1", "--q", "1"}).code == 1);
}

TEST_CASE("simsched speedups never decrease with more cores") {
    const auto r = run({"--cmd", "simsched", "--n", "32", "--m", "32", "--p", "13", "--q", "13"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() > 2);
    CHECK(ls[0] == "cores,makespan,speedup,region");
    double prev = 0.0;
    for (std::size_t i = 1; i < ls.size(); ++i) {
        const double s = std::stod(fields(ls[i])[2]);
        CHECK(s >= prev);
        prev = s;
    }

    auto at128 = [](const char* batch) {
        const auto o = run({"--cmd", "simsched", "--n", "32", "--m", "32", "--p", "13", "--q", "13", "--cores", "128",
                            "--batch", batch, "--policy", "longest"});
        return std::stod(fields(lines(o.out).at(1))[2]);
    };
    CHECK(at128("2") > at128("1"));
}

TEST_CASE("bench reports every mode") {
    const auto r = run({"--cmd", "bench", "--n", "12", "--m", "12", "--p", "4", "--q", "4", "--repeats", "1",
                        "--threads", "2"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    CHECK(ls[0] == "mode,threads,N,M,P,Q,seconds,speedup_vs_naive,mults,adds");
    REQUIRE(ls.size() == 5);
    CHECK(fields(ls[1])[0] == "naive");
    const auto um = std::to_string(covest::closed_form_counts(12, 12, 4, 4).um);
    for (std::size_t i = 2; i < ls.size(); ++i)
        CHECK(fields(ls[i])[8] == um);
}
