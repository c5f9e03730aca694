#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "../tools/commands.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = qeat::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> v;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) v.push_back(line);
    return v;
}

std::string result_value(const std::string& text, const std::string& key) {
    const std::string prefix = "RESULT " + key + "=";
    for (const auto& line : lines(text)) {
        if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
    }
    return {};
}

}  // namespace

TEST_CASE("help exits cleanly") {
    const Outcome o = run({"--help"});
    CHECK(o.code == qeat::cli::kExitOk);
    CHECK(o.out.find("rate-curve") != std::string::npos);
}

TEST_CASE("a subcommand is required") {
    CHECK(run({}).code == qeat::cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == qeat::cli::kExitUsage);
}

TEST_CASE("rate-curve writes one CSV row per point and gamma") {
    const Outcome o = run({"rate-curve", "--points", "3", "--gamma", "1", "--gamma", "0.1"});
    REQUIRE(o.code == 0);
    const auto rows = lines(o.out);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0] == "n,gamma,rate,alpha_star,p_b");
    CHECK(rows[1].rfind("100000,1,", 0) == 0);
    CHECK(rows[3].rfind("10000000000,1,", 0) == 0);
    CHECK(rows[4].rfind("100000,0.1,", 0) == 0);
}

TEST_CASE("rate-curve is deterministic") {
    const std::vector<std::string> args{"rate-curve", "--points", "4", "--gamma", "0.01"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("two points give exactly the endpoints") {
    const Outcome o = run({"rate-curve", "--points", "2", "--n-min", "1000", "--n-max", "5000"});
    REQUIRE(o.code == 0);
    const auto rows = lines(o.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].rfind("1000,", 0) == 0);
    CHECK(rows[2].rfind("5000,", 0) == 0);
}

TEST_CASE("rate-curve rejects bad values") {
    CHECK(run({"rate-curve", "--points", "1"}).code == qeat::cli::kExitUsage);
    CHECK(run({"rate-curve", "--e", "0.7"}).code == qeat::cli::kExitUsage);
    CHECK(run({"rate-curve", "--gamma", "0"}).code == qeat::cli::kExitUsage);
    CHECK(run({"rate-curve", "--n-min", "100", "--n-max", "10"}).code == qeat::cli::kExitUsage);
    CHECK(run({"rate-curve", "--points", "abc"}).code == qeat::cli::kExitUsage);
    const Outcome o = run({"rate-curve", "--eps", "2"});
    CHECK(o.code == qeat::cli::kExitUsage);
    CHECK(o.err.find("--eps") != std::string::npos);
}

TEST_CASE("rate-curve writes to a file on request") {
    const auto path = std::filesystem::temp_directory_path() / "qeat_test_rate_curve.csv";
    const Outcome o = run({"rate-curve", "--points", "3", "--out", path.string()});
    REQUIRE(o.code == 0);
    CHECK(result_value(o.out, "rows") == "3");
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "n,gamma,rate,alpha_star,p_b");
    std::filesystem::remove(path);
}

TEST_CASE("variance-curve peaks near q = 0.083") {
    const Outcome o = run({"variance-curve", "--steps", "1000"});
    REQUIRE(o.code == 0);
    const auto rows = lines(o.out);
    REQUIRE(rows.size() == 1000);
    CHECK(rows[0] == "q,v");
    double best_q = 0.0, best_v = -1.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto comma = rows[i].find(',');
        const double q = std::stod(rows[i].substr(0, comma));
        const double v = std::stod(rows[i].substr(comma + 1));
        if (v > best_v) {
            best_v = v;
            best_q = q;
        }
    }
    CHECK(best_q == doctest::Approx(0.083).epsilon(0.03));
    CHECK(best_v == doctest::Approx(0.9142).epsilon(1e-3));
    CHECK(run({"variance-curve", "--steps", "1"}).code == qeat::cli::kExitUsage);
}

TEST_CASE("bound reports the log(2 d^2 + 1) term") {
    const Outcome o = run({"bound", "--n", "1e8", "--h", "0.5", "--d-a", "4"});
    REQUIRE(o.code == 0);
    CHECK(result_value(o.out, "log_dimension_term_argument") == "33");
    CHECK(std::stod(result_value(o.out, "log_dimension_term")) == doctest::Approx(std::log2(33.0)));
    CHECK(result_value(o.out, "small_n") == "false");
    CHECK(std::stod(result_value(o.out, "optimized_bound")) >= std::stod(result_value(o.out, "theorem_bound")));
    const double alpha = std::stod(result_value(o.out, "alpha_star"));
    CHECK(alpha > 1.0);
    CHECK(alpha < 2.0);
}

TEST_CASE("bound flags small n and evaluates a fixed alpha") {
    const Outcome o = run({"bound", "--n", "5", "--h", "0.5", "--alpha", "1.5"});
    REQUIRE(o.code == 0);
    CHECK(result_value(o.out, "small_n") == "true");
    CHECK(result_value(o.out, "alpha") == "1.5");
    CHECK_FALSE(result_value(o.out, "alpha_bound").empty());
    CHECK(result_value(o.out, "alpha_star").empty());
}

TEST_CASE("bound warns when h is out of reach and rejects bad input") {
    const Outcome o = run({"bound", "--n", "1e6", "--h", "3"});
    CHECK(o.code == 0);
    CHECK(o.err.find("warning") != std::string::npos);
    CHECK(run({"bound", "--n", "1e6"}).code == qeat::cli::kExitUsage);
    CHECK(run({"bound", "--n", "0", "--h", "0.5"}).code == qeat::cli::kExitUsage);
    CHECK(run({"bound", "--n", "1e6", "--h", "0.5", "--alpha", "2"}).code == qeat::cli::kExitUsage);
    CHECK(run({"bound", "--n", "1e6", "--h", "0.5", "--d-a", "1"}).code == qeat::cli::kExitUsage);
    CHECK(run({"bound", "--n", "1e6", "--h", "0.5", "--var-f", "-1"}).code == qeat::cli::kExitUsage);
}

TEST_CASE("verify runs selected suites") {
    const Outcome o = run({"verify", "--trials", "5", "--suite", "additivity", "--suite", "commuting"});
    CHECK(o.code == 0);
    CHECK(o.out.find("PASS additivity") != std::string::npos);
    CHECK(o.out.find("PASS commuting") != std::string::npos);
    CHECK(result_value(o.out, "suites") == "2");
    CHECK(result_value(o.out, "failed_suites") == "0");
}

TEST_CASE("verify output depends only on the seed") {
    const auto strip = [](const std::string& text) {
        std::string kept;
        for (const auto& line : lines(text)) kept += line.substr(0, line.find(" seconds=")) + "\n";
        return kept;
    };
    const std::vector<std::string> args{"verify", "--trials", "3", "--seed", "7", "--suite", "markov"};
    CHECK(strip(run(args).out) == strip(run(args).out));
}

TEST_CASE("verify rejects unknown suites and bad trial counts") {
    CHECK(run({"verify", "--suite", "nope"}).code == qeat::cli::kExitUsage);
    CHECK(run({"verify", "--trials", "0"}).code == qeat::cli::kExitUsage);
}
