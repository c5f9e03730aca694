#include <doctest.h>

#include <cmath>

#include "qeat/dire.hpp"
#include "qeat/error.hpp"

using namespace qeat;

namespace {

double binary_entropy(double p) { return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p); }

}  // namespace

TEST_CASE("g* at the classical and quantum optima") {
    CHECK(g_star(0.75) == doctest::Approx(0.0).scale(1.0));
    CHECK(g_star(kChshQuantum) == doctest::Approx(1.0));
    CHECK(kChshQuantum == doctest::Approx(std::pow(std::cos(std::acos(-1.0) / 8.0), 2)));
    CHECK(g_star(0.6) == 0.0);
    CHECK(g_star(0.9) == 1.0);
}

TEST_CASE("g* at a winning probability of 0.8") {
    const double s = std::sqrt(16.0 * 0.8 * -0.2 + 3.0);
    const double expected = 1.0 - binary_entropy(0.5 + 0.5 * s);
    CHECK(g_star(0.8) == doctest::Approx(expected));
    CHECK(g_star(0.8) == doctest::Approx(0.3461).epsilon(1e-3));
}

TEST_CASE("g* is increasing and convex on the open interval") {
    double prev = g_star(0.7501);
    double prev_slope = g_star_derivative(0.7501);
    for (int i = 1; i < 100; ++i) {
        const double w = 0.7501 + (kChshQuantum - 0.7502) * i / 100.0;
        CHECK(g_star(w) > prev);
        const double slope = g_star_derivative(w);
        CHECK(slope >= prev_slope);
        prev = g_star(w);
        prev_slope = slope;
    }
}

TEST_CASE("derivative agrees with a central difference") {
    for (double w : {0.76, 0.8, 0.83, 0.85}) {
        const double h = 1e-6;
        const double fd = (g_star(w + h) - g_star(w - h)) / (2.0 * h);
        CHECK(g_star_derivative(w) == doctest::Approx(fd).epsilon(1e-5));
    }
    CHECK_THROWS_AS(g_star_derivative(0.75), Error);
    CHECK_THROWS_AS(g_star_derivative(kChshQuantum), Error);
}

TEST_CASE("tangent lies below g* and touches it at the tangent point") {
    for (double p_b : {0.76, 0.8, 0.84}) {
        const TradeoffFunction f = tangent_tradeoff(p_b);
        CHECK(f.alphabet() == Names{"0", "1"});
        const auto line = [&](double w) { return f.evaluate(std::vector<double>{1.0 - w, w}); };
        CHECK(line(p_b) == doctest::Approx(g_star(p_b)));
        CHECK(f.value("1") - f.value("0") == doctest::Approx(g_star_derivative(p_b)));
        for (int i = 0; i <= 50; ++i) {
            const double w = 0.75 + (kChshQuantum - 0.75) * i / 50.0;
            CHECK(line(w) <= g_star(w) + 1e-12);
        }
    }
    CHECK_THROWS_AS(tangent_tradeoff(0.75), Error);
}

TEST_CASE("rates stay below the asymptotic value and approach it") {
    DireConfig cfg;
    cfg.n = 1e6;
    const double r6 = dire_rate(cfg).rate;
    cfg.n = 1e10;
    const RatePoint r10 = dire_rate(cfg);
    CHECK(r6 < r10.rate);
    CHECK(r10.rate < g_star(0.8));
    CHECK(r10.rate > 0.34);
    CHECK(r10.alpha_star > 1.0);
    CHECK(r10.alpha_star < 1.01);
    CHECK(r10.p_b_used == 0.8);
}

TEST_CASE("less frequent testing lowers the rate") {
    DireConfig cfg;
    cfg.n = 1e8;
    double prev = 1.0;
    for (double gamma : {1.0, 0.1, 0.01, 0.001}) {
        cfg.gamma = gamma;
        const double r = dire_rate(cfg).rate;
        CHECK(r < prev);
        prev = r;
    }
}

TEST_CASE("log-spaced rounds") {
    const std::vector<double> ns = log_spaced_rounds(1e5, 1e10, 6);
    REQUIRE(ns.size() == 6);
    for (int i = 0; i < 6; ++i) CHECK(ns[i] == std::pow(10.0, 5 + i));
    const std::vector<double> two = log_spaced_rounds(10.0, 1000.0, 2);
    CHECK(two == std::vector<double>{10.0, 1000.0});
    CHECK_THROWS_AS(log_spaced_rounds(10.0, 1000.0, 1), Error);
    CHECK_THROWS_AS(log_spaced_rounds(100.0, 10.0, 5), Error);
}

TEST_CASE("rate curve is deterministic and ordered in n") {
    RateCurveConfig cfg;
    cfg.points = 8;
    const std::vector<RatePoint> a = rate_curve(cfg), b = rate_curve(cfg);
    REQUIRE(a.size() == 8);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].rate == b[i].rate);
        if (i > 0) CHECK(a[i].rate > a[i - 1].rate);
    }
}

TEST_CASE("tuning the tangent point never hurts") {
    DireConfig cfg;
    cfg.n = 1e6;
    cfg.gamma = 0.1;
    const RatePoint fixed = dire_rate(cfg);
    const RatePoint tuned = optimize_tangent_point(cfg);
    CHECK(tuned.rate >= fixed.rate);
    CHECK(tuned.p_b_used > 0.75);
    CHECK(tuned.p_b_used <= 0.8);
}

TEST_CASE("configuration validation") {
    DireConfig cfg;
    cfg.e = 0.7;
    CHECK_THROWS_AS(dire_rate(cfg), Error);
    cfg = DireConfig{};
    cfg.gamma = 0.0;
    try {
        dire_rate(cfg);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::GammaOutOfRange);
    }
    cfg = DireConfig{};
    cfg.p_b = 0.9;
    CHECK_THROWS_AS(dire_rate(cfg), Error);
    cfg = DireConfig{};
    cfg.n = 0.0;
    CHECK_THROWS_AS(dire_rate(cfg), Error);
}

TEST_CASE("Bernoulli variance curve grid") {
    const auto rows = bernoulli_variance_curve(4);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].first == 0.25);
    CHECK(rows[1].second == 0.0);
    CHECK(rows[0].second == doctest::Approx(rows[2].second));
    CHECK_THROWS_AS(bernoulli_variance_curve(1), Error);
}
