#include "smolyak/bounds.hpp"
#include "smolyak/bspline.hpp"
#include "smolyak/faber.hpp"
#include "smolyak/witness.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace smolyak;

namespace {

double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
    const double h = (b - a) / panels;
    double s = f(a) + f(b);
    for (int i = 1; i < panels; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

}  // namespace

TEST_SUITE("witness") {
TEST_CASE("bump shape") {
    for (int k = 0; k <= 5; ++k)
        for (std::int64_t s : {std::int64_t(0), (std::int64_t(1) << k) - 1}) {
            const double h = std::ldexp(1.0, -k);
            CHECK(bump(k, s, s * h) == 0.0);
            CHECK(bump(k, s, (s + 0.5) * h) == doctest::Approx(cardinal_bspline(4, 2.0)).epsilon(1e-15));
            CHECK(bump(k, s, (s + 0.5) * h) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
            // zero outside [s, s+1] h
            if (k > 0) CHECK(bump(k, s, wrap_unit((s + 1.25) * h)) == 0.0);
            double integral = simpson([&](double x) { return bump(k, s, x); }, s * h, (s + 1) * h, 4096);
            CHECK(integral == doctest::Approx(std::ldexp(1.0, -k - 2)).epsilon(1e-12));
            CHECK(bump_exact(k, s, Rational(2 * s + 1, 2) * pow2(-k)) == Rational(2, 3));
        }
    CHECK_THROWS(bump(2, 4, 0.1));
}

TEST_CASE("config validation") {
    CHECK_THROWS(WitnessConfig::make(2, 0, 2.0, GridVariant::interior()).validate());
    CHECK_THROWS(WitnessConfig::make(2, 3, 2.5, GridVariant::interior()).validate());
    CHECK_THROWS(WitnessConfig::make(2, 3, 2.0, GridVariant::full()).validate());
    CHECK_THROWS(WitnessConfig::make(2, 3, 2.0, GridVariant::support_bounded(3)).validate());
    WitnessConfig c = WitnessConfig::make(3, 4, 1.0, GridVariant::support_bounded(2));
    CHECK(c.n == 44);
    CHECK(c.active() == 2);
    CHECK(WitnessConfig::make(3, 4, 1.0, GridVariant::interior()).active() == 3);
}

TEST_CASE("closed-form L1 norm") {
    WitnessConfig c = WitnessConfig::make(1, 2, 2.0, GridVariant::interior(), 3);
    FoolingFunction f = fooling_function(c);
    const Rational expect = pow2(-7) * (pow2(-4) + pow2(-6));
    REQUIRE(f.exact_l1.has_value());
    CHECK(*f.exact_l1 == expect);
    CHECK(f.l1 == doctest::Approx(to_double(expect)).epsilon(1e-15));
    CHECK(witness_l1(c, 3) == doctest::Approx(to_double(expect)).epsilon(1e-15));
    CHECK_FALSE(fooling_function(WitnessConfig::make(1, 2, 1.5, GridVariant::interior(), 3)).exact_l1.has_value());
    // nonnegative, so the integral is the L1 norm
    double q = simpson([&](double x) { std::vector<double> v{x}; return f.evaluate(v); }, 0.0, 1.0, 1 << 12);
    CHECK(q == doctest::Approx(f.l1).epsilon(1e-12));
}

TEST_CASE("support-bounded L1 norm against a direct sum") {
    WitnessConfig c = WitnessConfig::make(3, 3, 2.0, GridVariant::support_bounded(2), 6);
    double expect = 0.0;
    for (int s = 1; s <= 2; ++s) {
        double t = 0.0;
        for (int l = 3; l <= 6; ++l) t += std::exp2(-2.0 * l) * to_double(binomial(l - 1, s - 1));
        expect += to_double(binomial(2, s)) * std::exp2(-7.0 * s) * t;
    }
    CHECK(fooling_function(c).l1 == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("vanishes on the interior grid") {
    for (int d = 1; d <= 3; ++d)
        for (int m = d; m <= 6; ++m) {
            WitnessConfig c = WitnessConfig::make(d, m, 2.0, GridVariant::interior());
            FoolingFunction f = fooling_function(c);
            for (const auto& p : enumerate_grid(d, m, GridVariant::interior())) {
                CHECK(vanishes_exactly(c, p.coordinates));
                std::vector<double> x;
                for (const auto& v : p.coordinates) x.push_back(v.value());
                CHECK(f.evaluate(x) == 0.0);
            }
        }
    WitnessConfig c = WitnessConfig::make(2, 3, 2.0, GridVariant::interior());
    CHECK_FALSE(vanishes_exactly(c, {Dyadic::make(1, 4), Dyadic::make(1, 4)}));
}

TEST_CASE("support-bounded witness vanishes on the support-bounded grid") {
    WitnessConfig c = WitnessConfig::make(3, 4, 2.0, GridVariant::support_bounded(1));
    FoolingFunction f = fooling_function(c);
    for (const auto& p : enumerate_grid(3, 4, GridVariant::support_bounded(1))) {
        CHECK(vanishes_exactly(c, p.coordinates));
        std::vector<double> x;
        for (const auto& v : p.coordinates) x.push_back(v.value());
        CHECK(f.evaluate(x) == 0.0);
    }
    // does not depend on the trailing coordinates
    std::vector<double> a{0.3, 0.1, 0.7}, b{0.3, 0.9, 0.2};
    CHECK(f.evaluate(a) == f.evaluate(b));
}

TEST_CASE("recovery sees nothing") {
    WitnessConfig c = WitnessConfig::make(2, 5, 2.0, GridVariant::interior());
    FoolingFunction f = fooling_function(c);
    FaberExpansion r = recover_interior(f.evaluate, 2, 5);
    for (const auto& b : r.blocks())
        for (double v : b.coefficients) CHECK(v == 0.0);
}

TEST_CASE("nonnegativity") {
    FoolingFunction f = fooling_function(WitnessConfig::make(2, 4, 1.5, GridVariant::interior()));
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        std::vector<double> x{u(rng), u(rng)};
        CHECK(f.evaluate(x) >= 0.0);
    }
}

TEST_CASE("Hoelder spot check") {
    FoolingFunction f = fooling_function(WitnessConfig::make(2, 3, 1.5, GridVariant::interior()));
    HolderReport ok = holder_membership_spotcheck(f.evaluate, 2, 1.5, 10000);
    CHECK(ok.pass);
    CHECK(ok.trials == 10000);
    Evaluator zero = [](std::span<const double>) { return 0.0; };
    CHECK(holder_membership_spotcheck(zero, 3, 2.0, 1000).pass);
    // a large multiple leaves the unit ball
    FoolingFunction g = fooling_function(WitnessConfig::make(2, 3, 2.0, GridVariant::interior()));
    Evaluator big = [&](std::span<const double> x) { return 1e4 * g.evaluate(x); };
    HolderReport bad = holder_membership_spotcheck(big, 2, 2.0, 10000);
    CHECK_FALSE(bad.pass);
    CHECK(bad.failures > 0);
    CHECK(bad.max_ratio > 1.0);
}

TEST_CASE("lower bound demonstration") {
    LowerBoundDemonstration d = lower_bound_demonstration(WitnessConfig::make(2, 6, 2.0, GridVariant::interior()), 1.0);
    const double lower = std::exp2(-14.0) * beta(2.0, 2, 6) * std::exp2(-12.0);
    CHECK(d.theorem_lower == doctest::Approx(lower));
    CHECK(d.certified_lower == doctest::Approx(lower));
    CHECK(d.partial_sum_ok);
    CHECK(d.limit_ok);
    CHECK(d.theorem_supported);
    CHECK(d.limit - d.witness_norm <= d.tail_bound * (1 + 1e-9));
    CHECK(d.limit - d.witness_norm >= -1e-15 * d.limit);
    // limit = 2^-14 sum_{l >= 6} (l-1) 4^-l
    double direct = 0.0;
    for (int l = 6; l < 200; ++l) direct += (l - 1) * std::exp2(-2.0 * l);
    CHECK(d.limit == doctest::Approx(std::exp2(-14.0) * direct).epsilon(1e-12));

    LowerBoundDemonstration s = lower_bound_demonstration(WitnessConfig::make(3, 4, 2.0, GridVariant::support_bounded(1)), 2.0);
    CHECK(s.theorem_lower == doctest::Approx(gamma_prime(2.0, 1, 4) * std::exp2(-8.0)));
    CHECK(s.partial_sum_ok);
    CHECK(s.limit_ok);
    // the l = 0 term in the stated constant is not carried by the construction
    CHECK_FALSE(s.theorem_supported);

    LowerBoundDemonstration minimal = lower_bound_demonstration(WitnessConfig::make(2, 2, 1.0, GridVariant::interior()), 1.0);
    CHECK(std::isfinite(minimal.theorem_lower));
    CHECK(minimal.partial_sum_ok);
    CHECK_THROWS(lower_bound_demonstration(WitnessConfig::make(3, 2, 2.0, GridVariant::interior()), 1.0));
    CHECK_THROWS(lower_bound_demonstration(WitnessConfig::make(2, 3, 2.0, GridVariant::interior()), 0.5));
}
}
