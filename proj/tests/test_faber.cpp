#include "smolyak/bounds.hpp"
#include "smolyak/bspline.hpp"
#include "smolyak/faber.hpp"
#include "smolyak/recovery.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace smolyak;

namespace {

Evaluator tensor_hat(std::vector<int> k, std::vector<std::int64_t> s, double scale = 1.0) {
    return [=](std::span<const double> x) {
        double v = scale;
        for (std::size_t j = 0; j < x.size(); ++j) v *= faber_hat(k[j], s[j], x[j]);
        return v;
    };
}

Evaluator smooth(int d) {
    return [d](std::span<const double> x) {
        double v = 1.0;
        for (int j = 0; j < d; ++j) v *= 1.3 + std::sin(2.0 * M_PI * x[j] + 0.4 * j);
        return v;
    };
}

std::vector<double> random_point(std::mt19937_64& rng, int d) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> x(d);
    for (auto& v : x) v = u(rng);
    return x;
}

}  // namespace

TEST_SUITE("faber") {
TEST_CASE("univariate functionals") {
    auto f = [](std::span<const double> x) { return std::cos(3.0 * x[0]) + x[0] * x[0]; };
    std::vector<std::int64_t> s0{0};
    CHECK(lambda_functional(f, MultiIndex({0}), s0) == doctest::Approx(1.0));
    for (int k = 1; k <= 4; ++k)
        for (std::int64_t s = 0; s < faber_shift_count(k); ++s) {
            std::vector<std::int64_t> sv{s};
            CHECK(lambda_functional(tensor_hat({k}, {s}), MultiIndex({k}), sv) == doctest::Approx(1.0).epsilon(1e-15));
            // direct -1/2 second difference, last point wraps to 0
            const double h = std::ldexp(1.0, -k);
            auto g = [&](double t) { double y = wrap_unit(t); return std::cos(3.0 * y) + y * y; };
            double direct = -0.5 * (g(2 * s * h) - 2 * g((2 * s + 1) * h) + g((2 * s + 2) * h));
            CHECK(lambda_functional(f, MultiIndex({k}), sv) == doctest::Approx(direct).epsilon(1e-14));
        }
    LevelOperator op = faber_level_operator(3);
    CHECK(op.lattice_size == 8);
    CHECK(op.coefficient_count == 4);
    auto row = op.row(3);
    REQUIRE(row.size() == 3);
    CHECK(row[0].first == 6);
    CHECK(row[1].second == 1);
    CHECK(row[2].first == 0);
    std::vector<std::int64_t> bad{4};
    CHECK_THROWS(lambda_functional(f, MultiIndex({3}), bad));
}

TEST_CASE("constants are annihilated above level zero") {
    auto c = [](std::span<const double>) { return 2.5; };
    FaberExpansion q = faber_component(c, MultiIndex({2, 0}));
    for (double v : q.blocks().front().coefficients) CHECK(v == 0.0);
    FaberExpansion q0 = faber_component(c, MultiIndex({0, 0}));
    REQUIRE(q0.term_count() == 1);
    CHECK(q0.blocks().front().coefficients[0] == 2.5);
}

TEST_CASE("biorthogonality") {
    for (std::vector<int> k : {std::vector<int>{1, 2}, {3, 1}, {0, 2}, {2, 2}}) {
        std::vector<std::int64_t> s{faber_shift_count(k[0]) - 1, 0};
        auto f = tensor_hat(k, s);
        MultiIndex mk(k);
        FaberExpansion q = faber_component(f, mk);
        for (int a = 0; a < faber_shift_count(k[0]); ++a)
            for (int b = 0; b < faber_shift_count(k[1]); ++b) {
                std::vector<std::int64_t> sv{a, b};
                double expect = (a == s[0] && b == s[1]) ? 1.0 : 0.0;
                CHECK(q.coefficient(mk, sv) == doctest::Approx(expect).scale(1.0).epsilon(1e-15));
            }
        // other levels see nothing of a single hat
        MultiIndex other({k[0] + 1, k[1]});
        for (double v : faber_component(f, other).blocks().front().coefficients) CHECK(std::fabs(v) < 1e-15);
    }
}

TEST_CASE("coefficient decay on a smooth function") {
    // |lambda| <= 2^-|u| 2^(-2|k|) |f|, with |f|_u bounded by (2 pi)^2 per active axis and
    // 2.3 per passive axis (sup of the factor)
    Evaluator f = smooth(2);
    for (int k1 = 0; k1 <= 5; ++k1)
        for (int k2 = 0; k2 <= 5; ++k2) {
            MultiIndex k({k1, k2});
            double B = 1.0;
            for (int kj : {k1, k2}) B *= kj ? 4.0 * M_PI * M_PI : 2.3;
            FaberExpansion q = faber_component(f, k);
            for (double c : q.blocks().front().coefficients)
                CHECK(std::fabs(c) <= std::pow(2.0, -k.support_size()) * std::exp2(-2.0 * k.l1()) * B * (1 + 1e-12));
            for (double p : {1.0, 2.0, kInfinity})
                CHECK(faber_component_norm(q, p) <= faber_level_bound(k, p, 2.0, B) * (1 + 1e-12));
        }
}

TEST_CASE("component norm closed form against quadrature") {
    Evaluator f = smooth(2);
    MultiIndex k({2, 1});
    FaberExpansion q = faber_component(f, k);
    ErrorMeasure fine = ErrorMeasure::tensor(256, 4);
    for (double p : {1.0, 2.0, 3.0}) CHECK(faber_component_norm(q, p) == doctest::Approx(lp_norm(q, p, fine)).epsilon(1e-12));
    CHECK(faber_component_norm(q, kInfinity) == doctest::Approx(lp_norm(q, kInfinity, ErrorMeasure::tensor(8, 0))));
    CHECK(faber_level_bound(MultiIndex({0, 0}), 1.0, 2.0, 3.0) == 3.0);
    CHECK(faber_level_bound(MultiIndex({1, 0}), 1.0, 2.0, 1.0) == doctest::Approx(1.0 / 16.0));
}

TEST_CASE("level sets") {
    CHECK(interior_levels(2, 1).empty());
    CHECK(interior_levels(2, 3).size() == 3);
    CHECK(support_bounded_levels(3, 2, 1).size() == 1 + 3 + 3);
    // nu = d keeps every level of Z^2_+ with |k|_1 <= 3
    CHECK(support_bounded_levels(2, 3, 2).size() == 10);
    CHECK(cumulative_index_sets(2, 3, GridVariant::full()).size() == 3);
}

TEST_CASE("interior recovery") {
    CHECK(recover_interior(smooth(2), 2, 1).term_count() == 0);
    std::mt19937_64 rng(8);
    // a combination of retained interior hats is recovered exactly
    Evaluator f = [](std::span<const double> x) {
        return 0.7 * faber_hat(1, 0, x[0]) * faber_hat(2, 1, x[1]) - 1.1 * faber_hat(2, 0, x[0]) * faber_hat(1, 0, x[1]) +
               0.3 * faber_hat(1, 0, x[0]) * faber_hat(1, 0, x[1]);
    };
    FaberExpansion r = recover_interior(f, 2, 3);
    for (int i = 0; i < 1000; ++i) {
        auto x = random_point(rng, 2);
        CHECK(r.evaluate(x) == doctest::Approx(f(x)).scale(1.0).epsilon(1e-12));
    }
    // interior samples only
    for (const auto& pt : dyadic_samples(r.samples()))
        for (const auto& c : pt) CHECK(c.numerator != 0);
}

TEST_CASE("support-bounded recovery") {
    std::mt19937_64 rng(12);
    auto c = [](std::span<const double>) { return -4.25; };
    FaberExpansion rc = recover_support_bounded(c, 3, 4, 2);
    for (int i = 0; i < 200; ++i) CHECK(rc.evaluate(random_point(rng, 3)) == doctest::Approx(-4.25).epsilon(1e-14));

    Evaluator hat = tensor_hat({2, 0, 1}, {1, 0, 0}, 2.0);
    FaberExpansion rh = recover_support_bounded(hat, 3, 3, 2);
    for (int i = 0; i < 1000; ++i) {
        auto x = random_point(rng, 3);
        CHECK(rh.evaluate(x) == doctest::Approx(hat(x)).scale(1.0).epsilon(1e-12));
    }
}

TEST_CASE("full variant equals support-bounded with nu = d") {
    RecoveryConfig a;
    a.d = 2;
    a.m = 4;
    a.variant = GridVariant::full();
    RecoveryConfig b = a;
    b.variant = GridVariant::support_bounded(2);
    CHECK(a.levels() == b.levels());
    std::mt19937_64 rng(1);
    Expansion ea = recover(a, smooth(2)), eb = recover(b, smooth(2));
    for (int i = 0; i < 100; ++i) {
        auto x = random_point(rng, 2);
        CHECK(ea.evaluate(x) == eb.evaluate(x));
    }
}

TEST_CASE("interpolation at grid points") {
    std::mt19937_64 rng(21);
    Evaluator f = smooth(2);
    for (int m = 0; m <= 5; ++m) {
        FaberExpansion r = recover_support_bounded(f, 2, m, 2);
        for (const auto& p : enumerate_grid(2, m, GridVariant::full())) {
            std::vector<double> x{p.coordinates[0].value(), p.coordinates[1].value()};
            CHECK(r.evaluate(x) == doctest::Approx(f(x)).epsilon(1e-12));
        }
    }
}

TEST_CASE("expansion evaluation matches naive summation") {
    std::mt19937_64 rng(4);
    std::normal_distribution<double> g;
    Expansion e(UnivariateBasis::faber(), 2);
    for (auto k : {std::vector<int>{0, 0}, {1, 2}, {3, 0}, {2, 2}}) {
        MultiIndex mk(k);
        std::vector<double> c(faber_shift_count(k[0]) * faber_shift_count(k[1]));
        for (auto& v : c) v = g(rng);
        e.add_block(mk, c);
    }
    for (int i = 0; i < 300; ++i) {
        auto x = random_point(rng, 2);
        double naive = 0.0;
        for (const auto& b : e.blocks()) {
            const auto n1 = faber_shift_count(b.level[1]);
            for (std::size_t i2 = 0; i2 < b.coefficients.size(); ++i2)
                naive += b.coefficients[i2] * faber_hat(b.level[0], std::int64_t(i2) / n1, x[0]) *
                         faber_hat(b.level[1], std::int64_t(i2) % n1, x[1]);
        }
        CHECK(e.evaluate(x) == doctest::Approx(naive).scale(1.0).epsilon(1e-13));
    }
    Expansion empty(UnivariateBasis::faber(), 2);
    std::vector<double> x{0.3, 0.4};
    CHECK(empty.evaluate(x) == 0.0);
}

TEST_CASE("norms of a hat") {
    Evaluator hat = tensor_hat({1}, {0});
    Evaluator zero = [](std::span<const double>) { return 0.0; };
    Expansion none(UnivariateBasis::faber(), 1);
    CHECK(lp_norm(hat, 1, kInfinity, ErrorMeasure::tensor(64, 0)) == 1.0);
    CHECK(lp_norm(hat, 1, 1.0, ErrorMeasure::tensor(64, 2)) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(lp_error(hat, none, 2.0, ErrorMeasure::tensor(64, 3)) == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-13));
    CHECK(lp_error(zero, none, 1.0, ErrorMeasure::monte_carlo(1000, 1)) == 0.0);
}
}
