#include "smolyak/bspline.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace smolyak;

namespace {

// Composite Simpson over [a, b]; exact enough for piecewise polynomials when
// the panel count is a multiple of the knot count.
template <class F>
double simpson(F f, double a, double b, int panels) {
    const double h = (b - a) / panels;
    double s = f(a) + f(b);
    for (int i = 1; i < panels; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

// Cox-de Boor recursion as an independent oracle.
double cox_de_boor(int order, double x) {
    if (order == 1) return (x >= 0.0 && x < 1.0) ? 1.0 : 0.0;
    return (x * cox_de_boor(order - 1, x) + (order - x) * cox_de_boor(order - 1, x - 1.0)) / (order - 1);
}

}  // namespace

TEST_SUITE("bspline") {
TEST_CASE("hat values") {
    CHECK(cardinal_bspline(2, 1.0) == 1.0);
    CHECK(cardinal_bspline(2, 0.5) == 0.5);
    CHECK(cardinal_bspline(2, 0.0) == 0.0);
    CHECK(cardinal_bspline(2, 2.0) == 0.0);
    CHECK(cardinal_bspline(4, 2.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(cardinal_bspline(4, 1.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("support is closed off exactly") {
    for (int order : {2, 4, 6}) {
        CHECK(cardinal_bspline(order, -1e-300) == 0.0);
        CHECK(cardinal_bspline(order, 0.0) == 0.0);
        CHECK(cardinal_bspline(order, double(order)) == 0.0);
        CHECK(cardinal_bspline(order, order + 0.5) == 0.0);
    }
    CHECK_THROWS(cardinal_bspline(kMaxSplineOrder + 1, 0.5));
}

TEST_CASE("unit integral") {
    for (int order : {2, 4, 6}) {
        double v = simpson([&](double x) { return cardinal_bspline(order, x); }, 0.0, order, order * 2000);
        CHECK(v == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("matches Cox-de Boor recursion") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-0.5, 6.5);
    for (int i = 0; i < 2000; ++i) {
        double x = u(rng);
        for (int order : {2, 3, 4, 5, 6})
            CHECK(cardinal_bspline(order, x) == doctest::Approx(cox_de_boor(order, x)).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("integer shifts form a partition of unity") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        double x = u(rng);
        for (int order : {2, 4, 6}) {
            double s = 0.0;
            for (int j = -order; j <= order; ++j) s += cardinal_bspline(order, x - j);
            CHECK(s == doctest::Approx(1.0).epsilon(1e-13));
        }
    }
}

TEST_CASE("periodic splines") {
    CHECK(periodic_bspline(1, 0, 0, 0.25) == doctest::Approx(0.5));
    CHECK(spline_shift_count(1, 0) == 2);
    CHECK(spline_shift_count(2, 3) == 32);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        double x = u(rng);
        CHECK(periodic_bspline(2, 2, 5, x + 1.0) == doctest::Approx(periodic_bspline(2, 2, 5, x)).epsilon(1e-15));
        CHECK(periodic_bspline(3, 1, 11, x - 1.0) == doctest::Approx(periodic_bspline(3, 1, 11, x)).epsilon(1e-15));
    }
    for (int r : {1, 2, 3})
        for (int k : {0, 1, 3}) {
            const double n = 2.0 * r * std::ldexp(1.0, k);
            double v = simpson([&](double x) { return periodic_bspline(r, k, 1, x); }, 0.0, 1.0, int(n) * 600);
            CHECK(v == doctest::Approx(1.0 / n).epsilon(1e-10));
        }
}

TEST_CASE("periodic spline sum is one") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        double x = u(rng), s = 0.0;
        for (std::int64_t j = 0; j < spline_shift_count(2, 2); ++j) s += periodic_bspline(2, 2, j, x);
        CHECK(s == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("Faber hats") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 50; ++i) CHECK(faber_hat(0, 0, u(rng)) == 1.0);
    // level 1 hat sits on [0, 1] with its peak at 1/2
    CHECK(faber_hat(1, 0, 0.5) == 1.0);
    CHECK(faber_hat(1, 0, 0.25) == 0.5);
    CHECK(faber_hat(1, 0, 0.0) == 0.0);
    CHECK(faber_hat(2, 1, 0.75) == 1.0);
    CHECK(faber_hat(2, 1, 0.5) == 0.0);
    CHECK(faber_hat(2, 1, 0.25) == 0.0);
    CHECK(faber_shift_count(0) == 1);
    CHECK(faber_shift_count(1) == 1);
    CHECK(faber_shift_count(4) == 8);
    for (int k = 1; k <= 6; ++k) {
        double v = simpson([&](double x) { return faber_hat(k, 0, x); }, 0.0, 1.0, 1 << 12);
        CHECK(v == doctest::Approx(std::ldexp(1.0, -k)).epsilon(1e-12));
    }
    // hats of one level have disjoint interiors and sum into [0, 1]
    for (int i = 0; i < 500; ++i) {
        double x = u(rng);
        for (int k = 1; k <= 5; ++k) {
            double s = 0.0;
            for (std::int64_t j = 0; j < faber_shift_count(k); ++j) s += faber_hat(k, j, x);
            CHECK(s >= 0.0);
            CHECK(s <= 1.0 + 1e-15);
        }
    }
    CHECK(wrap_unit(-1e-18) < 1.0);
    CHECK(wrap_unit(3.25) == 0.25);
}
}
