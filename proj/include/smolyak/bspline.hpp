#pragma once

#include <cmath>
#include <cstdint>

namespace smolyak {

// Orders above this are rejected; the schemes in use need at most 6.
inline constexpr int kMaxSplineOrder = 16;

// Reduce into [0, 1). Guards against floor() rounding x - floor(x) up to 1.
inline double wrap_unit(double x) {
    double y = x - std::floor(x);
    return y >= 1.0 ? 0.0 : y;
}

// Cardinal B-spline M_l supported on [0, l]; exactly 0 for x <= 0 or x >= l.
double cardinal_bspline(int order, double x);

// Number of shifts at a level: 2r 2^k for splines, 2^(k-1) (1 at k = 0) for hats.
std::int64_t spline_shift_count(int r, int level);
std::int64_t faber_shift_count(int level);

// N_{k,s}(x) = M_{2r}(n x - s) periodized, n = 2r 2^k.
double periodic_bspline(int r, int level, std::int64_t shift, double x);

// Periodic Faber hat. Level 0 is the constant 1; for k >= 1 the hat is
// M_2(2^k x - 2s) periodized, supported on [2s, 2s + 2] / 2^k.
double faber_hat(int level, std::int64_t shift, double x);

}  // namespace smolyak
