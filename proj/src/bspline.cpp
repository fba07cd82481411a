#include "smolyak/bspline.hpp"

#include "smolyak/rational.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace smolyak {

namespace {

// pieces[j][i]: coefficient of t^i of M_l on [j, j+1], with t = x - j.
struct PieceTable {
    std::array<std::vector<std::vector<double>>, kMaxSplineOrder + 1> pieces;

    PieceTable() {
        // Truncated-power form M_l(x) = 1/(l-1)! sum_i (-1)^i C(l,i) (x-i)_+^(l-1),
        // expanded exactly around each knot.
        for (int l = 1; l <= kMaxSplineOrder; ++l) {
            Rational fact = 1;
            for (int i = 2; i < l; ++i) fact *= i;
            auto& table = pieces[l];
            table.resize(l);
            for (int j = 0; j < l; ++j) {
                std::vector<Rational> coef(l, Rational(0));
                for (int i = 0; i <= j; ++i) {
                    Rational c(binomial(l, i));
                    if (i % 2) c = -c;
                    // (t + j - i)^(l-1) = sum_q C(l-1,q) t^q (j-i)^(l-1-q)
                    for (int q = 0; q < l; ++q) {
                        Rational pw = 1;
                        for (int e = 0; e < l - 1 - q; ++e) pw *= (j - i);
                        coef[q] += c * Rational(binomial(l - 1, q)) * pw;
                    }
                }
                table[j].resize(l);
                for (int q = 0; q < l; ++q) table[j][q] = to_double(coef[q] / fact);
            }
        }
    }
};

const PieceTable& piece_table() {
    static const PieceTable table;
    return table;
}

}  // namespace

double cardinal_bspline(int order, double x) {
    if (order < 1 || order > kMaxSplineOrder)
        throw std::out_of_range("B-spline order " + std::to_string(order) + " unsupported");
    if (!(x > 0.0) || !(x < order)) return 0.0;
    int j = static_cast<int>(std::floor(x));
    if (j >= order) j = order - 1;
    const auto& c = piece_table().pieces[order][j];
    double t = x - j;
    double v = 0.0;
    for (int q = order - 1; q >= 0; --q) v = v * t + c[q];
    return v;
}

std::int64_t spline_shift_count(int r, int level) {
    if (r < 1 || level < 0 || level > 60) throw std::out_of_range("invalid spline level");
    return std::int64_t(2 * r) << level;
}

std::int64_t faber_shift_count(int level) {
    if (level < 0 || level > 60) throw std::out_of_range("invalid Faber level");
    return level == 0 ? 1 : std::int64_t(1) << (level - 1);
}

double periodic_bspline(int r, int level, std::int64_t shift, double x) {
    const std::int64_t n = spline_shift_count(r, level);
    if (shift < 0 || shift >= n) throw std::out_of_range("B-spline shift out of range");
    // y = n x - s reduced to [0, n); support [0, 2r] never wraps twice.
    double y = static_cast<double>(n) * wrap_unit(x) - static_cast<double>(shift);
    if (y < 0.0) y += static_cast<double>(n);
    return cardinal_bspline(2 * r, y);
}

double faber_hat(int level, std::int64_t shift, double x) {
    const std::int64_t n = faber_shift_count(level);
    if (shift < 0 || shift >= n) throw std::out_of_range("Faber shift out of range");
    if (level == 0) return 1.0;
    double y = std::ldexp(wrap_unit(x), level) - 2.0 * static_cast<double>(shift);
    if (y < 0.0) y += std::ldexp(1.0, level);
    return cardinal_bspline(2, y);
}

}  // namespace smolyak
