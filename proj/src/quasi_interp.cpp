#include "smolyak/quasi_interp.hpp"

#include "smolyak/bspline.hpp"
#include "smolyak/faber.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace smolyak {

QIScheme QIScheme::build(int r, std::vector<Rational> lambda_full) {
    if (r < 1 || 2 * r > kMaxSplineOrder) throw SchemeError("spline half-order r out of range");
    if (lambda_full.size() % 2 == 0) throw SchemeError("lambda must have odd length 2 mu + 1");
    const int mu = static_cast<int>(lambda_full.size() / 2);
    for (int j = 1; j <= mu; ++j)
        if (lambda_full[mu + j] != lambda_full[mu - j]) throw SchemeError("lambda is not an even sequence");
    if (mu < r - 1) throw SchemeError("lambda support mu must be at least r - 1");

    QIScheme q;
    q.r_ = r;
    q.mu_ = mu;
    q.lambda_ = std::move(lambda_full);

    std::map<int, Rational> t;
    for (int j = -mu; j <= mu; ++j) t[r + j] = q.lambda_[mu + j];
    q.p_lambda_ = LaurentPoly(std::move(t));
    if (eval(q.p_lambda_, Rational(1)) != 1) throw SchemeError("lambda does not reproduce constants (P_Lambda(1) != 1)");

    std::map<int, Rational> even_sum, odd_sum;
    for (int j = 0; j <= r; ++j) even_sum[-2 * j] = Rational(binomial(2 * r, 2 * j));
    for (int j = 0; j < r; ++j) odd_sum[-2 * j - 1] = Rational(binomial(2 * r, 2 * j + 1));
    const Rational scale = pow2(1 - 2 * r);
    const LaurentPoly squared = substitute_square(q.p_lambda_);
    q.p_even_prime_ = scale * (squared * LaurentPoly(std::move(even_sum)));
    q.p_odd_prime_ = scale * (squared * LaurentPoly(std::move(odd_sum)));
    q.p_even_ = q.p_lambda_ - q.p_even_prime_;
    q.p_odd_ = q.p_lambda_ - q.p_odd_prime_;

    const LaurentPoly d2r = LaurentPoly::difference(2 * r);
    Division even = divide_exact(q.p_even_, d2r);
    Division odd = divide_exact(q.p_odd_, d2r);
    if (!even.remainder.is_zero() || !odd.remainder.is_zero())
        throw SchemeError("not a quasi-interpolation scheme: (z-1)^" + std::to_string(2 * r) +
                          " does not divide the even/odd symbols");
    q.p_even_star_ = std::move(even.quotient);
    q.p_odd_star_ = std::move(odd.quotient);
    return q;
}

QIScheme QIScheme::from_half(int r, const std::vector<Rational>& half) {
    if (half.empty()) throw SchemeError("lambda must not be empty");
    const int mu = static_cast<int>(half.size()) - 1;
    std::vector<Rational> full(2 * mu + 1);
    for (int j = 0; j <= mu; ++j) full[mu + j] = full[mu - j] = half[j];
    return build(r, std::move(full));
}

QIScheme QIScheme::from_symbol(int r, const LaurentPoly& p_lambda) {
    if (p_lambda.is_zero()) throw SchemeError("zero symbol");
    const int lo = p_lambda.min_exponent() - r, hi = p_lambda.max_exponent() - r;
    const int mu = std::max(-lo, hi);
    std::vector<Rational> full(2 * mu + 1);
    for (int j = -mu; j <= mu; ++j) full[mu + j] = p_lambda.coefficient(r + j);
    return build(r, std::move(full));
}

QIScheme QIScheme::builtin(std::string_view name) {
    if (name == "linear") return from_half(1, {Rational(1)});
    if (name == "cubic") return from_half(2, {Rational(8, 6), Rational(-1, 6)});
    if (name == "quintic")
        return from_half(3, {Rational(25150, 14400), Rational(-5876, 14400), Rational(448, 14400),
                             Rational(52, 14400), Rational(1, 14400)});
    throw SchemeError("unknown built-in scheme '" + std::string(name) + "'");
}

Rational QIScheme::lambda(int j) const {
    if (j < -mu_ || j > mu_) return 0;
    return lambda_[mu_ + j];
}

std::vector<Rational> QIScheme::lambda_half() const {
    return std::vector<Rational>(lambda_.begin() + mu_, lambda_.end());
}

Rational QIScheme::star_norm() const { return std::max(l1_norm(p_even_star_), l1_norm(p_odd_star_)); }

LaurentPoly QIScheme::component_symbol(int level, std::int64_t shift) const {
    if (level == 0) return p_lambda_;
    return LaurentPoly::difference(2 * r_) * (shift % 2 == 0 ? p_even_star_ : p_odd_star_);
}

LebesgueEstimate lebesgue_constant(const QIScheme& scheme, std::size_t grid_points) {
    LebesgueEstimate est;
    const int r = scheme.r(), mu = scheme.mu();
    bool nonnegative = true;
    for (int j = -mu; j <= mu; ++j)
        if (scheme.lambda(j) < 0) nonnegative = false;
    if (nonnegative) {
        // sum_s M(x - s) = 1, so the sum is identically sum lambda
        double total = 0.0;
        for (int j = -mu; j <= mu; ++j) total += to_double(scheme.lambda(j));
        est.lower = est.upper = total;
        est.exact = true;
        return est;
    }
    if (grid_points == 0) throw std::invalid_argument("grid_points must be positive");

    std::vector<double> lam(2 * mu + 1);
    for (int j = -mu; j <= mu; ++j) lam[mu + j] = to_double(scheme.lambda(j));
    // v[t] = M(x + t), t = 0..2r-1; fundamental value at x - s is sum_j lambda_j v[-j-s]
    std::vector<double> v(2 * r);
    double best = 0.0;
    for (std::size_t i = 0; i < grid_points; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(grid_points);
        for (int t = 0; t < 2 * r; ++t) v[t] = cardinal_bspline(2 * r, x + t);
        double sum = 0.0;
        for (int s = -2 * r - mu; s <= mu + 1; ++s) {
            double l = 0.0;
            for (int j = -mu; j <= mu; ++j) {
                int t = -j - s;
                if (t >= 0 && t < 2 * r) l += lam[mu + j] * v[t];
            }
            sum += std::fabs(l);
        }
        best = std::max(best, sum);
    }
    // Lipschitz constant at most 2 ||Lambda||; every x is within 1/(2N) of a node.
    est.lower = best;
    est.upper = best + to_double(scheme.lambda_norm()) / static_cast<double>(grid_points);
    return est;
}

SchemeConstants scheme_constants(const QIScheme& scheme, double alpha, double p) {
    if (!(alpha > 0.0) || alpha > 2.0 * scheme.r()) throw std::invalid_argument("alpha must lie in (0, 2r]");
    if (!(p >= 1.0)) throw std::invalid_argument("p must be at least 1");
    SchemeConstants c;
    const double r = scheme.r();
    const double p_factor = std::isinf(p) ? 1.0 : std::pow(r * (p + 1.0), -1.0 / p);
    c.a = std::pow(2.0 * r, -alpha) * p_factor * to_double(scheme.star_norm());
    const LebesgueEstimate b = lebesgue_constant(scheme);
    c.b = b.upper;
    c.b_lower = b.lower;
    c.b_crude = to_double(scheme.lambda_norm());
    return c;
}

namespace {

std::vector<std::pair<int, Rational>> pattern_of(const LaurentPoly& p) {
    std::vector<std::pair<int, Rational>> out;
    for (const auto& [e, c] : p.terms()) out.emplace_back(e, c);
    return out;
}

}  // namespace

LevelOperatorFamily qi_operator_family(const QIScheme& scheme) {
    return LevelOperatorFamily(UnivariateBasis::spline(scheme.r()), [scheme](int level) {
        LevelOperator op;
        op.lattice_size = op.coefficient_count = spline_shift_count(scheme.r(), level);
        op.patterns = {pattern_of(scheme.p_lambda())};
        return op;
    });
}

LevelOperatorFamily qi_component_family(const QIScheme& scheme) {
    return LevelOperatorFamily(UnivariateBasis::spline(scheme.r()), [scheme](int level) {
        LevelOperator op;
        op.lattice_size = op.coefficient_count = spline_shift_count(scheme.r(), level);
        if (level == 0)
            op.patterns = {pattern_of(scheme.component_symbol(0, 0))};
        else
            op.patterns = {pattern_of(scheme.component_symbol(level, 0)), pattern_of(scheme.component_symbol(level, 1))};
        return op;
    });
}

QIExpansion qi_operator(const QIScheme& scheme, const Evaluator& f, const MultiIndex& k) {
    return recover_on_levels(qi_operator_family(scheme), f, static_cast<int>(k.dim()), {k}, false);
}

QIExpansion qi_component_coefficients(const QIScheme& scheme, const Evaluator& f, const MultiIndex& k) {
    return recover_on_levels(qi_component_family(scheme), f, static_cast<int>(k.dim()), {k}, false);
}

QIExpansion recover_qi(const QIScheme& scheme, const Evaluator& f, int d, int m, int nu) {
    validate_grid_parameters(d, m, GridVariant::support_bounded(nu));
    return recover_on_levels(qi_component_family(scheme), f, d, support_bounded_levels(d, m, nu), false);
}

std::vector<MultiIndex> linear_qi_faber_levels(int d, int m, int nu) {
    std::set<MultiIndex> out;
    for (const auto& k : support_bounded_levels(d, m, nu)) {
        std::vector<int> zeros;
        std::vector<int> base(d);
        for (int j = 0; j < d; ++j) {
            if (k[j] == 0) zeros.push_back(j);
            else base[j] = k[j] + 1;
        }
        // each zero coordinate takes Faber level 0 or 1
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << zeros.size()); ++mask) {
            std::vector<int> f = base;
            for (std::size_t i = 0; i < zeros.size(); ++i) f[zeros[i]] = static_cast<int>((mask >> i) & 1);
            out.insert(MultiIndex(std::move(f)));
        }
    }
    return {out.begin(), out.end()};
}

DecayCheck coefficient_decay_check(const QIScheme& scheme, const Evaluator& f, double seminorm_bound,
                                   const MultiIndex& k, double p, double alpha) {
    const SchemeConstants c = scheme_constants(scheme, alpha, p);
    const QIExpansion q = qi_component_coefficients(scheme, f, k);
    ErrorMeasure measure;
    for (std::size_t j = 0; j < k.dim(); ++j) measure.axis_cells.push_back(spline_shift_count(scheme.r(), k[j]));
    measure.gauss_points = 2 * scheme.r() + 1;
    DecayCheck out;
    out.measured = lp_norm(q, p, measure);
    const int u = k.support_size();
    const int d = static_cast<int>(k.dim());
    out.bound = std::pow(c.a, u) * std::pow(c.b, d - u) * std::pow(2.0, -alpha * k.l1()) * seminorm_bound;
    out.pass = out.measured <= out.bound;
    return out;
}

}  // namespace smolyak
