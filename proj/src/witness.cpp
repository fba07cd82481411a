#include "smolyak/witness.hpp"

#include "smolyak/bounds.hpp"
#include "smolyak/bspline.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace smolyak {

WitnessConfig WitnessConfig::make(int d, int m, double alpha, GridVariant variant, int n) {
    WitnessConfig c;
    c.d = d;
    c.m = m;
    c.n = n < 0 ? m + 40 : n;
    c.alpha = alpha;
    c.variant = variant;
    c.validate();
    return c;
}

void WitnessConfig::validate() const {
    if (d < 1) throw std::invalid_argument("witness needs d >= 1");
    if (m < 1 || n < m) throw std::invalid_argument("witness needs 1 <= m <= n");
    if (!(alpha > 0.0 && alpha <= 2.0)) throw std::invalid_argument("witness needs 0 < alpha <= 2");
    if (variant.kind == GridKind::full) throw std::invalid_argument("witness variant must be interior or nu");
    if (variant.kind == GridKind::support_bounded && (variant.nu < 1 || variant.nu > d))
        throw std::invalid_argument("witness nu outside [1, d]");
}

int WitnessConfig::active() const { return variant.kind == GridKind::interior ? d : variant.nu; }

namespace {

Rational cubic_spline_exact(const Rational& t) {
    const Rational sixth(1, 6);
    if (t <= 0 || t >= 4) return 0;
    if (t <= 1) return sixth * t * t * t;
    if (t <= 2) return sixth * (-3 * t * t * t + 12 * t * t - 12 * t + 4);
    if (t <= 3) return sixth * (3 * t * t * t - 24 * t * t + 60 * t - 44);
    Rational u = 4 - t;
    return sixth * u * u * u;
}

Rational frac_exact(const Rational& x) {
    BigInt q = numerator(x) / denominator(x);  // truncates toward zero
    Rational f = x - Rational(q);
    if (f < 0) f += 1;
    return f;
}

// g_k(x) = sum_s g_{k,s}(x): only s = floor(2^k x) can be nonzero.
double level_bump(int k, double x) { return cardinal_bspline(4, 4.0 * wrap_unit(std::ldexp(wrap_unit(x), k))); }

// Per-level univariate values G[k] = g_k(x) for k = 1..n (G[0] = 0).
void level_bumps(double x, int n, std::vector<double>& g) {
    g.assign(n + 1, 0.0);
    for (int k = 1; k <= n; ++k) g[k] = level_bump(k, x);
}

// Coefficient vector (degree <= n) of prod_j (c + w * P_j(z)) over the given coordinates.
void product(const std::vector<std::vector<double>>& factors, double constant, double scale, int n,
             std::vector<double>& out) {
    out.assign(n + 1, 0.0);
    out[0] = 1.0;
    std::vector<double> next(n + 1);
    for (const auto& p : factors) {
        std::fill(next.begin(), next.end(), 0.0);
        for (int a = 0; a <= n; ++a) {
            if (out[a] == 0.0) continue;
            next[a] += constant * out[a];
            for (int b = 1; a + b <= n; ++b) next[a + b] += scale * out[a] * p[b];
        }
        out.swap(next);
    }
}

double sum_binomial_tail(double alpha, long from, long to, long s) {
    double total = 0.0;
    for (long l = from; l <= to; ++l) total += std::pow(2.0, -alpha * l) * to_double(binomial(l - 1, s - 1));
    return total;
}

}  // namespace

double bump(int k, std::int64_t s, double x) {
    if (k < 0 || s < 0 || s >= (std::int64_t(1) << k)) throw std::out_of_range("bump shift outside 0..2^k-1");
    const double y = wrap_unit(x - std::ldexp(static_cast<double>(s), -k));
    return cardinal_bspline(4, std::ldexp(y, k + 2));
}

Rational bump_exact(int k, std::int64_t s, const Rational& x) {
    if (k < 0 || s < 0 || s >= (std::int64_t(1) << k)) throw std::out_of_range("bump shift outside 0..2^k-1");
    Rational y = frac_exact(x - Rational(s) * pow2(-k));
    return cubic_spline_exact(y * pow2(k + 2));
}

double witness_l1(const WitnessConfig& c, int n) {
    // per subset size s: 2^-7s sum_{l=m}^n 2^-alpha l C(l-1, s-1)
    if (c.variant.kind == GridKind::interior) return std::pow(2.0, -7.0 * c.d) * sum_binomial_tail(c.alpha, c.m, n, c.d);
    double total = 0.0;
    for (int s = 1; s <= c.variant.nu; ++s)
        total += to_double(binomial(c.variant.nu, s)) * std::pow(2.0, -7.0 * s) * sum_binomial_tail(c.alpha, c.m, n, s);
    return total;
}

FoolingFunction fooling_function(const WitnessConfig& config) {
    config.validate();
    FoolingFunction out;
    out.config = config;
    const WitnessConfig c = config;
    const bool interior = c.variant.kind == GridKind::interior;
    const int used = c.active();
    std::vector<double> level_weight(c.n + 1, 0.0);
    for (int l = c.m; l <= c.n; ++l) level_weight[l] = std::pow(2.0, -c.alpha * l);

    out.evaluate = [c, interior, used, level_weight](std::span<const double> x) {
        if (static_cast<int>(x.size()) != c.d) throw std::invalid_argument("witness point dimension mismatch");
        std::vector<std::vector<double>> factors(used);
        for (int j = 0; j < used; ++j) level_bumps(x[j], c.n, factors[j]);
        std::vector<double> poly;
        // interior: 2^-5d prod_j P_j; support-bounded: prod_{j < nu} (1 + 2^-5 P_j)
        if (interior)
            product(factors, 0.0, 1.0 / 32.0, c.n, poly);
        else
            product(factors, 1.0, 1.0 / 32.0, c.n, poly);
        double v = 0.0;
        for (int l = c.m; l <= c.n; ++l) v += level_weight[l] * poly[l];
        return v;
    };
    out.l1 = witness_l1(c, c.n);
    if (c.alpha == std::floor(c.alpha)) {
        const int a = static_cast<int>(c.alpha);
        auto tail = [&](int s) {
            Rational t = 0;
            for (int l = c.m; l <= c.n; ++l) t += pow2(-a * l) * Rational(binomial(l - 1, s - 1));
            return t;
        };
        Rational exact = 0;
        if (interior)
            exact = pow2(-7 * c.d) * tail(c.d);
        else
            for (int s = 1; s <= c.variant.nu; ++s) exact += Rational(binomial(c.variant.nu, s)) * pow2(-7 * s) * tail(s);
        out.exact_l1 = exact;
    }
    return out;
}

bool vanishes_exactly(const WitnessConfig& config, const std::vector<Dyadic>& x) {
    config.validate();
    if (static_cast<int>(x.size()) != config.d) throw std::invalid_argument("witness point dimension mismatch");
    const int used = config.active();
    const int n = config.n;
    // zero[j][k]: g_k vanishes exactly at x_j
    std::vector<std::vector<bool>> zero(used, std::vector<bool>(n + 1, true));
    for (int j = 0; j < used; ++j) {
        const Rational xj = x[j].exact();
        // g_k(x) = M_4(4 frac(2^k x)): at most one bump of the level is nonzero at x
        for (int k = 1; k <= n; ++k) zero[j][k] = cubic_spline_exact(4 * frac_exact(xj * pow2(k))) == 0;
    }
    // live[l]: some product over chosen coordinates with levels summing to l is nonzero
    const bool interior = config.variant.kind == GridKind::interior;
    std::vector<bool> live(n + 1, false);
    live[0] = true;
    for (int j = 0; j < used; ++j) {
        std::vector<bool> next(n + 1, false);
        for (int a = 0; a <= n; ++a) {
            if (!live[a]) continue;
            if (!interior) next[a] = true;  // coordinate j left out of u
            for (int k = 1; a + k <= n; ++k)
                if (!zero[j][k]) next[a + k] = true;
        }
        live.swap(next);
    }
    for (int l = config.m; l <= n; ++l)
        if (live[l]) return false;
    return true;
}

HolderReport holder_membership_spotcheck(const Evaluator& f, int d, double alpha, std::size_t trials,
                                         std::uint64_t seed, double tolerance) {
    if (!(alpha > 0.0 && alpha <= 2.0)) throw std::invalid_argument("spot check needs 0 < alpha <= 2");
    HolderReport rep;
    rep.trials = trials;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> log_h(-20.0, 0.0);
    std::vector<double> x(d), h(d), y(d);
    std::vector<int> u;
    for (std::size_t t = 0; t < trials; ++t) {
        u.clear();
        for (int j = 0; j < d; ++j) {
            x[j] = unit(rng);
            h[j] = std::exp2(log_h(rng));
            if (rng() & 1) u.push_back(j);
        }
        double bound = 1.0;
        for (int j : u) bound *= std::pow(h[j], alpha);
        // mixed second difference: sum over e in {0,1,2}^u of prod (1,-2,1)[e_j] f(x + e h)
        const std::size_t terms = static_cast<std::size_t>(std::pow(3, u.size()));
        double diff = 0.0;
        for (std::size_t code = 0; code < terms; ++code) {
            y = x;
            double w = 1.0;
            std::size_t c = code;
            for (int j : u) {
                int e = static_cast<int>(c % 3);
                c /= 3;
                y[j] = wrap_unit(x[j] + e * h[j]);
                w *= e == 1 ? -2.0 : 1.0;
            }
            diff += w * f(y);
        }
        diff = std::fabs(diff);
        rep.max_ratio = std::max(rep.max_ratio, diff / (bound + tolerance));
        if (diff > bound + tolerance) ++rep.failures;
    }
    rep.pass = rep.failures == 0;
    return rep;
}

LowerBoundDemonstration lower_bound_demonstration(const WitnessConfig& config, double p) {
    config.validate();
    if (!(p >= 1.0)) throw std::invalid_argument("lower bound demonstration needs p >= 1");
    const bool interior = config.variant.kind == GridKind::interior;
    const int dims = config.active();
    if (config.m < dims) throw std::invalid_argument("lower bound demonstration needs m >= d (resp. nu)");
    const double a = config.alpha, t = std::pow(2.0, -a);
    const double decay = std::pow(2.0, -a * config.m);

    LowerBoundDemonstration out;
    out.witness_norm = witness_l1(config, config.n);

    ApproxParams q;
    q.alpha = a;
    q.p = p;
    q.d = config.d;
    q.nu = dims;
    q.m = config.m;
    Theorem th = interior ? Theorem::interior_recovery_lower : Theorem::support_bounded_recovery_lower;
    out.theorem_lower = theorem_bound(q, th, Side::lower, Form::refined).value;

    // For one subset size s: limit 2^-7s 2^-alpha m F_{m-1,s-1}(t), certified part
    // 2^-7s 2^-alpha m beta(s,m), gap 2^-7s 2^-alpha m C(m-1,s-1), tail 2^-7s 2^-alpha(n+1) F_{n,s-1}(t).
    auto add = [&](int s, double weight) {
        const double c = weight * std::pow(2.0, -7.0 * s);
        out.limit += c * decay * F(config.m - 1, s - 1, t);
        out.certified_lower += c * decay * beta(a, s, config.m);
        out.limit_gap += c * decay * to_double(binomial(config.m - 1, s - 1));
        out.tail_bound += c * std::pow(2.0, -a * (config.n + 1)) * F(config.n, s - 1, t);
    };
    if (interior)
        add(config.d, 1.0);
    else
        for (int s = 1; s <= dims; ++s) add(s, to_double(binomial(dims, s)));

    out.partial_sum_ok = out.witness_norm >= out.certified_lower;
    out.limit_ok = std::fabs((out.limit - out.certified_lower) - out.limit_gap) <= 1e-12 * out.limit;
    out.theorem_supported = out.witness_norm >= out.theorem_lower;
    return out;
}

}  // namespace smolyak
