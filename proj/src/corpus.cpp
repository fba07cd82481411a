#include "smolyak/corpus.hpp"

#include "smolyak/bspline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace smolyak {

namespace {

// Per-coordinate certificate of a product function prod_j g_j(x_j):
// sup |g_j| and sup_h ||Delta^l_h g_j|| / h^alpha.
struct Factor {
    double sup = 1.0;
    double diff = 0.0;
};

// max over u of prod_{j in u} diff_j prod_{j not in u} sup_j
double product_seminorm(const std::vector<Factor>& f) {
    double v = 1.0;
    for (const auto& x : f) v *= std::max(x.sup, x.diff);
    return v;
}

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

}  // namespace

double capped_ratio(double a, double e, double b, double alpha) {
    require(alpha > 0.0 && alpha <= e, "capped ratio needs 0 < alpha <= e");
    if (alpha == e) return a;
    const double h = std::pow(b / a, 1.0 / e);  // where the two branches meet
    if (h >= 1.0) return a;
    return b * std::pow(h, -alpha);
}

double sine_difference_ratio(int order, double alpha) {
    require(order >= 1 && alpha > 0.0 && alpha <= order, "sine ratio needs 0 < alpha <= order");
    if (alpha == order) return std::pow(2.0 * std::numbers::pi, order);
    double best = 0.0;
    const int n = 200000;
    for (int i = 1; i <= n; ++i) {
        double h = static_cast<double>(i) / n;
        best = std::max(best, std::pow(2.0 * std::fabs(std::sin(std::numbers::pi * h)), order) / std::pow(h, alpha));
    }
    return 1.1 * best;
}

std::vector<std::string> corpus_names() {
    return {"prodsine", "bump", "few-active", "constant", "hat", "bspline", "trig"};
}

CorpusFunction make_corpus_function(const std::string& name, int d, double alpha, int order,
                                    const CorpusOptions& opt) {
    require(d >= 1, "corpus function needs d >= 1");
    require(order >= 1, "difference order must be positive");
    require(alpha > 0.0 && alpha <= order, "need 0 < alpha <= difference order");
    CorpusFunction c;
    c.name = name;
    c.d = d;
    c.certified_alpha = alpha;
    c.difference_order = order;
    for (int j = 0; j < d; ++j) c.active_variables.push_back(j);
    const double two_pi = 2.0 * std::numbers::pi;

    if (name == "prodsine" || name == "few-active") {
        const int active = name == "prodsine" ? d : opt.nu;
        require(active >= 1 && active <= d, "few-active needs 1 <= nu <= d");
        c.active_variables.resize(active);
        const double s = sine_difference_ratio(order, alpha);
        const double scale = 1.0 / std::pow(std::max(1.0, s), active);
        c.evaluate = [active, scale, two_pi](std::span<const double> x) {
            double v = scale;
            for (int j = 0; j < active; ++j) v *= std::sin(two_pi * x[j]);
            return v;
        };
        c.seminorm_bound = 1.0;
        c.true_integral = 0.0;
        c.exact_integral = Rational(0);
        c.zero_boundary = true;
        c.certificate = alpha == order ? "exact: sup (2 sin(pi h))^l / h^l = (2 pi)^l"
                                       : "dense maximum over h, inflated by 1.1";
        return c;
    }
    if (name == "bump") {
        // g(x) = M_4(4 frac x): sup 2/3, |g''| <= 32, |g'''| <= 192
        Factor f;
        f.sup = 2.0 / 3.0;
        if (order == 2) {
            require(alpha <= 2.0, "bump is certified for alpha <= 2 with second differences");
            f.diff = capped_ratio(32.0, 2.0, 4.0 * f.sup, alpha);
        } else {
            require(alpha <= 3.0, "bump is certified for alpha <= 3");
            f.diff = capped_ratio(std::ldexp(192.0, order - 3), 3.0, std::ldexp(f.sup, order), alpha);
        }
        const double scale = 1.0 / product_seminorm(std::vector<Factor>(d, f));
        c.evaluate = [d, scale](std::span<const double> x) {
            double v = scale;
            for (int j = 0; j < d; ++j) v *= cardinal_bspline(4, 4.0 * wrap_unit(x[j]));
            return v;
        };
        c.seminorm_bound = 1.0;
        c.true_integral = scale * std::pow(0.25, d);
        c.zero_boundary = true;
        c.certificate = "derivative bounds of M_4 capped by the sup norm";
        return c;
    }
    if (name == "constant") {
        const double v = opt.value;
        c.evaluate = [v](std::span<const double>) { return v; };
        c.seminorm_bound = std::fabs(v);
        c.true_integral = v;
        c.certificate = "differences of a constant vanish";
        return c;
    }
    if (name == "hat" || name == "bspline") {
        const bool hat = name == "hat";
        require(hat || (opt.r >= 1 && 2 * opt.r <= kMaxSplineOrder), "bspline half-order out of range");
        std::vector<int> level = opt.level.empty() ? std::vector<int>(d, 1) : opt.level;
        std::vector<std::int64_t> shift = opt.shift.empty() ? std::vector<std::int64_t>(d, 0) : opt.shift;
        require(static_cast<int>(level.size()) == d && static_cast<int>(shift.size()) == d,
                "level and shift need d entries");
        std::vector<Factor> factors(d);
        Rational integral = 1;
        for (int j = 0; j < d; ++j) {
            require(level[j] >= 0 && level[j] <= 30, "level out of range");
            const std::int64_t count = hat ? faber_shift_count(level[j]) : spline_shift_count(opt.r, level[j]);
            require(shift[j] >= 0 && shift[j] < count, "shift out of range");
            if (hat) {
                integral *= level[j] == 0 ? Rational(1) : pow2(-level[j]);
                // slope 2^k, values in [0, 1]
                factors[j].diff = level[j] == 0 || alpha > 1.0
                                      ? (level[j] == 0 ? 0.0 : INFINITY)
                                      : capped_ratio(std::ldexp(1.0, order - 1 + level[j]), 1.0, std::ldexp(1.0, order - 1), alpha);
            } else {
                integral /= Rational(BigInt(count));
                // |M'| <= 1 scaled by n = 2r 2^k
                factors[j].sup = 1.0;
                factors[j].diff = alpha > 1.0 ? INFINITY
                                              : capped_ratio(std::ldexp(static_cast<double>(count), order - 1), 1.0,
                                                             std::ldexp(1.0, order), alpha);
            }
        }
        const int r = opt.r;
        c.evaluate = [hat, r, level, shift](std::span<const double> x) {
            double v = 1.0;
            for (std::size_t j = 0; j < level.size() && v != 0.0; ++j)
                v *= hat ? faber_hat(level[j], shift[j], x[j]) : periodic_bspline(r, level[j], shift[j], x[j]);
            return v;
        };
        c.seminorm_bound = product_seminorm(factors);
        c.exact_integral = integral;
        c.true_integral = to_double(integral);
        c.certificate = "Lipschitz bound, certified for alpha <= 1";
        return c;
    }
    if (name == "trig") {
        // sum_t a_t prod_j cos(2 pi f_tj x_j + phase_tj)
        struct Mode {
            double amplitude;
            std::vector<int> frequency;
            std::vector<double> phase;
        };
        std::mt19937_64 rng(opt.seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::uniform_int_distribution<int> freq(0, std::max(0, opt.max_frequency));
        std::vector<Mode> modes(std::max(1, opt.terms));
        double integral = 0.0, bound = 0.0;
        for (auto& mo : modes) {
            mo.amplitude = 2.0 * unit(rng) - 1.0;
            std::vector<Factor> fac(d);
            double mean = mo.amplitude;
            for (int j = 0; j < d; ++j) {
                mo.frequency.push_back(freq(rng));
                mo.phase.push_back(two_pi * unit(rng));
                const int k = mo.frequency.back();
                mean *= k == 0 ? std::cos(mo.phase.back()) : 0.0;
                fac[j].diff = k == 0 ? 0.0 : std::pow(static_cast<double>(k), alpha) * sine_difference_ratio(order, alpha);
            }
            integral += mean;
            bound += std::fabs(mo.amplitude) * product_seminorm(fac);
        }
        c.evaluate = [modes, two_pi](std::span<const double> x) {
            double v = 0.0;
            for (const auto& mo : modes) {
                double t = mo.amplitude;
                for (std::size_t j = 0; j < x.size(); ++j) t *= std::cos(two_pi * mo.frequency[j] * x[j] + mo.phase[j]);
                v += t;
            }
            return v;
        };
        c.seminorm_bound = bound;
        c.true_integral = integral;
        c.certificate = "sum of per-mode product bounds";
        return c;
    }
    throw std::invalid_argument("unknown corpus function: " + name);
}

}  // namespace smolyak
