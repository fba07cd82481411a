#include "smolyak/bounds.hpp"

#include "smolyak/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace smolyak {

namespace {

double choose(long n, long k) { return to_double(binomial(n, k)); }

void check_t(double t) {
    if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("t must lie in (0, 1)");
}

void check_alpha(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
}

}  // namespace

double F(long m, long n, double t) {
    check_t(t);
    if (n < 0 || m < n) throw std::invalid_argument("F requires m >= n >= 0");
    const double q = t / (1.0 - t);
    double s = 0.0;
    for (long i = 0; i <= n; ++i) s += choose(m, i) * std::pow(q, static_cast<double>(n - i));
    return s / (1.0 - t);
}

double b_n(long n, double t) {
    check_t(t);
    if (n < 0) throw std::invalid_argument("b_n requires n >= 0");
    if (t < 0.5) return 1.0 / (1.0 - 2.0 * t);
    if (t == 0.5) return 2.0 * static_cast<double>(n + 1);
    return std::pow(t / (1.0 - t), static_cast<double>(n + 1)) / (2.0 * t - 1.0);
}

double beta(double alpha, long l, long m) {
    check_alpha(alpha);
    if (l < 0) throw std::invalid_argument("beta requires l >= 0");
    if (l == 0) return 1.0;
    if (m < l - 1) throw std::invalid_argument("beta requires m >= l - 1");
    const double g = std::pow(2.0, alpha) - 1.0;
    double s = 0.0;
    for (long i = 0; i < l; ++i) s += choose(m, i) * std::pow(g, static_cast<double>(i - l));
    return s;
}

double p_root(double p) {
    if (!(p > 0.0)) throw std::invalid_argument("p must be positive");
    return std::isinf(p) ? 1.0 : std::pow(p + 1.0, 1.0 / p);
}

double gamma(double alpha, double p, long nu, long m) {
    const double w = 1.0 / (2.0 * p_root(p));
    double s = 0.0;
    for (long l = 0; l <= nu; ++l) s += choose(nu, l) * std::pow(w, static_cast<double>(l)) * beta(alpha, l, m);
    return s;
}

double gamma_prime(double alpha, long nu, long m) {
    double s = 0.0;
    for (long l = 0; l <= nu; ++l) s += choose(nu, l) * std::pow(2.0, -7.0 * l) * beta(alpha, l, m);
    return s;
}

double gamma_cubature(double alpha, long nu, long m) {
    double s = 0.0;
    for (long l = 0; l <= nu; ++l) s += choose(nu, l) * std::pow(4.0, -static_cast<double>(l)) * beta(alpha, l, m);
    return s;
}

double delta(double alpha, long nu, double a, double b, long m) {
    double s = 0.0;
    for (long l = 0; l <= nu; ++l)
        s += choose(nu, l) * std::pow(a, static_cast<double>(l)) * std::pow(b, static_cast<double>(nu - l)) *
             beta(alpha, l, m);
    return s;
}

double bound_b_faber(double alpha, double p) {
    check_alpha(alpha);
    return 2.0 * (std::pow(2.0, alpha) - 1.0) * p_root(p);
}

double front_constant(double alpha, double p, long n, FrontKind kind, double a, double b) {
    check_alpha(alpha);
    const double two_a = std::pow(2.0, alpha);
    // |2^alpha - 2|^(-|sgn(alpha - 1)|): exactly 1 at alpha = 1
    const double lead = alpha == 1.0 ? 1.0 : 1.0 / std::fabs(two_a - 2.0);
    const double nn = static_cast<double>(n);
    const double g = two_a - 1.0;
    const int branch = alpha > 1.0 ? 1 : (alpha == 1.0 ? 0 : -1);
    switch (kind) {
        case FrontKind::recovery_interior: {
            double c = std::pow(2.0 * p_root(p), -nn);
            return lead * c * (branch > 0 ? 1.0 : branch == 0 ? nn : std::pow(g, -nn));
        }
        case FrontKind::recovery_support_bounded: {
            double c = std::pow(1.0 + 1.0 / (2.0 * p_root(p)), nn);
            return lead * c * (branch > 0 ? 1.0 : branch == 0 ? nn : std::pow(g, -nn));
        }
        case FrontKind::cubature_interior:
            return lead * (branch > 0 ? 1.0 : branch == 0 ? nn : std::pow(g, -nn));
        case FrontKind::cubature_support_bounded: {
            if (branch > 0) return lead * std::pow(1.25, nn);
            if (branch == 0) return lead * nn * std::pow(1.25, nn);
            return lead * std::pow(1.0 + 1.0 / (4.0 * g), nn);
        }
        case FrontKind::quasi_interpolation: {
            if (branch > 0) return lead * std::pow(a + b, nn);
            if (branch == 0) return lead * nn * std::pow(a + b, nn);
            return lead * std::pow(a / g + b, nn);
        }
    }
    throw std::logic_error("unknown front constant kind");
}

std::string to_string(Theorem t) {
    switch (t) {
        case Theorem::interior_recovery: return "interior_recovery";
        case Theorem::support_bounded_recovery: return "support_bounded_recovery";
        case Theorem::interior_recovery_lower: return "interior_recovery_lower";
        case Theorem::support_bounded_recovery_lower: return "support_bounded_recovery_lower";
        case Theorem::interior_cubature: return "interior_cubature";
        case Theorem::support_bounded_cubature: return "support_bounded_cubature";
        case Theorem::qi_recovery: return "qi_recovery";
        case Theorem::qi_cubature: return "qi_cubature";
    }
    return "?";
}

std::string to_string(Side s) { return s == Side::upper ? "upper" : "lower"; }

std::string to_string(Form f) {
    switch (f) {
        case Form::refined: return "refined";
        case Form::m_power: return "m_power";
        case Form::binomial: return "binomial";
    }
    return "?";
}

namespace {

struct Gate {
    bool ok = true;
    std::string text;
    void require(bool cond, const std::string& what) {
        if (!text.empty()) text += ", ";
        text += what;
        if (!cond) ok = false;
    }
};

bool stated(Theorem t, Side side, Form form) {
    switch (t) {
        case Theorem::interior_recovery:
        case Theorem::support_bounded_recovery:
        case Theorem::qi_recovery:
        case Theorem::qi_cubature:
            return side == Side::upper;
        case Theorem::interior_recovery_lower:
            return side == Side::lower;
        case Theorem::support_bounded_recovery_lower:
            return side == Side::lower && form != Form::m_power;
        case Theorem::interior_cubature:
        case Theorem::support_bounded_cubature:
            return form != Form::m_power;
    }
    return false;
}

}  // namespace

BoundReport theorem_bound(const ApproxParams& q, Theorem theorem, Side side, Form form) {
    if (!stated(theorem, side, form))
        throw std::invalid_argument("theorem " + to_string(theorem) + " states no " + to_string(side) + " " +
                                    to_string(form) + " bound");
    BoundReport rep;
    rep.theorem = theorem;
    rep.side = side;
    rep.form = form;
    const double alpha = q.alpha, p = q.p;
    const long d = q.d, nu = q.nu, m = q.m;
    const bool interior = theorem == Theorem::interior_recovery || theorem == Theorem::interior_recovery_lower ||
                          theorem == Theorem::interior_cubature;
    const long n = interior ? d : nu;  // the dimension entering the bound

    Gate gate;
    gate.require(alpha > 0.0, "alpha > 0");
    if (theorem == Theorem::qi_recovery || theorem == Theorem::qi_cubature)
        gate.require(alpha <= 2.0 * q.r, "alpha <= 2r");
    else
        gate.require(alpha <= 2.0, "alpha <= 2");
    if (theorem == Theorem::interior_recovery || theorem == Theorem::support_bounded_recovery)
        gate.require(p > 0.0, "p > 0");
    if (theorem == Theorem::interior_recovery_lower || theorem == Theorem::support_bounded_recovery_lower ||
        theorem == Theorem::qi_recovery)
        gate.require(p >= 1.0, "p >= 1");
    gate.require(d >= 1, "d >= 1");
    if (!interior) gate.require(nu >= 1 && nu <= d, "1 <= nu <= d");
    gate.require(m >= n, interior ? "m >= d" : "m >= nu");
    if (form == Form::binomial && theorem != Theorem::interior_recovery_lower &&
        theorem != Theorem::support_bounded_recovery_lower)
        gate.require(m >= 2 * (n - 1), interior ? "m >= 2(d-1)" : "m >= 2(nu-1)");
    if (theorem == Theorem::qi_recovery || theorem == Theorem::qi_cubature)
        gate.require(q.a > 0.0 && q.b > 0.0, "scheme constants a, b > 0");
    rep.hypothesis = gate.text;
    if (!gate.ok) return rep;

    const double decay = std::pow(2.0, -alpha * static_cast<double>(m));
    const double g = std::pow(2.0, alpha) - 1.0;
    const double mp = std::pow(static_cast<double>(m), static_cast<double>(n - 1));
    const double bin = choose(m, n - 1);
    double v = 0.0;
    switch (theorem) {
        case Theorem::interior_recovery:
            if (form == Form::refined) v = std::pow(2.0 * p_root(p), -static_cast<double>(d)) * beta(alpha, d, m) * decay;
            if (form == Form::m_power)
                v = std::exp(g) * std::pow(bound_b_faber(alpha, p), -static_cast<double>(d)) * decay * mp;
            if (form == Form::binomial) v = front_constant(alpha, p, d, FrontKind::recovery_interior) * decay * bin;
            break;
        case Theorem::support_bounded_recovery:
            if (form == Form::refined) v = gamma(alpha, p, nu, m) * decay;
            if (form == Form::m_power)
                v = std::exp(g) * std::pow(1.0 + 1.0 / bound_b_faber(alpha, p), static_cast<double>(nu)) * decay * mp;
            if (form == Form::binomial)
                v = front_constant(alpha, p, nu, FrontKind::recovery_support_bounded) * decay * bin;
            break;
        case Theorem::interior_recovery_lower:
            if (form == Form::refined) v = std::pow(2.0, -7.0 * d) * beta(alpha, d, m) * decay;
            if (form == Form::binomial) v = std::pow(2.0, -7.0 * d) * decay * bin / g;
            if (form == Form::m_power) {
                double dm1 = static_cast<double>(d - 1);
                double lead = d == 1 ? 1.0 : std::pow(dm1, -dm1);
                v = std::pow(2.0, -7.0 * d) * lead * decay * mp / g;
            }
            break;
        case Theorem::support_bounded_recovery_lower:
            if (form == Form::refined) v = gamma_prime(alpha, nu, m) * decay;
            if (form == Form::binomial)
                v = std::pow(g + 1.0 - 127.0 / 128.0, static_cast<double>(nu - 1)) * decay * bin / (128.0 * g);
            break;
        case Theorem::interior_cubature:
            if (side == Side::upper && form == Form::refined) v = std::pow(2.0, -2.0 * d) * beta(alpha, d, m) * decay;
            if (side == Side::upper && form == Form::binomial)
                v = front_constant(alpha, 1.0, d, FrontKind::cubature_interior) * std::pow(2.0, -2.0 * d) * decay * bin;
            if (side == Side::lower && form == Form::refined) v = std::pow(2.0, -7.0 * d) * beta(alpha, d, m) * decay;
            if (side == Side::lower && form == Form::binomial) v = std::pow(2.0, -7.0 * d) * decay * bin / g;
            break;
        case Theorem::support_bounded_cubature:
            if (side == Side::upper && form == Form::refined) v = gamma_cubature(alpha, nu, m) * decay;
            if (side == Side::upper && form == Form::binomial)
                v = front_constant(alpha, 1.0, nu, FrontKind::cubature_support_bounded) * decay * bin;
            if (side == Side::lower && form == Form::refined) v = gamma_prime(alpha, nu, m) * decay;
            if (side == Side::lower && form == Form::binomial)
                v = std::pow(g + 1.0 - 127.0 / 128.0, static_cast<double>(nu - 1)) * decay * bin / (128.0 * g);
            break;
        case Theorem::qi_recovery:
        case Theorem::qi_cubature:
            if (form == Form::refined) v = delta(alpha, nu, q.a, q.b, m) * decay;
            if (form == Form::m_power) v = std::exp(g) * std::pow(q.a / g + q.b, static_cast<double>(nu)) * decay * mp;
            if (form == Form::binomial)
                v = front_constant(alpha, p, nu, FrontKind::quasi_interpolation, q.a, q.b) * decay * bin;
            break;
    }
    rep.defined = true;
    rep.value = v;
    return rep;
}

std::vector<BoundReport> theorem_bounds(const ApproxParams& params, Theorem theorem) {
    std::vector<BoundReport> out;
    for (Side side : {Side::upper, Side::lower})
        for (Form form : {Form::refined, Form::m_power, Form::binomial})
            if (stated(theorem, side, form)) out.push_back(theorem_bound(params, theorem, side, form));
    return out;
}

}  // namespace smolyak
