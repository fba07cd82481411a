#pragma once

#include <limits>
#include <string>
#include <vector>

namespace smolyak {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// F_{m,n}(t) = sum_{s>=0} C(m+s, n) t^s in closed form. Requires m >= n >= 0, 0 < t < 1.
double F(long m, long n, double t);

// (1-2t)^-1 for t < 1/2, 2(n+1) at t = 1/2, (2t-1)^-1 (t/(1-t))^(n+1) above.
double b_n(long n, double t);

double beta(double alpha, long l, long m);
double gamma(double alpha, double p, long nu, long m);
double gamma_prime(double alpha, long nu, long m);
// sum_l C(nu,l) 4^-l beta(l,m): the p = 1 instance of gamma, used by the cubature bounds.
double gamma_cubature(double alpha, long nu, long m);
double delta(double alpha, long nu, double a, double b, long m);

// (p+1)^(1/p), with the value 1 at p = infinity.
double p_root(double p);

// 2 (2^alpha - 1) (p+1)^(1/p)
double bound_b_faber(double alpha, double p);

enum class FrontKind {
    recovery_interior,          // a°(d)
    recovery_support_bounded,   // a(nu)
    cubature_interior,          // a°(d) without the p factor
    cubature_support_bounded,   // a(nu) with (5/4)^nu
    quasi_interpolation,        // c(nu, a, b)
};

// n is d or nu depending on the kind; a and b only enter quasi_interpolation.
double front_constant(double alpha, double p, long n, FrontKind kind, double a = 0.0, double b = 0.0);

enum class Theorem {
    interior_recovery,
    support_bounded_recovery,
    interior_recovery_lower,
    support_bounded_recovery_lower,
    interior_cubature,
    support_bounded_cubature,
    qi_recovery,
    qi_cubature,
};

enum class Side { upper, lower };
enum class Form { refined, m_power, binomial };

struct ApproxParams {
    double alpha = 2.0;
    double p = kInfinity;
    int d = 1;
    int nu = 1;
    int m = 1;
    // scheme data for the quasi-interpolation theorems
    int r = 1;
    double a = 0.0;
    double b = 0.0;
};

struct BoundReport {
    Theorem theorem;
    Side side;
    Form form;
    bool defined = false;  // false when a hypothesis fails; value is then NaN
    double value = std::numeric_limits<double>::quiet_NaN();
    std::string hypothesis;  // the condition that gated the form
};

std::string to_string(Theorem t);
std::string to_string(Side s);
std::string to_string(Form f);

// Throws std::invalid_argument for side/form combinations the theorem does not state.
BoundReport theorem_bound(const ApproxParams& params, Theorem theorem, Side side, Form form);

// Every side/form combination stated by the theorem.
std::vector<BoundReport> theorem_bounds(const ApproxParams& params, Theorem theorem);

}  // namespace smolyak
