#pragma once

#include "smolyak/expansion.hpp"
#include "smolyak/laurent.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace smolyak {

class SchemeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Quasi-interpolation with cardinal B-splines of order 2r and an even
// functional sequence lambda(-mu..mu), together with the Laurent symbols of
// its hierarchical components.
class QIScheme {
public:
    // lambda_full has 2 mu + 1 entries lambda(-mu), ..., lambda(mu).
    // Throws SchemeError for an asymmetric sequence, mu < r - 1, or when the
    // even/odd symbols are not exactly divisible by (z - 1)^(2r).
    static QIScheme build(int r, std::vector<Rational> lambda_full);
    // lambda(0), lambda(1), ..., lambda(mu).
    static QIScheme from_half(int r, const std::vector<Rational>& lambda_half);
    // Reads lambda(j) as the coefficient of z^(r+j).
    static QIScheme from_symbol(int r, const LaurentPoly& p_lambda);
    // "linear" (r = 1), "cubic" (r = 2), "quintic" (r = 3).
    static QIScheme builtin(std::string_view name);

    int r() const noexcept { return r_; }
    int mu() const noexcept { return mu_; }
    Rational lambda(int j) const;
    std::vector<Rational> lambda_half() const;

    const LaurentPoly& p_lambda() const noexcept { return p_lambda_; }
    const LaurentPoly& p_even_prime() const noexcept { return p_even_prime_; }
    const LaurentPoly& p_odd_prime() const noexcept { return p_odd_prime_; }
    const LaurentPoly& p_even() const noexcept { return p_even_; }
    const LaurentPoly& p_odd() const noexcept { return p_odd_; }
    const LaurentPoly& p_even_star() const noexcept { return p_even_star_; }
    const LaurentPoly& p_odd_star() const noexcept { return p_odd_star_; }
    Rational lambda_norm() const { return l1_norm(p_lambda_); }
    Rational star_norm() const;  // max of the two starred norms

    // Symbol applied at level `level` to coefficient `shift` (P_Lambda at
    // level 0, D_2r times the starred symbol of the shift's parity otherwise).
    LaurentPoly component_symbol(int level, std::int64_t shift) const;

private:
    int r_ = 1;
    int mu_ = 0;
    std::vector<Rational> lambda_;  // index j + mu
    LaurentPoly p_lambda_, p_even_prime_, p_odd_prime_, p_even_, p_odd_, p_even_star_, p_odd_star_;
};

struct LebesgueEstimate {
    double lower = 0.0;  // max over the evaluation grid
    double upper = 0.0;  // lower plus Lipschitz slack
    bool exact = false;  // nonnegative lambda: the value is sum lambda exactly
};

// sup over one period of sum_s |sum_j lambda(j) M(x - j - s)|.
LebesgueEstimate lebesgue_constant(const QIScheme& scheme, std::size_t grid_points = 2000000);

struct SchemeConstants {
    double a = 0.0;
    double b = 0.0;        // upper estimate of the Lebesgue constant
    double b_lower = 0.0;
    double b_crude = 0.0;  // ||Lambda||, a rigorous fallback for b
};

// a = (2r)^(-alpha) [r(p+1)]^(-1/p) max(||P*_even||, ||P*_odd||); p may be infinite.
SchemeConstants scheme_constants(const QIScheme& scheme, double alpha, double p);

// Q_k at every level: coefficients T^[P_Lambda](f)(s h).
LevelOperatorFamily qi_operator_family(const QIScheme& scheme);
// q_k: coefficients T^[P_{k,s}](f)(s h).
LevelOperatorFamily qi_component_family(const QIScheme& scheme);

using QIExpansion = Expansion;

QIExpansion qi_operator(const QIScheme& scheme, const Evaluator& f, const MultiIndex& k);
QIExpansion qi_component_coefficients(const QIScheme& scheme, const Evaluator& f, const MultiIndex& k);

// sum over k in Z^d_+ with |supp k| <= nu, |k|_1 <= m of q_k(f).
QIExpansion recover_qi(const QIScheme& scheme, const Evaluator& f, int d, int m, int nu);

// Faber levels spanning the same functions as recover_qi with the r = 1 scheme:
// component level 0 holds Faber levels 0 and 1, level k >= 1 holds Faber level k + 1.
std::vector<MultiIndex> linear_qi_faber_levels(int d, int m, int nu);

struct DecayCheck {
    bool pass = false;
    double measured = 0.0;
    double bound = 0.0;
};

// Measures ||q_k(f)||_p by composite Gauss quadrature on the level cells
// (max over nodes for p = infinity) and compares it with
// a^|u| b^(d-|u|) 2^(-alpha |k|_1) times seminorm_bound.
DecayCheck coefficient_decay_check(const QIScheme& scheme, const Evaluator& f, double seminorm_bound,
                                   const MultiIndex& k, double p, double alpha);

}  // namespace smolyak
