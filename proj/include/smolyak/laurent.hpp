#pragma once

#include "smolyak/rational.hpp"

#include <functional>
#include <map>

namespace smolyak {

// Univariate Laurent polynomial sum c_e z^e with exact rational coefficients.
// Canonical form: no zero coefficient is ever stored, so the zero polynomial
// is the empty map and equality is structural.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::map<int, Rational> terms);

    static LaurentPoly constant(const Rational& c);
    static LaurentPoly monomial(int exponent, const Rational& c = 1);
    // D_l(z) = (z - 1)^l
    static LaurentPoly difference(int l);

    const std::map<int, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(int exponent) const;
    int min_exponent() const;
    int max_exponent() const;

    // True when c(e) == c(lo + hi - e) for every exponent.
    bool is_symmetric() const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);
    LaurentPoly& operator*=(const Rational& scalar);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
    friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    void drop_zeros();
    std::map<int, Rational> terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

// p(z^2)
LaurentPoly substitute_square(const LaurentPoly& p);

struct Division {
    LaurentPoly quotient;
    LaurentPoly remainder;
};

// p = divisor * quotient + remainder. Both operands are shifted to ordinary
// polynomials, divided, and the shift is restored, so the remainder has
// ordinary degree below the divisor's. Throws std::domain_error on a zero
// divisor.
Division divide_exact(const LaurentPoly& p, const LaurentPoly& divisor);

Rational l1_norm(const LaurentPoly& p);

// Throws std::domain_error for x == 0 when a negative exponent is present.
double eval(const LaurentPoly& p, double x);
Rational eval(const LaurentPoly& p, const Rational& x);

// sum_e c_e f(x + e h), with the argument wrapped into [0, 1).
double apply_shift_operator(const LaurentPoly& p, double h, const std::function<double(double)>& f, double x);

std::string to_string(const LaurentPoly& p);

}  // namespace smolyak
