#include "smolyak/laurent.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace smolyak {

LaurentPoly::LaurentPoly(std::map<int, Rational> terms) : terms_(std::move(terms)) { drop_zeros(); }

LaurentPoly LaurentPoly::constant(const Rational& c) { return monomial(0, c); }

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& c) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(exponent, c);
    return p;
}

LaurentPoly LaurentPoly::difference(int l) {
    if (l < 0) throw std::invalid_argument("difference order must be nonnegative");
    std::map<int, Rational> t;
    for (int j = 0; j <= l; ++j) {
        Rational c(binomial(l, j));
        t[j] = ((l - j) % 2 == 0) ? c : Rational(-c);
    }
    return LaurentPoly(std::move(t));
}

void LaurentPoly::drop_zeros() {
    std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

Rational LaurentPoly::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
    return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
    return terms_.rbegin()->first;
}

bool LaurentPoly::is_symmetric() const {
    if (terms_.empty()) return true;
    int sum = min_exponent() + max_exponent();
    for (const auto& [e, c] : terms_)
        if (coefficient(sum - e) != c) return false;
    return true;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) terms_[e] += c;
    drop_zeros();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) terms_[e] -= c;
    drop_zeros();
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    std::map<int, Rational> t;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) t[ea + eb] += ca * cb;
    return LaurentPoly(std::move(t));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly& LaurentPoly::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& kv : terms_) kv.second *= scalar;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly substitute_square(const LaurentPoly& p) {
    std::map<int, Rational> t;
    for (const auto& [e, c] : p.terms()) t.emplace(2 * e, c);
    return LaurentPoly(std::move(t));
}

Division divide_exact(const LaurentPoly& p, const LaurentPoly& divisor) {
    if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (p.is_zero()) return {};

    const int shift_p = p.min_exponent();
    const int shift_d = divisor.min_exponent();
    const int deg_d = divisor.max_exponent() - shift_d;

    // dense ordinary-polynomial coefficients, index = degree
    std::vector<Rational> rem(p.max_exponent() - shift_p + 1);
    for (const auto& [e, c] : p.terms()) rem[e - shift_p] = c;
    std::vector<Rational> div(deg_d + 1);
    for (const auto& [e, c] : divisor.terms()) div[e - shift_d] = c;

    std::map<int, Rational> quot;
    const Rational lead = div[deg_d];
    for (int i = static_cast<int>(rem.size()) - 1; i >= deg_d; --i) {
        if (rem[i] == 0) continue;
        Rational q = rem[i] / lead;
        quot[i - deg_d] = q;
        for (int j = 0; j <= deg_d; ++j) rem[i - deg_d + j] -= q * div[j];
    }

    std::map<int, Rational> remainder;
    for (std::size_t i = 0; i < rem.size(); ++i)
        if (rem[i] != 0) remainder[static_cast<int>(i) + shift_p] = rem[i];

    std::map<int, Rational> quotient;
    for (auto& [e, c] : quot) quotient[e + shift_p - shift_d] = c;
    return {LaurentPoly(std::move(quotient)), LaurentPoly(std::move(remainder))};
}

Rational l1_norm(const LaurentPoly& p) {
    Rational s = 0;
    for (const auto& kv : p.terms()) s += abs(kv.second);
    return s;
}

double eval(const LaurentPoly& p, double x) {
    if (x == 0.0 && !p.is_zero() && p.min_exponent() < 0)
        throw std::domain_error("Laurent polynomial with negative exponents evaluated at 0");
    double s = 0.0;
    for (const auto& [e, c] : p.terms()) s += to_double(c) * std::pow(x, e);
    return s;
}

Rational eval(const LaurentPoly& p, const Rational& x) {
    if (x == 0 && !p.is_zero() && p.min_exponent() < 0)
        throw std::domain_error("Laurent polynomial with negative exponents evaluated at 0");
    Rational s = 0;
    for (const auto& [e, c] : p.terms()) {
        Rational power = 1;
        for (int i = 0; i < std::abs(e); ++i) power *= x;
        s += e >= 0 ? Rational(c * power) : Rational(c / power);
    }
    return s;
}

double apply_shift_operator(const LaurentPoly& p, double h, const std::function<double(double)>& f, double x) {
    double s = 0.0;
    for (const auto& [e, c] : p.terms()) {
        double y = x + e * h;
        y -= std::floor(y);
        if (y >= 1.0) y = 0.0;
        s += to_double(c) * f(y);
    }
    return s;
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) out << " + ";
        first = false;
        out << "(" << to_string(c) << ")";
        if (e != 0) out << "z^" << e;
    }
    return out.str();
}

}  // namespace smolyak
