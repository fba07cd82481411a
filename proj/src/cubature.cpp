#include "smolyak/cubature.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

namespace smolyak {

std::vector<double> CubatureRule::point(std::size_t i) const {
    std::vector<double> x(dim);
    for (int j = 0; j < dim; ++j)
        x[j] = static_cast<double>(numerators[i * dim + j]) / static_cast<double>(denominator);
    return x;
}

std::vector<Dyadic> CubatureRule::dyadic_point(std::size_t i) const {
    if (!std::has_single_bit(denominator)) throw std::invalid_argument("rule lattice is not dyadic");
    const int level = std::countr_zero(denominator);
    std::vector<Dyadic> x(dim);
    for (int j = 0; j < dim; ++j) x[j] = Dyadic::make(numerators[i * dim + j], level);
    return x;
}

Rational CubatureRule::weight_sum() const {
    Rational s = 0;
    for (const auto& w : exact_weights) s += w;
    return s;
}

namespace {

// w[i] = integral(level) * sum_s A[s, i]: the univariate weight of lattice index i.
std::vector<Rational> univariate_weights(const LevelOperatorFamily& family, int level) {
    const LevelOperator& op = family.at(level);
    std::vector<Rational> w(static_cast<std::size_t>(op.lattice_size), Rational(0));
    for (std::int64_t s = 0; s < op.coefficient_count; ++s)
        for (const auto& [i, a] : op.row(s)) w[static_cast<std::size_t>(i)] += a;
    const Rational integral = family.basis().integral(level);
    for (auto& v : w) v *= integral;
    return w;
}

}  // namespace

CubatureRule derive_rule(const RecoveryConfig& config) {
    config.validate();
    const int d = config.d;
    const auto levels = config.levels();
    const LevelOperatorFamily family = config.family();
    const bool zero_boundary = config.zero_boundary();

    CubatureRule rule;
    rule.dim = d;
    rule.provenance = config;
    int top = 0;
    for (const auto& k : levels) top = std::max(top, k.max());
    rule.denominator = static_cast<std::uint64_t>(family.at(top).lattice_size);

    std::vector<std::vector<Rational>> uni(top + 1);
    for (int l = 0; l <= top; ++l) uni[l] = univariate_weights(family, l);

    std::map<std::vector<std::uint32_t>, Rational> acc;
    std::vector<std::uint32_t> key(d);
    std::vector<std::size_t> idx(d);
    for (const auto& k : levels) {
        std::vector<std::vector<std::size_t>> nonzero(d);
        std::vector<std::uint64_t> scale(d);
        bool empty = false;
        for (int j = 0; j < d; ++j) {
            const auto& w = uni[k[j]];
            for (std::size_t i = 0; i < w.size(); ++i)
                if (w[i] != 0 && !(zero_boundary && i == 0)) nonzero[j].push_back(i);
            if (nonzero[j].empty()) empty = true;
            scale[j] = rule.denominator / w.size();
        }
        if (empty) continue;
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            Rational w = 1;
            for (int j = 0; j < d; ++j) {
                std::size_t i = nonzero[j][idx[j]];
                key[j] = static_cast<std::uint32_t>(i * scale[j]);
                w *= uni[k[j]][i];
            }
            acc[key] += w;
            int j = d - 1;
            for (; j >= 0; --j) {
                if (++idx[j] < nonzero[j].size()) break;
                idx[j] = 0;
            }
            if (j < 0) break;
        }
    }
    for (auto& [pt, w] : acc) {
        if (w == 0) continue;
        rule.numerators.insert(rule.numerators.end(), pt.begin(), pt.end());
        rule.weights.push_back(to_double(w));
        rule.exact_weights.push_back(w);
    }
    return rule;
}

namespace {

double pairwise(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 8) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return pairwise(v, lo, mid) + pairwise(v, mid, hi);
}

}  // namespace

double integrate(const CubatureRule& rule, const Evaluator& f) {
    std::vector<double> terms(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) terms[i] = rule.weights[i] * f(rule.point(i));
    return terms.empty() ? 0.0 : pairwise(terms, 0, terms.size());
}

CubatureComparison cubature_error_vs_sampling(const CubatureRule& rule, const RecoveryConfig& config,
                                              const Evaluator& f, double true_integral,
                                              const ErrorMeasure& measure) {
    const RecoveryConfig& p = rule.provenance;
    if (p.method != config.method || p.d != config.d || p.m != config.m ||
        p.effective_variant().kind != config.effective_variant().kind || p.nu() != config.nu() ||
        p.scheme.has_value() != config.scheme.has_value() ||
        (p.scheme && p.scheme->lambda_half() != config.scheme->lambda_half()))
        throw std::invalid_argument("rule was derived from a different recovery: " + p.describe() + " vs " +
                                    config.describe());
    CubatureComparison out;
    out.cubature_error = std::fabs(true_integral - integrate(rule, f));
    out.recovery_error = lp_error(f, recover(config, f), 1.0, measure);
    out.slack = out.recovery_error - out.cubature_error;
    return out;
}

}  // namespace smolyak
