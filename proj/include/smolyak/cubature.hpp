#pragma once

#include "smolyak/expansion.hpp"
#include "smolyak/grids.hpp"
#include "smolyak/recovery.hpp"

#include <optional>
#include <string>
#include <vector>

namespace smolyak {

// Weighted point rule obtained by integrating a recovery operator term by term.
// Points are numerators over a common denominator; for Faber and r = 2 rules
// the denominator is a power of two.
struct CubatureRule {
    int dim = 0;
    std::uint64_t denominator = 1;
    std::vector<std::uint32_t> numerators;  // dim entries per point, lexicographic
    std::vector<Rational> exact_weights;
    std::vector<double> weights;
    RecoveryConfig provenance;

    std::size_t size() const { return weights.size(); }
    std::vector<double> point(std::size_t i) const;
    // Exact dyadic coordinates; throws when the denominator is not a power of two.
    std::vector<Dyadic> dyadic_point(std::size_t i) const;
    Rational weight_sum() const;
};

CubatureRule derive_rule(const RecoveryConfig& config);

// Pairwise-summed weighted sum of samples.
double integrate(const CubatureRule& rule, const Evaluator& f);

struct CubatureComparison {
    double cubature_error = 0.0;  // |I(f) - I_m(f)|
    double recovery_error = 0.0;  // ||f - R(f)||_1
    double slack = 0.0;           // recovery_error - cubature_error
};

// Both quantities for the rule and the recovery it was derived from. Throws
// std::invalid_argument when rule and config disagree.
CubatureComparison cubature_error_vs_sampling(const CubatureRule& rule, const RecoveryConfig& config,
                                              const Evaluator& f, double true_integral,
                                              const ErrorMeasure& measure);

}  // namespace smolyak
