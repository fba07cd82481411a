#pragma once

#include "smolyak/expansion.hpp"
#include "smolyak/grids.hpp"

#include <span>

namespace smolyak {

using FaberExpansion = Expansion;

// Level 0: f(0). Level k >= 1, shift s: -1/2 times the second difference of
// f at 2s/2^k with step 1/2^k, i.e. samples at lattice indices 2s, 2s+1, 2s+2.
LevelOperator faber_level_operator(int level);
LevelOperatorFamily faber_family();

// Tensor product of the univariate functionals, sampling f directly.
double lambda_functional(const Evaluator& f, const MultiIndex& k, std::span<const std::int64_t> s);

// q_k(f): all coefficients of level k.
FaberExpansion faber_component(const Evaluator& f, const MultiIndex& k);

// ||q_k(f)||_p in closed form: hats of one level have disjoint interiors, so
// the p-th power integrates term by term (int phi^p = 2^(1-k) / (p+1) for k >= 1).
double faber_component_norm(const FaberExpansion& component, double p);

// 2^-|u| (p+1)^(-|u|/p) 2^(-alpha |k|_1) B with u = supp(k).
double faber_level_bound(const MultiIndex& k, double p, double alpha, double seminorm_bound);

// Truncated Faber series over k in N^d, |k|_1 <= m. Samples with a zero
// coordinate are taken as 0, so only interior grid points are evaluated.
// Returns the zero expansion for m < d.
FaberExpansion recover_interior(const Evaluator& f, int d, int m);

// Truncated Faber series over k in Z^d_+ with |supp k| <= nu, |k|_1 <= m.
FaberExpansion recover_support_bounded(const Evaluator& f, int d, int m, int nu);

// Level set used by recover_support_bounded.
std::vector<MultiIndex> support_bounded_levels(int d, int m, int nu);

// Level set used by recover_interior.
std::vector<MultiIndex> interior_levels(int d, int m);

// Sample points of a Faber recovery as exact dyadic coordinates.
std::vector<std::vector<Dyadic>> dyadic_samples(const SampleSet& samples);

}  // namespace smolyak
