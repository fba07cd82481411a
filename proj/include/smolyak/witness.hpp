#pragma once

#include "smolyak/expansion.hpp"
#include "smolyak/grids.hpp"

#include <optional>

namespace smolyak {

// Parameters of a fooling function. The interior variant builds f_{m,n}; the
// support-bounded variant builds the sum of f^u_{m,n} over subsets u of the
// first nu coordinates, so at most nu variables are active.
struct WitnessConfig {
    int d = 1;
    int m = 1;
    int n = 41;
    double alpha = 2.0;
    GridVariant variant = GridVariant::interior();

    // n defaults to m + 40.
    static WitnessConfig make(int d, int m, double alpha, GridVariant variant, int n = -1);
    // Throws std::invalid_argument unless 1 <= m <= n, 0 < alpha <= 2 and the variant is valid.
    void validate() const;
    // Largest number of coordinates a single term depends on.
    int active() const;
};

// M_4(2^(k+2) frac(x - s 2^-k)): the cubic bump supported on [s, s+1] 2^-k.
double bump(int k, std::int64_t s, double x);
// The same at an exact rational point.
Rational bump_exact(int k, std::int64_t s, const Rational& x);

struct FoolingFunction {
    WitnessConfig config;
    Evaluator evaluate;
    double l1 = 0.0;                   // closed-form L1 norm
    std::optional<Rational> exact_l1;  // present when alpha is an integer
};

FoolingFunction fooling_function(const WitnessConfig& config);

// Closed-form L1 norm of the fooling function for the given n (n may exceed config.n).
double witness_l1(const WitnessConfig& config, int n);

// Exact rational test: every term of the fooling function vanishes at x.
bool vanishes_exactly(const WitnessConfig& config, const std::vector<Dyadic>& x);

struct HolderReport {
    std::size_t trials = 0;
    std::size_t failures = 0;
    double max_ratio = 0.0;  // largest |Delta^{2,u}_h f(x)| / (prod_{j in u} h_j^alpha + tolerance)
    bool pass = false;
};

// Random (x, h, u) with u possibly empty; h_j drawn log-uniformly from
// [2^-20, 1]. A trial fails when |Delta^{2,u}_h f(x)| exceeds
// prod h_j^alpha + tolerance.
HolderReport holder_membership_spotcheck(const Evaluator& f, int d, double alpha, std::size_t trials,
                                         std::uint64_t seed = 7, double tolerance = 1e-9);

struct LowerBoundDemonstration {
    double witness_norm = 0.0;     // L1 norm at config.n, a lower estimate of the Lp norm
    double limit = 0.0;            // the n -> infinity value of the same closed form
    double tail_bound = 0.0;       // documented bound on limit - witness_norm
    double theorem_lower = 0.0;    // refined lower bound from the bounds module
    double certified_lower = 0.0;  // the part of theorem_lower the witness construction supports
    double limit_gap = 0.0;        // limit - certified_lower, known in closed form
    bool partial_sum_ok = false;   // witness_norm >= certified_lower
    bool limit_ok = false;         // limit - certified_lower equals the closed-form gap
    bool theorem_supported = false;  // witness_norm >= theorem_lower
};

LowerBoundDemonstration lower_bound_demonstration(const WitnessConfig& config, double p);

}  // namespace smolyak
