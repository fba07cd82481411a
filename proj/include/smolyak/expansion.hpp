#pragma once

#include "smolyak/grids.hpp"
#include "smolyak/rational.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace smolyak {

using Evaluator = std::function<double(std::span<const double>)>;

// One univariate family indexed by (level, shift): Faber hats, or periodic
// B-splines of order 2r.
class UnivariateBasis {
public:
    static UnivariateBasis faber() { return UnivariateBasis(0); }
    static UnivariateBasis spline(int r);

    bool is_faber() const noexcept { return r_ == 0; }
    int r() const noexcept { return r_; }
    std::int64_t shift_count(int level) const;
    double value(int level, std::int64_t shift, double x) const;
    // Exact integral over one period of any basis function of the level.
    Rational integral(int level) const;
    // Number of equal cells per period on which each level function is a polynomial.
    std::int64_t cells(int level) const;

    struct Active {
        std::vector<std::int64_t> shifts;
        std::vector<double> values;
    };
    // Basis functions of the level that do not vanish at x.
    void active(int level, double x, Active& out) const;

    friend bool operator==(const UnivariateBasis&, const UnivariateBasis&) = default;

private:
    explicit UnivariateBasis(int r) : r_(r) {}
    int r_ = 0;
};

// Linear map from samples f(i / lattice_size), i < lattice_size, to the
// coefficients of one level. Coefficient s reads lattice indices
// (anchor_step * s + offset) mod lattice_size with weights taken from
// patterns[s % patterns.size()].
struct LevelOperator {
    std::int64_t lattice_size = 1;
    std::int64_t coefficient_count = 1;
    std::int64_t anchor_step = 1;
    std::vector<std::vector<std::pair<int, Rational>>> patterns;

    std::vector<std::pair<std::int64_t, Rational>> row(std::int64_t s) const;
    std::size_t max_stencil_size() const;
};

// Per-level operators of one hierarchical decomposition, built on demand.
class LevelOperatorFamily {
public:
    LevelOperatorFamily(UnivariateBasis basis, std::function<LevelOperator(int)> make);

    const UnivariateBasis& basis() const noexcept { return basis_; }
    const LevelOperator& at(int level) const;

private:
    UnivariateBasis basis_;
    std::function<LevelOperator(int)> make_;
    mutable std::vector<LevelOperator> cache_;
};

// Sample points requested by a recovery, as numerators over a common denominator.
struct SampleSet {
    int dim = 0;
    std::uint64_t denominator = 1;
    std::vector<std::uint32_t> numerators;  // dim entries per point

    std::size_t size() const { return dim == 0 ? 0 : numerators.size() / dim; }
};

// Memoizes f on lattice points i / denominator, so each point is evaluated once.
class SampleCache {
public:
    SampleCache(const Evaluator& f, int dim, std::uint64_t denominator);

    double operator()(std::span<const std::uint32_t> numerators);
    SampleSet samples() const;
    std::uint64_t denominator() const noexcept { return denominator_; }

private:
    const Evaluator& f_;
    int dim_;
    std::uint64_t denominator_;
    std::string key_;
    std::vector<double> point_;
    std::unordered_map<std::string, double> values_;
};

struct LevelBlock {
    MultiIndex level;
    std::vector<double> coefficients;  // row-major over shifts, last coordinate fastest
};

// Evaluable sparse expansion sum_k sum_s c_{k,s} prod_j basis_{k_j,s_j}(x_j).
class Expansion {
public:
    Expansion(UnivariateBasis basis, int dim) : basis_(basis), dim_(dim) {}

    const UnivariateBasis& basis() const noexcept { return basis_; }
    int dim() const noexcept { return dim_; }
    const std::vector<LevelBlock>& blocks() const noexcept { return blocks_; }
    std::size_t term_count() const;
    int max_level() const;

    // Adds to an existing block of the same level, else appends.
    void add_block(const MultiIndex& k, std::vector<double> coefficients);
    double coefficient(const MultiIndex& k, std::span<const std::int64_t> s) const;
    std::vector<std::int64_t> block_shape(const MultiIndex& k) const;

    double evaluate(std::span<const double> x) const;

    // activity[level] for one coordinate; lets tensor-grid sweeps reuse work.
    using AxisActivity = std::vector<UnivariateBasis::Active>;
    AxisActivity axis_activity(double x, int max_level) const;
    double evaluate(std::span<const AxisActivity* const> axes) const;

    const SampleSet& samples() const noexcept { return samples_; }
    void set_samples(SampleSet s) { samples_ = std::move(s); }

private:
    UnivariateBasis basis_;
    int dim_;
    std::vector<LevelBlock> blocks_;
    SampleSet samples_;
};

// Applies the family's level operators to samples of f for every listed k.
// zero_boundary treats samples with a zero coordinate as 0 without evaluating f.
Expansion recover_on_levels(const LevelOperatorFamily& family, const Evaluator& f, int dim,
                            const std::vector<MultiIndex>& levels, bool zero_boundary);

struct ErrorMeasure {
    enum class Kind { tensor_grid, monte_carlo };
    Kind kind = Kind::tensor_grid;
    std::int64_t cells = 64;      // per coordinate
    std::vector<std::int64_t> axis_cells;  // overrides `cells` per coordinate when nonempty
    int gauss_points = 2;         // per cell; 0 samples the cell corners i / cells
    std::size_t samples = 200000;
    std::uint64_t seed = 1;

    static ErrorMeasure tensor(std::int64_t cells, int gauss_points);
    static ErrorMeasure monte_carlo(std::size_t samples, std::uint64_t seed);
};

// p = infinity is passed as std::numeric_limits<double>::infinity(); the sup
// is then the max over the evaluation set.
double lp_norm(const Evaluator& f, int dim, double p, const ErrorMeasure& measure);
double lp_norm(const Expansion& g, double p, const ErrorMeasure& measure);
double lp_error(const Evaluator& f, const Expansion& g, double p, const ErrorMeasure& measure);

}  // namespace smolyak
