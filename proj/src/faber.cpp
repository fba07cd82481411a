#include "smolyak/faber.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace smolyak {

LevelOperator faber_level_operator(int level) {
    LevelOperator op;
    if (level == 0) {
        op.patterns = {{{0, Rational(1)}}};
        return op;
    }
    op.lattice_size = std::int64_t(1) << level;
    op.coefficient_count = op.lattice_size / 2;
    op.anchor_step = 2;
    op.patterns = {{{0, Rational(-1, 2)}, {1, Rational(1)}, {2, Rational(-1, 2)}}};
    return op;
}

LevelOperatorFamily faber_family() { return LevelOperatorFamily(UnivariateBasis::faber(), faber_level_operator); }

double lambda_functional(const Evaluator& f, const MultiIndex& k, std::span<const std::int64_t> s) {
    const int d = static_cast<int>(k.dim());
    if (static_cast<int>(s.size()) != d) throw std::invalid_argument("shift dimension mismatch");
    std::vector<std::vector<std::pair<double, double>>> axes(d);  // (point, weight)
    for (int j = 0; j < d; ++j) {
        auto op = faber_level_operator(k[j]);
        if (s[j] < 0 || s[j] >= op.coefficient_count) throw std::out_of_range("shift outside Z(k)");
        for (auto& [i, w] : op.row(s[j]))
            axes[j].emplace_back(static_cast<double>(i) / static_cast<double>(op.lattice_size), to_double(w));
    }
    std::vector<std::size_t> pos(d, 0);
    std::vector<double> x(d);
    double total = 0.0;
    while (true) {
        double w = 1.0;
        for (int j = 0; j < d; ++j) {
            x[j] = axes[j][pos[j]].first;
            w *= axes[j][pos[j]].second;
        }
        total += w * f(x);
        int j = d - 1;
        for (; j >= 0; --j) {
            if (++pos[j] < axes[j].size()) break;
            pos[j] = 0;
        }
        if (j < 0) break;
    }
    return total;
}

FaberExpansion faber_component(const Evaluator& f, const MultiIndex& k) {
    return recover_on_levels(faber_family(), f, static_cast<int>(k.dim()), {k}, false);
}

double faber_component_norm(const FaberExpansion& component, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("p must be positive");
    if (!component.basis().is_faber()) throw std::invalid_argument("not a Faber expansion");
    if (component.blocks().size() != 1) throw std::invalid_argument("expected a single level component");
    const LevelBlock& b = component.blocks().front();
    double sup = 0.0, sum = 0.0;
    for (double c : b.coefficients) {
        sup = std::max(sup, std::fabs(c));
        if (!std::isinf(p)) sum += std::pow(std::fabs(c), p);
    }
    if (std::isinf(p)) return sup;
    double cell = 1.0;
    for (int k : b.level.levels())
        if (k > 0) cell *= std::ldexp(2.0, -k) / (p + 1.0);
    return std::pow(sum * cell, 1.0 / p);
}

double faber_level_bound(const MultiIndex& k, double p, double alpha, double seminorm_bound) {
    const int u = k.support_size();
    const double root = std::isinf(p) ? 1.0 : std::pow(p + 1.0, 1.0 / p);
    return std::pow(2.0 * root, -static_cast<double>(u)) * std::exp2(-alpha * k.l1()) * seminorm_bound;
}

std::vector<MultiIndex> interior_levels(int d, int m) {
    return cumulative_index_sets(d, m, GridVariant::interior());
}

std::vector<MultiIndex> support_bounded_levels(int d, int m, int nu) {
    return cumulative_index_sets(d, m, GridVariant::support_bounded(nu));
}

FaberExpansion recover_interior(const Evaluator& f, int d, int m) {
    validate_grid_parameters(d, m, GridVariant::interior());
    return recover_on_levels(faber_family(), f, d, interior_levels(d, m), true);
}

FaberExpansion recover_support_bounded(const Evaluator& f, int d, int m, int nu) {
    validate_grid_parameters(d, m, GridVariant::support_bounded(nu));
    return recover_on_levels(faber_family(), f, d, support_bounded_levels(d, m, nu), false);
}

std::vector<std::vector<Dyadic>> dyadic_samples(const SampleSet& samples) {
    if (!std::has_single_bit(samples.denominator)) throw std::invalid_argument("sample lattice is not dyadic");
    const int level = std::countr_zero(samples.denominator);
    std::vector<std::vector<Dyadic>> out(samples.size(), std::vector<Dyadic>(samples.dim));
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (int j = 0; j < samples.dim; ++j) out[i][j] = Dyadic::make(samples.numerators[i * samples.dim + j], level);
    return out;
}

}  // namespace smolyak
