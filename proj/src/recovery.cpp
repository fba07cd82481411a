#include "smolyak/recovery.hpp"

#include "smolyak/faber.hpp"

#include <stdexcept>

namespace smolyak {

void RecoveryConfig::validate() const {
    validate_grid_parameters(d, m, variant);
    if (method == RecoveryMethod::quasi_interpolation) {
        if (!scheme) throw std::invalid_argument("quasi-interpolation recovery needs a scheme");
        if (variant.kind == GridKind::interior)
            throw std::invalid_argument("quasi-interpolation recovery is defined for support-bounded grids only");
    }
}

GridVariant RecoveryConfig::effective_variant() const {
    return variant.kind == GridKind::full ? GridVariant::support_bounded(d) : variant;
}

int RecoveryConfig::nu() const {
    GridVariant v = effective_variant();
    return v.kind == GridKind::interior ? d : v.nu;
}

bool RecoveryConfig::zero_boundary() const {
    return method == RecoveryMethod::faber && variant.kind == GridKind::interior;
}

std::vector<MultiIndex> RecoveryConfig::levels() const {
    validate();
    return cumulative_index_sets(d, m, effective_variant());
}

LevelOperatorFamily RecoveryConfig::family() const {
    validate();
    return method == RecoveryMethod::faber ? faber_family() : qi_component_family(*scheme);
}

std::string RecoveryConfig::describe() const {
    std::string s = method == RecoveryMethod::faber ? "faber" : "qi(r=" + std::to_string(scheme ? scheme->r() : 0) + ")";
    return s + " d=" + std::to_string(d) + " m=" + std::to_string(m) + " " + to_string(effective_variant());
}

Expansion recover(const RecoveryConfig& config, const Evaluator& f) {
    return recover_on_levels(config.family(), f, config.d, config.levels(), config.zero_boundary());
}

}  // namespace smolyak
