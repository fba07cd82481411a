#pragma once

#include "smolyak/expansion.hpp"
#include "smolyak/grids.hpp"
#include "smolyak/quasi_interp.hpp"

#include <optional>
#include <string>

namespace smolyak {

enum class RecoveryMethod { faber, quasi_interpolation };

// One configured sampling recovery operator. The full variant is run as the
// support-bounded operator with nu = d.
struct RecoveryConfig {
    RecoveryMethod method = RecoveryMethod::faber;
    int d = 1;
    int m = 0;
    GridVariant variant = GridVariant::support_bounded(1);
    std::optional<QIScheme> scheme;  // required for quasi_interpolation

    // Throws std::invalid_argument on inconsistent settings.
    void validate() const;
    GridVariant effective_variant() const;
    int nu() const;
    bool zero_boundary() const;
    std::vector<MultiIndex> levels() const;
    LevelOperatorFamily family() const;
    std::string describe() const;
};

Expansion recover(const RecoveryConfig& config, const Evaluator& f);

}  // namespace smolyak
