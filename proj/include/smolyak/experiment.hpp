#pragma once

#include "smolyak/bounds.hpp"
#include "smolyak/corpus.hpp"
#include "smolyak/grids.hpp"
#include "smolyak/io.hpp"
#include "smolyak/recovery.hpp"

#include <optional>
#include <string>
#include <vector>

namespace smolyak {

enum class Mode { grid, recover, integrate, bounds, witness, convergence };

Mode parse_mode(std::string_view name);

// "full", "interior" or "nu" (support-bounded with the given nu).
GridVariant parse_variant(std::string_view name, int nu);

struct ExperimentSpec {
    Mode mode = Mode::grid;
    int d = 2;
    int m = 3;
    int m_max = -1;  // end of the m sweep; -1 means m only
    int nu = 1;
    GridVariant variant = GridVariant::full();
    double alpha = 2.0;
    double p = kInfinity;
    std::string scheme;  // empty: Faber; else linear, cubic, quintic or file:PATH
    std::string corpus = "prodsine";
    CorpusOptions corpus_options;
    std::uint64_t seed = 1;
    std::size_t samples = 200000;  // Monte Carlo budget; also caps tensor grids
    int witness_n = -1;            // -1: m + 40
    std::size_t holder_trials = 10000;
    double tolerance = 1e-9;       // relative slack on upper-bound assertions
    std::string rule_out;          // integrate: optional rule export path
    Format format = Format::csv;

    // Throws std::invalid_argument when the settings are inconsistent.
    void validate() const;
    int m_last() const { return m_max < 0 ? m : m_max; }
    RecoveryConfig recovery(int level) const;
};

struct ExperimentResult {
    int status = 0;  // 0 ok, 3 a verification assertion failed
    Table table;
    std::vector<std::string> messages;
};

// Never throws for a valid spec; call validate() first.
ExperimentResult run(const ExperimentSpec& spec);

struct ConvergenceRow {
    int m = 0;
    std::size_t sample_count = 0;
    double error = 0.0;
    double upper_refined = 0.0;
    double upper_binomial = 0.0;  // NaN when the binomial form's hypothesis fails
    double lower = 0.0;           // NaN for quasi-interpolation
    double ratio = 0.0;           // error / upper_refined
};

// Error measure used by the convergence mode: a Gauss tensor grid at level m + 3
// per coordinate for d <= 3, capped at spec.samples * 8 points, else Monte Carlo.
ErrorMeasure default_error_measure(const ExperimentSpec& spec, int m);

// One row per m; upper bounds are scaled by the corpus function's seminorm bound.
std::vector<ConvergenceRow> convergence_rows(const ExperimentSpec& spec, const CorpusFunction& f);

// Whether the function's certificate matches the theorem behind these settings, so
// that its rows may be asserted against the upper bound.
bool certified_for(const ExperimentSpec& spec, const CorpusFunction& f);

// Difference order used by the selected method: 2 for Faber, 2r otherwise.
int difference_order(const ExperimentSpec& spec);

// Least-squares slope of log2(error / m^(dims - 1)) against m.
double decay_slope(const std::vector<ConvergenceRow>& rows, int dims);

}  // namespace smolyak
