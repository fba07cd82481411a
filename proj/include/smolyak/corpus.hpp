#pragma once

#include "smolyak/expansion.hpp"
#include "smolyak/grids.hpp"

#include <optional>
#include <string>
#include <vector>

namespace smolyak {

struct CorpusOptions {
    int nu = 2;                   // few-active: number of active coordinates
    double value = 1.0;           // constant
    std::vector<int> level;       // hat / bspline: per-coordinate level (defaults to 1)
    std::vector<std::int64_t> shift;  // hat / bspline: per-coordinate shift (defaults to 0)
    int r = 2;                    // bspline half-order
    int terms = 6;                // trig: number of random modes
    int max_frequency = 4;        // trig
    std::uint64_t seed = 1;       // trig
};

// A built-in test function together with the class data the bound checks need.
// seminorm_bound certifies max over u of |f|_u for mixed differences of order
// difference_order at smoothness certified_alpha (u = empty is the sup norm).
struct CorpusFunction {
    std::string name;
    int d = 1;
    Evaluator evaluate;
    double certified_alpha = 0.0;
    int difference_order = 2;
    double seminorm_bound = 0.0;  // infinity when the function is not in the class
    double true_integral = 0.0;
    std::optional<Rational> exact_integral;
    std::vector<int> active_variables;
    bool zero_boundary = false;  // vanishes whenever some coordinate is 0
    std::string certificate;     // how seminorm_bound was obtained
};

// Names accepted by make_corpus_function.
std::vector<std::string> corpus_names();

// Throws std::invalid_argument for unknown names or parameters outside the
// function's certified range.
CorpusFunction make_corpus_function(const std::string& name, int d, double alpha, int difference_order,
                                    const CorpusOptions& options = {});

// sup over h in (0, 1] of min(a h^e, b) / h^alpha, for 0 < alpha <= e.
double capped_ratio(double a, double e, double b, double alpha);

// sup over h in (0, 1] of (2 |sin(pi h)|)^order / h^alpha: the exact value
// (2 pi)^order at alpha = order, else a dense maximum inflated by 1.1.
double sine_difference_ratio(int order, double alpha);

}  // namespace smolyak
