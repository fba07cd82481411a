#pragma once

#include "smolyak/bounds.hpp"
#include "smolyak/cubature.hpp"
#include "smolyak/expansion.hpp"
#include "smolyak/grids.hpp"
#include "smolyak/laurent.hpp"
#include "smolyak/quasi_interp.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace smolyak {

// {"terms": [[exponent, "num/den"], ...]} in increasing exponent order.
std::string laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(std::string_view text);

// {"r": r, "lambda": ["num/den", ...]} with lambda(0) first.
std::string scheme_to_json(const QIScheme& s);
QIScheme scheme_from_json(std::string_view text);

// "linear", "cubic", "quintic", or "file:PATH" holding scheme JSON.
QIScheme load_scheme(std::string_view spec);

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row);
};

enum class Format { csv, json };

Format parse_format(std::string_view name);

// Doubles use 17 significant digits so identical runs give identical bytes.
void write_table(std::ostream& out, const Table& table, Format format);
std::string format_double(double v);

// x_1..x_d as "num/2^k", their decimal values, and the number of generating pairs.
Table grid_table(int d, const std::vector<DyadicPoint>& points);
// k_1..k_d, s_1..s_d, coefficient
Table expansion_table(const Expansion& e);
// x_1..x_d, weight, weight_rational
Table rule_table(const CubatureRule& rule);
// theorem, side, form, alpha, p, d, nu, m, value (NaN rows are skipped)
void append_bounds(Table& table, const ApproxParams& params, const std::vector<BoundReport>& reports);
Table bounds_header();

}  // namespace smolyak
