#include "smolyak/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace smolyak {

using nlohmann::json;

std::string laurent_to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(json::array({e, to_string(c)}));
    return json{{"terms", terms}}.dump();
}

LaurentPoly laurent_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad polynomial JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("polynomial JSON needs a \"terms\" array");
    LaurentPoly p;
    for (const auto& t : j["terms"]) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string())
            throw std::invalid_argument("polynomial term must be [exponent, \"num/den\"]");
        p += LaurentPoly::monomial(t[0].get<int>(), parse_rational(t[1].get<std::string>()));
    }
    return p;
}

std::string scheme_to_json(const QIScheme& s) {
    json lambda = json::array();
    for (const auto& q : s.lambda_half()) lambda.push_back(to_string(q));
    return json{{"r", s.r()}, {"lambda", lambda}}.dump();
}

QIScheme scheme_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw SchemeError(std::string("bad scheme JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("r") || !j["r"].is_number_integer() || !j.contains("lambda") ||
        !j["lambda"].is_array() || j["lambda"].empty())
        throw SchemeError("scheme JSON needs integer \"r\" and a nonempty \"lambda\" array");
    std::vector<Rational> half;
    for (const auto& q : j["lambda"]) {
        if (!q.is_string()) throw SchemeError("lambda entries must be \"num/den\" strings");
        half.push_back(parse_rational(q.get<std::string>()));
    }
    return QIScheme::from_half(j["r"].get<int>(), half);
}

QIScheme load_scheme(std::string_view spec) {
    if (spec.starts_with("file:")) {
        std::string path(spec.substr(5));
        std::ifstream in(path);
        if (!in) throw SchemeError("cannot read scheme file " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        return scheme_from_json(buf.str());
    }
    return QIScheme::builtin(spec);
}

void Table::add(std::vector<Cell> row) {
    if (row.size() != header.size()) throw std::logic_error("table row width mismatch");
    rows.push_back(std::move(row));
}

Format parse_format(std::string_view name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw std::invalid_argument("format must be csv or json");
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string cell_text(const Cell& c) {
    if (auto i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
    if (auto d = std::get_if<double>(&c)) return format_double(*d);
    return std::get<std::string>(c);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

void write_table(std::ostream& out, const Table& table, Format format) {
    if (format == Format::csv) {
        for (std::size_t i = 0; i < table.header.size(); ++i) out << (i ? "," : "") << csv_field(table.header[i]);
        out << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(cell_text(row[i]));
            out << '\n';
        }
        return;
    }
    // JSON lines; non-finite doubles become strings
    for (const auto& row : table.rows) {
        json j = json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            const Cell& c = row[i];
            if (auto v = std::get_if<std::int64_t>(&c))
                j[table.header[i]] = *v;
            else if (auto d = std::get_if<double>(&c))
                j[table.header[i]] = std::isfinite(*d) ? json(*d) : json(format_double(*d));
            else
                j[table.header[i]] = std::get<std::string>(c);
        }
        out << j.dump() << '\n';
    }
}

Table grid_table(int d, const std::vector<DyadicPoint>& points) {
    Table t;
    for (int j = 1; j <= d; ++j) t.header.push_back("x" + std::to_string(j));
    for (int j = 1; j <= d; ++j) t.header.push_back("x" + std::to_string(j) + "_decimal");
    t.header.push_back("generators");
    for (const auto& p : points) {
        std::vector<Cell> row;
        for (const auto& x : p.coordinates) row.emplace_back(to_string(x));
        for (const auto& x : p.coordinates) row.emplace_back(x.value());
        row.emplace_back(static_cast<std::int64_t>(p.origins.size()));
        t.add(std::move(row));
    }
    return t;
}

Table expansion_table(const Expansion& e) {
    Table t;
    const int d = e.dim();
    for (int j = 1; j <= d; ++j) t.header.push_back("k" + std::to_string(j));
    for (int j = 1; j <= d; ++j) t.header.push_back("s" + std::to_string(j));
    t.header.push_back("coefficient");
    auto blocks = e.blocks();
    std::sort(blocks.begin(), blocks.end(), [](const LevelBlock& a, const LevelBlock& b) { return a.level < b.level; });
    std::vector<std::int64_t> s(d);
    for (const auto& b : blocks) {
        const auto shape = e.block_shape(b.level);
        std::fill(s.begin(), s.end(), 0);
        for (double c : b.coefficients) {
            std::vector<Cell> row;
            for (int j = 0; j < d; ++j) row.emplace_back(static_cast<std::int64_t>(b.level[j]));
            for (int j = 0; j < d; ++j) row.emplace_back(s[j]);
            row.emplace_back(c);
            t.add(std::move(row));
            for (int j = d - 1; j >= 0; --j) {
                if (++s[j] < shape[j]) break;
                s[j] = 0;
            }
        }
    }
    return t;
}

Table rule_table(const CubatureRule& rule) {
    Table t;
    for (int j = 1; j <= rule.dim; ++j) t.header.push_back("x" + std::to_string(j));
    t.header.push_back("weight");
    t.header.push_back("weight_rational");
    for (std::size_t i = 0; i < rule.size(); ++i) {
        std::vector<Cell> row;
        for (double x : rule.point(i)) row.emplace_back(x);
        row.emplace_back(rule.weights[i]);
        row.emplace_back(to_string(rule.exact_weights[i]));
        t.add(std::move(row));
    }
    return t;
}

Table bounds_header() {
    Table t;
    t.header = {"theorem", "side", "form", "alpha", "p", "d", "nu", "m", "value"};
    return t;
}

void append_bounds(Table& table, const ApproxParams& q, const std::vector<BoundReport>& reports) {
    for (const auto& r : reports) {
        if (!r.defined) continue;
        table.add({to_string(r.theorem), to_string(r.side), to_string(r.form), q.alpha, q.p,
                   static_cast<std::int64_t>(q.d), static_cast<std::int64_t>(q.nu), static_cast<std::int64_t>(q.m),
                   r.value});
    }
}

}  // namespace smolyak
