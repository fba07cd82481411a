#pragma once

#include "smolyak/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace smolyak {

class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> levels);

    std::size_t dim() const noexcept { return levels_.size(); }
    int operator[](std::size_t j) const { return levels_[j]; }
    const std::vector<int>& levels() const noexcept { return levels_; }
    int l1() const noexcept;
    int max() const noexcept;
    int support_size() const noexcept;
    std::vector<int> support() const;

    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<int> levels_;
};

std::string to_string(const MultiIndex& k);

// numerator / 2^level in lowest terms (odd numerator, or 0 with level 0).
struct Dyadic {
    std::uint64_t numerator = 0;
    int level = 0;

    static Dyadic make(std::uint64_t numerator, int level);
    double value() const;
    Rational exact() const;
    friend bool operator==(const Dyadic&, const Dyadic&) = default;
    // By value, so sorted points are in increasing coordinate order.
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
        const int top = a.level > b.level ? a.level : b.level;
        const unsigned __int128 x = static_cast<unsigned __int128>(a.numerator) << (top - a.level);
        const unsigned __int128 y = static_cast<unsigned __int128>(b.numerator) << (top - b.level);
        return x <=> y;
    }
};

std::string to_string(const Dyadic& x);  // "num/2^k"

struct GridOrigin {
    MultiIndex k;
    std::vector<std::int64_t> s;
};

struct DyadicPoint {
    std::vector<Dyadic> coordinates;
    std::vector<GridOrigin> origins;  // every (k, s) producing these coordinates
};

enum class GridKind { full, interior, support_bounded };

struct GridVariant {
    GridKind kind = GridKind::full;
    int nu = 0;  // only for support_bounded

    static GridVariant full() { return {GridKind::full, 0}; }
    static GridVariant interior() { return {GridKind::interior, 0}; }
    static GridVariant support_bounded(int nu) { return {GridKind::support_bounded, nu}; }
};

std::string to_string(const GridVariant& v);

// Throws std::invalid_argument for d < 1, m < 0 or nu outside [1, d].
void validate_grid_parameters(int d, int m, const GridVariant& v);

// Multi-indices with |k|_1 == m admitted by the variant (k in N^d for full and
// interior, k in Z^d_+ with |supp k| <= nu otherwise), in lexicographic order.
std::vector<MultiIndex> level_index_sets(int d, int m, const GridVariant& v);

// Union of level_index_sets over 0..m.
std::vector<MultiIndex> cumulative_index_sets(int d, int m, const GridVariant& v);

// Lattice shifts of a level: interior uses 1..2^k-1, otherwise 0..2^k-1.
std::vector<std::int64_t> grid_shifts(int level, bool interior);

// Distinct points of the grid, lexicographic in the coordinates, with all
// generating (k, s) pairs attached.
std::vector<DyadicPoint> enumerate_grid(int d, int m, const GridVariant& v);

bool contains_point(const std::vector<DyadicPoint>& grid, const std::vector<Dyadic>& x);

struct GridCardinality {
    BigInt pairs;            // all generating (k, s) pairs of the definition
    BigInt formula_count;    // the closed summation formula
    BigInt distinct_points;  // points after merging coincident coordinates
    BigInt bound;            // 2^m C(m-1, d-1), resp. 2^m C(d, nu) C(m-1, nu-1)
};

// For the support-bounded grid the closed formula counts pairs with s_j >= 1
// on supp(k), the non-redundant generators. formula_count may therefore differ
// from pairs, and both may exceed distinct_points.
GridCardinality grid_cardinality(int d, int m, const GridVariant& v);

// Brute-force enumeration without materialising origins: walks every
// generating pair and deduplicates packed coordinates. Same fields as
// grid_cardinality except bound, which is left 0.
GridCardinality enumerate_grid_counts(int d, int m, const GridVariant& v);

// Whether (k, s) is one of the generators counted by the closed formula.
bool counted_by_formula(const GridOrigin& o, const GridVariant& v);

}  // namespace smolyak
