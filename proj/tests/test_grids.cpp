#include "smolyak/grids.hpp"

#include <doctest.h>

#include <set>

using namespace smolyak;

namespace {

std::vector<MultiIndex> indices(std::vector<std::vector<int>> v) {
    std::vector<MultiIndex> out;
    for (auto& k : v) out.emplace_back(std::move(k));
    return out;
}

// Brute force over the full box [0, m]^d: an oracle independent of the
// composition generator.
std::vector<MultiIndex> box_filter(int d, int m, const GridVariant& v) {
    std::vector<MultiIndex> out;
    std::vector<int> k(d, 0);
    while (true) {
        MultiIndex mi(k);
        bool ok = mi.l1() == m;
        if (v.kind != GridKind::support_bounded) {
            for (int x : k) ok = ok && x >= 1;
        } else {
            ok = ok && mi.support_size() <= v.nu;
        }
        if (ok) out.push_back(mi);
        int j = d - 1;
        while (j >= 0 && k[j] == m) k[j--] = 0;
        if (j < 0) break;
        ++k[j];
    }
    return out;
}

std::set<std::vector<double>> brute_points(int d, int m, const GridVariant& v) {
    std::set<std::vector<double>> pts;
    for (const auto& k : box_filter(d, m, v)) {
        std::vector<std::int64_t> s(d, 0), hi(d);
        const bool interior = v.kind == GridKind::interior;
        for (int j = 0; j < d; ++j) {
            hi[j] = (std::int64_t(1) << k[j]) - 1;
            s[j] = interior ? 1 : 0;
        }
        while (true) {
            std::vector<double> x(d);
            for (int j = 0; j < d; ++j) x[j] = std::ldexp(double(s[j]), -k[j]);
            pts.insert(x);
            int j = d - 1;
            while (j >= 0 && s[j] == hi[j]) s[j--] = interior ? 1 : 0;
            if (j < 0) break;
            ++s[j];
        }
    }
    return pts;
}

}  // namespace

TEST_SUITE("grids") {
TEST_CASE("multi-index statistics") {
    MultiIndex k({3, 0, 2, 0});
    CHECK(k.l1() == 5);
    CHECK(k.max() == 3);
    CHECK(k.support_size() == 2);
    CHECK(k.support() == std::vector<int>{0, 2});
    CHECK(to_string(k) == "(3,0,2,0)");
}

TEST_CASE("dyadics are reduced") {
    Dyadic x = Dyadic::make(4, 3);
    CHECK(x.numerator == 1);
    CHECK(x.level == 1);
    CHECK(Dyadic::make(0, 5).level == 0);
    CHECK(Dyadic::make(3, 2).value() == 0.75);
    CHECK(Dyadic::make(3, 2).exact() == Rational(3, 4));
}

TEST_CASE("level index sets") {
    CHECK(level_index_sets(2, 3, GridVariant::interior()) == indices({{1, 2}, {2, 1}}));
    CHECK(level_index_sets(3, 2, GridVariant::support_bounded(1)) ==
          indices({{0, 0, 2}, {0, 2, 0}, {2, 0, 0}}));
    CHECK(level_index_sets(3, 0, GridVariant::support_bounded(1)) == indices({{0, 0, 0}}));
    CHECK(level_index_sets(2, 1, GridVariant::interior()).empty());
    for (int d = 1; d <= 4; ++d)
        for (int m = 0; m <= 6; ++m) {
            CHECK(level_index_sets(d, m, GridVariant::interior()) == box_filter(d, m, GridVariant::interior()));
            CHECK(level_index_sets(d, m, GridVariant::full()) == box_filter(d, m, GridVariant::full()));
            for (int nu = 1; nu <= d; ++nu)
                CHECK(level_index_sets(d, m, GridVariant::support_bounded(nu)) ==
                      box_filter(d, m, GridVariant::support_bounded(nu)));
        }
    CHECK(cumulative_index_sets(2, 2, GridVariant::support_bounded(2)).size() == 6);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate_grid_parameters(0, 1, GridVariant::interior()), std::invalid_argument);
    CHECK_THROWS_AS(validate_grid_parameters(2, -1, GridVariant::interior()), std::invalid_argument);
    CHECK_THROWS_AS(validate_grid_parameters(2, 1, GridVariant::support_bounded(3)), std::invalid_argument);
    CHECK_THROWS_AS(validate_grid_parameters(2, 1, GridVariant::support_bounded(0)), std::invalid_argument);
    CHECK_NOTHROW(validate_grid_parameters(2, 1, GridVariant::support_bounded(2)));
}

TEST_CASE("shifts") {
    CHECK(grid_shifts(2, true) == std::vector<std::int64_t>{1, 2, 3});
    CHECK(grid_shifts(2, false) == std::vector<std::int64_t>{0, 1, 2, 3});
    CHECK(grid_shifts(0, false) == std::vector<std::int64_t>{0});
    CHECK(grid_shifts(0, true).empty());
}

TEST_CASE("small grids by hand") {
    auto full = enumerate_grid(2, 2, GridVariant::full());
    REQUIRE(full.size() == 4);
    CHECK(full[0].coordinates[0].value() == 0.0);
    CHECK(full[3].coordinates[0].value() == 0.5);
    CHECK(full[3].coordinates[1].value() == 0.5);

    auto sb = enumerate_grid(1, 0, GridVariant::support_bounded(1));
    REQUIRE(sb.size() == 1);
    CHECK(sb[0].coordinates[0].value() == 0.0);

    CHECK(enumerate_grid(2, 1, GridVariant::interior()).empty());
    CHECK(enumerate_grid(2, 2, GridVariant::interior()).size() == 1);

    // d = 2, m = 3 interior: 6 generating pairs, (1/2, 1/2) produced twice
    auto g = enumerate_grid(2, 3, GridVariant::interior());
    CHECK(g.size() == 5);
    std::size_t pairs = 0;
    for (const auto& p : g) pairs += p.origins.size();
    CHECK(pairs == 6);
    CHECK(contains_point(g, {Dyadic::make(1, 1), Dyadic::make(1, 1)}));
    CHECK(contains_point(g, {Dyadic::make(1, 2), Dyadic::make(1, 1)}));
    CHECK_FALSE(contains_point(g, {Dyadic::make(1, 2), Dyadic::make(1, 2)}));
}

TEST_CASE("coordinates are unit-interval dyadics and lexicographic") {
    for (auto v : {GridVariant::interior(), GridVariant::full(), GridVariant::support_bounded(2)}) {
        auto g = enumerate_grid(3, 5, v);
        for (std::size_t i = 0; i < g.size(); ++i) {
            for (const auto& x : g[i].coordinates) {
                CHECK(x.value() >= 0.0);
                CHECK(x.value() < 1.0);
            }
            for (const auto& o : g[i].origins) {
                CHECK(o.k.l1() == 5);
                for (int j = 0; j < 3; ++j) {
                    CHECK(o.s[j] >= 0);
                    CHECK(o.s[j] < (std::int64_t(1) << o.k[j]));
                }
            }
            if (i > 0) {
                std::vector<double> a, b;
                for (const auto& x : g[i - 1].coordinates) a.push_back(x.value());
                for (const auto& x : g[i].coordinates) b.push_back(x.value());
                CHECK(a < b);
            }
        }
    }
}

TEST_CASE("enumeration matches brute force") {
    for (int d = 1; d <= 3; ++d)
        for (int m = 0; m <= 6; ++m) {
            std::vector<GridVariant> variants{GridVariant::interior(), GridVariant::full()};
            for (int nu = 1; nu <= d; ++nu) variants.push_back(GridVariant::support_bounded(nu));
            for (const auto& v : variants) {
                auto g = enumerate_grid(d, m, v);
                auto oracle = brute_points(d, m, v);
                CHECK(g.size() == oracle.size());
                for (const auto& p : g) {
                    std::vector<double> x;
                    for (const auto& c : p.coordinates) x.push_back(c.value());
                    CHECK(oracle.count(x) == 1);
                }
            }
        }
}

TEST_CASE("cardinalities") {
    GridCardinality c = grid_cardinality(2, 3, GridVariant::interior());
    CHECK(c.pairs == 6);
    CHECK(c.formula_count == 6);
    CHECK(c.distinct_points == 5);
    CHECK(c.bound == 16);

    c = grid_cardinality(2, 2, GridVariant::interior());
    CHECK(c.pairs == 1);
    CHECK(c.bound == 4);

    c = grid_cardinality(3, 2, GridVariant::support_bounded(1));
    CHECK(c.bound == 12);
    // k = (2,0,0) etc. with s_1 in {1,2,3}
    CHECK(c.formula_count == 9);
    CHECK(c.distinct_points == brute_points(3, 2, GridVariant::support_bounded(1)).size());

    for (int d = 1; d <= 3; ++d)
        for (int m = 0; m <= 7; ++m)
            for (auto v : {GridVariant::interior(), GridVariant::support_bounded(1), GridVariant::support_bounded(d)}) {
                GridCardinality a = grid_cardinality(d, m, v), b = enumerate_grid_counts(d, m, v);
                CHECK(a.pairs == b.pairs);
                CHECK(a.formula_count == b.formula_count);
                CHECK(a.distinct_points == b.distinct_points);
                CHECK(a.distinct_points == BigInt(enumerate_grid(d, m, v).size()));
            }
}

TEST_CASE("formula generators") {
    GridOrigin o{MultiIndex({2, 0}), {1, 0}};
    CHECK(counted_by_formula(o, GridVariant::support_bounded(1)));
    o.s = {0, 0};
    CHECK_FALSE(counted_by_formula(o, GridVariant::support_bounded(1)));
}
}
