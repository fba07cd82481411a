#include "smolyak/grids.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <stdexcept>

namespace smolyak {

MultiIndex::MultiIndex(std::vector<int> levels) : levels_(std::move(levels)) {
    for (int l : levels_)
        if (l < 0) throw std::invalid_argument("multi-index levels must be nonnegative");
}

int MultiIndex::l1() const noexcept { return std::accumulate(levels_.begin(), levels_.end(), 0); }

int MultiIndex::max() const noexcept {
    int m = 0;
    for (int l : levels_) m = std::max(m, l);
    return m;
}

int MultiIndex::support_size() const noexcept {
    return static_cast<int>(std::count_if(levels_.begin(), levels_.end(), [](int l) { return l != 0; }));
}

std::vector<int> MultiIndex::support() const {
    std::vector<int> u;
    for (std::size_t j = 0; j < levels_.size(); ++j)
        if (levels_[j] != 0) u.push_back(static_cast<int>(j));
    return u;
}

std::string to_string(const MultiIndex& k) {
    std::string s = "(";
    for (std::size_t j = 0; j < k.dim(); ++j) {
        if (j) s += ",";
        s += std::to_string(k[j]);
    }
    return s + ")";
}

Dyadic Dyadic::make(std::uint64_t numerator, int level) {
    if (numerator == 0) return {0, 0};
    while (level > 0 && numerator % 2 == 0) {
        numerator /= 2;
        --level;
    }
    return {numerator, level};
}

double Dyadic::value() const { return std::ldexp(static_cast<double>(numerator), -level); }

Rational Dyadic::exact() const { return Rational(BigInt(numerator)) * pow2(-level); }

std::string to_string(const Dyadic& x) {
    return std::to_string(x.numerator) + "/2^" + std::to_string(x.level);
}

std::string to_string(const GridVariant& v) {
    switch (v.kind) {
        case GridKind::full: return "full";
        case GridKind::interior: return "interior";
        case GridKind::support_bounded: return "nu=" + std::to_string(v.nu);
    }
    return "?";
}

void validate_grid_parameters(int d, int m, const GridVariant& v) {
    if (d < 1) throw std::invalid_argument("dimension must be at least 1");
    if (m < 0) throw std::invalid_argument("grid parameter m must be nonnegative");
    if (m > 60) throw std::invalid_argument("grid parameter m too large");
    if (v.kind == GridKind::support_bounded && (v.nu < 1 || v.nu > d))
        throw std::invalid_argument("nu must lie in [1, d]");
}

namespace {

// All compositions of m into d parts, each part >= lo, lexicographic.
void compositions(int d, int m, int lo, std::vector<int>& cur, std::vector<MultiIndex>& out) {
    const int j = static_cast<int>(cur.size());
    if (j == d - 1) {
        if (m >= lo) {
            cur.push_back(m);
            out.emplace_back(cur);
            cur.pop_back();
        }
        return;
    }
    const int rest = d - 1 - j;
    for (int v = lo; m - v >= rest * lo; ++v) {
        cur.push_back(v);
        compositions(d, m - v, lo, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<MultiIndex> level_index_sets(int d, int m, const GridVariant& v) {
    validate_grid_parameters(d, m, v);
    std::vector<MultiIndex> out;
    std::vector<int> cur;
    if (v.kind != GridKind::support_bounded) {
        if (m >= d) compositions(d, m, 1, cur, out);
        return out;
    }
    std::vector<MultiIndex> all;
    compositions(d, m, 0, cur, all);
    for (auto& k : all)
        if (k.support_size() <= v.nu) out.push_back(std::move(k));
    return out;
}

std::vector<MultiIndex> cumulative_index_sets(int d, int m, const GridVariant& v) {
    std::vector<MultiIndex> out;
    for (int l = 0; l <= m; ++l) {
        auto level = level_index_sets(d, l, v);
        out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
    }
    return out;
}

std::vector<std::int64_t> grid_shifts(int level, bool interior) {
    std::vector<std::int64_t> s;
    const std::int64_t n = std::int64_t(1) << level;
    for (std::int64_t i = interior ? 1 : 0; i < n; ++i) s.push_back(i);
    return s;
}

namespace {

// Calls visit(k, s) for every generating pair of the grid definition.
template <class Visit>
void for_each_pair(int d, int m, const GridVariant& v, Visit&& visit) {
    const bool interior = v.kind == GridKind::interior;
    std::vector<std::int64_t> s(d);
    for (const auto& k : level_index_sets(d, m, v)) {
        std::fill(s.begin(), s.end(), interior ? 1 : 0);
        while (true) {
            visit(k, s);
            int j = d - 1;
            for (; j >= 0; --j) {
                if (++s[j] < (std::int64_t(1) << k[j])) break;
                s[j] = interior ? 1 : 0;
            }
            if (j < 0) break;
        }
    }
}

}  // namespace

std::vector<DyadicPoint> enumerate_grid(int d, int m, const GridVariant& v) {
    std::map<std::vector<Dyadic>, std::vector<GridOrigin>> points;
    std::vector<Dyadic> x(d);
    for_each_pair(d, m, v, [&](const MultiIndex& k, const std::vector<std::int64_t>& s) {
        for (int j = 0; j < d; ++j) x[j] = Dyadic::make(static_cast<std::uint64_t>(s[j]), k[j]);
        points[x].push_back({k, s});
    });
    std::vector<DyadicPoint> out;
    out.reserve(points.size());
    for (auto& [coords, origins] : points) out.push_back({coords, std::move(origins)});
    return out;
}

bool contains_point(const std::vector<DyadicPoint>& grid, const std::vector<Dyadic>& x) {
    auto it = std::lower_bound(grid.begin(), grid.end(), x,
                               [](const DyadicPoint& p, const std::vector<Dyadic>& key) { return p.coordinates < key; });
    return it != grid.end() && it->coordinates == x;
}

GridCardinality enumerate_grid_counts(int d, int m, const GridVariant& v) {
    validate_grid_parameters(d, m, v);
    // numerators at the common denominator 2^m, packed (m+1) bits each
    const int bits = m + 1;
    if (bits * d > 128) throw std::invalid_argument("grid too large for packed enumeration");
    std::vector<unsigned __int128> keys;
    std::uint64_t pairs = 0, counted = 0;
    for_each_pair(d, m, v, [&](const MultiIndex& k, const std::vector<std::int64_t>& s) {
        ++pairs;
        bool fresh = true;
        unsigned __int128 key = 0;
        for (int j = 0; j < d; ++j) {
            if (k[j] != 0 && s[j] == 0) fresh = false;
            key = (key << bits) | static_cast<unsigned __int128>(static_cast<std::uint64_t>(s[j]) << (m - k[j]));
        }
        if (v.kind != GridKind::support_bounded || fresh) ++counted;
        keys.push_back(key);
    });
    std::sort(keys.begin(), keys.end());
    GridCardinality c;
    c.pairs = pairs;
    c.formula_count = counted;
    c.distinct_points = static_cast<std::uint64_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
    c.bound = 0;
    return c;
}

bool counted_by_formula(const GridOrigin& o, const GridVariant& v) {
    if (v.kind != GridKind::support_bounded) return true;
    for (std::size_t j = 0; j < o.k.dim(); ++j)
        if (o.k[j] != 0 && o.s[j] == 0) return false;
    return true;
}

namespace {

using Series = std::vector<BigInt>;  // truncated power series, index = degree

Series multiply(const Series& a, const Series& b, int m) {
    Series c(m + 1, BigInt(0));
    for (int i = 0; i <= m; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= m; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

Series power(const Series& a, int e, int m) {
    Series r(m + 1, BigInt(0));
    r[0] = 1;
    for (int i = 0; i < e; ++i) r = multiply(r, a, m);
    return r;
}

BigInt sum_upto(const Series& a, int m) {
    BigInt s = 0;
    for (int i = 0; i <= m; ++i) s += a[i];
    return s;
}

BigInt two_pow(int e) { return BigInt(1) << e; }

}  // namespace

GridCardinality grid_cardinality(int d, int m, const GridVariant& v) {
    validate_grid_parameters(d, m, v);
    GridCardinality c;

    // sum_{k>=1} (2^k - 1) x^k and sum_{k>=1} 2^k x^k
    Series positive(m + 1, BigInt(0)), all(m + 1, BigInt(0));
    // distinct coordinates whose minimal level is e >= 1 number 2^(e-1)
    Series fresh(m + 1, BigInt(0));
    for (int k = 1; k <= m; ++k) {
        positive[k] = two_pow(k) - 1;
        all[k] = two_pow(k);
        fresh[k] = two_pow(k - 1);
    }

    switch (v.kind) {
        case GridKind::full: {
            c.pairs = m >= d ? BigInt(two_pow(m) * binomial(m - 1, d - 1)) : BigInt(0);
            c.formula_count = c.pairs;
            c.bound = c.pairs;
            // a coordinate needs level max(e, 1); at weight 1 both 0 and 1/2 qualify
            Series w = fresh;
            if (m >= 1) w[1] = 2;
            c.distinct_points = sum_upto(power(w, d, m), m);
            break;
        }
        case GridKind::interior: {
            c.formula_count = power(positive, d, m)[m];
            c.pairs = c.formula_count;
            c.bound = m >= d ? BigInt(two_pow(m) * binomial(m - 1, d - 1)) : BigInt(0);
            c.distinct_points = sum_upto(power(fresh, d, m), m);
            break;
        }
        case GridKind::support_bounded: {
            c.formula_count = 0;
            c.pairs = 0;
            c.distinct_points = 0;
            for (int l = 0; l <= v.nu; ++l) {
                BigInt choose = binomial(d, l);
                c.formula_count += choose * power(positive, l, m)[m];
                c.pairs += choose * power(all, l, m)[m];
                c.distinct_points += choose * sum_upto(power(fresh, l, m), m);
            }
            c.bound = m >= v.nu ? BigInt(two_pow(m) * binomial(d, v.nu) * binomial(m - 1, v.nu - 1)) : BigInt(0);
            break;
        }
    }
    return c;
}

}  // namespace smolyak
