#include "smolyak/expansion.hpp"

#include "smolyak/bspline.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <random>
#include <stdexcept>

namespace smolyak {

UnivariateBasis UnivariateBasis::spline(int r) {
    if (r < 1 || 2 * r > kMaxSplineOrder) throw std::invalid_argument("spline half-order r out of range");
    return UnivariateBasis(r);
}

std::int64_t UnivariateBasis::shift_count(int level) const {
    return is_faber() ? faber_shift_count(level) : spline_shift_count(r_, level);
}

double UnivariateBasis::value(int level, std::int64_t shift, double x) const {
    return is_faber() ? faber_hat(level, shift, x) : periodic_bspline(r_, level, shift, x);
}

Rational UnivariateBasis::integral(int level) const {
    if (is_faber()) return level == 0 ? Rational(1) : pow2(-level);
    return Rational(1) / Rational(BigInt(spline_shift_count(r_, level)));
}

std::int64_t UnivariateBasis::cells(int level) const {
    if (is_faber()) return std::int64_t(1) << level;
    return spline_shift_count(r_, level);
}

void UnivariateBasis::active(int level, double x, Active& out) const {
    out.shifts.clear();
    out.values.clear();
    const double u = wrap_unit(x);
    if (is_faber()) {
        if (level == 0) {
            out.shifts.push_back(0);
            out.values.push_back(1.0);
            return;
        }
        const double y = std::ldexp(u, level);
        auto s = static_cast<std::int64_t>(std::floor(y / 2));
        const std::int64_t n = faber_shift_count(level);
        if (s >= n) s = n - 1;
        double v = cardinal_bspline(2, y - 2.0 * static_cast<double>(s));
        if (v != 0.0) {
            out.shifts.push_back(s);
            out.values.push_back(v);
        }
        return;
    }
    const std::int64_t n = spline_shift_count(r_, level);
    const double y = static_cast<double>(n) * u;
    auto j = static_cast<std::int64_t>(std::floor(y));
    if (j >= n) j = n - 1;
    const double t = y - static_cast<double>(j);
    for (int i = 0; i < 2 * r_; ++i) {
        double v = cardinal_bspline(2 * r_, t + i);
        if (v == 0.0) continue;
        std::int64_t s = j - i;
        if (s < 0) s += n;
        out.shifts.push_back(s);
        out.values.push_back(v);
    }
}

std::vector<std::pair<std::int64_t, Rational>> LevelOperator::row(std::int64_t s) const {
    std::vector<std::pair<std::int64_t, Rational>> out;
    const auto& pattern = patterns[static_cast<std::size_t>(s) % patterns.size()];
    for (const auto& [offset, w] : pattern) {
        std::int64_t i = (anchor_step * s + offset) % lattice_size;
        if (i < 0) i += lattice_size;
        out.emplace_back(i, w);
    }
    return out;
}

std::size_t LevelOperator::max_stencil_size() const {
    std::size_t m = 0;
    for (const auto& p : patterns) m = std::max(m, p.size());
    return m;
}

LevelOperatorFamily::LevelOperatorFamily(UnivariateBasis basis, std::function<LevelOperator(int)> make)
    : basis_(basis), make_(std::move(make)) {}

const LevelOperator& LevelOperatorFamily::at(int level) const {
    if (level < 0) throw std::out_of_range("negative level");
    while (static_cast<int>(cache_.size()) <= level) cache_.push_back(make_(static_cast<int>(cache_.size())));
    return cache_[level];
}

SampleCache::SampleCache(const Evaluator& f, int dim, std::uint64_t denominator)
    : f_(f), dim_(dim), denominator_(denominator), key_(dim * sizeof(std::uint32_t), '\0'), point_(dim) {
    if (denominator == 0 || denominator > std::numeric_limits<std::uint32_t>::max())
        throw std::out_of_range("sample lattice denominator out of range");
}

double SampleCache::operator()(std::span<const std::uint32_t> numerators) {
    std::memcpy(key_.data(), numerators.data(), key_.size());
    auto it = values_.find(key_);
    if (it != values_.end()) return it->second;
    for (int j = 0; j < dim_; ++j)
        point_[j] = static_cast<double>(numerators[j]) / static_cast<double>(denominator_);
    double v = f_(point_);
    values_.emplace(key_, v);
    return v;
}

SampleSet SampleCache::samples() const {
    SampleSet s;
    s.dim = dim_;
    s.denominator = denominator_;
    std::vector<const std::string*> keys;
    keys.reserve(values_.size());
    for (const auto& kv : values_) keys.push_back(&kv.first);
    std::sort(keys.begin(), keys.end(), [](const std::string* a, const std::string* b) { return *a < *b; });
    s.numerators.resize(keys.size() * dim_);
    for (std::size_t i = 0; i < keys.size(); ++i)
        std::memcpy(s.numerators.data() + i * dim_, keys[i]->data(), dim_ * sizeof(std::uint32_t));
    return s;
}

std::size_t Expansion::term_count() const {
    std::size_t n = 0;
    for (const auto& b : blocks_) n += b.coefficients.size();
    return n;
}

int Expansion::max_level() const {
    int m = 0;
    for (const auto& b : blocks_) m = std::max(m, b.level.max());
    return m;
}

std::vector<std::int64_t> Expansion::block_shape(const MultiIndex& k) const {
    std::vector<std::int64_t> shape(k.dim());
    for (std::size_t j = 0; j < k.dim(); ++j) shape[j] = basis_.shift_count(k[j]);
    return shape;
}

void Expansion::add_block(const MultiIndex& k, std::vector<double> coefficients) {
    if (static_cast<int>(k.dim()) != dim_) throw std::invalid_argument("block dimension mismatch");
    std::size_t size = 1;
    for (auto n : block_shape(k)) size *= static_cast<std::size_t>(n);
    if (coefficients.size() != size) throw std::invalid_argument("block size does not match its level");
    for (auto& b : blocks_) {
        if (b.level == k) {
            for (std::size_t i = 0; i < size; ++i) b.coefficients[i] += coefficients[i];
            return;
        }
    }
    blocks_.push_back({k, std::move(coefficients)});
}

double Expansion::coefficient(const MultiIndex& k, std::span<const std::int64_t> s) const {
    for (const auto& b : blocks_) {
        if (b.level != k) continue;
        auto shape = block_shape(k);
        std::size_t idx = 0;
        for (std::size_t j = 0; j < shape.size(); ++j) {
            if (s[j] < 0 || s[j] >= shape[j]) throw std::out_of_range("shift out of range");
            idx = idx * shape[j] + s[j];
        }
        return b.coefficients[idx];
    }
    return 0.0;
}

Expansion::AxisActivity Expansion::axis_activity(double x, int max_level) const {
    AxisActivity a(max_level + 1);
    for (int l = 0; l <= max_level; ++l) basis_.active(l, x, a[l]);
    return a;
}

double Expansion::evaluate(std::span<const AxisActivity* const> axes) const {
    double total = 0.0;
    std::vector<const UnivariateBasis::Active*> act(dim_);
    std::vector<std::size_t> pos(dim_);
    std::vector<std::int64_t> stride(dim_);
    for (const auto& b : blocks_) {
        bool empty = false;
        std::int64_t st = 1;
        for (int j = dim_ - 1; j >= 0; --j) {
            act[j] = &(*axes[j])[b.level[j]];
            if (act[j]->shifts.empty()) empty = true;
            stride[j] = st;
            st *= basis_.shift_count(b.level[j]);
        }
        if (empty) continue;
        std::fill(pos.begin(), pos.end(), 0);
        while (true) {
            double w = 1.0;
            std::int64_t idx = 0;
            for (int j = 0; j < dim_; ++j) {
                w *= act[j]->values[pos[j]];
                idx += act[j]->shifts[pos[j]] * stride[j];
            }
            total += w * b.coefficients[idx];
            int j = dim_ - 1;
            for (; j >= 0; --j) {
                if (++pos[j] < act[j]->shifts.size()) break;
                pos[j] = 0;
            }
            if (j < 0) break;
        }
    }
    return total;
}

double Expansion::evaluate(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("point dimension mismatch");
    const int top = max_level();
    std::vector<AxisActivity> axes;
    axes.reserve(dim_);
    std::vector<const AxisActivity*> ptr(dim_);
    for (int j = 0; j < dim_; ++j) {
        axes.push_back(axis_activity(x[j], top));
        ptr[j] = &axes.back();
    }
    return evaluate(ptr);
}

namespace {

// Applies a level operator along one axis of a row-major tensor.
std::vector<double> apply_axis(const std::vector<double>& in, std::vector<std::int64_t>& shape, int axis,
                               const LevelOperator& op) {
    std::int64_t outer = 1, inner = 1;
    for (int j = 0; j < axis; ++j) outer *= shape[j];
    for (std::size_t j = axis + 1; j < shape.size(); ++j) inner *= shape[j];
    const std::int64_t n_in = shape[axis], n_out = op.coefficient_count;

    std::vector<std::vector<std::pair<std::int64_t, double>>> rows(n_out);
    for (std::int64_t s = 0; s < n_out; ++s)
        for (auto& [i, w] : op.row(s)) rows[s].emplace_back(i, to_double(w));

    std::vector<double> out(static_cast<std::size_t>(outer * n_out * inner), 0.0);
    for (std::int64_t o = 0; o < outer; ++o)
        for (std::int64_t s = 0; s < n_out; ++s) {
            double* dst = &out[(o * n_out + s) * inner];
            for (const auto& [i, w] : rows[s]) {
                const double* src = &in[(o * n_in + i) * inner];
                for (std::int64_t q = 0; q < inner; ++q) dst[q] += w * src[q];
            }
        }
    shape[axis] = n_out;
    return out;
}

}  // namespace

Expansion recover_on_levels(const LevelOperatorFamily& family, const Evaluator& f, int dim,
                            const std::vector<MultiIndex>& levels, bool zero_boundary) {
    Expansion result(family.basis(), dim);
    int top = 0;
    for (const auto& k : levels) top = std::max(top, k.max());
    const std::uint64_t denominator = static_cast<std::uint64_t>(family.at(top).lattice_size);
    SampleCache cache(f, dim, denominator);

    std::vector<std::uint32_t> num(dim);
    std::vector<std::int64_t> idx(dim);
    for (const auto& k : levels) {
        std::vector<std::int64_t> shape(dim), scale(dim);
        std::size_t total = 1;
        for (int j = 0; j < dim; ++j) {
            shape[j] = family.at(k[j]).lattice_size;
            if (denominator % shape[j] != 0) throw std::logic_error("lattice does not nest");
            scale[j] = static_cast<std::int64_t>(denominator) / shape[j];
            total *= static_cast<std::size_t>(shape[j]);
        }
        std::vector<double> values(total);
        std::fill(idx.begin(), idx.end(), 0);
        for (std::size_t flat = 0; flat < total; ++flat) {
            bool boundary = false;
            for (int j = 0; j < dim; ++j) {
                num[j] = static_cast<std::uint32_t>(idx[j] * scale[j]);
                if (idx[j] == 0) boundary = true;
            }
            values[flat] = (zero_boundary && boundary) ? 0.0 : cache(num);
            for (int j = dim - 1; j >= 0; --j) {
                if (++idx[j] < shape[j]) break;
                idx[j] = 0;
            }
        }
        for (int j = 0; j < dim; ++j) values = apply_axis(values, shape, j, family.at(k[j]));
        result.add_block(k, std::move(values));
    }
    result.set_samples(cache.samples());
    return result;
}

ErrorMeasure ErrorMeasure::tensor(std::int64_t cells, int gauss_points) {
    ErrorMeasure m;
    m.kind = Kind::tensor_grid;
    m.cells = cells;
    m.gauss_points = gauss_points;
    return m;
}

ErrorMeasure ErrorMeasure::monte_carlo(std::size_t samples, std::uint64_t seed) {
    ErrorMeasure m;
    m.kind = Kind::monte_carlo;
    m.samples = samples;
    m.seed = seed;
    return m;
}

namespace {

template <unsigned N>
void gauss_rule(std::vector<double>& x, std::vector<double>& w) {
    using G = boost::math::quadrature::gauss<double, N>;
    const auto& a = G::abscissa();
    const auto& b = G::weights();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0.0) {
            x.push_back(0.0);
            w.push_back(b[i]);
        } else {
            x.push_back(-a[i]);
            w.push_back(b[i]);
            x.push_back(a[i]);
            w.push_back(b[i]);
        }
    }
}

// Nodes and weights on [0,1) of the composite rule with `cells` cells.
void axis_rule(std::int64_t cells, int gauss_points, std::vector<double>& nodes, std::vector<double>& weights) {
    if (cells < 1) throw std::invalid_argument("error measure needs at least one cell");
    std::vector<double> gx, gw;
    switch (gauss_points) {
        case 0: gx = {-1.0}; gw = {2.0}; break;
        case 1: gauss_rule<1>(gx, gw); break;
        case 2: gauss_rule<2>(gx, gw); break;
        case 3: gauss_rule<3>(gx, gw); break;
        case 4: gauss_rule<4>(gx, gw); break;
        case 5: gauss_rule<5>(gx, gw); break;
        case 6: gauss_rule<6>(gx, gw); break;
        case 7: gauss_rule<7>(gx, gw); break;
        case 8: gauss_rule<8>(gx, gw); break;
        case 9: gauss_rule<9>(gx, gw); break;
        case 10: gauss_rule<10>(gx, gw); break;
        default: throw std::invalid_argument("unsupported Gauss point count");
    }
    std::vector<std::size_t> order(gx.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return gx[a] < gx[b]; });
    const double h = 1.0 / static_cast<double>(cells);
    for (std::int64_t c = 0; c < cells; ++c)
        for (auto i : order) {
            nodes.push_back((static_cast<double>(c) + 0.5 * (gx[i] + 1.0)) * h);
            weights.push_back(0.5 * gw[i] * h);
        }
}

class Accumulator {
public:
    explicit Accumulator(double p) : p_(p) {}
    void add(double weight, double value) {
        double a = std::fabs(value);
        if (std::isinf(p_)) {
            max_ = std::max(max_, a);
        } else {
            sum_ += weight * std::pow(a, p_);
        }
    }
    double result() const { return std::isinf(p_) ? max_ : std::pow(sum_, 1.0 / p_); }

private:
    double p_;
    double sum_ = 0.0;
    double max_ = 0.0;
};

double measure_difference(const Evaluator* f, const Expansion* g, int dim, double p, const ErrorMeasure& m) {
    if (!(p > 0.0)) throw std::invalid_argument("p must be positive");
    std::vector<double> x(dim);
    std::vector<const Expansion::AxisActivity*> ptr(dim);
    Accumulator acc(p);

    if (m.kind == ErrorMeasure::Kind::monte_carlo) {
        std::mt19937_64 rng(m.seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const double w = 1.0 / static_cast<double>(m.samples);
        for (std::size_t i = 0; i < m.samples; ++i) {
            for (auto& c : x) c = unit(rng);
            double v = f ? (*f)(x) : 0.0;
            if (g) v -= g->evaluate(x);
            acc.add(w, v);
        }
        return acc.result();
    }

    if (!m.axis_cells.empty() && static_cast<int>(m.axis_cells.size()) != dim)
        throw std::invalid_argument("axis_cells must have one entry per coordinate");
    std::vector<std::vector<double>> nodes(dim), weights(dim);
    std::vector<std::vector<Expansion::AxisActivity>> tables(dim);
    const int top = g ? g->max_level() : 0;
    for (int j = 0; j < dim; ++j) {
        axis_rule(m.axis_cells.empty() ? m.cells : m.axis_cells[j], m.gauss_points, nodes[j], weights[j]);
        if (g) {
            // axes with the same rule share one table
            int same = -1;
            for (int i = 0; i < j && same < 0; ++i)
                if (nodes[i] == nodes[j]) same = i;
            if (same >= 0) {
                tables[j] = tables[same];
            } else {
                tables[j].reserve(nodes[j].size());
                for (double xn : nodes[j]) tables[j].push_back(g->axis_activity(xn, top));
            }
        }
    }
    std::vector<std::size_t> idx(dim, 0);
    while (true) {
        double w = 1.0;
        for (int j = 0; j < dim; ++j) {
            x[j] = nodes[j][idx[j]];
            w *= weights[j][idx[j]];
            if (g) ptr[j] = &tables[j][idx[j]];
        }
        double v = f ? (*f)(x) : 0.0;
        if (g) v -= g->evaluate(ptr);
        acc.add(w, v);
        int j = dim - 1;
        for (; j >= 0; --j) {
            if (++idx[j] < nodes[j].size()) break;
            idx[j] = 0;
        }
        if (j < 0) break;
    }
    return acc.result();
}

}  // namespace

double lp_norm(const Evaluator& f, int dim, double p, const ErrorMeasure& measure) {
    return measure_difference(&f, nullptr, dim, p, measure);
}

double lp_norm(const Expansion& g, double p, const ErrorMeasure& measure) {
    return measure_difference(nullptr, &g, g.dim(), p, measure);
}

double lp_error(const Evaluator& f, const Expansion& g, double p, const ErrorMeasure& measure) {
    return measure_difference(&f, &g, g.dim(), p, measure);
}

}  // namespace smolyak
