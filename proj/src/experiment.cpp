#include "smolyak/experiment.hpp"

#include "smolyak/cubature.hpp"
#include "smolyak/faber.hpp"
#include "smolyak/quasi_interp.hpp"
#include "smolyak/witness.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace smolyak {

Mode parse_mode(std::string_view name) {
    if (name == "grid") return Mode::grid;
    if (name == "recover") return Mode::recover;
    if (name == "integrate") return Mode::integrate;
    if (name == "bounds") return Mode::bounds;
    if (name == "witness") return Mode::witness;
    if (name == "convergence") return Mode::convergence;
    throw std::invalid_argument("unknown mode: " + std::string(name));
}

GridVariant parse_variant(std::string_view name, int nu) {
    if (name == "full") return GridVariant::full();
    if (name == "interior") return GridVariant::interior();
    if (name == "nu") return GridVariant::support_bounded(nu);
    throw std::invalid_argument("variant must be full, interior or nu");
}

void ExperimentSpec::validate() const {
    validate_grid_parameters(d, m, variant);
    if (m_max >= 0 && m_max < m) throw std::invalid_argument("--m-max must be >= --m");
    if (m_last() > 30) throw std::invalid_argument("m above 30 is outside the supported envelope");
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    if (!(p > 0.0)) throw std::invalid_argument("p must be positive");
    if (samples == 0) throw std::invalid_argument("sample budget must be positive");
    if (!scheme.empty()) {
        QIScheme s = load_scheme(scheme);
        if (variant.kind == GridKind::interior)
            throw std::invalid_argument("quasi-interpolation runs on full or nu grids only");
        if (alpha > 2.0 * s.r()) throw std::invalid_argument("alpha exceeds 2r for the scheme");
    }
    if (mode == Mode::witness) WitnessConfig::make(d, m, alpha, variant.kind == GridKind::full ? GridVariant::support_bounded(d) : variant, witness_n);
    if (mode == Mode::recover || mode == Mode::integrate || mode == Mode::convergence)
        make_corpus_function(corpus, d, alpha, difference_order(*this), corpus_options);
}

RecoveryConfig ExperimentSpec::recovery(int level) const {
    RecoveryConfig c;
    c.d = d;
    c.m = level;
    c.variant = variant;
    if (!scheme.empty()) {
        c.method = RecoveryMethod::quasi_interpolation;
        c.scheme = load_scheme(scheme);
    }
    return c;
}

int difference_order(const ExperimentSpec& spec) {
    return spec.scheme.empty() ? 2 : 2 * load_scheme(spec.scheme).r();
}

ErrorMeasure default_error_measure(const ExperimentSpec& spec, int m) {
    if (spec.d > 3) return ErrorMeasure::monte_carlo(spec.samples, spec.seed);
    const int gauss = 2;
    const double budget = 8.0 * static_cast<double>(spec.samples);
    // dyadic cell counts keep the nodes aligned with the sparse-grid cells
    int level = m + 3;
    while (level > 0 && std::pow(std::ldexp(static_cast<double>(gauss), level), spec.d) > budget) --level;
    return ErrorMeasure::tensor(std::int64_t(1) << level, gauss);
}

bool certified_for(const ExperimentSpec& spec, const CorpusFunction& f) {
    if (!std::isfinite(f.seminorm_bound)) return false;
    if (f.certified_alpha != spec.alpha || f.difference_order != difference_order(spec)) return false;
    if (spec.variant.kind == GridKind::interior && !f.zero_boundary) return false;
    // support-bounded theorems need at most nu active variables
    if (spec.variant.kind == GridKind::support_bounded && static_cast<int>(f.active_variables.size()) > spec.variant.nu)
        return false;
    if (spec.scheme.empty()) return spec.alpha <= 2.0;
    return spec.p >= 1.0;
}

namespace {

ApproxParams params_for(const ExperimentSpec& spec, int m) {
    ApproxParams q;
    q.alpha = spec.alpha;
    q.p = spec.p;
    q.d = spec.d;
    q.nu = spec.variant.kind == GridKind::support_bounded ? spec.variant.nu : spec.d;
    q.m = m;
    if (!spec.scheme.empty()) {
        QIScheme s = load_scheme(spec.scheme);
        q.r = s.r();
        SchemeConstants c = scheme_constants(s, spec.alpha, std::max(spec.p, 1.0));
        q.a = c.a;
        q.b = c.b;
    }
    return q;
}

double value_or_nan(const ApproxParams& q, Theorem t, Side side, Form form) {
    BoundReport r = theorem_bound(q, t, side, form);
    return r.defined ? r.value : std::nan("");
}

}  // namespace

std::vector<ConvergenceRow> convergence_rows(const ExperimentSpec& spec, const CorpusFunction& f) {
    std::vector<ConvergenceRow> rows;
    const bool qi = !spec.scheme.empty();
    const bool interior = spec.variant.kind == GridKind::interior;
    const Theorem upper = qi ? Theorem::qi_recovery
                             : (interior ? Theorem::interior_recovery : Theorem::support_bounded_recovery);
    const Theorem lower = interior ? Theorem::interior_recovery_lower : Theorem::support_bounded_recovery_lower;
    for (int m = spec.m; m <= spec.m_last(); ++m) {
        RecoveryConfig cfg = spec.recovery(m);
        Expansion e = recover(cfg, f.evaluate);
        ConvergenceRow row;
        row.m = m;
        row.sample_count = e.samples().size();
        row.error = lp_error(f.evaluate, e, spec.p, default_error_measure(spec, m));
        ApproxParams q = params_for(spec, m);
        const double scale = f.seminorm_bound;
        row.upper_refined = scale * value_or_nan(q, upper, Side::upper, Form::refined);
        row.upper_binomial = scale * value_or_nan(q, upper, Side::upper, Form::binomial);
        row.lower = qi ? std::nan("") : value_or_nan(q, lower, Side::lower, Form::refined);
        row.ratio = row.error / row.upper_refined;
        rows.push_back(row);
    }
    return rows;
}

double decay_slope(const std::vector<ConvergenceRow>& rows, int dims) {
    if (rows.size() < 2) throw std::invalid_argument("slope needs at least two rows");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(rows.size());
    for (const auto& r : rows) {
        const double x = r.m;
        const double y = std::log2(r.error / std::pow(static_cast<double>(r.m), dims - 1));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

void run_grid(const ExperimentSpec& spec, ExperimentResult& res) {
    for (int m = spec.m; m <= spec.m_last(); ++m) {
        auto points = enumerate_grid(spec.d, m, spec.variant);
        Table t = grid_table(spec.d, points);
        if (res.table.header.empty()) res.table.header = t.header;
        for (auto& r : t.rows) res.table.add(std::move(r));
        GridCardinality c = grid_cardinality(spec.d, m, spec.variant);
        res.messages.push_back("m=" + std::to_string(m) + " points=" + std::to_string(points.size()) +
                               " pairs=" + c.pairs.str() + " formula=" + c.formula_count.str() +
                               " bound=" + c.bound.str());
        if (BigInt(points.size()) != c.distinct_points) {
            res.messages.push_back("distinct point count disagrees with the counting recursion");
            res.status = 3;
        }
    }
}

void run_recover(const ExperimentSpec& spec, ExperimentResult& res) {
    CorpusFunction f = make_corpus_function(spec.corpus, spec.d, spec.alpha, difference_order(spec), spec.corpus_options);
    RecoveryConfig cfg = spec.recovery(spec.m);
    Expansion e = recover(cfg, f.evaluate);
    res.table = expansion_table(e);
    double err = lp_error(f.evaluate, e, spec.p, default_error_measure(spec, spec.m));
    res.messages.push_back(cfg.describe() + " samples=" + std::to_string(e.samples().size()) +
                           " terms=" + std::to_string(e.term_count()) + " error=" + format_double(err));
}

void run_integrate(const ExperimentSpec& spec, ExperimentResult& res) {
    CorpusFunction f = make_corpus_function(spec.corpus, spec.d, spec.alpha, difference_order(spec), spec.corpus_options);
    res.table.header = {"m", "points", "weight_sum", "estimate", "true_integral", "error", "upper_bound"};
    const bool qi = !spec.scheme.empty();
    const bool interior = spec.variant.kind == GridKind::interior;
    for (int m = spec.m; m <= spec.m_last(); ++m) {
        RecoveryConfig cfg = spec.recovery(m);
        CubatureRule rule = derive_rule(cfg);
        if (!spec.rule_out.empty() && m == spec.m_last()) {
            std::ofstream out(spec.rule_out);
            if (!out) throw std::runtime_error("cannot write " + spec.rule_out);
            write_table(out, rule_table(rule), spec.format);
        }
        const double est = integrate(rule, f.evaluate);
        const double err = std::fabs(est - f.true_integral);
        ApproxParams q = params_for(spec, m);
        double upper = std::nan("");
        if (qi) {
            // the cubature theorem takes a with p = 1
            q.a = scheme_constants(*cfg.scheme, spec.alpha, 1.0).a;
            upper = value_or_nan(q, Theorem::qi_cubature, Side::upper, Form::refined);
        } else {
            upper = value_or_nan(q, interior ? Theorem::interior_cubature : Theorem::support_bounded_cubature,
                                 Side::upper, Form::refined);
        }
        upper *= f.seminorm_bound;
        Rational wsum = rule.weight_sum();
        res.table.add({static_cast<std::int64_t>(m), static_cast<std::int64_t>(rule.size()), to_string(wsum), est,
                       f.true_integral, err, upper});
        if (certified_for(spec, f) && std::isfinite(upper) && err > upper * (1.0 + spec.tolerance)) {
            res.messages.push_back("m=" + std::to_string(m) + ": cubature error exceeds the theorem bound");
            res.status = 3;
        }
        if (!interior && wsum != 1) {
            res.messages.push_back("m=" + std::to_string(m) + ": weights do not sum to 1");
            res.status = 3;
        }
    }
}

void run_bounds(const ExperimentSpec& spec, ExperimentResult& res) {
    res.table = bounds_header();
    const bool interior = spec.variant.kind == GridKind::interior;
    for (int m = spec.m; m <= spec.m_last(); ++m) {
        ApproxParams q = params_for(spec, m);
        std::vector<std::pair<Theorem, Theorem>> pairs;
        std::vector<Theorem> list;
        if (!spec.scheme.empty()) {
            list = {Theorem::qi_recovery};
        } else if (interior) {
            list = {Theorem::interior_recovery, Theorem::interior_recovery_lower, Theorem::interior_cubature};
            pairs = {{Theorem::interior_recovery, Theorem::interior_recovery_lower},
                     {Theorem::interior_cubature, Theorem::interior_cubature}};
        } else {
            list = {Theorem::support_bounded_recovery, Theorem::support_bounded_recovery_lower,
                    Theorem::support_bounded_cubature};
            pairs = {{Theorem::support_bounded_recovery, Theorem::support_bounded_recovery_lower},
                     {Theorem::support_bounded_cubature, Theorem::support_bounded_cubature}};
        }
        for (Theorem t : list) append_bounds(res.table, q, theorem_bounds(q, t));
        if (!spec.scheme.empty()) {
            ApproxParams c = q;
            c.a = scheme_constants(load_scheme(spec.scheme), spec.alpha, 1.0).a;
            append_bounds(res.table, c, theorem_bounds(c, Theorem::qi_cubature));
        }
        for (auto [up, lo] : pairs)
            for (Form form : {Form::refined, Form::binomial}) {
                BoundReport u = theorem_bound(q, up, Side::upper, form);
                BoundReport l = theorem_bound(q, lo, Side::lower, form);
                if (u.defined && l.defined && !(l.value <= u.value)) {
                    res.messages.push_back("m=" + std::to_string(m) + ": lower bound exceeds upper bound for " +
                                           to_string(up) + " " + to_string(form));
                    res.status = 3;
                }
            }
    }
}

void run_witness(const ExperimentSpec& spec, ExperimentResult& res) {
    GridVariant v = spec.variant.kind == GridKind::full ? GridVariant::support_bounded(spec.d) : spec.variant;
    WitnessConfig cfg = WitnessConfig::make(spec.d, spec.m, spec.alpha, v, spec.witness_n);
    FoolingFunction f = fooling_function(cfg);
    res.table.header = {"quantity", "value"};
    auto add = [&](const std::string& k, Cell c) { res.table.add({k, std::move(c)}); };

    auto grid = enumerate_grid(spec.d, spec.m, v);
    bool vanish = true;
    for (const auto& pt : grid) {
        if (!vanishes_exactly(cfg, pt.coordinates)) vanish = false;
        std::vector<double> x;
        for (const auto& c : pt.coordinates) x.push_back(c.value());
        if (f.evaluate(x) != 0.0) vanish = false;
    }
    add("grid_points", static_cast<std::int64_t>(grid.size()));
    add("grid_vanishing", std::string(vanish ? "pass" : "fail"));
    add("l1_closed_form", f.l1);
    if (f.exact_l1) add("l1_exact", to_string(*f.exact_l1));

    if (spec.d <= 2) {
        // quadrature on a shorter sum: f_{m,n'} is piecewise cubic on cells of width 2^-(n'+2)
        const int nq = std::min(cfg.n, spec.m + (spec.d == 1 ? 12 : 4));
        WitnessConfig short_cfg = cfg;
        short_cfg.n = nq;
        FoolingFunction g = fooling_function(short_cfg);
        const double quad = lp_norm(g.evaluate, spec.d, 1.0, ErrorMeasure::tensor(std::int64_t(1) << (nq + 2), 2));
        add("l1_quadrature_n", static_cast<std::int64_t>(nq));
        add("l1_quadrature", quad);
        add("l1_closed_form_n", g.l1);
        const bool ok = std::fabs(quad - g.l1) <= 1e-9;
        add("l1_match", std::string(ok ? "pass" : "fail"));
        if (!ok) res.status = 3;
    }
    HolderReport h = holder_membership_spotcheck(f.evaluate, spec.d, spec.alpha, spec.holder_trials, spec.seed);
    add("holder_trials", static_cast<std::int64_t>(h.trials));
    add("holder_pass_rate", 1.0 - static_cast<double>(h.failures) / static_cast<double>(std::max<std::size_t>(1, h.trials)));
    add("holder_max_ratio", h.max_ratio);

    if (spec.m >= cfg.active()) {
        LowerBoundDemonstration demo = lower_bound_demonstration(cfg, std::max(spec.p, 1.0));
        add("witness_norm", demo.witness_norm);
        add("limit", demo.limit);
        add("tail", demo.tail_bound);
        add("theorem_lower", demo.theorem_lower);
        add("certified_lower", demo.certified_lower);
        add("partial_sum_ok", std::string(demo.partial_sum_ok ? "pass" : "fail"));
        add("limit_ok", std::string(demo.limit_ok ? "pass" : "fail"));
        if (!demo.partial_sum_ok || !demo.limit_ok) res.status = 3;
    }
    if (!vanish || !h.pass) res.status = 3;
}

void run_convergence(const ExperimentSpec& spec, ExperimentResult& res) {
    CorpusFunction f = make_corpus_function(spec.corpus, spec.d, spec.alpha, difference_order(spec), spec.corpus_options);
    res.table.header = {"m", "sample_count", "empirical_error_p", "upper_bound_refined", "upper_bound_binomial",
                        "lower_bound", "ratio"};
    const bool check = certified_for(spec, f);
    for (const auto& r : convergence_rows(spec, f)) {
        res.table.add({static_cast<std::int64_t>(r.m), static_cast<std::int64_t>(r.sample_count), r.error,
                       r.upper_refined, r.upper_binomial, r.lower, r.ratio});
        if (check && std::isfinite(r.upper_refined) && r.error > r.upper_refined * (1.0 + spec.tolerance)) {
            res.messages.push_back("m=" + std::to_string(r.m) + ": error exceeds the refined upper bound");
            res.status = 3;
        }
    }
    if (!check) res.messages.push_back("corpus certificate does not match the theorem; rows not asserted");
}

}  // namespace

ExperimentResult run(const ExperimentSpec& spec) {
    ExperimentResult res;
    switch (spec.mode) {
        case Mode::grid: run_grid(spec, res); break;
        case Mode::recover: run_recover(spec, res); break;
        case Mode::integrate: run_integrate(spec, res); break;
        case Mode::bounds: run_bounds(spec, res); break;
        case Mode::witness: run_witness(spec, res); break;
        case Mode::convergence: run_convergence(spec, res); break;
    }
    return res;
}

}  // namespace smolyak
