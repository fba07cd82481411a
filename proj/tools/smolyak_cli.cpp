#include "smolyak/experiment.hpp"
#include "smolyak/io.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>

using namespace smolyak;

int main(int argc, char** argv) {
    CLI::App app{"Sparse-grid recovery, cubature, bounds and witness experiments"};
    app.require_subcommand(1);

    int d = 2, m = 3, m_max = -1, nu = 1, witness_n = -1, terms = 6;
    double alpha = 2.0, value = 1.0;
    std::string p_text = "inf", variant = "full", scheme, corpus = "prodsine", out, format = "csv", rule_out;
    std::uint64_t seed = 1;
    std::size_t samples = 200000, trials = 10000;
    std::vector<int> level;
    std::vector<std::int64_t> shift;
    int corpus_r = 2, corpus_nu = -1;

    app.add_option("--d", d, "dimension");
    app.add_option("--m", m, "level (start of the sweep)");
    app.add_option("--m-max", m_max, "end of the m sweep");
    app.add_option("--nu", nu, "support bound for --variant nu");
    app.add_option("--alpha", alpha, "mixed smoothness");
    app.add_option("--p", p_text, "norm exponent, or inf");
    app.add_option("--variant", variant, "full, interior or nu")->check(CLI::IsMember({"full", "interior", "nu"}));
    app.add_option("--scheme", scheme, "linear, cubic, quintic or file:PATH (omit for Faber)");
    app.add_option("--corpus", corpus, "corpus function name");
    app.add_option("--seed", seed, "Monte Carlo and spot-check seed");
    app.add_option("--out", out, "output path (default stdout)");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--samples", samples, "Monte Carlo budget");
    app.add_option("--n", witness_n, "witness truncation level (default m + 40)");
    app.add_option("--trials", trials, "Hoelder spot-check trials");
    app.add_option("--rule-out", rule_out, "integrate: write the rule to this path");
    app.add_option("--value", value, "constant corpus value");
    app.add_option("--level", level, "hat/bspline corpus level per coordinate");
    app.add_option("--shift", shift, "hat/bspline corpus shift per coordinate");
    app.add_option("--corpus-r", corpus_r, "bspline corpus half-order");
    app.add_option("--corpus-nu", corpus_nu, "few-active corpus active count (default --nu)");
    app.add_option("--terms", terms, "trig corpus mode count");

    std::string mode;
    for (const char* name : {"grid", "recover", "integrate", "bounds", "witness", "convergence"})
        app.add_subcommand(name, std::string("run the ") + name + " experiment")->fallthrough()->callback([&mode, name] {
            mode = name;
        });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    ExperimentSpec spec;
    try {
        spec.mode = parse_mode(mode);
        spec.d = d;
        spec.m = m;
        spec.m_max = m_max;
        spec.nu = nu;
        spec.variant = parse_variant(variant, nu);
        spec.alpha = alpha;
        if (p_text == "inf" || p_text == "infinity")
            spec.p = kInfinity;
        else
            spec.p = std::stod(p_text);
        spec.scheme = scheme;
        spec.corpus = corpus;
        spec.corpus_options.nu = corpus_nu < 0 ? nu : corpus_nu;
        spec.corpus_options.value = value;
        spec.corpus_options.level = level;
        spec.corpus_options.shift = shift;
        spec.corpus_options.r = corpus_r;
        spec.corpus_options.terms = terms;
        spec.corpus_options.seed = seed;
        spec.seed = seed;
        spec.samples = samples;
        spec.witness_n = witness_n;
        spec.holder_trials = trials;
        spec.rule_out = rule_out;
        spec.format = parse_format(format);
        spec.validate();
    } catch (const std::exception& e) {
        std::cerr << "invalid spec: " << e.what() << '\n';
        return 2;
    }

    ExperimentResult res;
    try {
        res = run(spec);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid spec: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    if (out.empty()) {
        write_table(std::cout, res.table, spec.format);
    } else {
        std::ofstream file(out);
        if (!file) {
            std::cerr << "cannot write " << out << '\n';
            return 1;
        }
        write_table(file, res.table, spec.format);
    }
    for (const auto& msg : res.messages) std::cerr << msg << '\n';
    return res.status;
}
