#include "smolyak/corpus.hpp"
#include "smolyak/witness.hpp"

#include <doctest.h>

#include <cmath>

using namespace smolyak;

TEST_SUITE("corpus") {
TEST_CASE("names") {
    auto names = corpus_names();
    CHECK(names.size() == 7);
    for (const auto& n : names) CHECK_NOTHROW(make_corpus_function(n, 2, 1.0, 2));
    CHECK_THROWS_AS(make_corpus_function("nope", 2, 1.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_corpus_function("prodsine", 2, 3.0, 2), std::invalid_argument);
}

TEST_CASE("capped ratios") {
    CHECK(capped_ratio(5.0, 2.0, 1.0, 2.0) == 5.0);
    // min(4 h^2, 1) / h: branches meet at h = 1/2
    CHECK(capped_ratio(4.0, 2.0, 1.0, 1.0) == doctest::Approx(2.0));
    CHECK(capped_ratio(1.0, 2.0, 4.0, 1.0) == 1.0);
    CHECK(sine_difference_ratio(2, 2.0) == doctest::Approx(4 * M_PI * M_PI));
    // dense maximum is inflated, never below the true supremum near h -> 0
    CHECK(sine_difference_ratio(2, 1.0) >= 8.0);  // value at h = 1/2
}

TEST_CASE("integrals against quadrature") {
    for (const auto& n : corpus_names()) {
        CorpusFunction f = make_corpus_function(n, 2, 1.0, 2);
        // every corpus member is piecewise smooth on a 1/64 grid at most
        double q = lp_norm([&](std::span<const double> x) { return f.evaluate(x) + 10.0; }, 2, 1.0,
                           ErrorMeasure::tensor(256, 4)) - 10.0;
        CHECK(q == doctest::Approx(f.true_integral).scale(1.0).epsilon(1e-9));
        if (f.exact_integral) CHECK(to_double(*f.exact_integral) == doctest::Approx(f.true_integral));
    }
}

TEST_CASE("certificates survive random second differences") {
    for (double alpha : {1.0, 2.0}) {
        for (const char* n : {"prodsine", "bump", "few-active"}) {
            CorpusFunction f = make_corpus_function(n, 2, alpha, 2);
            CHECK(f.seminorm_bound == 1.0);
            HolderReport r = holder_membership_spotcheck(f.evaluate, 2, alpha, 5000, 3);
            CHECK(r.pass);
        }
    }
    // hat with alpha <= 1 is certified; alpha > 1 is not
    CorpusFunction hat = make_corpus_function("hat", 1, 1.0, 2, CorpusOptions{.level = {2}, .shift = {1}});
    CHECK(std::isfinite(hat.seminorm_bound));
    Evaluator scaled = [&](std::span<const double> x) { return hat.evaluate(x) / hat.seminorm_bound; };
    CHECK(holder_membership_spotcheck(scaled, 1, 1.0, 5000).pass);
    CHECK(std::isinf(make_corpus_function("hat", 1, 1.5, 2).seminorm_bound));
}

TEST_CASE("shapes") {
    CorpusFunction few = make_corpus_function("few-active", 6, 2.0, 2, CorpusOptions{.nu = 2});
    CHECK(few.active_variables == std::vector<int>{0, 1});
    std::vector<double> a{0.1, 0.2, 0.3, 0.4, 0.5, 0.6}, b{0.1, 0.2, 0.9, 0.8, 0.7, 0.0};
    CHECK(few.evaluate(a) == few.evaluate(b));
    CHECK(few.zero_boundary);

    CorpusFunction c = make_corpus_function("constant", 3, 2.0, 2, CorpusOptions{.value = -2.0});
    std::vector<double> x{0.2, 0.4, 0.6};
    CHECK(c.evaluate(x) == -2.0);
    CHECK(c.seminorm_bound == 2.0);

    CorpusFunction bs = make_corpus_function("bspline", 1, 1.0, 4, CorpusOptions{.level = {1}, .shift = {3}, .r = 2});
    CHECK(*bs.exact_integral == Rational(1, 8));

    CorpusFunction t1 = make_corpus_function("trig", 2, 2.0, 2, CorpusOptions{.seed = 5});
    CorpusFunction t2 = make_corpus_function("trig", 2, 2.0, 2, CorpusOptions{.seed = 5});
    std::vector<double> y{0.31, 0.77};
    CHECK(t1.evaluate(y) == t2.evaluate(y));
    CHECK(t1.seminorm_bound > 0.0);
}
}
