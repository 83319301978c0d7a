#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"
#include "twbound/bounds.hpp"
#include "twbound/families.hpp"

using namespace twbound;

TEST_CASE("bound formulas on K_{3,5}, checked by hand") {
    // n=8, max degree 5, lambda2 = 3, lambda_max = 8
    REQUIRE(*bound_cs03(8, 5, 3) == Catch::Approx(72.0 / 44.0 - 1.0).epsilon(1e-12));
    REQUIRE(*bound_ghnoo24(8, 5, 3) == Catch::Approx(72.0 / 29.0 - 1.0).epsilon(1e-12));
    REQUIRE(*bound_thm1(8, 5, 3) == Catch::Approx(2.0).epsilon(1e-12));
    REQUIRE(*bound_thm2(8, 3, 8) == Catch::Approx(48.0 / 21.0 - 1.0).epsilon(1e-12));

    const auto report = bounds_report(complete_bipartite(3, 5));
    REQUIRE(report.n == 8);
    REQUIRE(report.m == 15);
    REQUIRE(report.max_degree == 5);
    REQUIRE(report.lambda2 == Catch::Approx(3.0).margin(1e-8));
    REQUIRE(report.lambda_max == Catch::Approx(8.0).margin(1e-8));
    REQUIRE(*report.thm1 == Catch::Approx(2.0).margin(1e-8));
    REQUIRE(report.best_integer == 2);
}

TEST_CASE("ghnoo24 uses the larger denominator") {
    // lambda2 < 2*D/3 makes 4D+3l the max; above it 3D+4.5l wins
    REQUIRE(*bound_ghnoo24(10, 3, 1) == Catch::Approx(30.0 / 15.0 - 1.0).epsilon(1e-12));
    REQUIRE(*bound_ghnoo24(10, 3, 3) == Catch::Approx(90.0 / 22.5 - 1.0).epsilon(1e-12));
}

TEST_CASE("bounds are not applicable without edges") {
    const auto report = bounds_report(Graph(5, {}));
    REQUIRE_FALSE(report.cs03.has_value());
    REQUIRE_FALSE(report.ghnoo24.has_value());
    REQUIRE_FALSE(report.thm1.has_value());
    REQUIRE_FALSE(report.thm2.has_value());
    REQUIRE(report.best_integer == 0);
    REQUIRE_FALSE(bound_cs03(5, 0, 0).has_value());
    REQUIRE_FALSE(bound_thm2(5, 0, 0).has_value());
}

TEST_CASE("integerization rounds up but absorbs eigensolver noise") {
    REQUIRE(integerize_bound(2.0) == 2);
    REQUIRE(integerize_bound(2.0 - 1e-9) == 2);   // noise below an integer
    REQUIRE(integerize_bound(2.0 + 1e-9) == 2);   // noise above an integer
    REQUIRE(integerize_bound(2.0001) == 3);       // a real excess rounds up
    REQUIRE(integerize_bound(1.1) == 2);
    REQUIRE(integerize_bound(-0.4) == 0);
    REQUIRE(integerize_bound(-3.0) == 0);
    REQUIRE(integerize_bound(0.0) == 0);
}

TEST_CASE("complete graphs: thm2 is exactly n-1") {
    for (int n = 2; n <= 12; ++n) {
        const auto report = bounds_report(complete(n));
        REQUIRE(*report.thm2 == Catch::Approx(n - 1.0).margin(1e-6));
        REQUIRE(report.best_integer == n - 1);
    }
}

TEST_CASE("complete bipartite: thm1 is exactly p-1") {
    // K_{1,1} is the single edge: the eigenvalue p = min(p,q) has
    // multiplicity q-1 = 0 there, so lambda2 = p+q instead and the identity
    // starts at p+q >= 3.
    for (int p = 1; p <= 6; ++p)
        for (int q = std::max(p, 2); q <= 7; ++q) {
            INFO("K_{" << p << "," << q << "}");
            const auto report = bounds_report(complete_bipartite(p, q));
            REQUIRE(report.lambda2 == Catch::Approx(p).margin(1e-8));
            REQUIRE(*report.thm1 == Catch::Approx(p - 1.0).margin(1e-6));
        }
}

TEST_CASE("single edge yields the tight bound 1") {
    const auto report = bounds_report(Graph(2, {{0, 1}}));
    REQUIRE(report.lambda2 == Catch::Approx(2.0).margin(1e-8));
    REQUIRE(*report.thm1 == Catch::Approx(1.0 / 3.0).margin(1e-8));
    REQUIRE(report.best_integer == 1);
}

TEST_CASE("dominance thm1 >= ghnoo24 >= cs03") {
    SECTION("random parameter triples") {
        SplitMix64 rng(7);
        for (int trial = 0; trial < 20000; ++trial) {
            const int n = 2 + static_cast<int>(rng.next() % 1999);
            const double d = 1.0 + rng.next_unit() * (n - 1);
            const double l2 = rng.next_unit() * 2.0 * d + 1e-12;
            const double c = *bound_cs03(n, d, l2);
            const double h = *bound_ghnoo24(n, d, l2);
            const double t = *bound_thm1(n, d, l2);
            REQUIRE(t >= h - 1e-12);
            REQUIRE(h >= c - 1e-12);
        }
    }
    SECTION("corpus graphs") {
        auto corpus = oracle::family_corpus(11);
        auto extra = oracle::gnp_corpus(30, 3, 12);
        corpus.insert(corpus.end(), extra.begin(), extra.end());
        for (const auto& [name, g] : corpus) {
            INFO(name);
            const auto r = bounds_report(g);
            if (!r.thm1) continue;
            REQUIRE(*r.thm1 >= *r.ghnoo24 - 1e-12);
            REQUIRE(*r.ghnoo24 >= *r.cs03 - 1e-12);
        }
    }
}

TEST_CASE("all bounds are sound on small graphs") {
    auto corpus = oracle::family_corpus(7);
    auto extra = oracle::gnp_corpus(30, 3, 7);
    corpus.insert(corpus.end(), extra.begin(), extra.end());
    for (const auto& [name, g] : corpus) {
        if (g.n() == 0) continue;
        INFO(name);
        const int tw = oracle::brute_force_treewidth(g);
        REQUIRE(bounds_report(g).best_integer <= tw);
    }
}
