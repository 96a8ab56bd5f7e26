#include <doctest.h>

#include "brute.hpp"

#include <graphbounds/catalog.hpp>
#include <graphbounds/domination.hpp>
#include <graphbounds/errors.hpp>

#include <cmath>
#include <random>

using namespace graphbounds;

namespace
{
    auto named(const char * text) -> Graph { return make_named(parse_named(text)); }
    auto p3() -> Graph { return named("path:3"); }
    auto c4() -> Graph { return named("cycle:4"); }
}

TEST_CASE("dom_terms on P_3 and C_4")
{
    auto t1 = dom_terms(p3(), 1);
    CHECK(t1.a == Rational(5, 3));
    CHECK(t1.b == Rational(2, 3));
    CHECK(t1.c == Rational(2, 3));
    CHECK(t1.hm1_value == Rational(3, 2));

    auto t2 = dom_terms(p3(), 2);
    CHECK(t2.a == 2);
    CHECK(t2.b == 0);
    CHECK(t2.hm1_value == 2);

    auto c = dom_terms(c4(), 1);
    CHECK(c.a == 2);
    CHECK(c.b == 1);
    CHECK(c.hm1_value == 2);

    CHECK_THROWS_AS(dom_terms(p3(), 0), DomainError);
    CHECK_THROWS_AS(dom_terms(p3(), 3), DomainError);
    CHECK_THROWS_AS(dom_terms(parse_graph6("C~"), 1), DomainError);
}

TEST_CASE("domination bounds on P_3 and C_4")
{
    CHECK(gamma_cssf(p3()).value == Rational(5, 3));
    CHECK(gamma_cssf(p3()).t == 1);
    CHECK(gamma_hm1(p3()).value == Rational(3, 2));
    CHECK(gamma_hm2(p3()).value == Rational(3, 2));
    CHECK(gamma_cssf(c4()).value == 2);
    CHECK(gamma_hm1(c4()).value == 2);
    CHECK(gamma_hm2(c4()).value == 2);
}

TEST_CASE("dom_terms equal the per-pair formulas and the brute distribution")
{
    std::mt19937_64 rng(41);
    std::vector<Graph> graphs = small_graph_catalog(5);
    for (int i = 0; i < 150; ++i)
        graphs.push_back(brute::random_class_graph(rng, static_cast<Vertex>(3 + rng() % 6), 0.2 + 0.6 * (i % 5) / 4.0));

    for (auto & g : graphs) {
        for (unsigned t = 1; t <= g.n() - g.min_degree(); ++t) {
            auto lib = dom_terms(g, t);
            auto ref = brute::dom_formula(g, t);
            REQUIRE(lib.a == ref.a);
            REQUIRE(lib.b == ref.b);
            REQUIRE(lib.c == ref.c);
            REQUIRE(lib.hm1_value == ref.hm1);
            REQUIRE(lib.hm2_value == ref.hm2);

            auto m = brute::dom_moments(g, t);
            Rational shift = lib.a - static_cast<long>(t);
            REQUIRE(m.mean == lib.a);
            REQUIRE(m.variance == lib.b - shift * shift);
            CHECK(lib.a < static_cast<long>(g.n()));
            CHECK(lib.c <= lib.b);
        }
    }
}

TEST_CASE("profile evaluation agrees with per-vertex formulas on larger graphs")
{
    std::mt19937_64 rng(43);
    for (int i = 0; i < 10; ++i) {
        auto g = brute::random_class_graph(rng, static_cast<Vertex>(20 + rng() % 30), 0.15);
        auto prof = GraphProfile::from_graph(g);
        for (unsigned t : { 1u, 3u, 7u }) {
            if (t > g.n() - g.min_degree())
                continue;
            auto lib = dom_terms(prof, t);
            auto ref = brute::dom_formula(g, t);
            REQUIRE(lib.a == ref.a);
            REQUIRE(lib.b == ref.b);
            REQUIRE(lib.c == ref.c);
        }
    }
}

TEST_CASE("sweep minima and Theorem 4 order")
{
    std::mt19937_64 rng(47);
    for (int i = 0; i < 60; ++i) {
        auto g = brute::random_class_graph(rng, static_cast<Vertex>(3 + rng() % 25), 0.1 + 0.8 * (i % 7) / 6.0);
        auto bounds = domination_bounds(GraphProfile::from_graph(g));

        Rational best_a, best_hm1, best_hm2;
        std::uint64_t t_a = 0;
        for (unsigned t = 1; t <= g.n() - g.min_degree(); ++t) {
            auto ref = brute::dom_formula(g, t);
            if (t == 1 || ref.a < best_a) {
                best_a = ref.a;
                t_a = t;
            }
            if (t == 1 || ref.hm1 < best_hm1)
                best_hm1 = ref.hm1;
            if (t == 1 || ref.hm2 < best_hm2)
                best_hm2 = ref.hm2;
        }
        CHECK(bounds.cssf.value == best_a);
        CHECK(bounds.cssf.t == t_a);
        CHECK(bounds.hm1.value == best_hm1);
        CHECK(bounds.hm2.value == best_hm2);
        CHECK(bounds.hm1.value <= bounds.cssf.value);
        CHECK(bounds.hm1.value <= bounds.hm2.value);
    }
}

TEST_CASE("star separation")
{
    for (std::uint64_t m : { 100, 2500 }) {
        auto prof = GraphProfile::from_named(NamedGraph{ Family::star, { m } });
        auto b = domination_bounds(prof);
        CHECK(b.cssf.value > Rational(3 * static_cast<long>(m), 4));
        // γ_HM1 < 2√m with √m integral here
        CHECK(b.hm1.value < 2 * static_cast<long>(std::lround(std::sqrt(static_cast<double>(m)))));
    }
}

TEST_CASE("bip_terms on K_{2,2}")
{
    auto g = named("cbip:2,2");
    Bipartition bip{ { 0, 1 }, { 2, 3 } };

    auto t10 = bip_terms(g, bip, 1, 0);
    CHECK(t10.e == 2);
    CHECK(t10.f == Rational(1, 2));
    CHECK(t10.g == 0);
    CHECK(t10.h == Rational(-1, 4));
    CHECK(t10.i == 0);
    CHECK(t10.j == 0);
    CHECK(t10.k == 0);
    CHECK(t10.hm3_value == 2);

    auto t20 = bip_terms(g, bip, 2, 0);
    CHECK(t20.e == 2);
    CHECK(t20.k == 0);
    CHECK(t20.hm3_value == 2);

    auto t11 = bip_terms(g, bip, 1, 1);
    CHECK(t11.e == 2);
    CHECK(t11.k == 0);
    CHECK(t11.hm3_value == 2);

    CHECK(gamma_hm3(g, bip).value == 2);

    CHECK_THROWS_AS(bip_terms(g, bip, 0, 0), DomainError);
    CHECK_THROWS_AS(bip_terms(g, bip, 2, 2), DomainError);
    CHECK_THROWS_AS(bip_terms(g, bip, 3, 0), DomainError);
}

TEST_CASE("bipartite bound preconditions")
{
    auto star = named("star:4");
    auto bip = find_bipartition(star);
    REQUIRE(bip);
    CHECK_THROWS_AS(gamma_hm3(star, *bip), DomainError);
    CHECK_FALSE(BipartiteProfile::try_from(GraphProfile::from_graph(star)));
    CHECK_FALSE(BipartiteProfile::try_from(GraphProfile::from_graph(named("cycle:5"))));
    CHECK(BipartiteProfile::try_from(GraphProfile::from_graph(named("cycle:6"))));

    auto c4 = named("cycle:4");
    CHECK_THROWS_AS(gamma_hm3(c4, Bipartition{ { 0, 1 }, { 2, 3 } }), DomainError);
}

TEST_CASE("bip_terms match the brute distribution on random bipartite graphs")
{
    std::mt19937_64 rng(53);
    for (int i = 0; i < 40; ++i) {
        auto na = static_cast<Vertex>(2 + rng() % 4), nb = static_cast<Vertex>(2 + rng() % 4);
        auto g = brute::random_bipartite(rng, na, nb, 0.6);
        Bipartition bip;
        for (Vertex u = 0; u < na; ++u)
            bip.side_a.push_back(u);
        for (Vertex u = na; u < na + nb; ++u)
            bip.side_b.push_back(u);

        Rational best;
        bool first = true;
        for (unsigned a = 0; a <= na; ++a)
            for (unsigned b = 0; b <= nb; ++b) {
                if (a + b == 0 || a + b == na + nb)
                    continue;
                auto lib = bip_terms(g, bip, a, b);
                auto m = brute::bip_moments(g, bip.side_a, bip.side_b, a, b);
                REQUIRE(lib.e == m.mean);
                REQUIRE(lib.k == m.variance);
                CHECK(lib.k >= 0);
                CHECK(lib.k == lib.f + lib.g + 2 * (lib.h + lib.i + lib.j));
                if (first || lib.hm3_value < best)
                    best = lib.hm3_value;
                first = false;
            }
        auto opt = gamma_hm3(g, bip);
        CHECK(opt.value == best);
        CHECK(opt.value <= static_cast<long>(std::min(na, nb)));
    }
}

TEST_CASE("K_{2,1000}")
{
    auto prof = GraphProfile::from_named(NamedGraph{ Family::complete_bipartite, { 2, 1000 } });
    auto bp = BipartiteProfile::try_from(prof);
    REQUIRE(bp);
    CHECK(gamma_hm3(*bp).value == 2);
    auto b = domination_bounds(prof);
    CHECK(b.hm1.value > 60);
    CHECK(b.hm2.value > 600);
    CHECK(b.cssf.value > 600);
}
