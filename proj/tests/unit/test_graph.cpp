#include <doctest.h>

#include "brute.hpp"

#include <graphbounds/catalog.hpp>
#include <graphbounds/errors.hpp>
#include <graphbounds/graph.hpp>
#include <graphbounds/profile.hpp>

#include <random>
#include <set>

using namespace graphbounds;

namespace
{
    auto graph(Vertex n, std::vector<Edge> edges) -> Graph
    {
        return Graph::from_edges(n, edges);
    }

    auto p3() -> Graph { return graph(3, { { 0, 1 }, { 1, 2 } }); }
}

TEST_CASE("graph construction")
{
    auto g = graph(4, { { 0, 1 }, { 1, 0 }, { 2, 3 }, { 1, 2 } });
    CHECK(g.n() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 0));
    CHECK_FALSE(g.adjacent(0, 3));
    CHECK(g.degree(1) == 2);
    CHECK(g.min_degree() == 1);
    CHECK(g.max_degree() == 2);
    CHECK(g.neighbours(1) == std::vector<Vertex>{ 0, 2 });
    CHECK(g.edges() == std::vector<Edge>{ { 0, 1 }, { 1, 2 }, { 2, 3 } });

    CHECK_THROWS_AS(graph(3, { { 1, 1 } }), DomainError);
    CHECK_THROWS_AS(graph(3, { { 0, 3 } }), DomainError);
}

TEST_CASE("degree sum equals twice the edge count")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        auto g = brute::random_graph(rng, static_cast<Vertex>(1 + rng() % 150), 0.3);
        std::uint64_t sum = 0;
        for (Vertex u = 0; u < g.n(); ++u) {
            sum += g.degree(u);
            CHECK_FALSE(g.adjacent(u, u));
            for (Vertex v = 0; v < g.n(); ++v)
                REQUIRE(g.adjacent(u, v) == g.adjacent(v, u));
        }
        CHECK(sum == 2 * g.edge_count());
    }
}

TEST_CASE("graph6 examples")
{
    auto p = parse_graph6("Bg");
    CHECK(p == p3());
    CHECK(encode_graph6(p3()) == "Bg");

    // standard encoding: "B_" is the single edge {0,1} on three vertices
    auto b = parse_graph6("B_");
    CHECK(b.n() == 3);
    CHECK(b.edges() == std::vector<Edge>{ { 0, 1 } });

    auto a = parse_graph6("A_");
    CHECK(a.n() == 2);
    CHECK(a.edges() == std::vector<Edge>{ { 0, 1 } });

    auto k4 = parse_graph6("C~");
    CHECK(k4.n() == 4);
    CHECK(k4.edge_count() == 6);

    CHECK(parse_graph6("Bg\n") == p3());
}

TEST_CASE("graph6 errors carry an offset")
{
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);       // truncated
    CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);     // trailing
    try {
        parse_graph6("B\x7f");
        FAIL("expected ParseError");
    }
    catch (const ParseError & e) {
        CHECK(e.position() == 1);
    }
}

TEST_CASE("graph6 round trip")
{
    std::mt19937_64 rng(17);
    // every graph on up to 5 vertices
    for (Vertex n = 1; n <= 5; ++n) {
        unsigned pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{ 1 } << pairs); ++mask) {
            std::vector<Edge> edges;
            unsigned bit = 0;
            for (Vertex v = 1; v < n; ++v)
                for (Vertex u = 0; u < v; ++u, ++bit)
                    if ((mask >> bit) & 1)
                        edges.emplace_back(u, v);
            auto g = graph(n, edges);
            REQUIRE(parse_graph6(encode_graph6(g)) == g);
        }
    }
    // random samples on 6..8 and on long-form sizes
    for (int i = 0; i < 300; ++i) {
        auto g = brute::random_graph(rng, static_cast<Vertex>(6 + rng() % 3), 0.5);
        REQUIRE(parse_graph6(encode_graph6(g)) == g);
    }
    for (Vertex n : { 62, 63, 64, 100, 300 }) {
        auto g = brute::random_graph(rng, n, 0.1);
        auto text = encode_graph6(g);
        if (n >= 63)
            CHECK(text[0] == '~');
        REQUIRE(parse_graph6(text) == g);
    }
}

TEST_CASE("edge list parsing")
{
    CHECK(parse_edge_list("3\n0 1\n1 2") == p3());
    CHECK(parse_edge_list("# comment\n3\n\n0 1\n1 2\n") == p3());
    auto single = parse_edge_list("2\n0 1\n1 0");
    CHECK(single.edge_count() == 1);

    try {
        parse_edge_list("3\n0 3");
        FAIL("expected ParseError");
    }
    catch (const ParseError & e) {
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(parse_edge_list("3\n1 1"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 x"), ParseError);
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
}

TEST_CASE("named families")
{
    auto star = make_named(parse_named("star:2"));
    CHECK(star.n() == 3);
    CHECK(star.degree(0) == 2);
    CHECK(star == graph(3, { { 0, 1 }, { 0, 2 } }));

    auto k = make_named(parse_named("cbip:2,1000"));
    CHECK(k.n() == 1002);
    CHECK(k.edge_count() == 2000);
    CHECK(k.adjacent(0, 2));
    CHECK_FALSE(k.adjacent(0, 1));

    auto c4 = make_named(parse_named("cycle:4"));
    auto k22 = make_named(parse_named("cbip:2,2"));
    CHECK(c4.edge_count() == 4);
    CHECK(k22.edge_count() == 4);
    for (Vertex u = 0; u < 4; ++u) {
        CHECK(c4.degree(u) == 2);
        CHECK(k22.degree(u) == 2);
    }
    CHECK(brute::two_colourable(c4));

    auto path = make_named(parse_named("path:5"));
    CHECK(path.edge_count() == 4);
    CHECK(parse_named("cbip:3,4").label() == "cbip:3,4");
    CHECK(parse_named("star:1000000").vertex_count() == 1000001);

    CHECK_THROWS_AS(parse_named("wheel:5"), ParseError);
    CHECK_THROWS_AS(parse_named("star"), ParseError);
    CHECK_THROWS_AS(parse_named("star:x"), ParseError);
    CHECK_THROWS_AS(make_named(parse_named("cycle:2")), DomainError);
    CHECK_THROWS_AS(make_named(parse_named("star:0")), DomainError);
    CHECK_THROWS_AS(make_named(parse_named("cbip:0,3")), DomainError);
}

TEST_CASE("gamma class")
{
    auto p = gamma_class(p3());
    CHECK(p.connected);
    CHECK(p.non_complete);
    CHECK(p.n_ge_3);
    CHECK(p.in_class());

    auto k4 = gamma_class(parse_graph6("C~"));
    CHECK_FALSE(k4.non_complete);
    CHECK_FALSE(k4.in_class());

    auto two_edges = gamma_class(graph(4, { { 0, 1 }, { 2, 3 } }));
    CHECK_FALSE(two_edges.connected);

    CHECK_FALSE(gamma_class(graph(2, { { 0, 1 } })).n_ge_3);
    CHECK_THROWS_AS(require_gamma_class(parse_graph6("C~")), DomainError);
    CHECK_NOTHROW(require_gamma_class(p3()));
}

TEST_CASE("class members have min degree at most n - 2")
{
    for (auto & g : small_graph_catalog(6))
        CHECK(g.min_degree() <= g.n() - 2);
}

TEST_CASE("bipartition")
{
    auto c4 = make_named(parse_named("cycle:4"));
    auto bip = find_bipartition(c4);
    REQUIRE(bip);
    CHECK(bip->side_a == std::vector<Vertex>{ 0, 2 });
    CHECK(bip->side_b == std::vector<Vertex>{ 1, 3 });

    CHECK_FALSE(find_bipartition(make_named(parse_named("cycle:3"))));

    auto k = make_named(parse_named("cbip:2,1000"));
    auto kb = find_bipartition(k);
    REQUIRE(kb);
    CHECK(kb->side_a == std::vector<Vertex>{ 0, 1 });

    CHECK_THROWS_AS(validate_bipartition(c4, Bipartition{ { 0, 1 }, { 2, 3 } }), DomainError);
    CHECK_THROWS_AS(validate_bipartition(c4, Bipartition{ { 0, 2 }, { 1 } }), DomainError);
    CHECK_THROWS_AS(validate_bipartition(c4, Bipartition{ { 0, 2 }, { 1, 2, 3 } }), DomainError);
}

TEST_CASE("bipartition exists iff no odd cycle")
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 400; ++i) {
        auto n = static_cast<Vertex>(1 + rng() % 10);
        auto g = brute::random_graph(rng, n, 0.05 + 0.3 * (i % 4) / 3.0);
        auto bip = find_bipartition(g);
        REQUIRE(bip.has_value() == brute::two_colourable(g));
        if (bip)
            CHECK_NOTHROW(validate_bipartition(g, *bip));
    }
}

TEST_CASE("closed union size")
{
    CHECK(closed_union_size(p3(), 0, 1) == 3);
    auto c4 = make_named(parse_named("cycle:4"));
    CHECK(closed_union_size(c4, 0, 2) == 4);
    auto k = make_named(parse_named("cbip:5,5"));
    CHECK(closed_union_size(k, 0, 7) == 10);
    CHECK_THROWS_AS(closed_union_size(c4, 1, 1), DomainError);

    std::mt19937_64 rng(29);
    for (int i = 0; i < 30; ++i) {
        auto g = brute::random_graph(rng, static_cast<Vertex>(2 + rng() % 80), 0.2);
        for (Vertex u = 0; u < g.n(); ++u)
            for (Vertex v = u + 1; v < g.n(); ++v) {
                auto s = closed_union_size(g, u, v);
                REQUIRE(static_cast<long long>(s) == brute::closed_union(g, u, v));
                CHECK(s >= std::max(g.degree(u), g.degree(v)) + 1);
                CHECK(s <= g.degree(u) + g.degree(v) + 2);
                bool disjoint = ! g.adjacent(u, v) && brute::common(g, u, v) == 0;
                CHECK((s == g.degree(u) + g.degree(v) + 2) == disjoint);
            }
    }
}

TEST_CASE("catalog counts")
{
    // connected graphs on 3..6 vertices minus the complete ones: 1 + 5 + 20 + 111
    auto cat = small_graph_catalog(6);
    CHECK(cat.size() == 137);
    std::set<std::string> codes;
    for (auto & g : cat) {
        CHECK(gamma_class(g).in_class());
        codes.insert(encode_graph6(g));
    }
    CHECK(codes.size() == cat.size());
}

TEST_CASE("twin profile preserves structure")
{
    std::mt19937_64 rng(31);
    std::vector<Graph> graphs{ make_named(parse_named("cbip:3,7")), make_named(parse_named("star:9")) };
    for (int i = 0; i < 30; ++i)
        graphs.push_back(brute::random_class_graph(rng, static_cast<Vertex>(3 + rng() % 30), 0.3));

    for (auto & g : graphs) {
        auto prof = GraphProfile::from_graph(g);
        CHECK(prof.n() == g.n());
        CHECK(prof.edge_count() == g.edge_count());
        CHECK(prof.min_degree() == g.min_degree());
        CHECK(prof.max_degree() == g.max_degree());

        std::uint64_t pairs = 0, sized = 0;
        for (auto & c : prof.classes())
            sized += c.size;
        CHECK(sized == g.n());
        prof.for_each_pair([&] (const PairGroup & p) { pairs += p.multiplicity; });
        CHECK(pairs == std::uint64_t{ g.n() } * (g.n() - 1) / 2);

        // per-pair quantities agree with the graph
        auto & cls = prof.class_of();
        REQUIRE(cls.size() == g.n());
        prof.for_each_pair([&] (const PairGroup & p) {
            for (Vertex u = 0; u < g.n(); ++u)
                for (Vertex v = u + 1; v < g.n(); ++v) {
                    bool here = (cls[u] == p.first && cls[v] == p.second) || (cls[u] == p.second && cls[v] == p.first);
                    if (! here)
                        continue;
                    REQUIRE(p.adjacent == g.adjacent(u, v));
                    REQUIRE(static_cast<long long>(p.closed_union()) == brute::closed_union(g, u, v));
                    REQUIRE(static_cast<long long>(p.common) == brute::common(g, u, v));
                }
        });
    }
}

TEST_CASE("named profiles match materialised graphs")
{
    for (auto text : { "star:7", "cbip:3,5", "cbip:2,2", "path:6", "cycle:7" }) {
        auto spec = parse_named(text);
        auto a = GraphProfile::from_named(spec), b = GraphProfile::from_graph(make_named(spec));
        CHECK(a.n() == b.n());
        CHECK(a.edge_count() == b.edge_count());
        CHECK(a.classes().size() == b.classes().size());
    }
}
