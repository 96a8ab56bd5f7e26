#include <graphbounds/domination.hpp>

#include <graphbounds/errors.hpp>

#include <algorithm>
#include <map>
#include <tuple>

namespace graphbounds
{
    namespace
    {
        // Multiplicities of the s-arguments in the ratios C(s,t)/C(n,t).
        struct DominationHistograms
        {
            Histogram singles;        // s = n - d(u) - 1
            Histogram closed_pairs;   // s = n - |N[u] ∪ N[v]|
            Histogram degree_pairs;   // s = n - d(u) - d(v) - 2, when >= 0
            std::vector<std::uint64_t> support;
        };

        auto make_histograms(const GraphProfile & g) -> DominationHistograms
        {
            DominationHistograms h;
            auto n = g.n();
            for (auto & c : g.classes())
                h.singles[n - c.degree - 1] += c.size;

            g.for_each_pair([&] (const PairGroup & p) {
                h.closed_pairs[n - p.closed_union()] += p.multiplicity;
                if (p.degree_first + p.degree_second + 2 <= n)
                    h.degree_pairs[n - p.degree_first - p.degree_second - 2] += p.multiplicity;
            });

            for (auto * hist : { &h.singles, &h.closed_pairs, &h.degree_pairs })
                for (auto & [s, count] : *hist)
                    h.support.push_back(s);
            return h;
        }

        auto terms_at(const GraphProfile & g, const DominationHistograms & h, std::uint64_t t) -> DomTermsAtT
        {
            auto n = g.n();
            RatioTable table(n, t, h.support);
            auto singles = table.weighted_sum(h.singles);
            auto closed = table.weighted_sum(h.closed_pairs);
            auto degree = table.weighted_sum(h.degree_pairs);

            DomTermsAtT terms;
            terms.t = t;
            terms.a = singles + t;
            terms.b = singles + 2 * closed;
            terms.c = singles + 2 * degree;

            Rational mean_y = terms.a - t;
            Rational var_b = terms.b - mean_y * mean_y;
            Rational var_c = terms.c - mean_y * mean_y;
            Rational slack = Rational(n) - terms.a;

            if (slack <= 0)
                throw InvariantViolation("a(G,t) >= n at t = " + std::to_string(t));
            if (var_b < 0)
                throw InvariantViolation("b(G,t) - (a(G,t)-t)^2 < 0 at t = " + std::to_string(t));
            if (terms.c > terms.b)
                throw InvariantViolation("c(G,t) > b(G,t) at t = " + std::to_string(t));

            terms.hm1_value = terms.a - var_b / slack;
            terms.hm2_value = terms.a - var_c / slack;
            return terms;
        }

        auto check_t(const GraphProfile & g, std::uint64_t t) -> void
        {
            if (t < 1 || t > g.n() - g.min_degree())
                throw DomainError("t = " + std::to_string(t) + " outside [1, n - δ] = [1, "
                        + std::to_string(g.n() - g.min_degree()) + "]");
        }

        auto improve(Optimum & best, const Rational & value, std::uint64_t t) -> void
        {
            if (best.t == 0 || value < best.value) {
                best.value = value;
                best.t = t;
            }
        }
    }

    auto dom_terms(const GraphProfile & g, std::uint64_t t) -> DomTermsAtT
    {
        g.require_gamma_class();
        check_t(g, t);
        return terms_at(g, make_histograms(g), t);
    }

    auto dom_terms(const Graph & g, std::uint64_t t) -> DomTermsAtT
    {
        return dom_terms(GraphProfile::from_graph(g), t);
    }

    auto domination_bounds(const GraphProfile & g) -> DominationBounds
    {
        g.require_gamma_class();
        auto h = make_histograms(g);

        DominationBounds bounds;
        for (std::uint64_t t = 1; t <= g.n() - g.min_degree(); ++t) {
            auto terms = terms_at(g, h, t);
            improve(bounds.cssf, terms.a, t);
            improve(bounds.hm1, terms.hm1_value, t);
            improve(bounds.hm2, terms.hm2_value, t);
        }
        return bounds;
    }

    auto gamma_cssf(const Graph & g) -> Optimum
    {
        return domination_bounds(GraphProfile::from_graph(g)).cssf;
    }

    auto gamma_hm1(const Graph & g) -> Optimum
    {
        return domination_bounds(GraphProfile::from_graph(g)).hm1;
    }

    auto gamma_hm2(const Graph & g) -> Optimum
    {
        return domination_bounds(GraphProfile::from_graph(g)).hm2;
    }

    BipartiteProfile::BipartiteProfile(GraphProfile profile, std::vector<int> class_sides) :
        _profile(std::move(profile)),
        _sides(std::move(class_sides))
    {
        if (_sides.size() != _profile.classes().size())
            throw DomainError("one side per twin class expected");
        if (! _profile.gamma_class().connected)
            throw DomainError("bipartite bound needs a connected graph");

        for (std::uint32_t c = 0; c < _sides.size(); ++c) {
            if (_sides[c] != 0 && _sides[c] != 1)
                throw DomainError("class side must be 0 or 1");
            (_sides[c] == 0 ? _size_a : _size_b) += _profile.classes()[c].size;
            for (auto d : _profile.quotient().neighbours(c))
                if (_sides[c] == _sides[d])
                    throw DomainError("an edge does not cross the bipartition");
        }
        if (_size_a < 2 || _size_b < 2)
            throw DomainError("bipartite bound needs |A|, |B| >= 2");
    }

    auto BipartiteProfile::from_graph(const Graph & g, const Bipartition & bip) -> BipartiteProfile
    {
        validate_bipartition(g, bip);
        auto profile = GraphProfile::from_graph(g);
        std::vector<int> vertex_side(g.n(), 0);
        for (auto u : bip.side_b)
            vertex_side[u] = 1;

        std::vector<int> sides(profile.classes().size(), -1);
        for (Vertex u = 0; u < g.n(); ++u) {
            auto c = profile.class_of()[u];
            if (sides[c] == -1)
                sides[c] = vertex_side[u];
            else if (sides[c] != vertex_side[u])
                throw DomainError("twin vertices on different sides; graph must be connected");
        }
        return BipartiteProfile(std::move(profile), std::move(sides));
    }

    auto BipartiteProfile::try_from(const GraphProfile & profile) -> std::optional<BipartiteProfile>
    {
        if (! profile.gamma_class().connected)
            return std::nullopt;
        auto sides = profile.class_sides();
        if (! sides)
            return std::nullopt;
        std::uint64_t a = 0, b = 0;
        for (std::uint32_t c = 0; c < sides->size(); ++c)
            ((*sides)[c] == 0 ? a : b) += profile.classes()[c].size;
        if (a < 2 || b < 2)
            return std::nullopt;
        return BipartiteProfile(profile, std::move(*sides));
    }

    namespace
    {
        // Grouped summands of e, f, g, h, i, j. "A-ratios" are C(s,a)/C(|A|,a),
        // "B-ratios" are C(s,b)/C(|B|,b).
        struct BipartiteHistograms
        {
            Histogram a_singles;   // u in A: B-ratio at |B| - d(u)
            Histogram b_singles;   // v in B: A-ratio at |A| - d(v)
            // (s_union, s_u, s_v) -> multiplicity, pairs inside one side
            std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, std::uint64_t> a_pairs, b_pairs;
            // (A-ratio arg |A|-|{u}∪N(v)|, B-ratio arg |B|-|{v}∪N(u)|,
            //  B-ratio arg |B|-d(u), A-ratio arg |A|-d(v)) -> multiplicity
            std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t>, std::uint64_t> cross;
            std::vector<std::uint64_t> a_support, b_support;
        };

        auto make_histograms(const BipartiteProfile & g) -> BipartiteHistograms
        {
            BipartiteHistograms h;
            auto na = g.size_a(), nb = g.size_b();
            auto & classes = g.profile().classes();
            auto & sides = g.sides();

            for (std::uint32_t c = 0; c < classes.size(); ++c) {
                if (sides[c] == 0)
                    h.a_singles[nb - classes[c].degree] += classes[c].size;
                else
                    h.b_singles[na - classes[c].degree] += classes[c].size;
            }

            g.profile().for_each_pair([&] (const PairGroup & p) {
                int s1 = sides[p.first], s2 = sides[p.second];
                if (s1 == s2) {
                    auto total = s1 == 0 ? nb : na;
                    auto & pairs = s1 == 0 ? h.a_pairs : h.b_pairs;
                    auto key = std::tuple{ total - p.open_union, total - p.degree_first, total - p.degree_second };
                    if (std::get<1>(key) < std::get<2>(key))
                        std::swap(std::get<1>(key), std::get<2>(key));
                    pairs[key] += p.multiplicity;
                    return;
                }

                // orient as u in A, v in B
                auto du = s1 == 0 ? p.degree_first : p.degree_second;
                auto dv = s1 == 0 ? p.degree_second : p.degree_first;
                std::uint64_t missing = p.adjacent ? 0 : 1;
                h.cross[{ na - (dv + missing), nb - (du + missing), nb - du, na - dv }] += p.multiplicity;
            });

            for (auto & [s, count] : h.a_singles)
                h.b_support.push_back(s);
            for (auto & [s, count] : h.b_singles)
                h.a_support.push_back(s);
            for (auto & [key, count] : h.a_pairs)
                h.b_support.push_back(std::get<0>(key));
            for (auto & [key, count] : h.b_pairs)
                h.a_support.push_back(std::get<0>(key));
            for (auto & [key, count] : h.cross) {
                h.a_support.push_back(std::get<0>(key));
                h.b_support.push_back(std::get<1>(key));
            }
            return h;
        }

        auto bip_terms_at(const BipartiteProfile & g, const BipartiteHistograms & h,
                std::uint64_t a, std::uint64_t b) -> BipTermsAtAB
        {
            auto na = g.size_a(), nb = g.size_b();
            RatioTable ra(na, a, h.a_support);
            RatioTable rb(nb, b, h.b_support);

            // P(u ∉ X_A) for u in A, P(v ∉ X_B) for v in B
            Rational out_a = make_rational(na - a, na);
            Rational out_b = make_rational(nb - b, nb);
            // P(u, v ∉ X_A) = C(|A|-2, a) / C(|A|, a), zero once a >= |A| - 1
            Rational out_a2 = a + 1 >= na ? Rational(0) : make_rational(BigInt(na - a) * (na - a - 1), BigInt(na) * (na - 1));
            Rational out_b2 = b + 1 >= nb ? Rational(0) : make_rational(BigInt(nb - b) * (nb - b - 1), BigInt(nb) * (nb - 1));

            BipTermsAtAB terms;
            terms.a = a;
            terms.b = b;
            terms.e = Rational(a + b) + out_a * rb.weighted_sum(h.a_singles) + out_b * ra.weighted_sum(h.b_singles);

            Rational p;
            for (auto & [s, count] : h.a_singles) {
                p = out_a * rb[s];
                terms.f += count * p * (1 - p);
            }
            for (auto & [s, count] : h.b_singles) {
                p = out_b * ra[s];
                terms.g += count * p * (1 - p);
            }
            for (auto & [key, count] : h.a_pairs) {
                auto [s_union, s_u, s_v] = key;
                terms.h += count * (out_a2 * rb[s_union] - out_a * out_a * rb[s_u] * rb[s_v]);
            }
            for (auto & [key, count] : h.b_pairs) {
                auto [s_union, s_u, s_v] = key;
                terms.i += count * (out_b2 * ra[s_union] - out_b * out_b * ra[s_u] * ra[s_v]);
            }
            for (auto & [key, count] : h.cross) {
                auto [sa_joint, sb_joint, sb_u, sa_v] = key;
                terms.j += count * (ra[sa_joint] * rb[sb_joint] - out_a * rb[sb_u] * out_b * ra[sa_v]);
            }

            terms.k = terms.f + terms.g + 2 * (terms.h + terms.i + terms.j);
            Rational slack = Rational(na + nb) - terms.e;
            if (slack <= 0)
                throw InvariantViolation("e(G,a,b) >= |A|+|B| at (a,b) = (" + std::to_string(a) + "," + std::to_string(b) + ")");
            if (terms.k < 0)
                throw InvariantViolation("k(G,a,b) < 0 at (a,b) = (" + std::to_string(a) + "," + std::to_string(b) + ")");
            terms.hm3_value = terms.e - terms.k / slack;
            return terms;
        }

        auto check_grid(const BipartiteProfile & g, std::uint64_t a, std::uint64_t b) -> void
        {
            auto na = g.size_a(), nb = g.size_b();
            if (a > na || b > nb || a + b == 0 || a + b >= na + nb)
                throw DomainError("(a,b) = (" + std::to_string(a) + "," + std::to_string(b) + ") outside S(|A|,|B|)");
        }
    }

    auto bip_terms(const BipartiteProfile & g, std::uint64_t a, std::uint64_t b) -> BipTermsAtAB
    {
        check_grid(g, a, b);
        return bip_terms_at(g, make_histograms(g), a, b);
    }

    auto bip_terms(const Graph & g, const Bipartition & bip, std::uint64_t a, std::uint64_t b) -> BipTermsAtAB
    {
        return bip_terms(BipartiteProfile::from_graph(g, bip), a, b);
    }

    auto gamma_hm3(const BipartiteProfile & g) -> GridOptimum
    {
        auto h = make_histograms(g);
        auto na = g.size_a(), nb = g.size_b();

        GridOptimum best;
        bool any = false;
        for (std::uint64_t a = 0; a <= na; ++a)
            for (std::uint64_t b = 0; b <= nb; ++b) {
                if (a + b == 0 || a + b >= na + nb)
                    continue;
                auto terms = bip_terms_at(g, h, a, b);
                if (! any || terms.hm3_value < best.value) {
                    best = { terms.hm3_value, a, b };
                    any = true;
                }
            }

        if (best.value > std::min(na, nb))
            throw InvariantViolation("γ_HM3 exceeds min{|A|,|B|}");
        return best;
    }

    auto gamma_hm3(const Graph & g, const Bipartition & bip) -> GridOptimum
    {
        return gamma_hm3(BipartiteProfile::from_graph(g, bip));
    }
}
