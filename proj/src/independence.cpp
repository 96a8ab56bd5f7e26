#include <graphbounds/independence.hpp>

#include <graphbounds/errors.hpp>

#include <tuple>

namespace graphbounds
{
    DegreeFamily::DegreeFamily(const GraphProfile & g)
    {
        for (auto & c : g.classes()) {
            _members[c.degree + 1] += c.size;
            _size += c.size;
            _sum += c.size * (c.degree + 1);
            _reciprocal_sum += make_rational(c.size, c.degree + 1);
        }
    }

    auto DegreeFamily::decrement() -> void
    {
        if (_members.empty())
            throw DomainError("empty degree family");
        auto top = std::prev(_members.end());
        auto value = top->first;
        if (value <= 1)
            throw DomainError("degree family exhausted: every member is 1");

        if (--top->second == 0)
            _members.erase(top);
        ++_members[value - 1];
        --_sum;
        ++_l;
        // 1/(v-1) - 1/v
        _reciprocal_sum += make_rational(1, BigInt(value) * (value - 1));
    }

    auto alpha_cw(const GraphProfile & g) -> Rational
    {
        g.require_gamma_class();
        Rational total;
        for (auto & c : g.classes())
            total += make_rational(c.size, c.degree + 1);
        return total;
    }

    auto alpha_s(const GraphProfile & g) -> Rational
    {
        auto total = alpha_cw(g);
        auto & classes = g.classes();
        for (std::uint32_t c = 0; c < classes.size(); ++c) {
            Rational inner = make_rational(classes[c].degree, classes[c].degree + 1);
            for (auto d : g.quotient().neighbours(c))
                inner -= make_rational(classes[d].size, classes[d].degree + 1);
            if (inner > 0)
                total += classes[c].size * inner / (classes[c].degree + 1);
        }
        return total;
    }

    auto acl_correction(const GraphProfile & g) -> Rational
    {
        g.require_gamma_class();
        Rational total;
        for (auto & c : g.classes())
            total += make_rational(BigInt(c.size) * c.degree, BigInt(c.degree + 1) * (c.degree + 1));

        // (adjacent, smaller degree, larger degree, common) -> multiplicity
        std::map<std::tuple<bool, std::uint64_t, std::uint64_t, std::uint64_t>, std::uint64_t> groups;
        g.for_each_pair([&] (const PairGroup & p) {
            auto lo = std::min(p.degree_first, p.degree_second);
            auto hi = std::max(p.degree_first, p.degree_second);
            if (! p.adjacent && p.common == 0)
                return;
            groups[{ p.adjacent, lo, hi, p.adjacent ? 0 : p.common }] += p.multiplicity;
        });

        for (auto & [key, count] : groups) {
            auto [adjacent, du, dv, common] = key;
            BigInt den = BigInt(du + 1) * (dv + 1);
            if (adjacent)
                total -= make_rational(BigInt(2) * count, den);
            else
                total += make_rational(BigInt(2) * count * common, den * (2 + du + dv - common));
        }

        if (total < 0)
            throw InvariantViolation("ACL correction A(G) < 0");
        return total;
    }

    auto alpha_acl(const GraphProfile & g) -> Rational
    {
        auto cw = alpha_cw(g);
        if (cw <= 1)
            throw InvariantViolation("α_CW <= 1 on a graph in the class");
        return cw + acl_correction(g) / (cw - 1);
    }

    auto phi(const GraphProfile & g, std::uint64_t l) -> Rational
    {
        g.require_gamma_class();
        if (l > 2 * g.edge_count())
            throw DomainError("φ(G, l) needs l <= Σ d(u) = " + std::to_string(2 * g.edge_count()));
        DegreeFamily family(g);
        for (std::uint64_t i = 0; i < l; ++i)
            family.decrement();
        return family.reciprocal_sum();
    }

    auto alpha_hr(const GraphProfile & g) -> std::uint64_t
    {
        g.require_gamma_class();
        DegreeFamily family(g);
        std::uint64_t k = 1;
        while (family.reciprocal_sum() > k) {
            ++k;
            auto target = 2 * (k - 1);
            if (target > 2 * g.edge_count())
                throw InvariantViolation("α_HR loop ran past l = Σ d(u)");
            while (family.decrements() < target)
                family.decrement();
        }
        return k;
    }

    namespace
    {
        auto check_t(const GraphProfile & g, std::uint64_t t) -> void
        {
            if (t < 2 || t > g.n() - g.min_degree())
                throw DomainError("t = " + std::to_string(t) + " outside 2 <= t <= n - δ = "
                        + std::to_string(g.n() - g.min_degree()));
        }

        struct IndependenceHistograms
        {
            Histogram singles;            // s = n - d(u) - 1
            Histogram weighted_singles;   // same s, weight n - 1 - d(u) (non-edges at u)
            Histogram non_edges;          // s = n - |N[u] ∪ N[v]|
            std::vector<std::uint64_t> first_support, second_support;
        };

        auto make_histograms(const GraphProfile & g) -> IndependenceHistograms
        {
            IndependenceHistograms h;
            auto n = g.n();
            for (auto & c : g.classes()) {
                h.singles[n - c.degree - 1] += c.size;
                h.weighted_singles[n - c.degree - 1] += c.size * (n - 1 - c.degree);
            }
            g.for_each_pair([&] (const PairGroup & p) {
                if (! p.adjacent)
                    h.non_edges[n - p.closed_union()] += p.multiplicity;
            });
            for (auto & [s, count] : h.singles) {
                h.first_support.push_back(s);
                h.second_support.push_back(s);
            }
            for (auto & [s, count] : h.non_edges)
                h.second_support.push_back(s);
            return h;
        }
    }

    auto ind_terms(const GraphProfile & g, std::uint64_t t) -> IndTermsAtT
    {
        g.require_gamma_class();
        check_t(g, t);
        auto n = static_cast<long long>(g.n());
        auto tt = static_cast<long long>(t);

        IndTermsAtT terms;
        terms.t = t;
        for (auto & c : g.classes())
            terms.a_ind += c.size * binom(n - static_cast<long long>(c.degree) - 1, tt - 1);

        std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, std::uint64_t> groups;
        g.for_each_pair([&] (const PairGroup & p) {
            if (! p.adjacent)
                groups[{ p.degree_first, p.degree_second, p.closed_union() }] += p.multiplicity;
        });
        for (auto & [key, count] : groups) {
            auto [du, dv, closed] = key;
            auto su = n - static_cast<long long>(du), sv = n - static_cast<long long>(dv);
            BigInt both = binom(n - static_cast<long long>(closed), tt - 2);
            BigInt term = binom(su - 1, tt - 2) + binom(sv - 1, tt - 2) - both;
            BigInt exact = binom(su - 2, tt - 2) + binom(sv - 2, tt - 2) - both;
            terms.b_ind += 2 * count * term;
            terms.b_exact += 2 * count * exact;
        }

        if (terms.a_ind <= 0)
            throw InvariantViolation("a(G,t) = 0 at t = " + std::to_string(t));
        terms.hm_value = Rational(static_cast<long>(2 * tt - 1)) - make_rational(terms.b_ind, terms.a_ind);
        return terms;
    }

    auto alpha_hm(const GraphProfile & g) -> Optimum
    {
        g.require_gamma_class();
        auto h = make_histograms(g);
        auto n = g.n();

        Optimum best;
        for (std::uint64_t t = 2; t <= n - g.min_degree(); ++t) {
            RatioTable first(n - 1, t - 1, h.first_support);
            RatioTable second(n - 1, t - 2, h.second_support);

            // a / C(n-1, t-1) and b / C(n-1, t-2)
            auto a_scaled = first.weighted_sum(h.singles);
            Rational b_scaled = 2 * (second.weighted_sum(h.weighted_singles) - second.weighted_sum(h.non_edges));
            if (a_scaled <= 0)
                throw InvariantViolation("a(G,t) = 0 at t = " + std::to_string(t));

            Rational value = Rational(2 * t - 1) - make_rational(t - 1, n - t + 1) * b_scaled / a_scaled;
            if (best.t == 0 || value > best.value) {
                best.value = value;
                best.t = t;
            }
        }
        return best;
    }

    auto independence_bounds(const GraphProfile & g) -> IndependenceBounds
    {
        IndependenceBounds bounds;
        bounds.cw = alpha_cw(g);
        bounds.s = alpha_s(g);
        bounds.acl = alpha_acl(g);
        bounds.hr = alpha_hr(g);
        bounds.hm = alpha_hm(g);
        return bounds;
    }

    auto alpha_cw(const Graph & g) -> Rational { return alpha_cw(GraphProfile::from_graph(g)); }
    auto alpha_s(const Graph & g) -> Rational { return alpha_s(GraphProfile::from_graph(g)); }
    auto alpha_acl(const Graph & g) -> Rational { return alpha_acl(GraphProfile::from_graph(g)); }
    auto phi(const Graph & g, std::uint64_t l) -> Rational { return phi(GraphProfile::from_graph(g), l); }
    auto alpha_hr(const Graph & g) -> std::uint64_t { return alpha_hr(GraphProfile::from_graph(g)); }
    auto ind_terms(const Graph & g, std::uint64_t t) -> IndTermsAtT { return ind_terms(GraphProfile::from_graph(g), t); }
    auto alpha_hm(const Graph & g) -> Optimum { return alpha_hm(GraphProfile::from_graph(g)); }
}
