#include <graphbounds/profile.hpp>

#include <graphbounds/errors.hpp>

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

namespace graphbounds
{
    auto GraphProfile::from_graph(const Graph & g) -> GraphProfile
    {
        GraphProfile profile;
        auto n = g.n();

        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 0);
        auto row_less = [&] (Vertex a, Vertex b) {
            auto ra = g.row(a), rb = g.row(b);
            if (std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end()))
                return true;
            if (std::equal(ra.begin(), ra.end(), rb.begin()))
                return a < b;
            return false;
        };
        std::sort(order.begin(), order.end(), row_less);

        // classes numbered by their smallest member
        std::vector<Vertex> leader(n);
        for (std::size_t i = 0; i < order.size(); ) {
            std::size_t j = i;
            auto ri = g.row(order[i]);
            while (j < order.size() && std::ranges::equal(g.row(order[j]), ri))
                ++j;
            Vertex smallest = order[i];
            for (auto k = i; k < j; ++k)
                leader[order[k]] = smallest;
            i = j;
        }

        std::vector<Vertex> representatives;
        std::vector<std::uint32_t> index(n, 0);
        profile._class_of.assign(n, 0);
        for (Vertex u = 0; u < n; ++u) {
            if (leader[u] == u) {
                index[u] = static_cast<std::uint32_t>(representatives.size());
                representatives.push_back(u);
                profile._classes.push_back({ 0, g.degree(u) });
            }
            profile._class_of[u] = index[leader[u]];
            ++profile._classes[index[leader[u]]].size;
        }

        std::vector<Edge> quotient_edges;
        for (std::uint32_t c = 0; c < representatives.size(); ++c)
            for (std::uint32_t d = c + 1; d < representatives.size(); ++d)
                if (g.adjacent(representatives[c], representatives[d]))
                    quotient_edges.emplace_back(c, d);
        profile._quotient = Graph::from_edges(static_cast<Vertex>(representatives.size()), quotient_edges);
        profile._n = n;
        profile.finish();

        if (profile._edge_count != g.edge_count())
            throw InvariantViolation("twin quotient lost edges");
        return profile;
    }

    auto GraphProfile::from_named(const NamedGraph & spec) -> GraphProfile
    {
        switch (spec.family) {
            case Family::star:
            case Family::complete_bipartite: {
                // validates the parameters
                auto checked = parse_named(spec.label());
                std::uint64_t a = checked.family == Family::star ? 1 : checked.params[0];
                std::uint64_t b = checked.family == Family::star ? checked.params[0] : checked.params[1];

                GraphProfile profile;
                profile._n = a + b;
                profile._classes = { { a, b }, { b, a } };
                std::vector<Edge> one{ { 0, 1 } };
                profile._quotient = Graph::from_edges(2, one);
                profile.finish();
                return profile;
            }
            case Family::path:
            case Family::cycle:
                break;
        }
        return from_graph(make_named(spec));
    }

    auto GraphProfile::finish() -> void
    {
        _unit_sizes = std::all_of(_classes.begin(), _classes.end(), [] (const TwinClass & c) { return c.size == 1; });

        _edge_count = 0;
        _min_degree = _classes.empty() ? 0 : _classes.front().degree;
        _max_degree = _min_degree;
        for (std::uint32_t c = 0; c < _classes.size(); ++c) {
            auto expected = weight(_quotient.row(c));
            if (expected != _classes[c].degree)
                throw InvariantViolation("twin class degree mismatch");
            _min_degree = std::min(_min_degree, _classes[c].degree);
            _max_degree = std::max(_max_degree, _classes[c].degree);
            for (auto d : _quotient.neighbours(c))
                if (c < d)
                    _edge_count += _classes[c].size * _classes[d].size;
        }
    }

    auto GraphProfile::weight(std::span<const BitWord> classes) const -> std::uint64_t
    {
        std::uint64_t total = 0;
        if (_unit_sizes) {
            for (auto word : classes)
                total += static_cast<std::uint64_t>(std::popcount(word));
            return total;
        }
        for (std::size_t w = 0; w < classes.size(); ++w)
            for (BitWord bits = classes[w]; bits; bits &= bits - 1)
                total += _classes[w * bits_per_word + std::countr_zero(bits)].size;
        return total;
    }

    auto GraphProfile::gamma_class() const -> GammaClassProof
    {
        GammaClassProof proof;
        proof.n_ge_3 = _n >= 3;
        proof.non_complete = _edge_count < _n * (_n - (_n > 0)) / 2;
        if (_classes.size() == 1)
            proof.connected = _n == 1;
        else
            proof.connected = graphbounds::gamma_class(_quotient).connected;
        return proof;
    }

    auto GraphProfile::require_gamma_class() const -> void
    {
        auto proof = gamma_class();
        if (! proof.in_class())
            throw DomainError("graph is not connected, non-complete with n >= 3: " + proof.describe());
    }

    auto GraphProfile::class_sides() const -> std::optional<std::vector<int>>
    {
        auto bip = find_bipartition(_quotient);
        if (! bip)
            return std::nullopt;
        std::vector<int> sides(_classes.size(), 0);
        for (auto c : bip->side_b)
            sides[c] = 1;
        return sides;
    }
}
