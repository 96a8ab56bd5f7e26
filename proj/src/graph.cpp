#include <graphbounds/graph.hpp>

#include <graphbounds/errors.hpp>

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <limits>

namespace graphbounds
{
    auto Graph::from_edges(Vertex n, std::span<const Edge> edges) -> Graph
    {
        Graph g;
        g._n = n;
        g._words = (n + bits_per_word - 1) / bits_per_word;
        g._rows.assign(static_cast<std::size_t>(n) * g._words, 0);
        g._degrees.assign(n, 0);

        auto set = [&] (Vertex u, Vertex v) {
            g._rows[static_cast<std::size_t>(u) * g._words + v / bits_per_word] |= BitWord{ 1 } << (v % bits_per_word);
        };

        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw DomainError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
            if (u == v)
                throw DomainError("loop edge at vertex " + std::to_string(u));
            if (g.adjacent(u, v))
                continue;
            set(u, v);
            set(v, u);
            ++g._degrees[u];
            ++g._degrees[v];
            ++g._edge_count;
        }
        return g;
    }

    auto Graph::min_degree() const -> std::uint32_t
    {
        return _degrees.empty() ? 0 : *std::min_element(_degrees.begin(), _degrees.end());
    }

    auto Graph::max_degree() const -> std::uint32_t
    {
        return _degrees.empty() ? 0 : *std::max_element(_degrees.begin(), _degrees.end());
    }

    auto Graph::neighbours(Vertex u) const -> std::vector<Vertex>
    {
        std::vector<Vertex> result;
        result.reserve(_degrees[u]);
        auto r = row(u);
        for (std::size_t w = 0; w < _words; ++w)
            for (BitWord bits = r[w]; bits; bits &= bits - 1)
                result.push_back(static_cast<Vertex>(w * bits_per_word + std::countr_zero(bits)));
        return result;
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        result.reserve(_edge_count);
        for (Vertex u = 0; u < _n; ++u)
            for (auto v : neighbours(u))
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    auto Graph::mask(Vertex u) const -> std::uint64_t
    {
        if (_n > 64)
            throw DomainError("mask() needs n <= 64");
        return _words == 0 ? 0 : row(u)[0];
    }

    auto GammaClassProof::describe() const -> std::string
    {
        std::string out;
        if (! n_ge_3)
            out += "fewer than 3 vertices";
        if (! connected)
            out += std::string(out.empty() ? "" : ", ") + "disconnected";
        if (! non_complete)
            out += std::string(out.empty() ? "" : ", ") + "complete";
        return out.empty() ? "in class" : out;
    }

    auto gamma_class(const Graph & g) -> GammaClassProof
    {
        GammaClassProof proof;
        auto n = g.n();
        proof.n_ge_3 = n >= 3;
        proof.non_complete = g.edge_count() < static_cast<std::uint64_t>(n) * (n - (n > 0)) / 2;

        if (n == 0) {
            proof.connected = false;
            return proof;
        }

        std::vector<bool> seen(n, false);
        std::vector<Vertex> stack{ 0 };
        seen[0] = true;
        Vertex reached = 1;
        while (! stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (auto v : g.neighbours(u))
                if (! seen[v]) {
                    seen[v] = true;
                    ++reached;
                    stack.push_back(v);
                }
        }
        proof.connected = reached == n;
        return proof;
    }

    auto require_gamma_class(const Graph & g) -> void
    {
        auto proof = gamma_class(g);
        if (! proof.in_class())
            throw DomainError("graph is not connected, non-complete with n >= 3: " + proof.describe());
    }

    auto find_bipartition(const Graph & g) -> std::optional<Bipartition>
    {
        const int unset = -1;
        std::vector<int> colour(g.n(), unset);
        for (Vertex start = 0; start < g.n(); ++start) {
            if (colour[start] != unset)
                continue;
            colour[start] = 0;
            std::deque<Vertex> queue{ start };
            while (! queue.empty()) {
                auto u = queue.front();
                queue.pop_front();
                for (auto v : g.neighbours(u)) {
                    if (colour[v] == unset) {
                        colour[v] = 1 - colour[u];
                        queue.push_back(v);
                    }
                    else if (colour[v] == colour[u])
                        return std::nullopt;
                }
            }
        }

        Bipartition bip;
        for (Vertex u = 0; u < g.n(); ++u)
            (colour[u] == 0 ? bip.side_a : bip.side_b).push_back(u);
        return bip;
    }

    auto validate_bipartition(const Graph & g, const Bipartition & bip) -> void
    {
        std::vector<int> side(g.n(), -1);
        auto place = [&] (const std::vector<Vertex> & vertices, int which) {
            for (auto u : vertices) {
                if (u >= g.n())
                    throw DomainError("bipartition vertex out of range");
                if (side[u] != -1)
                    throw DomainError("bipartition sides overlap at vertex " + std::to_string(u));
                side[u] = which;
            }
        };
        place(bip.side_a, 0);
        place(bip.side_b, 1);
        for (Vertex u = 0; u < g.n(); ++u)
            if (side[u] == -1)
                throw DomainError("bipartition misses vertex " + std::to_string(u));
        for (auto [u, v] : g.edges())
            if (side[u] == side[v])
                throw DomainError("edge " + std::to_string(u) + "-" + std::to_string(v) + " does not cross the bipartition");
    }

    auto closed_union_size(const Graph & g, Vertex u, Vertex v) -> std::uint32_t
    {
        if (u == v)
            throw DomainError("closed_union_size needs distinct vertices");
        if (u >= g.n() || v >= g.n())
            throw DomainError("closed_union_size: vertex out of range");

        auto ru = g.row(u), rv = g.row(v);
        std::uint32_t count = 0;
        for (std::size_t w = 0; w < g.words_per_row(); ++w)
            count += static_cast<std::uint32_t>(std::popcount(ru[w] | rv[w]));
        // u and v themselves, unless already present as neighbours
        if (! g.adjacent(u, v))
            count += 2;
        return count;
    }

    auto NamedGraph::vertex_count() const -> std::uint64_t
    {
        switch (family) {
            case Family::star: return params.at(0) + 1;
            case Family::path:
            case Family::cycle: return params.at(0);
            case Family::complete_bipartite: return params.at(0) + params.at(1);
        }
        return 0;
    }

    auto NamedGraph::label() const -> std::string
    {
        switch (family) {
            case Family::star: return "star:" + std::to_string(params.at(0));
            case Family::path: return "path:" + std::to_string(params.at(0));
            case Family::cycle: return "cycle:" + std::to_string(params.at(0));
            case Family::complete_bipartite:
                return "cbip:" + std::to_string(params.at(0)) + "," + std::to_string(params.at(1));
        }
        return {};
    }

    namespace
    {
        auto check_named(const NamedGraph & spec) -> void
        {
            auto want = [&] (std::size_t count) {
                if (spec.params.size() != count)
                    throw DomainError("named family expects " + std::to_string(count) + " parameter(s)");
            };
            switch (spec.family) {
                case Family::star:
                    want(1);
                    if (spec.params[0] < 1)
                        throw DomainError("star needs m >= 1");
                    break;
                case Family::path:
                    want(1);
                    if (spec.params[0] < 1)
                        throw DomainError("path needs n >= 1");
                    break;
                case Family::cycle:
                    want(1);
                    if (spec.params[0] < 3)
                        throw DomainError("cycle needs n >= 3");
                    break;
                case Family::complete_bipartite:
                    want(2);
                    if (spec.params[0] < 1 || spec.params[1] < 1)
                        throw DomainError("complete bipartite needs a, b >= 1");
                    break;
            }
        }
    }

    auto parse_named(std::string_view text) -> NamedGraph
    {
        auto colon = text.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("named graph must look like family:params", 0);

        auto name = text.substr(0, colon);
        NamedGraph spec;
        if (name == "star")
            spec.family = Family::star;
        else if (name == "path")
            spec.family = Family::path;
        else if (name == "cycle")
            spec.family = Family::cycle;
        else if (name == "cbip" || name == "complete_bipartite")
            spec.family = Family::complete_bipartite;
        else
            throw ParseError("unknown family '" + std::string(name) + "'", 0);

        std::size_t pos = colon + 1;
        while (pos <= text.size()) {
            auto comma = text.find(',', pos);
            auto piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            std::uint64_t value = 0;
            auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
            if (ec != std::errc{} || end != piece.data() + piece.size() || piece.empty())
                throw ParseError("bad family parameter '" + std::string(piece) + "'", pos);
            spec.params.push_back(value);
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
        }
        check_named(spec);
        return spec;
    }

    auto make_named(const NamedGraph & spec) -> Graph
    {
        check_named(spec);
        auto count = spec.vertex_count();
        if (count > std::numeric_limits<Vertex>::max() / 2)
            throw DomainError("named graph too large to materialise");
        auto n = static_cast<Vertex>(count);

        std::vector<Edge> edges;
        switch (spec.family) {
            case Family::star:
                for (Vertex leaf = 1; leaf < n; ++leaf)
                    edges.emplace_back(0, leaf);
                break;
            case Family::path:
                for (Vertex u = 0; u + 1 < n; ++u)
                    edges.emplace_back(u, u + 1);
                break;
            case Family::cycle:
                for (Vertex u = 0; u < n; ++u)
                    edges.emplace_back(u, (u + 1) % n);
                break;
            case Family::complete_bipartite: {
                auto a = static_cast<Vertex>(spec.params[0]);
                for (Vertex u = 0; u < a; ++u)
                    for (Vertex v = a; v < n; ++v)
                        edges.emplace_back(u, v);
                break;
            }
        }
        return Graph::from_edges(n, edges);
    }

    auto make_named(Family family, std::span<const std::uint64_t> params) -> Graph
    {
        return make_named(NamedGraph{ family, { params.begin(), params.end() } });
    }
}
