#include <graphbounds/catalog.hpp>

#include <graphbounds/errors.hpp>

#include <algorithm>
#include <numeric>

namespace graphbounds
{
    namespace
    {
        // pair (i,j), i<j, ordered column-wise as in graph6
        auto pair_index(Vertex i, Vertex j) -> unsigned
        {
            if (i > j)
                std::swap(i, j);
            return j * (j - 1) / 2 + i;
        }

        auto graphs_on(Vertex n) -> std::vector<Graph>
        {
            unsigned pairs = n * (n - 1) / 2;
            std::vector<Edge> all_pairs;
            for (Vertex j = 1; j < n; ++j)
                for (Vertex i = 0; i < j; ++i)
                    all_pairs.emplace_back(i, j);

            // each permutation as a map pair index -> pair index
            std::vector<std::vector<unsigned>> maps;
            std::vector<Vertex> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::vector<unsigned> m(pairs);
                for (unsigned e = 0; e < pairs; ++e)
                    m[e] = pair_index(perm[all_pairs[e].first], perm[all_pairs[e].second]);
                maps.push_back(std::move(m));
            } while (std::next_permutation(perm.begin(), perm.end()));

            std::vector<Graph> out;
            std::uint64_t full = (std::uint64_t{ 1 } << pairs) - 1;
            for (std::uint64_t mask = 0; mask < full; ++mask) {
                bool minimal = true;
                for (auto & m : maps) {
                    std::uint64_t image = 0;
                    for (unsigned e = 0; e < pairs; ++e)
                        if ((mask >> e) & 1)
                            image |= std::uint64_t{ 1 } << m[e];
                    if (image < mask) {
                        minimal = false;
                        break;
                    }
                }
                if (! minimal)
                    continue;

                std::vector<Edge> edges;
                for (unsigned e = 0; e < pairs; ++e)
                    if ((mask >> e) & 1)
                        edges.push_back(all_pairs[e]);
                auto g = Graph::from_edges(n, edges);
                if (gamma_class(g).in_class())
                    out.push_back(std::move(g));
            }
            return out;
        }
    }

    auto small_graph_catalog(Vertex max_n) -> std::vector<Graph>
    {
        if (max_n > catalog_max_n)
            throw ResourceLimit("catalog limited to n <= " + std::to_string(catalog_max_n));
        std::vector<Graph> out;
        for (Vertex n = 3; n <= max_n; ++n) {
            auto part = graphs_on(n);
            std::move(part.begin(), part.end(), std::back_inserter(out));
        }
        return out;
    }
}
