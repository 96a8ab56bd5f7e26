#ifndef GRAPHBOUNDS_CATALOG_HPP
#define GRAPHBOUNDS_CATALOG_HPP

#include <graphbounds/graph.hpp>

#include <vector>

namespace graphbounds
{
    inline constexpr Vertex catalog_max_n = 7;

    /// Every connected non-complete graph on 3..max_n vertices, one per
    /// isomorphism class, ordered by n then by edge mask.
    auto small_graph_catalog(Vertex max_n) -> std::vector<Graph>;
}

#endif
