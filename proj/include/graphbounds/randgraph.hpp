#ifndef GRAPHBOUNDS_RANDGRAPH_HPP
#define GRAPHBOUNDS_RANDGRAPH_HPP

#include <graphbounds/graph.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace graphbounds
{
    /**
     * Graph index i, attempt j draws from std::mt19937_64 seeded with
     * sub_seed(seed, i, j). Independent of generation order.
     */
    struct RngConfig
    {
        std::uint64_t seed = 0;
        unsigned rejection_cap = 10'000;

        static auto algorithm() -> std::string;
    };

    auto splitmix64(std::uint64_t x) -> std::uint64_t;
    auto sub_seed(std::uint64_t seed, std::uint64_t index, std::uint64_t attempt) -> std::uint64_t;

    /// Bernoulli(p) from one 64-bit draw: true iff draw < p * 2^64.
    auto bernoulli(std::mt19937_64 & engine, double p) -> bool;

    /// Uniform on [lo, hi] by rejection, no modulo bias.
    auto uniform_int(std::mt19937_64 & engine, std::uint64_t lo, std::uint64_t hi) -> std::uint64_t;

    enum class Model
    {
        gnp,
        bip
    };

    auto model_name(Model m) -> std::string;
    auto parse_model(const std::string & text) -> Model;

    struct ModelParams
    {
        Model model = Model::gnp;
        Vertex n = 0;
        double p = 0;     // gnp
        double p_r = 0;   // bip: removal of A-B edges
        double p_a = 0;   // bip: addition inside a side

        auto validate() const -> void;
        auto label() const -> std::string;
    };

    struct SampledGraph
    {
        Graph graph;
        std::uint64_t index = 0;
        unsigned attempts = 0;
        std::optional<Vertex> side_a_size;   // bip only, side A is 0..|A|-1
    };

    /// One draw, no rejection.
    auto draw_gnp(Vertex n, double p, std::mt19937_64 & engine) -> Graph;
    auto draw_bip(Vertex n, double p_r, double p_a, std::mt19937_64 & engine, Vertex & side_a_size) -> Graph;

    /// Resampled until connected and non-complete; ResourceLimit past the cap.
    auto sample_gnp(Vertex n, double p, const RngConfig & rng, std::uint64_t index) -> SampledGraph;
    auto sample_bip_perturbed(Vertex n, double p_r, double p_a, const RngConfig & rng, std::uint64_t index) -> SampledGraph;
    auto sample(const ModelParams & params, const RngConfig & rng, std::uint64_t index) -> SampledGraph;

    /// Indices first..first+count-1.
    auto sample_batch(const ModelParams & params, const RngConfig & rng, std::uint64_t first, std::uint64_t count,
            unsigned threads) -> std::vector<SampledGraph>;

    /// One graph6 line per graph, plus a JSON sidecar with model, parameters,
    /// seed and indices.
    auto write_batch(std::ostream & graphs, std::ostream & sidecar, const ModelParams & params, const RngConfig & rng,
            const std::vector<SampledGraph> & batch) -> void;
}

#endif
