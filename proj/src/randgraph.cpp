#include <graphbounds/randgraph.hpp>

#include <graphbounds/errors.hpp>
#include <graphbounds/parallel.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <ostream>

namespace graphbounds
{
    auto default_threads() -> unsigned
    {
        if (auto env = std::getenv("GRAPHBOUNDS_THREADS")) {
            char * end = nullptr;
            auto value = std::strtoul(env, &end, 10);
            if (end != env && *end == '\0' && value > 0)
                return static_cast<unsigned>(value);
        }
        return std::max(1u, std::thread::hardware_concurrency());
    }

    auto RngConfig::algorithm() -> std::string
    {
        return "mt19937_64 seeded by splitmix64(splitmix64(splitmix64(seed) ^ index) ^ attempt); "
               "bernoulli: draw < p*2^64; uniform ints by rejection";
    }

    auto splitmix64(std::uint64_t x) -> std::uint64_t
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    auto sub_seed(std::uint64_t seed, std::uint64_t index, std::uint64_t attempt) -> std::uint64_t
    {
        return splitmix64(splitmix64(splitmix64(seed) ^ index) ^ attempt);
    }

    auto bernoulli(std::mt19937_64 & engine, double p) -> bool
    {
        auto draw = engine();
        if (p <= 0)
            return false;
        if (p >= 1)
            return true;
        auto threshold = static_cast<std::uint64_t>(std::ldexp(static_cast<long double>(p), 64));
        return draw < threshold;
    }

    auto uniform_int(std::mt19937_64 & engine, std::uint64_t lo, std::uint64_t hi) -> std::uint64_t
    {
        auto span = hi - lo;
        if (span == ~std::uint64_t{ 0 })
            return engine();
        auto range = span + 1;
        auto limit = ~std::uint64_t{ 0 } - (~std::uint64_t{ 0 } % range + 1) % range;
        while (true) {
            auto x = engine();
            if (x <= limit)
                return lo + x % range;
        }
    }

    auto model_name(Model m) -> std::string
    {
        return m == Model::gnp ? "gnp" : "bip";
    }

    auto parse_model(const std::string & text) -> Model
    {
        if (text == "gnp")
            return Model::gnp;
        if (text == "bip")
            return Model::bip;
        throw DomainError("unknown model '" + text + "' (expected gnp or bip)");
    }

    auto ModelParams::validate() const -> void
    {
        if (n < 3)
            throw DomainError("random models need n >= 3");
        auto probability = [] (double x, const char * name) {
            if (! (x >= 0 && x <= 1))
                throw DomainError(std::string(name) + " must lie in [0,1]");
        };
        if (model == Model::gnp) {
            if (! (p > 0 && p < 1))
                throw DomainError("gnp needs 0 < p < 1");
        }
        else {
            probability(p_r, "p_R");
            probability(p_a, "p_A");
        }
    }

    auto ModelParams::label() const -> std::string
    {
        auto fmt = [] (double x) {
            char buffer[32];
            std::snprintf(buffer, sizeof buffer, "%g", x);
            return std::string(buffer);
        };
        if (model == Model::gnp)
            return "gnp(n=" + std::to_string(n) + ",p=" + fmt(p) + ")";
        return "bip(n=" + std::to_string(n) + ",pR=" + fmt(p_r) + ",pA=" + fmt(p_a) + ")";
    }

    auto draw_gnp(Vertex n, double p, std::mt19937_64 & engine) -> Graph
    {
        std::vector<Edge> edges;
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i)
                if (bernoulli(engine, p))
                    edges.emplace_back(i, j);
        return Graph::from_edges(n, edges);
    }

    auto draw_bip(Vertex n, double p_r, double p_a, std::mt19937_64 & engine, Vertex & side_a_size) -> Graph
    {
        side_a_size = static_cast<Vertex>(uniform_int(engine, 1, n - 1));
        std::vector<Edge> edges;
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i) {
                bool crossing = (i < side_a_size) != (j < side_a_size);
                if (crossing ? ! bernoulli(engine, p_r) : bernoulli(engine, p_a))
                    edges.emplace_back(i, j);
            }
        return Graph::from_edges(n, edges);
    }

    namespace
    {
        template <typename Draw>
        auto rejection_sample(const ModelParams & params, const RngConfig & rng, std::uint64_t index, Draw && draw)
            -> SampledGraph
        {
            params.validate();
            SampledGraph out;
            out.index = index;
            for (unsigned attempt = 0; attempt < rng.rejection_cap; ++attempt) {
                std::mt19937_64 engine(sub_seed(rng.seed, index, attempt));
                out.graph = draw(engine, out);
                out.attempts = attempt + 1;
                if (gamma_class(out.graph).in_class())
                    return out;
            }
            throw ResourceLimit("rejection cap of " + std::to_string(rng.rejection_cap) + " attempts exceeded for "
                    + params.label() + " at index " + std::to_string(index));
        }
    }

    auto sample_gnp(Vertex n, double p, const RngConfig & rng, std::uint64_t index) -> SampledGraph
    {
        ModelParams params{ Model::gnp, n, p, 0, 0 };
        return rejection_sample(params, rng, index, [&] (std::mt19937_64 & engine, SampledGraph &) {
            return draw_gnp(n, p, engine);
        });
    }

    auto sample_bip_perturbed(Vertex n, double p_r, double p_a, const RngConfig & rng, std::uint64_t index) -> SampledGraph
    {
        ModelParams params{ Model::bip, n, 0, p_r, p_a };
        return rejection_sample(params, rng, index, [&] (std::mt19937_64 & engine, SampledGraph & out) {
            Vertex size = 0;
            auto g = draw_bip(n, p_r, p_a, engine, size);
            out.side_a_size = size;
            return g;
        });
    }

    auto sample(const ModelParams & params, const RngConfig & rng, std::uint64_t index) -> SampledGraph
    {
        if (params.model == Model::gnp)
            return sample_gnp(params.n, params.p, rng, index);
        return sample_bip_perturbed(params.n, params.p_r, params.p_a, rng, index);
    }

    auto sample_batch(const ModelParams & params, const RngConfig & rng, std::uint64_t first, std::uint64_t count,
            unsigned threads) -> std::vector<SampledGraph>
    {
        params.validate();
        std::vector<SampledGraph> batch(count);
        parallel_for(count, threads, [&] (std::size_t i) { batch[i] = sample(params, rng, first + i); });
        return batch;
    }

    auto write_batch(std::ostream & graphs, std::ostream & sidecar, const ModelParams & params, const RngConfig & rng,
            const std::vector<SampledGraph> & batch) -> void
    {
        nlohmann::ordered_json meta;
        meta["model"] = model_name(params.model);
        meta["n"] = params.n;
        if (params.model == Model::gnp)
            meta["p"] = params.p;
        else {
            meta["p_r"] = params.p_r;
            meta["p_a"] = params.p_a;
            meta["side_a_distribution"] = "uniform on {1..n-1}";
        }
        meta["seed"] = rng.seed;
        meta["rejection_cap"] = rng.rejection_cap;
        meta["rng"] = RngConfig::algorithm();
        auto & entries = meta["graphs"] = nlohmann::ordered_json::array();
        for (auto & s : batch) {
            graphs << encode_graph6(s.graph) << '\n';
            nlohmann::ordered_json e;
            e["index"] = s.index;
            e["attempts"] = s.attempts;
            if (s.side_a_size)
                e["side_a_size"] = *s.side_a_size;
            entries.push_back(e);
        }
        sidecar << meta.dump(2) << '\n';
    }
}
