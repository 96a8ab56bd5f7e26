#ifndef GRAPHBOUNDS_VERIFY_HPP
#define GRAPHBOUNDS_VERIFY_HPP

#include <graphbounds/domination.hpp>
#include <graphbounds/experiment.hpp>
#include <graphbounds/graph.hpp>
#include <graphbounds/independence.hpp>
#include <graphbounds/oracle.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace graphbounds
{
    /// The implementations under test. Defaults to the library; tests swap
    /// in broken versions to check that verification catches them.
    struct BoundFunctions
    {
        std::function<DomTermsAtT (const Graph &, std::uint64_t)> dom_terms;
        std::function<IndTermsAtT (const Graph &, std::uint64_t)> ind_terms;
        std::function<BipTermsAtAB (const Graph &, const Bipartition &, std::uint64_t, std::uint64_t)> bip_terms;
        std::function<BoundReport (const Graph &, const EvaluateOptions &)> evaluate;

        static auto library() -> BoundFunctions;
    };

    struct VerifyOptions
    {
        bool dom = true;
        bool ind = true;
        bool bip = true;
        bool sandwich = true;
        OracleLimits limits;
    };

    struct VerifyFailure
    {
        std::string graph6;
        std::string where;      // "t=3", "(a,b)=(2,0)", "sandwich"
        std::string what;
        std::string expected;
        std::string got;

        auto describe() const -> std::string;
    };

    struct VerifySummary
    {
        std::uint64_t graphs = 0;
        std::uint64_t checks = 0;
        std::optional<VerifyFailure> failure;

        auto passed() const -> bool { return ! failure; }
    };

    /// Exact mean/variance agreement with the exhaustive distributions at
    /// every admissible t and (a,b), k >= 0, Bhatia-Davis, and the oracle
    /// sandwich. Stops at the first failure.
    auto verify_graph(const Graph & g, const VerifyOptions & opts = {},
            const BoundFunctions & fns = BoundFunctions::library()) -> VerifySummary;

    auto verify_corpus(const std::vector<Graph> & graphs, const VerifyOptions & opts = {},
            const BoundFunctions & fns = BoundFunctions::library()) -> VerifySummary;
}

#endif
