#ifndef GRAPHBOUNDS_EXPERIMENT_HPP
#define GRAPHBOUNDS_EXPERIMENT_HPP

#include <graphbounds/domination.hpp>
#include <graphbounds/exact.hpp>
#include <graphbounds/graph.hpp>
#include <graphbounds/oracle.hpp>
#include <graphbounds/profile.hpp>
#include <graphbounds/randgraph.hpp>

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace graphbounds
{
    using Json = nlohmann::ordered_json;

    /// Bound labels in report order.
    auto domination_labels() -> const std::vector<std::string> &;     // gamma_cssf, gamma_hm1, gamma_hm2
    auto independence_labels() -> const std::vector<std::string> &;   // alpha_acl, alpha_hr, alpha_s, alpha_hm
    auto all_bound_labels() -> const std::vector<std::string> &;

    struct BoundValue
    {
        Rational value;
        std::optional<std::uint64_t> t;                             // sweep optimum
        std::optional<std::pair<std::uint64_t, std::uint64_t>> ab;  // grid optimum

        auto floor() const -> BigInt { return floor_rat(value); }
        auto ceil() const -> BigInt { return ceil_rat(value); }
    };

    struct BoundReport
    {
        std::string graph_id;
        std::string model;
        Json params = Json::object();
        std::optional<std::uint64_t> seed_index;
        std::uint64_t n = 0;
        std::uint64_t m = 0;
        std::string graph6;                     // empty for graphs too large to encode
        std::map<std::string, BoundValue> bounds;
        std::optional<std::uint64_t> oracle_gamma;
        std::optional<std::uint64_t> oracle_alpha;
        std::map<std::string, double> timings;  // milliseconds

        auto has(const std::string & label) const -> bool { return bounds.count(label) != 0; }
        auto at(const std::string & label) const -> const BoundValue &;
    };

    struct EvaluateOptions
    {
        bool domination = true;
        bool independence = true;
        bool bipartite = true;
        /// Oracles run when n <= oracle_max_n (and within the limits).
        std::uint64_t oracle_max_n = 0;
        OracleLimits limits;
        bool timings = false;
    };

    /// Computes the requested bounds and asserts the per-graph invariants,
    /// throwing InvariantViolation on the first failure. γ_HM3 is absent
    /// unless the graph is bipartite with both sides of size >= 2.
    auto evaluate_graph(const Graph & g, const EvaluateOptions & opts = {}) -> BoundReport;

    /// Same, from a profile; oracles need `graph`.
    auto evaluate_profile(const GraphProfile & profile, const EvaluateOptions & opts = {},
            const Graph * graph = nullptr) -> BoundReport;

    /// Throws InvariantViolation on the first broken relation among the
    /// bounds and oracle values present in the report.
    auto check_report(const BoundReport & r) -> void;

    /// Strict-win counts: wins[r][c] graphs where row beats column.
    struct ComparisonMatrix
    {
        std::vector<std::string> labels;
        std::vector<std::vector<std::uint64_t>> wins;
        std::uint64_t sample_size = 0;

        auto percentage(std::size_t row, std::size_t col) const -> double;
        auto index(const std::string & label) const -> std::size_t;
        auto cell(const std::string & row, const std::string & col) const -> double;

        /// Header of column labels, labelled rows, 1-decimal percentages,
        /// empty diagonal.
        auto to_csv() const -> std::string;
        auto to_text() const -> std::string;
    };

    /// Beats = floor(row) < floor(col).
    auto compare_domination(const std::vector<BoundReport> & reports) -> ComparisonMatrix;

    /// Beats = ceil(row) > ceil(col).
    auto compare_independence(const std::vector<BoundReport> & reports) -> ComparisonMatrix;

    /// First report in which `row` strictly beats `col`.
    struct Witness
    {
        std::string row;
        std::string col;
        std::optional<BoundReport> report;
    };

    /// Every ordered pair of the given labels, with the first witness found.
    auto find_witnesses(const std::vector<BoundReport> & reports, const std::vector<std::string> & labels)
        -> std::vector<Witness>;

    /// γ labels compare floors (smaller wins), α labels ceilings (larger wins).
    auto beats(const BoundReport & r, const std::string & row, const std::string & col) -> bool;

    // protocol --------------------------------------------------------------

    struct ProtocolConfig
    {
        Model model = Model::gnp;
        std::vector<ModelParams> cells;
        std::uint64_t samples_per_cell = 50;
        std::uint64_t seed = 0;
        std::uint64_t oracle_max_n = 0;
        unsigned threads = 1;
        bool timings = false;
        std::optional<std::filesystem::path> out;

        auto to_json() const -> Json;
    };

    /// 500 graphs per cell scaled by `scale` (at least 1), over
    /// gnp: p in {.2,.3,.5,.6,.8} x n in {10,20,30,50,80,100,120,150}
    /// bip: p_A, p_R in {.02,.05,.1} x n in {10,25,50,100}.
    auto standard_grid(Model model, double scale) -> ProtocolConfig;

    struct CellFailure
    {
        ModelParams params;
        std::string message;
    };

    struct ProtocolResult
    {
        std::vector<BoundReport> reports;
        std::vector<CellFailure> failures;
        ComparisonMatrix domination;
        ComparisonMatrix independence;
    };

    /// Samples and evaluates every cell. With `out` set, writes
    /// reports.jsonl, run.json, domination.csv and independence.csv there.
    auto run_protocol(const ProtocolConfig & config) -> ProtocolResult;

    auto code_version() -> std::string;

    // persistence -------------------------------------------------------------

    auto to_json(const BoundReport & r, bool with_timings) -> Json;
    auto report_from_json(const Json & j) -> BoundReport;

    /// One record per line. Lines whose "type" is "config" are skipped.
    auto read_reports(std::istream & in) -> std::vector<BoundReport>;
    auto write_reports(std::ostream & out, const std::vector<BoundReport> & reports, bool with_timings) -> void;
}

#endif
