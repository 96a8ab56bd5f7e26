#include <graphbounds/experiment.hpp>

#include <graphbounds/errors.hpp>
#include <graphbounds/independence.hpp>
#include <graphbounds/parallel.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#ifndef GRAPHBOUNDS_VERSION
#define GRAPHBOUNDS_VERSION "unknown"
#endif

namespace graphbounds
{
    auto domination_labels() -> const std::vector<std::string> &
    {
        static const std::vector<std::string> labels{ "gamma_cssf", "gamma_hm1", "gamma_hm2" };
        return labels;
    }

    auto independence_labels() -> const std::vector<std::string> &
    {
        static const std::vector<std::string> labels{ "alpha_acl", "alpha_hr", "alpha_s", "alpha_hm" };
        return labels;
    }

    auto all_bound_labels() -> const std::vector<std::string> &
    {
        static const std::vector<std::string> labels{ "gamma_cssf", "gamma_hm1", "gamma_hm2", "gamma_hm3",
            "alpha_cw", "alpha_s", "alpha_acl", "alpha_hr", "alpha_hm" };
        return labels;
    }

    auto code_version() -> std::string
    {
        return GRAPHBOUNDS_VERSION;
    }

    auto BoundReport::at(const std::string & label) const -> const BoundValue &
    {
        auto it = bounds.find(label);
        if (it == bounds.end())
            throw DomainError("report " + graph_id + " has no value for " + label);
        return it->second;
    }

    namespace
    {
        auto is_gamma(const std::string & label) -> bool
        {
            return label.rfind("gamma", 0) == 0;
        }

        auto describe(const BoundReport & r) -> std::string
        {
            std::string out = r.graph_id.empty() ? std::string("graph") : r.graph_id;
            if (! r.graph6.empty())
                out += " [" + r.graph6 + "]";
            return out;
        }

        template <typename F>
        auto timed(BoundReport & r, bool enabled, const std::string & key, F && f)
        {
            auto start = std::chrono::steady_clock::now();
            auto result = f();
            if (enabled)
                r.timings[key] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            return result;
        }
    }

    auto check_report(const BoundReport & r) -> void
    {
        auto fail = [&] (const std::string & what) {
            throw InvariantViolation(what + " on " + describe(r));
        };

        if (r.has("gamma_hm1") && r.has("gamma_cssf") && r.at("gamma_hm1").value > r.at("gamma_cssf").value)
            fail("γ_HM1 > γ_CSSF (" + to_string(r.at("gamma_hm1").value) + " > " + to_string(r.at("gamma_cssf").value) + ")");
        if (r.has("gamma_hm1") && r.has("gamma_hm2") && r.at("gamma_hm1").value > r.at("gamma_hm2").value)
            fail("γ_HM1 > γ_HM2 (" + to_string(r.at("gamma_hm1").value) + " > " + to_string(r.at("gamma_hm2").value) + ")");

        for (auto & [label, b] : r.bounds) {
            if (is_gamma(label) && r.oracle_gamma && b.floor() < *r.oracle_gamma)
                fail("γ = " + std::to_string(*r.oracle_gamma) + " > floor(" + label + ") = " + b.floor().get_str());
            if (! is_gamma(label) && r.oracle_alpha && b.ceil() > *r.oracle_alpha)
                fail("α = " + std::to_string(*r.oracle_alpha) + " < ceil(" + label + ") = " + b.ceil().get_str());
        }
    }

    auto evaluate_profile(const GraphProfile & profile, const EvaluateOptions & opts, const Graph * graph) -> BoundReport
    {
        profile.require_gamma_class();
        BoundReport r;
        r.n = profile.n();
        r.m = profile.edge_count();
        if (graph)
            r.graph6 = encode_graph6(*graph);

        auto sweep = [] (const Optimum & o) { return BoundValue{ o.value, o.t, std::nullopt }; };
        auto plain = [] (const Rational & x) { return BoundValue{ x, std::nullopt, std::nullopt }; };

        if (opts.domination) {
            auto d = timed(r, opts.timings, "gamma", [&] { return domination_bounds(profile); });
            r.bounds["gamma_cssf"] = sweep(d.cssf);
            r.bounds["gamma_hm1"] = sweep(d.hm1);
            r.bounds["gamma_hm2"] = sweep(d.hm2);
        }
        if (opts.bipartite) {
            auto bip = BipartiteProfile::try_from(profile);
            if (bip) {
                auto o = timed(r, opts.timings, "gamma_hm3", [&] { return gamma_hm3(*bip); });
                r.bounds["gamma_hm3"] = BoundValue{ o.value, std::nullopt, std::pair{ o.a, o.b } };
            }
        }
        if (opts.independence) {
            r.bounds["alpha_cw"] = plain(timed(r, opts.timings, "alpha_cw", [&] { return alpha_cw(profile); }));
            r.bounds["alpha_s"] = plain(timed(r, opts.timings, "alpha_s", [&] { return alpha_s(profile); }));
            r.bounds["alpha_acl"] = plain(timed(r, opts.timings, "alpha_acl", [&] { return alpha_acl(profile); }));
            auto hr = timed(r, opts.timings, "alpha_hr", [&] { return alpha_hr(profile); });
            r.bounds["alpha_hr"] = plain(Rational(BigInt(static_cast<unsigned long>(hr))));
            r.bounds["alpha_hm"] = sweep(timed(r, opts.timings, "alpha_hm", [&] { return alpha_hm(profile); }));
        }

        if (graph && r.n <= opts.oracle_max_n) {
            if (opts.domination && r.n <= opts.limits.gamma_max_n)
                r.oracle_gamma = timed(r, opts.timings, "oracle_gamma", [&] { return exact_gamma(*graph, opts.limits); });
            if (opts.independence && r.n <= opts.limits.alpha_max_n)
                r.oracle_alpha = timed(r, opts.timings, "oracle_alpha", [&] { return exact_alpha(*graph, opts.limits); });
        }

        check_report(r);
        return r;
    }

    auto evaluate_graph(const Graph & g, const EvaluateOptions & opts) -> BoundReport
    {
        require_gamma_class(g);
        return evaluate_profile(GraphProfile::from_graph(g), opts, &g);
    }

    // comparison ------------------------------------------------------------

    auto beats(const BoundReport & r, const std::string & row, const std::string & col) -> bool
    {
        if (is_gamma(row) != is_gamma(col))
            throw DomainError("cannot compare " + row + " with " + col);
        if (is_gamma(row))
            return r.at(row).floor() < r.at(col).floor();
        return r.at(row).ceil() > r.at(col).ceil();
    }

    auto ComparisonMatrix::percentage(std::size_t row, std::size_t col) const -> double
    {
        if (sample_size == 0)
            return 0;
        return 100.0 * static_cast<double>(wins.at(row).at(col)) / static_cast<double>(sample_size);
    }

    auto ComparisonMatrix::index(const std::string & label) const -> std::size_t
    {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label)
                return i;
        throw DomainError("no bound " + label + " in matrix");
    }

    auto ComparisonMatrix::cell(const std::string & row, const std::string & col) const -> double
    {
        return percentage(index(row), index(col));
    }

    namespace
    {
        auto one_decimal(double x) -> std::string
        {
            char buffer[32];
            std::snprintf(buffer, sizeof buffer, "%.1f", x);
            return buffer;
        }
    }

    auto ComparisonMatrix::to_csv() const -> std::string
    {
        std::string out = "bound";
        for (auto & l : labels)
            out += "," + l;
        out += "\n";
        for (std::size_t r = 0; r < labels.size(); ++r) {
            out += labels[r];
            for (std::size_t c = 0; c < labels.size(); ++c)
                out += "," + (r == c ? std::string() : one_decimal(percentage(r, c)));
            out += "\n";
        }
        return out;
    }

    auto ComparisonMatrix::to_text() const -> std::string
    {
        std::size_t width = 10;
        for (auto & l : labels)
            width = std::max(width, l.size() + 2);
        auto pad = [&] (const std::string & s) { return s + std::string(width - std::min(width, s.size()), ' '); };

        std::string out = pad("");
        for (auto & l : labels)
            out += pad(l);
        out += "\n";
        for (std::size_t r = 0; r < labels.size(); ++r) {
            out += pad(labels[r]);
            for (std::size_t c = 0; c < labels.size(); ++c)
                out += pad(r == c ? "-" : one_decimal(percentage(r, c)) + "%");
            out += "\n";
        }
        out += "graphs: " + std::to_string(sample_size) + "\n";
        return out;
    }

    namespace
    {
        auto compare(const std::vector<BoundReport> & reports, const std::vector<std::string> & labels) -> ComparisonMatrix
        {
            if (reports.empty())
                throw DomainError("comparison over an empty corpus");
            ComparisonMatrix m;
            m.labels = labels;
            m.sample_size = reports.size();
            m.wins.assign(labels.size(), std::vector<std::uint64_t>(labels.size(), 0));
            for (auto & r : reports)
                for (std::size_t i = 0; i < labels.size(); ++i)
                    for (std::size_t j = 0; j < labels.size(); ++j)
                        if (i != j && beats(r, labels[i], labels[j]))
                            ++m.wins[i][j];
            return m;
        }
    }

    auto compare_domination(const std::vector<BoundReport> & reports) -> ComparisonMatrix
    {
        return compare(reports, domination_labels());
    }

    auto compare_independence(const std::vector<BoundReport> & reports) -> ComparisonMatrix
    {
        return compare(reports, independence_labels());
    }

    auto find_witnesses(const std::vector<BoundReport> & reports, const std::vector<std::string> & labels)
        -> std::vector<Witness>
    {
        std::vector<Witness> out;
        for (auto & row : labels)
            for (auto & col : labels) {
                if (row == col)
                    continue;
                Witness w{ row, col, std::nullopt };
                for (auto & r : reports)
                    if (r.has(row) && r.has(col) && beats(r, row, col)) {
                        w.report = r;
                        break;
                    }
                out.push_back(std::move(w));
            }
        return out;
    }

    // protocol --------------------------------------------------------------

    namespace
    {
        auto params_json(const ModelParams & p) -> Json
        {
            Json j;
            j["n"] = p.n;
            if (p.model == Model::gnp)
                j["p"] = p.p;
            else {
                j["p_r"] = p.p_r;
                j["p_a"] = p.p_a;
            }
            return j;
        }
    }

    auto ProtocolConfig::to_json() const -> Json
    {
        Json j;
        j["model"] = model_name(model);
        j["samples_per_cell"] = samples_per_cell;
        j["seed"] = seed;
        j["oracle_max_n"] = oracle_max_n;
        j["rng"] = RngConfig::algorithm();
        if (model == Model::bip)
            j["side_a_distribution"] = "uniform on {1..n-1}";
        j["index_rule"] = "seed_index = cell * samples_per_cell + sample";
        j["integering"] = "gamma: floor(row) < floor(col); alpha: ceil(row) > ceil(col)";
        auto & cells_json = j["cells"] = Json::array();
        for (auto & c : cells)
            cells_json.push_back(params_json(c));
        j["code_version"] = code_version();
        return j;
    }

    auto standard_grid(Model model, double scale) -> ProtocolConfig
    {
        if (! (scale > 0))
            throw DomainError("scale must be positive");
        ProtocolConfig c;
        c.model = model;
        c.samples_per_cell = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(500 * scale)));
        if (model == Model::gnp) {
            for (double p : { 0.2, 0.3, 0.5, 0.6, 0.8 })
                for (Vertex n : { 10, 20, 30, 50, 80, 100, 120, 150 })
                    c.cells.push_back(ModelParams{ Model::gnp, n, p, 0, 0 });
        }
        else {
            for (double p_a : { 0.02, 0.05, 0.1 })
                for (double p_r : { 0.02, 0.05, 0.1 })
                    for (Vertex n : { 10, 25, 50, 100 })
                        c.cells.push_back(ModelParams{ Model::bip, n, 0, p_r, p_a });
        }
        return c;
    }

    auto run_protocol(const ProtocolConfig & config) -> ProtocolResult
    {
        ProtocolResult result;
        RngConfig rng{ config.seed };
        EvaluateOptions opts;
        opts.oracle_max_n = config.oracle_max_n;
        opts.timings = config.timings;

        std::ofstream reports_file;
        if (config.out) {
            std::filesystem::create_directories(*config.out);
            reports_file.open(*config.out / "reports.jsonl", std::ios::binary);
            if (! reports_file)
                throw std::runtime_error("cannot write " + (*config.out / "reports.jsonl").string());
        }

        Json cell_log = Json::array();
        for (std::size_t ci = 0; ci < config.cells.size(); ++ci) {
            auto & params = config.cells[ci];
            if (params.model != config.model)
                throw DomainError("cell model differs from the protocol model");
            std::vector<BoundReport> cell(config.samples_per_cell);
            std::uint64_t first = ci * config.samples_per_cell;
            Json log = params_json(params);
            try {
                parallel_for(cell.size(), config.threads, [&] (std::size_t i) {
                    auto s = sample(params, rng, first + i);
                    auto r = evaluate_graph(s.graph, opts);
                    r.graph_id = model_name(params.model) + "-" + std::to_string(first + i);
                    r.model = model_name(params.model);
                    r.params = params_json(params);
                    r.params["attempts"] = s.attempts;
                    if (s.side_a_size)
                        r.params["side_a_size"] = *s.side_a_size;
                    r.seed_index = first + i;
                    cell[i] = std::move(r);
                });
            }
            catch (const ResourceLimit & e) {
                result.failures.push_back({ params, e.what() });
                log["error"] = e.what();
                cell_log.push_back(log);
                continue;
            }
            log["graphs"] = cell.size();
            cell_log.push_back(log);
            for (auto & r : cell) {
                if (reports_file.is_open())
                    reports_file << to_json(r, config.timings).dump() << '\n';
                result.reports.push_back(std::move(r));
            }
        }

        if (! result.reports.empty()) {
            result.domination = compare_domination(result.reports);
            result.independence = compare_independence(result.reports);
        }

        if (config.out) {
            auto write = [&] (const std::string & name, const std::string & text) {
                std::ofstream f(*config.out / name, std::ios::binary);
                f << text;
                if (! f)
                    throw std::runtime_error("cannot write " + (*config.out / name).string());
            };
            Json run;
            run["config"] = config.to_json();
            run["cells"] = cell_log;
            run["graphs"] = result.reports.size();
            write("run.json", run.dump(2) + "\n");
            if (! result.reports.empty()) {
                write("domination.csv", result.domination.to_csv());
                write("independence.csv", result.independence.to_csv());
            }
        }
        return result;
    }
}
