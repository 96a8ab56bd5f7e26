#include <graphbounds/catalog.hpp>
#include <graphbounds/errors.hpp>
#include <graphbounds/experiment.hpp>
#include <graphbounds/independence.hpp>
#include <graphbounds/oracle.hpp>
#include <graphbounds/parallel.hpp>
#include <graphbounds/randgraph.hpp>
#include <graphbounds/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace graphbounds;

namespace
{
    enum Exit
    {
        exit_ok = 0,
        exit_invariant = 1,
        exit_input = 2,
        exit_resource = 3
    };

    // named families above this size are evaluated without materialising
    constexpr std::uint64_t materialise_limit = 2048;

    struct InputItem
    {
        std::string id;
        std::string model;
        std::optional<Graph> graph;
        std::optional<GraphProfile> profile;   // named families only
    };

    struct InputFlags
    {
        std::vector<std::string> files;
        std::vector<std::string> named;
        std::string format = "auto";
        Vertex catalog = 0;
    };

    auto add_input_flags(CLI::App & cmd, InputFlags & in) -> void
    {
        cmd.add_option("inputs", in.files, "graph files ('-' for stdin)");
        cmd.add_option("--named", in.named, "family:params, e.g. star:100, path:5, cycle:6, cbip:2,1000");
        cmd.add_option("--format", in.format, "input format")->check(CLI::IsMember({ "auto", "graph6", "edges" }));
    }

    auto read_all(std::istream & in) -> std::string
    {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto ends_with(const std::string & s, const std::string & suffix) -> bool
    {
        return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
    }

    auto parse_stream(const std::string & text, const std::string & source, bool edges, std::vector<InputItem> & out) -> void
    {
        if (edges) {
            out.push_back({ source, "input", parse_edge_list(text), std::nullopt });
            return;
        }
        std::istringstream lines(text);
        std::string line;
        std::size_t number = 0;
        while (std::getline(lines, line)) {
            ++number;
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            try {
                out.push_back({ source + ":" + std::to_string(number), "input", parse_graph6(line), std::nullopt });
            }
            catch (const ParseError & e) {
                throw ParseError(source + " line " + std::to_string(number) + ": " + e.what(), number);
            }
        }
    }

    auto load_inputs(const InputFlags & flags) -> std::vector<InputItem>
    {
        std::vector<InputItem> out;
        for (auto & file : flags.files) {
            bool edges = flags.format == "edges"
                || (flags.format == "auto" && (ends_with(file, ".txt") || ends_with(file, ".edges") || ends_with(file, ".el")));
            if (file == "-") {
                parse_stream(read_all(std::cin), "stdin", edges, out);
                continue;
            }
            std::ifstream f(file, std::ios::binary);
            if (! f)
                throw DomainError("cannot open " + file);
            parse_stream(read_all(f), file, edges, out);
        }
        for (auto & text : flags.named) {
            auto spec = parse_named(text);
            InputItem item{ spec.label(), "named", std::nullopt, std::nullopt };
            if (spec.vertex_count() <= materialise_limit)
                item.graph = make_named(spec);
            else
                item.profile = GraphProfile::from_named(spec);
            out.push_back(std::move(item));
        }
        if (flags.catalog) {
            auto graphs = small_graph_catalog(flags.catalog);
            for (std::size_t i = 0; i < graphs.size(); ++i)
                out.push_back({ "catalog-" + std::to_string(i), "catalog", std::move(graphs[i]), std::nullopt });
        }
        return out;
    }

    auto decimal(const Rational & x) -> std::string
    {
        return to_decimal(x, 6);
    }

    auto config_line(const std::string & command, const Json & extra) -> Json
    {
        Json j;
        j["type"] = "config";
        j["command"] = command;
        j["code_version"] = code_version();
        for (auto & [k, v] : extra.items())
            j[k] = v;
        return j;
    }

    auto argopt_text(const BoundValue & b) -> std::string
    {
        if (b.t)
            return "t=" + std::to_string(*b.t);
        if (b.ab)
            return "(a,b)=(" + std::to_string(b.ab->first) + "," + std::to_string(b.ab->second) + ")";
        return "";
    }

    auto print_human(std::ostream & os, const BoundReport & r) -> void
    {
        os << r.graph_id << "  n=" << r.n << " m=" << r.m;
        if (! r.graph6.empty())
            os << " graph6=" << r.graph6;
        os << "\n";
        for (auto & label : all_bound_labels()) {
            auto it = r.bounds.find(label);
            if (it == r.bounds.end())
                continue;
            auto & b = it->second;
            bool gamma = label.rfind("gamma", 0) == 0;
            os << "  " << label << std::string(12 - label.size(), ' ') << to_string(b.value) << "  ~" << decimal(b.value)
               << "  " << (gamma ? "floor " + b.floor().get_str() : "ceil " + b.ceil().get_str());
            auto arg = argopt_text(b);
            if (! arg.empty())
                os << "  " << arg;
            os << "\n";
        }
        if (r.oracle_gamma)
            os << "  gamma       " << *r.oracle_gamma << "  (exact)\n";
        if (r.oracle_alpha)
            os << "  alpha       " << *r.oracle_alpha << "  (exact)\n";
        for (auto & [k, ms] : r.timings)
            os << "  time " << k << " " << ms << " ms\n";
    }

    auto csv_header() -> std::string
    {
        std::string h = "graph_id,n,m,graph6";
        for (auto & l : all_bound_labels())
            h += "," + l;
        return h + ",oracle_gamma,oracle_alpha";
    }

    auto csv_row(const BoundReport & r) -> std::string
    {
        std::string row = r.graph_id + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," + r.graph6;
        for (auto & l : all_bound_labels())
            row += "," + (r.has(l) ? to_string(r.at(l).value) : std::string());
        row += "," + (r.oracle_gamma ? std::to_string(*r.oracle_gamma) : std::string());
        row += "," + (r.oracle_alpha ? std::to_string(*r.oracle_alpha) : std::string());
        return row;
    }

    auto evaluate_item(const InputItem & item, const EvaluateOptions & opts) -> BoundReport
    {
        auto r = item.graph ? evaluate_graph(*item.graph, opts) : evaluate_profile(*item.profile, opts, nullptr);
        r.graph_id = item.id;
        r.model = item.model;
        return r;
    }

    auto open_output(const std::string & path, std::ofstream & file) -> std::ostream &
    {
        if (path.empty() || path == "-")
            return std::cout;
        file.open(path, std::ios::binary);
        if (! file)
            throw DomainError("cannot write " + path);
        return file;
    }

    // bounds ------------------------------------------------------------------

    struct BoundsFlags
    {
        InputFlags in;
        bool json = false;
        bool csv = false;
        std::uint64_t oracle_max_n = 0;
        unsigned threads = 0;
        bool timings = false;
        std::string out;
    };

    auto cmd_bounds(const BoundsFlags & f) -> int
    {
        auto items = load_inputs(f.in);
        if (items.empty())
            throw DomainError("no input graphs");

        EvaluateOptions opts;
        opts.oracle_max_n = f.oracle_max_n;
        opts.timings = f.timings;
        auto threads = f.threads ? f.threads : default_threads();

        std::vector<std::optional<BoundReport>> reports(items.size());
        std::vector<std::string> skipped(items.size());
        parallel_for(items.size(), threads, [&] (std::size_t i) {
            try {
                reports[i] = evaluate_item(items[i], opts);
            }
            catch (const DomainError & e) {
                skipped[i] = e.what();
            }
        });

        Json cfg;
        cfg["format"] = f.json ? "json" : f.csv ? "csv" : "human";
        cfg["oracle_max_n"] = f.oracle_max_n;
        cfg["threads"] = threads;
        cfg["timings"] = f.timings;
        cfg["inputs"] = f.in.files;
        cfg["named"] = f.in.named;

        std::ofstream file;
        auto & os = open_output(f.out, file);
        if (f.json)
            os << config_line("bounds", cfg).dump() << "\n";
        else if (f.csv)
            os << "# " << config_line("bounds", cfg).dump() << "\n" << csv_header() << "\n";
        else
            os << "# " << config_line("bounds", cfg).dump() << "\n";

        std::size_t evaluated = 0;
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (! reports[i]) {
                std::cerr << "skipped " << items[i].id << ": " << skipped[i] << "\n";
                continue;
            }
            ++evaluated;
            if (f.json)
                os << to_json(*reports[i], f.timings).dump() << "\n";
            else if (f.csv)
                os << csv_row(*reports[i]) << "\n";
            else
                print_human(os, *reports[i]);
        }
        os.flush();
        return evaluated == 0 ? exit_input : exit_ok;
    }

    // oracle ------------------------------------------------------------------

    struct OracleFlags
    {
        InputFlags in;
        std::uint64_t max_n = 0;
        std::string dist;
        unsigned t = 0;
        unsigned a = 0;
        unsigned b = 0;
        bool json = false;
    };

    auto distribution_json(const ExactDistribution & d) -> Json
    {
        Json j;
        Json support = Json::object();
        for (auto & [z, count] : d.support)
            support[std::to_string(z)] = count.get_str();
        j["support"] = support;
        j["total"] = d.total.get_str();
        j["mean"] = to_string(d.mean);
        j["variance"] = to_string(d.variance);
        j["bhatia_davis"] = d.satisfies_bhatia_davis();
        return j;
    }

    auto cmd_oracle(const OracleFlags & f) -> int
    {
        auto items = load_inputs(f.in);
        if (items.empty())
            throw DomainError("no input graphs");
        OracleLimits limits;
        if (f.max_n) {
            limits.gamma_max_n = static_cast<unsigned>(f.max_n);
            limits.alpha_max_n = static_cast<unsigned>(f.max_n);
        }

        for (auto & item : items) {
            if (! item.graph)
                throw ResourceLimit(item.id + " is too large for the oracles");
            auto & g = *item.graph;
            Json j;
            j["graph_id"] = item.id;
            j["graph6"] = encode_graph6(g);
            if (f.dist.empty()) {
                j["gamma"] = exact_gamma(g, limits);
                j["alpha"] = exact_alpha(g, limits);
            }
            else if (f.dist == "dom") {
                j["t"] = f.t;
                j["dom"] = distribution_json(exhaustive_dom_distribution(g, f.t, limits));
            }
            else if (f.dist == "ind") {
                j["t"] = f.t;
                j["ind"] = distribution_json(exhaustive_ind_distribution(g, f.t, limits));
            }
            else {
                auto bip = find_bipartition(g);
                if (! bip)
                    throw DomainError(item.id + " is not bipartite");
                j["a"] = f.a;
                j["b"] = f.b;
                j["bip"] = distribution_json(exhaustive_bip_distribution(g, *bip, f.a, f.b, limits));
            }

            if (f.json) {
                std::cout << j.dump() << "\n";
                continue;
            }
            std::cout << item.id << "  " << j["graph6"].get<std::string>() << "\n";
            for (auto & [k, v] : j.items()) {
                if (k == "graph_id" || k == "graph6")
                    continue;
                std::cout << "  " << k << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
        return exit_ok;
    }

    // generate ----------------------------------------------------------------

    struct GenerateFlags
    {
        std::string model = "gnp";
        Vertex n = 10;
        double p = 0.5;
        double p_r = 0;
        double p_a = 0;
        std::uint64_t samples = 1;
        std::uint64_t first = 0;
        std::uint64_t seed = 0;
        unsigned threads = 0;
        std::string out;
    };

    auto cmd_generate(const GenerateFlags & f) -> int
    {
        ModelParams params{ parse_model(f.model), f.n, f.p, f.p_r, f.p_a };
        RngConfig rng{ f.seed };
        auto batch = sample_batch(params, rng, f.first, f.samples, f.threads ? f.threads : default_threads());
        if (f.out.empty() || f.out == "-") {
            std::ostringstream sidecar;
            write_batch(std::cout, sidecar, params, rng, batch);
            return exit_ok;
        }
        std::ofstream graphs(f.out, std::ios::binary), sidecar(f.out + ".json", std::ios::binary);
        if (! graphs || ! sidecar)
            throw DomainError("cannot write " + f.out);
        write_batch(graphs, sidecar, params, rng, batch);
        return exit_ok;
    }

    // compare -----------------------------------------------------------------

    struct CompareFlags
    {
        std::vector<std::string> files;
        bool csv = false;
    };

    auto read_report_files(const std::vector<std::string> & files) -> std::vector<BoundReport>
    {
        std::vector<BoundReport> reports;
        for (auto & file : files) {
            std::vector<BoundReport> part;
            if (file == "-")
                part = read_reports(std::cin);
            else {
                std::ifstream in(file, std::ios::binary);
                if (! in)
                    throw DomainError("cannot open " + file);
                part = read_reports(in);
            }
            std::move(part.begin(), part.end(), std::back_inserter(reports));
        }
        return reports;
    }

    auto cmd_compare(const CompareFlags & f) -> int
    {
        auto reports = read_report_files(f.files.empty() ? std::vector<std::string>{ "-" } : f.files);
        auto dom = compare_domination(reports);
        auto ind = compare_independence(reports);
        if (f.csv)
            std::cout << dom.to_csv() << "\n" << ind.to_csv();
        else
            std::cout << "domination (row floor < column floor)\n" << dom.to_text()
                      << "\nindependence (row ceil > column ceil)\n" << ind.to_text();
        return exit_ok;
    }

    // verify ------------------------------------------------------------------

    struct VerifyFlags
    {
        InputFlags in;
        std::string dist = "all";
        bool no_sandwich = false;
        std::uint64_t max_n = 0;
        bool witnesses = false;
        std::vector<std::string> reports;
    };

    auto default_witness_families() -> std::vector<std::string>
    {
        std::vector<std::string> out;
        for (int m = 2; m <= 30; ++m)
            out.push_back("star:" + std::to_string(m));
        for (int n = 3; n <= 30; ++n)
            out.push_back("path:" + std::to_string(n));
        for (int n = 4; n <= 30; ++n)
            out.push_back("cycle:" + std::to_string(n));
        for (int a = 1; a <= 12; ++a)
            for (int b = std::max(a, 2); b <= 12; ++b)
                out.push_back("cbip:" + std::to_string(a) + "," + std::to_string(b));
        return out;
    }

    auto cmd_witnesses(VerifyFlags f) -> int
    {
        auto reports = read_report_files(f.reports);
        auto from_reports = reports.size();
        if (f.in.named.empty())
            f.in.named = default_witness_families();
        if (! f.in.catalog)
            f.in.catalog = 6;
        auto items = load_inputs(f.in);
        std::vector<std::optional<BoundReport>> extra(items.size());
        parallel_for(items.size(), default_threads(), [&] (std::size_t i) {
            try {
                extra[i] = evaluate_item(items[i], EvaluateOptions{});
            }
            catch (const DomainError &) {
            }
        });
        for (auto & r : extra)
            if (r)
                reports.push_back(std::move(*r));
        std::cout << "searching " << reports.size() << " graphs (" << from_reports << " from reports)\n";

        auto ind = find_witnesses(reports, independence_labels());
        auto dom = find_witnesses(reports, { "gamma_hm2", "gamma_cssf" });
        bool all = true;
        auto show = [&] (const Witness & w, const char * rule) {
            if (! w.report) {
                all = false;
                std::cout << "MISSING " << w.row << " > " << w.col << "\n";
                return;
            }
            auto & r = *w.report;
            std::cout << "found   " << w.row << " " << rule << " " << w.col << "  on " << r.graph_id;
            if (! r.graph6.empty())
                std::cout << " [" << r.graph6 << "]";
            std::cout << "  " << to_string(r.at(w.row).value) << " vs " << to_string(r.at(w.col).value) << "\n";
        };
        for (auto & w : ind)
            show(w, "ceil >");
        for (auto & w : dom)
            show(w, "floor <");
        return all ? exit_ok : exit_invariant;
    }

    auto cmd_verify(const VerifyFlags & f) -> int
    {
        if (f.witnesses)
            return cmd_witnesses(f);

        auto items = load_inputs(f.in);
        if (items.empty())
            throw DomainError("no input graphs");
        VerifyOptions opts;
        opts.dom = f.dist == "all" || f.dist == "dom";
        opts.ind = f.dist == "all" || f.dist == "ind";
        opts.bip = f.dist == "all" || f.dist == "bip";
        opts.sandwich = ! f.no_sandwich && f.dist == "all";
        if (f.max_n) {
            opts.limits.gamma_max_n = static_cast<unsigned>(f.max_n);
            opts.limits.alpha_max_n = static_cast<unsigned>(f.max_n);
        }

        std::vector<Graph> graphs;
        for (auto & item : items) {
            if (! item.graph)
                throw ResourceLimit(item.id + " is too large for the oracles");
            graphs.push_back(std::move(*item.graph));
        }
        auto summary = verify_corpus(graphs, opts);
        if (summary.failure) {
            std::cout << summary.failure->describe() << "\n";
            return exit_invariant;
        }
        std::cout << "PASS " << summary.graphs << " graphs, " << summary.checks << " checks\n";
        return exit_ok;
    }

    // protocol ----------------------------------------------------------------

    struct ProtocolFlags
    {
        std::string model = "gnp";
        bool standard_grid = false;
        double scale = 1.0;
        std::vector<Vertex> n;
        std::vector<double> p, p_r, p_a;
        std::uint64_t samples = 50;
        std::uint64_t seed = 0;
        std::uint64_t oracle_max_n = 0;
        unsigned threads = 0;
        bool timings = false;
        std::string out;
    };

    auto cmd_protocol(const ProtocolFlags & f) -> int
    {
        auto model = parse_model(f.model);
        ProtocolConfig config;
        if (f.standard_grid)
            config = standard_grid(model, f.scale);
        else {
            config.model = model;
            config.samples_per_cell = f.samples;
            if (f.n.empty())
                throw DomainError("--n is required without --standard-grid");
            auto ps = f.p.empty() ? std::vector<double>{ 0.5 } : f.p;
            auto prs = f.p_r.empty() ? std::vector<double>{ 0 } : f.p_r;
            auto pas = f.p_a.empty() ? std::vector<double>{ 0 } : f.p_a;
            for (auto n : f.n) {
                if (model == Model::gnp)
                    for (auto p : ps)
                        config.cells.push_back({ model, n, p, 0, 0 });
                else
                    for (auto pa : pas)
                        for (auto pr : prs)
                            config.cells.push_back({ model, n, 0, pr, pa });
            }
        }
        config.seed = f.seed;
        config.oracle_max_n = f.oracle_max_n;
        config.threads = f.threads ? f.threads : default_threads();
        config.timings = f.timings;
        if (! f.out.empty())
            config.out = f.out;
        for (auto & c : config.cells)
            c.validate();

        auto result = run_protocol(config);
        std::cout << "# " << config_line("protocol", config.to_json()).dump() << "\n";
        for (auto & failure : result.failures)
            std::cout << "cell " << failure.params.label() << " failed: " << failure.message << "\n";
        if (result.reports.empty())
            return exit_resource;
        std::cout << "domination (row floor < column floor)\n" << result.domination.to_text()
                  << "\nindependence (row ceil > column ceil)\n" << result.independence.to_text();
        return result.failures.empty() ? exit_ok : exit_resource;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{ "Exact domination and independence bounds" };
    app.require_subcommand(1);

    BoundsFlags bounds;
    auto bounds_cmd = app.add_subcommand("bounds", "evaluate every bound");
    add_input_flags(*bounds_cmd, bounds.in);
    bounds_cmd->add_flag("--json", bounds.json, "JSON lines output");
    bounds_cmd->add_flag("--csv", bounds.csv, "CSV output");
    bounds_cmd->add_option("--oracle-max-n", bounds.oracle_max_n, "run exact oracles up to this n");
    bounds_cmd->add_option("--threads", bounds.threads, "worker threads (env GRAPHBOUNDS_THREADS)");
    bounds_cmd->add_flag("--timings", bounds.timings, "record wall time per bound");
    bounds_cmd->add_option("--out", bounds.out, "output file");

    OracleFlags oracle;
    auto oracle_cmd = app.add_subcommand("oracle", "exact γ and α, or exhaustive distributions");
    add_input_flags(*oracle_cmd, oracle.in);
    oracle_cmd->add_option("--oracle-max-n", oracle.max_n, "size limit for the exact oracles");
    oracle_cmd->add_option("--dist", oracle.dist, "distribution")->check(CLI::IsMember({ "dom", "ind", "bip" }));
    oracle_cmd->add_option("--t", oracle.t, "sampling size");
    oracle_cmd->add_option("--a", oracle.a, "side A sampling size");
    oracle_cmd->add_option("--b", oracle.b, "side B sampling size");
    oracle_cmd->add_flag("--json", oracle.json, "JSON lines output");

    GenerateFlags generate;
    auto generate_cmd = app.add_subcommand("generate", "sample random graphs as graph6");
    generate_cmd->add_option("--model", generate.model)->check(CLI::IsMember({ "gnp", "bip" }));
    generate_cmd->add_option("--n", generate.n);
    generate_cmd->add_option("--p", generate.p);
    generate_cmd->add_option("--pr", generate.p_r);
    generate_cmd->add_option("--pa", generate.p_a);
    generate_cmd->add_option("--samples", generate.samples);
    generate_cmd->add_option("--first", generate.first, "first graph index");
    generate_cmd->add_option("--seed", generate.seed);
    generate_cmd->add_option("--threads", generate.threads);
    generate_cmd->add_option("--out", generate.out, "graph6 file; sidecar goes to <out>.json");

    CompareFlags compare;
    auto compare_cmd = app.add_subcommand("compare", "strict-win matrices from JSON line reports");
    compare_cmd->add_option("reports", compare.files, "report files ('-' for stdin)");
    compare_cmd->add_flag("--csv", compare.csv);

    VerifyFlags verify;
    auto verify_cmd = app.add_subcommand("verify", "check bounds against the exhaustive oracles");
    add_input_flags(*verify_cmd, verify.in);
    verify_cmd->add_option("--catalog", verify.in.catalog, "add all connected non-complete graphs up to this n");
    verify_cmd->add_option("--dist", verify.dist)->check(CLI::IsMember({ "all", "dom", "ind", "bip" }));
    verify_cmd->add_flag("--no-sandwich", verify.no_sandwich);
    verify_cmd->add_option("--oracle-max-n", verify.max_n);
    verify_cmd->add_flag("--witnesses", verify.witnesses, "search incomparability witnesses");
    verify_cmd->add_option("--reports", verify.reports, "report files searched for witnesses");

    ProtocolFlags protocol;
    auto protocol_cmd = app.add_subcommand("protocol", "random-graph comparison experiment");
    protocol_cmd->add_option("--model", protocol.model)->check(CLI::IsMember({ "gnp", "bip" }));
    protocol_cmd->add_flag("--standard-grid", protocol.standard_grid, "the standard parameter grid");
    protocol_cmd->add_option("--scale", protocol.scale, "fraction of 500 samples per cell");
    protocol_cmd->add_option("--n", protocol.n);
    protocol_cmd->add_option("--p", protocol.p);
    protocol_cmd->add_option("--pr", protocol.p_r);
    protocol_cmd->add_option("--pa", protocol.p_a);
    protocol_cmd->add_option("--samples", protocol.samples, "graphs per cell");
    protocol_cmd->add_option("--seed", protocol.seed);
    protocol_cmd->add_option("--oracle-max-n", protocol.oracle_max_n);
    protocol_cmd->add_option("--threads", protocol.threads);
    protocol_cmd->add_flag("--timings", protocol.timings);
    protocol_cmd->add_option("--out", protocol.out, "output directory");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*bounds_cmd)
            return cmd_bounds(bounds);
        if (*oracle_cmd)
            return cmd_oracle(oracle);
        if (*generate_cmd)
            return cmd_generate(generate);
        if (*compare_cmd)
            return cmd_compare(compare);
        if (*verify_cmd)
            return cmd_verify(verify);
        if (*protocol_cmd)
            return cmd_protocol(protocol);
    }
    catch (const InvariantViolation & e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return exit_invariant;
    }
    catch (const ResourceLimit & e) {
        std::cerr << "refused: " << e.what() << "\n";
        return exit_resource;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
