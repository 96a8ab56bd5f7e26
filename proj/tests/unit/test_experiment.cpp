#include <doctest.h>

#include "brute.hpp"

#include <graphbounds/errors.hpp>
#include <graphbounds/experiment.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace graphbounds;

namespace
{
    auto named(const char * text) -> Graph { return make_named(parse_named(text)); }

    auto slurp(const std::filesystem::path & p) -> std::string
    {
        std::ifstream in(p);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    }

    auto small_corpus(std::uint64_t seed, int count) -> std::vector<BoundReport>
    {
        std::mt19937_64 rng(seed);
        EvaluateOptions opts;
        opts.oracle_max_n = 12;
        std::vector<BoundReport> out;
        for (int i = 0; i < count; ++i) {
            auto g = brute::random_class_graph(rng, static_cast<Vertex>(4 + rng() % 9), 0.2 + 0.6 * (i % 4) / 3.0);
            auto r = evaluate_graph(g, opts);
            r.graph_id = "g" + std::to_string(i);
            out.push_back(std::move(r));
        }
        return out;
    }
}

TEST_CASE("evaluate P_3")
{
    EvaluateOptions opts;
    opts.oracle_max_n = 10;
    auto r = evaluate_graph(named("path:3"), opts);
    CHECK(r.n == 3);
    CHECK(r.m == 2);
    CHECK(r.graph6 == "Bg");
    CHECK(r.at("gamma_cssf").value == Rational(5, 3));
    CHECK(r.at("gamma_hm1").value == Rational(3, 2));
    CHECK(r.at("gamma_hm1").t == 1);
    CHECK(r.at("gamma_hm2").value == Rational(3, 2));
    CHECK_FALSE(r.has("gamma_hm3"));
    CHECK(r.at("alpha_cw").value == Rational(4, 3));
    CHECK(r.at("alpha_s").value == Rational(3, 2));
    CHECK(r.at("alpha_acl").value == 2);
    CHECK(r.at("alpha_hr").value == 2);
    CHECK(r.at("alpha_hm").value == 2);
    CHECK(r.oracle_gamma == 1);
    CHECK(r.oracle_alpha == 2);
    CHECK(r.timings.empty());

    auto c4 = evaluate_graph(named("cycle:4"));
    REQUIRE(c4.has("gamma_hm3"));
    CHECK(c4.at("gamma_hm3").value == 2);
    CHECK(c4.at("gamma_hm3").ab.has_value());
    CHECK_FALSE(c4.oracle_gamma);

    CHECK_THROWS_AS(evaluate_graph(parse_graph6("C~")), DomainError);
}

TEST_CASE("evaluation options select bound families")
{
    EvaluateOptions opts;
    opts.independence = false;
    opts.timings = true;
    auto r = evaluate_graph(named("cycle:6"), opts);
    CHECK(r.has("gamma_hm1"));
    CHECK_FALSE(r.has("alpha_hm"));
    CHECK_FALSE(r.timings.empty());
}

TEST_CASE("check_report catches broken relations")
{
    EvaluateOptions opts;
    opts.oracle_max_n = 10;
    auto r = evaluate_graph(named("cycle:6"), opts);
    CHECK_NOTHROW(check_report(r));

    auto bad = r;
    bad.bounds["gamma_hm1"].value = r.at("gamma_cssf").value + 1;
    CHECK_THROWS_AS(check_report(bad), InvariantViolation);

    bad = r;
    bad.oracle_gamma = 6;
    CHECK_THROWS_AS(check_report(bad), InvariantViolation);

    bad = r;
    bad.oracle_alpha = 1;
    CHECK_THROWS_AS(check_report(bad), InvariantViolation);
}

TEST_CASE("report JSON round trip")
{
    auto reports = small_corpus(5, 20);
    reports.push_back(evaluate_graph(named("cbip:3,4")));
    reports.back().params = Json{ { "p", 0.5 } };
    reports.back().seed_index = 17;
    reports.back().model = "bip";

    std::stringstream buffer;
    buffer << R"({"type":"config","command":"test"})" << "\n";
    write_reports(buffer, reports, false);
    auto back = read_reports(buffer);
    REQUIRE(back.size() == reports.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].graph_id == reports[i].graph_id);
        CHECK(back[i].graph6 == reports[i].graph6);
        CHECK(back[i].n == reports[i].n);
        CHECK(back[i].m == reports[i].m);
        CHECK(back[i].oracle_gamma == reports[i].oracle_gamma);
        CHECK(back[i].oracle_alpha == reports[i].oracle_alpha);
        CHECK(back[i].seed_index == reports[i].seed_index);
        CHECK(back[i].params == reports[i].params);
        REQUIRE(back[i].bounds.size() == reports[i].bounds.size());
        for (auto & [label, v] : reports[i].bounds) {
            CHECK(back[i].at(label).value == v.value);
            CHECK(back[i].at(label).t == v.t);
            CHECK(back[i].at(label).ab == v.ab);
        }
        CHECK(to_json(back[i], false) == to_json(reports[i], false));
    }

    auto j = to_json(reports.back(), false);
    CHECK(j["bounds"]["gamma_hm3"]["floor"] == "2");
    CHECK(j["bounds"]["gamma_hm3"].contains("argopt"));
    CHECK_FALSE(j.contains("timings"));
}

TEST_CASE("read_reports reports the failing line")
{
    std::stringstream in("{\"type\":\"config\"}\nnot json\n");
    try {
        read_reports(in);
        FAIL("expected ParseError");
    }
    catch (const ParseError & e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("comparison matrices")
{
    auto reports = small_corpus(9, 60);
    auto dom = compare_domination(reports);
    auto ind = compare_independence(reports);
    CHECK(dom.sample_size == 60);
    CHECK(dom.labels == domination_labels());
    CHECK(ind.labels == independence_labels());

    // brute recount of one cell
    std::uint64_t wins = 0;
    for (auto & r : reports)
        if (r.at("alpha_acl").ceil() > r.at("alpha_hm").ceil())
            ++wins;
    CHECK(ind.wins[ind.index("alpha_acl")][ind.index("alpha_hm")] == wins);

    // HM1 never loses to CSSF or HM2
    CHECK(dom.cell("gamma_cssf", "gamma_hm1") == 0.0);
    CHECK(dom.cell("gamma_hm2", "gamma_hm1") == 0.0);

    // order independence
    auto shuffled = reports;
    std::mt19937_64 rng(1);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(compare_domination(shuffled).wins == dom.wins);
    CHECK(compare_independence(shuffled).wins == ind.wins);

    auto csv = dom.to_csv();
    CHECK(csv.rfind("bound,gamma_cssf,gamma_hm1,gamma_hm2\n", 0) == 0);
    CHECK(csv.find("\ngamma_cssf,,") != std::string::npos);
    CHECK(dom.to_text().find("graphs: 60") != std::string::npos);

    CHECK_THROWS_AS(compare_domination({}), DomainError);
}

TEST_CASE("beats uses floors and ceilings")
{
    BoundReport r;
    r.bounds["gamma_cssf"] = BoundValue{ Rational(5, 2), 1, std::nullopt };
    r.bounds["gamma_hm2"] = BoundValue{ Rational(21, 10), 1, std::nullopt };
    r.bounds["alpha_s"] = BoundValue{ Rational(21, 10), std::nullopt, std::nullopt };
    r.bounds["alpha_cw"] = BoundValue{ Rational(29, 10), std::nullopt, std::nullopt };
    r.bounds["alpha_hm"] = BoundValue{ Rational(3), std::nullopt, std::nullopt };
    CHECK_FALSE(beats(r, "gamma_hm2", "gamma_cssf"));
    CHECK_FALSE(beats(r, "gamma_cssf", "gamma_hm2"));
    CHECK_FALSE(beats(r, "alpha_cw", "alpha_s"));
    CHECK_FALSE(beats(r, "alpha_hm", "alpha_cw"));
    r.bounds["gamma_hm2"].value = Rational(19, 10);
    CHECK(beats(r, "gamma_hm2", "gamma_cssf"));
    r.bounds["alpha_hm"].value = Rational(31, 10);
    CHECK(beats(r, "alpha_hm", "alpha_cw"));
}

TEST_CASE("find_witnesses")
{
    auto reports = small_corpus(13, 40);
    auto w = find_witnesses(reports, independence_labels());
    CHECK(w.size() == 12);
    for (auto & x : w)
        if (x.report)
            CHECK(beats(*x.report, x.row, x.col));
}

TEST_CASE("standard grid shape")
{
    auto g = standard_grid(Model::gnp, 0.1);
    CHECK(g.cells.size() == 40);
    CHECK(g.samples_per_cell == 50);
    auto b = standard_grid(Model::bip, 1.0);
    CHECK(b.cells.size() == 36);
    CHECK(b.samples_per_cell == 500);
    CHECK(standard_grid(Model::gnp, 0.0001).samples_per_cell == 1);
    CHECK(g.to_json()["cells"].size() == 40);
}

TEST_CASE("protocol runs are reproducible")
{
    namespace fs = std::filesystem;
    auto base = fs::temp_directory_path() / ("graphbounds-proto-" + std::to_string(::getpid()));
    fs::remove_all(base);

    ProtocolConfig config;
    config.model = Model::gnp;
    config.cells = { ModelParams{ Model::gnp, 10, 0.3, 0, 0 }, ModelParams{ Model::gnp, 14, 0.5, 0, 0 } };
    config.samples_per_cell = 6;
    config.seed = 42;
    config.oracle_max_n = 12;

    config.threads = 1;
    config.out = base / "a";
    auto a = run_protocol(config);
    config.threads = 3;
    config.out = base / "b";
    auto b = run_protocol(config);

    CHECK(a.reports.size() == 12);
    CHECK(a.failures.empty());
    for (auto name : { "reports.jsonl", "run.json", "domination.csv", "independence.csv" }) {
        CHECK(fs::exists(base / "a" / name));
        CHECK(slurp(base / "a" / name) == slurp(base / "b" / name));
    }
    CHECK(a.reports[7].seed_index == 7);
    CHECK(a.reports[0].oracle_gamma.has_value());

    std::ifstream in(base / "a" / "reports.jsonl");
    auto back = read_reports(in);
    CHECK(back.size() == 12);
    CHECK(compare_domination(back).wins == a.domination.wins);

    auto run = Json::parse(slurp(base / "a" / "run.json"));
    CHECK(run["config"]["seed"] == 42);

    config.cells.push_back(ModelParams{ Model::gnp, 3, 0.999999999, 0, 0 });
    config.out.reset();
    auto c = run_protocol(config);
    CHECK(c.failures.size() == 1);
    CHECK(c.reports.size() == 12);
    fs::remove_all(base);
}
