#include <doctest.h>

#include <graphbounds/experiment.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

using namespace graphbounds;
namespace fs = std::filesystem;

namespace
{
    struct Run
    {
        int code = -1;
        std::string out;
    };

    auto run(const std::string & args, const std::string & stdin_text = "") -> Run
    {
        static int counter = 0;
        auto input = fs::temp_directory_path() / ("graphbounds-cli-in-" + std::to_string(::getpid()) + "-"
                + std::to_string(counter++));
        {
            std::ofstream f(input);
            f << stdin_text;
        }
        std::string cmd = std::string(GRAPHBOUNDS_CLI) + " " + args + " < " + input.string() + " 2>/dev/null";
        Run r;
        FILE * pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe);
        char buffer[4096];
        std::size_t got;
        while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
            r.out.append(buffer, got);
        int status = pclose(pipe);
        r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        fs::remove(input);
        return r;
    }

    auto reports_of(const std::string & text) -> std::vector<BoundReport>
    {
        std::istringstream in(text);
        return read_reports(in);
    }

    auto value(const Json & bound) -> Rational
    {
        Rational r(BigInt(bound["num"].get<std::string>()), BigInt(bound["den"].get<std::string>()));
        r.canonicalize();
        return r;
    }

    auto slurp(const fs::path & p) -> std::string
    {
        std::ifstream in(p);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    }

    auto scratch(const std::string & name) -> fs::path
    {
        auto p = fs::temp_directory_path() / ("graphbounds-cli-" + std::to_string(::getpid()) + "-" + name);
        fs::remove_all(p);
        return p;
    }
}

TEST_CASE("bounds on P_3 from stdin as JSON")
{
    auto r = run("bounds - --json", "Bg\n");
    REQUIRE(r.code == 0);
    auto reports = reports_of(r.out);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].at("gamma_hm1").value == Rational(3, 2));
    CHECK(reports[0].at("alpha_cw").value == Rational(4, 3));

    // first line echoes the configuration
    auto first = Json::parse(r.out.substr(0, r.out.find('\n')));
    CHECK(first["type"] == "config");
    CHECK(first["command"] == "bounds");
}

TEST_CASE("bounds on the large star")
{
    auto r = run("bounds --named star:1000000 --json");
    REQUIRE(r.code == 0);
    auto line = r.out.substr(r.out.find('\n') + 1);
    auto j = Json::parse(line.substr(0, line.find('\n')));
    CHECK(value(j["bounds"]["gamma_hm1"]) < 2000);
    CHECK(value(j["bounds"]["gamma_cssf"]) > 750000 - 1);
}

TEST_CASE("bounds on K_{2,1000}")
{
    auto r = run("bounds --named cbip:2,1000 --json");
    REQUIRE(r.code == 0);
    auto reports = reports_of(r.out);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].at("gamma_hm3").value == 2);
    CHECK(reports[0].at("gamma_hm1").value > 60);
}

TEST_CASE("human and CSV output")
{
    auto human = run("bounds --named path:3");
    CHECK(human.code == 0);
    CHECK(human.out.find("gamma_hm1   3/2  ~1.5") != std::string::npos);

    auto csv = run("bounds --named cycle:4 --csv");
    CHECK(csv.code == 0);
    CHECK(csv.out.find("gamma_hm3") != std::string::npos);
}

TEST_CASE("edge-list input and oracles")
{
    auto r = run("bounds - --format edges --json --oracle-max-n 10", "3\n0 1\n1 2\n");
    REQUIRE(r.code == 0);
    auto reports = reports_of(r.out);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].oracle_gamma == 1);
    CHECK(reports[0].oracle_alpha == 2);
}

TEST_CASE("input errors exit with 2")
{
    CHECK(run("bounds -", "C\n").code == 2);
    CHECK(run("bounds -", "C~\n").code == 2);               // K_4 is skipped, nothing left
    CHECK(run("bounds -", "").code == 2);
    CHECK(run("bounds --named wheel:5").code == 2);
    CHECK(run("bounds - --format edges", "3\n0 3\n").code == 2);
    CHECK(run("nonsense").code == 2);
    // one good graph among skipped ones still succeeds
    CHECK(run("bounds -", "C~\nBg\n").code == 0);
}

TEST_CASE("verify command")
{
    auto ok = run("verify --catalog 5");
    CHECK(ok.code == 0);
    CHECK(ok.out.rfind("PASS 26 graphs", 0) == 0);

    auto bip = run("verify --named cbip:2,2 --dist bip");
    CHECK(bip.code == 0);

    // C(30,15) outcomes exceed the enumeration limit
    CHECK(run("verify --named cycle:30 --dist dom").code == 3);
}

TEST_CASE("oracle command")
{
    auto g = run("oracle --named cycle:7 --json");
    CHECK(g.code == 0);
    CHECK(g.out.find("\"gamma\":3") != std::string::npos);
    CHECK(g.out.find("\"alpha\":3") != std::string::npos);

    auto d = run("oracle --named path:3 --dist dom --t 1 --json");
    CHECK(d.code == 0);
    CHECK(d.out.find("5/3") != std::string::npos);

    CHECK(run("oracle --named cycle:30").code == 3);
}

TEST_CASE("generate is reproducible")
{
    auto dir = scratch("gen");
    fs::create_directories(dir);
    auto a = run("generate --model gnp --n 12 --p 0.3 --samples 5 --seed 9 --out " + (dir / "a.g6").string());
    auto b = run("generate --model gnp --n 12 --p 0.3 --samples 5 --seed 9 --threads 2 --out " + (dir / "b.g6").string());
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    CHECK(slurp(dir / "a.g6") == slurp(dir / "b.g6"));
    CHECK(slurp(dir / "a.g6.json") == slurp(dir / "b.g6.json"));

    auto piped = run("bounds " + (dir / "a.g6").string() + " --json");
    CHECK(piped.code == 0);
    CHECK(reports_of(piped.out).size() == 5);
    fs::remove_all(dir);
}

TEST_CASE("protocol reruns give identical files and compare reads them back")
{
    auto dir = scratch("proto");
    std::string flags = "protocol --model bip --n 10 --pr 0.05 --pa 0.05 --samples 8 --seed 7 --oracle-max-n 10 --out ";
    auto a = run(flags + (dir / "a").string());
    auto b = run(flags + (dir / "b").string() + " --threads 2");
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    for (auto name : { "reports.jsonl", "run.json", "domination.csv", "independence.csv" })
        CHECK(slurp(dir / "a" / name) == slurp(dir / "b" / name));

    auto cmp = run("compare --csv " + (dir / "a" / "reports.jsonl").string());
    CHECK(cmp.code == 0);
    CHECK(cmp.out.find(slurp(dir / "a" / "domination.csv")) != std::string::npos);
    fs::remove_all(dir);
}
