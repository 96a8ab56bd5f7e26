#include <graphbounds/experiment.hpp>

#include <graphbounds/errors.hpp>

#include <istream>
#include <ostream>

namespace graphbounds
{
    auto to_json(const BoundReport & r, bool with_timings) -> Json
    {
        Json j;
        j["graph_id"] = r.graph_id;
        j["model"] = r.model;
        j["params"] = r.params;
        j["seed_index"] = r.seed_index ? Json(*r.seed_index) : Json(nullptr);
        j["n"] = r.n;
        j["m"] = r.m;
        j["graph6"] = r.graph6;

        auto & bounds = j["bounds"] = Json::object();
        for (auto & label : all_bound_labels()) {
            auto it = r.bounds.find(label);
            if (it == r.bounds.end())
                continue;
            auto & b = it->second;
            Json e;
            e["num"] = b.value.get_num().get_str();
            e["den"] = b.value.get_den().get_str();
            e["floor"] = b.floor().get_str();
            e["ceil"] = b.ceil().get_str();
            if (b.t)
                e["argopt"] = Json{ { "t", *b.t } };
            else if (b.ab)
                e["argopt"] = Json{ { "a", b.ab->first }, { "b", b.ab->second } };
            else
                e["argopt"] = nullptr;
            bounds[label] = e;
        }

        if (r.oracle_gamma || r.oracle_alpha) {
            Json o = Json::object();
            if (r.oracle_gamma)
                o["gamma"] = *r.oracle_gamma;
            if (r.oracle_alpha)
                o["alpha"] = *r.oracle_alpha;
            j["oracle"] = o;
        }
        if (with_timings)
            j["timings"] = r.timings;
        return j;
    }

    auto report_from_json(const Json & j) -> BoundReport
    {
        BoundReport r;
        r.graph_id = j.at("graph_id").get<std::string>();
        r.model = j.at("model").get<std::string>();
        r.params = j.at("params");
        if (! j.at("seed_index").is_null())
            r.seed_index = j.at("seed_index").get<std::uint64_t>();
        r.n = j.at("n").get<std::uint64_t>();
        r.m = j.at("m").get<std::uint64_t>();
        r.graph6 = j.value("graph6", std::string());

        for (auto & [label, e] : j.at("bounds").items()) {
            BoundValue b;
            b.value = make_rational(BigInt(e.at("num").get<std::string>()), BigInt(e.at("den").get<std::string>()));
            auto & arg = e.at("argopt");
            if (arg.is_object() && arg.contains("t"))
                b.t = arg.at("t").get<std::uint64_t>();
            else if (arg.is_object())
                b.ab = std::pair{ arg.at("a").get<std::uint64_t>(), arg.at("b").get<std::uint64_t>() };
            r.bounds[label] = b;
        }
        if (j.contains("oracle")) {
            auto & o = j.at("oracle");
            if (o.contains("gamma"))
                r.oracle_gamma = o.at("gamma").get<std::uint64_t>();
            if (o.contains("alpha"))
                r.oracle_alpha = o.at("alpha").get<std::uint64_t>();
        }
        if (j.contains("timings"))
            for (auto & [k, v] : j.at("timings").items())
                r.timings[k] = v.get<double>();
        return r;
    }

    auto read_reports(std::istream & in) -> std::vector<BoundReport>
    {
        std::vector<BoundReport> out;
        std::string line;
        std::size_t number = 0;
        while (std::getline(in, line)) {
            ++number;
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            try {
                auto j = Json::parse(line);
                if (j.contains("type") && j["type"] == "config")
                    continue;
                out.push_back(report_from_json(j));
            }
            catch (const nlohmann::json::exception & e) {
                throw ParseError("report line " + std::to_string(number) + ": " + e.what(), number);
            }
            catch (const std::invalid_argument & e) {
                throw ParseError("report line " + std::to_string(number) + ": " + e.what(), number);
            }
        }
        return out;
    }

    auto write_reports(std::ostream & out, const std::vector<BoundReport> & reports, bool with_timings) -> void
    {
        for (auto & r : reports)
            out << to_json(r, with_timings).dump() << '\n';
    }
}
