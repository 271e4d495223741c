#include "ivq/io.hpp"

#include <fstream>
#include <sstream>

namespace ivq {

namespace {

std::string objective_name(Objective o) { return o == Objective::KthMin ? "min" : "max"; }

Objective objective_from(const std::string& text) {
    if (text == "min") return Objective::KthMin;
    if (text == "max") return Objective::KthMax;
    throw IoError("unknown objective '" + text + "'");
}

EndpointKind kind_from(const std::string& text) {
    if (text == "open") return EndpointKind::Open;
    if (text == "closed") return EndpointKind::Closed;
    throw IoError("unknown endpoint kind '" + text + "'");
}

std::size_t one_based(const Json& j, const char* what) {
    const auto value = j.get<long long>();
    if (value < 1) throw IoError(std::string(what) + " index must be at least 1");
    return static_cast<std::size_t>(value - 1);
}

}  // namespace

Json to_json(const Rational& value) { return value.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw IoError("expected a rational string, got " + j.dump());
}

Json to_json(const Area& area) {
    Json j;
    const auto shape = area.shape();
    j["kind"] = to_string(shape);
    if (shape == Shape::Point) {
        j["value"] = to_json(area.lo());
        return j;
    }
    j["lo"] = to_json(area.lo());
    j["hi"] = to_json(area.hi());
    if (shape == Shape::Mixed) {
        j["lo_kind"] = to_string(area.lo_kind());
        j["hi_kind"] = to_string(area.hi_kind());
    }
    return j;
}

Area area_from_json(const Json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "point") return Area::point(rational_from_json(j.at("value")));
    const auto lo = rational_from_json(j.at("lo"));
    const auto hi = rational_from_json(j.at("hi"));
    if (kind == "open") return Area::open(lo, hi);
    if (kind == "closed") return Area::closed(lo, hi);
    if (kind == "mixed") {
        return {lo, hi, kind_from(j.at("lo_kind").get<std::string>()), kind_from(j.at("hi_kind").get<std::string>())};
    }
    throw IoError("unknown area kind '" + kind + "'");
}

Json to_json(const ModelSpec& model) { return Json{{"input", model.input.str()}, {"returns", model.returns.str()}}; }

ModelSpec model_from_json(const Json& j) {
    if (j.is_string()) return ModelSpec::parse(j.get<std::string>());
    return {TypeSet::parse(j.at("input").get<std::string>()), TypeSet::parse(j.at("returns").get<std::string>())};
}

Json to_json(const UncertainInstance& instance) {
    Json j;
    if (const auto* graph = std::get_if<MstProblem>(&instance.problem)) {
        j["problem"] = Json{{"type", "mst"}, {"lex", graph->lex}};
    } else {
        const auto& sel = std::get<SelectionProblem>(instance.problem);
        j["problem"] = Json{{"type", "kmin"},
                            {"k", sel.k},
                            {"objective", objective_name(sel.objective)},
                            {"tie_rule", to_string(sel.tie_rule)}};
    }
    j["model"] = to_json(instance.model);
    auto& areas = j["areas"] = Json::array();
    for (const auto& a : instance.areas) areas.push_back(to_json(a));
    if (instance.hidden) {
        auto& hidden = j["hidden"] = Json::array();
        for (const auto& h : *instance.hidden) hidden.push_back(to_json(h));
    }
    if (const auto* graph = std::get_if<MstProblem>(&instance.problem)) {
        Json edges = Json::array();
        for (std::size_t e = 0; e < graph->edges.size(); ++e) {
            edges.push_back(Json{{"u", graph->edges[e].u + 1},
                                 {"v", graph->edges[e].v + 1},
                                 {"weight", to_json(instance.areas[e])}});
        }
        j["graph"] = Json{{"vertices", graph->vertices}, {"edges", std::move(edges)}};
    }
    return j;
}

UncertainInstance instance_from_json(const Json& j) {
    UncertainInstance inst;
    inst.model = model_from_json(j.at("model"));
    const auto& problem = j.at("problem");
    const auto type = problem.at("type").get<std::string>();
    if (type == "mst") {
        MstProblem graph;
        graph.lex = problem.value("lex", true);
        const auto& g = j.at("graph");
        graph.vertices = g.at("vertices").get<std::size_t>();
        for (const auto& e : g.at("edges")) {
            graph.edges.push_back({one_based(e.at("u"), "vertex"), one_based(e.at("v"), "vertex")});
            if (!j.contains("areas")) inst.areas.push_back(area_from_json(e.at("weight")));
        }
        inst.problem = std::move(graph);
    } else if (type == "kmin") {
        SelectionProblem sel;
        sel.k = problem.value("k", std::size_t{1});
        sel.objective = objective_from(problem.value("objective", std::string("min")));
        sel.tie_rule = tie_rule_from_string(problem.value("tie_rule", std::string("stable")));
        inst.problem = sel;
    } else {
        throw IoError("unknown problem type '" + type + "'");
    }
    if (j.contains("areas")) {
        inst.areas.clear();
        for (const auto& a : j.at("areas")) inst.areas.push_back(area_from_json(a));
    }
    if (j.contains("hidden")) {
        std::vector<Rational> hidden;
        for (const auto& h : j.at("hidden")) hidden.push_back(rational_from_json(h));
        inst.hidden = std::move(hidden);
    }
    return inst;
}

std::map<std::size_t, AreaVector> script_from_json(const Json& j) {
    std::map<std::size_t, AreaVector> out;
    for (const auto& [key, list] : j.at("responses").items()) {
        std::size_t index = 0;
        try {
            index = one_based(Json(std::stoll(key)), "script");
        } catch (const std::logic_error&) {
            throw IoError("script key '" + key + "' is not a 1-based index");
        }
        auto& responses = out[index];
        for (const auto& a : list) responses.push_back(area_from_json(a));
    }
    return out;
}

Json script_to_json(const std::map<std::size_t, AreaVector>& responses) {
    Json r = Json::object();
    for (const auto& [index, list] : responses) {
        auto& arr = r[std::to_string(index + 1)] = Json::array();
        for (const auto& a : list) arr.push_back(to_json(a));
    }
    return Json{{"responses", std::move(r)}};
}

Json to_json(const RunReport& report, bool mst) {
    Json j;
    if (report.status != Termination::Solved) {
        j["answer"] = nullptr;
    } else if (mst) {
        Json tree = Json::array();
        for (auto e : report.answer) tree.push_back(e + 1);
        j["answer"] = std::move(tree);
    } else {
        j["answer"] = report.answer.front() + 1;
    }
    Json queries = Json::array();
    for (const auto& q : report.queries) queries.push_back(Json::array({q.index + 1, to_json(q.response)}));
    j["queries"] = std::move(queries);
    Json counts = Json::object();
    for (std::size_t i = 0; i < report.counts.size(); ++i) {
        if (report.counts[i] > 0) counts[std::to_string(i + 1)] = report.counts[i];
    }
    j["counts"] = std::move(counts);
    j["total"] = report.total;
    j["status"] = to_string(report.status);
    return j;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string() + " for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json_file(const std::filesystem::path& path) {
    try {
        return Json::parse(read_text_file(path));
    } catch (const Json::parse_error& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw IoError("failed writing " + path.string());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ivq
