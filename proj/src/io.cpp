#include "complements/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace complements::io {

namespace {

const json& field(const json& object, const char* name, const char* context) {
    if (!object.is_object()) throw InputFormatError(std::string(context) + " must be a JSON object");
    auto it = object.find(name);
    if (it == object.end())
        throw InputFormatError(std::string(context) + " is missing field \"" + name + "\"");
    return *it;
}

std::string string_field(const json& object, const char* name, const char* context) {
    const json& v = field(object, name, context);
    if (!v.is_string())
        throw InputFormatError(std::string(context) + " field \"" + name + "\" must be a string");
    return v.get<std::string>();
}

}  // namespace

json parse_document(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // e.byte counts from 1; report the 0-based offset of the offending byte.
        const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
        throw InputFormatError("malformed JSON at byte " + std::to_string(offset) + ": " + e.what());
    }
}

json read_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputFormatError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

json to_json(const Rational& q) { return q.to_string(); }

Rational rational_from_json(const json& value) {
    if (value.is_number_integer()) return Rational(value.get<long>());
    if (!value.is_string())
        throw InputFormatError("rational must be a \"p/q\" string or an integer, got " + value.dump());
    try {
        return Rational::parse(value.get<std::string>());
    } catch (const ParseError& e) {
        throw InputFormatError(e.what());
    }
}

json to_json(const Boundary& boundary) {
    json out = json::array();
    for (const auto& e : boundary.entries())
        out.push_back({{"label", e.label}, {"coeff", to_json(e.coeff)}});
    return out;
}

Boundary boundary_from_json(const json& value) {
    if (!value.is_array()) throw InputFormatError("boundary must be a JSON array");
    std::vector<BoundaryEntry> entries;
    for (const auto& item : value)
        entries.push_back({string_field(item, "label", "boundary entry"),
                           rational_from_json(field(item, "coeff", "boundary entry"))});
    return Boundary(std::move(entries));
}

GraphDocument graph_from_json(const json& value) {
    const json& vs = field(value, "vertices", "graph");
    const json& es = field(value, "edges", "graph");
    if (!vs.is_array() || !es.is_array())
        throw InputFormatError("graph \"vertices\" and \"edges\" must be arrays");
    std::vector<dualgraph::Vertex> vertices;
    for (const auto& v : vs) {
        if (v.is_object() && v.contains("genus") &&
            !(v["genus"].is_number_integer() && v["genus"].get<long>() == 0))
            throw InputFormatError("only rational (genus 0) curves are supported");
        const json& w = field(v, "weight", "vertex");
        if (!w.is_number_integer()) throw InputFormatError("vertex weight must be an integer");
        vertices.push_back({string_field(v, "id", "vertex"), w.get<long>()});
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : es) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw InputFormatError("edge must be a pair of vertex ids");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    GraphDocument doc{dualgraph::DualGraph(std::move(vertices), std::move(edges)), std::nullopt};
    if (value.contains("center") && !value["center"].is_null()) {
        if (!value["center"].is_string()) throw InputFormatError("\"center\" must be a vertex id");
        doc.center = value["center"].get<std::string>();
        doc.graph.index_of(*doc.center);
    }
    return doc;
}

json to_json(const dualgraph::DualGraph& graph) {
    json vs = json::array(), es = json::array();
    for (const auto& v : graph.vertices()) vs.push_back({{"id", v.id}, {"weight", v.weight}});
    for (const auto& [a, b] : graph.edges())
        es.push_back({graph.vertices()[a].id, graph.vertices()[b].id});
    return {{"vertices", vs}, {"edges", es}};
}

lct::ThresholdProblem problem_from_json(const json& value) {
    const json& rows = field(value, "rows", "threshold table");
    if (!rows.is_array()) throw InputFormatError("\"rows\" must be an array");
    std::vector<lct::ThresholdRow> out;
    for (const auto& r : rows)
        out.push_back({string_field(r, "label", "row"), rational_from_json(field(r, "disD", "row")),
                       rational_from_json(field(r, "multDelta", "row")),
                       rational_from_json(field(r, "multF", "row"))});
    return lct::ThresholdProblem(std::move(out), string_field(value, "S", "threshold table"));
}

json to_json(const lct::ThresholdProblem& problem) {
    json rows = json::array();
    for (const auto& r : problem.rows())
        rows.push_back({{"label", r.label}, {"disD", to_json(r.dis)},
                        {"multDelta", to_json(r.mult_delta)}, {"multF", to_json(r.mult_f)}});
    return {{"rows", rows}, {"S", problem.distinguished()}};
}

json to_json(const lct::PiecewiseLinear& f) {
    json breaks = json::array(), pieces = json::array();
    for (const auto& b : f.breakpoints()) breaks.push_back(to_json(b));
    for (std::size_t i = 0; i < f.pieces().size(); ++i)
        pieces.push_back({{"from", to_json(f.breakpoints()[i])},
                          {"to", to_json(f.breakpoints()[i + 1])},
                          {"slope", to_json(f.pieces()[i].slope)},
                          {"intercept", to_json(f.pieces()[i].intercept)}});
    return {{"breakpoints", breaks}, {"pieces", pieces}};
}

ComplementRegistry registry_from_json(const json& value, ComplementRegistry base) {
    const json& entries = field(value, "entries", "registry");
    if (!entries.is_array()) throw InputFormatError("registry \"entries\" must be an array");
    for (const auto& e : entries) {
        const json& dim = field(e, "dim", "registry entry");
        const json& n = field(e, "N", "registry entry");
        if (!dim.is_number_integer() || !n.is_number_integer())
            throw InputFormatError("registry \"dim\" and \"N\" must be integers");
        std::optional<std::set<long>> indices;
        if (e.contains("set")) {
            if (!e["set"].is_array()) throw InputFormatError("registry \"set\" must be an array");
            indices.emplace();
            for (const auto& m : e["set"]) {
                if (!m.is_number_integer()) throw InputFormatError("registry set entries must be integers");
                indices->insert(m.get<long>());
            }
        }
        base = base.with_entry(dim.get<int>(), n.get<long>(), std::move(indices));
    }
    return base;
}

}  // namespace complements::io
