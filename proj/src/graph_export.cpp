#include "ringtk/graph_export.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ringtk {

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string export_dot(const SimpleGraph& g) {
    std::ostringstream os;
    os << "graph \"" << dot_escape(g.name()) << "\" {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        os << "  v" << v << " [label=\"" << dot_escape(g.label(v)) << "\"];\n";
    for (const auto& [i, j] : g.edges()) os << "  v" << i << " -- v" << j << ";\n";
    os << "}\n";
    return os.str();
}

std::string export_json(const SimpleGraph& g) {
    nlohmann::ordered_json j;
    j["name"] = g.name();
    j["vertices"] = nlohmann::ordered_json::array();
    for (int v = 0; v < g.vertex_count(); ++v)
        j["vertices"].push_back({{"id", v}, {"label", g.label(v)}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : g.edges()) j["edges"].push_back({a, b});
    return j.dump(2) + "\n";
}

SimpleGraph import_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("import_json: ") + e.what());
    }
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw std::invalid_argument("import_json: missing vertices array");
    const int n = int(j["vertices"].size());
    SimpleGraph g(n, j.value("name", std::string{}));
    for (int v = 0; v < n; ++v) {
        const auto& jv = j["vertices"][v];
        const int id = jv.at("id").get<int>();
        if (id != v)
            throw std::invalid_argument("import_json: vertex ids must be 0..n-1 in order");
        g.set_label(v, jv.at("label").get<std::string>());
    }
    if (j.contains("edges")) {
        for (const auto& je : j["edges"]) {
            const int a = je.at(0).get<int>();
            const int b = je.at(1).get<int>();
            if (a < 0 || a >= n || b < 0 || b >= n || a == b)
                throw std::invalid_argument("import_json: bad edge");
            g.add_edge(a, b);
        }
    }
    return g;
}

} // namespace ringtk
