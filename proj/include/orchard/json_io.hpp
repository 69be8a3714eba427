#pragma once

#include "orchard/bounds.hpp"
#include "orchard/drawing.hpp"
#include "orchard/graph.hpp"
#include "orchard/search.hpp"

#include "json.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace orchard {

using nlohmann::json;

/// Arbitrary-precision integers ride as JSON integers while they fit in
/// 64 bits and as decimal strings beyond that, so round trips are
/// bit-exact at any size. Readers accept either form.
inline json integer_to_json(const Integer& v) {
    static const Integer lo(std::numeric_limits<std::int64_t>::min());
    static const Integer hi(std::numeric_limits<std::int64_t>::max());
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

inline Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer or integer string");
}

inline json point_to_json(const Point& p) {
    return json::array({json::array({integer_to_json(rat_num(p.x)), integer_to_json(rat_den(p.x))}),
                        json::array({integer_to_json(rat_num(p.y)), integer_to_json(rat_den(p.y))})});
}

inline Point point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        throw std::invalid_argument("point must be [[xnum,xden],[ynum,yden]]");
    const Integer xd = integer_from_json(j[0][1]), yd = integer_from_json(j[1][1]);
    if (xd.is_zero() || yd.is_zero()) throw std::invalid_argument("zero denominator");
    return Point{Rational(integer_from_json(j[0][0]), xd),
                 Rational(integer_from_json(j[1][0]), yd)};
}

inline json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges) edges.push_back(json::array({e.first, e.second}));
    json out{{"vertex_count", g.vertex_count}, {"edges", edges}};
    if (!g.tagged_cycles.empty()) {
        json cycles = json::array();
        for (const Cycle& c : g.tagged_cycles) cycles.push_back(c);
        out["cycles"] = cycles;
    }
    return out;
}

inline Graph graph_from_json(const json& j) {
    Graph g;
    g.vertex_count = j.at("vertex_count").get<int>();
    if (g.vertex_count < 0) throw std::invalid_argument("negative vertex count");
    for (const json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("edge must be a pair of vertex indices");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    if (j.contains("cycles"))
        for (const json& c : j.at("cycles"))
            g.tagged_cycles.push_back(c.get<Cycle>());
    g.validate();
    return g;
}

inline json drawing_to_json(const Drawing& d) {
    json points = json::array();
    for (const Point& p : d.placement) points.push_back(point_to_json(p));
    return json{{"graph", graph_to_json(d.graph)}, {"points", points}};
}

inline Drawing drawing_from_json(const json& j) {
    Graph g = graph_from_json(j.at("graph"));
    std::vector<Point> pts;
    for (const json& p : j.at("points")) pts.push_back(point_from_json(p));
    return Drawing::make(std::move(g), std::move(pts));
}

inline json family_spec_to_json(const FamilySpec& s) {
    return json{{"family", family_name(s.family)}, {"n", s.n}, {"x", s.x}};
}

inline FamilySpec family_spec_from_json(const json& j) {
    FamilySpec s;
    s.family = family_from_name(j.at("family").get<std::string>());
    s.n = j.value("n", 0);
    s.x = j.value("x", 1);
    s.validate();
    return s;
}

inline json bound_report_to_json(const BoundReport& r) {
    json out{{"family", family_spec_to_json(r.family)},
             {"lower", r.lower},
             {"upper", r.upper},
             {"lower_method", r.lower_method},
             {"upper_method", r.upper_method}};
    if (r.exact) out["exact"] = *r.exact;
    return out;
}

inline std::string bound_report_table(const BoundReport& r) {
    std::ostringstream os;
    os << "family : " << r.family.describe() << "\n";
    if (r.exact) {
        os << "exact  : " << *r.exact << "   [" << r.lower_method << "]\n";
    } else {
        os << "exact  : unknown\n";
        os << "lower  : " << r.lower << "   [" << r.lower_method << "]\n";
        os << "upper  : " << r.upper << "   [" << r.upper_method << "]\n";
    }
    return os.str();
}

inline json search_result_to_json(const SearchResult& r) {
    json out{{"best_count", r.best_count},
             {"evaluations", r.evaluations},
             {"mode", search_mode_name(r.mode)},
             {"seed", r.seed}};
    if (r.best_order) out["order"] = r.best_order->order;
    if (r.best_drawing) out["drawing"] = drawing_to_json(*r.best_drawing);
    if (!r.warning.empty()) out["warning"] = r.warning;
    return out;
}

inline json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

inline Drawing load_drawing(const std::string& path) {
    return drawing_from_json(parse_json_file(path));
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << content;
}

} // namespace orchard
