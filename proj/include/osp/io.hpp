#pragma once

// JSON, DOT and TSV encodings. Needs nlohmann/json (json.hpp) on the include path.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "character.hpp"
#include "crystal.hpp"
#include "osptab.hpp"
#include "tableau.hpp"

namespace osp::io {

using json = nlohmann::ordered_json;

inline json letters_json(const Alphabet& A, const std::vector<Letter>& w)
{
    json j = json::array();
    for (Letter x : w)
        j.push_back(A.name(x));
    return j;
}

inline std::vector<Letter> letters_from_json(const Alphabet& A, const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("expected an array of letters");
    std::vector<Letter> w;
    for (auto& s : j)
        w.push_back(A.parse(s.get<std::string>()));
    return w;
}

inline json column_json(const Alphabet& A, const Column& c) { return json{{"col", letters_json(A, c.entries)}}; }

inline Column column_from_json(const Alphabet& A, const json& j)
{
    Column c(letters_from_json(A, j.at("col")));
    if (!is_column(A, c))
        throw std::invalid_argument("column is not semistandard");
    return c;
}

inline json tableau_json(const Alphabet& A, const SkewTableau& t)
{
    json rows = json::array();
    for (auto& r : t.rows)
        rows.push_back(letters_json(A, r));
    return json{{"shape", {{"outer", t.shape.outer}, {"inner", t.shape.inner}}}, {"rows", rows}};
}

inline SkewTableau tableau_from_json(const Alphabet& A, const json& j)
{
    SkewTableau t;
    t.shape.outer = j.at("shape").at("outer").get<Partition>();
    t.shape.inner = j.at("shape").value("inner", Partition{});
    for (auto& r : j.at("rows"))
        t.rows.push_back(letters_from_json(A, r));
    if (!is_semistandard(A, t))
        throw std::invalid_argument("tableau is not semistandard");
    return t;
}

inline json plan_json(const ShapePlan& p)
{
    return json{{"lambda", p.lambda}, {"ell", p.ell}, {"sign", p.sign == SpinSign::plus ? "+" : "-"},
                {"q", p.q},           {"r", p.r},     {"M", p.M},
                {"L", p.L},           {"heights", p.heights}};
}

inline json part_json(const Alphabet& A, const Part& p)
{
    return std::visit(
        [&](const auto& x) -> json {
            using X = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<X, SpinColumn>)
                return json{{"kind", "spin"}, {"col", letters_json(A, x.col.entries)}};
            else if constexpr (std::is_same_v<X, OspPair>)
                return json{{"kind", "pair"}, {"a", x.a()}, {"L", letters_json(A, x.L().entries)}, {"R", letters_json(A, x.R().entries)}};
            else
                return json{{"kind", "bar"}, {"L", letters_json(A, x.L().entries)}, {"R", letters_json(A, x.R().entries)}};
        },
        p);
}

inline Part part_from_json(const Alphabet& A, const json& j)
{
    auto kind = j.at("kind").get<std::string>();
    if (kind == "spin")
        return SpinColumn{Column(letters_from_json(A, j.at("col")))};
    if (kind != "pair" && kind != "bar")
        throw std::invalid_argument("unknown part kind '" + kind + "'");
    Column L(letters_from_json(A, j.at("L")));
    Column R(letters_from_json(A, j.at("R")));
    if (kind == "pair")
        return OspPair{TwoColumnTableau{L, R, j.at("a").get<int>()}, 0};
    return BarPair{TwoColumnTableau{L, R, 0}};
}

// Parts are listed T_L first, as the element is drawn.
inline json osp_json(const Alphabet& A, const OspTableau& T)
{
    json parts = json::array();
    for (auto it = T.parts.rbegin(); it != T.parts.rend(); ++it)
        parts.push_back(part_json(A, *it));
    return json{{"plan", plan_json(T.plan)}, {"parts", parts}};
}

inline OspTableau osp_from_json(const Alphabet& A, const json& j)
{
    ShapePlan plan;
    std::vector<Part> parts;
    try {
        const auto& pj = j.at("plan");
        plan = shape_plan(pj.at("lambda").get<Partition>(), pj.at("ell").get<int>(), A);
        for (auto& p : j.at("parts"))
            parts.push_back(part_from_json(A, p));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed element: ") + e.what());
    }
    std::reverse(parts.begin(), parts.end());
    return validate(A, plan, parts).value();
}

inline json weight_x_json(const Alphabet& A, const Weight& w)
{
    json x = json::object();
    for (int k = 0; k < static_cast<int>(w.mult.size()); ++k)
        if (w.mult[k] != 0)
            x[A.name(Letter{k})] = w.mult[k];
    return x;
}

inline json charpoly_json(const Alphabet& A, const CharPoly& p)
{
    json arr = json::array();
    for (auto& [w, c] : p.terms())
        arr.push_back(json{{"z", w.level}, {"x", weight_x_json(A, w)}, {"coef", c}});
    return arr;
}

inline CharPoly charpoly_from_json(const Alphabet& A, const json& j)
{
    CharPoly p;
    for (auto& t : j) {
        Weight w(static_cast<std::size_t>(A.size()));
        w.level = t.at("z").get<int>();
        for (auto& [name, v] : t.at("x").items())
            w.mult[static_cast<std::size_t>(A.parse(name).rank)] += v.get<int>();
        p.add(w, t.at("coef").get<long long>());
    }
    return p;
}

inline json kcoef_json(const std::map<Partition, long long>& K)
{
    json arr = json::array();
    for (auto& [mu, k] : K)
        arr.push_back(json{{"mu", mu}, {"K", k}});
    return arr;
}

inline json graph_json(const Alphabet& A, const CrystalGraph& g)
{
    json verts = json::array();
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        json parts = json::array();
        for (auto it = g.vertices[v].parts.rbegin(); it != g.vertices[v].parts.rend(); ++it)
            parts.push_back(part_json(A, *it));
        verts.push_back(json{{"id", v}, {"parts", parts}, {"boxes", g.vertices[v].total_boxes()}});
    }
    json edges = json::array();
    for (auto& e : g.edges)
        edges.push_back(json{{"src", e.src}, {"color", A.color_name(e.color)}, {"dst", e.dst}});
    json trunc = json::array();
    for (auto& t : g.truncated)
        trunc.push_back(json{{"src", t.src}, {"color", A.color_name(t.color)}});
    json out{{"plan", plan_json(g.plan)}, {"vertices", verts}, {"edges", edges}, {"sources", g.sources}, {"truncated", trunc}};
    if (g.max_boxes)
        out["max_boxes"] = *g.max_boxes;
    return out;
}

// What a graph file carries; enough to compare against explore().
struct GraphData {
    ShapePlan plan;
    std::vector<OspTableau> vertices;
    std::vector<CrystalEdge> edges;
    std::vector<std::size_t> sources;
};

inline GraphData graph_from_json(const Alphabet& A, const json& j)
{
    GraphData g;
    const auto& pj = j.at("plan");
    g.plan = shape_plan(pj.at("lambda").get<Partition>(), pj.at("ell").get<int>(), A);
    for (auto& v : j.at("vertices"))
        g.vertices.push_back(osp_from_json(A, json{{"plan", pj}, {"parts", v.at("parts")}}));
    for (auto& e : j.at("edges"))
        g.edges.push_back({e.at("src").get<std::size_t>(), A.parse_color(e.at("color").get<std::string>()), e.at("dst").get<std::size_t>()});
    g.sources = j.at("sources").get<std::vector<std::size_t>>();
    return g;
}

inline std::string dot(const Alphabet& A, const CrystalGraph& g)
{
    std::ostringstream o;
    o << "digraph crystal {\n  node [shape=box];\n";
    std::vector<bool> source(g.vertices.size(), false);
    for (auto s : g.sources)
        source[s] = true;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        o << "  v" << v << " [label=" << json(osp_text(A, g.vertices[v])).dump();
        if (source[v])
            o << ", shape=doublecircle";
        o << "];\n";
    }
    for (auto& e : g.edges)
        o << "  v" << e.src << " -> v" << e.dst << " [label=" << json(A.color_name(e.color)).dump() << "];\n";
    for (std::size_t t = 0; t < g.truncated.size(); ++t) {
        auto& e = g.truncated[t];
        o << "  t" << t << " [shape=point, label=\"\"];\n";
        o << "  v" << e.src << " -> t" << t << " [label=" << json(A.color_name(e.color) + " truncated").dump()
          << ", style=dashed];\n";
    }
    o << "}\n";
    return o.str();
}

inline std::string weight_text(const Alphabet& A, const Weight& w)
{
    std::string s = "z^" + std::to_string(w.level);
    for (int k = 0; k < static_cast<int>(w.mult.size()); ++k)
        if (w.mult[k])
            s += " " + A.name(Letter{k}) + "^" + std::to_string(w.mult[k]);
    return s;
}

} // namespace osp::io
