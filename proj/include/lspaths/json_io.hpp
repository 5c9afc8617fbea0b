#pragma once

#include <string>

#include "json.hpp"
#include "lspaths/affinization.hpp"

namespace lspaths {

using nlohmann::json;

/// Weights serialize as {"fin": ["p/q", ...], "delta": "p/q"} with exact
/// rational strings.
inline json to_json(const LevelZeroWeight& w) {
  json fin = json::array();
  for (const auto& c : w.fin) fin.push_back(c.to_string());
  return json{{"fin", fin}, {"delta", w.delta.to_string()}};
}

inline LevelZeroWeight weight_from_json(const json& j) {
  LevelZeroWeight w;
  for (const auto& c : j.at("fin")) w.fin.push_back(Rational::parse(c.get<std::string>()));
  w.delta = Rational::parse(j.at("delta").get<std::string>());
  return w;
}

inline json to_json(const PathExpr& e) {
  json dirs = json::array(), breaks = json::array();
  for (const auto& w : e.dirs) dirs.push_back(to_json(w));
  for (const auto& b : e.breaks) breaks.push_back(b.to_string());
  return json{{"dirs", dirs}, {"breaks", breaks}};
}
inline json to_json(const Path& p) { return to_json(p.expr); }
inline json to_json(const ClPath& p) { return to_json(p.expr); }

inline json to_json(const AffineCartanDatum& d) {
  json gram = json::array();
  for (const auto& row : d.gram_fin) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.to_string());
    gram.push_back(r);
  }
  json di = json::array();
  for (int i = 1; i <= d.l; ++i) di.push_back(d_i(d, i));
  json th = json::array();
  for (auto c : theta(d).coords) th.push_back(c);
  return json{{"type", d.type.label()},
              {"rank", d.l},
              {"cartan", d.cartan},
              {"marks", d.marks},
              {"comarks", d.comarks},
              {"gram_fin", gram},
              {"d_i", di},
              {"theta", th},
              {"positive_finite_roots", positive_finite_roots(d).size()}};
}

inline json to_json(const AffineCartanDatum& d, const PositiveRealRoot& xi) {
  return json{{"kind", xi.kind == RealRootKind::half ? "half" : "full"},
              {"beta", xi.beta.coords},
              {"n", xi.n},
              {"delta_degree", delta_degree(d, xi).to_string()}};
}

inline json to_json(const AffineCartanDatum& d, const ChainCertificate& cert) {
  json ws = json::array(), rs = json::array();
  for (const auto& w : cert.weights) ws.push_back(to_json(w));
  for (const auto& xi : cert.roots) rs.push_back(to_json(d, xi));
  return json{{"weights", ws}, {"roots", rs}, {"length", cert.length()}};
}

inline json to_json(const CrystalGraph& g) {
  json vertices = json::array();
  for (const auto& v : g.vertices)
    vertices.push_back(json{{"key", v.key},
                            {"wt", to_json(v.wt)},
                            {"eps", v.eps},
                            {"phi", v.phi},
                            {"frontier", v.frontier}});
  json edges = json::array();
  for (const auto& [vj, w] : g.f_edges)
    edges.push_back(json{{"from", g.vertices[vj.first].key},
                         {"to", g.vertices[w].key},
                         {"j", vj.second}});
  json out{{"num_colors", g.num_colors}, {"vertices", vertices}, {"edges", edges}};
  out["root"] = g.root >= 0 ? json(g.vertices[g.root].key) : json(nullptr);
  return out;
}

inline CrystalGraph graph_from_json(const json& j) {
  CrystalGraph g;
  g.num_colors = j.at("num_colors").get<int>();
  for (const auto& vj : j.at("vertices")) {
    CrystalGraph::Vertex v;
    v.key = vj.at("key").get<std::string>();
    v.wt = weight_from_json(vj.at("wt"));
    v.eps = vj.at("eps").get<std::vector<long long>>();
    v.phi = vj.at("phi").get<std::vector<long long>>();
    v.frontier = vj.at("frontier").get<bool>();
    g.index.emplace(v.key, g.size());
    g.vertices.push_back(std::move(v));
  }
  for (const auto& ej : j.at("edges")) {
    int from = g.vertex_by_key(ej.at("from").get<std::string>());
    int to = g.vertex_by_key(ej.at("to").get<std::string>());
    if (from < 0 || to < 0) throw std::invalid_argument("graph JSON references unknown vertex");
    g.f_edges[{from, ej.at("j").get<int>()}] = to;
  }
  if (!j.at("root").is_null()) g.root = g.vertex_by_key(j.at("root").get<std::string>());
  g.finalize_edges();
  return g;
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

/// Stable DOT rendering: vertices in key order, edges labeled f_j.
inline std::string export_dot(const CrystalGraph& g) {
  std::string out = "digraph crystal {\n  rankdir=TB;\n";
  for (int v = 0; v < g.size(); ++v) {
    out += "  v" + std::to_string(v) + " [label=\"" + dot_escape(g.vertices[v].key) + "\"";
    if (v == g.root) out += ", shape=doublecircle";
    if (g.vertices[v].frontier) out += ", style=dashed";
    out += "];\n";
  }
  for (const auto& [vj, w] : g.f_edges)
    out += "  v" + std::to_string(vj.first) + " -> v" + std::to_string(w) + " [label=\"f_" +
           std::to_string(vj.second) + "\"];\n";
  out += "}\n";
  return out;
}

enum class ExportFormat { dot, json_format };

inline ExportFormat parse_format(const std::string& s) {
  if (s == "dot") return ExportFormat::dot;
  if (s == "json") return ExportFormat::json_format;
  throw std::invalid_argument("unknown export format '" + s + "' (expected dot or json)");
}

inline std::string export_graph(const CrystalGraph& g, ExportFormat f) {
  if (f == ExportFormat::dot) return export_dot(g);
  return to_json(g).dump(2) + "\n";
}

inline json to_json(const CompsReport& r) {
  json sigs = json::array();
  for (const auto& c : r.components)
    sigs.push_back(json{{"sig", c.sig},
                        {"vertices", c.vertices},
                        {"extremal_count", c.extremal_count},
                        {"extremal_in_orbit", c.extremal_in_orbit},
                        {"weight_lambda_count", c.weight_lambda_count},
                        {"oracle_checked", c.oracle_checked}});
  return json{{"signatures", sigs},
              {"violations", r.violations},
              {"invalid_signatures_rejected", r.invalid_signatures_rejected},
              {"passed", r.passed()}};
}

inline json to_json(const SimpleReport& r) {
  return json{{"vertices", r.vertices},
              {"connected", r.connected},
              {"weight_cl_lambda_count", r.weight_cl_lambda_count},
              {"extremal_set_is_orbit", r.extremal_set_is_orbit},
              {"violations", r.violations},
              {"passed", r.passed()}};
}

inline json to_json(const ThetaReport& r) {
  return json{{"elements_checked", r.elements_checked},
              {"edges_checked", r.edges_checked},
              {"violations", r.violations},
              {"passed", r.passed()}};
}

}  // namespace lspaths
