#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lspaths/paths.hpp"

namespace lspaths {

/// One step of an operator word: {lowering, j} means f_j (else e_j).
struct OpStep {
  bool lowering;
  int j;
  friend bool operator==(const OpStep& a, const OpStep& b) {
    return a.lowering == b.lowering && a.j == b.j;
  }
};
using OpWord = std::vector<OpStep>;

/// Finite labeled crystal graph.  Vertices are sorted by canonical key;
/// f_edges[(v,j)] = w encodes f_j(v) = w, and e_j is its inverse relation.
struct CrystalGraph {
  struct Vertex {
    std::string key;
    LevelZeroWeight wt;
    std::vector<long long> eps, phi;  // indexed by color j = 0..num_colors-1
    bool frontier = false;            // true when outgoing edges were not explored
  };

  int num_colors = 0;
  int root = -1;
  std::vector<Vertex> vertices;
  std::map<std::pair<int, int>, int> f_edges;
  std::map<std::string, int> index;

  int size() const { return static_cast<int>(vertices.size()); }

  int vertex_by_key(const std::string& k) const {
    auto it = index.find(k);
    return it == index.end() ? -1 : it->second;
  }

  int f_edge(int v, int j) const {
    auto it = f_edges.find({v, j});
    return it == f_edges.end() ? -1 : it->second;
  }
  int e_edge(int v, int j) const {
    auto it = e_edges_.find({v, j});
    return it == e_edges_.end() ? -1 : it->second;
  }

  void finalize_edges() {
    e_edges_.clear();
    for (const auto& [from_j, to] : f_edges) {
      auto [res, fresh] = e_edges_.emplace(std::make_pair(to, from_j.second), from_j.first);
      if (!fresh && res->second != from_j.first)
        throw std::logic_error("crystal graph: f_j is not injective");
    }
  }

  /// Longest e_j (raising = true) or f_j chain starting at v, by edge walking.
  long long chain_length(int v, int j, bool raising) const {
    long long k = 0;
    int cur = v;
    for (;;) {
      int next = raising ? e_edge(cur, j) : f_edge(cur, j);
      if (next < 0) return k;
      cur = next;
      if (++k > size()) throw std::logic_error("crystal graph: operator chain cycles");
    }
  }

private:
  std::map<std::pair<int, int>, int> e_edges_;
};

/// Root operators on P-paths, packaged for graph generation.
struct PathOps {
  using Elt = Path;
  const AffineCartanDatum& d;
  int colors() const { return d.l + 1; }
  std::string key(const Elt& x) const { return x.key(); }
  std::optional<Elt> apply(const Elt& x, bool lowering, int j) const {
    return lowering ? root_f(d, x, j) : root_e(d, x, j);
  }
  LevelZeroWeight weight(const Elt& x) const { return endpoint(d, x); }
};

/// Root operators on P_cl-paths.
struct ClPathOps {
  using Elt = ClPath;
  const AffineCartanDatum& d;
  int colors() const { return d.l + 1; }
  std::string key(const Elt& x) const { return x.key(); }
  std::optional<Elt> apply(const Elt& x, bool lowering, int j) const {
    return lowering ? root_f(d, x, j) : root_e(d, x, j);
  }
  LevelZeroWeight weight(const Elt& x) const { return endpoint(d, x); }
};

/// A generated graph together with the elements behind its vertices and one
/// operator word per vertex leading from the seed to that vertex.
template <class Ops>
struct Generated {
  CrystalGraph graph;
  std::vector<typename Ops::Elt> elements;
  std::vector<OpWord> words;

  const typename Ops::Elt& element_by_key(const std::string& k) const {
    int v = graph.vertex_by_key(k);
    if (v < 0) throw std::invalid_argument("vertex key not in generated graph: " + k);
    return elements[v];
  }
};

namespace detail {

template <class Ops>
Generated<Ops> generate(const Ops& ops, const typename Ops::Elt& seed, std::size_t cap,
                        long long max_depth, bool* capped = nullptr) {
  using Elt = typename Ops::Elt;
  struct Node {
    Elt elt;
    OpWord word;
    long long depth;
    bool frontier = false;
  };
  std::map<std::string, Node> nodes;
  struct Edge {
    std::string from, to;
    int j;
  };
  std::vector<Edge> edges;

  std::string seed_key = ops.key(seed);
  nodes.emplace(seed_key, Node{seed, {}, 0});
  std::vector<std::string> layer{seed_key};
  long long depth = 0;
  while (!layer.empty()) {
    if (max_depth >= 0 && depth == max_depth) {
      for (const auto& k : layer) nodes.at(k).frontier = true;
      break;
    }
    std::vector<std::string> next_layer;
    for (const auto& k : layer) {
      const Elt cur = nodes.at(k).elt;  // copy: map may rehash on insert
      const OpWord cur_word = nodes.at(k).word;
      for (int j = 0; j < ops.colors(); ++j) {
        for (bool lowering : {false, true}) {
          auto img = ops.apply(cur, lowering, j);
          if (!img) continue;
          std::string ik = ops.key(*img);
          if (lowering)
            edges.push_back({k, ik, j});
          else
            edges.push_back({ik, k, j});
          if (!nodes.count(ik)) {
            if (nodes.size() >= cap) {
              if (!capped)
                throw std::runtime_error(
                    "crystal generation exceeded the vertex cap (" + std::to_string(cap) +
                    "); the P-crystal B(lambda) is infinite, use depth-bounded generation");
              *capped = true;
              nodes.at(k).frontier = true;  // its image was dropped
              continue;
            }
            OpWord w = cur_word;
            w.push_back({lowering, j});
            nodes.emplace(ik, Node{*img, std::move(w), depth + 1});
            next_layer.push_back(ik);
          }
        }
      }
    }
    layer = std::move(next_layer);
    ++depth;
  }

  Generated<Ops> out;
  out.graph.num_colors = ops.colors();
  for (auto& [k, node] : nodes) {  // std::map iterates keys in sorted order
    out.graph.index.emplace(k, out.graph.size());
    CrystalGraph::Vertex v;
    v.key = k;
    v.wt = ops.weight(node.elt);
    v.frontier = node.frontier;
    for (int j = 0; j < ops.colors(); ++j) {
      long long e = 0, f = 0;
      {
        auto x = node.elt;
        while (auto y = ops.apply(x, false, j)) {
          x = *y;
          ++e;
        }
      }
      {
        auto x = node.elt;
        while (auto y = ops.apply(x, true, j)) {
          x = *y;
          ++f;
        }
      }
      v.eps.push_back(e);
      v.phi.push_back(f);
    }
    out.graph.vertices.push_back(std::move(v));
    out.elements.push_back(node.elt);
    out.words.push_back(node.word);
  }
  out.graph.root = out.graph.vertex_by_key(seed_key);
  for (const auto& e : edges) {
    int from = out.graph.vertex_by_key(e.from);
    int to = out.graph.vertex_by_key(e.to);
    if (from < 0 || to < 0) continue;  // edge into an unexplored frontier image
    auto [it, fresh] = out.graph.f_edges.emplace(std::make_pair(from, e.j), to);
    if (!fresh && it->second != to) throw std::logic_error("inconsistent f_j edge");
  }
  out.graph.finalize_edges();
  return out;
}

}  // namespace detail

/// BFS closure of the seed under all e_j, f_j.  Throws when the closure
/// exceeds cap vertices (the expected outcome for infinite P-crystals).
template <class Ops>
Generated<Ops> generate_closure(const Ops& ops, const typename Ops::Elt& seed,
                                std::size_t cap = 1000000) {
  return detail::generate(ops, seed, cap, -1);
}

/// All vertices within `depth` operator applications of the seed; vertices on
/// the last layer keep frontier = true and their outgoing edges unexplored.
template <class Ops>
Generated<Ops> generate_depth_bounded(const Ops& ops, const typename Ops::Elt& seed,
                                      long long depth, std::size_t cap = 1000000) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  return detail::generate(ops, seed, cap, depth);
}

/// Closure that truncates instead of throwing when the cap is hit; vertices
/// with dropped images are flagged frontier and `capped` reports truncation.
template <class Ops>
Generated<Ops> generate_closure_partial(const Ops& ops, const typename Ops::Elt& seed,
                                        std::size_t cap, bool& capped) {
  capped = false;
  return detail::generate(ops, seed, cap, -1, &capped);
}

template <class Ops>
Generated<Ops> generate_depth_bounded_partial(const Ops& ops, const typename Ops::Elt& seed,
                                              long long depth, std::size_t cap, bool& capped) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  capped = false;
  return detail::generate(ops, seed, cap, depth, &capped);
}

/// The one-vertex weight-zero crystal, the unit for tensor products.
inline CrystalGraph trivial_crystal(const AffineCartanDatum& d) {
  CrystalGraph g;
  g.num_colors = d.l + 1;
  CrystalGraph::Vertex v;
  v.key = "T1";
  v.wt = zero_weight(d);
  v.eps.assign(d.l + 1, 0);
  v.phi.assign(d.l + 1, 0);
  g.index.emplace(v.key, 0);
  g.vertices.push_back(std::move(v));
  g.root = 0;
  g.finalize_edges();
  return g;
}

/// Tensor product of two finite P_cl-crystal graphs, with the Kashiwara rule
///   f_j(b1 (x) b2) = f_j b1 (x) b2   if phi_j(b1) >  eps_j(b2),
///                    b1 (x) f_j b2   otherwise,
/// weights additive, decorations recomputed from the edges.
inline CrystalGraph tensor(const CrystalGraph& g1, const CrystalGraph& g2) {
  if (g1.num_colors != g2.num_colors)
    throw std::invalid_argument("tensor: mismatched color sets");
  for (const auto& v : g1.vertices)
    if (v.frontier) throw std::invalid_argument("tensor: left factor is not a closed crystal");
  for (const auto& v : g2.vertices)
    if (v.frontier) throw std::invalid_argument("tensor: right factor is not a closed crystal");

  CrystalGraph g;
  g.num_colors = g1.num_colors;
  auto pair_key = [&](int a, int b) {
    return "T(" + g1.vertices[a].key + ")(" + g2.vertices[b].key + ")";
  };
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < g1.size(); ++a)
    for (int b = 0; b < g2.size(); ++b) pairs.emplace_back(a, b);
  std::sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
    return pair_key(x.first, x.second) < pair_key(y.first, y.second);
  });
  std::map<std::pair<int, int>, int> id;
  for (const auto& [a, b] : pairs) {
    id[{a, b}] = g.size();
    CrystalGraph::Vertex v;
    v.key = pair_key(a, b);
    v.wt = g1.vertices[a].wt + g2.vertices[b].wt;
    g.index.emplace(v.key, g.size());
    g.vertices.push_back(std::move(v));
  }
  for (const auto& [a, b] : pairs) {
    for (int j = 0; j < g.num_colors; ++j) {
      int target = -1;
      if (g1.vertices[a].phi[j] > g2.vertices[b].eps[j]) {
        int fa = g1.f_edge(a, j);
        if (fa >= 0) target = id.at({fa, b});
      } else {
        int fb = g2.f_edge(b, j);
        if (fb >= 0) target = id.at({a, fb});
      }
      if (target >= 0) g.f_edges[{id.at({a, b}), j}] = target;
    }
  }
  g.finalize_edges();
  for (int v = 0; v < g.size(); ++v)
    for (int j = 0; j < g.num_colors; ++j) {
      g.vertices[v].eps.push_back(g.chain_length(v, j, true));
      g.vertices[v].phi.push_back(g.chain_length(v, j, false));
    }
  if (g1.root >= 0 && g2.root >= 0) g.root = id.at({g1.root, g2.root});
  return g;
}

/// The unique label-and-decoration-preserving bijection extending r1 -> r2,
/// if one exists; both graphs must be connected from their roots.
inline std::optional<std::vector<int>> rooted_isomorphic(const CrystalGraph& g1, int r1,
                                                         const CrystalGraph& g2, int r2) {
  if (g1.size() != g2.size() || g1.num_colors != g2.num_colors) return std::nullopt;
  if (r1 < 0 || r1 >= g1.size() || r2 < 0 || r2 >= g2.size()) return std::nullopt;
  std::vector<int> map1(g1.size(), -1), map2(g2.size(), -1);
  std::vector<int> queue{r1};
  map1[r1] = r2;
  map2[r2] = r1;
  std::size_t head = 0;
  int matched = 1;
  while (head < queue.size()) {
    int a = queue[head++];
    int b = map1[a];
    const auto &va = g1.vertices[a], &vb = g2.vertices[b];
    if (!(va.wt == vb.wt) || va.eps != vb.eps || va.phi != vb.phi) return std::nullopt;
    for (int j = 0; j < g1.num_colors; ++j) {
      for (bool raising : {false, true}) {
        int ta = raising ? g1.e_edge(a, j) : g1.f_edge(a, j);
        int tb = raising ? g2.e_edge(b, j) : g2.f_edge(b, j);
        if ((ta < 0) != (tb < 0)) return std::nullopt;
        if (ta < 0) continue;
        if (map1[ta] < 0 && map2[tb] < 0) {
          map1[ta] = tb;
          map2[tb] = ta;
          ++matched;
          queue.push_back(ta);
        } else if (map1[ta] != tb) {
          return std::nullopt;
        }
      }
    }
  }
  if (matched != g1.size()) return std::nullopt;  // not connected from the roots
  return map1;
}

}  // namespace lspaths
