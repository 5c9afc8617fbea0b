#pragma once

#include <atomic>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "lspaths/chain_order.hpp"
#include "lspaths/crystal_graph.hpp"

namespace lspaths {

/// Turn(lambda) = union over m_i >= 2 of { q/m_i : 1 <= q <= m_i - 1 }, sorted.
inline std::vector<Rational> turn_set(const DominantShape& shape) {
  std::set<Rational> turns;
  for (long long mi : shape.m)
    if (mi >= 2)
      for (long long q = 1; q < mi; ++q) turns.insert(Rational(q, mi));
  return std::vector<Rational>(turns.begin(), turns.end());
}

/// N in sum_{j in I0(lambda,p)} m_j d_j Z_{>=0}.
inline bool in_turn_monoid(const AffineCartanDatum& d, const DominantShape& shape, long long p,
                           long long N) {
  if (N < 0) return false;
  if (N == 0) return true;
  std::vector<long long> gens;
  for (int i : I0_lambda_p(shape, p))
    if (shape.m[i - 1] > 0) gens.push_back(shape.m[i - 1] * d_i(d, i));
  std::vector<char> reach(static_cast<std::size_t>(N) + 1, 0);
  reach[0] = 1;
  for (long long v = 1; v <= N; ++v)
    for (long long g : gens)
      if (g <= v && reach[v - g]) {
        reach[v] = 1;
        break;
      }
  return reach[N] != 0;
}

/// Shared context for one shape: lambda, Turn(lambda), d_lambda, and the
/// generated finite crystal B(lambda)_cl with per-vertex operator words.
struct LsContext {
  AffineCartanDatum datum;
  DominantShape shape;
  LevelZeroWeight lambda;
  std::vector<Rational> turns;
  long long dlam = 0;  // 0 iff shape is zero
  Generated<ClPathOps> bcl;
  std::set<int> extremal;               // extremal vertices of bcl, precomputed
  std::set<std::string> orbit_fin_keys; // W_bar-orbit of lambda, finite parts

  /// Membership in W lambda using the cached finite orbit.
  bool in_orbit(const LevelZeroWeight& nu) const {
    if (dlam == 0) return nu == lambda;
    if (!((nu.delta - lambda.delta) / Rational(dlam)).is_integer()) return false;
    LevelZeroWeight fin_only = nu;
    fin_only.delta = Rational(0);
    return orbit_fin_keys.count(fin_only.key()) > 0;
  }
};

inline std::set<int> extremal_cl_vertices(const LsContext& ctx);

inline LsContext make_ls_context(const AffineCartanDatum& d, const DominantShape& shape,
                                 std::size_t cap = 1000000) {
  LsContext ctx{d,  shape, from_shape(d, shape), turn_set(shape),
                shape.is_zero() ? 0 : d_lambda(d, shape), {}, {}, {}};
  ClPathOps ops{ctx.datum};
  ctx.bcl = generate_closure(ops, straight_cl(ctx.datum, ctx.lambda), cap);
  ctx.extremal = extremal_cl_vertices(ctx);
  for (const auto& mu : weyl_orbit_fin(ctx.datum, ctx.lambda)) {
    LevelZeroWeight fin_only = mu;
    fin_only.delta = Rational(0);
    ctx.orbit_fin_keys.insert(fin_only.key());
  }
  return ctx;
}

/// Outcome of an LS-path membership check, with the witnessing sigma-chains.
struct LsCheck {
  bool ok = false;
  std::string reason;
  std::vector<ChainCertificate> certs;  // one per interior breakpoint when ok
};

/// Def-style membership test: all directions lie in W lambda and every
/// interior breakpoint sigma_u carries a sigma_u-chain for (nu_u, nu_{u+1}).
inline LsCheck is_ls_path(const AffineCartanDatum& d, const LevelZeroWeight& lambda,
                          const Path& pi, ChainOracle& oracle) {
  LsCheck out;
  const auto& e = pi.expr;
  for (std::size_t u = 0; u < e.dirs.size(); ++u) {
    if (!in_W_orbit(d, e.dirs[u], lambda)) {
      out.reason = "direction " + std::to_string(u + 1) + " not in W lambda";
      return out;
    }
  }
  for (std::size_t u = 0; u + 1 < e.dirs.size(); ++u) {
    auto cert = oracle.sigma_chain(e.dirs[u], e.dirs[u + 1], e.breaks[u + 1]);
    if (!cert) {
      out.reason = "no sigma-chain at breakpoint " + e.breaks[u + 1].to_string();
      return out;
    }
    out.certs.push_back(std::move(*cert));
  }
  out.ok = true;
  return out;
}

/// The canonical extremal path (lambda - N_1 delta, ..., lambda - N_{s-1} delta,
/// lambda; tau_0, ..., tau_s) attached to a component signature.
inline Path canonical_extremal(const LsContext& ctx, const std::vector<long long>& sig) {
  const auto& turns = ctx.turns;
  if (sig.size() != turns.size())
    throw std::invalid_argument("signature length must equal |Turn(lambda)| = " +
                                std::to_string(turns.size()));
  for (std::size_t u = 0; u < sig.size(); ++u) {
    long long next = u + 1 < sig.size() ? sig[u + 1] : 0;
    long long p = turns[u].den().to_ll();
    if (sig[u] < 0 || !in_turn_monoid(ctx.datum, ctx.shape, p, sig[u] - next))
      throw std::invalid_argument(
          "signature violates the component condition at entry u = " + std::to_string(u + 1) +
          " (N_u - N_{u+1} = " + std::to_string(sig[u] - next) + " not in the p = " +
          std::to_string(p) + " monoid)");
  }
  std::vector<LevelZeroWeight> dirs;
  std::vector<Rational> breaks{Rational(0)};
  for (std::size_t u = 0; u < turns.size(); ++u) {
    dirs.push_back(ctx.lambda - delta_multiple(ctx.datum, Rational(sig[u])));
    breaks.push_back(turns[u]);
  }
  dirs.push_back(ctx.lambda);
  breaks.push_back(Rational(1));
  return make_path(ctx.datum, std::move(dirs), std::move(breaks));
}

/// A word for some w in W with w lambda = lambda + M delta, found by BFS over
/// the simple affine reflections.  The word is in s_w order (rightmost letter
/// acts first).
inline std::vector<int> find_orbit_shift_word(const AffineCartanDatum& d,
                                              const LevelZeroWeight& lambda, const Rational& M) {
  LevelZeroWeight target = lambda + delta_multiple(d, M);
  if (target == lambda) return {};
  long long slack = 4;
  for (int attempt = 0; attempt < 5; ++attempt, slack *= 2) {
    Rational window = abs(M) + Rational(slack);
    std::map<LevelZeroWeight, std::pair<LevelZeroWeight, int>> parent;
    std::vector<LevelZeroWeight> layer{lambda};
    std::set<LevelZeroWeight> seen{lambda};
    while (!layer.empty()) {
      std::vector<LevelZeroWeight> next_layer;
      for (const auto& v : layer) {
        for (int j = 0; j <= d.l; ++j) {
          LevelZeroWeight w = reflect_simple(d, v, j);
          if (abs(w.delta) > window) continue;
          if (!seen.insert(w).second) continue;
          parent.emplace(w, std::make_pair(v, j));
          if (w == target) {
            std::vector<int> word;
            LevelZeroWeight cur = w;
            while (!(cur == lambda)) {
              auto& [prev, jj] = parent.at(cur);
              word.push_back(jj);
              cur = prev;
            }
            return word;
          }
          next_layer.push_back(w);
        }
      }
      layer = std::move(next_layer);
    }
  }
  throw std::logic_error("no Weyl word found for the requested delta shift " + M.to_string());
}

/// The unique component signature of an LS path pi in B(lambda): normalize
/// with the recorded operator word to the cl(pi_lambda) fiber, shift the
/// final direction to lambda with S_w, and read N_u off the Turn breakpoints.
inline std::vector<long long> component_signature(const LsContext& ctx, const Path& pi) {
  const auto& d = ctx.datum;
  ClPath eta = cl(d, pi);
  int v = ctx.bcl.graph.vertex_by_key(eta.key());
  if (v < 0)
    throw std::invalid_argument("component_signature: cl(pi) is not a vertex of B(lambda)_cl");

  Path cur = pi;
  const OpWord& word = ctx.bcl.words[v];
  for (std::size_t i = word.size(); i-- > 0;) {
    auto next = word[i].lowering ? root_e(d, cur, word[i].j) : root_f(d, cur, word[i].j);
    if (!next)
      throw std::logic_error("component_signature: operator word vanished on the P-side");
    cur = *next;
  }
  if (cl(d, cur) != ctx.bcl.elements[ctx.bcl.graph.root])
    throw std::logic_error("component_signature: normalization missed cl(pi_lambda)");

  LevelZeroWeight last = cur.expr.dirs.back();
  if (last.fin != ctx.lambda.fin)
    throw std::logic_error("component_signature: final direction has a wrong finite part");
  Rational M = -(last.delta - ctx.lambda.delta);
  if (!M.is_zero()) {
    auto w_word = find_orbit_shift_word(d, ctx.lambda, M);
    Path shifted = s_w(d, cur, w_word);
    if (shifted != add(d, cur, straight(d, delta_multiple(d, M))))
      throw std::logic_error("component_signature: S_w shift disagrees with the delta-line sum");
    cur = shifted;
  }

  std::vector<long long> sig;
  std::vector<Rational> cuts{Rational(0)};
  cuts.insert(cuts.end(), ctx.turns.begin(), ctx.turns.end());
  cuts.push_back(Rational(1));
  for (const auto& b : cur.expr.breaks)
    if (std::find(cuts.begin(), cuts.end(), b) == cuts.end())
      throw std::logic_error("component_signature: breakpoint " + b.to_string() +
                             " survives outside Turn(lambda)");
  for (std::size_t u = 0; u + 1 < cuts.size(); ++u) {
    LevelZeroWeight dir = (Rational(1) / (cuts[u + 1] - cuts[u])) *
                          (evaluate(cur.expr, cuts[u + 1]) - evaluate(cur.expr, cuts[u]));
    if (dir.fin != ctx.lambda.fin)
      throw std::logic_error("component_signature: segment direction leaves lambda + Q delta");
    Rational N = ctx.lambda.delta - dir.delta;
    if (!N.is_integer() || N.sign() < 0)
      throw std::logic_error("component_signature: non-admissible delta offset " + N.to_string());
    if (u + 1 < cuts.size() - 1)
      sig.push_back(N.to_ll());
    else if (!N.is_zero())
      throw std::logic_error("component_signature: final segment is not lambda");
  }
  for (std::size_t u = 0; u < sig.size(); ++u) {
    long long next = u + 1 < sig.size() ? sig[u + 1] : 0;
    if (!in_turn_monoid(d, ctx.shape, ctx.turns[u].den().to_ll(), sig[u] - next))
      throw std::logic_error("component_signature: read-off signature violates the monoid law");
  }
  return sig;
}

/// S_j on a vertex of the (closed) finite graph, walking edges
/// <wt, h_j> times in the appropriate direction.
inline int sj_on_graph(const LsContext& ctx, int v, int j) {
  Rational n = pairing_h(ctx.datum, ctx.bcl.graph.vertices[v].wt, j);
  if (!n.is_integer()) throw std::logic_error("sj_on_graph: non-integral pairing");
  long long k = n.to_ll();
  int cur = v;
  for (long long i = 0; i < (k >= 0 ? k : -k); ++i) {
    cur = k >= 0 ? ctx.bcl.graph.f_edge(cur, j) : ctx.bcl.graph.e_edge(cur, j);
    if (cur < 0) throw std::logic_error("sj_on_graph: operator chain left the crystal");
  }
  return cur;
}

/// The S_w-orbit of a vertex inside B(lambda)_cl.
inline std::set<int> s_orbit_on_graph(const LsContext& ctx, int v) {
  std::set<int> orbit{v};
  std::vector<int> queue{v};
  while (!queue.empty()) {
    int cur = queue.back();
    queue.pop_back();
    for (int j = 0; j <= ctx.datum.l; ++j) {
      int img = sj_on_graph(ctx, cur, j);
      if (orbit.insert(img).second) queue.push_back(img);
    }
  }
  return orbit;
}

/// All extremal vertices of B(lambda)_cl: vertices whose whole S_w-orbit
/// never carries both an e_j- and an f_j-edge for the same j.
inline std::set<int> extremal_cl_vertices(const LsContext& ctx) {
  const auto& g = ctx.bcl.graph;
  std::set<int> extremal;
  std::vector<char> assigned(g.size(), 0);
  for (int v = 0; v < g.size(); ++v) {
    if (assigned[v]) continue;
    auto orbit = s_orbit_on_graph(ctx, v);
    bool ok = true;
    for (int u : orbit) {
      assigned[u] = 1;
      for (int j = 0; j <= ctx.datum.l; ++j)
        if (g.e_edge(u, j) >= 0 && g.f_edge(u, j) >= 0) ok = false;
    }
    if (ok)
      for (int u : orbit) extremal.insert(u);
  }
  return extremal;
}

/// The set of extremal classical projections, as path keys.
inline std::set<std::string> extremal_cl_set(const LsContext& ctx) {
  std::set<std::string> keys;
  for (int v : extremal_cl_vertices(ctx)) keys.insert(ctx.bcl.graph.vertices[v].key);
  return keys;
}

/// pi in B(lambda) is extremal iff cl(pi) is extremal in B(lambda)_cl.
inline bool is_extremal(const LsContext& ctx, const Path& pi) {
  int v = ctx.bcl.graph.vertex_by_key(cl(ctx.datum, pi).key());
  if (v < 0) throw std::invalid_argument("is_extremal: cl(pi) is not in B(lambda)_cl");
  return ctx.extremal.count(v) > 0;
}

/// All signatures with entries <= nmax satisfying the component condition.
inline std::vector<std::vector<long long>> enumerate_signatures(const LsContext& ctx,
                                                                long long nmax) {
  std::vector<std::vector<long long>> out;
  std::size_t s1 = ctx.turns.size();
  std::vector<long long> sig(s1, 0);
  // build from the right: N_s = 0, each step adds a monoid element
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == 0) {
      out.push_back(sig);
      return;
    }
    long long below = pos == s1 ? 0 : sig[pos];
    for (long long n = below; n <= nmax; ++n) {
      if (!in_turn_monoid(ctx.datum, ctx.shape, ctx.turns[pos - 1].den().to_ll(), n - below))
        continue;
      sig[pos - 1] = n;
      rec(pos - 1);
    }
  };
  if (s1 == 0)
    out.push_back({});
  else
    rec(s1);
  std::sort(out.begin(), out.end());
  return out;
}

/// Report from the component-parametrization verification.
struct CompsReport {
  struct Component {
    std::vector<long long> sig;
    long long vertices = 0;
    long long extremal_count = 0;
    long long extremal_in_orbit = 0;
    long long weight_lambda_count = 0;
    long long oracle_checked = 0;
  };
  std::vector<Component> components;
  std::vector<std::string> violations;
  long long invalid_signatures_rejected = 0;
  bool passed() const { return violations.empty(); }
};

namespace detail {

struct CompsUnit {
  CompsReport::Component row;
  std::set<std::string> keys;
  std::vector<std::string> violations;
};

/// Checks one component: depth-bounded generation from the canonical extremal
/// path, signature constancy, extremality containment, weight-lambda count,
/// and sigma-chain oracle re-verification of the generated vertices (all of
/// them below 200 vertices, a seeded 10% sample above).
inline CompsUnit check_component(const LsContext& ctx, const std::vector<long long>& sig,
                                 long long depth, long long orbit_word_bound,
                                 unsigned sample_seed) {
  const auto& d = ctx.datum;
  CompsUnit unit;
  unit.row.sig = sig;
  Path seed = canonical_extremal(ctx, sig);
  PathOps ops{d};
  auto gen = generate_depth_bounded(ops, seed, depth);
  unit.row.vertices = gen.graph.size();
  ChainOracle oracle(d);
  std::mt19937 sample_rng(sample_seed);
  bool check_all = gen.graph.size() < 200;

  std::set<std::string> orbit_keys{seed.key()};
  {
    std::vector<Path> layer{seed};
    for (long long len = 0; len < orbit_word_bound && !layer.empty(); ++len) {
      std::vector<Path> next;
      for (const auto& p : layer)
        for (int j = 0; j <= d.l; ++j) {
          Path img = s_j(d, p, j);
          if (orbit_keys.insert(img.key()).second) next.push_back(img);
        }
      layer = std::move(next);
    }
  }

  for (int v = 0; v < gen.graph.size(); ++v) {
    const Path& p = gen.elements[v];
    try {
      if (component_signature(ctx, p) != sig)
        unit.violations.push_back("signature drift inside component of sig=" +
                                  DominantShape{sig}.to_string() + " at " + p.key());
    } catch (const std::exception& ex) {
      unit.violations.push_back(std::string("signature computation failed: ") + ex.what());
    }
    if (check_all || sample_rng() % 10 == 0) {
      ++unit.row.oracle_checked;
      if (!is_ls_path(d, ctx.lambda, p, oracle).ok)
        unit.violations.push_back("generated vertex fails the sigma-chain oracle: " + p.key());
    }
    unit.keys.insert(p.key());
    if (is_extremal(ctx, p)) {
      ++unit.row.extremal_count;
      if (orbit_keys.count(p.key()))
        ++unit.row.extremal_in_orbit;
      else
        unit.violations.push_back("extremal vertex outside the bounded S_w-orbit: " + p.key());
    }
    if (endpoint(d, p) == ctx.lambda) ++unit.row.weight_lambda_count;
  }
  if (unit.row.weight_lambda_count > 1)
    unit.violations.push_back("component sig=" + DominantShape{unit.row.sig}.to_string() +
                              " holds " + std::to_string(unit.row.weight_lambda_count) +
                              " vertices of weight lambda");
  return unit;
}

}  // namespace detail

/// Generates every valid component (entries <= nmax) to the given depth and
/// checks: signatures are constant on components, distinct signatures give
/// disjoint vertex sets, extremal vertices lie in the bounded S_w-orbit of the
/// canonical representative, and each component holds at most one vertex of
/// weight lambda.  Units run across `threads` workers; the merge order is
/// fixed by the signature order, so the report is deterministic.
inline CompsReport verify_theorem_comps(const LsContext& ctx, long long depth, long long nmax,
                                        long long orbit_word_bound = -1, int threads = 1,
                                        unsigned sample_seed = 1) {
  CompsReport report;
  if (orbit_word_bound < 0) orbit_word_bound = depth + 4;

  // invalid signatures must be rejected
  std::set<std::vector<long long>> valid;
  for (auto& s : enumerate_signatures(ctx, nmax)) valid.insert(s);
  if (!ctx.turns.empty()) {
    std::vector<long long> probe(ctx.turns.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
      if (pos == probe.size()) {
        if (valid.count(probe)) return;
        try {
          canonical_extremal(ctx, probe);
          report.violations.push_back("invalid signature accepted by canonical_extremal");
        } catch (const std::invalid_argument&) {
          ++report.invalid_signatures_rejected;
        }
        return;
      }
      for (long long n = 0; n <= nmax; ++n) {
        probe[pos] = n;
        rec(pos + 1);
      }
    };
    rec(0);
  }

  std::vector<std::vector<long long>> sigs(valid.begin(), valid.end());
  std::vector<detail::CompsUnit> units(sigs.size());
  if (threads <= 1 || sigs.size() <= 1) {
    for (std::size_t i = 0; i < sigs.size(); ++i)
      units[i] = detail::check_component(ctx, sigs[i], depth, orbit_word_bound,
                                         sample_seed + static_cast<unsigned>(i));
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= sigs.size()) return;
        units[i] = detail::check_component(ctx, sigs[i], depth, orbit_word_bound,
                                           sample_seed + static_cast<unsigned>(i));
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::map<std::string, std::size_t> owner;
  for (std::size_t i = 0; i < units.size(); ++i) {
    for (const auto& key : units[i].keys) {
      auto [claim, fresh] = owner.emplace(key, i);
      if (!fresh && claim->second != i)
        report.violations.push_back("vertex " + key + " reached from two signatures");
    }
    for (auto& v : units[i].violations) report.violations.push_back(std::move(v));
    report.components.push_back(std::move(units[i].row));
  }
  return report;
}

/// Report for the simplicity/connectedness checks on B(lambda)_cl.
struct SimpleReport {
  long long vertices = 0;
  bool connected = false;
  long long weight_cl_lambda_count = 0;
  bool extremal_set_is_orbit = false;
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

inline SimpleReport verify_simple(const LsContext& ctx) {
  const auto& g = ctx.bcl.graph;
  SimpleReport report;
  report.vertices = g.size();

  std::set<int> reached{g.root};
  std::vector<int> queue{g.root};
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (int j = 0; j <= ctx.datum.l; ++j)
      for (int img : {g.f_edge(v, j), g.e_edge(v, j)})
        if (img >= 0 && reached.insert(img).second) queue.push_back(img);
  }
  report.connected = static_cast<int>(reached.size()) == g.size();
  if (!report.connected) report.violations.push_back("B(lambda)_cl is not connected");

  LevelZeroWeight cl_lambda = ctx.lambda;
  cl_lambda.delta = Rational(0);
  for (const auto& v : g.vertices)
    if (v.wt == cl_lambda) ++report.weight_cl_lambda_count;
  if (report.weight_cl_lambda_count != 1)
    report.violations.push_back("weight cl(lambda) multiplicity is " +
                                std::to_string(report.weight_cl_lambda_count) + ", expected 1");

  auto extremal = extremal_cl_vertices(ctx);
  auto orbit = s_orbit_on_graph(ctx, g.root);
  report.extremal_set_is_orbit = extremal == std::set<int>(orbit.begin(), orbit.end());
  if (!report.extremal_set_is_orbit)
    report.violations.push_back("extremal set differs from the S_w-orbit of cl(pi_lambda)");
  return report;
}

/// tensor_{i in I0} B(varpi_i)_cl^{(x) m_i}, folded left to right; reversed
/// folds the factors in descending i instead.
inline CrystalGraph fundamental_tensor(const AffineCartanDatum& d, const DominantShape& shape,
                                       bool reversed = false) {
  CrystalGraph acc = trivial_crystal(d);
  std::vector<int> order;
  for (int i = 1; i <= d.l; ++i)
    for (long long k = 0; k < shape.m[i - 1]; ++k) order.push_back(i);
  if (reversed) std::reverse(order.begin(), order.end());
  std::map<int, CrystalGraph> factors;
  for (int i : order) {
    if (!factors.count(i)) {
      DominantShape fund;
      fund.m.assign(d.l, 0);
      fund.m[i - 1] = 1;
      ClPathOps ops{d};
      factors.emplace(i, generate_closure(ops, straight_cl(d, from_shape(d, fund))).graph);
    }
    acc = tensor(acc, factors.at(i));
  }
  return acc;
}

}  // namespace lspaths
