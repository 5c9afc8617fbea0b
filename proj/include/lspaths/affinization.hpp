#pragma once

#include "lspaths/ls_crystal.hpp"

namespace lspaths {

/// An element eta (x) z^n of the affinization B(lambda)_cl x a_0^{-1} Z.
struct AffElement {
  int eta = -1;  // vertex index in the generated B(lambda)_cl graph
  Rational n;    // exponent, in a_0^{-1} Z

  friend bool operator==(const AffElement& a, const AffElement& b) {
    return a.eta == b.eta && a.n == b.n;
  }
};

/// The affinization of B(lambda)_cl: the finite graph plus, per vertex, the
/// distinguished lift pi^0_eta in B_0(lambda) with its delta-offset n'.
struct AffContext {
  LsContext ls;
  std::vector<Path> pi0;       // pi^0_eta per vertex
  std::vector<Rational> nprime;  // pi(1) = lambda - alpha + n' delta for the word lift
};

/// Lifts eta through its recorded operator word: pi = X pi_lambda with
/// cl(pi) = eta, decomposes pi(1) = lambda - alpha + n' delta, and stores
/// pi^0_eta = pi - pi_{n' delta}.
inline AffContext make_aff_context(LsContext ls) {
  AffContext ctx{std::move(ls), {}, {}};
  const auto& d = ctx.ls.datum;
  Path seed = straight(d, ctx.ls.lambda);
  for (int v = 0; v < ctx.ls.bcl.graph.size(); ++v) {
    Path p = seed;
    for (const auto& step : ctx.ls.bcl.words[v]) {
      auto next = step.lowering ? root_f(d, p, step.j) : root_e(d, p, step.j);
      if (!next) throw std::logic_error("affinization: operator word vanished on the P-side");
      p = *next;
    }
    if (cl(d, p) != ctx.ls.bcl.elements[v])
      throw std::logic_error("affinization: lifted word missed its cl fiber");
    Rational np = endpoint(d, p).delta - ctx.ls.lambda.delta;
    ctx.nprime.push_back(np);
    ctx.pi0.push_back(sub(d, p, straight(d, delta_multiple(d, np))));
  }
  return ctx;
}

inline void require_exponent(const AffContext& ctx, const AffElement& x) {
  if (x.eta < 0 || x.eta >= ctx.ls.bcl.graph.size())
    throw std::invalid_argument("affinization: vertex index out of range");
  if (!(x.n * Rational(ctx.ls.datum.a0())).is_integer())
    throw std::invalid_argument("affinization: exponent not in a_0^{-1} Z");
}

/// e_j and f_j on the affinization: j in I0 fixes the exponent, j = 0 shifts
/// it by +-a_0^{-1}.
inline std::optional<AffElement> aff_e(const AffContext& ctx, const AffElement& x, int j) {
  require_exponent(ctx, x);
  int img = ctx.ls.bcl.graph.e_edge(x.eta, j);
  if (img < 0) return std::nullopt;
  return AffElement{img, j == 0 ? x.n + ctx.ls.datum.a0_inv() : x.n};
}
inline std::optional<AffElement> aff_f(const AffContext& ctx, const AffElement& x, int j) {
  require_exponent(ctx, x);
  int img = ctx.ls.bcl.graph.f_edge(x.eta, j);
  if (img < 0) return std::nullopt;
  return AffElement{img, j == 0 ? x.n - ctx.ls.datum.a0_inv() : x.n};
}

inline long long aff_epsilon(const AffContext& ctx, const AffElement& x, int j) {
  return ctx.ls.bcl.graph.vertices[x.eta].eps[j];
}
inline long long aff_phi(const AffContext& ctx, const AffElement& x, int j) {
  return ctx.ls.bcl.graph.vertices[x.eta].phi[j];
}

/// wt(eta (x) z^n) = aff(eta(1)) + n delta.
inline LevelZeroWeight aff_wt(const AffContext& ctx, const AffElement& x) {
  require_exponent(ctx, x);
  LevelZeroWeight w = ctx.ls.bcl.graph.vertices[x.eta].wt;
  w.delta = x.n;
  return w;
}

inline const Path& pi_eta_0(const AffContext& ctx, int eta) { return ctx.pi0.at(eta); }
inline const Rational& pi_eta_shift(const AffContext& ctx, int eta) {
  return ctx.nprime.at(eta);
}

/// Theta(eta (x) z^n) = pi^0_eta + pi_{n delta}.
inline Path theta_map(const AffContext& ctx, const AffElement& x) {
  require_exponent(ctx, x);
  return add(ctx.ls.datum, ctx.pi0[x.eta],
             straight(ctx.ls.datum, delta_multiple(ctx.ls.datum, x.n)));
}

/// Condition (C): n' - n in d_lambda Z.
inline bool condition_C(const AffContext& ctx, const AffElement& x) {
  require_exponent(ctx, x);
  if (ctx.ls.dlam == 0) return (ctx.nprime[x.eta] - x.n).is_zero();
  return ((ctx.nprime[x.eta] - x.n) / Rational(ctx.ls.dlam)).is_integer();
}

/// Membership in B_0(lambda), decided independently of condition (C): all
/// directions must lie in W lambda and the component signature must vanish.
inline bool in_B0(const LsContext& ctx, const Path& pi) {
  for (const auto& dir : pi.expr.dirs)
    if (!ctx.in_orbit(dir)) return false;
  try {
    auto sig = component_signature(ctx, pi);
    for (long long n : sig)
      if (n != 0) return false;
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

struct ThetaReport {
  long long elements_checked = 0;
  long long edges_checked = 0;
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

/// Machine check of the isomorphism theorem on the slab |n| <= nbound:
/// Theta is injective, weight-preserving, commutes with all operators,
/// preserves eps/phi, satisfies the pi^0 recursion on every edge, maps into
/// the union of components B_0(lambda + M delta), and hits B_0(lambda)
/// exactly on condition (C).
inline ThetaReport verify_theta(const AffContext& ctx, const Rational& nbound) {
  const auto& d = ctx.ls.datum;
  const auto& g = ctx.ls.bcl.graph;
  ThetaReport report;
  auto complain = [&report](std::string msg) {
    if (report.violations.size() < 50) report.violations.push_back(std::move(msg));
  };

  // pi^0 recursion over every edge of B(lambda)_cl.
  Path delta_step = straight(d, delta_multiple(d, d.a0_inv()));
  for (const auto& [vj, w] : g.f_edges) {
    auto [v, j] = vj;
    ++report.edges_checked;
    auto fpi = root_f(d, ctx.pi0[v], j);
    if (!fpi) {
      complain("pi^0 recursion: f_" + std::to_string(j) + " vanished at " + g.vertices[v].key);
      continue;
    }
    Path expect = j == 0 ? add(d, *fpi, delta_step) : *fpi;
    if (!(ctx.pi0[w] == expect))
      complain("pi^0 recursion fails on the f_" + std::to_string(j) + " edge at " +
               g.vertices[v].key);
    auto epi = root_e(d, ctx.pi0[w], j);
    if (!epi) {
      complain("pi^0 recursion: e_" + std::to_string(j) + " vanished at " + g.vertices[w].key);
      continue;
    }
    Path expect_e = j == 0 ? sub(d, *epi, delta_step) : *epi;
    if (!(ctx.pi0[v] == expect_e))
      complain("pi^0 recursion fails on the e_" + std::to_string(j) + " edge into " +
               g.vertices[v].key);
  }

  // cl(pi^0_eta) = eta, and the lift pi^0_eta + pi_{n' delta} lies in B_0(lambda).
  for (int v = 0; v < g.size(); ++v) {
    if (cl(d, ctx.pi0[v]) != ctx.ls.bcl.elements[v])
      complain("cl(pi^0) differs from eta at " + g.vertices[v].key);
    Path lift = add(d, ctx.pi0[v], straight(d, delta_multiple(d, ctx.nprime[v])));
    if (!in_B0(ctx.ls, lift))
      complain("the word lift of eta leaves B_0(lambda) at " + g.vertices[v].key);
  }

  std::vector<Rational> slab;
  for (Rational n = -nbound; n <= nbound; n += d.a0_inv())
    slab.push_back(n);

  std::set<std::string> images;
  for (int v = 0; v < g.size(); ++v) {
    for (const auto& n : slab) {
      AffElement x{v, n};
      ++report.elements_checked;
      Path img = theta_map(ctx, x);

      if (!images.insert(img.key()).second)
        complain("Theta not injective at " + g.vertices[v].key + " z^" + n.to_string());
      if (!(aff_wt(ctx, x) == endpoint(d, img)))
        complain("Theta does not preserve the weight at " + g.vertices[v].key + " z^" +
                 n.to_string());

      for (int j = 0; j <= d.l; ++j) {
        auto ax = aff_e(ctx, x, j);
        auto ai = root_e(d, img, j);
        if (ax.has_value() != ai.has_value())
          complain("e_" + std::to_string(j) + " definedness differs under Theta at " +
                   g.vertices[v].key + " z^" + n.to_string());
        else if (ax && !(theta_map(ctx, *ax) == *ai))
          complain("Theta fails to commute with e_" + std::to_string(j) + " at " +
                   g.vertices[v].key + " z^" + n.to_string());
        auto bx = aff_f(ctx, x, j);
        auto bi = root_f(d, img, j);
        if (bx.has_value() != bi.has_value())
          complain("f_" + std::to_string(j) + " definedness differs under Theta at " +
                   g.vertices[v].key + " z^" + n.to_string());
        else if (bx && !(theta_map(ctx, *bx) == *bi))
          complain("Theta fails to commute with f_" + std::to_string(j) + " at " +
                   g.vertices[v].key + " z^" + n.to_string());

        // eps/phi via the closed piecewise-linear forms on the path side
        PLFunction h = h_function(d, img.expr, j);
        Rational m = h.min();
        if (!(Rational(aff_epsilon(ctx, x, j)) == -m) ||
            !(Rational(aff_phi(ctx, x, j)) == h.values.back() - m))
          complain("eps/phi not preserved by Theta at " + g.vertices[v].key + " z^" +
                   n.to_string());
      }

      // image lies in B_0(lambda + M delta) with M = n - n'
      Rational M = x.n - ctx.nprime[v];
      Path normalized = sub(d, img, straight(d, delta_multiple(d, M)));
      if (!in_B0(ctx.ls, normalized))
        complain("Theta image leaves the union of B_0(lambda + M delta) at " +
                 g.vertices[v].key + " z^" + n.to_string());
      bool in_b0 = in_B0(ctx.ls, img);
      if (in_b0 != condition_C(ctx, x))
        complain("condition (C) disagrees with B_0(lambda) membership at " +
                 g.vertices[v].key + " z^" + n.to_string());
    }
  }

  // Components B_0(lambda + M delta) coincide exactly on the d_lambda grid.
  for (const auto& m1 : slab) {
    Rational diff = m1 - slab.front();
    bool same = in_B0(ctx.ls, straight(d, ctx.ls.lambda + delta_multiple(d, diff)));
    bool grid = ctx.ls.dlam != 0 && (diff / Rational(ctx.ls.dlam)).is_integer();
    if (same != grid)
      complain("component coincidence grid fails at M1 - M2 = " + diff.to_string());
  }
  return report;
}

}  // namespace lspaths
