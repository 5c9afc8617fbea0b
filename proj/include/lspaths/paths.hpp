#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lspaths/weights.hpp"

namespace lspaths {

/// Canonical expression (nu_1,...,nu_s; sigma_0,...,sigma_s) of a piecewise
/// linear path starting at 0: adjacent directions are distinct, breakpoints
/// strictly increase from 0 to 1.
struct PathExpr {
  std::vector<LevelZeroWeight> dirs;
  std::vector<Rational> breaks;

  friend bool operator==(const PathExpr& a, const PathExpr& b) {
    return a.dirs == b.dirs && a.breaks == b.breaks;
  }

  std::string key() const {
    std::string s = "[";
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      if (i) s += "|";
      s += dirs[i].key();
    }
    s += ";";
    for (std::size_t i = 0; i < breaks.size(); ++i) {
      if (i) s += ",";
      s += breaks[i].to_string();
    }
    return s + "]";
  }
};

/// A path with weight in P.
struct Path {
  PathExpr expr;
  friend bool operator==(const Path& a, const Path& b) { return a.expr == b.expr; }
  friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }
  std::string key() const { return "P" + expr.key(); }
};

/// A path with weight in P_cl: the delta-coefficients of all directions are 0.
struct ClPath {
  PathExpr expr;
  friend bool operator==(const ClPath& a, const ClPath& b) { return a.expr == b.expr; }
  friend bool operator!=(const ClPath& a, const ClPath& b) { return !(a == b); }
  std::string key() const { return "C" + expr.key(); }
};

namespace detail {

inline PathExpr canonical_expr(std::vector<LevelZeroWeight> dirs, std::vector<Rational> breaks) {
  if (dirs.empty() || breaks.size() != dirs.size() + 1)
    throw std::invalid_argument("path expression: size mismatch");
  if (!(breaks.front() == Rational(0)) || !(breaks.back() == Rational(1)))
    throw std::invalid_argument("path expression: breakpoints must run from 0 to 1");
  for (std::size_t u = 1; u < breaks.size(); ++u)
    if (!(breaks[u - 1] < breaks[u]))
      throw std::invalid_argument("path expression: breakpoints not strictly increasing");
  PathExpr e;
  e.breaks.push_back(breaks[0]);
  for (std::size_t u = 0; u < dirs.size(); ++u) {
    if (!e.dirs.empty() && e.dirs.back() == dirs[u]) {
      e.breaks.back() = breaks[u + 1];  // omit the repeated direction
    } else {
      e.dirs.push_back(dirs[u]);
      e.breaks.push_back(breaks[u + 1]);
    }
  }
  return e;
}

inline LevelZeroWeight expr_endpoint(const AffineCartanDatum& d, const PathExpr& e) {
  LevelZeroWeight w = zero_weight(d);
  for (std::size_t u = 0; u < e.dirs.size(); ++u)
    w = w + (e.breaks[u + 1] - e.breaks[u]) * e.dirs[u];
  return w;
}

inline void insert_break(PathExpr& e, const Rational& t) {
  for (std::size_t u = 0; u + 1 < e.breaks.size(); ++u) {
    if (e.breaks[u] == t || e.breaks[u + 1] == t) return;
    if (e.breaks[u] < t && t < e.breaks[u + 1]) {
      e.breaks.insert(e.breaks.begin() + u + 1, t);
      e.dirs.insert(e.dirs.begin() + u, e.dirs[u]);
      return;
    }
  }
}

}  // namespace detail

inline Path make_path(const AffineCartanDatum& d, std::vector<LevelZeroWeight> dirs,
                      std::vector<Rational> breaks) {
  Path p{detail::canonical_expr(std::move(dirs), std::move(breaks))};
  if (!is_integral(d, detail::expr_endpoint(d, p.expr)))
    throw std::invalid_argument("path endpoint is not an integral weight");
  return p;
}

inline ClPath make_cl_path(const AffineCartanDatum& d, std::vector<LevelZeroWeight> dirs,
                           std::vector<Rational> breaks) {
  for (auto& w : dirs) w.delta = Rational(0);
  ClPath p{detail::canonical_expr(std::move(dirs), std::move(breaks))};
  LevelZeroWeight end = detail::expr_endpoint(d, p.expr);
  for (int j = 1; j <= d.l; ++j)
    if (!pairing_h(d, end, j).is_integer())
      throw std::invalid_argument("cl path endpoint is not in P_cl");
  return p;
}

/// The straight line pi_nu(t) = t nu.
inline Path straight(const AffineCartanDatum& d, const LevelZeroWeight& nu) {
  return make_path(d, {nu}, {Rational(0), Rational(1)});
}
inline ClPath straight_cl(const AffineCartanDatum& d, LevelZeroWeight nu) {
  nu.delta = Rational(0);
  return make_cl_path(d, {nu}, {Rational(0), Rational(1)});
}

inline Path canonicalize(const AffineCartanDatum& d, std::vector<LevelZeroWeight> dirs,
                         std::vector<Rational> breaks) {
  return make_path(d, std::move(dirs), std::move(breaks));
}

inline LevelZeroWeight evaluate(const PathExpr& e, const Rational& t) {
  if (t < Rational(0) || t > Rational(1))
    throw std::invalid_argument("evaluate: t outside [0,1]");
  LevelZeroWeight w{std::vector<Rational>(e.dirs[0].fin.size()), Rational(0)};
  for (std::size_t u = 0; u < e.dirs.size(); ++u) {
    if (t <= e.breaks[u + 1]) {
      w = w + (t - e.breaks[u]) * e.dirs[u];
      return w;
    }
    w = w + (e.breaks[u + 1] - e.breaks[u]) * e.dirs[u];
  }
  return w;
}

inline LevelZeroWeight endpoint(const AffineCartanDatum& d, const Path& p) {
  return detail::expr_endpoint(d, p.expr);
}
inline LevelZeroWeight endpoint(const AffineCartanDatum& d, const ClPath& p) {
  return detail::expr_endpoint(d, p.expr);
}

namespace detail {

inline PathExpr pointwise(const AffineCartanDatum& d, const PathExpr& a, const PathExpr& b,
                          bool subtract) {
  std::vector<Rational> cuts;
  std::merge(a.breaks.begin(), a.breaks.end(), b.breaks.begin(), b.breaks.end(),
             std::back_inserter(cuts));
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<LevelZeroWeight> dirs;
  std::size_t ua = 0, ub = 0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    while (a.breaks[ua + 1] <= cuts[k]) ++ua;
    while (b.breaks[ub + 1] <= cuts[k]) ++ub;
    dirs.push_back(subtract ? a.dirs[ua] - b.dirs[ub] : a.dirs[ua] + b.dirs[ub]);
  }
  (void)d;
  return canonical_expr(std::move(dirs), std::move(cuts));
}

}  // namespace detail

inline Path add(const AffineCartanDatum& d, const Path& a, const Path& b) {
  return Path{detail::pointwise(d, a.expr, b.expr, false)};
}
inline Path sub(const AffineCartanDatum& d, const Path& a, const Path& b) {
  return Path{detail::pointwise(d, a.expr, b.expr, true)};
}
inline ClPath add(const AffineCartanDatum& d, const ClPath& a, const ClPath& b) {
  return ClPath{detail::pointwise(d, a.expr, b.expr, false)};
}

/// Piecewise-linear H(t) = <pi(t), h_j>, as breakpoint/value lists.
struct PLFunction {
  std::vector<Rational> breaks;
  std::vector<Rational> values;

  Rational min() const {
    Rational m = values[0];
    for (const auto& v : values)
      if (v < m) m = v;
    return m;
  }
};

inline PLFunction h_function(const AffineCartanDatum& d, const PathExpr& e, int j) {
  PLFunction h;
  h.breaks = e.breaks;
  h.values.resize(e.breaks.size());
  h.values[0] = Rational(0);
  for (std::size_t u = 0; u < e.dirs.size(); ++u)
    h.values[u + 1] =
        h.values[u] + (e.breaks[u + 1] - e.breaks[u]) * pairing_h(d, e.dirs[u], j);
  return h;
}

namespace detail {

/// Core root operator on expressions.  lowering=true gives f_j, false e_j.
/// classical selects the P_cl realization of alpha_0.
inline std::optional<PathExpr> apply_root_op(const AffineCartanDatum& d, const PathExpr& x, int j,
                                             bool lowering, bool classical) {
  PLFunction h = h_function(d, x, j);
  Rational m = h.min();
  const Rational one(1);
  if (lowering) {
    if (h.values.back() - m < one) return std::nullopt;  // phi_j = 0
  } else {
    if (Rational(-1) < m) return std::nullopt;  // eps_j = 0
  }
  Rational level = m + one;
  Rational t0, t1;
  if (lowering) {
    std::size_t i0 = 0;
    for (std::size_t u = 0; u < h.values.size(); ++u)
      if (h.values[u] == m) i0 = u;
    t0 = h.breaks[i0];
    bool found = false;
    for (std::size_t u = i0; u + 1 < h.values.size() && !found; ++u) {
      const Rational &v0 = h.values[u], &v1 = h.values[u + 1];
      if (v0 == level) {
        t1 = h.breaks[u];
        found = true;
      } else if ((v0 < level && level <= v1) || (v1 <= level && level < v0)) {
        t1 = h.breaks[u] + (level - v0) * (h.breaks[u + 1] - h.breaks[u]) / (v1 - v0);
        found = true;
      }
    }
    if (!found) {
      t1 = h.breaks.back();
      if (!(h.values.back() == level)) throw std::logic_error("root_f: level m+1 not attained");
    }
  } else {
    std::size_t i1 = 0;
    for (std::size_t u = h.values.size(); u-- > 0;)
      if (h.values[u] == m) i1 = u;
    t1 = h.breaks[i1];
    bool found = false;
    for (std::size_t u = i1; u-- > 0 && !found;) {
      const Rational &v0 = h.values[u], &v1 = h.values[u + 1];
      if (v1 == level) {
        t0 = h.breaks[u + 1];
        found = true;
      } else if ((v1 < level && level <= v0) || (v0 <= level && level < v1)) {
        t0 = h.breaks[u] + (level - v0) * (h.breaks[u + 1] - h.breaks[u]) / (v1 - v0);
        found = true;
      }
    }
    if (!found) {
      t0 = h.breaks.front();
      if (!(h.values.front() == level)) throw std::logic_error("root_e: level m+1 not attained");
    }
  }

  PathExpr y = x;
  insert_break(y, t0);
  insert_break(y, t1);
  std::vector<LevelZeroWeight> dirs = y.dirs;
  for (std::size_t u = 0; u < dirs.size(); ++u)
    if (t0 <= y.breaks[u] && y.breaks[u + 1] <= t1)
      dirs[u] = reflect_simple(d, dirs[u], j, classical);
  return canonical_expr(std::move(dirs), y.breaks);
}

}  // namespace detail

inline std::optional<Path> root_e(const AffineCartanDatum& d, const Path& p, int j) {
  auto r = detail::apply_root_op(d, p.expr, j, false, false);
  if (!r) return std::nullopt;
  return Path{std::move(*r)};
}
inline std::optional<Path> root_f(const AffineCartanDatum& d, const Path& p, int j) {
  auto r = detail::apply_root_op(d, p.expr, j, true, false);
  if (!r) return std::nullopt;
  return Path{std::move(*r)};
}
inline std::optional<ClPath> root_e(const AffineCartanDatum& d, const ClPath& p, int j) {
  auto r = detail::apply_root_op(d, p.expr, j, false, true);
  if (!r) return std::nullopt;
  return ClPath{std::move(*r)};
}
inline std::optional<ClPath> root_f(const AffineCartanDatum& d, const ClPath& p, int j) {
  auto r = detail::apply_root_op(d, p.expr, j, true, true);
  if (!r) return std::nullopt;
  return ClPath{std::move(*r)};
}

namespace detail {

template <class P>
long long count_ops(const AffineCartanDatum& d, const P& p, int j, bool lowering) {
  PLFunction h = h_function(d, p.expr, j);
  if (!h.min().is_integer())
    throw std::domain_error("epsilon/phi: not an LS-type path (non-integral minimum)");
  long long k = 0;
  P cur = p;
  for (;;) {
    auto next = lowering ? root_f(d, cur, j) : root_e(d, cur, j);
    if (!next) return k;
    cur = *next;
    ++k;
  }
}

}  // namespace detail

/// eps_j = max{ l : e_j^l pi != 0 }, computed by repeated application.
inline long long epsilon(const AffineCartanDatum& d, const Path& p, int j) {
  return detail::count_ops(d, p, j, false);
}
inline long long epsilon(const AffineCartanDatum& d, const ClPath& p, int j) {
  return detail::count_ops(d, p, j, false);
}
inline long long phi(const AffineCartanDatum& d, const Path& p, int j) {
  return detail::count_ops(d, p, j, true);
}
inline long long phi(const AffineCartanDatum& d, const ClPath& p, int j) {
  return detail::count_ops(d, p, j, true);
}

namespace detail {

template <class P>
P apply_sj(const AffineCartanDatum& d, const P& p, int j) {
  Rational n = pairing_h(d, expr_endpoint(d, p.expr), j);
  if (!n.is_integer()) throw std::logic_error("S_j: endpoint pairing not integral");
  long long k = n.to_ll();
  P cur = p;
  for (long long i = 0; i < (k >= 0 ? k : -k); ++i) {
    auto next = k >= 0 ? root_f(d, cur, j) : root_e(d, cur, j);
    if (!next) throw std::logic_error("S_j: root operator vanished mid-application");
    cur = *next;
  }
  return cur;
}

}  // namespace detail

inline Path s_j(const AffineCartanDatum& d, const Path& p, int j) {
  return detail::apply_sj(d, p, j);
}
inline ClPath s_j(const AffineCartanDatum& d, const ClPath& p, int j) {
  return detail::apply_sj(d, p, j);
}

/// S_w for w = r_{j_1} ... r_{j_k} given as the word (j_1, ..., j_k);
/// the rightmost letter acts first.
template <class P>
P s_w(const AffineCartanDatum& d, const P& p, const std::vector<int>& word) {
  P cur = p;
  for (std::size_t i = word.size(); i-- > 0;) cur = detail::apply_sj(d, cur, word[i]);
  return cur;
}

/// The classical projection: drop all delta-coefficients and re-canonicalize.
inline ClPath cl(const AffineCartanDatum& d, const Path& p) {
  std::vector<LevelZeroWeight> dirs = p.expr.dirs;
  for (auto& w : dirs) w.delta = Rational(0);
  (void)d;
  return ClPath{detail::canonical_expr(std::move(dirs), p.expr.breaks)};
}

}  // namespace lspaths
