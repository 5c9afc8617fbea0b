#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lspaths/rational.hpp"

namespace lspaths {

/// Kac label X_n^(r), e.g. {family='A', n=2, twist=2} for A_2^(2).
/// The rank l = |I0| is derived from the label.
struct AffineType {
  char family = 'A';
  int n = 1;
  int twist = 1;

  int rank() const {
    if (twist == 1) return n;
    if (twist == 3) return 2;  // D_4^(3)
    // twist == 2
    if (family == 'A') return n % 2 == 0 ? n / 2 : (n + 1) / 2;
    if (family == 'D') return n - 1;
    if (family == 'E') return 4;  // E_6^(2)
    throw std::invalid_argument("AffineType: bad label");
  }

  std::string label() const {
    return std::string(1, family) + std::to_string(n) + "~" + std::to_string(twist);
  }

  bool is_A2l_2() const { return twist == 2 && family == 'A' && n % 2 == 0; }

  friend bool operator==(const AffineType& a, const AffineType& b) {
    return a.family == b.family && a.n == b.n && a.twist == b.twist;
  }
};

/// Parses "A2~2" style labels (family letter, label index n, twist r).
inline AffineType parse_affine_type(const std::string& s) {
  std::size_t tilde = s.find('~');
  if (s.size() < 4 || tilde == std::string::npos || tilde < 2 || tilde + 1 >= s.size())
    throw std::invalid_argument("unknown affine type label: '" + s + "' (expected e.g. A2~1)");
  AffineType t;
  t.family = s[0];
  try {
    t.n = std::stoi(s.substr(1, tilde - 1));
    t.twist = std::stoi(s.substr(tilde + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("unknown affine type label: '" + s + "'");
  }
  return t;
}

/// A root of the finite system Delta_bar, as integer coordinates over
/// {alpha_i}_{i in I0}. Roots are sign-definite: all coordinates >= 0 or all <= 0.
struct FiniteRoot {
  std::vector<long long> coords;

  bool is_positive() const {
    for (long long c : coords)
      if (c != 0) return c > 0;
    return false;
  }
  FiniteRoot negated() const {
    FiniteRoot r = *this;
    for (auto& c : r.coords) c = -c;
    return r;
  }
  friend bool operator==(const FiniteRoot& a, const FiniteRoot& b) { return a.coords == b.coords; }
  friend bool operator<(const FiniteRoot& a, const FiniteRoot& b) { return a.coords < b.coords; }
};

enum class RealRootKind { full, half };

/// Positive real root: full form beta + n*c_beta*delta (beta in Delta_bar,
/// either sign), or half form (beta + (2n-1)*delta)/2 (A_{2l}^(2) only,
/// beta long, either sign).
struct PositiveRealRoot {
  RealRootKind kind = RealRootKind::full;
  FiniteRoot beta;
  long long n = 0;

  friend bool operator==(const PositiveRealRoot& a, const PositiveRealRoot& b) {
    return a.kind == b.kind && a.beta == b.beta && a.n == b.n;
  }
};

namespace detail {
struct FiniteRootInfo {
  FiniteRoot root;
  Rational norm;                       // (beta, beta)
  long long c = 1;                     // c_beta = max(1, norm/2), always integral here
  bool is_long = false;                // norm maximal in Delta_bar
  std::vector<long long> coroot_pair;  // <alpha_j, beta^vee> for j = 0..l
};
}  // namespace detail

/// The fixed affine Cartan datum: index set I = {0,...,l}, Cartan matrix,
/// marks a_j, comarks a_j^vee, the normalized bilinear form on the finite
/// span, and the classified finite root system.
struct AffineCartanDatum {
  AffineType type;
  int l = 0;  // rank = |I0|
  std::vector<std::vector<long long>> cartan;  // (l+1) x (l+1), <alpha_j, h_i> = cartan[i][j]
  std::vector<long long> marks;                // a_j, delta = sum a_j alpha_j
  std::vector<long long> comarks;              // a_j^vee, c = sum a_j^vee h_j
  std::vector<std::vector<Rational>> gram_fin; // (alpha_i, alpha_j), i,j in I0 (0-based)

  std::vector<detail::FiniteRootInfo> fin_roots;  // all of Delta_bar, sorted by coords
  std::map<std::vector<long long>, int> fin_index;
  Rational max_norm;

  long long a0() const { return marks[0]; }
  Rational a0_inv() const { return Rational(1, marks[0]); }

  const detail::FiniteRootInfo& root_info(const FiniteRoot& beta) const {
    auto it = fin_index.find(beta.coords);
    if (it == fin_index.end()) throw std::invalid_argument("not a root of the finite system");
    return fin_roots[it->second];
  }
  bool is_finite_root(const std::vector<long long>& coords) const {
    return fin_index.count(coords) > 0;
  }

  Rational norm_of(const FiniteRoot& beta) const { return root_info(beta).norm; }

  /// (x, beta) for x a rational vector over {alpha_i}_{i in I0}.
  Rational bilinear(const std::vector<Rational>& x, const FiniteRoot& beta) const {
    Rational s;
    for (int i = 0; i < l; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < l; ++j) {
        if (beta.coords[j] == 0) continue;
        s += x[i] * Rational(beta.coords[j]) * gram_fin[i][j];
      }
    }
    return s;
  }
};

namespace detail {

inline void add_edge(std::vector<std::vector<long long>>& m, int i, int j, long long aij,
                     long long aji) {
  m[i][j] = aij;  // <alpha_j, h_i>
  m[j][i] = aji;
}

inline std::vector<FiniteRootInfo> close_finite_roots(const AffineCartanDatum& d) {
  // Orbit closure of the simple roots under the finite simple reflections.
  std::set<std::vector<long long>> seen;
  std::vector<std::vector<long long>> queue;
  for (int i = 1; i <= d.l; ++i) {
    std::vector<long long> e(d.l, 0);
    e[i - 1] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto v = queue.back();
    queue.pop_back();
    for (int j = 1; j <= d.l; ++j) {
      long long pairing = 0;  // <v, h_j>
      for (int i = 1; i <= d.l; ++i) pairing += d.cartan[j][i] * v[i - 1];
      auto w = v;
      w[j - 1] -= pairing;
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  std::vector<std::vector<long long>> all(seen.begin(), seen.end());
  for (const auto& v : seen) {
    auto neg = v;
    for (auto& c : neg) c = -c;
    if (!seen.count(neg)) throw std::logic_error("finite root system not sign-symmetric");
  }

  std::vector<FiniteRootInfo> infos;
  infos.reserve(all.size());
  for (auto& v : all) {
    FiniteRootInfo info;
    info.root.coords = v;
    std::vector<Rational> x(d.l);
    for (int i = 0; i < d.l; ++i) x[i] = Rational(v[i]);
    info.norm = d.bilinear(x, info.root);
    Rational half = info.norm / Rational(2);
    Rational c = half > Rational(1) ? half : Rational(1);
    if (!c.is_integer()) throw std::logic_error("c_beta not integral");
    info.c = c.to_ll();
    infos.push_back(std::move(info));
  }
  return infos;
}

}  // namespace detail

/// Builds the datum for a supported type (Tables Aff 1-3, rank <= 4).
inline AffineCartanDatum build_datum(const AffineType& type) {
  const std::string label = type.label();
  auto reject = [&label](const std::string& why) -> void {
    throw std::invalid_argument("unsupported affine type '" + label + "': " + why);
  };

  int l;
  try {
    l = type.rank();
  } catch (const std::exception&) {
    reject("not a Kac table entry");
    throw;
  }
  if (l < 1) reject("rank must be positive");
  if (l > 4) reject("only ranks l <= 4 are tabulated");

  AffineCartanDatum d;
  d.type = type;
  d.l = l;
  d.cartan.assign(l + 1, std::vector<long long>(l + 1, 0));
  for (int i = 0; i <= l; ++i) d.cartan[i][i] = 2;
  auto& m = d.cartan;
  auto single = [&](int i, int j) { detail::add_edge(m, i, j, -1, -1); };

  if (type.twist == 1) {
    switch (type.family) {
      case 'A':
        if (l == 1) {
          detail::add_edge(m, 0, 1, -2, -2);
        } else {
          for (int i = 0; i < l; ++i) single(i, i + 1);
          single(0, l);
        }
        d.marks.assign(l + 1, 1);
        d.comarks.assign(l + 1, 1);
        break;
      case 'B': {
        if (l < 3) reject("B series starts at rank 3");
        single(0, 2);
        single(1, 2);
        for (int i = 2; i < l - 1; ++i) single(i, i + 1);
        detail::add_edge(m, l - 1, l, -1, -2);
        d.marks.assign(l + 1, 2);
        d.marks[0] = d.marks[1] = 1;
        d.comarks = d.marks;
        d.comarks[l] = 1;
        break;
      }
      case 'C': {
        if (l < 2) reject("C series starts at rank 2");
        detail::add_edge(m, 0, 1, -1, -2);
        for (int i = 1; i < l - 1; ++i) single(i, i + 1);
        detail::add_edge(m, l - 1, l, -2, -1);
        d.marks.assign(l + 1, 2);
        d.marks[0] = d.marks[l] = 1;
        d.comarks.assign(l + 1, 1);
        break;
      }
      case 'D': {
        if (l < 4) reject("D series starts at rank 4");
        single(0, 2);
        single(1, 2);
        for (int i = 2; i < l - 2; ++i) single(i, i + 1);
        single(l - 2, l - 1);
        single(l - 2, l);
        d.marks.assign(l + 1, 2);
        d.marks[0] = d.marks[1] = d.marks[l - 1] = d.marks[l] = 1;
        d.comarks = d.marks;
        break;
      }
      case 'F': {
        if (l != 4) reject("F_4^(1) has rank 4");
        single(0, 1);
        single(1, 2);
        detail::add_edge(m, 2, 3, -1, -2);
        single(3, 4);
        d.marks = {1, 2, 3, 4, 2};
        d.comarks = {1, 2, 3, 2, 1};
        break;
      }
      case 'G': {
        if (l != 2) reject("G_2^(1) has rank 2");
        single(0, 1);
        detail::add_edge(m, 1, 2, -1, -3);
        d.marks = {1, 2, 3};
        d.comarks = {1, 2, 1};
        break;
      }
      case 'E':
        reject("E ranks exceed the tabulated bound l <= 4");
        break;
      default:
        reject("not a Kac table entry");
    }
  } else if (type.twist == 2) {
    switch (type.family) {
      case 'A': {
        if (type.n % 2 == 0) {
          // A_{2l}^(2)
          if (type.n < 2) reject("not a Kac table entry");
          if (l == 1) {
            detail::add_edge(m, 0, 1, -4, -1);
            d.marks = {2, 1};
            d.comarks = {1, 2};
          } else {
            detail::add_edge(m, 0, 1, -2, -1);
            for (int i = 1; i < l - 1; ++i) single(i, i + 1);
            detail::add_edge(m, l - 1, l, -2, -1);
            d.marks.assign(l + 1, 2);
            d.marks[l] = 1;
            d.comarks.assign(l + 1, 2);
            d.comarks[0] = 1;
          }
        } else {
          // A_{2l-1}^(2), l >= 3
          if (l < 3) reject("A_{2l-1}^(2) starts at rank 3");
          single(0, 2);
          single(1, 2);
          for (int i = 2; i < l - 1; ++i) single(i, i + 1);
          detail::add_edge(m, l - 1, l, -2, -1);
          d.marks.assign(l + 1, 2);
          d.marks[0] = d.marks[1] = d.marks[l] = 1;
          d.comarks.assign(l + 1, 2);
          d.comarks[0] = d.comarks[1] = 1;
        }
        break;
      }
      case 'D': {
        // D_{l+1}^(2), l >= 2
        if (type.n < 3) reject("not a Kac table entry");
        detail::add_edge(m, 0, 1, -2, -1);
        for (int i = 1; i < l - 1; ++i) single(i, i + 1);
        detail::add_edge(m, l - 1, l, -1, -2);
        d.marks.assign(l + 1, 1);
        d.comarks.assign(l + 1, 2);
        d.comarks[0] = d.comarks[l] = 1;
        break;
      }
      case 'E': {
        if (type.n != 6) reject("not a Kac table entry");
        single(0, 1);
        single(1, 2);
        detail::add_edge(m, 2, 3, -2, -1);
        single(3, 4);
        d.marks = {1, 2, 3, 2, 1};
        d.comarks = {1, 2, 3, 4, 2};
        break;
      }
      default:
        reject("not a Kac table entry");
    }
  } else if (type.twist == 3) {
    if (type.family != 'D' || type.n != 4) reject("not a Kac table entry");
    single(0, 1);
    detail::add_edge(m, 1, 2, -3, -1);
    d.marks = {1, 2, 1};
    d.comarks = {1, 2, 3};
  } else {
    reject("twist must be 1, 2 or 3");
  }

  // Null-root / central-element conditions.
  for (int i = 0; i <= l; ++i) {
    long long row = 0, col = 0;
    for (int j = 0; j <= l; ++j) {
      row += d.cartan[i][j] * d.marks[j];
      col += d.comarks[j] * d.cartan[j][i];
    }
    if (row != 0 || col != 0) throw std::logic_error("table data violates null conditions");
  }
  if (d.comarks[0] != 1) throw std::logic_error("a_0^vee must be 1");

  // (alpha_i, alpha_j) = a_{ij} * a_i^vee / a_i on the I0 block.
  d.gram_fin.assign(l, std::vector<Rational>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j)
      d.gram_fin[i - 1][j - 1] =
          Rational(d.cartan[i][j]) * Rational(d.comarks[i], d.marks[i]);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (!(d.gram_fin[i][j] == d.gram_fin[j][i]))
        throw std::logic_error("bilinear form not symmetric");

  d.fin_roots = detail::close_finite_roots(d);
  std::sort(d.fin_roots.begin(), d.fin_roots.end(),
            [](const auto& a, const auto& b) { return a.root.coords < b.root.coords; });
  d.max_norm = Rational(0);
  for (const auto& fr : d.fin_roots)
    if (fr.norm > d.max_norm) d.max_norm = fr.norm;
  for (int k = 0; k < static_cast<int>(d.fin_roots.size()); ++k) {
    auto& fr = d.fin_roots[k];
    fr.is_long = fr.norm == d.max_norm;
    d.fin_index[fr.root.coords] = k;
    // <alpha_j, beta^vee> = 2 (alpha_j, beta) / (beta, beta), integral for all j in I.
    fr.coroot_pair.assign(l + 1, 0);
    for (int j = 1; j <= l; ++j) {
      std::vector<Rational> ej(l);
      ej[j - 1] = Rational(1);
      Rational p = Rational(2) * d.bilinear(ej, fr.root) / fr.norm;
      if (!p.is_integer()) throw std::logic_error("coroot pairing not integral");
      fr.coroot_pair[j] = p.to_ll();
    }
    // alpha_0 = a_0^{-1}(delta - theta), theta = sum_{j in I0} a_j alpha_j.
    long long theta_pair = 0;
    for (int j = 1; j <= l; ++j) theta_pair += d.marks[j] * fr.coroot_pair[j];
    if (theta_pair % d.marks[0] != 0) throw std::logic_error("alpha_0 pairing not integral");
    fr.coroot_pair[0] = -theta_pair / d.marks[0];
  }
  return d;
}

inline AffineCartanDatum build_datum(const std::string& label) {
  return build_datum(parse_affine_type(label));
}

/// All of Delta_bar (both signs), sorted by coordinates.
inline std::vector<FiniteRoot> finite_roots(const AffineCartanDatum& d) {
  std::vector<FiniteRoot> out;
  out.reserve(d.fin_roots.size());
  for (const auto& fr : d.fin_roots) out.push_back(fr.root);
  return out;
}

inline std::vector<FiniteRoot> positive_finite_roots(const AffineCartanDatum& d) {
  std::vector<FiniteRoot> out;
  for (const auto& fr : d.fin_roots)
    if (fr.root.is_positive()) out.push_back(fr.root);
  return out;
}

/// c_beta = max(1, (beta,beta)/2).
inline Rational c_beta(const AffineCartanDatum& d, const FiniteRoot& beta) {
  return Rational(d.root_info(beta).c);
}

/// d_i = 1 for (A_{2l}^(2), i = l), otherwise c_{alpha_i}.  i is 1-based in I0.
inline long long d_i(const AffineCartanDatum& d, int i) {
  if (i < 1 || i > d.l) throw std::invalid_argument("d_i: index not in I0");
  if (d.type.is_A2l_2() && i == d.l) return 1;
  std::vector<long long> e(d.l, 0);
  e[i - 1] = 1;
  return d.root_info(FiniteRoot{e}).c;
}

/// theta = delta - a_0 alpha_0; its I0 coordinates are the finite marks.
inline FiniteRoot theta(const AffineCartanDatum& d) {
  FiniteRoot t;
  t.coords.assign(d.marks.begin() + 1, d.marks.end());
  if (!d.is_finite_root(t.coords)) throw std::logic_error("theta not in the finite root system");
  return t;
}

/// The delta-coefficient of the real root.
inline Rational delta_degree(const AffineCartanDatum& d, const PositiveRealRoot& xi) {
  if (xi.kind == RealRootKind::full) return Rational(xi.n * d.root_info(xi.beta).c);
  return Rational(2 * xi.n - 1, 2);
}

/// Integer coordinates of the real root over {alpha_j}_{j in I}.
inline std::vector<long long> alpha_coords(const AffineCartanDatum& d,
                                           const PositiveRealRoot& xi) {
  std::vector<long long> c(d.l + 1, 0);
  if (xi.kind == RealRootKind::full) {
    long long k = xi.n * d.root_info(xi.beta).c;  // delta multiplier
    for (int j = 0; j <= d.l; ++j) c[j] = k * d.marks[j];
    for (int j = 1; j <= d.l; ++j) c[j] += xi.beta.coords[j - 1];
  } else {
    long long k = 2 * xi.n - 1;
    for (int j = 0; j <= d.l; ++j) {
      long long num = k * d.marks[j] + (j == 0 ? 0 : xi.beta.coords[j - 1]);
      if (num % 2 != 0) throw std::logic_error("half root has non-integral coordinates");
      c[j] = num / 2;
    }
  }
  return c;
}

/// The finite part of a positive real root: sgn(beta) * beta, in Delta_bar_+.
inline FiniteRoot finite_part(const PositiveRealRoot& xi) {
  return xi.beta.is_positive() ? xi.beta : xi.beta.negated();
}

/// Checks the shape constraints of Prop-style classification for a candidate.
inline bool is_valid_positive_real_root(const AffineCartanDatum& d, const PositiveRealRoot& xi) {
  if (!d.is_finite_root(xi.beta.coords)) return false;
  if (xi.kind == RealRootKind::full)
    return xi.beta.is_positive() ? xi.n >= 0 : xi.n >= 1;
  return d.type.is_A2l_2() && d.root_info(xi.beta).is_long && xi.n >= 1;
}

/// All positive real roots with delta-coefficient <= max_delta_degree, sorted
/// by (delta-degree, finite-part coordinates, sign).
inline std::vector<PositiveRealRoot> positive_real_roots_up_to(const AffineCartanDatum& d,
                                                               const Rational& max_delta_degree) {
  std::vector<PositiveRealRoot> out;
  if (max_delta_degree < Rational(0)) return out;
  for (const auto& fr : d.fin_roots) {
    long long c = fr.c;
    long long n0 = fr.root.is_positive() ? 0 : 1;
    for (long long n = n0; Rational(n * c) <= max_delta_degree; ++n)
      out.push_back(PositiveRealRoot{RealRootKind::full, fr.root, n});
    if (d.type.is_A2l_2() && fr.is_long)
      for (long long n = 1; Rational(2 * n - 1, 2) <= max_delta_degree; ++n)
        out.push_back(PositiveRealRoot{RealRootKind::half, fr.root, n});
  }
  std::sort(out.begin(), out.end(), [&](const PositiveRealRoot& a, const PositiveRealRoot& b) {
    Rational da = delta_degree(d, a), db = delta_degree(d, b);
    if (da != db) return da < db;
    FiniteRoot fa = finite_part(a), fb = finite_part(b);
    if (!(fa == fb)) return fa < fb;
    if (a.kind != b.kind) return a.kind == RealRootKind::full;
    return a.beta.coords < b.beta.coords;
  });
  return out;
}

}  // namespace lspaths
