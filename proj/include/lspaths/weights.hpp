#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lspaths/affine_data.hpp"

namespace lspaths {

/// A weight on the level-zero slice of P: rational coordinates over
/// {alpha_i}_{i in I0} plus a rational delta-coefficient.  Every such weight
/// pairs to zero with the canonical central element.
struct LevelZeroWeight {
  std::vector<Rational> fin;
  Rational delta;

  friend bool operator==(const LevelZeroWeight& a, const LevelZeroWeight& b) {
    return a.fin == b.fin && a.delta == b.delta;
  }
  friend bool operator!=(const LevelZeroWeight& a, const LevelZeroWeight& b) { return !(a == b); }

  bool is_zero() const {
    if (!delta.is_zero()) return false;
    for (const auto& c : fin)
      if (!c.is_zero()) return false;
    return true;
  }

  std::string key() const {
    std::string s = "(";
    for (std::size_t i = 0; i < fin.size(); ++i) {
      if (i) s += ",";
      s += fin[i].to_string();
    }
    s += ";" + delta.to_string() + ")";
    return s;
  }

  friend bool operator<(const LevelZeroWeight& a, const LevelZeroWeight& b) {
    if (a.fin != b.fin) return std::lexicographical_compare(
        a.fin.begin(), a.fin.end(), b.fin.begin(), b.fin.end());
    return a.delta < b.delta;
  }
};

inline LevelZeroWeight operator+(const LevelZeroWeight& a, const LevelZeroWeight& b) {
  LevelZeroWeight r = a;
  for (std::size_t i = 0; i < r.fin.size(); ++i) r.fin[i] += b.fin[i];
  r.delta += b.delta;
  return r;
}
inline LevelZeroWeight operator-(const LevelZeroWeight& a, const LevelZeroWeight& b) {
  LevelZeroWeight r = a;
  for (std::size_t i = 0; i < r.fin.size(); ++i) r.fin[i] -= b.fin[i];
  r.delta -= b.delta;
  return r;
}
inline LevelZeroWeight operator*(const Rational& s, const LevelZeroWeight& w) {
  LevelZeroWeight r = w;
  for (auto& c : r.fin) c *= s;
  r.delta *= s;
  return r;
}

inline LevelZeroWeight zero_weight(const AffineCartanDatum& d) {
  return LevelZeroWeight{std::vector<Rational>(d.l), Rational(0)};
}

inline LevelZeroWeight delta_multiple(const AffineCartanDatum& d, const Rational& n) {
  LevelZeroWeight w = zero_weight(d);
  w.delta = n;
  return w;
}

/// alpha_j as a level-zero weight; alpha_0 = a_0^{-1}(delta - theta).
/// With classical=true the delta-coefficient is dropped (the cl projection).
inline LevelZeroWeight simple_root_weight(const AffineCartanDatum& d, int j,
                                          bool classical = false) {
  LevelZeroWeight w = zero_weight(d);
  if (j == 0) {
    for (int i = 1; i <= d.l; ++i) w.fin[i - 1] = Rational(-d.marks[i], d.marks[0]);
    if (!classical) w.delta = d.a0_inv();
  } else {
    w.fin[j - 1] = Rational(1);
  }
  return w;
}

/// lambda = sum m_i varpi_i as nonnegative multiplicities over I0 (1-based i).
struct DominantShape {
  std::vector<long long> m;

  long long total() const { return std::accumulate(m.begin(), m.end(), 0LL); }
  bool is_zero() const { return total() == 0; }
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(m[i]);
    }
    return s;
  }
};

/// <nu, h_j> for j in I (0-based j), read off the Cartan matrix row.
inline Rational pairing_h(const AffineCartanDatum& d, const LevelZeroWeight& nu, int j) {
  Rational s;
  for (int i = 1; i <= d.l; ++i)
    if (!nu.fin[i - 1].is_zero()) s += Rational(d.cartan[j][i]) * nu.fin[i - 1];
  return s;
}

/// nu(beta^vee) = 2 (nu, beta) / (beta, beta) for beta in Delta_bar.
inline Rational pairing_finite_coroot(const AffineCartanDatum& d, const LevelZeroWeight& nu,
                                      const FiniteRoot& beta) {
  return Rational(2) * d.bilinear(nu.fin, beta) / d.norm_of(beta);
}

/// nu(xi^vee): full roots pair as beta^vee, half roots as 2 beta^vee.
inline Rational pairing_coroot(const AffineCartanDatum& d, const LevelZeroWeight& nu,
                               const PositiveRealRoot& xi) {
  Rational p = pairing_finite_coroot(d, nu, xi.beta);
  return xi.kind == RealRootKind::half ? Rational(2) * p : p;
}

/// r_xi(nu), the reflection in a positive real root, on the level-zero slice.
inline LevelZeroWeight reflect(const AffineCartanDatum& d, const LevelZeroWeight& nu,
                               const PositiveRealRoot& xi) {
  Rational p = pairing_finite_coroot(d, nu, xi.beta);
  if (p.is_zero()) return nu;
  LevelZeroWeight r = nu;
  for (int i = 0; i < d.l; ++i) r.fin[i] -= p * Rational(xi.beta.coords[i]);
  Rational dshift = xi.kind == RealRootKind::full
                        ? p * Rational(xi.n * d.root_info(xi.beta).c)
                        : p * Rational(2 * xi.n - 1);
  r.delta -= dshift;
  return r;
}

/// r_j(nu) for j in I, with the genuine affine alpha_0 (or its cl projection).
inline LevelZeroWeight reflect_simple(const AffineCartanDatum& d, const LevelZeroWeight& nu,
                                      int j, bool classical = false) {
  Rational p = pairing_h(d, nu, j);
  if (p.is_zero()) return nu;
  return nu - p * simple_root_weight(d, j, classical);
}

/// True iff nu lies in the integral weight lattice P (on the level-zero slice).
inline bool is_integral(const AffineCartanDatum& d, const LevelZeroWeight& nu) {
  for (int j = 1; j <= d.l; ++j)
    if (!pairing_h(d, nu, j).is_integer()) return false;
  return (nu.delta * Rational(d.marks[0])).is_integer();
}

/// Solves <lambda, h_i> = m_i for i in I0 within span{alpha_i}; delta = 0.
inline LevelZeroWeight from_shape(const AffineCartanDatum& d, const DominantShape& shape) {
  if (static_cast<int>(shape.m.size()) != d.l)
    throw std::invalid_argument("shape has wrong number of multiplicities");
  int n = d.l;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a[r][c] = Rational(d.cartan[r + 1][c + 1]);
    a[r][n] = Rational(shape.m[r]);
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::logic_error("finite Cartan matrix is singular");
    std::swap(a[col], a[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rational f = a[r][col] / a[col][col];
      for (int c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  LevelZeroWeight w = zero_weight(d);
  for (int i = 0; i < n; ++i) w.fin[i] = a[i][n] / a[i][i];
  return w;
}

inline DominantShape shape_of(const AffineCartanDatum& d, const LevelZeroWeight& lambda) {
  DominantShape s;
  s.m.resize(d.l);
  for (int i = 1; i <= d.l; ++i) {
    Rational p = pairing_h(d, lambda, i);
    if (!p.is_integer() || p.sign() < 0)
      throw std::invalid_argument("weight is not level-zero dominant integral");
    s.m[i - 1] = p.to_ll();
  }
  return s;
}

/// nu = lambda - alpha + n delta with alpha in the nonnegative finite cone.
/// Throws if the finite offset leaves -Q_bar_+.
inline std::pair<std::vector<Rational>, Rational> fin_and_D(const AffineCartanDatum& d,
                                                            const LevelZeroWeight& nu,
                                                            const LevelZeroWeight& lambda) {
  std::vector<Rational> alpha(d.l);
  for (int i = 0; i < d.l; ++i) {
    alpha[i] = lambda.fin[i] - nu.fin[i];
    if (alpha[i].sign() < 0)
      throw std::invalid_argument("fin_and_D: weight not of the form lambda - Q_bar_+ + Q delta");
  }
  return {alpha, nu.delta - lambda.delta};
}

/// The finite Weyl orbit of lambda (closure under r_j, j in I0), sorted.
inline std::vector<LevelZeroWeight> weyl_orbit_fin(const AffineCartanDatum& d,
                                                   const LevelZeroWeight& lambda) {
  std::set<LevelZeroWeight> seen{lambda};
  std::vector<LevelZeroWeight> queue{lambda};
  while (!queue.empty()) {
    LevelZeroWeight v = queue.back();
    queue.pop_back();
    for (int j = 1; j <= d.l; ++j) {
      LevelZeroWeight w = reflect_simple(d, v, j);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return std::vector<LevelZeroWeight>(seen.begin(), seen.end());
}

/// |W_bar|, computed as the orbit size of a regular dominant weight.
inline long long finite_weyl_order(const AffineCartanDatum& d) {
  DominantShape reg;
  reg.m.assign(d.l, 1);
  return static_cast<long long>(weyl_orbit_fin(d, from_shape(d, reg)).size());
}

/// d_lambda = gcd{ m_i d_i : m_i > 0 }.
inline long long d_lambda(const AffineCartanDatum& d, const DominantShape& shape) {
  long long g = 0;
  for (int i = 1; i <= d.l; ++i)
    if (shape.m[i - 1] > 0) g = std::gcd(g, shape.m[i - 1] * d_i(d, i));
  if (g == 0) throw std::invalid_argument("d_lambda undefined: all multiplicities are zero");
  return g;
}

/// Membership in W lambda = { mu + k d_lambda delta : mu in W_bar lambda, k in Z },
/// via W = W_bar x T, translations moving lambda by multiples of d_lambda delta.
inline bool in_W_orbit(const AffineCartanDatum& d, const LevelZeroWeight& nu,
                       const LevelZeroWeight& lambda) {
  DominantShape shape = shape_of(d, lambda);
  if (shape.is_zero()) return nu == lambda;
  long long dlam = d_lambda(d, shape);
  Rational k = (nu.delta - lambda.delta) / Rational(dlam);
  if (!k.is_integer()) return false;
  for (const auto& mu : weyl_orbit_fin(d, lambda))
    if (mu.fin == nu.fin) return true;
  return false;
}

}  // namespace lspaths
