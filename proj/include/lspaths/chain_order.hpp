#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lspaths/weights.hpp"

namespace lspaths {

/// A chain (nu_0, ..., nu_k) together with its positive real roots
/// (xi_1, ..., xi_k): nu_l = r_{xi_l}(nu_{l-1}) with nu_{l-1}(xi_l^vee) < 0.
struct ChainCertificate {
  std::vector<LevelZeroWeight> weights;
  std::vector<PositiveRealRoot> roots;

  std::size_t length() const { return roots.size(); }
};

/// Recovers the positive real root from its alpha-coordinates over I, if any.
inline std::optional<PositiveRealRoot> recognize_real_root(const AffineCartanDatum& d,
                                                           const std::vector<long long>& coords) {
  Rational z = Rational(coords[0], d.marks[0]);  // delta-coefficient
  std::vector<Rational> fin(d.l);
  for (int j = 1; j <= d.l; ++j) fin[j - 1] = Rational(coords[j]) - z * Rational(d.marks[j]);
  // Full form: beta + n c_beta delta with beta = fin.
  bool fin_integral = true;
  std::vector<long long> beta(d.l);
  for (int j = 0; j < d.l; ++j) {
    if (!fin[j].is_integer()) {
      fin_integral = false;
      break;
    }
    beta[j] = fin[j].to_ll();
  }
  if (fin_integral && d.is_finite_root(beta)) {
    long long c = d.root_info(FiniteRoot{beta}).c;
    Rational n = z / Rational(c);
    if (n.is_integer()) {
      PositiveRealRoot xi{RealRootKind::full, FiniteRoot{beta}, n.to_ll()};
      if (is_valid_positive_real_root(d, xi)) return xi;
    }
  }
  // Half form: (beta + (2n-1) delta)/2 with beta = 2 fin.
  if (d.type.is_A2l_2()) {
    bool ok = true;
    std::vector<long long> beta2(d.l);
    for (int j = 0; j < d.l; ++j) {
      Rational b = Rational(2) * fin[j];
      if (!b.is_integer()) {
        ok = false;
        break;
      }
      beta2[j] = b.to_ll();
    }
    Rational n = (Rational(2) * z + Rational(1)) / Rational(2);
    if (ok && n.is_integer() && d.is_finite_root(beta2)) {
      PositiveRealRoot xi{RealRootKind::half, FiniteRoot{beta2}, n.to_ll()};
      if (is_valid_positive_real_root(d, xi)) return xi;
    }
  }
  return std::nullopt;
}

/// The unique positive real root xi with r_xi(w1) = w2 and w1(xi^vee) < 0, if any.
inline std::optional<PositiveRealRoot> step_root(const AffineCartanDatum& d,
                                                 const LevelZeroWeight& w1,
                                                 const LevelZeroWeight& w2) {
  LevelZeroWeight diff = w2 - w1;
  // diff = -p * xi with p = w1(xi^vee) in Z_{<0}; try each multiplier k = -p.
  Rational z = diff.delta * Rational(d.marks[0]);
  std::vector<Rational> cr(d.l + 1);
  cr[0] = z;
  for (int j = 1; j <= d.l; ++j) cr[j] = diff.fin[j - 1] + diff.delta * Rational(d.marks[j]);
  long long height = 0;
  for (int j = 0; j <= d.l; ++j) {
    if (!cr[j].is_integer() || cr[j].sign() < 0) return std::nullopt;
    height += cr[j].to_ll();
  }
  if (height == 0) return std::nullopt;
  for (long long k = 1; k <= height; ++k) {
    std::vector<long long> c(d.l + 1);
    bool div = true;
    for (int j = 0; j <= d.l && div; ++j) {
      long long v = cr[j].to_ll();
      if (v % k != 0) div = false;
      c[j] = v / k;
    }
    if (!div) continue;
    auto xi = recognize_real_root(d, c);
    if (!xi) continue;
    Rational p = pairing_coroot(d, w1, *xi);
    if (p.is_integer() && p.to_ll() == -k && reflect(d, w1, *xi) == w2) return xi;
  }
  return std::nullopt;
}

inline bool validate_certificate(const AffineCartanDatum& d, const ChainCertificate& cert) {
  if (cert.weights.size() != cert.roots.size() + 1) return false;
  for (std::size_t l = 0; l < cert.roots.size(); ++l) {
    const auto& xi = cert.roots[l];
    if (!is_valid_positive_real_root(d, xi)) return false;
    Rational p = pairing_coroot(d, cert.weights[l], xi);
    if (!p.is_integer() || p.sign() >= 0) return false;
    if (!(reflect(d, cert.weights[l], xi) == cert.weights[l + 1])) return false;
    auto unique_root = step_root(d, cert.weights[l], cert.weights[l + 1]);
    if (!unique_root || !(*unique_root == xi)) return false;
  }
  return true;
}

namespace detail {

/// Exhaustive search engine over the finite interval
/// { tau : tau - mu in Q_+ and nu - tau in Q_+ }, states kept as integer
/// alpha-coordinate offsets from the base weight mu.
class ChainSearch {
public:
  ChainSearch(const AffineCartanDatum& d, LevelZeroWeight base, std::vector<long long> target)
      : d_(d), base_(std::move(base)), target_(std::move(target)) {
    Rational maxdeg = Rational(target_[0], d_.marks[0]);
    for (const auto& xi : positive_real_roots_up_to(d_, maxdeg)) {
      Cand c;
      c.xi = xi;
      c.coords = alpha_coords(d_, xi);
      bool fits = true;
      for (int j = 0; j <= d_.l; ++j)
        if (c.coords[j] > target_[j]) fits = false;
      if (!fits) continue;
      fill_pairing(c);
      cands_.push_back(std::move(c));
    }
  }

  const std::vector<long long>& target() const { return target_; }

  LevelZeroWeight weight_at(const std::vector<long long>& off) const {
    LevelZeroWeight w = base_;
    for (int j = 0; j <= d_.l; ++j) {
      if (off[j] == 0) continue;
      w = w + Rational(off[j]) * simple_root_weight(d_, j);
    }
    return w;
  }

  /// Longest chain length from offset `from` to offset `to`; -1 if unreachable.
  long long longest(const std::vector<long long>& from, const std::vector<long long>& to) {
    if (from == to) return 0;
    auto key = std::make_pair(from, to);
    auto it = longest_memo_.find(key);
    if (it != longest_memo_.end()) return it->second;
    longest_memo_[key] = -1;  // guard; revisits during exploration see "unreachable"
    long long best = -1;
    for (const auto& c : cands_) {
      std::vector<long long> next;
      if (!try_step(c, from, to, next)) continue;
      long long rest = longest(next, to);
      if (rest >= 0 && rest + 1 > best) best = rest + 1;
    }
    longest_memo_[key] = best;
    return best;
  }

  /// Some chain from `from` to `to`, general steps (any positive real root).
  bool find_chain(const std::vector<long long>& from, const std::vector<long long>& to,
                  std::vector<std::pair<std::vector<long long>, const PositiveRealRoot*>>& out) {
    if (from == to) return true;
    if (chain_fail_.count(std::make_pair(from, to))) return false;
    for (const auto& c : cands_) {
      std::vector<long long> next;
      if (!try_step(c, from, to, next)) continue;
      out.emplace_back(next, &c.xi);
      if (find_chain(next, to, out)) return true;
      out.pop_back();
    }
    chain_fail_.insert(std::make_pair(from, to));
    return false;
  }

  /// Some sigma-chain from `from` to `to`: every step has dist 1 and pairing
  /// in sigma^{-1} Z_{<0}.  Step candidates are limited to the three shapes a
  /// dist-1 step can take.
  bool find_sigma_chain(const std::vector<long long>& from, const std::vector<long long>& to,
                        const Rational& sigma,
                        std::vector<std::pair<std::vector<long long>, const PositiveRealRoot*>>& out) {
    if (from == to) return true;
    if (sigma_fail_.count(from)) return false;
    for (const auto& c : cands_) {
      if (!is_dist1_shape(c.xi)) continue;
      std::vector<long long> next;
      long long p;
      if (!try_step(c, from, to, next, &p)) continue;
      if (!(Rational(p) * sigma).is_integer()) continue;
      if (longest(from, next) != 1) continue;
      out.emplace_back(next, &c.xi);
      if (find_sigma_chain(next, to, sigma, out)) return true;
      out.pop_back();
    }
    sigma_fail_.insert(from);
    return false;
  }

private:
  struct Cand {
    PositiveRealRoot xi;
    std::vector<long long> coords;
    long long pair_base = 0;               // base(xi^vee)
    std::vector<long long> pair_row;       // <alpha_j, xi^vee>, j in I
  };

  const AffineCartanDatum& d_;
  LevelZeroWeight base_;
  std::vector<long long> target_;
  std::vector<Cand> cands_;
  std::map<std::pair<std::vector<long long>, std::vector<long long>>, long long> longest_memo_;
  std::set<std::pair<std::vector<long long>, std::vector<long long>>> chain_fail_;
  std::set<std::vector<long long>> sigma_fail_;

  void fill_pairing(Cand& c) {
    const auto& info = d_.root_info(c.xi.beta);
    long long mult = c.xi.kind == RealRootKind::half ? 2 : 1;
    Rational pb = pairing_finite_coroot(d_, base_, c.xi.beta) * Rational(mult);
    if (!pb.is_integer()) throw std::invalid_argument("chain search needs integral weights");
    c.pair_base = pb.to_ll();
    c.pair_row.assign(d_.l + 1, 0);
    for (int j = 0; j <= d_.l; ++j) c.pair_row[j] = mult * info.coroot_pair[j];
  }

  bool is_dist1_shape(const PositiveRealRoot& xi) const {
    if (xi.kind == RealRootKind::half) return xi.n == 1 && !xi.beta.is_positive();
    if (xi.beta.is_positive()) return xi.n == 0;
    return xi.n == 1;
  }

  bool try_step(const Cand& c, const std::vector<long long>& from,
                const std::vector<long long>& to, std::vector<long long>& next,
                long long* pairing_out = nullptr) const {
    long long p = c.pair_base;
    for (int j = 0; j <= d_.l; ++j) p += c.pair_row[j] * from[j];
    if (p >= 0) return false;
    next = from;
    for (int j = 0; j <= d_.l; ++j) {
      next[j] += -p * c.coords[j];
      if (next[j] > to[j]) return false;
    }
    if (pairing_out) *pairing_out = p;
    return true;
  }
};

/// nu - mu as integer alpha-coordinates over I, or nullopt when nu - mu is
/// not in the root lattice Q (in which case no chain can exist).
inline std::optional<std::vector<long long>> q_offset(const AffineCartanDatum& d,
                                                      const LevelZeroWeight& mu,
                                                      const LevelZeroWeight& nu) {
  LevelZeroWeight diff = nu - mu;
  std::vector<long long> c(d.l + 1);
  Rational c0 = diff.delta * Rational(d.marks[0]);
  if (!c0.is_integer()) return std::nullopt;
  c[0] = c0.to_ll();
  for (int j = 1; j <= d.l; ++j) {
    Rational cj = diff.fin[j - 1] + diff.delta * Rational(d.marks[j]);
    if (!cj.is_integer()) return std::nullopt;
    c[j] = cj.to_ll();
  }
  return c;
}

inline ChainCertificate build_certificate(
    ChainSearch& search, const LevelZeroWeight& mu,
    const std::vector<std::pair<std::vector<long long>, const PositiveRealRoot*>>& steps) {
  ChainCertificate cert;
  cert.weights.push_back(mu);
  for (const auto& [off, xi] : steps) {
    cert.weights.push_back(search.weight_at(off));
    cert.roots.push_back(*xi);
  }
  return cert;
}

}  // namespace detail

/// Decides mu >= nu in the Bruhat-type order; returns a witnessing chain.
/// mu == nu yields the trivial length-0 certificate.
inline std::optional<ChainCertificate> greater(const AffineCartanDatum& d,
                                               const LevelZeroWeight& mu,
                                               const LevelZeroWeight& nu) {
  if (mu == nu) return ChainCertificate{{mu}, {}};
  auto off = detail::q_offset(d, mu, nu);
  if (!off) return std::nullopt;
  for (long long v : *off)
    if (v < 0) return std::nullopt;
  detail::ChainSearch search(d, mu, *off);
  std::vector<std::pair<std::vector<long long>, const PositiveRealRoot*>> steps;
  if (!search.find_chain(std::vector<long long>(d.l + 1, 0), *off, steps)) return std::nullopt;
  return detail::build_certificate(search, mu, steps);
}

/// dist(mu, nu): the maximum length of a chain for (mu, nu).  Requires mu > nu.
inline long long dist(const AffineCartanDatum& d, const LevelZeroWeight& mu,
                      const LevelZeroWeight& nu) {
  auto off = detail::q_offset(d, mu, nu);
  if (off) {
    bool nonneg = true, nonzero = false;
    for (long long v : *off) {
      if (v < 0) nonneg = false;
      if (v != 0) nonzero = true;
    }
    if (nonneg && nonzero) {
      detail::ChainSearch search(d, mu, *off);
      long long k = search.longest(std::vector<long long>(d.l + 1, 0), *off);
      if (k >= 1) return k;
    }
  }
  throw std::domain_error("dist: not comparable (mu > nu fails)");
}

/// Decides existence of a sigma-chain for (mu, nu), 0 < sigma < 1.
inline std::optional<ChainCertificate> has_sigma_chain(const AffineCartanDatum& d,
                                                       const LevelZeroWeight& mu,
                                                       const LevelZeroWeight& nu,
                                                       const Rational& sigma) {
  if (!(Rational(0) < sigma && sigma < Rational(1)))
    throw std::invalid_argument("sigma must lie strictly between 0 and 1");
  if (mu == nu) return ChainCertificate{{mu}, {}};
  auto off = detail::q_offset(d, mu, nu);
  if (!off) return std::nullopt;
  for (long long v : *off)
    if (v < 0) return std::nullopt;
  detail::ChainSearch search(d, mu, *off);
  std::vector<std::pair<std::vector<long long>, const PositiveRealRoot*>> steps;
  if (!search.find_sigma_chain(std::vector<long long>(d.l + 1, 0), *off, sigma, steps))
    return std::nullopt;
  return detail::build_certificate(search, mu, steps);
}

/// I0(lambda, p) = { i in I0 : m_i in pZ } (1-based indices; includes m_i = 0).
inline std::vector<int> I0_lambda_p(const DominantShape& shape, long long p) {
  if (p < 1) throw std::invalid_argument("I0_lambda_p: p must be >= 1");
  std::vector<int> out;
  for (std::size_t i = 0; i < shape.m.size(); ++i)
    if (shape.m[i] % p == 0) out.push_back(static_cast<int>(i) + 1);
  return out;
}

/// Closed-form criterion: N in sum_{j in I0(lambda,p)} m_j d_j Z_{>=0}.
inline bool sigma_chain_criterion(const AffineCartanDatum& d, const DominantShape& shape,
                                  long long p, long long q, long long N) {
  if (!(1 <= q && q < p) || std::gcd(p, q) != 1)
    throw std::invalid_argument("sigma_chain_criterion: need coprime 1 <= q < p");
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

/// Memoizing front-end for sigma-chain decisions.  Queries are normalized by
/// the delta-shift invariance before caching.
class ChainOracle {
public:
  explicit ChainOracle(const AffineCartanDatum& d) : d_(&d) {}

  std::optional<ChainCertificate> sigma_chain(const LevelZeroWeight& mu,
                                              const LevelZeroWeight& nu, const Rational& sigma) {
    Rational shift = mu.delta;
    LevelZeroWeight mu0 = mu, nu0 = nu;
    mu0.delta = Rational(0);
    nu0.delta = nu.delta - shift;
    std::string key = mu0.key() + "|" + nu0.key() + "|" + sigma.to_string();
    auto it = memo_.find(key);
    if (it == memo_.end())
      it = memo_.emplace(key, has_sigma_chain(*d_, mu0, nu0, sigma)).first;
    if (!it->second) return std::nullopt;
    ChainCertificate cert = *it->second;
    for (auto& w : cert.weights) w.delta += shift;
    return cert;
  }

  bool has(const LevelZeroWeight& mu, const LevelZeroWeight& nu, const Rational& sigma) {
    return sigma_chain(mu, nu, sigma).has_value();
  }

  std::size_t cache_size() const { return memo_.size(); }

private:
  const AffineCartanDatum* d_;
  std::map<std::string, std::optional<ChainCertificate>> memo_;
};

}  // namespace lspaths
