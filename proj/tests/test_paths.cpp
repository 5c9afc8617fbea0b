#include "doctest.h"
#include "lspaths/paths.hpp"

using namespace lspaths;

namespace {

LevelZeroWeight lam_of(const AffineCartanDatum& d, std::initializer_list<long long> m) {
  return from_shape(d, DominantShape{m});
}

}  // namespace

TEST_CASE("straight lines and canonical expressions") {
  auto d = build_datum("A1~1");
  auto lam = lam_of(d, {2});

  SUBCASE("zero path") {
    auto z = straight(d, zero_weight(d));
    CHECK(z.expr.dirs.size() == 1);
    CHECK(endpoint(d, z).is_zero());
  }
  SUBCASE("an s-fold repeated expression collapses to one segment") {
    auto p = make_path(d, {lam, lam, lam},
                       {Rational(0), Rational(1, 3), Rational(2, 3), Rational(1)});
    CHECK(p == straight(d, lam));
    CHECK(p.expr.dirs.size() == 1);
  }
  SUBCASE("merge of adjacent equal directions") {
    auto nu = reflect_simple(d, lam, 1);
    auto p = make_path(d, {lam, lam, nu},
                       {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1)});
    CHECK(p.expr.dirs.size() == 2);
    CHECK(p.expr.breaks == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1)});
  }
  SUBCASE("canonicalization is idempotent") {
    auto nu = reflect_simple(d, lam, 1);
    auto p = make_path(d, {lam, nu}, {Rational(0), Rational(1, 2), Rational(1)});
    auto q = make_path(d, p.expr.dirs, p.expr.breaks);
    CHECK(p == q);
  }
  SUBCASE("bad expressions are rejected") {
    CHECK_THROWS_AS(make_path(d, {lam}, {Rational(0), Rational(1, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(
        make_path(d, {lam, lam}, {Rational(0), Rational(2, 3), Rational(1, 3), Rational(1)}),
        std::invalid_argument);
    // endpoint varpi_1/2 + ... non-integral endpoint is rejected
    LevelZeroWeight half = Rational(1, 2) * lam_of(d, {1});
    CHECK_THROWS_AS(straight(d, half), std::invalid_argument);
  }
}

TEST_CASE("evaluate") {
  auto d = build_datum("A2~1");
  auto lam = lam_of(d, {2, 0});
  auto nu = reflect_simple(d, lam, 1);
  auto p = make_path(d, {lam, nu}, {Rational(0), Rational(1, 2), Rational(1)});
  CHECK(evaluate(p.expr, Rational(0)).is_zero());
  CHECK(evaluate(straight(d, nu).expr, Rational(1)) == nu);
  // midpoint of the second segment: pi(3/4) = lam/2 + nu/4
  CHECK(evaluate(p.expr, Rational(3, 4)) ==
        Rational(1, 2) * lam + Rational(1, 4) * nu);
  CHECK_THROWS_AS(evaluate(p.expr, Rational(2)), std::invalid_argument);
}

TEST_CASE("pointwise sum and difference") {
  auto d = build_datum("A2~1");
  auto lam = lam_of(d, {0, 3});
  auto nu = reflect_simple(d, lam, 2);
  auto p = make_path(d, {lam, nu}, {Rational(0), Rational(1, 3), Rational(1)});
  SUBCASE("adding the zero path is the identity") {
    CHECK(add(d, p, straight(d, zero_weight(d))) == p);
  }
  SUBCASE("straight lines add to the straight line of the sum") {
    CHECK(add(d, straight(d, lam), straight(d, nu)) == straight(d, lam + nu));
  }
  SUBCASE("sub then add round-trips") {
    auto shift = straight(d, delta_multiple(d, Rational(3)));
    CHECK(add(d, sub(d, p, shift), shift) == p);
  }
}

TEST_CASE("h_function") {
  auto d = build_datum("A2~1");
  auto lam = lam_of(d, {2, 1});
  SUBCASE("on a dominant straight line") {
    auto p = straight(d, lam);
    auto h1 = h_function(d, p.expr, 1);
    CHECK(h1.values == std::vector<Rational>{Rational(0), Rational(2)});
    CHECK(h1.min() == Rational(0));
    auto h0 = h_function(d, p.expr, 0);
    CHECK(h0.values.back() == Rational(-3));  // -(a_1^vee m_1 + a_2^vee m_2)
    CHECK(h0.min() == Rational(-3));
  }
  SUBCASE("minimum sits at a breakpoint of a two-segment path") {
    auto nu = reflect_simple(d, lam, 1);
    auto p = make_path(d, {nu, lam}, {Rational(0), Rational(1, 2), Rational(1)});
    auto h = h_function(d, p.expr, 1);
    REQUIRE(h.values.size() == 3);
    CHECK(h.values[1] == Rational(-1));
    CHECK(h.min() == Rational(-1));
  }
}

TEST_CASE("root operators on straight dominant lines") {
  auto d = build_datum("A1~1");
  auto w1 = lam_of(d, {1});
  auto p = straight(d, w1);

  SUBCASE("e_j pi_lambda vanishes for j in I0") { CHECK(!root_e(d, p, 1)); }
  SUBCASE("f_1 pi_{varpi_1} reflects the whole line") {
    auto q = root_f(d, p, 1);
    REQUIRE(q);
    CHECK(*q == straight(d, reflect_simple(d, w1, 1)));
    CHECK(!root_f(d, *q, 1));
  }
  SUBCASE("f_0 on pi_{varpi_1} vanishes, e_0 reflects the whole line") {
    CHECK(!root_f(d, p, 0));
    auto q = root_e(d, p, 0);
    REQUIRE(q);
    // eps_0 = 1, so the reflection window is all of [0,1]: a delta-shifted line
    CHECK(*q == straight(d, reflect_simple(d, w1, 0)));
    CHECK(endpoint(d, *q) == w1 + simple_root_weight(d, 0));
    CHECK(endpoint(d, *q).delta == Rational(1));
  }
}

TEST_CASE("twisted case: e_0 on pi_{varpi_1} in A_2^(2)") {
  auto d = build_datum("A2~2");
  auto w1 = lam_of(d, {1});
  auto p = straight(d, w1);
  CHECK(pairing_h(d, w1, 0) == Rational(-2));
  auto q = root_e(d, p, 0);
  REQUIRE(q);
  REQUIRE(q->expr.breaks.size() == 3);
  CHECK(q->expr.breaks[1] == Rational(1, 2));
  CHECK(q->expr.dirs[1] == w1 + Rational(2) * simple_root_weight(d, 0));
  CHECK(endpoint(d, *q) == w1 + simple_root_weight(d, 0));
  CHECK(endpoint(d, *q).delta == Rational(1, 2));
  auto q2 = root_e(d, *q, 0);
  REQUIRE(q2);
  CHECK(!root_e(d, *q2, 0));  // eps_0(pi_lambda) = 2 exhausted
}

TEST_CASE("operator inverse property and weight shifts") {
  auto d = build_datum("A2~1");
  auto lam = lam_of(d, {2, 1});
  std::vector<Path> pool{straight(d, lam)};
  for (int round = 0; round < 3; ++round) {
    std::vector<Path> next;
    for (const auto& p : pool)
      for (int j = 0; j <= d.l; ++j) {
        if (auto q = root_f(d, p, j)) next.push_back(*q);
        if (auto q = root_e(d, p, j)) next.push_back(*q);
      }
    pool.insert(pool.end(), next.begin(), next.end());
  }
  CHECK(pool.size() > 10);
  for (const auto& p : pool)
    for (int j = 0; j <= d.l; ++j) {
      if (auto fp = root_f(d, p, j)) {
        CHECK(endpoint(d, *fp) == endpoint(d, p) - simple_root_weight(d, j));
        auto back = root_e(d, *fp, j);
        REQUIRE(back);
        CHECK(*back == p);
      }
      if (auto ep = root_e(d, p, j)) {
        CHECK(endpoint(d, *ep) == endpoint(d, p) + simple_root_weight(d, j));
        auto back = root_f(d, *ep, j);
        REQUIRE(back);
        CHECK(*back == p);
      }
    }
}

TEST_CASE("epsilon and phi") {
  auto d = build_datum("A2~1");
  auto lam = lam_of(d, {2, 1});
  auto p = straight(d, lam);
  CHECK(epsilon(d, p, 1) == 0);
  CHECK(epsilon(d, p, 2) == 0);
  CHECK(phi(d, p, 1) == 2);
  CHECK(phi(d, p, 2) == 1);
  CHECK(epsilon(d, p, 0) == 3);  // -lambda(h_0)
  CHECK(phi(d, p, 0) == 0);
  SUBCASE("phi - epsilon equals the endpoint pairing") {
    std::vector<Path> pool{p};
    for (int j : {1, 0, 2, 1}) {
      auto q = root_f(d, pool.back(), j);
      if (q) pool.push_back(*q);
      auto r = root_e(d, pool.back(), j);
      if (r) pool.push_back(*r);
    }
    for (const auto& x : pool)
      for (int j = 0; j <= d.l; ++j)
        CHECK(Rational(phi(d, x, j) - epsilon(d, x, j)) ==
              pairing_h(d, endpoint(d, x), j));
  }
  SUBCASE("closed forms against h_function") {
    auto h = h_function(d, p.expr, 0);
    CHECK(Rational(epsilon(d, p, 0)) == -h.min());
    CHECK(Rational(phi(d, p, 0)) == h.values.back() - h.min());
  }
  SUBCASE("non-integral minima are rejected") {
    // H_1 dips to -1/2 at t = 1/4 while the endpoint stays integral
    auto nu = reflect_simple(d, lam, 1);
    auto mixed = make_path(d, {nu, lam, nu},
                           {Rational(0), Rational(1, 4), Rational(3, 4), Rational(1)});
    auto h = h_function(d, mixed.expr, 1);
    REQUIRE(!h.min().is_integer());
    CHECK_THROWS_AS(epsilon(d, mixed, 1), std::domain_error);
  }
}

TEST_CASE("Weyl operators S_j and S_w") {
  auto d = build_datum("A2~1");
  auto lam = lam_of(d, {2, 1});

  SUBCASE("S_w on straight lines is the Weyl action on weights") {
    for (const std::vector<int>& word :
         {std::vector<int>{1}, {2}, {0}, {1, 2}, {0, 1}, {2, 1, 0}, {0, 1, 2, 1}}) {
      LevelZeroWeight w = lam;
      for (std::size_t i = word.size(); i-- > 0;) w = reflect_simple(d, w, word[i]);
      CHECK(s_w(d, straight(d, lam), word) == straight(d, w));
    }
  }
  SUBCASE("S_j is an involution on paths") {
    auto p = *root_f(d, straight(d, lam), 1);
    for (int j = 0; j <= d.l; ++j) CHECK(s_j(d, s_j(d, p, j), j) == p);
  }
  SUBCASE("single-letter word reflects the straight line") {
    CHECK(s_w(d, straight(d, lam), {1}) == straight(d, reflect_simple(d, lam, 1)));
  }
}

TEST_CASE("classical projection") {
  auto d = build_datum("A2~1");
  auto lam = lam_of(d, {1, 1});

  SUBCASE("cl kills pure delta lines") {
    auto z = cl(d, straight(d, delta_multiple(d, Rational(2))));
    CHECK(endpoint(d, z).is_zero());
    CHECK(z.expr.dirs.size() == 1);
  }
  SUBCASE("cl is invariant under adding delta lines") {
    auto p = *root_f(d, straight(d, lam), 1);
    CHECK(cl(d, add(d, p, straight(d, delta_multiple(d, Rational(3))))) == cl(d, p));
  }
  SUBCASE("cl commutes with the root operators") {
    std::vector<Path> pool{straight(d, lam)};
    for (int round = 0; round < 2; ++round) {
      std::vector<Path> next;
      for (const auto& p : pool)
        for (int j = 0; j <= d.l; ++j) {
          if (auto q = root_f(d, p, j)) next.push_back(*q);
          if (auto q = root_e(d, p, j)) next.push_back(*q);
        }
      pool.insert(pool.end(), next.begin(), next.end());
    }
    for (const auto& p : pool)
      for (int j = 0; j <= d.l; ++j) {
        auto fp = root_f(d, p, j);
        auto fc = root_f(d, cl(d, p), j);
        CHECK(fp.has_value() == fc.has_value());
        if (fp) CHECK(cl(d, *fp) == *fc);
        auto ep = root_e(d, p, j);
        auto ec = root_e(d, cl(d, p), j);
        CHECK(ep.has_value() == ec.has_value());
        if (ep) CHECK(cl(d, *ep) == *ec);
      }
  }
  SUBCASE("cl commutes with S_w") {
    auto p = *root_f(d, straight(d, lam), 2);
    for (const std::vector<int>& word : {std::vector<int>{0}, {1, 0}, {2, 0, 1}}) {
      CHECK(cl(d, s_w(d, p, word)) == s_w(d, cl(d, p), word));
    }
  }
}

TEST_CASE("delta-shift equivariance of the root operators") {
  auto d = build_datum("A2~2");
  auto lam = lam_of(d, {2});
  auto p = *root_f(d, straight(d, lam), 1);
  for (const auto& n : {Rational(1), Rational(1, 2), Rational(-3, 2)}) {
    auto shifted = add(d, p, straight(d, delta_multiple(d, n)));
    for (int j = 0; j <= d.l; ++j) {
      auto a = root_f(d, p, j);
      auto b = root_f(d, shifted, j);
      CHECK(a.has_value() == b.has_value());
      if (a) CHECK(add(d, *a, straight(d, delta_multiple(d, n))) == *b);
      auto ea = root_e(d, p, j);
      auto eb = root_e(d, shifted, j);
      CHECK(ea.has_value() == eb.has_value());
      if (ea) CHECK(add(d, *ea, straight(d, delta_multiple(d, n))) == *eb);
    }
  }
}
