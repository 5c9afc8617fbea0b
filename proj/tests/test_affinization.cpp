#include "doctest.h"
#include "lspaths/affinization.hpp"

using namespace lspaths;

namespace {

AffContext context(const char* label, std::initializer_list<long long> m) {
  auto d = build_datum(label);
  return make_aff_context(make_ls_context(d, DominantShape{m}));
}

}  // namespace

TEST_CASE("affinization operators") {
  auto ctx = context("A1~1", {2});
  const auto& d = ctx.ls.datum;
  int root = ctx.ls.bcl.graph.root;

  SUBCASE("e then f returns the element") {
    for (int v = 0; v < ctx.ls.bcl.graph.size(); ++v)
      for (int j = 0; j <= d.l; ++j) {
        AffElement x{v, Rational(1)};
        if (auto up = aff_e(ctx, x, j)) {
          auto back = aff_f(ctx, *up, j);
          REQUIRE(back);
          CHECK(*back == x);
        }
      }
  }
  SUBCASE("f_0 lowers the exponent by a_0^{-1}, I_0 colors keep it") {
    AffElement x{root, Rational(0)};
    auto f1 = aff_f(ctx, x, 1);
    REQUIRE(f1);
    CHECK(f1->n == Rational(0));
    bool saw_f0 = false;
    for (int v = 0; v < ctx.ls.bcl.graph.size() && !saw_f0; ++v)
      if (auto f0 = aff_f(ctx, AffElement{v, Rational(0)}, 0)) {
        CHECK(f0->n == Rational(-1));
        if (auto e0 = aff_e(ctx, *f0, 0)) CHECK(e0->n == Rational(0));
        saw_f0 = true;
      }
    CHECK(saw_f0);
  }
  SUBCASE("exponents outside a_0^{-1} Z are rejected") {
    CHECK_THROWS_AS(aff_wt(ctx, AffElement{root, Rational(1, 3)}), std::invalid_argument);
  }
  SUBCASE("half-integer exponents are legal in A_{2l}^(2)") {
    auto tw = context("A2~2", {2});
    CHECK(aff_wt(tw, AffElement{tw.ls.bcl.graph.root, Rational(1, 2)}).delta == Rational(1, 2));
  }
}

TEST_CASE("aff_wt") {
  auto ctx = context("A1~1", {2});
  const auto& d = ctx.ls.datum;
  int root = ctx.ls.bcl.graph.root;
  CHECK(aff_wt(ctx, AffElement{root, Rational(0)}) == ctx.ls.lambda);
  CHECK(aff_wt(ctx, AffElement{root, Rational(3)}) ==
        ctx.ls.lambda + delta_multiple(d, Rational(3)));
  SUBCASE("wt(f_0 x) = wt(x) - alpha_0") {
    for (int v = 0; v < ctx.ls.bcl.graph.size(); ++v) {
      AffElement x{v, Rational(2)};
      if (auto y = aff_f(ctx, x, 0))
        CHECK(aff_wt(ctx, *y) == aff_wt(ctx, x) - simple_root_weight(d, 0));
      if (auto y = aff_e(ctx, x, 1))
        CHECK(aff_wt(ctx, *y) == aff_wt(ctx, x) + simple_root_weight(d, 1));
    }
  }
}

TEST_CASE("pi_eta_0") {
  auto ctx = context("A1~1", {2});
  const auto& d = ctx.ls.datum;

  SUBCASE("at the root it is the straight line") {
    CHECK(pi_eta_0(ctx, ctx.ls.bcl.graph.root) == straight(d, ctx.ls.lambda));
    CHECK(pi_eta_shift(ctx, ctx.ls.bcl.graph.root) == Rational(0));
  }
  SUBCASE("its endpoint has no delta component") {
    for (int v = 0; v < ctx.ls.bcl.graph.size(); ++v)
      CHECK(endpoint(d, pi_eta_0(ctx, v)).delta == Rational(0));
  }
  SUBCASE("any word reaching eta gives the same lift") {
    // walk a different word to each vertex and redo the construction
    Path seed = straight(d, ctx.ls.lambda);
    struct Probe {
      OpWord word;
      Path path;
    };
    std::vector<Probe> pool{{{}, seed}};
    for (int round = 0; round < 4; ++round) {
      std::vector<Probe> next;
      for (const auto& pr : pool)
        for (int j = 0; j <= d.l; ++j)
          for (bool low : {true, false}) {
            auto q = low ? root_f(d, pr.path, j) : root_e(d, pr.path, j);
            if (!q) continue;
            OpWord w = pr.word;
            w.push_back({low, j});
            next.push_back({std::move(w), *q});
          }
      pool.insert(pool.end(), next.begin(), next.end());
    }
    int cross_checked = 0;
    for (const auto& pr : pool) {
      int v = ctx.ls.bcl.graph.vertex_by_key(cl(d, pr.path).key());
      REQUIRE(v >= 0);
      Rational np = endpoint(d, pr.path).delta;
      Path lift = sub(d, pr.path, straight(d, delta_multiple(d, np)));
      if (!(pr.word == ctx.ls.bcl.words[v])) ++cross_checked;
      CHECK(lift == pi_eta_0(ctx, v));
    }
    CHECK(cross_checked > 10);
  }
}

TEST_CASE("theta_map") {
  auto ctx = context("A1~1", {2});
  const auto& d = ctx.ls.datum;
  int root = ctx.ls.bcl.graph.root;

  SUBCASE("on the root fiber it gives straight lines") {
    for (long long M : {-2LL, 0LL, 1LL, 3LL}) {
      Path img = theta_map(ctx, AffElement{root, Rational(M)});
      CHECK(img == straight(d, ctx.ls.lambda + delta_multiple(d, Rational(M))));
    }
  }
  SUBCASE("weight preservation and operator commutation samples") {
    for (int v = 0; v < ctx.ls.bcl.graph.size(); ++v) {
      AffElement x{v, Rational(1)};
      CHECK(aff_wt(ctx, x) == endpoint(d, theta_map(ctx, x)));
      if (auto y = aff_f(ctx, x, 1)) {
        auto img = root_f(d, theta_map(ctx, x), 1);
        REQUIRE(img);
        CHECK(theta_map(ctx, *y) == *img);
      }
    }
  }
}

TEST_CASE("condition (C)") {
  auto ctx = context("A1~1", {2});  // d_lambda = 2
  int root = ctx.ls.bcl.graph.root;
  CHECK(ctx.ls.dlam == 2);
  CHECK(condition_C(ctx, AffElement{root, Rational(0)}));
  CHECK(condition_C(ctx, AffElement{root, Rational(2)}));
  CHECK(condition_C(ctx, AffElement{root, Rational(-4)}));
  CHECK(!condition_C(ctx, AffElement{root, Rational(1)}));  // a_0^{-1} = 1 < d_lambda
  SUBCASE("matches independent B_0 membership") {
    for (long long n = -2; n <= 2; ++n) {
      AffElement x{root, Rational(n)};
      CHECK(condition_C(ctx, x) == in_B0(ctx.ls, theta_map(ctx, x)));
    }
  }
}

TEST_CASE("verify_theta passes on small instances") {
  SUBCASE("A_1^(1), lambda = 2 varpi_1") {
    auto ctx = context("A1~1", {2});
    auto report = verify_theta(ctx, Rational(3 * ctx.ls.dlam));
    CHECK(report.passed());
    CHECK(report.elements_checked ==
          ctx.ls.bcl.graph.size() * (2 * 3 * ctx.ls.dlam + 1));
    CHECK(report.edges_checked == static_cast<long long>(ctx.ls.bcl.graph.f_edges.size()));
    if (!report.passed())
      for (const auto& v : report.violations) MESSAGE(v);
  }
  SUBCASE("twisted A_2^(2), lambda = varpi_1 (half-integer slab)") {
    auto ctx = context("A2~2", {1});
    auto report = verify_theta(ctx, Rational(2));
    CHECK(report.passed());
    if (!report.passed())
      for (const auto& v : report.violations) MESSAGE(v);
  }
  SUBCASE("A_2^(1), lambda = varpi_1 + varpi_2 (connected case)") {
    auto ctx = context("A2~1", {1, 1});
    auto report = verify_theta(ctx, Rational(2));
    CHECK(report.passed());
    if (!report.passed())
      for (const auto& v : report.violations) MESSAGE(v);
  }
}
