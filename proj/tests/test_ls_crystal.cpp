#include "doctest.h"
#include "lspaths/ls_crystal.hpp"

using namespace lspaths;

TEST_CASE("turn_set") {
  CHECK(turn_set(DominantShape{{1, 1}}).empty());
  CHECK(turn_set(DominantShape{{2}}) == std::vector<Rational>{Rational(1, 2)});
  CHECK(turn_set(DominantShape{{2, 3}}) ==
        std::vector<Rational>{Rational(1, 3), Rational(1, 2), Rational(2, 3)});
  CHECK(turn_set(DominantShape{{4, 2}}) ==
        std::vector<Rational>{Rational(1, 4), Rational(1, 2), Rational(3, 4)});
}

TEST_CASE("I0_lambda_p") {
  DominantShape s{{2, 3}};
  CHECK(I0_lambda_p(s, 1) == std::vector<int>{1, 2});
  CHECK(I0_lambda_p(s, 2) == std::vector<int>{1});
  CHECK(I0_lambda_p(s, 3) == std::vector<int>{2});
  CHECK(I0_lambda_p(DominantShape{{1, 1}}, 2).empty());
  CHECK(I0_lambda_p(DominantShape{{1, 0}}, 2) == std::vector<int>{2});  // m_2 = 0 is in 2Z
}

TEST_CASE("is_ls_path") {
  auto d = build_datum("A2~1");
  DominantShape shape{{1, 1}};
  auto lam = from_shape(d, shape);
  ChainOracle oracle(d);

  SUBCASE("straight lines are LS iff the direction is in the orbit") {
    CHECK(is_ls_path(d, lam, straight(d, lam), oracle).ok);
    CHECK(is_ls_path(d, lam, straight(d, reflect_simple(d, lam, 1)), oracle).ok);
    // d_lambda = 1, so lambda + delta is in W lambda
    CHECK(is_ls_path(d, lam, straight(d, lam + delta_multiple(d, Rational(1))), oracle).ok);
    auto off_orbit = straight(d, lam + simple_root_weight(d, 1));
    auto chk = is_ls_path(d, lam, off_orbit, oracle);
    CHECK(!chk.ok);
    CHECK(chk.reason.find("not in W lambda") != std::string::npos);
  }
  SUBCASE("a breakpoint without a sigma-chain is rejected") {
    auto up = lam + delta_multiple(d, Rational(2));  // in W lambda since d_lambda = 1
    REQUIRE(in_W_orbit(d, up, lam));
    auto bent = make_path(d, {up, lam}, {Rational(0), Rational(1, 2), Rational(1)});
    auto chk = is_ls_path(d, lam, bent, oracle);
    CHECK(!chk.ok);
    CHECK(chk.reason.find("no sigma-chain") != std::string::npos);
    auto bent2 = make_path(d, {lam, up}, {Rational(0), Rational(1, 2), Rational(1)});
    CHECK(!is_ls_path(d, lam, bent2, oracle).ok);
  }
  SUBCASE("root operator outputs of LS paths stay LS") {
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
    for (const auto& p : pool) {
      auto chk = is_ls_path(d, lam, p, oracle);
      CHECK(chk.ok);
      CHECK(chk.certs.size() + 1 == p.expr.dirs.size());
      for (const auto& cert : chk.certs) CHECK(validate_certificate(d, cert));
    }
  }
}

TEST_CASE("canonical_extremal") {
  auto d = build_datum("A1~1");
  auto ctx = make_ls_context(d, DominantShape{{2}});

  SUBCASE("the all-zero signature gives the straight line") {
    CHECK(canonical_extremal(ctx, {0}) == straight(d, ctx.lambda));
  }
  SUBCASE("signature (2) bends at 1/2") {
    auto p = canonical_extremal(ctx, {2});
    REQUIRE(p.expr.dirs.size() == 2);
    CHECK(p.expr.dirs[0] == ctx.lambda - delta_multiple(d, Rational(2)));
    CHECK(p.expr.dirs[1] == ctx.lambda);
    CHECK(p.expr.breaks == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1)});
    ChainOracle oracle(d);
    CHECK(is_ls_path(d, ctx.lambda, p, oracle).ok);
    CHECK(is_extremal(ctx, p));
  }
  SUBCASE("signature (1) is rejected naming the failing entry") {
    CHECK_THROWS_WITH_AS(canonical_extremal(ctx, {1}), doctest::Contains("u = 1"),
                         std::invalid_argument);
    CHECK_THROWS_AS(canonical_extremal(ctx, {0, 0}), std::invalid_argument);
  }
  SUBCASE("empty Turn set only accepts the empty signature") {
    auto d2 = build_datum("A2~1");
    auto ctx2 = make_ls_context(d2, DominantShape{{1, 1}});
    CHECK(canonical_extremal(ctx2, {}) == straight(d2, ctx2.lambda));
    CHECK_THROWS_AS(canonical_extremal(ctx2, {1}), std::invalid_argument);
  }
}

TEST_CASE("component_signature") {
  auto d = build_datum("A1~1");
  auto ctx = make_ls_context(d, DominantShape{{2}});

  SUBCASE("pi_lambda carries the zero signature") {
    CHECK(component_signature(ctx, straight(d, ctx.lambda)) == std::vector<long long>{0});
  }
  SUBCASE("round-trip through canonical_extremal") {
    for (long long n : {0LL, 2LL, 4LL, 6LL}) {
      auto p = canonical_extremal(ctx, {n});
      CHECK(component_signature(ctx, p) == std::vector<long long>{n});
    }
  }
  SUBCASE("signatures are invariant along operator words") {
    Path cur = canonical_extremal(ctx, {2});
    unsigned state = 0x9e3779b9u;
    for (int step = 0; step < 20; ++step) {
      std::vector<Path> moves;
      for (int j = 0; j <= d.l; ++j) {
        if (auto q = root_f(d, cur, j)) moves.push_back(*q);
        if (auto q = root_e(d, cur, j)) moves.push_back(*q);
      }
      REQUIRE(!moves.empty());
      state = state * 1664525u + 1013904223u;
      cur = moves[state % moves.size()];
      CHECK(component_signature(ctx, cur) == std::vector<long long>{2});
    }
  }
  SUBCASE("paths outside B(lambda)_cl are rejected") {
    auto other = straight(d, from_shape(d, DominantShape{{1}}));
    CHECK_THROWS_AS(component_signature(ctx, other), std::invalid_argument);
  }
}

TEST_CASE("extremal sets") {
  SUBCASE("A_2^(1), varpi_1: the whole 3-element crystal is extremal") {
    auto d = build_datum("A2~1");
    auto ctx = make_ls_context(d, DominantShape{{1, 0}});
    CHECK(ctx.bcl.graph.size() == 3);
    CHECK(extremal_cl_vertices(ctx).size() == 3);
    auto keys = extremal_cl_set(ctx);
    CHECK(keys.count(ctx.bcl.graph.vertices[ctx.bcl.graph.root].key));
  }
  SUBCASE("the extremal set is closed under every S_j") {
    auto d = build_datum("C2~1");
    auto ctx = make_ls_context(d, DominantShape{{1, 1}});
    auto ext = extremal_cl_vertices(ctx);
    for (int v : ext)
      for (int j = 0; j <= d.l; ++j) CHECK(ext.count(sj_on_graph(ctx, v, j)));
  }
  SUBCASE("interior vertices of a larger crystal are not extremal") {
    auto d = build_datum("A1~1");
    auto ctx = make_ls_context(d, DominantShape{{2}});
    CHECK(ctx.bcl.graph.size() == 4);  // B(varpi_1)_cl tensor square
    auto mid = root_f(d, ctx.bcl.elements[ctx.bcl.graph.root], 1);
    REQUIRE(mid);
    int v = ctx.bcl.graph.vertex_by_key(mid->key());
    REQUIRE(v >= 0);
    CHECK(!ctx.extremal.count(v));
    CHECK(extremal_cl_vertices(ctx).size() == 2);
  }
  SUBCASE("is_extremal on P-paths goes through cl") {
    auto d = build_datum("A1~1");
    auto ctx = make_ls_context(d, DominantShape{{2}});
    CHECK(is_extremal(ctx, straight(d, ctx.lambda)));
    // a straight line plus a delta profile stays extremal
    auto shifted = s_w(d, straight(d, ctx.lambda), find_orbit_shift_word(d, ctx.lambda,
                                                                         Rational(2)));
    CHECK(is_extremal(ctx, shifted));
    auto mid = root_f(d, straight(d, ctx.lambda), 1);
    REQUIRE(mid);
    CHECK(!is_extremal(ctx, *mid));
  }
}

TEST_CASE("find_orbit_shift_word lands on lambda + M delta") {
  auto d = build_datum("A2~1");
  auto ctx = make_ls_context(d, DominantShape{{2, 0}});
  for (long long M : {0LL, 2LL, -2LL, 4LL}) {
    auto word = find_orbit_shift_word(d, ctx.lambda, Rational(M));
    LevelZeroWeight w = ctx.lambda;
    for (std::size_t i = word.size(); i-- > 0;) w = reflect_simple(d, w, word[i]);
    CHECK(w == ctx.lambda + delta_multiple(d, Rational(M)));
  }
  CHECK_THROWS_AS(find_orbit_shift_word(d, ctx.lambda, Rational(1)), std::logic_error);
}

TEST_CASE("enumerate_signatures") {
  auto d = build_datum("A1~1");
  auto ctx = make_ls_context(d, DominantShape{{2}});
  auto sigs = enumerate_signatures(ctx, 4);
  CHECK(sigs == std::vector<std::vector<long long>>{{0}, {2}, {4}});
  auto d2 = build_datum("A2~1");
  auto ctx2 = make_ls_context(d2, DominantShape{{1, 1}});
  CHECK(enumerate_signatures(ctx2, 6) == std::vector<std::vector<long long>>{{}});
}

TEST_CASE("verify_theorem_comps at small depth") {
  auto d = build_datum("A1~1");
  auto ctx = make_ls_context(d, DominantShape{{2}});
  SUBCASE("depth 0 passes vacuously") {
    auto report = verify_theorem_comps(ctx, 0, 2);
    CHECK(report.passed());
  }
  SUBCASE("depth 4, nmax 4") {
    auto report = verify_theorem_comps(ctx, 4, 4);
    CHECK(report.passed());
    REQUIRE(report.components.size() == 3);  // N in {0, 2, 4}
    CHECK(report.invalid_signatures_rejected == 2);  // N in {1, 3}
    for (const auto& row : report.components) {
      CHECK(row.vertices > 1);
      CHECK(row.weight_lambda_count <= 1);
      CHECK(row.extremal_count == row.extremal_in_orbit);
    }
  }
}

TEST_CASE("verify_simple") {
  for (const char* label : {"A1~1", "A2~1", "C2~1", "A2~2"}) {
    CAPTURE(label);
    auto d = build_datum(label);
    DominantShape s;
    s.m.assign(d.l, 0);
    s.m[0] = 2;
    auto ctx = make_ls_context(d, s);
    auto report = verify_simple(ctx);
    CHECK(report.passed());
    CHECK(report.connected);
    CHECK(report.weight_cl_lambda_count == 1);
    CHECK(report.extremal_set_is_orbit);
  }
}

TEST_CASE("weight bound and delta-shift of crystals") {
  auto d = build_datum("A2~2");
  DominantShape shape{{2}};
  auto lam = from_shape(d, shape);
  PathOps ops{d};
  auto gen = generate_depth_bounded(ops, straight(d, lam), 4);
  ChainOracle oracle(d);
  Rational a0inv = d.a0_inv();
  for (int v = 0; v < gen.graph.size(); ++v) {
    const auto& wt = gen.graph.vertices[v].wt;
    // wt in lambda - a0^{-1} Qbar_+ + a0^{-1} Z delta
    for (int i = 0; i < d.l; ++i) {
      Rational c = (lam.fin[i] - wt.fin[i]) / a0inv;
      CHECK(c.is_integer());
      CHECK(c.sign() >= 0);
    }
    CHECK((wt.delta / a0inv).is_integer());
    // wt in lambda + Q
    CHECK(detail::q_offset(d, lam, wt).has_value());
  }
  SUBCASE("B(lambda + n delta) = B(lambda) + pi_{n delta} on samples") {
    auto shift = delta_multiple(d, Rational(3, 2));
    auto lam_up = lam + shift;
    for (int v = 0; v < std::min(gen.graph.size(), 12); ++v) {
      const Path& p = gen.elements[v];
      auto moved = add(d, p, straight(d, shift));
      CHECK(is_ls_path(d, lam, p, oracle).ok == is_ls_path(d, lam_up, moved, oracle).ok);
    }
  }
}
