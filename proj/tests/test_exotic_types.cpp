// Structural checks on the twisted and exceptional table entries that the
// main verification grid does not reach.

#include "doctest.h"
#include "lspaths/affinization.hpp"

using namespace lspaths;

namespace {

LsContext ctx_of(const char* label, std::initializer_list<long long> m) {
  auto d = build_datum(label);
  return make_ls_context(d, DominantShape{m});
}

}  // namespace

TEST_CASE("fundamental classical crystals have the expected cardinalities") {
  struct Row {
    const char* label;
    std::vector<long long> m;
    int size;
    long long dlam;
  };
  // sizes equal the dimensions of the corresponding level-zero fundamental
  // modules, computed here by operator closure
  for (const Row& r : {Row{"D4~3", {1, 0}, 8, 1},  Row{"D4~3", {0, 1}, 29, 3},
                       Row{"A4~2", {1, 0}, 5, 1},  Row{"A4~2", {0, 1}, 10, 1},
                       Row{"D3~2", {1, 0}, 6, 2},  Row{"D3~2", {0, 1}, 4, 1},
                       Row{"G2~1", {1, 0}, 15, 1}, Row{"G2~1", {0, 1}, 7, 1},
                       Row{"A5~2", {1, 0, 0}, 6, 1}, Row{"E6~2", {1, 0, 0, 0}, 27, 1},
                       Row{"B3~1", {0, 0, 1}, 8, 1}, Row{"D5~2", {1, 0, 0, 0}, 10, 2},
                       Row{"C2~1", {1, 0}, 4, 1},  Row{"C2~1", {0, 1}, 5, 1}}) {
    CAPTURE(r.label);
    auto d = build_datum(r.label);
    auto full = make_ls_context(d, DominantShape{r.m});
    CHECK(full.bcl.graph.size() == r.size);
    CHECK(full.dlam == r.dlam);
  }
}

TEST_CASE("simplicity and tensor splitting on exotic types") {
  struct Row {
    const char* label;
    std::vector<long long> m;
  };
  for (const Row& r : {Row{"D4~3", {1, 1}}, Row{"A4~2", {1, 1}}, Row{"D3~2", {2, 0}},
                       Row{"G2~1", {0, 2}}, Row{"A5~2", {1, 0, 1}}, Row{"D5~2", {0, 0, 0, 1}},
                       Row{"E6~2", {0, 0, 0, 1}}}) {
    CAPTURE(r.label);
    auto d = build_datum(r.label);
    auto ctx = make_ls_context(d, DominantShape{r.m});
    auto report = verify_simple(ctx);
    for (const auto& v : report.violations) MESSAGE(v);
    CHECK(report.passed());
    auto t = fundamental_tensor(d, DominantShape{r.m});
    CHECK(rooted_isomorphic(ctx.bcl.graph, ctx.bcl.graph.root, t, t.root).has_value());
  }
}

TEST_CASE("component and affinization checks on twisted types beyond A_2^(2)") {
  SUBCASE("D_4^(3), lambda = 2 varpi_1: components on the d_lambda = 2 grid") {
    auto ctx = ctx_of("D4~3", {2, 0});
    CHECK(ctx.dlam == 2);
    auto report = verify_theorem_comps(ctx, 3, 4);
    for (const auto& v : report.violations) MESSAGE(v);
    CHECK(report.passed());
    CHECK(report.components.size() == 3);  // N_1 in {0, 2, 4}
  }
  SUBCASE("D_4^(3), lambda = varpi_2: theta on the d_lambda = 3 slab") {
    auto aff = make_aff_context(ctx_of("D4~3", {0, 1}));
    auto report = verify_theta(aff, Rational(3));
    for (const auto& v : report.violations) MESSAGE(v);
    CHECK(report.passed());
  }
  SUBCASE("E_6^(2), lambda = varpi_1: theta on a small slab") {
    auto aff = make_aff_context(ctx_of("E6~2", {1, 0, 0, 0}));
    auto report = verify_theta(aff, Rational(2));
    for (const auto& v : report.violations) MESSAGE(v);
    CHECK(report.passed());
  }
  SUBCASE("D_3^(2), lambda = varpi_1 + varpi_2: chains agree with the criterion") {
    auto d = build_datum("D3~2");
    DominantShape shape{{1, 1}};
    auto lam = from_shape(d, shape);
    ChainOracle oracle(d);
    // Turn is empty here; exercise the monoid route through d_lambda shifts
    CHECK(turn_set(shape).empty());
    CHECK(oracle.has(lam, lam, Rational(1, 2)));
    auto ctx = make_ls_context(d, shape);
    auto report = verify_theorem_comps(ctx, 3, 3);
    CHECK(report.passed());
    CHECK(report.components.size() == 1);
  }
}
