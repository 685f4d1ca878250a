#include "support.hpp"

#include <doctest.h>

using namespace gct;

TEST_CASE("gl(1|1) modules") {
  GhostContext ctx(build_algebra("gl(1|1)"));
  auto L = build_highest_weight_irreducible(ctx.algebra_ptr(), ctx.borel(), weight({1, 0}));
  CHECK(L.dim() == 2);
  CHECK(twisted_trace_poly(L).to_string() == "-c + 1");
  CHECK(T_g_action_check(ctx, L).classification == "invertible");
  auto A = build_highest_weight_irreducible(ctx.algebra_ptr(), ctx.borel(), weight({1, -1}));
  CHECK(A.dim() == 1);
  CHECK_FALSE(A.typical);
  CHECK(T_g_action_check(ctx, A).classification == "zero");
}

TEST_CASE("gl(2|1) modules") {
  GhostContext ctx(build_algebra("gl(2|1)"));
  auto K = build_kac_module(ctx.algebra_ptr(), ctx.borel(), weight({1, 0, 0}));
  CHECK(K.dim() == 8);
  CHECK(bracket_fidelity(K).empty());
  auto L = build_highest_weight_irreducible(ctx.algebra_ptr(), ctx.borel(), weight({1, 0, 0}));
  CHECK(L.dim() == 3);
  auto T = build_kac_module(ctx.algebra_ptr(), ctx.borel(), weight({2, 0, -2}));
  CHECK(T.dim() == 12);
  CHECK(T.graded_dim(-1) == 6);
  CHECK(twisted_trace_poly(T) == UPoly(3) * (UPoly(1) - UPoly::x()) * (UPoly(1) - UPoly::x()));
  CHECK_THROWS_AS(build_kac_module(ctx.algebra_ptr(), ctx.borel(), weight({0, 1, 0})), NotDominant);
}

TEST_CASE("osp(1|2) irreducibles") {
  GhostContext ctx(build_algebra("osp(1|2)"));
  for (int l = 0; l <= 4; ++l) {
    auto L = build_highest_weight_irreducible(ctx.algebra_ptr(), ctx.borel(), weight({l}));
    CHECK(L.dim() == 2 * l + 1);
    CHECK(bracket_fidelity(L).empty());
    CHECK(T_g_action_check(ctx, L).classification == "invertible");
  }
}

TEST_CASE("ghost elements act by graded constants with the twist") {
  GhostContext ctx(build_algebra("gl(2|1)"));
  auto sc = GradedAutomorphism<RatFunc>::scale(ctx.algebra_ptr(), RatFunc::c());
  auto a = a_phi_element(ctx, sc);
  Weight lam = weight({2, 0, -2});
  auto K = build_kac_module(ctx.algebra_ptr(), ctx.borel(), lam);
  auto r = graded_constant_check(a.element, K);
  REQUIRE(r.ok);
  RatFunc p = a.hc->evaluate(lam);
  CHECK(r.scalars.at(0) == p);
  CHECK(r.scalars.at(-1) == p / RatFunc::c());
  CHECK(r.scalars.at(-2) == p / (RatFunc::c() * RatFunc::c()));
}

TEST_CASE("a non-ghost element is not a graded constant") {
  GhostContext ctx(build_algebra("gl(2|1)"));
  auto K = build_kac_module(ctx.algebra_ptr(), ctx.borel(), weight({2, 0, -2}));
  CHECK_FALSE(graded_constant_check(parse(ctx, "h1"), K).ok);
  CHECK(graded_constant_check(parse(ctx, "h1 + h2"), K).ok);
}

TEST_CASE("module action matches the algebra brackets on random words") {
  std::mt19937_64 rng(41);
  GhostContext ctx(build_algebra("gl(2|1)"));
  auto K = build_kac_module(ctx.algebra_ptr(), ctx.borel(), weight({3, 1, 1}));
  for (int t = 0; t < 20; ++t) {
    auto w = random_word(rng, ctx.algebra().dim(), 4);
    Mat<Q> direct = Mat<Q>::Identity(K.dim(), K.dim());
    for (int i : w) direct = Mat<Q>(direct * Mat<Q>(K.rho[i]));
    CHECK(act(normal_order<Q>(ctx.hc(), w), K) == direct);
  }
}
