#include "support.hpp"

#include <doctest.h>

using namespace gct;

namespace {

/// Coefficient of the highest weight vector in a v_lambda, read off the module action.
Q highest_weight_scalar(const UEAElement<Q>& a, const GradedModule& m) {
  int top = -1;
  for (int i = 0; i < m.dim(); ++i)
    if (m.basis[i].degree == 0 && m.basis[i].weight == m.highest_weight) top = i;
  REQUIRE(top >= 0);
  Mat<Q> A = act(a, m);
  for (int i = 0; i < m.dim(); ++i)
    if (i != top) REQUIRE(A(i, top) == 0);
  return A(top, top);
}

}  // namespace

TEST_CASE("t_g for the type I examples") {
  GhostContext g11(build_algebra("gl(1|1)")), g21(build_algebra("gl(2|1)"));
  auto t11 = t_g_polynomial<Q>(g11.algebra(), g11.borel());
  CHECK(t11 == parse_cartan_polynomial<Q>("h1 + h2", g11.hc(), g11.borel(), FieldSpec{}));
  auto t21 = t_g_polynomial<Q>(g21.algebra(), g21.borel());
  CHECK(t21 == parse_cartan_polynomial<Q>("(h1 + h3 + 1)*(h2 + h3)", g21.hc(), g21.borel(), FieldSpec{}));
}

TEST_CASE("HC value at lambda equals the highest weight scalar on the Kac module") {
  std::mt19937_64 rng(21);
  for (const auto& [s, lam] : std::vector<std::pair<std::string, Weight>>{
           {"gl(1|1)", weight({2, -1})}, {"gl(1|1)", weight({1, -1})}, {"gl(2|1)", weight({2, 0, -2})}, {"gl(2|1)", weight({1, 0, 0})}}) {
    CAPTURE(s);
    GhostContext ctx(build_algebra(s));
    auto K = build_kac_module(ctx.algebra_ptr(), ctx.borel(), lam);
    for (int t = 0; t < 15; ++t) {
      auto a = random_weight_zero(ctx, rng, 3);
      CHECK(hc_project_group(a, ctx.borel()).evaluate(lam) == highest_weight_scalar(a, K));
    }
  }
}

TEST_CASE("HC is multiplicative on weight-zero elements") {
  std::mt19937_64 rng(22);
  for (const auto& s : {"gl(1|1)", "gl(2|1)", "osp(1|2)"}) {
    CAPTURE(s);
    GhostContext ctx(build_algebra(s));
    for (int t = 0; t < 15; ++t) {
      auto a = random_weight_zero(ctx, rng, 2), b = random_weight_zero(ctx, rng, 2);
      CHECK(hc_project_group(a * b, ctx.borel()) == hc_project_group(a, ctx.borel()) * hc_project_group(b, ctx.borel()));
    }
  }
}

TEST_CASE("group and pair routes agree on Cartan-even algebras") {
  std::mt19937_64 rng(23);
  for (const auto& s : {"gl(1|1)", "gl(2|1)"}) {
    CAPTURE(s);
    GhostContext ctx(build_algebra(s));
    for (int t = 0; t < 10; ++t) {
      auto a = random_weight_zero(ctx, rng, 2);
      auto via_pair = hc_project_via_pair(a, ctx.pair(), ctx.pair_engine());
      auto group = hc_project_group(a, ctx.borel());
      for (const auto& lam : {weight({1, 0, 0}), weight({2, -1, 3}), weight({0, 0, 0})}) {
        Weight l(lam.begin(), lam.begin() + ctx.algebra().rank());
        CHECK(via_pair.evaluate(l) == group.evaluate(l));
      }
    }
  }
}

TEST_CASE("HC degree is at most half the filtration degree") {
  std::mt19937_64 rng(24);
  for (const auto& s : {"gl(1|1)", "gl(2|1)", "osp(1|4)", "q(1)", "abelian(0|2)"}) {
    CAPTURE(s);
    GhostContext ctx(build_algebra(s));
    for (int t = 0; t < 40; ++t) {
      auto a = random_element(ctx.hc(), rng, 5, 3);
      CHECK(hc_image(ctx, a).twice_degree() <= a.filtration_degree());
    }
  }
}

TEST_CASE("Clifford polynomial b_H") {
  CHECK(clifford_poly_bH<Q>(*build_algebra("q(1)")).to_string() == "2*h");
  CHECK(clifford_poly_bH<Q>(*build_algebra("abelian(0|2)")).is_zero());
  CHECK(clifford_poly_bH<Q>(*build_algebra("gl(2|1)")) == SuperPolynomial<Q>::constant(cartan_ring<Q>(*build_algebra("gl(2|1)")), Q(1)));
}

TEST_CASE("shifted Weyl check accepts invariants and rejects h1") {
  GhostContext ctx(build_algebra("gl(2|1)"));
  auto p = projectivity_polynomial(ctx).p;
  CHECK(rho_shifted_weyl_check(p, ctx.algebra(), ctx.borel()));
  CHECK_FALSE(rho_shifted_weyl_check(parse_cartan_polynomial<Q>("h1", ctx.hc(), ctx.borel(), FieldSpec{}), ctx.algebra(), ctx.borel()));
  CHECK(rho_shifted_weyl_check(parse_cartan_polynomial<Q>("h1 + h2", ctx.hc(), ctx.borel(), FieldSpec{}), ctx.algebra(), ctx.borel()));
}

TEST_CASE("splitting off the top odd monomial") {
  GhostContext ctx(build_algebra("q(1)"));
  auto r = projectivity_polynomial(ctx);
  CHECK(r.route == "pair");
  CHECK(r.p1.to_string() == "2");
  CHECK(r.p.to_string() == "4*h");
}

TEST_CASE("non-Cartan target is rejected") {
  GhostContext ctx(build_algebra("gl(1|1)"));
  CHECK_THROWS_AS(parse_cartan_polynomial<Q>("x*y", ctx.hc(), ctx.borel(), FieldSpec{}), ParseError);
}
