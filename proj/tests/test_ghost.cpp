#include "support.hpp"

#include <doctest.h>

using namespace gct;

TEST_CASE("v_g examples") {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"abelian(0|2)", "xi1*xi2"}, {"gl(1|1)", "y*x"}, {"gl(2|1)", "e31*e32*e13*e23"},
      {"osp(1|2)", "u1*v1 + 1"}, {"osp(1|4)", "u1*v1*u2*v2 + u2*v2 + 3*u1*v1 + 3"}, {"q(1)", "b"}};
  for (const auto& [s, want] : cases) {
    CAPTURE(s);
    GhostContext ctx(build_algebra(s));
    CHECK(ctx.vg().rep.to_string() == want);
    CHECK(coset_ghost_certificate(ctx, ctx.vg().rep));
    CHECK(proportional(ctx.vg().rep, v_g_generic_solve(ctx).rep));
  }
}

TEST_CASE("a wrong v_g fails the certificate") {
  GhostContext ctx(build_algebra("gl(1|1)"));
  CHECK_FALSE(coset_ghost_certificate(ctx, parse_element<Q>("y", ctx.coset(), FieldSpec{})));
  GhostContext osp(build_algebra("osp(1|2)"));
  CHECK_FALSE(coset_ghost_certificate(osp, parse_element<Q>("u1*v1 + 2", osp.coset(), FieldSpec{})));
}

TEST_CASE("semisimplicity by the counit") {
  CHECK(semisimplicity_test(GhostContext(build_algebra("osp(1|2)"))).counit == 1);
  CHECK(semisimplicity_test(GhostContext(build_algebra("osp(1|4)"))).counit == 3);
  CHECK_FALSE(semisimplicity_test(GhostContext(build_algebra("gl(1|1)"))).semisimple);
}

TEST_CASE("centre of the even part of gl(2|1)") {
  GhostContext ctx(build_algebra("gl(2|1)"));
  auto zs = center_of_even_part(ctx, 2);
  CHECK(zs.size() == 7);
  auto id = GradedAutomorphism<Q>::identity(even_subalgebra(ctx.algebra()));
  const auto& rep = *ctx.algebra().rep();
  for (const auto& z : zs) {
    Mat<Q> Z = matrix_of(rep, z);
    for (int i : ctx.algebra().even_indices()) CHECK(Z * rep.matrices[i] == rep.matrices[i] * Z);
  }
}

TEST_CASE("a_phi examples on gl(1|1)") {
  GhostContext ctx(build_algebra("gl(1|1)"));
  auto delta = GradedAutomorphism<Q>::delta(ctx.algebra_ptr());
  auto a = a_phi_element(ctx, delta);
  CHECK(a.certified);
  CHECK(a.hc->to_string() == "-2*h1 - 2*h2");
  auto sc = GradedAutomorphism<RatFunc>::scale(ctx.algebra_ptr(), RatFunc::c());
  auto b = a_phi_element(ctx, sc);
  auto f = FieldSpec::parse("ratfun-c");
  CHECK(b.element == parse_element<RatFunc>("((-c^2+2*c-1)/c)*y*x + (c-1)*(h1+h2)", ctx.hc(), f));
  CHECK_THROWS_AS(a_phi_element(ctx, GradedAutomorphism<Q>::identity(ctx.algebra_ptr())), Unsupported);
}

TEST_CASE("a_phi respects the filtration bound") {
  std::mt19937_64 rng(31);
  for (const auto& s : {"gl(1|1)", "gl(2|1)", "osp(1|2)"}) {
    GhostContext ctx(build_algebra(s));
    auto delta = GradedAutomorphism<Q>::delta(ctx.algebra_ptr());
    const int fv = ctx.vg().rep.filtration_degree();
    for (const auto& z : center_of_even_part(ctx, 2)) {
      auto a = a_phi_element(ctx, delta, z);
      CHECK(a.element.filtration_degree() <= z.filtration_degree() + fv);
      CHECK(a.hc->twice_degree() <= a.element.filtration_degree());
    }
  }
}

TEST_CASE("solve_in_A_phi") {
  GhostContext ctx(build_algebra("gl(1|1)"));
  auto f = FieldSpec::parse("ratfun-c");
  auto sc = GradedAutomorphism<RatFunc>::scale(ctx.algebra_ptr(), RatFunc::c());
  auto t = promote<RatFunc>(t_g_polynomial<Q>(ctx.algebra(), ctx.borel()));
  auto g = solve_in_A_phi(ctx, sc, t * (RatFunc::c() / (RatFunc(1) - RatFunc::c())));
  CHECK(g.element == parse_element<RatFunc>("y*x + (c/(1-c))*(h1+h2)", ctx.hc(), f));
  auto delta = GradedAutomorphism<Q>::delta(ctx.algebra_ptr());
  CHECK_THROWS_AS(solve_in_A_phi(ctx, delta, parse_cartan_polynomial<Q>("h1", ctx.hc(), ctx.borel(), FieldSpec{})), MembershipError);
  CHECK_THROWS_AS(solve_in_A_phi(ctx, delta, parse_cartan_polynomial<Q>("(h1+h2)^3", ctx.hc(), ctx.borel(), FieldSpec{}), 0), BudgetExceeded);
}

TEST_CASE("Vandermonde decomposition") {
  GhostContext ctx(build_algebra("gl(1|1)"));
  auto f = FieldSpec::parse("ratfun-c");
  auto sc = GradedAutomorphism<RatFunc>::scale(ctx.algebra_ptr(), RatFunc::c());
  auto u = parse_element<RatFunc>("y*x + (c/(1-c))*(h1+h2)", ctx.hc(), f);
  GhostElement<RatFunc> ge{u, sc, certify_invariant(sc, u), hc_image(ctx, u)};
  REQUIRE(ge.certified);
  CHECK_THROWS_AS(vandermonde_decompose(ctx, ge, 1, f), DecompositionMismatch);
  auto d = vandermonde_decompose(ctx, ge, 2, f);
  CHECK(d.exact);
  UEAElement<RatFunc> sum(ctx.hc());
  for (const auto& p : d.parts) {
    CHECK(certify_invariant(p.phi, p.element));
    sum += p.element;
  }
  CHECK(sum == u);
  GhostContext q(build_algebra("gl(1|1)"));
  auto a = a_phi_element(q, GradedAutomorphism<Q>::delta(q.algebra_ptr()));
  CHECK_THROWS_AS(vandermonde_decompose(q, a, 3, FieldSpec{}), FieldMismatch);
}

TEST_CASE("Z_full is closed under products") {
  GhostContext ctx(build_algebra("gl(2|1)"));
  auto delta = GradedAutomorphism<Q>::delta(ctx.algebra_ptr());
  auto zs = center_of_even_part(ctx, 2);
  auto a = a_phi_element(ctx, delta, zs[1]), b = a_phi_element(ctx, delta, zs[2]);
  auto ab = product_into_twisted(ctx, a, b);
  CHECK(ab.certified);
  CHECK(ab.phi.kind() == GradedAutomorphism<Q>::Kind::identity);
  auto id = GradedAutomorphism<Q>::identity(ctx.algebra_ptr());
  auto central = central_subset_sum_element(ctx).element;
  CHECK(certify_invariant(delta, central * a.element));
  CHECK(certify_invariant(id, central * central));
  CHECK(*ab.hc == *a.hc * *b.hc);
}

TEST_CASE("central elements and the limit") {
  GhostContext g11(build_algebra("gl(1|1)"));
  auto r = central_subset_sum_element(g11);
  CHECK(r.sign_rule == "displayed");
  CHECK(r.element == parse(g11, "h1 + h2"));
  GhostContext g21(build_algebra("gl(2|1)"));
  auto r2 = central_subset_sum_element(g21);
  CHECK(r2.ratio == -1);
  CHECK_FALSE(certify_invariant(GradedAutomorphism<Q>::identity(g21.algebra_ptr()), subset_sum(g21, true)));
  CHECK(proportional(limit_to_center(g21, t_g_polynomial<Q>(g21.algebra(), g21.borel())), r2.element));
  const auto& rep = *g21.algebra().rep();
  Mat<Q> Z = matrix_of(rep, r2.element);
  for (int i = 0; i < g21.algebra().dim(); ++i) {
    Mat<Q> X = rep.matrices[i];
    CHECK(Z * X == X * Z);
  }
}

TEST_CASE("projectivity polynomial examples") {
  CHECK(projectivity_polynomial(GhostContext(build_algebra("gl(1|1)"))).p.to_string() == "-2*h1 - 2*h2");
  CHECK(projectivity_polynomial(GhostContext(build_algebra("osp(1|2)"))).p.to_string() == "2*h1 + 1");
  CHECK(projectivity_polynomial(GhostContext(build_algebra("abelian(0|2)"))).p.is_zero());
}
