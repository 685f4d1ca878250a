#ifndef GC_GHOST_HPP
#define GC_GHOST_HPP

#include "gc/harish_chandra.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gc {

/// Coset representative in U(g)/U(g)g_0 (coset ordering, odd words only).
struct CosetGhost {
  UEAElement<Rational> rep;
  Weight weight;
  std::string source;  ///< which closed form or "linear solve"
};

/// Algebra, Borel, engines and the cached ghost v_g.
class GhostContext {
 public:
  explicit GhostContext(AlgebraPtr g, std::optional<BorelChoice> b = std::nullopt);

  const LieSuperalgebra& algebra() const { return *g_; }
  const AlgebraPtr& algebra_ptr() const { return g_; }
  const BorelChoice& borel() const { return b_; }
  const EnginePtr& hc() const { return hc_; }
  const EnginePtr& coset() const { return coset_; }
  const std::set<int>& even_set() const { return even_; }

  /// Closed form when covered, otherwise the linear solve; cached.
  const CosetGhost& vg() const;
  /// Pair presentation of g x g (built on first use).
  const IwasawaPairPresentation& pair() const;
  const EnginePtr& pair_engine() const;

 private:
  AlgebraPtr g_;
  BorelChoice b_;
  EnginePtr hc_, coset_;
  std::set<int> even_;
  mutable std::once_flag vg_once_, pair_once_;
  mutable std::optional<CosetGhost> vg_;
  mutable std::optional<IwasawaPairPresentation> pair_;
  mutable EnginePtr pair_engine_;
};

/// Which closed form covers g, or empty.
std::string closed_form_class(const LieSuperalgebra& g);
CosetGhost v_g_closed_form(const GhostContext& ctx);
CosetGhost v_g_generic_solve(const GhostContext& ctx);
/// u * v reduces to 0 mod U(g)g_0 for every basis u.
bool coset_ghost_certificate(const GhostContext& ctx, const UEAElement<Rational>& v);
/// Lambda^top of the odd part is trivial: odd weights sum to zero and every even x has zero odd supertrace.
bool ber_trivial(const LieSuperalgebra& g);
/// Equality up to a nonzero scalar.
bool proportional(const UEAElement<Rational>& a, const UEAElement<Rational>& b);

struct SemisimplicityResult {
  bool semisimple = false;
  Rational counit = 0;
  std::string reason;
};
SemisimplicityResult semisimplicity_test(const GhostContext& ctx);

/// Basis of the weight-zero part of Z(U(g_0)) with at most d letters, in the hc engine.
std::vector<UEAElement<Rational>> center_of_even_part(const GhostContext& ctx, int d);

/// Element of A_phi with its certificate and HC image.
template <class S>
struct GhostElement {
  UEAElement<S> element;
  GradedAutomorphism<S> phi;
  bool certified = false;
  std::optional<SuperPolynomial<S>> hc;
};

template <class S>
bool certify_invariant(const GradedAutomorphism<S>& phi, const UEAElement<S>& a) {
  const int n = a.engine()->dim();
  for (int u = 0; u < n; ++u)
    if (!twisted_adjoint(phi, u, a).is_zero()) return false;
  return true;
}

/// HC image: group projection when Cartan-even, pair projection otherwise.
template <class S>
SuperPolynomial<S> hc_image(const GhostContext& ctx, const UEAElement<S>& a) {
  if (ctx.algebra().is_cartan_even()) return hc_project_group(a, ctx.borel());
  return hc_project_via_pair(a, ctx.pair(), ctx.pair_engine());
}

/// ad_phi(v_g)(z), certified against every generator.
template <class S>
GhostElement<S> a_phi_element(const GhostContext& ctx, const GradedAutomorphism<S>& phi, const UEAElement<S>& z) {
  if (!phi.fixed_point_free()) throw Unsupported("automorphism " + phi.describe() + " fixes odd vectors");
  const CosetGhost& v = ctx.vg();
  UEAElement<S> zz = reorder(z, ctx.hc());
  UEAElement<S> out(ctx.hc());
  for (const auto& [w, c] : v.rep.terms())
    out += twisted_adjoint_monomial(phi, ctx.coset()->basis_word(w), zz) * S(c);
  if (!certify_invariant(phi, out)) throw InvarianceError("ad_phi(v_g)(z) is not ad_phi-invariant");
  if (out.is_zero() && !zz.is_zero()) throw InjectivityViolation("ad_phi(v_g) killed a nonzero z");
  GhostElement<S> g{out, phi, true, std::nullopt};
  g.hc = hc_image(ctx, out);
  return g;
}

template <class S>
GhostElement<S> a_phi_element(const GhostContext& ctx, const GradedAutomorphism<S>& phi) {
  return a_phi_element(ctx, phi, UEAElement<S>::one(ctx.hc()));
}

struct ProjectivityResult {
  SuperPolynomial<Rational> p, p1, bH;
  std::string route;  ///< "group" or "pair"
  std::string xi;
  int degree_bound = -1;  ///< dim b_1 in the pair route
  std::vector<std::string> factors;
};
ProjectivityResult projectivity_polynomial(const GhostContext& ctx);

/// t_g divides p and p is rho-shifted Weyl invariant.
template <class S>
bool hc_membership(const GhostContext& ctx, const SuperPolynomial<S>& p) {
  if (p.is_zero()) return true;
  auto t = t_g_polynomial<S>(ctx.algebra(), ctx.borel());
  return p.divide_exact(t).has_value() && rho_shifted_weyl_check(p, ctx.algebra(), ctx.borel());
}

namespace detail {
template <class S>
struct KeyIds {
  std::map<typename SuperPolynomial<S>::Key, int> ids;
  int operator()(const typename SuperPolynomial<S>::Key& k) {
    auto [it, ins] = ids.emplace(k, static_cast<int>(ids.size()));
    return it->second;
  }
};
template <class S>
SparseVec<S> poly_vector(const SuperPolynomial<S>& p, KeyIds<S>& ids, int offset = 0) {
  SparseVec<S> v;
  for (const auto& [k, c] : p.terms()) v.emplace(offset + ids(k), c);
  return v;
}
std::vector<Word> weight_zero_words(const EnginePtr& e, int max_filtration);
}  // namespace detail

/// Unique element of Z(U(g)) with HC = target, searched among words of filtration <= 2 deg(target).
template <class S>
GhostElement<S> solve_central(const GhostContext& ctx, const SuperPolynomial<S>& target) {
  auto id = GradedAutomorphism<S>::identity(ctx.algebra_ptr());
  const EnginePtr& e = ctx.hc();
  if (target.is_zero()) return {UEAElement<S>(e), id, true, target};
  const int F = std::max(0, target.twice_degree());
  auto words = detail::weight_zero_words(e, F);
  const int n = e->dim();
  const int stride = 1 << 20;
  std::map<Word, int, WordLess> wid;
  detail::KeyIds<S> kid;
  auto word_id = [&](const Word& w) {
    auto [it, ins] = wid.emplace(w, static_cast<int>(wid.size()));
    return it->second;
  };
  SparseEchelon<S> ech;
  const auto idq = GradedAutomorphism<Rational>::identity(ctx.algebra_ptr());
  for (std::size_t j = 0; j < words.size(); ++j) {
    UEAElement<Rational> m(e);
    m.add_term(words[j], Rational(1));
    SparseVec<S> img;
    for (int u = 0; u < n; ++u) {
      auto br = twisted_adjoint(idq, u, m);
      for (const auto& [w, c] : br.terms()) img.emplace((u + 1) * stride + word_id(w), S(c));
    }
    auto h = hc_project_group(promote<S>(m), ctx.borel());
    for (const auto& [k, c] : h.terms()) img.emplace(kid(k), c);
    if (auto ker = ech.insert(static_cast<int>(j), std::move(img)))
      throw InjectivityViolation("a nonzero central element has zero HC image");
  }
  auto x = ech.express(detail::poly_vector(target, kid));
  if (!x) throw BudgetExceeded("no central element of filtration <= " + std::to_string(F) + " has this HC image");
  UEAElement<S> out(e);
  for (const auto& [j, c] : *x) out.add_term(words[j], c);
  GhostElement<S> g{out, id, certify_invariant(id, out), std::nullopt};
  if (!g.certified) throw InvarianceError("central solve produced a non-central element");
  g.hc = hc_project_group(out, ctx.borel());
  return g;
}

/// Unique element of A_phi with HC = target, spanned by a_phi(z_k) for z_k in the even centre up to `budget` letters.
template <class S>
GhostElement<S> solve_in_A_phi(const GhostContext& ctx, const GradedAutomorphism<S>& phi,
                               const SuperPolynomial<S>& target, std::optional<int> budget = std::nullopt) {
  if (!ctx.algebra().is_cartan_even()) throw Unsupported("solve_in_A_phi needs a Cartan-even algebra");
  if (phi.kind() == GradedAutomorphism<S>::Kind::identity) return solve_central(ctx, target);
  if (!hc_membership(ctx, target))
    throw MembershipError("target is not a rho-shifted Weyl invariant multiple of t_g");
  if (target.is_zero()) return {UEAElement<S>(ctx.hc()), phi, true, target};
  auto t = t_g_polynomial<S>(ctx.algebra(), ctx.borel());
  const int d = budget.value_or((target.twice_degree() - t.twice_degree()) / 2);
  if (d < 0) throw BudgetExceeded("negative degree budget");
  auto zs = center_of_even_part(ctx, d);
  detail::KeyIds<S> kid;
  SparseEchelon<S> ech;
  std::vector<UEAElement<S>> as;
  for (std::size_t k = 0; k < zs.size(); ++k) {
    auto a = a_phi_element(ctx, phi, promote<S>(zs[k]));
    if (ech.insert(static_cast<int>(k), detail::poly_vector(*a.hc, kid)))
      throw InjectivityViolation("HC is not injective on the computed span of A_phi");
    as.push_back(std::move(a.element));
  }
  auto x = ech.express(detail::poly_vector(target, kid));
  if (!x) throw BudgetExceeded("target not reached with even-centre degree <= " + std::to_string(d));
  UEAElement<S> out(ctx.hc());
  for (const auto& [k, c] : *x) out += as[k] * c;
  GhostElement<S> g{out, phi, certify_invariant(phi, out), std::nullopt};
  if (!g.certified) throw InvarianceError("solution is not ad_phi-invariant");
  g.hc = hc_image(ctx, out);
  return g;
}

/// Twist scalar s of an automorphism acting as s on g_-1 (identity -> 1, delta -> -1).
template <class S>
S twist_scalar(const GradedAutomorphism<S>& phi) {
  using K = typename GradedAutomorphism<S>::Kind;
  switch (phi.kind()) {
    case K::identity: return S(1);
    case K::delta: return S(-1);
    case K::scale: return phi.scalar();
    case K::matrix: break;
  }
  throw Unsupported("Vandermonde decomposition needs a graded automorphism");
}

template <class S>
struct Decomposition {
  int components = 0;
  std::vector<S> coefficients;       ///< a_i
  std::vector<GhostElement<S>> parts;  ///< a_i u_i
  bool exact = false;
  UEAElement<S> residual;
};

/// u = sum_i a_i u_i with u_i in A_{zeta^i} and c^{-j} = sum_i a_i zeta^{-ij}, j < M; throws DecompositionMismatch.
template <class S>
Decomposition<S> vandermonde_decompose(const GhostContext& ctx, const GhostElement<S>& u, int M,
                                       const FieldSpec& field) {
  if (M < 1) throw Unsupported("component count must be positive");
  auto zeta = FieldTraits<S>::root_of_unity(M, field);
  if (!zeta) throw FieldMismatch("field " + field.name() + " does not contain a primitive " + std::to_string(M) + "-th root of unity");
  const S c = twist_scalar(u.phi);
  const S cinv = S(1) / c, zinv = S(1) / *zeta;
  Mat<S> A(M, M);
  Vec<S> rhs(M);
  for (int j = 0; j < M; ++j) {
    S cp(1), zj(1);
    for (int t = 0; t < j; ++t) { cp = cp * cinv; zj = zj * zinv; }
    rhs(j) = cp;
    S zij(1);
    for (int i = 0; i < M; ++i) {
      A(j, i) = zij;
      zij = zij * zj;
    }
  }
  auto a = solve(A, rhs);
  if (!a) throw DecompositionMismatch("singular Vandermonde system", "");
  const SuperPolynomial<S> p = u.hc ? *u.hc : hc_image(ctx, u.element);
  Decomposition<S> d;
  d.components = M;
  d.residual = u.element;
  S zi(1);
  for (int i = 0; i < M; ++i) {
    d.coefficients.push_back((*a)(i));
    if (!is_zero((*a)(i))) {
      GradedAutomorphism<S> phi = zi == S(1) ? GradedAutomorphism<S>::identity(ctx.algebra_ptr())
                                             : GradedAutomorphism<S>::scale(ctx.algebra_ptr(), zi);
      GhostElement<S> ui = solve_in_A_phi(ctx, phi, p);
      ui.element *= (*a)(i);
      if (ui.hc) *ui.hc *= (*a)(i);
      d.residual -= ui.element;
      d.parts.push_back(std::move(ui));
    }
    zi = zi * *zeta;
  }
  d.exact = d.residual.is_zero();
  if (!d.exact) throw DecompositionMismatch("reconstruction with " + std::to_string(M) + " components leaves a residual",
                                            d.residual.to_string());
  return d;
}

struct SubsetSumResult {
  UEAElement<Rational> element;
  std::string sign_rule;  ///< "displayed" or "expansion"
  SuperPolynomial<Rational> hc;
  Rational ratio;  ///< hc = ratio * t_g
};
/// sum over I of sign(I) u_{I^c} V u~_I with u in g_1 and V the product of g_-1.
SubsetSumResult central_subset_sum_element(const GhostContext& ctx);
/// The displayed sign (-1)^{N l + sum I} or the expansion sign (-1)^{l + sum I}.
UEAElement<Rational> subset_sum(const GhostContext& ctx, bool displayed_sign);

/// The scale_c family with HC = p, evaluated at c = 1.
UEAElement<Rational> limit_to_center(const GhostContext& ctx, const SuperPolynomial<Rational>& p);

/// a * b certified in A_{psi phi}.
template <class S>
GhostElement<S> product_into_twisted(const GhostContext& ctx, const GhostElement<S>& a, const GhostElement<S>& b) {
  GradedAutomorphism<S> phi = b.phi.compose(a.phi);
  UEAElement<S> ab = a.element * b.element;
  if (!certify_invariant(phi, ab)) throw InvarianceError("product is not invariant under " + phi.describe());
  GhostElement<S> g{ab, phi, true, std::nullopt};
  g.hc = hc_image(ctx, ab);
  return g;
}

}  // namespace gc

#endif
