#ifndef GC_HARISH_CHANDRA_HPP
#define GC_HARISH_CHANDRA_HPP

#include "gc/borel.hpp"
#include "gc/pair.hpp"
#include "gc/superpoly.hpp"
#include "gc/uea.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace gc {

/// S(h) with even variables named after the Cartan even basis and odd ones after the Cartan odd basis.
template <class S>
SuperPolynomial<S> cartan_ring(const LieSuperalgebra& g, bool with_odd = false) {
  std::vector<std::string> ev, od;
  for (int i : g.cartan_even()) ev.push_back(g.basis(i).name);
  if (with_odd)
    for (int i : g.cartan_odd()) od.push_back(g.basis(i).name);
  return SuperPolynomial<S>(ev, od);
}

/// The hc engine used by default for a Borel.
inline EnginePtr hc_engine(const AlgebraPtr& g, const BorelChoice& b) {
  return make_engine(g, GeneratorOrdering::hc(*g, b));
}

/// Keeps the terms supported on Cartan generators of an hc-ordered element; no rho shift.
template <class S>
SuperPolynomial<S> hc_project_group(const UEAElement<S>& a, const BorelChoice& b) {
  if (!a.engine()) return SuperPolynomial<S>();
  const LieSuperalgebra& g = a.engine()->algebra();
  if (!g.is_cartan_even()) throw Unsupported("algebra is not Cartan-even; use the pair projection");
  EnginePtr e = a.engine();
  UEAElement<S> x = a;
  if (e->ordering().name != "hc") {
    e = hc_engine(a.engine()->algebra_ptr(), b);
    x = reorder(a, e);
  }
  std::vector<int> var(g.dim(), -1);
  for (std::size_t k = 0; k < g.cartan_even().size(); ++k) var[g.cartan_even()[k]] = static_cast<int>(k);
  SuperPolynomial<S> out = cartan_ring<S>(g);
  for (const auto& [w, c] : x.terms()) {
    auto key = out.unit_key();
    bool keep = true;
    for (auto p : w) {
      if (e->ordering().roles[p] != Role::cartan) { keep = false; break; }
      int v = var[e->basis_index(p)];
      if (v < 0) throw Unsupported("weight-zero generator outside the Cartan subalgebra");
      ++key.e[v];
    }
    if (keep) out.add_term(key, c);
  }
  return out;
}

/// Polynomial ring of a pair: even variables for a_even, odd variables for a_odd.
template <class S>
SuperPolynomial<S> pair_ring(const IwasawaPairPresentation& p) {
  std::vector<std::string> ev, od;
  for (int i : p.a_even) ev.push_back(p.host->basis(i).name);
  for (int i : p.a_odd) od.push_back(p.host->basis(i).name);
  return SuperPolynomial<S>(ev, od);
}

/// Projection along n U(g) + U(g) k; `a` must use the pair ordering n < a < k.
template <class S>
SuperPolynomial<S> hc_project_pair(const UEAElement<S>& a, const IwasawaPairPresentation& p) {
  check_iwasawa(p);
  SuperPolynomial<S> out = pair_ring<S>(p);
  if (!a.engine()) return out;
  const EnginePtr& e = a.engine();
  if (e->ordering().name != "pair") throw OrderingMismatch("pair projection needs the n < a < k ordering");
  std::vector<int> ev(e->dim(), -1), od(e->dim(), -1);
  for (std::size_t k = 0; k < p.a_even.size(); ++k) ev[p.a_even[k]] = static_cast<int>(k);
  for (std::size_t k = 0; k < p.a_odd.size(); ++k) od[p.a_odd[k]] = static_cast<int>(k);
  for (const auto& [w, c] : a.terms()) {
    auto key = out.unit_key();
    bool keep = true;
    for (auto pos : w) {
      int i = e->basis_index(pos);
      if (ev[i] >= 0) ++key.e[ev[i]];
      else if (od[i] >= 0) key.odd |= std::uint64_t(1) << od[i];
      else { keep = false; break; }
    }
    if (keep) out.add_term(key, c);
  }
  return out;
}

/// u in U(g) sent to (u x 1).1 in U(g x g)/U(g x g)k, then projected.
template <class S>
SuperPolynomial<S> hc_project_via_pair(const UEAElement<S>& a, const IwasawaPairPresentation& p,
                                       const EnginePtr& pair_engine) {
  return hc_project_pair(map_homomorphism(a, pair_engine, p.left_embedding), p);
}

/// prod over odd positive roots of (h_alpha + rho(h_alpha)).
template <class S = Rational>
SuperPolynomial<S> t_g_polynomial(const LieSuperalgebra& g, const BorelChoice& b) {
  if (!g.is_cartan_even()) throw Unsupported("t_g needs a Cartan-even algebra");
  SuperPolynomial<S> ring = cartan_ring<S>(g);
  SuperPolynomial<S> t = SuperPolynomial<S>::constant(ring, S(1));
  for (const auto& r : b.odd_positive)
    t = t * SuperPolynomial<S>::affine(ring, r.coroot, pairing(b.rho, r.coroot));
  return t;
}

/// True iff (lambda + rho)(h_alpha) = 0 for an isotropic odd positive root.
inline bool atypicality_locus_test(const Weight& lambda, const BorelChoice& b) {
  for (const auto& r : b.odd_positive) {
    if (!r.isotropic) continue;
    if (pairing(lambda, r.coroot) + pairing(b.rho, r.coroot) == 0) return true;
  }
  return false;
}

namespace detail {
template <class S>
SuperPolynomial<S> poly_det(std::vector<std::vector<SuperPolynomial<S>>> m, const SuperPolynomial<S>& ring) {
  const std::size_t n = m.size();
  if (n == 0) return SuperPolynomial<S>::constant(ring, S(1));
  SuperPolynomial<S> out = ring.empty_like();
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<SuperPolynomial<S>>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<SuperPolynomial<S>> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    SuperPolynomial<S> t = m[0][j] * poly_det(std::move(minor), ring);
    if (j % 2) out -= t;
    else out += t;
  }
  return out;
}
}  // namespace detail

/// det(lambda([u_i, u_j])) over the Cartan odd basis, as a polynomial on the Cartan even part.
template <class S = Rational>
SuperPolynomial<S> clifford_poly_bH(const LieSuperalgebra& g) {
  SuperPolynomial<S> ring = cartan_ring<S>(g);
  std::vector<int> pos(g.dim(), -1);
  for (std::size_t k = 0; k < g.cartan_even().size(); ++k) pos[g.cartan_even()[k]] = static_cast<int>(k);
  const auto& odd = g.cartan_odd();
  std::vector<std::vector<SuperPolynomial<S>>> m(odd.size(), std::vector<SuperPolynomial<S>>(odd.size(), ring));
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = 0; j < odd.size(); ++j)
      for (const auto& [k, v] : g.bracket(odd[i], odd[j])) {
        if (pos[k] < 0) throw Unsupported("bracket of odd Cartan elements leaves the even Cartan");
        m[i][j] += SuperPolynomial<S>::even_variable(ring, pos[k]) * S(v);
      }
  return detail::poly_det(std::move(m), ring);
}

/// HC(gamma) = p_gamma * xi with xi the ordered product of all odd variables.
template <class S>
struct HCSplit {
  SuperPolynomial<S> p;
  std::string xi;
};

template <class S>
HCSplit<S> split_top_odd(const SuperPolynomial<S>& image) {
  const std::size_t n = image.odd_vars().size();
  const std::uint64_t full = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
  HCSplit<S> out{SuperPolynomial<S>(image.even_vars()), ""};
  for (const auto& v : image.odd_vars()) out.xi += (out.xi.empty() ? "" : "*") + v;
  if (out.xi.empty()) out.xi = "1";
  for (const auto& [k, c] : image.terms()) {
    if (k.odd != full) throw NotGhostImage("term " + image.monomial_string(k) + " is not divisible by " + out.xi);
    out.p.add_term(typename SuperPolynomial<S>::Key{k.e, 0}, c);
  }
  return out;
}

/// Twice the HC degree against the filtration degree.
template <class S>
bool check_degree_bound(const UEAElement<S>& a, const SuperPolynomial<S>& image) {
  return image.twice_degree() <= a.filtration_degree();
}

template <class S>
bool check_degree_bound(const UEAElement<S>& a, const BorelChoice& b) {
  return check_degree_bound(a, hc_project_group(a, b));
}

/// p(s . lambda) = p(lambda) for the rho-shifted action of every even simple reflection.
template <class S>
bool rho_shifted_weyl_check(const SuperPolynomial<S>& p, const LieSuperalgebra& g, const BorelChoice& b) {
  if (!g.is_cartan_even()) throw Unsupported("Weyl action is implemented for Cartan-even algebras only");
  if (p.has_odd()) throw Unsupported("Weyl check on polynomials with odd variables");
  const int r = g.rank();
  for (const auto& root : b.even_positive) {
    if (!root.even_simple) continue;
    const Rational ah = pairing(root.weight, root.coroot);
    if (ah == 0) throw Unsupported("even root with isotropic coroot");
    Weight hv(r);
    for (int j = 0; j < r; ++j) hv[j] = root.coroot[j] * 2 / ah;
    SuperPolynomial<S> lam_hv = SuperPolynomial<S>::affine(p, hv, pairing(b.rho, hv));
    std::vector<SuperPolynomial<S>> images;
    for (int k = 0; k < r; ++k)
      images.push_back(SuperPolynomial<S>::even_variable(p, k) - lam_hv * S(root.weight[k]));
    if (p.substitute_even(images) != p) return false;
  }
  return true;
}

/// Divides out linear factors taken from the root hyperplanes h_alpha + c; whatever is left is reported as is.
template <class S>
std::vector<std::string> root_factorization(SuperPolynomial<S> p, const LieSuperalgebra& g, const BorelChoice& b) {
  std::vector<std::string> out;
  if (p.is_zero() || p.has_odd() || !g.is_cartan_even()) return out;
  std::vector<SuperPolynomial<S>> cands;
  for (const Root* r : b.positive_roots()) {
    for (int shift = -3; shift <= 3; ++shift) {
      Rational c0 = pairing(b.rho, r->coroot) + shift;
      cands.push_back(SuperPolynomial<S>::affine(p, r->coroot, c0));
      cands.push_back(SuperPolynomial<S>::affine(p, r->coroot, Rational(shift)));
    }
  }
  for (int k = 0; k < g.rank(); ++k) cands.push_back(SuperPolynomial<S>::even_variable(p, k));
  bool progress = true;
  while (progress && p.twice_degree() > 0) {
    progress = false;
    for (const auto& c : cands) {
      auto q = p.divide_exact(c);
      if (!q) continue;
      out.push_back("(" + c.to_string() + ")");
      p = *q;
      progress = true;
      break;
    }
  }
  std::sort(out.begin(), out.end());
  out.insert(out.begin(), "(" + p.to_string() + ")");
  return out;
}

}  // namespace gc

#endif
