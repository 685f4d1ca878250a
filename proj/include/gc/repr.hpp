#ifndef GC_REPR_HPP
#define GC_REPR_HPP

#include "gc/ghost.hpp"

#include <Eigen/SparseCore>

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace gc {

using SpMat = Eigen::SparseMatrix<Rational>;

struct ModuleVector {
  int parity = 0;
  int degree = 0;  ///< 0, -1, ..., -dim g_-1
  Weight weight;
  std::string label;
};

/// Finite-dimensional Z-graded module given by the action matrices of the basis of g.
struct GradedModule {
  AlgebraPtr g;
  std::vector<ModuleVector> basis;
  std::vector<SpMat> rho;  ///< rho[i] acts by e_i
  Weight highest_weight;
  std::string kind;  ///< "kac" or "irreducible"
  bool typical = true;

  int dim() const { return static_cast<int>(basis.size()); }
  /// Distinct degrees, highest first.
  std::vector<int> degrees() const;
  int graded_dim(int degree) const;
  /// Product rho(w_1) ... rho(w_k), cached.
  const SpMat& word_matrix(const std::vector<int>& basis_word) const;

  struct Cache {
    std::recursive_mutex mu;
    std::map<std::vector<int>, SpMat> words;
  };
  std::shared_ptr<Cache> cache = std::make_shared<Cache>();
};

/// lambda(h_alpha^vee) is a nonnegative integer for every even simple root.
bool is_dominant(const Weight& lambda, const LieSuperalgebra& g, const BorelChoice& b);

/// Irreducible quotient of the Verma module, built weight space by weight space from the Shapovalov radical.
GradedModule build_highest_weight_irreducible(const AlgebraPtr& g, const BorelChoice& b, const Weight& lambda,
                                              int max_dim = 4000);
/// Lambda(g_-1) tensor L_0(lambda) for a type I algebra; throws NotDominant.
GradedModule build_kac_module(const AlgebraPtr& g, const BorelChoice& b, const Weight& lambda);
/// The even subalgebra with its own basis numbering; `index_map` sends g-indices to subalgebra indices (or -1).
AlgebraPtr even_subalgebra(const LieSuperalgebra& g, std::vector<int>* index_map = nullptr);

/// Exhaustive check of rho(x)rho(y) - sign rho(y)rho(x) = rho([x,y]).
std::vector<std::string> bracket_fidelity(const GradedModule& m);

template <class S>
Mat<S> act(const UEAElement<S>& a, const GradedModule& m) {
  Mat<S> out(m.dim(), m.dim());
  out.setConstant(S(0));
  for (const auto& [w, c] : a.terms()) {
    const SpMat& p = m.word_matrix(a.engine()->basis_word(w));
    for (int k = 0; k < p.outerSize(); ++k)
      for (SpMat::InnerIterator it(p, k); it; ++it) out(it.row(), it.col()) += c * S(it.value());
  }
  return out;
}

template <class S>
struct GradedConstants {
  bool ok = false;
  std::map<int, S> scalars;  ///< degree -> scalar
  int witness = -1;
  std::string message;
};

/// Scalars by which a acts on each graded piece, or a witness basis vector.
template <class S>
GradedConstants<S> graded_constant_check(const UEAElement<S>& a, const GradedModule& m) {
  GradedConstants<S> r;
  Mat<S> A = act(a, m);
  for (int j = 0; j < m.dim(); ++j) {
    for (int i = 0; i < m.dim(); ++i)
      if (i != j && !is_zero(A(i, j))) {
        r.witness = j;
        r.message = "basis vector " + m.basis[j].label + " is not an eigenvector";
        return r;
      }
    auto [it, ins] = r.scalars.emplace(m.basis[j].degree, A(j, j));
    if (!ins && it->second != A(j, j)) {
      r.witness = j;
      r.message = "scalar differs inside degree " + std::to_string(m.basis[j].degree);
      return r;
    }
  }
  r.ok = true;
  return r;
}

/// sum_i (-1)^i dim L_{-i} c^i.
UPoly twisted_trace_poly(const GradedModule& m);

struct TgAction {
  std::string classification;  ///< "zero" or "invertible"
  bool p_nonzero = false;
  bool consistent = false;
  std::map<int, Rational> scalars;
};
/// T_g = ad_delta(v_g)(1) acting on m, cross-checked against p_{G,B}(lambda).
TgAction T_g_action_check(const GhostContext& ctx, const GradedModule& m);

}  // namespace gc

#endif
