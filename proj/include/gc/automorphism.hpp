#ifndef GC_AUTOMORPHISM_HPP
#define GC_AUTOMORPHISM_HPP

#include "gc/algebra.hpp"
#include "gc/errors.hpp"
#include "gc/field.hpp"

#include <string>

namespace gc {

/// Automorphism fixing the even part pointwise, stored as a matrix on the odd part
/// (columns indexed by the algebra's odd basis vectors in basis order).
template <class S>
class GradedAutomorphism {
 public:
  enum class Kind { identity, delta, scale, matrix };

  static GradedAutomorphism identity(AlgebraPtr g) {
    return GradedAutomorphism(g, Kind::identity, S(1), eye(g));
  }
  static GradedAutomorphism delta(AlgebraPtr g) {
    return GradedAutomorphism(g, Kind::delta, S(-1), -eye(g));
  }
  /// s on g_-1, s^-1 on g_1.
  static GradedAutomorphism scale(AlgebraPtr g, const S& s) {
    if (!g->is_type_i()) throw Unsupported("scale automorphism requires a type I grading");
    if (is_zero(s)) throw Unsupported("scale automorphism needs a nonzero scalar");
    Mat<S> a = eye(g);
    auto odd = g->odd_indices();
    for (std::size_t k = 0; k < odd.size(); ++k)
      a(k, k) = g->basis(odd[k]).z_degree < 0 ? s : S(1) / s;
    return GradedAutomorphism(g, Kind::scale, s, a);
  }
  static GradedAutomorphism matrix(AlgebraPtr g, Mat<S> a) {
    auto odd = g->odd_indices();
    for (int i : odd)
      for (int j = 0; j < g->dim(); ++j)
        if (!g->bracket(i, j).empty())
          throw Unsupported("matrix automorphisms are only supported on abelian odd parts");
    if (a.rows() != static_cast<int>(odd.size()) || a.cols() != a.rows())
      throw Unsupported("matrix automorphism has wrong size");
    if (is_zero(determinant(a))) throw Unsupported("matrix automorphism is singular");
    return GradedAutomorphism(g, Kind::matrix, S(1), std::move(a));
  }

  Kind kind() const { return kind_; }
  const S& scalar() const { return s_; }
  const Mat<S>& odd_matrix() const { return a_; }
  const AlgebraPtr& algebra() const { return g_; }

  /// Image of a basis vector.
  SparseVec<S> apply(int i) const {
    SparseVec<S> out;
    if (!g_->parity(i)) {
      out.emplace(i, S(1));
      return out;
    }
    int c = odd_pos_[i];
    for (int r = 0; r < a_.rows(); ++r)
      if (!is_zero(a_(r, c))) out.emplace(odd_[r], a_(r, c));
    return out;
  }

  SparseVec<S> apply(const SparseVec<S>& x) const {
    SparseVec<S> out;
    for (const auto& [i, v] : x) axpy(out, v, apply(i));
    return out;
  }

  /// this after other.
  GradedAutomorphism compose(const GradedAutomorphism& other) const {
    if (kind_ == Kind::identity) return other;
    if (other.kind_ == Kind::identity) return *this;
    const bool graded = kind_ != Kind::matrix && other.kind_ != Kind::matrix;
    if (graded && g_->is_type_i()) {
      S s = s_ * other.s_;
      if (s == S(1)) return identity(g_);
      return scale(g_, s);
    }
    if (graded) return identity(g_);  // delta after delta
    return GradedAutomorphism(g_, Kind::matrix, S(1), Mat<S>(a_ * other.a_));
  }

  bool fixed_point_free() const {
    if (a_.rows() == 0) return true;
    Mat<S> m = a_;
    for (int i = 0; i < m.rows(); ++i) m(i, i) = m(i, i) - S(1);
    return !is_zero(determinant(m));
  }

  /// det(1 - A) on the odd part.
  S det_one_minus() const {
    Mat<S> m = -a_;
    for (int i = 0; i < m.rows(); ++i) m(i, i) = m(i, i) + S(1);
    return determinant(m);
  }

  bool preserves_brackets() const {
    const int n = g_->dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        SparseVec<S> lhs = apply(promote(g_->bracket(i, j)));
        SparseVec<S> rhs;
        for (const auto& [a, x] : apply(i))
          for (const auto& [b, y] : apply(j)) axpy(rhs, S(x * y), promote(g_->bracket(a, b)));
        axpy(lhs, S(-1), rhs);
        if (!lhs.empty()) return false;
      }
    return true;
  }

  std::string describe() const {
    switch (kind_) {
      case Kind::identity: return "identity";
      case Kind::delta: return "delta";
      case Kind::scale: return "scale(" + scalar_string(s_) + ")";
      case Kind::matrix: return "matrix";
    }
    return "?";
  }

  static SparseVec<S> promote(const Coords& c) {
    SparseVec<S> out;
    for (const auto& [k, v] : c) out.emplace(k, S(v));
    return out;
  }

 private:
  GradedAutomorphism(AlgebraPtr g, Kind k, S s, Mat<S> a)
      : g_(std::move(g)), kind_(k), s_(std::move(s)), a_(std::move(a)) {
    odd_ = g_->odd_indices();
    odd_pos_.assign(g_->dim(), -1);
    for (std::size_t k2 = 0; k2 < odd_.size(); ++k2) odd_pos_[odd_[k2]] = static_cast<int>(k2);
  }
  static Mat<S> eye(const AlgebraPtr& g) {
    const int n = static_cast<int>(g->odd_indices().size());
    Mat<S> m(n, n);
    m.setConstant(S(0));
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  AlgebraPtr g_;
  Kind kind_;
  S s_;
  Mat<S> a_;
  std::vector<int> odd_, odd_pos_;
};

}  // namespace gc

#endif
