#ifndef GC_LINALG_HPP
#define GC_LINALG_HPP

#include "gc/field.hpp"

#include <Eigen/Core>

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace gc {

template <class S> using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S> using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

/// Sparse exact vector keyed by coordinate.
template <class S> using SparseVec = std::map<int, S>;

template <class S>
void axpy(SparseVec<S>& y, const S& a, const SparseVec<S>& x) {
  if (is_zero(a)) return;
  for (const auto& [k, v] : x) {
    auto it = y.find(k);
    if (it == y.end()) {
      y.emplace(k, a * v);
    } else {
      it->second += a * v;
      if (is_zero(it->second)) y.erase(it);
    }
  }
}

/// Reduced row echelon form in place; returns pivot columns.
template <class S>
std::vector<int> rref_inplace(Mat<S>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!is_zero(m(i, c))) { p = i; break; }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    S inv = S(1) / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      S f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class S>
int rank(Mat<S> m) { return static_cast<int>(rref_inplace(m).size()); }

/// Columns span the right nullspace, one basis vector per free column.
template <class S>
Mat<S> nullspace(const Mat<S>& a) {
  Mat<S> m = a;
  auto piv = rref_inplace(m);
  std::vector<bool> is_piv(a.cols(), false);
  for (int c : piv) is_piv[c] = true;
  Mat<S> out(a.cols(), a.cols() - static_cast<int>(piv.size()));
  out.setConstant(S(0));
  int k = 0;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_piv[f]) continue;
    out(f, k) = S(1);
    for (std::size_t r = 0; r < piv.size(); ++r) out(piv[r], k) = -m(r, f);
    ++k;
  }
  return out;
}

/// One solution of a x = b, or nullopt when inconsistent.
template <class S>
std::optional<Vec<S>> solve(const Mat<S>& a, const Vec<S>& b) {
  Mat<S> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  auto piv = rref_inplace(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  Vec<S> x(a.cols());
  x.setConstant(S(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x(piv[r]) = aug(r, a.cols());
  return x;
}

/// Determinant by exact elimination.
template <class S>
S determinant(Mat<S> m) {
  const int n = static_cast<int>(m.rows());
  S det(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!is_zero(m(i, c))) { p = i; break; }
    if (p < 0) return S(0);
    if (p != c) { m.row(p).swap(m.row(c)); det = -det; }
    det = det * m(c, c);
    S inv = S(1) / m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      S f = m(i, c) * inv;
      for (int j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return det;
}

/// Incremental sparse echelon basis of the images of a linear map.
/// Each inserted unknown either extends the image basis or yields a kernel vector;
/// `express` writes a target as a combination of unknowns.
template <class S>
class SparseEchelon {
 public:
  /// Returns the kernel vector (over unknown ids) if `image` depends on earlier images.
  std::optional<SparseVec<S>> insert(int unknown, SparseVec<S> image) {
    SparseVec<S> combo{{unknown, S(1)}};
    reduce(image, combo, S(-1));
    if (image.empty()) return combo;
    S inv = S(1) / image.begin()->second;
    for (auto& [k, v] : image) v = v * inv;
    for (auto& [k, v] : combo) v = v * inv;
    int p = image.begin()->first;
    rows_.emplace(p, Row{std::move(image), std::move(combo)});
    return std::nullopt;
  }

  /// Combination x with sum_j x_j image_j = target, or nullopt.
  std::optional<SparseVec<S>> express(SparseVec<S> target) const {
    SparseVec<S> combo;
    reduce(target, combo, S(1));
    if (!target.empty()) return std::nullopt;
    return combo;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  struct Row { SparseVec<S> image, combo; };

  void reduce(SparseVec<S>& v, SparseVec<S>& combo, const S& combo_sign) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto r = rows_.find(it->first);
      if (r == rows_.end()) { ++it; continue; }
      int key = it->first;
      S coef = it->second;
      axpy(v, S(-coef), r->second.image);
      axpy(combo, S(combo_sign * coef), r->second.combo);
      it = v.lower_bound(key);
    }
  }

  std::map<int, Row> rows_;
};

}  // namespace gc

#endif
