#ifndef GC_TEST_SUPPORT_HPP
#define GC_TEST_SUPPORT_HPP

#include "gc/parse.hpp"
#include "gc/repr.hpp"

#include <random>

namespace gct {

using namespace gc;
using Q = Rational;

inline Mat<Q> word_matrix(const SuperMatrixRep& rep, const std::vector<int>& w) {
  const int d = static_cast<int>(rep.row_parity.size());
  Mat<Q> m = Mat<Q>::Identity(d, d);
  for (int i : w) m = Mat<Q>(m * rep.matrices[i]);
  return m;
}

/// Image of a in the defining supermatrix representation.
inline Mat<Q> matrix_of(const SuperMatrixRep& rep, const UEAElement<Q>& a) {
  const int d = static_cast<int>(rep.row_parity.size());
  Mat<Q> m = Mat<Q>::Zero(d, d);
  for (const auto& [w, c] : a.terms()) m += word_matrix(rep, a.engine()->basis_word(w)) * c;
  return m;
}

inline std::vector<int> random_word(std::mt19937_64& rng, int n, int max_len) {
  std::vector<int> w(std::uniform_int_distribution<int>(0, max_len)(rng));
  for (auto& x : w) x = std::uniform_int_distribution<int>(0, n - 1)(rng);
  return w;
}

inline UEAElement<Q> random_element(const EnginePtr& e, std::mt19937_64& rng, int max_len, int terms) {
  UEAElement<Q> a(e);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int t = 0; t < terms; ++t) a += normal_order<Q>(e, random_word(rng, e->dim(), max_len), Q(coef(rng)));
  return a;
}

/// Random element of weight zero: products of root vectors paired with their negatives and Cartan letters.
inline UEAElement<Q> random_weight_zero(const GhostContext& ctx, std::mt19937_64& rng, int pairs) {
  const auto& g = ctx.algebra();
  std::vector<std::vector<int>> blocks;
  for (int h : g.cartan_even()) blocks.push_back({h});
  for (const Root* r : ctx.borel().positive_roots())
    for (int v : r->vectors)
      for (int u : r->negatives) blocks.push_back({v, u});
  UEAElement<Q> a = UEAElement<Q>::scalar(ctx.hc(), Q(std::uniform_int_distribution<int>(-3, 3)(rng)));
  for (int t = 0; t < 2; ++t) {
    std::vector<int> w;
    const int k = std::uniform_int_distribution<int>(1, pairs)(rng);
    for (int j = 0; j < k; ++j) {
      const auto& b = blocks[std::uniform_int_distribution<std::size_t>(0, blocks.size() - 1)(rng)];
      w.insert(w.end(), b.begin(), b.end());
    }
    std::shuffle(w.begin(), w.end(), rng);
    a += normal_order<Q>(ctx.hc(), w, Q(std::uniform_int_distribution<int>(1, 3)(rng)));
  }
  return a;
}

inline Weight weight(std::initializer_list<int> xs) {
  Weight w;
  for (int x : xs) w.push_back(Q(x));
  return w;
}

inline UEAElement<Q> parse(const GhostContext& ctx, const std::string& s) {
  return parse_element<Q>(s, ctx.hc(), FieldSpec{});
}

}  // namespace gct

#endif
