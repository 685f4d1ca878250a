#ifndef GC_PBW_HPP
#define GC_PBW_HPP

#include "gc/algebra.hpp"
#include "gc/borel.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace gc {

enum class Role { n_minus, cartan, n_plus, odd, even, n, a, t, k };

/// Total order on the basis used for PBW monomials.
struct GeneratorOrdering {
  std::string name;
  std::vector<int> order;     ///< position -> basis index
  std::vector<int> position;  ///< basis index -> position
  std::vector<Role> roles;    ///< per position

  static GeneratorOrdering make(std::string name, std::vector<int> order, std::vector<Role> roles);
  /// n- < Cartan < n+, roots ascending by the positivity functional.
  static GeneratorOrdering hc(const LieSuperalgebra& g, const BorelChoice& b);
  /// Odd generators first (by z-degree, then basis order), even generators last.
  static GeneratorOrdering coset(const LieSuperalgebra& g);
  /// g_-1 < g_0 < g_1 for type I; even part in basis order.
  static GeneratorOrdering kac(const LieSuperalgebra& g);
};

/// Normal word: nondecreasing positions, odd positions at most once.
using Word = std::vector<std::uint16_t>;

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : w) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

using QTerms = std::map<Word, Rational, WordLess>;

/// Normal-ordering rewriter over Q for one algebra and ordering; memoized and synchronized.
class PbwEngine {
 public:
  PbwEngine(AlgebraPtr g, GeneratorOrdering ord);

  const LieSuperalgebra& algebra() const { return *g_; }
  const AlgebraPtr& algebra_ptr() const { return g_; }
  const GeneratorOrdering& ordering() const { return ord_; }
  int dim() const { return g_->dim(); }
  int basis_index(int pos) const { return ord_.order[pos]; }
  int position(int basis) const { return ord_.position[basis]; }
  int parity_at(int pos) const { return par_[pos]; }

  bool is_normal(const Word& w) const;
  /// e_p * w in normal form.
  const QTerms& left_mul(int pos, const Word& w) const;
  /// w * e_p in normal form.
  const QTerms& right_mul(const Word& w, int pos) const;
  QTerms mul(const Word& a, const Word& b) const;
  /// Arbitrary word of basis indices.
  QTerms normal_order(const std::vector<int>& basis_word) const;

  int filtration(const Word& w) const;
  int parity(const Word& w) const;
  std::optional<Weight> weight(const Word& w) const;
  /// Exponent-tagged generator names, e.g. "h1^2*y*x"; "1" for the empty word.
  std::string word_string(const Word& w) const;
  std::vector<int> basis_word(const Word& w) const;

  std::size_t memo_size() const;

 private:
  const QTerms& left_mul_locked(int pos, const Word& w) const;
  const QTerms& right_mul_locked(const Word& w, int pos) const;
  static void add_into(QTerms& acc, const QTerms& t, const Rational& c);

  AlgebraPtr g_;
  GeneratorOrdering ord_;
  std::vector<int> par_;
  std::vector<std::vector<std::vector<std::pair<int, Rational>>>> br_;  // positions
  mutable std::recursive_mutex mu_;
  mutable std::unordered_map<Word, QTerms, WordHash> left_memo_, right_memo_;
};

using EnginePtr = std::shared_ptr<const PbwEngine>;

inline EnginePtr make_engine(AlgebraPtr g, GeneratorOrdering ord) {
  return std::make_shared<PbwEngine>(std::move(g), std::move(ord));
}

}  // namespace gc

#endif
