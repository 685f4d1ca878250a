#include "gc/pbw.hpp"
#include "gc/errors.hpp"

#include <algorithm>
#include <sstream>

namespace gc {

GeneratorOrdering GeneratorOrdering::make(std::string name, std::vector<int> order, std::vector<Role> roles) {
  GeneratorOrdering o;
  o.name = std::move(name);
  const int n = static_cast<int>(order.size());
  if (static_cast<int>(roles.size()) != n) throw OrderingMismatch("role list length differs from ordering");
  o.position.assign(n, -1);
  for (int p = 0; p < n; ++p) {
    int i = order[p];
    if (i < 0 || i >= n || o.position[i] != -1) throw OrderingMismatch("ordering is not a permutation");
    o.position[i] = p;
  }
  o.order = std::move(order);
  o.roles = std::move(roles);
  return o;
}

GeneratorOrdering GeneratorOrdering::hc(const LieSuperalgebra& g, const BorelChoice& b) {
  auto height = [&](int i) { return pairing(*g.basis(i).weight, b.positivity); };
  auto by_height = [&](std::vector<int> v) {
    std::stable_sort(v.begin(), v.end(), [&](int x, int y) { return height(x) < height(y); });
    return v;
  };
  std::vector<int> order;
  std::vector<Role> roles;
  for (int i : by_height(b.n_minus)) { order.push_back(i); roles.push_back(Role::n_minus); }
  for (int i = 0; i < g.dim(); ++i)
    if (!std::count(b.n_minus.begin(), b.n_minus.end(), i) && !std::count(b.n_plus.begin(), b.n_plus.end(), i)) {
      order.push_back(i);
      roles.push_back(Role::cartan);
    }
  for (int i : by_height(b.n_plus)) { order.push_back(i); roles.push_back(Role::n_plus); }
  return make("hc", order, roles);
}

GeneratorOrdering GeneratorOrdering::coset(const LieSuperalgebra& g) {
  std::vector<int> odd = g.odd_indices();
  std::stable_sort(odd.begin(), odd.end(),
                   [&](int x, int y) { return g.basis(x).z_degree < g.basis(y).z_degree; });
  std::vector<int> order = odd;
  std::vector<Role> roles(odd.size(), Role::odd);
  for (int i : g.even_indices()) { order.push_back(i); roles.push_back(Role::even); }
  return make("coset", order, roles);
}

GeneratorOrdering GeneratorOrdering::kac(const LieSuperalgebra& g) {
  std::vector<int> order;
  std::vector<Role> roles;
  for (int z : {-1, 0, 1})
    for (const auto& b : g.basis())
      if (b.z_degree == z) {
        order.push_back(b.index);
        roles.push_back(z < 0 ? Role::n_minus : z > 0 ? Role::n_plus : Role::even);
      }
  return make("kac", order, roles);
}

PbwEngine::PbwEngine(AlgebraPtr g, GeneratorOrdering ord) : g_(std::move(g)), ord_(std::move(ord)) {
  const int n = g_->dim();
  if (static_cast<int>(ord_.order.size()) != n) throw OrderingMismatch("ordering size differs from algebra dimension");
  if (n > 65535) throw Unsupported("algebra too large");
  par_.resize(n);
  for (int p = 0; p < n; ++p) par_[p] = g_->parity(ord_.order[p]);
  br_.assign(n, std::vector<std::vector<std::pair<int, Rational>>>(n));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (const auto& [k, c] : g_->bracket(ord_.order[p], ord_.order[q])) br_[p][q].emplace_back(ord_.position[k], c);
}

bool PbwEngine::is_normal(const Word& w) const {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i - 1] > w[i]) return false;
    if (w[i - 1] == w[i] && par_[w[i]]) return false;
  }
  return true;
}

void PbwEngine::add_into(QTerms& acc, const QTerms& t, const Rational& c) {
  if (c == 0) return;
  for (const auto& [w, x] : t) {
    auto it = acc.find(w);
    if (it == acc.end()) {
      acc.emplace(w, c * x);
    } else {
      it->second += c * x;
      if (it->second == 0) acc.erase(it);
    }
  }
}

const QTerms& PbwEngine::left_mul(int pos, const Word& w) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return left_mul_locked(pos, w);
}

const QTerms& PbwEngine::right_mul(const Word& w, int pos) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return right_mul_locked(w, pos);
}

const QTerms& PbwEngine::left_mul_locked(int p, const Word& w) const {
  Word key;
  key.reserve(w.size() + 1);
  key.push_back(static_cast<std::uint16_t>(p));
  key.insert(key.end(), w.begin(), w.end());
  auto it = left_memo_.find(key);
  if (it != left_memo_.end()) return it->second;
  QTerms res;
  if (w.empty() || p < w[0] || (p == w[0] && !par_[p])) {
    res.emplace(key, Rational(1));
  } else {
    const int f = w[0];
    Word rest(w.begin() + 1, w.end());
    if (p == f) {
      for (const auto& [k, c] : br_[p][p]) add_into(res, left_mul_locked(k, rest), c / 2);
    } else {
      const QTerms& t = left_mul_locked(p, rest);
      const Rational sign = (par_[p] && par_[f]) ? -1 : 1;
      for (const auto& [u, c] : t) add_into(res, left_mul_locked(f, u), sign * c);
      for (const auto& [k, c] : br_[p][f]) add_into(res, left_mul_locked(k, rest), c);
    }
  }
  return left_memo_.emplace(std::move(key), std::move(res)).first->second;
}

const QTerms& PbwEngine::right_mul_locked(const Word& w, int p) const {
  Word key = w;
  key.push_back(static_cast<std::uint16_t>(p));
  auto it = right_memo_.find(key);
  if (it != right_memo_.end()) return it->second;
  QTerms res;
  if (w.empty() || w.back() < p || (w.back() == p && !par_[p])) {
    res.emplace(key, Rational(1));
  } else {
    const int l = w.back();
    Word init(w.begin(), w.end() - 1);
    if (l == p) {
      for (const auto& [k, c] : br_[p][p]) add_into(res, right_mul_locked(init, k), c / 2);
    } else {
      // init * l * p = sign * init * p * l + init * [l, p]
      const QTerms& t = right_mul_locked(init, p);
      const Rational sign = (par_[p] && par_[l]) ? -1 : 1;
      for (const auto& [u, c] : t) add_into(res, right_mul_locked(u, l), sign * c);
      for (const auto& [k, c] : br_[l][p]) add_into(res, right_mul_locked(init, k), c);
    }
  }
  return right_memo_.emplace(std::move(key), std::move(res)).first->second;
}

QTerms PbwEngine::mul(const Word& a, const Word& b) const {
  if (a.empty()) return QTerms{{b, Rational(1)}};
  if (b.empty()) return QTerms{{a, Rational(1)}};
  if (a.back() < b.front() || (a.back() == b.front() && !par_[b.front()])) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return QTerms{{w, Rational(1)}};
  }
  std::lock_guard<std::recursive_mutex> lock(mu_);
  QTerms cur;
  if (a.size() <= b.size()) {
    cur.emplace(b, Rational(1));
    for (auto i = a.rbegin(); i != a.rend(); ++i) {
      QTerms next;
      for (const auto& [u, c] : cur) add_into(next, left_mul_locked(*i, u), c);
      cur = std::move(next);
    }
  } else {
    cur.emplace(a, Rational(1));
    for (auto p : b) {
      QTerms next;
      for (const auto& [u, c] : cur) add_into(next, right_mul_locked(u, p), c);
      cur = std::move(next);
    }
  }
  return cur;
}

QTerms PbwEngine::normal_order(const std::vector<int>& basis_word) const {
  QTerms cur{{Word{}, Rational(1)}};
  std::lock_guard<std::recursive_mutex> lock(mu_);
  for (auto i = basis_word.rbegin(); i != basis_word.rend(); ++i) {
    if (*i < 0 || *i >= dim()) throw std::out_of_range("generator index out of range");
    QTerms next;
    for (const auto& [u, c] : cur) add_into(next, left_mul_locked(ord_.position[*i], u), c);
    cur = std::move(next);
  }
  return cur;
}

int PbwEngine::filtration(const Word& w) const {
  int d = 0;
  for (auto p : w) d += par_[p] ? 1 : 2;
  return d;
}

int PbwEngine::parity(const Word& w) const {
  int s = 0;
  for (auto p : w) s += par_[p];
  return s & 1;
}

std::optional<Weight> PbwEngine::weight(const Word& w) const {
  Weight out(g_->rank(), Rational(0));
  for (auto p : w) {
    const auto& bw = g_->basis(ord_.order[p]).weight;
    if (!bw) return std::nullopt;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += (*bw)[k];
  }
  return out;
}

std::string PbwEngine::word_string(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (i) os << "*";
    os << g_->basis(ord_.order[w[i]]).name;
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

std::vector<int> PbwEngine::basis_word(const Word& w) const {
  std::vector<int> out;
  out.reserve(w.size());
  for (auto p : w) out.push_back(ord_.order[p]);
  return out;
}

std::size_t PbwEngine::memo_size() const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return left_memo_.size() + right_memo_.size();
}

}  // namespace gc
