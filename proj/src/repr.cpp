#include "gc/repr.hpp"

#include <algorithm>
#include <set>

namespace gc {

std::vector<int> GradedModule::degrees() const {
  std::set<int> d;
  for (const auto& v : basis) d.insert(v.degree);
  return {d.rbegin(), d.rend()};
}

int GradedModule::graded_dim(int degree) const {
  return static_cast<int>(std::count_if(basis.begin(), basis.end(), [&](const auto& v) { return v.degree == degree; }));
}

const SpMat& GradedModule::word_matrix(const std::vector<int>& w) const {
  std::lock_guard<std::recursive_mutex> lock(cache->mu);
  auto it = cache->words.find(w);
  if (it != cache->words.end()) return it->second;
  SpMat p;
  if (w.empty()) {
    p.resize(dim(), dim());
    p.setIdentity();
  } else {
    std::vector<int> prefix(w.begin(), w.end() - 1);
    p = word_matrix(prefix) * rho[w.back()];
    p.prune([](Eigen::Index, Eigen::Index, const Rational& v) { return v != 0; });
  }
  return cache->words.emplace(w, std::move(p)).first->second;
}

bool is_dominant(const Weight& lambda, const LieSuperalgebra& g, const BorelChoice& b) {
  for (const auto& r : b.even_positive) {
    if (!r.even_simple) continue;
    Rational v = pairing(lambda, r.coroot) * 2 / pairing(r.weight, r.coroot);
    if (v < 0 || !is_integer(v)) return false;
  }
  return true;
}

AlgebraPtr even_subalgebra(const LieSuperalgebra& g, std::vector<int>* index_map) {
  std::vector<int> map(g.dim(), -1);
  auto ev = g.even_indices();
  for (std::size_t k = 0; k < ev.size(); ++k) map[ev[k]] = static_cast<int>(k);
  LieSuperalgebra::Data d;
  d.name = g.name() + "_0";
  for (int i : ev) {
    BasisVector b = g.basis(i);
    b.index = map[i];
    d.basis.push_back(b);
  }
  d.table.assign(ev.size(), std::vector<Coords>(ev.size()));
  for (std::size_t i = 0; i < ev.size(); ++i)
    for (std::size_t j = 0; j < ev.size(); ++j)
      for (const auto& [k, c] : g.bracket(ev[i], ev[j])) d.table[i][j].emplace(map[k], c);
  for (int h : g.cartan_even()) d.cartan_even.push_back(map[h]);
  d.positivity = g.default_positivity();
  if (index_map) *index_map = map;
  return std::make_shared<LieSuperalgebra>(std::move(d));
}

namespace {

struct Space {
  std::vector<Word> monos;
  std::map<Word, int, WordLess> index;
  Mat<Rational> P;  // coordinates in the kept basis, rank x monos
  std::vector<int> keep;
  int offset = 0;
};

bool is_zero_weight(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace

GradedModule build_highest_weight_irreducible(const AlgebraPtr& gp, const BorelChoice& b, const Weight& lambda,
                                              int max_dim) {
  const auto& g = *gp;
  if (!g.is_cartan_even()) throw Unsupported("highest weight modules need a Cartan-even algebra");
  if (static_cast<int>(lambda.size()) != g.rank()) throw Unsupported("weight has the wrong number of coordinates");
  if (!is_dominant(lambda, g, b)) throw NotDominant("weight is not dominant integral for the even part");
  EnginePtr e = hc_engine(gp, b);
  const auto& roles = e->ordering().roles;
  const int n = e->dim();
  std::vector<int> cvar(n, -1);
  for (std::size_t k = 0; k < g.cartan_even().size(); ++k) cvar[g.cartan_even()[k]] = static_cast<int>(k);
  std::vector<Weight> wt(n);
  for (int p = 0; p < n; ++p) wt[p] = *g.basis(e->basis_index(p)).weight;
  std::vector<int> lowering, raising;
  for (int p = 0; p < n; ++p) {
    if (roles[p] == Role::n_minus) lowering.push_back(p);
    if (roles[p] == Role::n_plus) raising.push_back(p);
  }
  auto height = [&](const Weight& w) { return pairing(w, b.positivity); };
  auto add = [](Weight a, const Weight& d, int s) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += s * d[k];
    return a;
  };

  // x . (m v_lambda) as a combination of lowering words
  auto apply = [&](int pos, const Word& m) {
    std::map<Word, Rational, WordLess> out;
    for (const auto& [w, c] : e->left_mul(pos, m)) {
      Word prefix;
      Rational v = c;
      bool dead = false;
      for (auto q : w) {
        if (roles[q] == Role::n_minus) prefix.push_back(q);
        else if (roles[q] == Role::n_plus) { dead = true; break; }
        else {
          int h = cvar[e->basis_index(q)];
          if (h < 0) throw Unsupported("weight-zero generator outside the Cartan subalgebra");
          v *= lambda[h];
        }
      }
      if (dead || v == 0) continue;
      auto [it, ins] = out.emplace(prefix, v);
      if (!ins) {
        it->second += v;
        if (it->second == 0) out.erase(it);
      }
    }
    return out;
  };

  std::map<Weight, Space> spaces;
  auto coords = [&](const std::map<Word, Rational, WordLess>& x, const Weight& mu) -> std::optional<Vec<Rational>> {
    auto it = spaces.find(mu);
    if (it == spaces.end() || it->second.keep.empty()) return std::nullopt;
    const Space& s = it->second;
    Vec<Rational> v(s.monos.size());
    v.setConstant(Rational(0));
    for (const auto& [w, c] : x) {
      auto k = s.index.find(w);
      if (k == s.index.end()) throw OracleViolation("lowering word outside its weight space");
      v(k->second) = c;
    }
    return Vec<Rational>(s.P * v);
  };

  auto monomials = [&](const Weight& mu) {
    std::vector<Word> out;
    Word cur;
    Weight rest = add(mu, lambda, -1);  // remaining weight to reach, negative
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (is_zero_weight(rest)) out.push_back(cur);
      Rational h = height(rest);
      for (std::size_t k = start; k < lowering.size(); ++k) {
        int p = lowering[k];
        if (height(wt[p]) < h) continue;
        cur.push_back(static_cast<std::uint16_t>(p));
        rest = add(rest, wt[p], -1);
        rec(e->parity_at(p) ? k + 1 : k);
        rest = add(rest, wt[p], 1);
        cur.pop_back();
      }
    };
    rec(0);
    return out;
  };

  std::set<Weight> roots;
  for (const Root* r : b.positive_roots()) roots.insert(r->weight);
  std::map<std::pair<Rational, Weight>, int> queue;
  std::set<Weight> seen{lambda};
  {
    Space s;
    s.monos = {Word{}};
    s.index[Word{}] = 0;
    s.P = Mat<Rational>::Constant(1, 1, Rational(1));
    s.keep = {0};
    spaces.emplace(lambda, std::move(s));
    for (const auto& a : roots) {
      Weight mu = add(lambda, a, -1);
      if (seen.insert(mu).second) queue.emplace(std::make_pair(height(add(lambda, mu, -1)), mu), 0);
    }
  }
  int total = 1;
  while (!queue.empty()) {
    Weight mu = queue.begin()->first.second;
    queue.erase(queue.begin());
    Space s;
    s.monos = monomials(mu);
    for (std::size_t j = 0; j < s.monos.size(); ++j) s.index[s.monos[j]] = static_cast<int>(j);
    std::vector<Vec<Rational>> cols(s.monos.size());
    std::vector<std::vector<Vec<Rational>>> blocks(s.monos.size());
    int rows = 0;
    std::vector<int> block_rows;
    for (int q : raising) {
      Weight target = add(mu, wt[q], 1);
      auto it = spaces.find(target);
      int r = it == spaces.end() ? 0 : static_cast<int>(it->second.keep.size());
      block_rows.push_back(r);
      rows += r;
    }
    Mat<Rational> phi(rows, s.monos.size());
    phi.setConstant(Rational(0));
    for (std::size_t j = 0; j < s.monos.size(); ++j) {
      int r0 = 0;
      for (std::size_t qi = 0; qi < raising.size(); ++qi) {
        if (block_rows[qi]) {
          auto v = coords(apply(raising[qi], s.monos[j]), add(mu, wt[raising[qi]], 1));
          if (v) phi.block(r0, j, block_rows[qi], 1) = *v;
        }
        r0 += block_rows[qi];
      }
    }
    auto piv = rref_inplace(phi);
    s.keep = piv;
    s.P = phi.topRows(piv.size());
    total += static_cast<int>(piv.size());
    if (total > max_dim) throw Unsupported("module exceeds " + std::to_string(max_dim) + " dimensions");
    const bool nonzero = !piv.empty();
    spaces.emplace(mu, std::move(s));
    if (nonzero)
      for (const auto& a : roots) {
        Weight nu = add(mu, a, -1);
        if (seen.insert(nu).second) queue.emplace(std::make_pair(height(add(lambda, nu, -1)), nu), 0);
      }
  }

  GradedModule m;
  m.g = gp;
  m.highest_weight = lambda;
  m.kind = "irreducible";
  m.typical = g.is_type_i() ? !atypicality_locus_test(lambda, b) : true;
  std::vector<std::pair<Weight, int>> order;  // (weight, kept index) per basis vector
  for (auto& [mu, s] : spaces) {
    s.offset = m.dim();
    for (int k : s.keep) {
      const Word& w = s.monos[k];
      ModuleVector v;
      v.weight = mu;
      for (auto p : w) {
        v.parity ^= e->parity_at(p);
        v.degree += g.basis(e->basis_index(p)).z_degree;
      }
      v.label = w.empty() ? "v" : e->word_string(w) + "*v";
      m.basis.push_back(v);
      order.emplace_back(mu, k);
    }
  }
  for (int x = 0; x < g.dim(); ++x) {
    std::vector<Eigen::Triplet<Rational>> trip;
    const int px = e->position(x);
    for (int col = 0; col < m.dim(); ++col) {
      const auto& [mu, k] = order[col];
      Weight target = add(mu, *g.basis(x).weight, 1);
      auto v = coords(apply(px, spaces.at(mu).monos[k]), target);
      if (!v) continue;
      const int off = spaces.at(target).offset;
      for (int r = 0; r < v->size(); ++r)
        if ((*v)(r) != 0) trip.emplace_back(off + r, col, (*v)(r));
    }
    SpMat a(m.dim(), m.dim());
    a.setFromTriplets(trip.begin(), trip.end());
    m.rho.push_back(std::move(a));
  }
  return m;
}

GradedModule build_kac_module(const AlgebraPtr& gp, const BorelChoice& b, const Weight& lambda) {
  const auto& g = *gp;
  if (!g.is_type_i()) throw Unsupported("Kac modules need a type I grading");
  if (!is_dominant(lambda, g, b)) throw NotDominant("weight is not dominant integral for the even part");
  std::vector<int> imap;
  AlgebraPtr g0 = even_subalgebra(g, &imap);
  GradedModule L0 = build_highest_weight_irreducible(g0, make_borel(*g0, b.positivity), lambda);
  EnginePtr e = make_engine(gp, GeneratorOrdering::kac(g));
  const auto& roles = e->ordering().roles;
  std::vector<int> low;
  for (int p = 0; p < e->dim(); ++p)
    if (roles[p] == Role::n_minus) low.push_back(p);
  const int n = static_cast<int>(low.size());
  if (n > 16) throw Unsupported("g_-1 too large");
  const int d0 = L0.dim();
  GradedModule m;
  m.g = gp;
  m.highest_weight = lambda;
  m.kind = "kac";
  m.typical = !atypicality_locus_test(lambda, b);
  auto word_of = [&](int mask) {
    Word w;
    for (int k = 0; k < n; ++k)
      if (mask >> k & 1) w.push_back(static_cast<std::uint16_t>(low[k]));
    return w;
  };
  std::vector<int> masks(1 << n);
  for (int i = 0; i < (1 << n); ++i) masks[i] = i;
  std::stable_sort(masks.begin(), masks.end(), [](int a, int c) { return std::popcount(unsigned(a)) < std::popcount(unsigned(c)); });
  std::vector<int> slot(1 << n);
  for (int i = 0; i < (1 << n); ++i) slot[masks[i]] = i;
  for (int mask : masks) {
    Word w = word_of(mask);
    Weight ws(g.rank(), Rational(0));
    for (auto p : w)
      for (int k = 0; k < g.rank(); ++k) ws[k] += (*g.basis(e->basis_index(p)).weight)[k];
    for (int k = 0; k < d0; ++k) {
      ModuleVector v = L0.basis[k];
      for (int r = 0; r < g.rank(); ++r) v.weight[r] += ws[r];
      v.degree = -std::popcount(unsigned(mask));
      v.parity = v.degree & 1;
      v.label = w.empty() ? L0.basis[k].label : e->word_string(w) + "*" + L0.basis[k].label;
      m.basis.push_back(v);
    }
  }
  for (int x = 0; x < g.dim(); ++x) {
    std::vector<Eigen::Triplet<Rational>> trip;
    const int px = e->position(x);
    for (int mask : masks) {
      for (const auto& [w, c] : e->left_mul(px, word_of(mask))) {
        int tmask = 0;
        std::vector<int> mid;
        bool dead = false;
        for (auto q : w) {
          if (roles[q] == Role::n_minus) tmask |= 1 << (std::find(low.begin(), low.end(), q) - low.begin());
          else if (roles[q] == Role::n_plus) { dead = true; break; }
          else mid.push_back(imap[e->basis_index(q)]);
        }
        if (dead) continue;
        const SpMat& a0 = L0.word_matrix(mid);
        for (int k = 0; k < a0.outerSize(); ++k)
          for (SpMat::InnerIterator it(a0, k); it; ++it)
            trip.emplace_back(slot[tmask] * d0 + it.row(), slot[mask] * d0 + it.col(), c * it.value());
      }
    }
    SpMat a(m.dim(), m.dim());
    a.setFromTriplets(trip.begin(), trip.end());
    a.prune([](Eigen::Index, Eigen::Index, const Rational& v) { return v != 0; });
    m.rho.push_back(std::move(a));
  }
  return m;
}

std::vector<std::string> bracket_fidelity(const GradedModule& m) {
  std::vector<std::string> fails;
  const auto& g = *m.g;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i; j < g.dim(); ++j) {
      const Rational s = g.parity(i) && g.parity(j) ? -1 : 1;
      SpMat lhs = m.rho[i] * m.rho[j];
      SpMat rhs = m.rho[j] * m.rho[i];
      SpMat diff = lhs - rhs * s;
      for (const auto& [k, c] : g.bracket(i, j)) diff -= m.rho[k] * c;
      diff.prune([](Eigen::Index, Eigen::Index, const Rational& v) { return v != 0; });
      if (diff.nonZeros()) fails.push_back("[" + g.basis(i).name + ", " + g.basis(j).name + "]");
    }
  return fails;
}

UPoly twisted_trace_poly(const GradedModule& m) {
  std::vector<Rational> c;
  for (const auto& v : m.basis) {
    const int i = -v.degree;
    if (i < 0) throw OracleViolation("module has positive degrees");
    if (static_cast<int>(c.size()) <= i) c.resize(i + 1, Rational(0));
    c[i] += (i % 2) ? -1 : 1;
  }
  return UPoly(std::move(c));
}

TgAction T_g_action_check(const GhostContext& ctx, const GradedModule& m) {
  TgAction r;
  auto T = a_phi_element(ctx, GradedAutomorphism<Rational>::delta(ctx.algebra_ptr()));
  Mat<Rational> A = act(T.element, m);
  const int rk = rank(A);
  if (rk == 0) r.classification = "zero";
  else if (rk == m.dim()) r.classification = "invertible";
  else throw OracleViolation("T_g is neither zero nor invertible (rank " + std::to_string(rk) + " of " +
                             std::to_string(m.dim()) + ")");
  auto gc = graded_constant_check(T.element, m);
  if (gc.ok) r.scalars = gc.scalars;
  r.p_nonzero = !is_zero(projectivity_polynomial(ctx).p.evaluate(m.highest_weight));
  r.consistent = r.p_nonzero == (r.classification == "invertible");
  return r;
}

}  // namespace gc
