#include "gc/ghost.hpp"

#include <algorithm>

namespace gc {

GhostContext::GhostContext(AlgebraPtr g, std::optional<BorelChoice> b)
    : g_(std::move(g)), b_(b ? std::move(*b) : make_borel(*g_)) {
  hc_ = hc_engine(g_, b_);
  coset_ = make_engine(g_, GeneratorOrdering::coset(*g_));
  for (int i : g_->even_indices()) even_.insert(i);
}

const CosetGhost& GhostContext::vg() const {
  std::call_once(vg_once_, [&] {
    vg_ = closed_form_class(*g_).empty() ? v_g_generic_solve(*this) : v_g_closed_form(*this);
  });
  return *vg_;
}

const IwasawaPairPresentation& GhostContext::pair() const {
  std::call_once(pair_once_, [&] {
    pair_ = diagonal_pair(*g_, b_);
    pair_engine_ = make_engine(pair_->host, pair_->ordering());
  });
  return *pair_;
}

const EnginePtr& GhostContext::pair_engine() const {
  pair();
  return pair_engine_;
}

std::string closed_form_class(const LieSuperalgebra& g) {
  if (g.is_type_i()) return "type I";
  if (g.odd_square_central()) return "odd square central";
  if (g.name().rfind("osp(1|", 0) == 0) return "osp(1|2n)";
  return "";
}

namespace {

UEAElement<Rational> reduce_coset(const GhostContext& ctx, const UEAElement<Rational>& a) {
  return reduce_mod_right_subalgebra(a, ctx.even_set());
}

std::vector<int> coset_odd_word(const GhostContext& ctx) {
  std::vector<int> w;
  const auto& ord = ctx.coset()->ordering();
  for (std::size_t p = 0; p < ord.order.size(); ++p)
    if (ord.roles[p] == Role::odd) w.push_back(ord.order[p]);
  return w;
}

}  // namespace

CosetGhost v_g_closed_form(const GhostContext& ctx) {
  const auto& g = ctx.algebra();
  const std::string cls = closed_form_class(g);
  const EnginePtr& e = ctx.coset();
  UEAElement<Rational> v(e);
  if (cls == "type I" || cls == "odd square central") {
    v = normal_order<Rational>(e, coset_odd_word(ctx));
  } else if (cls == "osp(1|2n)") {
    const int n = static_cast<int>(g.odd_indices().size()) / 2;
    v = UEAElement<Rational>::one(e);
    for (int i = 1; i <= n; ++i) {
      auto u = g.index_of("u" + std::to_string(i)), w = g.index_of("v" + std::to_string(i)),
           h = g.index_of("h" + std::to_string(i));
      if (!u || !w || !h) throw Unsupported("osp(1|2n) basis lacks u_i, v_i, h_i");
      if (g.bracket(*u, *w) != Coords{{*h, Rational(1)}}) throw Unsupported("[u_i, v_i] is not h_i");
      auto t = normal_order<Rational>(e, {*u, *w}) + UEAElement<Rational>::scalar(e, Rational(2 * i - 1));
      v = v * t;
    }
  } else {
    throw Unsupported("no closed form for " + g.name());
  }
  CosetGhost out{reduce_coset(ctx, v), {}, "closed form (" + cls + ")"};
  auto w = weight_of(out.rep);
  out.weight = w ? *w : Weight{};
  return out;
}

bool ber_trivial(const LieSuperalgebra& g) {
  Weight sum(g.rank(), Rational(0));
  for (int i : g.odd_indices()) {
    if (!g.basis(i).weight) return false;
    for (int k = 0; k < g.rank(); ++k) sum[k] += (*g.basis(i).weight)[k];
  }
  for (const auto& s : sum)
    if (s != 0) return false;
  for (int x : g.even_indices()) {
    Rational tr = 0;
    for (int j : g.odd_indices()) {
      auto it = g.bracket(x, j).find(j);
      if (it != g.bracket(x, j).end()) tr += it->second;
    }
    if (tr != 0) return false;
  }
  return true;
}

CosetGhost v_g_generic_solve(const GhostContext& ctx) {
  const auto& g = ctx.algebra();
  const EnginePtr& e = ctx.coset();
  if (!ber_trivial(g)) throw GhostDimensionError("Lambda^top of the odd part is a nontrivial g_0-module");
  const int k = static_cast<int>(g.odd_indices().size());
  if (k > 20) throw Unsupported("too many odd generators for the linear solve");
  const long long span = 1ll << k;
  auto word_of = [&](long long mask) {
    Word w;
    for (int p = 0; p < k; ++p)
      if (mask >> p & 1) w.push_back(static_cast<std::uint16_t>(p));
    return w;
  };
  auto mask_of = [&](const Word& w) {
    long long m = 0;
    for (auto p : w) m |= 1ll << p;
    return m;
  };
  SparseEchelon<Rational> ech;
  std::vector<SparseVec<Rational>> kernel;
  for (long long m = 0; m < span; ++m) {
    UEAElement<Rational> x(e);
    x.add_term(word_of(m), Rational(1));
    SparseVec<Rational> img;
    for (int u = 0; u < g.dim(); ++u) {
      auto r = reduce_coset(ctx, left_mul_generator(u, x));
      for (const auto& [w, c] : r.terms()) img.emplace(static_cast<int>(u * span + mask_of(w)), c);
    }
    if (auto ker = ech.insert(static_cast<int>(m), std::move(img))) kernel.push_back(std::move(*ker));
  }
  if (kernel.size() != 1)
    throw GhostDimensionError("ghost space has dimension " + std::to_string(kernel.size()) + ", expected 1");
  UEAElement<Rational> v(e);
  for (const auto& [m, c] : kernel[0]) v.add_term(word_of(m), c);
  Rational lead = v.coefficient(word_of(span - 1));
  if (lead == 0) lead = v.terms().rbegin()->second;
  v *= Rational(1) / lead;
  CosetGhost out{v, {}, "linear solve"};
  auto w = weight_of(v);
  out.weight = w ? *w : Weight{};
  return out;
}

bool coset_ghost_certificate(const GhostContext& ctx, const UEAElement<Rational>& v) {
  auto x = reorder(v, ctx.coset());
  for (int u = 0; u < ctx.algebra().dim(); ++u)
    if (!reduce_coset(ctx, left_mul_generator(u, x)).is_zero()) return false;
  return true;
}

bool proportional(const UEAElement<Rational>& a, const UEAElement<Rational>& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  auto bt = b.reordered_terms(a.engine());
  if (bt.size() != a.size()) return false;
  const auto& [w0, c0] = *a.terms().begin();
  auto it = bt.find(w0);
  if (it == bt.end()) return false;
  Rational r = it->second / c0;
  return a * r == b;
}

SemisimplicityResult semisimplicity_test(const GhostContext& ctx) {
  SemisimplicityResult r;
  if (!ber_trivial(ctx.algebra())) {
    r.reason = "Ber of the odd part is nontrivial";
    return r;
  }
  r.counit = ctx.vg().rep.counit();
  r.semisimple = r.counit != 0;
  r.reason = r.semisimple ? "counit of v_g is nonzero" : "counit of v_g vanishes";
  return r;
}

namespace detail {

std::vector<Word> weight_zero_words(const EnginePtr& e, int max_filtration) {
  std::vector<Word> out;
  const int n = e->dim();
  const auto& g = e->algebra();
  std::vector<Weight> wt(n);
  for (int p = 0; p < n; ++p) {
    const auto& w = g.basis(e->basis_index(p)).weight;
    if (!w) throw Unsupported("basis vector without a weight");
    wt[p] = *w;
  }
  Word cur;
  Weight acc(g.rank(), Rational(0));
  std::function<void(int, int)> rec = [&](int start, int budget) {
    if (std::all_of(acc.begin(), acc.end(), [](const Rational& x) { return x == 0; })) out.push_back(cur);
    for (int p = start; p < n; ++p) {
      const int cost = e->parity_at(p) ? 1 : 2;
      if (cost > budget) continue;
      cur.push_back(static_cast<std::uint16_t>(p));
      for (int k = 0; k < g.rank(); ++k) acc[k] += wt[p][k];
      rec(e->parity_at(p) ? p + 1 : p, budget - cost);
      for (int k = 0; k < g.rank(); ++k) acc[k] -= wt[p][k];
      cur.pop_back();
    }
  };
  rec(0, max_filtration);
  std::sort(out.begin(), out.end(), WordLess{});
  return out;
}

}  // namespace detail

std::vector<UEAElement<Rational>> center_of_even_part(const GhostContext& ctx, int d) {
  const EnginePtr& e = ctx.hc();
  const auto& g = ctx.algebra();
  std::vector<Word> words;
  for (auto& w : detail::weight_zero_words(e, 2 * d)) {
    bool even = std::all_of(w.begin(), w.end(), [&](auto p) { return !e->parity_at(p); });
    if (even) words.push_back(w);
  }
  const int stride = 1 << 20;
  std::map<Word, int, WordLess> wid;
  auto word_id = [&](const Word& w) {
    auto [it, ins] = wid.emplace(w, static_cast<int>(wid.size()));
    return it->second;
  };
  auto id = GradedAutomorphism<Rational>::identity(ctx.algebra_ptr());
  SparseEchelon<Rational> ech;
  std::vector<UEAElement<Rational>> out;
  for (std::size_t j = 0; j < words.size(); ++j) {
    UEAElement<Rational> m(e);
    m.add_term(words[j], Rational(1));
    SparseVec<Rational> img;
    for (int x : g.even_indices()) {
      auto br = twisted_adjoint(id, x, m);
      for (const auto& [w, c] : br.terms()) img.emplace(x * stride + word_id(w), c);
    }
    if (auto ker = ech.insert(static_cast<int>(j), std::move(img))) {
      UEAElement<Rational> z(e);
      for (const auto& [k, c] : *ker) z.add_term(words[k], c);
      auto lead = z.terms().rbegin()->second;
      out.push_back(z * (Rational(1) / lead));
    }
  }
  return out;
}

ProjectivityResult projectivity_polynomial(const GhostContext& ctx) {
  const auto& g = ctx.algebra();
  ProjectivityResult r;
  auto T = a_phi_element(ctx, GradedAutomorphism<Rational>::delta(ctx.algebra_ptr()));
  if (g.is_cartan_even()) {
    r.route = "group";
    r.p = *T.hc;
    r.p1 = r.p;
    r.bH = SuperPolynomial<Rational>::constant(cartan_ring<Rational>(g), Rational(1));
    r.xi = "1";
    r.factors = root_factorization(r.p, g, ctx.borel());
    return r;
  }
  r.route = "pair";
  auto split = split_top_odd(*T.hc);
  r.p1 = split.p;
  r.xi = split.xi;
  r.bH = clifford_poly_bH<Rational>(g);
  r.p = r.p1 * r.bH;
  r.degree_bound = static_cast<int>(g.cartan_odd().size());
  for (int i : ctx.borel().n_plus)
    if (g.parity(i)) ++r.degree_bound;
  if (r.p.twice_degree() > 2 * r.degree_bound)
    throw OracleViolation("p_{G,B} has degree above dim b_1 = " + std::to_string(r.degree_bound));
  return r;
}

UEAElement<Rational> subset_sum(const GhostContext& ctx, bool displayed_sign) {
  const auto& g = ctx.algebra();
  if (!g.is_type_i()) throw Unsupported("subset-sum central element needs a type I grading");
  std::vector<int> us, vs;
  for (int i : coset_odd_word(ctx)) (g.basis(i).z_degree > 0 ? us : vs).push_back(i);
  const int N = static_cast<int>(us.size());
  UEAElement<Rational> out(ctx.hc());
  for (int mask = 0; mask < (1 << N); ++mask) {
    int l = 0, s = 0;
    std::vector<int> word, right;
    for (int i = 0; i < N; ++i) {
      if (mask >> i & 1) {
        ++l;
        s += i + 1;
        right.push_back(us[i]);
      } else {
        word.push_back(us[i]);
      }
    }
    word.insert(word.end(), vs.begin(), vs.end());
    word.insert(word.end(), right.rbegin(), right.rend());
    const int exponent = (displayed_sign ? N * l : l) + s;
    out += normal_order<Rational>(ctx.hc(), word, Rational(exponent % 2 ? -1 : 1));
  }
  return out;
}

SubsetSumResult central_subset_sum_element(const GhostContext& ctx) {
  const auto& g = ctx.algebra();
  auto id = GradedAutomorphism<Rational>::identity(ctx.algebra_ptr());
  SubsetSumResult r;
  r.element = subset_sum(ctx, true);
  r.sign_rule = "displayed";
  if (!certify_invariant(id, r.element)) {
    r.element = subset_sum(ctx, false);
    r.sign_rule = "expansion";
    if (!certify_invariant(id, r.element)) throw CentralityError("subset sum does not commute with g");
  }
  r.hc = hc_project_group(r.element, ctx.borel());
  auto t = t_g_polynomial<Rational>(g, ctx.borel());
  auto q = r.hc.divide_exact(t);
  if (!q || q->is_zero() || q->twice_degree() != 0) throw CentralityError("HC of the subset sum is not a multiple of t_g");
  r.ratio = q->constant_term();
  return r;
}

UEAElement<Rational> limit_to_center(const GhostContext& ctx, const SuperPolynomial<Rational>& p) {
  if (p.is_zero()) return UEAElement<Rational>(ctx.hc());
  auto phi = GradedAutomorphism<RatFunc>::scale(ctx.algebra_ptr(), RatFunc::c());
  auto fam = solve_in_A_phi(ctx, phi, promote<RatFunc>(p));
  UEAElement<Rational> out(ctx.hc());
  for (const auto& [w, c] : fam.element.terms()) {
    auto v = c.eval(Rational(1));
    if (!v) throw NormalizationError("coefficient " + c.to_string() + " has a pole at c = 1");
    out.add_term(w, *v);
  }
  if (!certify_invariant(GradedAutomorphism<Rational>::identity(ctx.algebra_ptr()), out))
    throw CentralityError("limit at c = 1 is not central");
  if (hc_project_group(out, ctx.borel()) != p) throw NormalizationError("limit at c = 1 changed the HC image");
  return out;
}

}  // namespace gc
