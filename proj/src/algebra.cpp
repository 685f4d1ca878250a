#include "gc/algebra.hpp"
#include "gc/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace gc {

namespace {

int sign_of(int p) { return (p & 1) ? -1 : 1; }

Weight unit(int rank, int i, int s = 1) {
  Weight w(rank, Rational(0));
  w[i] = s;
  return w;
}

Weight add(Weight a, const Weight& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Weight neg(Weight a) {
  for (auto& x : a) x = -x;
  return a;
}

bool is_zero_weight(const Weight& w) {
  for (const auto& x : w)
    if (x != 0) return false;
  return true;
}

SparseVec<Rational> flatten(const Mat<Rational>& m) {
  SparseVec<Rational> v;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) v.emplace(r * static_cast<int>(m.cols()) + c, m(r, c));
  return v;
}

Mat<Rational> zero_mat(int n) {
  Mat<Rational> m(n, n);
  m.setConstant(Rational(0));
  return m;
}

Mat<Rational> unit_mat(int n, int r, int c) {
  Mat<Rational> m = zero_mat(n);
  m(r, c) = 1;
  return m;
}

}  // namespace

// ---------------------------------------------------------------- LieSuperalgebra

LieSuperalgebra::LieSuperalgebra(Data d) : d_(std::move(d)) {
  const int n = dim();
  if (static_cast<int>(d_.table.size()) != n) throw InvalidAlgebra("bracket table has wrong size");
  for (int i = 0; i < n; ++i) d_.basis[i].index = i;
  compute_weights();
}

void LieSuperalgebra::compute_weights() {
  const int r = rank();
  for (auto& b : d_.basis) {
    Weight w(r, Rational(0));
    bool ok = true;
    for (int k = 0; k < r && ok; ++k) {
      const Coords& c = d_.table[d_.cartan_even[k]][b.index];
      if (c.empty()) continue;
      if (c.size() == 1 && c.begin()->first == b.index) w[k] = c.begin()->second;
      else ok = false;
    }
    if (ok) b.weight = w;
    else b.weight.reset();
  }
}

std::optional<int> LieSuperalgebra::index_of(const std::string& name) const {
  for (const auto& b : d_.basis)
    if (b.name == name) return b.index;
  return std::nullopt;
}

Coords LieSuperalgebra::bracket(const Coords& x, const Coords& y) const {
  Coords out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) axpy(out, Rational(a * b), d_.table[i][j]);
  return out;
}

std::vector<int> LieSuperalgebra::odd_indices() const {
  std::vector<int> out;
  for (const auto& b : d_.basis)
    if (b.parity) out.push_back(b.index);
  return out;
}

std::vector<int> LieSuperalgebra::even_indices() const {
  std::vector<int> out;
  for (const auto& b : d_.basis)
    if (!b.parity) out.push_back(b.index);
  return out;
}

bool LieSuperalgebra::is_abelian() const {
  for (const auto& row : d_.table)
    for (const auto& c : row)
      if (!c.empty()) return false;
  return true;
}

bool LieSuperalgebra::odd_square_central() const {
  for (int i : odd_indices())
    for (int j : odd_indices()) {
      const Coords& c = d_.table[i][j];
      for (int k = 0; k < dim(); ++k)
        if (!bracket(c, Coords{{k, Rational(1)}}).empty()) return false;
    }
  return true;
}

nlohmann::json LieSuperalgebra::to_json() const {
  nlohmann::json j;
  j["format"] = "gc-structure-constants";
  j["version"] = 1;
  j["name"] = d_.name;
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& b : d_.basis) {
    nlohmann::json e{{"name", b.name}, {"parity", b.parity}, {"z_degree", b.z_degree}};
    if (b.weight) {
      std::vector<std::string> w;
      for (const auto& x : *b.weight) w.push_back(x.str());
      e["weight"] = w;
    }
    basis.push_back(e);
  }
  j["basis"] = basis;
  nlohmann::json br = nlohmann::json::array();
  for (int a = 0; a < dim(); ++a)
    for (int b = a; b < dim(); ++b) {
      const Coords& c = d_.table[a][b];
      if (c.empty()) continue;
      nlohmann::json v = nlohmann::json::array();
      for (const auto& [k, x] : c) v.push_back(nlohmann::json::array({k, x.str()}));
      br.push_back(nlohmann::json::array({a, b, v}));
    }
  j["brackets"] = br;
  j["cartan_even"] = d_.cartan_even;
  j["cartan_odd"] = d_.cartan_odd;
  j["type_i"] = d_.type_i;
  if (d_.positivity) {
    std::vector<std::string> p;
    for (const auto& x : *d_.positivity) p.push_back(x.str());
    j["positivity"] = p;
  }
  return j;
}

std::string LieSuperalgebra::fingerprint() const {
  nlohmann::json j = to_json();
  j.erase("name");
  std::string s = j.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

AlgebraPtr algebra_from_json(const nlohmann::json& j) {
  if (j.value("format", "") != "gc-structure-constants")
    throw UnsupportedAlgebra("unknown structure-constant format");
  if (j.value("version", 0) != 1) throw UnsupportedAlgebra("unsupported structure-constant version");
  LieSuperalgebra::Data d;
  d.name = j.value("name", "custom");
  for (const auto& e : j.at("basis")) {
    BasisVector b;
    b.name = e.at("name").get<std::string>();
    b.parity = e.at("parity").get<int>();
    b.z_degree = e.value("z_degree", 0);
    b.index = static_cast<int>(d.basis.size());
    d.basis.push_back(b);
  }
  const int n = static_cast<int>(d.basis.size());
  d.table.assign(n, std::vector<Coords>(n));
  std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
  for (const auto& e : j.at("brackets")) {
    int a = e.at(0).get<int>(), b = e.at(1).get<int>();
    if (a < 0 || b < 0 || a >= n || b >= n) throw InvalidAlgebra("bracket index out of range");
    Coords c;
    for (const auto& t : e.at(2)) {
      Rational x = parse_rational(t.at(1).get<std::string>());
      if (x != 0) c[t.at(0).get<int>()] += x;
    }
    d.table[a][b] = c;
    given[a][b] = true;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (given[a][b] && !given[b][a]) {
        Coords c;
        axpy(c, Rational(-sign_of(d.basis[a].parity * d.basis[b].parity)), d.table[a][b]);
        d.table[b][a] = c;
        given[b][a] = true;
      }
  d.cartan_even = j.value("cartan_even", std::vector<int>{});
  d.cartan_odd = j.value("cartan_odd", std::vector<int>{});
  d.type_i = j.value("type_i", false);
  if (j.contains("positivity")) {
    Weight p;
    for (const auto& x : j["positivity"]) p.push_back(parse_rational(x.get<std::string>()));
    d.positivity = p;
  }
  auto g = std::make_shared<LieSuperalgebra>(std::move(d));
  if (j.contains("basis")) {
    for (std::size_t i = 0; i < j["basis"].size(); ++i) {
      const auto& e = j["basis"][i];
      if (!e.contains("weight")) continue;
      Weight w;
      for (const auto& x : e["weight"]) w.push_back(parse_rational(x.get<std::string>()));
      if (g->basis(static_cast<int>(i)).weight != std::optional<Weight>(w))
        throw InvalidAlgebra("declared weight of " + g->basis(static_cast<int>(i)).name +
                             " disagrees with the Cartan action");
    }
  }
  auto rep = validate_algebra(*g);
  if (!rep.ok()) throw InvalidAlgebra("structure constants fail validation: " + rep.failures.front());
  return g;
}

// ---------------------------------------------------------------- matrix construction

Mat<Rational> supercommutator(const Mat<Rational>& a, int pa, const Mat<Rational>& b, int pb) {
  Mat<Rational> ab = a * b;
  Mat<Rational> ba = b * a;
  if (sign_of(pa * pb) < 0) return ab + ba;
  return ab - ba;
}

LieSuperalgebra::Data algebra_from_matrices(std::string name, std::vector<BasisVector> basis,
                                            SuperMatrixRep rep, std::vector<int> cartan_even,
                                            std::vector<int> cartan_odd) {
  const int n = static_cast<int>(basis.size());
  SparseEchelon<Rational> ech;
  for (int i = 0; i < n; ++i) {
    const Mat<Rational>& m = rep.matrices[i];
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        if (m(r, c) != 0 && ((rep.row_parity[r] + rep.row_parity[c]) & 1) != basis[i].parity)
          throw InvalidAlgebra("basis matrix " + basis[i].name + " is not homogeneous");
    if (ech.insert(i, flatten(m))) throw InvalidAlgebra("basis matrices are linearly dependent");
  }
  LieSuperalgebra::Data d;
  d.name = std::move(name);
  d.table.assign(n, std::vector<Coords>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat<Rational> c = supercommutator(rep.matrices[i], basis[i].parity, rep.matrices[j], basis[j].parity);
      auto x = ech.express(flatten(c));
      if (!x) throw InvalidAlgebra("span of " + d.name + " basis is not closed under the bracket");
      d.table[i][j] = *x;
    }
  for (int i = 0; i < n; ++i) basis[i].index = i;
  d.basis = std::move(basis);
  d.cartan_even = std::move(cartan_even);
  d.cartan_odd = std::move(cartan_odd);
  d.rep = std::move(rep);
  return d;
}

namespace {

std::string gl_name(int i, int j) { return "e" + std::to_string(i + 1) + std::to_string(j + 1); }

struct GlShape {
  int m, n;
  int N() const { return m + n; }
  int par(int i) const { return i >= m ? 1 : 0; }
};

// Root vectors E_ij in the order: even, then g_1, then g_-1.
void add_gl_roots(const GlShape& s, std::vector<BasisVector>& basis, SuperMatrixRep& rep, bool gl11) {
  const int N = s.N();
  auto push = [&](int i, int j) {
    BasisVector b;
    b.parity = (s.par(i) + s.par(j)) & 1;
    b.z_degree = b.parity ? (s.par(i) == 0 ? 1 : -1) : 0;
    b.name = gl11 ? (i == 0 ? "x" : "y") : gl_name(i, j);
    basis.push_back(b);
    rep.matrices.push_back(unit_mat(N, i, j));
  };
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (i != j && s.par(i) == s.par(j)) push(i, j);
  for (int i = 0; i < s.m; ++i)
    for (int j = s.m; j < N; ++j) push(i, j);
  for (int i = s.m; i < N; ++i)
    for (int j = 0; j < s.m; ++j) push(i, j);
}

}  // namespace

AlgebraPtr make_gl(int m, int n) {
  if (m < 0 || n < 0 || m + n < 1 || (m + n) * (m + n) > 64)
    throw UnsupportedAlgebra("gl(" + std::to_string(m) + "|" + std::to_string(n) + ") outside supported range");
  GlShape s{m, n};
  const int N = s.N();
  SuperMatrixRep rep;
  for (int i = 0; i < N; ++i) rep.row_parity.push_back(s.par(i));
  std::vector<BasisVector> basis;
  std::vector<int> cartan;
  for (int k = 0; k < N; ++k) {
    BasisVector b;
    b.name = "h" + std::to_string(k + 1);
    basis.push_back(b);
    rep.matrices.push_back(unit_mat(N, k, k));
    cartan.push_back(k);
  }
  add_gl_roots(s, basis, rep, m == 1 && n == 1);
  auto d = algebra_from_matrices("gl(" + std::to_string(m) + "|" + std::to_string(n) + ")", std::move(basis),
                                 std::move(rep), cartan, {});
  d.type_i = n > 0 && m > 0;
  Weight p;
  for (int k = 0; k < N; ++k) p.push_back(Rational(N - k));
  d.positivity = p;
  return std::make_shared<LieSuperalgebra>(std::move(d));
}

AlgebraPtr make_sl(int m, int n) {
  if (m == n) throw UnsupportedAlgebra("sl(m|n) requires m != n");
  if (m < 0 || n < 0 || m + n < 2 || (m + n) * (m + n) > 65)
    throw UnsupportedAlgebra("sl(" + std::to_string(m) + "|" + std::to_string(n) + ") outside supported range");
  GlShape s{m, n};
  const int N = s.N();
  SuperMatrixRep rep;
  for (int i = 0; i < N; ++i) rep.row_parity.push_back(s.par(i));
  std::vector<BasisVector> basis;
  std::vector<int> cartan;
  for (int k = 0; k + 1 < N; ++k) {
    BasisVector b;
    b.name = "h" + std::to_string(k + 1);
    basis.push_back(b);
    Mat<Rational> h = unit_mat(N, k, k);
    // supertrace zero: E_kk - (-1)^{p_k + p_{k+1}} E_{k+1,k+1}
    h(k + 1, k + 1) = s.par(k) == s.par(k + 1) ? -1 : 1;
    rep.matrices.push_back(h);
    cartan.push_back(k);
  }
  add_gl_roots(s, basis, rep, false);
  // positivity: diag(N..1) shifted into supertrace zero, expressed in the Cartan basis
  Rational strf = 0;
  for (int k = 0; k < N; ++k) strf += Rational(s.par(k) ? -(N - k) : (N - k));
  Rational t = strf / Rational(m - n);
  Mat<Rational> a(N, N - 1);
  a.setConstant(Rational(0));
  Vec<Rational> b(N);
  for (int k = 0; k + 1 < N; ++k)
    for (int i = 0; i < N; ++i) a(i, k) = rep.matrices[k](i, i);
  for (int i = 0; i < N; ++i) b(i) = Rational(N - i) - t;
  auto sol = solve(a, b);
  auto d = algebra_from_matrices("sl(" + std::to_string(m) + "|" + std::to_string(n) + ")", std::move(basis),
                                 std::move(rep), cartan, {});
  d.type_i = n > 0 && m > 0;
  if (sol) d.positivity = Weight(sol->data(), sol->data() + sol->size());
  return std::make_shared<LieSuperalgebra>(std::move(d));
}

namespace {

// Shared osp construction: V has homogeneous weight basis with form G.
struct OspSpace {
  std::vector<int> parity;
  std::vector<Weight> weight;
  Mat<Rational> form;
};

// Solves the form-preservation condition on the span of matrix units of weight mu and parity p.
std::optional<Mat<Rational>> osp_root_vector(const OspSpace& V, const Weight& mu, int p) {
  const int N = static_cast<int>(V.parity.size());
  std::vector<std::pair<int, int>> units;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      if (((V.parity[a] + V.parity[b]) & 1) == p) {
        Weight diff = V.weight[a];
        for (std::size_t k = 0; k < diff.size(); ++k) diff[k] -= V.weight[b][k];
        if (diff == mu) units.emplace_back(a, b);
      }
  if (units.empty()) return std::nullopt;
  // rows (u,v): sum_a X_au G_av + (-1)^{p p_u} sum_a G_ua X_av
  Mat<Rational> cond(N * N, static_cast<int>(units.size()));
  cond.setConstant(Rational(0));
  for (std::size_t k = 0; k < units.size(); ++k) {
    auto [a, b] = units[k];
    for (int v = 0; v < N; ++v) cond(b * N + v, k) += V.form(a, v);                  // X_ab with u=b
    for (int u = 0; u < N; ++u) cond(u * N + b, k) += Rational(sign_of(p * V.parity[u])) * V.form(u, a);
  }
  Mat<Rational> ker = nullspace(cond);
  if (ker.cols() == 0) return std::nullopt;
  if (ker.cols() > 1) throw InvalidAlgebra("osp root space of dimension > 1");
  Mat<Rational> x = zero_mat(N);
  Rational lead = 0;
  for (std::size_t k = 0; k < units.size(); ++k)
    if (ker(k, 0) != 0) { lead = ker(k, 0); break; }
  for (std::size_t k = 0; k < units.size(); ++k) x(units[k].first, units[k].second) = ker(k, 0) / lead;
  return x;
}

std::string pair_name(const char* p, int i, int j) { return p + std::to_string(i + 1) + std::to_string(j + 1); }

}  // namespace

AlgebraPtr make_osp1(int n) {
  if (n < 1 || n > 3) throw UnsupportedAlgebra("osp(1|2n) supported for n = 1..3");
  OspSpace V;
  const int N = 1 + 2 * n;
  V.parity.assign(N, 1);
  V.parity[0] = 0;
  V.weight.assign(N, Weight(n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    V.weight[1 + i] = unit(n, i);
    V.weight[1 + n + i] = unit(n, i, -1);
  }
  V.form = zero_mat(N);
  V.form(0, 0) = 1;
  for (int i = 0; i < n; ++i) {
    V.form(1 + i, 1 + n + i) = 1;
    V.form(1 + n + i, 1 + i) = -1;
  }
  SuperMatrixRep rep;
  rep.row_parity = V.parity;
  std::vector<BasisVector> basis;
  std::vector<int> cartan;
  for (int i = 0; i < n; ++i) {
    Mat<Rational> h = zero_mat(N);
    h(1 + i, 1 + i) = 1;
    h(1 + n + i, 1 + n + i) = -1;
    BasisVector b;
    b.name = "h" + std::to_string(i + 1);
    basis.push_back(b);
    rep.matrices.push_back(h);
    cartan.push_back(i);
  }
  auto add_even = [&](const Weight& mu, const std::string& name) {
    auto x = osp_root_vector(V, mu, 0);
    if (!x) throw InvalidAlgebra("missing osp root " + name);
    BasisVector b;
    b.name = name;
    basis.push_back(b);
    rep.matrices.push_back(*x);
  };
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) add_even(add(unit(n, i), unit(n, j)), pair_name("e", i, j));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) add_even(neg(add(unit(n, i), unit(n, j))), pair_name("f", i, j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) add_even(add(unit(n, i), unit(n, j, -1)), pair_name("g", i, j));
  for (int i = 0; i < n; ++i) {
    auto u = osp_root_vector(V, unit(n, i), 1);
    auto v = osp_root_vector(V, unit(n, i, -1), 1);
    if (!u || !v) throw InvalidAlgebra("missing odd osp root");
    Mat<Rational> h = supercommutator(*u, 1, *v, 1);
    Rational c = h(1 + i, 1 + i);
    if (c == 0) throw InvalidAlgebra("degenerate odd pairing in osp");
    Mat<Rational> vs = *v / c;
    if (supercommutator(*u, 1, vs, 1) != rep.matrices[i])
      throw InvalidAlgebra("[u_i, v_i] is not proportional to h_i");
    BasisVector bu, bv;
    bu.name = "u" + std::to_string(i + 1);
    bu.parity = 1;
    bv.name = "v" + std::to_string(i + 1);
    bv.parity = 1;
    basis.push_back(bu);
    rep.matrices.push_back(*u);
    basis.push_back(bv);
    rep.matrices.push_back(vs);
  }
  auto d = algebra_from_matrices("osp(1|" + std::to_string(2 * n) + ")", std::move(basis), std::move(rep),
                                 cartan, {});
  Weight p;
  for (int i = 0; i < n; ++i) p.push_back(Rational(n - i));
  d.positivity = p;
  return std::make_shared<LieSuperalgebra>(std::move(d));
}

AlgebraPtr make_osp2(int n) {
  if (n < 1 || n > 3) throw UnsupportedAlgebra("osp(2|2n) supported for n = 1..3");
  const int r = n + 1;
  OspSpace V;
  const int N = 2 + 2 * n;
  V.parity.assign(N, 1);
  V.parity[0] = V.parity[1] = 0;
  V.weight.assign(N, Weight(r, Rational(0)));
  V.weight[0] = unit(r, 0);
  V.weight[1] = unit(r, 0, -1);
  for (int i = 0; i < n; ++i) {
    V.weight[2 + i] = unit(r, 1 + i);
    V.weight[2 + n + i] = unit(r, 1 + i, -1);
  }
  V.form = zero_mat(N);
  V.form(0, 1) = V.form(1, 0) = 1;
  for (int i = 0; i < n; ++i) {
    V.form(2 + i, 2 + n + i) = 1;
    V.form(2 + n + i, 2 + i) = -1;
  }
  SuperMatrixRep rep;
  rep.row_parity = V.parity;
  std::vector<BasisVector> basis;
  std::vector<int> cartan;
  {
    Mat<Rational> h = zero_mat(N);
    h(0, 0) = 1;
    h(1, 1) = -1;
    BasisVector b;
    b.name = "h0";
    basis.push_back(b);
    rep.matrices.push_back(h);
    cartan.push_back(0);
  }
  for (int i = 0; i < n; ++i) {
    Mat<Rational> h = zero_mat(N);
    h(2 + i, 2 + i) = 1;
    h(2 + n + i, 2 + n + i) = -1;
    BasisVector b;
    b.name = "h" + std::to_string(i + 1);
    basis.push_back(b);
    rep.matrices.push_back(h);
    cartan.push_back(1 + i);
  }
  auto d_unit = [&](int i, int s = 1) { return unit(r, 1 + i, s); };
  auto add_root = [&](const Weight& mu, int p, int z, const std::string& name) {
    auto x = osp_root_vector(V, mu, p);
    if (!x) throw InvalidAlgebra("missing osp root " + name);
    BasisVector b;
    b.name = name;
    b.parity = p;
    b.z_degree = z;
    basis.push_back(b);
    rep.matrices.push_back(*x);
  };
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) add_root(add(d_unit(i), d_unit(j)), 0, 0, pair_name("e", i, j));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) add_root(neg(add(d_unit(i), d_unit(j))), 0, 0, pair_name("f", i, j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) add_root(add(d_unit(i), d_unit(j, -1)), 0, 0, pair_name("g", i, j));
  for (int i = 0; i < n; ++i) {
    add_root(add(unit(r, 0), d_unit(i)), 1, 1, "xp" + std::to_string(i + 1));
    add_root(add(unit(r, 0), d_unit(i, -1)), 1, 1, "xm" + std::to_string(i + 1));
  }
  for (int i = 0; i < n; ++i) {
    add_root(add(unit(r, 0, -1), d_unit(i)), 1, -1, "yp" + std::to_string(i + 1));
    add_root(add(unit(r, 0, -1), d_unit(i, -1)), 1, -1, "ym" + std::to_string(i + 1));
  }
  auto d = algebra_from_matrices("osp(2|" + std::to_string(2 * n) + ")", std::move(basis), std::move(rep),
                                 cartan, {});
  d.type_i = true;
  Weight p;
  p.push_back(Rational(n + 1));
  for (int i = 0; i < n; ++i) p.push_back(Rational(n - i));
  d.positivity = p;
  return std::make_shared<LieSuperalgebra>(std::move(d));
}

AlgebraPtr make_abelian(int m, int n) {
  if (m < 0 || n < 0 || m + n < 1 || m + n > 40) throw UnsupportedAlgebra("abelian(m|n) outside supported range");
  LieSuperalgebra::Data d;
  d.name = "abelian(" + std::to_string(m) + "|" + std::to_string(n) + ")";
  for (int i = 0; i < m; ++i) {
    BasisVector b;
    b.name = "a" + std::to_string(i + 1);
    d.basis.push_back(b);
    d.cartan_even.push_back(i);
  }
  for (int i = 0; i < n; ++i) {
    BasisVector b;
    b.name = "xi" + std::to_string(i + 1);
    b.parity = 1;
    d.basis.push_back(b);
    d.cartan_odd.push_back(m + i);
  }
  d.table.assign(m + n, std::vector<Coords>(m + n));
  d.positivity = Weight(m, Rational(1));
  return std::make_shared<LieSuperalgebra>(std::move(d));
}

AlgebraPtr make_q1() {
  SuperMatrixRep rep;
  rep.row_parity = {0, 1};
  Mat<Rational> h = zero_mat(2), b = zero_mat(2);
  h(0, 0) = h(1, 1) = 1;
  b(0, 1) = b(1, 0) = 1;
  rep.matrices = {h, b};
  BasisVector bh, bb;
  bh.name = "h";
  bb.name = "b";
  bb.parity = 1;
  auto d = algebra_from_matrices("q(1)", {bh, bb}, std::move(rep), {0}, {1});
  d.positivity = Weight{Rational(1)};
  return std::make_shared<LieSuperalgebra>(std::move(d));
}

AlgebraPtr build_algebra(const std::string& spec_in) {
  std::string spec;
  for (char ch : spec_in)
    if (!std::isspace(static_cast<unsigned char>(ch))) spec += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (spec_in.rfind("file:", 0) == 0) {
    std::ifstream in(spec_in.substr(5));
    if (!in) throw UnsupportedAlgebra("cannot open structure-constant file " + spec_in.substr(5));
    nlohmann::json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw UnsupportedAlgebra(std::string("malformed structure-constant file: ") + e.what());
    }
    return algebra_from_json(j);
  }
  static const std::regex re(R"(^([a-z]+)(?:\(|,)?(\d+)(?:[|,](\d+))?\)?$)");
  std::smatch m;
  if (!std::regex_match(spec, m, re)) throw UnsupportedAlgebra("unrecognized algebra '" + spec_in + "'");
  std::string fam = m[1];
  int a = std::stoi(m[2]);
  bool has_b = m[3].matched;
  int b = has_b ? std::stoi(m[3]) : -1;
  if (fam == "gl" && has_b) return make_gl(a, b);
  if (fam == "sl" && has_b) return make_sl(a, b);
  if (fam == "osp" && has_b && b % 2 == 0 && b > 0) {
    if (a == 1) return make_osp1(b / 2);
    if (a == 2) return make_osp2(b / 2);
  }
  if (fam == "abelian" && has_b) return make_abelian(a, b);
  if (fam == "q" && !has_b && a == 1) return make_q1();
  throw UnsupportedAlgebra("unsupported family or parameters '" + spec_in + "'");
}

// ---------------------------------------------------------------- validation

namespace {

std::string coords_string(const LieSuperalgebra& g, const Coords& c) {
  if (c.empty()) return "0";
  std::string s;
  for (const auto& [k, x] : c) s += (s.empty() ? "" : " + ") + x.str() + "*" + g.basis(k).name;
  return s;
}

}  // namespace

ValidationReport validate_algebra(const LieSuperalgebra& g) {
  ValidationReport rep;
  const int n = g.dim();
  auto nm = [&](int i) { return g.basis(i).name; };
  for (int i : g.cartan_even())
    if (g.parity(i)) rep.failures.push_back("Cartan even element " + nm(i) + " is odd");
  for (int i : g.cartan_odd())
    if (!g.parity(i)) rep.failures.push_back("Cartan odd element " + nm(i) + " is even");
  for (int i : g.cartan_even())
    for (int j : g.cartan_even())
      if (!g.bracket(i, j).empty()) rep.failures.push_back("Cartan even part is not abelian at " + nm(i) + "," + nm(j));
  for (int i = 0; i < n; ++i) {
    const auto& b = g.basis(i);
    if (g.is_type_i() && (b.parity != 0) != (b.z_degree != 0))
      rep.failures.push_back("parity inconsistent with z_degree for " + b.name);
    if (b.weight) {
      bool zero = std::all_of(b.weight->begin(), b.weight->end(), [](const Rational& x) { return x == 0; });
      bool in_cartan = std::count(g.cartan_even().begin(), g.cartan_even().end(), i) ||
                       std::count(g.cartan_odd().begin(), g.cartan_odd().end(), i);
      if (zero && !in_cartan && !b.parity)
        rep.failures.push_back("even zero-weight vector " + b.name + " outside the designated Cartan");
      if (!zero && in_cartan) rep.failures.push_back("Cartan element " + b.name + " has nonzero weight");
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ++rep.checked_pairs;
      const int pi = g.parity(i), pj = g.parity(j);
      Coords lhs = g.bracket(i, j);
      axpy(lhs, Rational(sign_of(pi * pj)), g.bracket(j, i));
      if (!lhs.empty())
        rep.failures.push_back("antisymmetry fails for [" + nm(i) + "," + nm(j) + "]");
      for (const auto& [k, x] : g.bracket(i, j)) {
        if (g.parity(k) != ((pi + pj) & 1))
          rep.failures.push_back("parity not additive in [" + nm(i) + "," + nm(j) + "]");
        if (g.basis(k).z_degree != g.basis(i).z_degree + g.basis(j).z_degree)
          rep.failures.push_back("z-degree not additive in [" + nm(i) + "," + nm(j) + "]");
        const auto& wi = g.basis(i).weight;
        const auto& wj = g.basis(j).weight;
        const auto& wk = g.basis(k).weight;
        if (wi && wj && wk && add(*wi, *wj) != *wk)
          rep.failures.push_back("weight not additive in [" + nm(i) + "," + nm(j) + "]");
      }
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        ++rep.checked_triples;
        const Coords ei{{i, Rational(1)}}, ej{{j, Rational(1)}}, ek{{k, Rational(1)}};
        Coords lhs = g.bracket(ei, g.bracket(j, k));
        Coords rhs = g.bracket(g.bracket(i, j), ek);
        axpy(rhs, Rational(sign_of(g.parity(i) * g.parity(j))), g.bracket(ej, g.bracket(i, k)));
        axpy(lhs, Rational(-1), rhs);
        if (!lhs.empty())
          rep.failures.push_back("Jacobi fails on (" + nm(i) + "," + nm(j) + "," + nm(k) +
                                 "): defect " + coords_string(g, lhs));
      }
  return rep;
}

bool root_pairings_nondegenerate(const LieSuperalgebra& g) {
  std::map<Weight, std::vector<int>> spaces;
  for (const auto& b : g.basis())
    if (b.weight && !is_zero_weight(*b.weight)) spaces[*b.weight].push_back(b.index);
  for (const auto& [w, xs] : spaces) {
    auto it = spaces.find(neg(w));
    if (it == spaces.end()) return false;
    const auto& ys = it->second;
    // rows: (y, target coordinate); columns: x
    std::set<int> targets;
    for (int x : xs)
      for (int y : ys)
        for (const auto& [k, v] : g.bracket(x, y)) targets.insert(k);
    std::vector<int> tv(targets.begin(), targets.end());
    Mat<Rational> m(static_cast<int>(ys.size() * tv.size()), static_cast<int>(xs.size()));
    m.setConstant(Rational(0));
    for (std::size_t c = 0; c < xs.size(); ++c)
      for (std::size_t r = 0; r < ys.size(); ++r)
        for (std::size_t t = 0; t < tv.size(); ++t) {
          auto f = g.bracket(xs[c], ys[r]).find(tv[t]);
          if (f != g.bracket(xs[c], ys[r]).end()) m(static_cast<int>(r * tv.size() + t), static_cast<int>(c)) = f->second;
        }
    if (rank(m) != static_cast<int>(xs.size())) return false;
  }
  return true;
}

}  // namespace gc
