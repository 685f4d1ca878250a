#include "gc/pair.hpp"
#include "gc/errors.hpp"

#include <algorithm>
#include <set>

namespace gc {

GeneratorOrdering IwasawaPairPresentation::ordering() const {
  std::vector<int> order;
  std::vector<Role> roles;
  for (int i : n) { order.push_back(i); roles.push_back(Role::n); }
  for (int i : a_even) { order.push_back(i); roles.push_back(Role::a); }
  for (int i : a_odd) { order.push_back(i); roles.push_back(Role::a); }
  for (int i : k) {
    order.push_back(i);
    bool in_t = std::count(t_even.begin(), t_even.end(), i) || std::count(t_odd.begin(), t_odd.end(), i);
    roles.push_back(in_t ? Role::t : Role::k);
  }
  return GeneratorOrdering::make("pair", order, roles);
}

IwasawaPairPresentation diagonal_pair(const LieSuperalgebra& g, const BorelChoice& b) {
  const int d = g.dim();
  // standard coordinates of g x g: i -> (e_i, 0), d + i -> (0, e_i)
  std::vector<Coords> vecs;
  std::vector<BasisVector> basis;
  IwasawaPairPresentation P;
  auto push = [&](Coords c, const std::string& name, int parity) {
    BasisVector v;
    v.name = name;
    v.parity = parity;
    v.index = static_cast<int>(basis.size());
    basis.push_back(v);
    vecs.push_back(std::move(c));
    return v.index;
  };
  for (int f : b.n_minus) P.n.push_back(push({{f, Rational(1)}}, "nl_" + g.basis(f).name, g.parity(f)));
  for (int e : b.n_plus) P.n.push_back(push({{d + e, Rational(1)}}, "nr_" + g.basis(e).name, g.parity(e)));
  const Rational half(1, 2);
  for (int h : g.cartan_even()) P.a_even.push_back(push({{h, half}, {d + h, -half}}, g.basis(h).name, 0));
  for (int h : g.cartan_odd()) P.a_odd.push_back(push({{h, half}, {d + h, -half}}, g.basis(h).name, 1));
  for (int i = 0; i < d; ++i) {
    int idx = push({{i, Rational(1)}, {d + i, Rational(1)}}, "k_" + g.basis(i).name, g.parity(i));
    P.k.push_back(idx);
    if (std::count(g.cartan_even().begin(), g.cartan_even().end(), i)) P.t_even.push_back(idx);
    if (std::count(g.cartan_odd().begin(), g.cartan_odd().end(), i)) P.t_odd.push_back(idx);
  }
  if (static_cast<int>(vecs.size()) != 2 * d)
    throw NoIwasawa("dimension count k + a + n differs from dim(g x g)");
  auto std_bracket = [&](const Coords& x, const Coords& y) {
    Coords out;
    for (const auto& [i, a] : x)
      for (const auto& [j, c] : y) {
        if ((i < d) != (j < d)) continue;
        int off = i < d ? 0 : d;
        for (const auto& [k, v] : g.bracket(i - off, j - off)) {
          Coords t{{k + off, Rational(a * c * v)}};
          axpy(out, Rational(1), t);
        }
      }
    return out;
  };
  SparseEchelon<Rational> ech;
  for (std::size_t i = 0; i < vecs.size(); ++i)
    if (ech.insert(static_cast<int>(i), vecs[i])) throw NoIwasawa("k + a + n is not a direct sum");
  LieSuperalgebra::Data hd;
  hd.name = g.name() + " x " + g.name();
  const int n = 2 * d;
  hd.table.assign(n, std::vector<Coords>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) hd.table[i][j] = *ech.express(std_bracket(vecs[i], vecs[j]));
  hd.basis = basis;
  hd.cartan_even = P.a_even;
  hd.cartan_even.insert(hd.cartan_even.end(), P.t_even.begin(), P.t_even.end());
  hd.cartan_odd = P.a_odd;
  hd.cartan_odd.insert(hd.cartan_odd.end(), P.t_odd.begin(), P.t_odd.end());
  P.host = std::make_shared<LieSuperalgebra>(std::move(hd));
  for (int i = 0; i < d; ++i) P.left_embedding.push_back(*ech.express({{i, Rational(1)}}));
  check_iwasawa(P);
  return P;
}

void check_iwasawa(const IwasawaPairPresentation& p) {
  const auto& h = *p.host;
  std::set<int> all;
  auto take = [&](const std::vector<int>& v) {
    for (int i : v)
      if (!all.insert(i).second) throw NoIwasawa("index sets overlap");
  };
  take(p.k);
  take(p.a_even);
  take(p.a_odd);
  take(p.n);
  if (static_cast<int>(all.size()) != h.dim()) throw NoIwasawa("k + a + n does not span the host");
  for (int i : p.t_even)
    if (!std::count(p.k.begin(), p.k.end(), i)) throw NoIwasawa("t must lie in k");
  for (int i : p.t_odd)
    if (!std::count(p.k.begin(), p.k.end(), i)) throw NoIwasawa("t must lie in k");
  auto closed = [&](const std::vector<int>& s) {
    std::set<int> ss(s.begin(), s.end());
    for (int i : s)
      for (int j : s)
        for (const auto& [k, v] : h.bracket(i, j))
          if (!ss.count(k)) return false;
    return true;
  };
  if (!closed(p.k)) throw NoIwasawa("k is not a subalgebra");
  if (!closed(p.n)) throw NoIwasawa("n is not a subalgebra");
}

}  // namespace gc
