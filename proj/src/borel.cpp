#include "gc/borel.hpp"
#include "gc/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

namespace gc {

std::vector<const Root*> BorelChoice::positive_roots() const {
  std::vector<const Root*> out;
  for (const auto& r : even_positive) out.push_back(&r);
  for (const auto& r : odd_positive) out.push_back(&r);
  return out;
}

Rational pairing(const Weight& w, const Weight& h) {
  Rational s = 0;
  for (std::size_t i = 0; i < w.size() && i < h.size(); ++i) s += w[i] * h[i];
  return s;
}

BorelChoice make_borel(const LieSuperalgebra& g, std::optional<Weight> positivity) {
  BorelChoice B;
  B.positivity = positivity ? *positivity : g.default_positivity().value_or(Weight(g.rank(), Rational(1)));
  if (static_cast<int>(B.positivity.size()) != g.rank())
    throw AmbiguousPositivity("positivity functional has wrong length");
  std::map<Weight, std::pair<int, std::vector<int>>> spaces;  // weight -> (parity, vectors)
  for (const auto& b : g.basis()) {
    if (!b.weight) throw Unsupported("basis vector " + b.name + " is not a weight vector");
    bool zero = std::all_of(b.weight->begin(), b.weight->end(), [](const Rational& x) { return x == 0; });
    if (zero) continue;
    auto& s = spaces[*b.weight];
    if (!s.second.empty() && s.first != b.parity)
      throw Unsupported("root space of mixed parity");
    s.first = b.parity;
    s.second.push_back(b.index);
  }
  for (const auto& [w, s] : spaces) {
    Rational f = pairing(w, B.positivity);
    if (f == 0) throw AmbiguousPositivity("positivity functional vanishes on a root");
    if (f < 0) {
      for (int i : s.second) B.n_minus.push_back(i);
      continue;
    }
    for (int i : s.second) B.n_plus.push_back(i);
    Root r;
    r.weight = w;
    r.parity = s.first;
    r.vectors = s.second;
    Weight nw = w;
    for (auto& x : nw) x = -x;
    auto it = spaces.find(nw);
    if (it == spaces.end()) throw Unsupported("root without negative");
    r.negatives = it->second.second;
    Coords h = g.bracket(r.vectors.front(), r.negatives.front());
    r.coroot.assign(g.rank(), Rational(0));
    for (const auto& [k, x] : h) {
      auto pos = std::find(g.cartan_even().begin(), g.cartan_even().end(), k);
      if (pos == g.cartan_even().end()) throw Unsupported("[g_alpha, g_-alpha] leaves the Cartan even part");
      r.coroot[pos - g.cartan_even().begin()] = x;
    }
    r.isotropic = r.parity == 1 && pairing(r.weight, r.coroot) == 0;
    (r.parity ? B.odd_positive : B.even_positive).push_back(r);
  }
  std::sort(B.n_plus.begin(), B.n_plus.end());
  std::sort(B.n_minus.begin(), B.n_minus.end());
  auto decomposable = [&](const Weight& w, bool even_only) {
    auto all = B.positive_roots();
    for (const Root* a : all) {
      if (even_only && a->parity) continue;
      Weight rest = w;
      for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= a->weight[k];
      for (const Root* b : all) {
        if (even_only && b->parity) continue;
        if (b->weight == rest) return true;
      }
    }
    return false;
  };
  for (auto* list : {&B.even_positive, &B.odd_positive})
    for (auto& r : *list) {
      r.simple = !decomposable(r.weight, false);
      r.even_simple = r.parity == 0 && !decomposable(r.weight, true);
    }
  B.rho.assign(g.rank(), Rational(0));
  for (const auto& r : B.even_positive)
    for (int k = 0; k < g.rank(); ++k) B.rho[k] += r.weight[k] * Rational(static_cast<int>(r.vectors.size()), 2);
  for (const auto& r : B.odd_positive)
    for (int k = 0; k < g.rank(); ++k) B.rho[k] -= r.weight[k] * Rational(static_cast<int>(r.vectors.size()), 2);
  return B;
}

BorelChoice borel_from_option(const LieSuperalgebra& g, const std::string& option) {
  if (option.empty() || option == "standard") return make_borel(g);
  std::ifstream in(option);
  if (!in) throw Unsupported("cannot open Borel file " + option);
  nlohmann::json j;
  in >> j;
  Weight p;
  for (const auto& x : j.at("positivity")) p.push_back(parse_rational(x.get<std::string>()));
  return make_borel(g, p);
}

}  // namespace gc
