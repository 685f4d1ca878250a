#include "support.hpp"

#include <doctest.h>

using namespace gct;

namespace {
const std::vector<std::string> builtins{"gl(1|1)", "gl(2|1)", "gl(2|2)", "sl(2|1)", "osp(1|2)", "osp(1|4)",
                                        "osp(2|2)", "abelian(0|2)", "abelian(3|2)", "q(1)"};
}

TEST_CASE("built-in algebras satisfy super antisymmetry and super Jacobi") {
  for (const auto& s : builtins) {
    CAPTURE(s);
    auto g = build_algebra(s);
    auto r = validate_algebra(*g);
    CHECK(r.ok());
    CHECK(r.checked_triples > 0);
  }
}

TEST_CASE("brackets agree with supercommutators in the defining representation") {
  for (const auto& s : builtins) {
    CAPTURE(s);
    auto g = build_algebra(s);
    if (!g->rep()) continue;
    const auto& rep = *g->rep();
    for (int i = 0; i < g->dim(); ++i)
      for (int j = 0; j < g->dim(); ++j) {
        Mat<Q> want = supercommutator(rep.matrices[i], g->parity(i), rep.matrices[j], g->parity(j));
        Mat<Q> got = Mat<Q>::Zero(want.rows(), want.cols());
        for (const auto& [k, c] : g->bracket(i, j)) got += rep.matrices[k] * c;
        CHECK(got == want);
      }
  }
}

TEST_CASE("a flipped bracket sign is caught by validation") {
  auto g = build_algebra("gl(1|1)");
  auto d = g->data();
  const int x = *g->index_of("x"), h1 = *g->index_of("h1");
  for (auto& [k, c] : d.table[h1][x]) c = -c;
  LieSuperalgebra bad(d);
  CHECK_FALSE(validate_algebra(bad).ok());
}

TEST_CASE("algebra names parse in both spellings") {
  CHECK(build_algebra("gl,2,1")->fingerprint() == build_algebra("gl(2|1)")->fingerprint());
  CHECK(build_algebra("osp1,2")->fingerprint() == build_algebra("osp(1|2)")->fingerprint());
  CHECK_THROWS(build_algebra("e8"));
}

TEST_CASE("dimensions and root data") {
  CHECK(build_algebra("gl(2|1)")->dim() == 9);
  CHECK(build_algebra("osp(1|2)")->dim() == 5);
  CHECK(build_algebra("q(1)")->dim() == 2);
  auto g = build_algebra("gl(2|1)");
  auto b = make_borel(*g);
  CHECK(b.even_positive.size() == 1);
  CHECK(b.odd_positive.size() == 2);
  for (const auto& s : {"gl(1|1)", "gl(2|1)", "sl(2|1)", "osp(1|2)", "osp(2|2)"}) CHECK(root_pairings_nondegenerate(*build_algebra(s)));
}

TEST_CASE("fingerprints are stable and distinguish algebras") {
  CHECK(build_algebra("gl(1|1)")->fingerprint() == build_algebra("gl(1|1)")->fingerprint());
  CHECK(build_algebra("gl(1|1)")->fingerprint() != build_algebra("abelian(2|2)")->fingerprint());
}

TEST_CASE("algebra json round trip") {
  for (const auto& s : builtins) {
    CAPTURE(s);
    auto g = build_algebra(s);
    auto h = algebra_from_json(g->to_json());
    CHECK(h->fingerprint() == g->fingerprint());
  }
}
