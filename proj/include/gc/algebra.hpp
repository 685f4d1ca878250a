#ifndef GC_ALGEBRA_HPP
#define GC_ALGEBRA_HPP

#include "gc/linalg.hpp"
#include "gc/rational.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gc {

using Weight = std::vector<Rational>;
using Coords = SparseVec<Rational>;  ///< algebra element in basis coordinates

struct BasisVector {
  int index = 0;
  std::string name;
  int parity = 0;    ///< 0 even, 1 odd
  int z_degree = 0;  ///< -1/0/+1 for type I, 0 otherwise
  std::optional<Weight> weight;  ///< eigenvalues of the Cartan even basis; empty if not a weight vector
};

/// Faithful supermatrix representation kept as an oracle.
struct SuperMatrixRep {
  std::vector<int> row_parity;
  std::vector<Mat<Rational>> matrices;  ///< one per basis vector
};

/// Finite-dimensional Lie superalgebra over Q in an ordered homogeneous basis.
/// Immutable after construction.
class LieSuperalgebra {
 public:
  struct Data {
    std::string name;
    std::vector<BasisVector> basis;
    std::vector<std::vector<Coords>> table;  ///< table[i][j] = [e_i, e_j]
    std::vector<int> cartan_even, cartan_odd;
    bool type_i = false;
    std::optional<Weight> positivity;  ///< default positivity functional on weight coordinates
    std::optional<SuperMatrixRep> rep;
  };

  explicit LieSuperalgebra(Data d);

  const std::string& name() const { return d_.name; }
  int dim() const { return static_cast<int>(d_.basis.size()); }
  int rank() const { return static_cast<int>(d_.cartan_even.size()); }
  const std::vector<BasisVector>& basis() const { return d_.basis; }
  const BasisVector& basis(int i) const { return d_.basis[i]; }
  int parity(int i) const { return d_.basis[i].parity; }
  std::optional<int> index_of(const std::string& name) const;

  const Coords& bracket(int i, int j) const { return d_.table[i][j]; }
  Coords bracket(const Coords& x, const Coords& y) const;

  const std::vector<int>& cartan_even() const { return d_.cartan_even; }
  const std::vector<int>& cartan_odd() const { return d_.cartan_odd; }
  bool is_cartan_even() const { return d_.cartan_odd.empty(); }
  bool is_type_i() const { return d_.type_i; }
  std::vector<int> odd_indices() const;
  std::vector<int> even_indices() const;
  /// True when every bracket vanishes.
  bool is_abelian() const;
  /// True when [g_odd, g_odd] lies in the centre.
  bool odd_square_central() const;

  const std::optional<Weight>& default_positivity() const { return d_.positivity; }
  const std::optional<SuperMatrixRep>& rep() const { return d_.rep; }
  const Data& data() const { return d_; }

  /// FNV-1a hash of the serialized structure constants.
  std::string fingerprint() const;
  nlohmann::json to_json() const;

 private:
  void compute_weights();
  Data d_;
};

using AlgebraPtr = std::shared_ptr<const LieSuperalgebra>;

/// Supercommutator of homogeneous supermatrices.
Mat<Rational> supercommutator(const Mat<Rational>& a, int pa, const Mat<Rational>& b, int pb);

/// Builds the algebra spanned by homogeneous supermatrices; brackets are solved exactly.
LieSuperalgebra::Data algebra_from_matrices(std::string name, std::vector<BasisVector> basis,
                                            SuperMatrixRep rep, std::vector<int> cartan_even,
                                            std::vector<int> cartan_odd);

AlgebraPtr make_gl(int m, int n);
AlgebraPtr make_sl(int m, int n);
AlgebraPtr make_osp1(int n);  ///< osp(1|2n)
AlgebraPtr make_osp2(int n);  ///< osp(2|2n)
AlgebraPtr make_abelian(int m, int n);
AlgebraPtr make_q1();

/// Parses "gl(1|1)", "gl,1,1", "osp1,2", "abelian(0|2)", "q(1)", "file:PATH".
AlgebraPtr build_algebra(const std::string& spec);
AlgebraPtr algebra_from_json(const nlohmann::json& j);

struct ValidationReport {
  std::vector<std::string> failures;
  int checked_pairs = 0, checked_triples = 0;
  bool ok() const { return failures.empty(); }
};

ValidationReport validate_algebra(const LieSuperalgebra& g);
/// Nondegeneracy of g_alpha x g_-alpha -> [g_alpha, g_-alpha] for every root (rank check).
bool root_pairings_nondegenerate(const LieSuperalgebra& g);

}  // namespace gc

#endif
