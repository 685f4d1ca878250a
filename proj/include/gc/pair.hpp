#ifndef GC_PAIR_HPP
#define GC_PAIR_HPP

#include "gc/borel.hpp"
#include "gc/pbw.hpp"

#include <vector>

namespace gc {

/// Host algebra with an Iwasawa-type split g = k + a + n (t is the part of k centralizing a).
struct IwasawaPairPresentation {
  AlgebraPtr host;
  std::vector<int> k, a_even, a_odd, t_even, t_odd, n;
  /// For diagonal pairs: coordinates of (e_i, 0) in the host basis.
  std::vector<Coords> left_embedding;

  /// n < a < k ordering on the host.
  GeneratorOrdering ordering() const;
};

/// The pair (g x g, diagonal g). a is spanned by (h,-h)/2 for Cartan h, so (h,0) = a_h + k_h/2.
IwasawaPairPresentation diagonal_pair(const LieSuperalgebra& g, const BorelChoice& b);

/// Throws NoIwasawa when the index sets do not split the host as required.
void check_iwasawa(const IwasawaPairPresentation& p);

}  // namespace gc

#endif
