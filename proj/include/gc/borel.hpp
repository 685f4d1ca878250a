#ifndef GC_BOREL_HPP
#define GC_BOREL_HPP

#include "gc/algebra.hpp"

#include <optional>
#include <vector>

namespace gc {

struct Root {
  Weight weight;
  int parity = 0;
  std::vector<int> vectors;    ///< basis indices spanning g_alpha
  std::vector<int> negatives;  ///< basis indices spanning g_-alpha
  Weight coroot;               ///< h_alpha = [e_alpha, e_-alpha] in Cartan even coordinates
  bool isotropic = false;      ///< alpha(h_alpha) == 0
  bool simple = false;         ///< indecomposable among all positive roots
  bool even_simple = false;    ///< indecomposable among even positive roots
};

struct BorelChoice {
  Weight positivity;
  std::vector<Root> even_positive, odd_positive;
  std::vector<int> n_plus, n_minus;
  Weight rho;

  std::vector<const Root*> positive_roots() const;
};

/// Evaluates a weight on an element of the Cartan even part given in coordinates.
Rational pairing(const Weight& w, const Weight& h);

/// Uses the algebra's default positivity when none is given.
BorelChoice make_borel(const LieSuperalgebra& g, std::optional<Weight> positivity = std::nullopt);
/// `--borel standard|FILE`, FILE holding {"positivity": ["p/q", ...]}.
BorelChoice borel_from_option(const LieSuperalgebra& g, const std::string& option);

}  // namespace gc

#endif
