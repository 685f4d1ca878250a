#ifndef GC_VERIFY_HPP
#define GC_VERIFY_HPP

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

namespace gc {

struct VerifyOptions {
  std::string level = "quick";  ///< quick: the ten criteria; full: plus extra families and fields
  unsigned seed = 20240601;
  int grid = 5;  ///< weight coordinates in [-grid, grid]
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Criterion ids 1..10; extra full-level checks use ids above 10.
std::vector<int> criterion_ids(const VerifyOptions& opt);
CriterionResult run_criterion(int id, const VerifyOptions& opt);
std::vector<CriterionResult> run_suite(const VerifyOptions& opt,
                                       const std::function<void(const CriterionResult&)>& on_result = {});
nlohmann::json suite_json(const std::vector<CriterionResult>& results, bool with_timing);

}  // namespace gc

#endif
