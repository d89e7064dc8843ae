#pragma once

#include <string>
#include <vector>

#include "gpea/finite_gpea.hpp"

namespace gpea {

struct LawResult {
  std::string law_id;
  std::string model_id;
  bool pass = true;
  /// Concrete counterexample when pass is false.
  std::string witness;
  /// False when the law was checked on a sample or a size-capped sweep.
  bool exhaustive = true;
};

struct LawInfo {
  std::string id;
  std::string statement;
};

/// Every registered law, in suite order. Ids are stable.
const std::vector<LawInfo>& law_registry();

/// Runs the selected laws (all when `selection` is empty) on one model, in
/// registry order. Throws UsageError on an unknown id.
std::vector<LawResult> verify_laws(const FiniteGpea& e, const std::string& model_id,
                                   const std::vector<std::string>& selection = {});

}  // namespace gpea
