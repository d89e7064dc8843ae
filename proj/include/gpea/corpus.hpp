#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gpea/finite_gpea.hpp"

namespace gpea {

struct NamedModel {
  std::string id;
  FiniteGpea model;
};

/// {0,a,b,1} with a+b = b+a = 1.
FiniteGpea model_d4();
/// {0,a,b} with no nonzero sums.
FiniteGpea model_v3();

/// Chains of 1..7 elements, D4, V3, cone intervals and direct sums, with
/// stable ids.
std::vector<NamedModel> constructed_models();

/// One model per isomorphism class of order 1..max_order ("enum-<n>-<k>",
/// k counting from 1 in canonical order) followed by constructed_models().
/// Throws CapExceeded past kMaxEnumerationOrder.
std::vector<NamedModel> corpus(std::size_t max_order);

}  // namespace gpea
