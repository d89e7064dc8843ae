#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gpea/element_set.hpp"
#include "gpea/exocenter.hpp"
#include "gpea/finite_gpea.hpp"

namespace gpea {

/// gamma_e as the meet of every pi in GEX(E) with pi e = e.
ExoMap exocentral_cover(const FiniteGpea& e, const Exocenter& gex, Element x);

/// gamma_e as the map whose image is the smallest central ideal containing
/// e. Independent of exocentral_cover; both must agree.
ExoMap exocentral_cover_by_image(const FiniteGpea& e, const Exocenter& gex, Element x);

/// All exocentral covers of a model, stored as indices into its exocenter.
class CoverSystem {
 public:
  explicit CoverSystem(const FiniteGpea& e);
  CoverSystem(const FiniteGpea& e, Exocenter gex);

  const Exocenter& gex() const { return gex_; }
  /// Index of gamma_e in gex().
  std::size_t gamma_index(Element x) const { return gamma_.at(x); }
  const ExoMap& gamma(Element x) const { return gex_[gamma_index(x)]; }
  /// Theta_gamma as sorted distinct indices into gex().
  const std::vector<std::size_t>& theta() const { return theta_; }
  bool in_theta(std::size_t i) const;
  /// The maps e -> gamma_e as value tables, in element order.
  std::vector<std::vector<Element>> as_tables() const;

 private:
  Exocenter gex_;
  std::vector<std::size_t> gamma_;
  std::vector<std::size_t> theta_;
};

/// Pairwise disjoint covers.
bool gex_orthogonal(const CoverSystem& covers, std::span<const Element> family);

struct CogpeaCertificate {
  bool holds = true;
  /// Every nonempty gamma-orthogonal set of distinct nonzero elements.
  std::vector<std::vector<Element>> families;
  /// Description of the first failure when holds is false.
  std::string failure;
};

/// CO1 and CO2 over every gamma-orthogonal set of distinct nonzero elements.
/// A nonzero element repeated in a family has a cover that is not disjoint
/// from itself, so these sets exhaust the gamma-orthogonal families up to
/// zero entries.
CogpeaCertificate is_cogpea(const FiniteGpea& e, const CoverSystem& covers);

/// (1) eta_0 = 0, (2) eta_e e = e, (3) eta_{eta_e f} = eta_e o eta_f, where
/// eta[e] is the value table of eta_e.
bool is_hull_system(const FiniteGpea& e, const std::vector<std::vector<Element>>& eta);

}  // namespace gpea
