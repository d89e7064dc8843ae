#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gpea/axioms.hpp"
#include "gpea/construct.hpp"
#include "gpea/element_set.hpp"
#include "gpea/finite_gpea.hpp"

namespace gpea {

/// A self-map of a finite carrier, stored as its value table. Whether it
/// belongs to GEX(E) is decided by is_exomap; the class itself is plain data.
class ExoMap {
 public:
  explicit ExoMap(std::vector<Element> values);

  Element operator()(Element e) const { return values_.at(e); }
  std::size_t size() const { return values_.size(); }
  const std::vector<Element>& values() const { return values_; }
  /// Fixed points {e : pi e = e}; equals pi(E) for idempotent maps.
  ElementSet image() const { return image_; }

  bool operator==(const ExoMap& o) const { return values_ == o.values_; }
  /// Image bitmask first, then the value table.
  bool operator<(const ExoMap& o) const;

 private:
  std::vector<Element> values_;
  ElementSet image_;
};

ExoMap exo_zero(const FiniteGpea& e);
ExoMap exo_identity(const FiniteGpea& e);

/// The first failing condition among EXC1..EXC4 with its witness, in the
/// same shape as the axiom checker uses: EXC1 (e,f), EXC2 (e), EXC3 (e),
/// EXC4 (e,f). A table of the wrong length or with out-of-range values is
/// reported as EXC1 with an empty witness.
std::optional<Violation> exomap_violation(const FiniteGpea& e, const std::vector<Element>& values);
bool is_exomap(const FiniteGpea& e, const std::vector<Element>& values);

/// pi'(e) = (pi e)/e
ExoMap exo_complement(const FiniteGpea& e, const ExoMap& pi);
/// pi o xi
ExoMap exo_meet(const ExoMap& pi, const ExoMap& xi);
/// (pi' o xi')'
ExoMap exo_join(const FiniteGpea& e, const ExoMap& pi, const ExoMap& xi);
/// pi(E) contained in xi(E).
bool exo_leq(const ExoMap& pi, const ExoMap& xi);
bool exo_disjoint(const ExoMap& pi, const ExoMap& xi);

/// The map e -> first coordinate of e in E = S + S', when S is central.
std::optional<ExoMap> exomap_of_summand(const FiniteGpea& e, ElementSet s);

/// Every ideal closed under existing suprema of its nonempty subsets,
/// ordered by bitmask. Central ideals are among these.
std::vector<ElementSet> sup_closed_ideals(const FiniteGpea& e);

/// GEX(E), ordered by image bitmask (so the zero map comes first and the
/// identity last).
std::vector<ExoMap> exocenter(const FiniteGpea& e);

/// GEX(E) as a finite Boolean algebra on indices 0..size()-1 with the order
/// of exocenter(). Operation tables are precomputed.
class Exocenter {
 public:
  explicit Exocenter(const FiniteGpea& e);

  std::size_t size() const { return maps_.size(); }
  const ExoMap& operator[](std::size_t i) const { return maps_[i]; }
  const std::vector<ExoMap>& maps() const { return maps_; }

  std::size_t zero() const { return 0; }
  std::size_t one() const { return maps_.size() - 1; }
  std::size_t complement(std::size_t i) const { return complement_[i]; }
  std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i * size() + j]; }
  std::size_t join(std::size_t i, std::size_t j) const { return join_[i * size() + j]; }
  bool leq(std::size_t i, std::size_t j) const { return meet(i, j) == i; }

  /// Index of the map with this image, if it is a central ideal.
  std::optional<std::size_t> find_image(ElementSet image) const;
  /// Index of a map equal to pi, if pi belongs to GEX(E).
  std::optional<std::size_t> find(const ExoMap& pi) const;

 private:
  std::vector<ExoMap> maps_;
  std::vector<std::size_t> complement_;
  std::vector<std::size_t> meet_;
  std::vector<std::size_t> join_;
};

/// E split along pi: the summands pi(E) and pi'(E) as GPEAs (with
/// identifiers in increasing order of the originals), their direct sum, and
/// the isomorphism e -> (pi e, pi' e) into it.
struct Factorization {
  FiniteGpea summand;
  FiniteGpea complement;
  std::vector<Element> summand_ids;     // new -> old
  std::vector<Element> complement_ids;  // new -> old
  DirectSum product;
  Morphism to_product;
};

/// Throws DomainError when pi is not in GEX(E).
Factorization factor(const FiniteGpea& e, const ExoMap& pi);

}  // namespace gpea
