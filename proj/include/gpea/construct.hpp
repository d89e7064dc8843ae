#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gpea/element_set.hpp"
#include "gpea/finite_gpea.hpp"

namespace gpea {

/// A map between carriers. Construction does not check anything; use
/// is_morphism / is_isomorphism.
struct Morphism {
  FiniteGpea source;
  FiniteGpea target;
  std::vector<Element> map;

  Element operator()(Element e) const { return map.at(e); }
};

/// If a+b exists in `source` then map(a)+map(b) exists and equals map(a+b);
/// map(0) = 0.
bool is_morphism(const FiniteGpea& source, const FiniteGpea& target, const std::vector<Element>& map);
/// A bijective morphism whose inverse is a morphism.
bool is_isomorphism(const FiniteGpea& source, const FiniteGpea& target, const std::vector<Element>& map);

/// The sub-GPEA on s (which must contain 0): a+b is kept when a, b and a+b
/// all lie in s. New identifiers follow the increasing order of the old ones;
/// `old_ids`, when given, receives new -> old.
FiniteGpea restrict_to(const FiniteGpea& e, ElementSet s, std::vector<Element>* old_ids = nullptr);

/// E[0,u] with a +_u b defined iff a+b exists and a+b <= u.
FiniteGpea interval_pea(const FiniteGpea& e, Element u);

struct DirectSum {
  FiniteGpea sum;
  Morphism first;   // a -> (a,0)
  Morphism second;  // b -> (0,b)
};

/// Cartesian product with componentwise sums. The pair (a,b) has identifier
/// a*|B| + b.
DirectSum direct_sum(const FiniteGpea& a, const FiniteGpea& b);

/// The interval [0, bound] of the positive cone of Z^d, summed as vectors.
/// Identifiers are mixed-radix with the last coordinate fastest. Throws
/// CapExceeded when the carrier would exceed `cap` elements and UsageError
/// when bound.size() != d.
FiniteGpea cone_interval(std::size_t d, const std::vector<unsigned>& bound, std::size_t cap = kMaxElements);

/// The n-element chain 0 < 1 < ... < n-1 with i+j = i+j when below n.
FiniteGpea chain(std::size_t n);

inline constexpr std::size_t kDefaultEnumerationCap = 5;
/// Hard limit for enumerate_gpeas regardless of the configured cap.
inline constexpr std::size_t kMaxEnumerationOrder = 6;

/// One representative per isomorphism class of GPEAs with n elements, each
/// given by its canonical table, sorted by that table. Throws CapExceeded when
/// n > cap or n > kMaxEnumerationOrder, UsageError when n == 0.
std::vector<FiniteGpea> enumerate_gpeas(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

/// Canonical relabeling: the lexicographically least table among the
/// relabelings that list elements by increasing (|E[0,a]|, defined sums
/// involving a). Isomorphic models have equal canonical tables.
SumTable canonical_table(const FiniteGpea& e);

/// An isomorphism e -> f if one exists.
std::optional<Morphism> is_isomorphic(const FiniteGpea& e, const FiniteGpea& f);

}  // namespace gpea
