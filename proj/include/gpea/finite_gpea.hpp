#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gpea/element_set.hpp"

namespace gpea {

/// A raw n x n partial-operation table, not yet known to satisfy any axioms.
class SumTable {
 public:
  /// All entries undefined. Throws UsageError unless 1 <= n <= kMaxElements.
  explicit SumTable(std::size_t n);

  std::size_t size() const { return n_; }
  std::optional<Element> get(Element a, Element b) const;
  /// Throws UsageError when a, b or the value is out of range.
  void set(Element a, Element b, std::optional<Element> value);
  /// Defines a+0 = 0+a = a wherever the entry is still undefined.
  void fill_zero_sums();

  bool operator==(const SumTable&) const = default;

 private:
  std::size_t n_;
  std::vector<std::int8_t> cells_;
};

/// Immutable finite generalized pseudoeffect algebra on elements 0..n-1.
///
/// Construction validates the table against GPEA1-GPEA5 and then caches the
/// order, both differences and all pairwise meets and joins. Copies share the
/// cached data, so values are cheap to pass around and safe to share between
/// threads.
class FiniteGpea {
 public:
  /// Throws InvalidModel (see axioms.hpp) when the table violates an axiom,
  /// UsageError when the labels are not n distinct names.
  explicit FiniteGpea(const SumTable& table, std::vector<std::string> labels = {});

  std::size_t size() const;
  ElementSet all() const { return ElementSet::full(size()); }
  const SumTable& table() const;

  /// a+b when defined. Throws UsageError on identifiers out of range.
  std::optional<Element> oplus(Element a, Element b) const;
  bool defined(Element a, Element b) const { return oplus(a, b).has_value(); }

  bool leq(Element a, Element b) const { return up(a).contains(b); }
  /// {b : a <= b}
  ElementSet up(Element a) const;
  /// {b : b <= a}, i.e. the interval E[0,a].
  ElementSet down(Element a) const;

  /// a/b: the x with a+x = b, present iff a <= b.
  std::optional<Element> right_diff(Element a, Element b) const;
  /// b\a: the y with y+a = b, present iff a <= b.
  std::optional<Element> left_diff(Element a, Element b) const;
  /// b (-) a, present iff a <= b and a/b = b\a.
  std::optional<Element> ominus(Element b, Element a) const;
  /// a+b and b+a both exist and agree.
  bool perp(Element a, Element b) const;

  std::optional<Element> meet(Element a, Element b) const;
  std::optional<Element> join(Element a, Element b) const;
  /// Least upper bound, absent when none exists. sup of the empty set is 0.
  std::optional<Element> sup(ElementSet s) const;
  /// Greatest lower bound, absent when none exists. inf of the empty set is
  /// the top element if there is one.
  std::optional<Element> inf(ElementSet s) const;
  /// Greatest element under <=, if any (E is then a PEA).
  std::optional<Element> top() const;

  /// Orthosum of a finite family. Defined iff for every subfamily every
  /// arrangement of its members has an existing sequential sum and all
  /// arrangements agree; zero entries are neutral and skipped. The empty
  /// family sums to 0. Throws CapExceeded above 20 nonzero members.
  std::optional<Element> orthosum(std::span<const Element> family) const;

  /// Minimal nonzero elements.
  ElementSet atoms() const;

  const std::vector<std::string>& labels() const;
  /// Display name: the label when present, otherwise the identifier.
  std::string name(Element e) const;
  std::string format(ElementSet s) const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;

  void check(Element e) const;
};

}  // namespace gpea
