#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpea/element_set.hpp"
#include "gpea/finite_gpea.hpp"

namespace gpea {

struct Violation {
  std::string tag;               // "GPEA1" .. "GPEA5"
  std::vector<Element> witness;  // elements in the order the axiom names them

  bool operator==(const Violation&) const = default;
};

/// Every violated axiom instance, in lexicographic order of witnesses within
/// each axiom, axioms in order GPEA1..GPEA5.
class ViolationReport {
 public:
  bool empty() const { return violations_.empty(); }
  std::size_t size() const { return violations_.size(); }
  const std::vector<Violation>& violations() const { return violations_; }
  /// Lexicographically smallest witness recorded under this tag.
  std::optional<Violation> first(const std::string& tag) const;
  void add(std::string tag, std::vector<Element> witness);
  /// One line per violation, "GPEA3 (1,0,1)"; at most `limit` lines.
  std::string render(std::size_t limit = 20) const;

 private:
  std::vector<Violation> violations_;
};

/// Thrown when a table fails validation.
class InvalidModel : public std::runtime_error {
 public:
  explicit InvalidModel(ViolationReport report);
  const ViolationReport& report() const { return report_; }

 private:
  ViolationReport report_;
};

/// Checks GPEA1 (associativity), GPEA2 (conjugacy), GPEA3 (cancellation),
/// GPEA4 (positivity) and GPEA5 (zero element) on a raw table.
///
/// Witness tuples:
///   GPEA1 (a,b,c)   one side of the associativity law exists without the
///                   other, or both exist and differ
///   GPEA2 (a,b)     a+b exists but no d with d+a = a+b or no e with b+e = a+b
///   GPEA3 (a,b,c)   b != c with a+b = a+c or b+a = c+a
///   GPEA4 (a,b)     a+b = 0 with (a,b) != (0,0)
///   GPEA5 (a)       a+0 or 0+a is missing or differs from a
ViolationReport check_gpea(const SumTable& table);

/// The greatest element, if E is a PEA.
std::optional<Element> top_of(const FiniteGpea& e);

/// Every defined sum is symmetric (E is a generalized effect algebra).
bool is_commutative(const FiniteGpea& e);

/// (I1) down-closed, (I2) closed under existing sums, and nonempty.
bool is_ideal(const FiniteGpea& e, ElementSet s);
/// An ideal satisfying (N): a+x = y+a implies (x in S iff y in S).
bool is_normal_ideal(const FiniteGpea& e, ElementSet s);

/// A central ideal S together with its complementary summand and the
/// coordinates a = a1 + a2, a1 in S, a2 in S'.
struct SummandPair {
  ElementSet summand;
  ElementSet complement;
  std::vector<Element> first;   // a -> a1
  std::vector<Element> second;  // a -> a2
};

/// Returns the decomposition E = S + S' when S is a central ideal, with S'
/// taken as {f : f meet s = 0 for every s in S}. Absent when S is not an
/// ideal, S' is not an ideal, some a in S, b in S' are not orthogonal, or the
/// coordinates are missing or not unique.
std::optional<SummandPair> central_ideal_complement(const FiniteGpea& e, ElementSet s);

/// Same decomposition test for an explicitly supplied complement candidate.
std::optional<SummandPair> direct_sum_split(const FiniteGpea& e, ElementSet s, ElementSet complement);

/// Whether every element has exactly one coordinate pair for (S, S'),
/// ignoring the orthogonality condition. Used to study whether that condition
/// is redundant.
bool has_unique_coordinates(const FiniteGpea& e, ElementSet s, ElementSet complement);

/// {f : f meet s exists and is 0 for all s in S}
ElementSet disjointness_set(const FiniteGpea& e, ElementSet s);

/// Every ideal of E, ordered by bitmask.
std::vector<ElementSet> all_ideals(const FiniteGpea& e);

}  // namespace gpea
