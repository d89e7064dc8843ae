#pragma once
// Shared state and helpers for the law suite.

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gpea/center.hpp"
#include "gpea/construct.hpp"
#include "gpea/cover.hpp"
#include "gpea/exocenter.hpp"
#include "gpea/finite_gpea.hpp"
#include "gpea/typetheory.hpp"

namespace gpea::laws {

/// Empty when the law holds, otherwise a witness description.
using Outcome = std::optional<std::string>;

template <typename... Parts>
Outcome fail(const Parts&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

struct NamedSet {
  std::string name;
  ElementSet set;
};

/// Lazily computed data about one model, shared by every law run on it.
class Context {
 public:
  explicit Context(const FiniteGpea& e) : e_(e) {}

  const FiniteGpea& e() const { return e_; }
  std::size_t n() const { return e_.size(); }

  const CoverSystem& covers();
  const Exocenter& gex() { return covers().gex(); }
  const ExoMap& map(std::size_t i) { return gex()[i]; }
  /// Index of pi_c; throws DomainError when c is not central.
  std::size_t pi_index(Element c);
  ElementSet center();
  Element unit();

  const std::vector<ElementSet>& ideals();
  /// Pairs (S, S') of ideals with E = S + S'.
  const std::vector<std::pair<ElementSet, ElementSet>>& splits();
  /// Nonempty antichains of (E, <=). Truncated at kAntichainCap.
  const std::vector<ElementSet>& antichains();
  bool antichains_truncated() {
    antichains();
    return antichains_truncated_;
  }

  /// {0}, Gamma(E), E, the TD set generated by each singleton and the
  /// commutative-interval set, without repetitions.
  const std::vector<NamedSet>& td_sets();
  const TdContext& td(std::size_t i);

  /// All subsets when n <= kExhaustiveQ, otherwise singletons, the TD sets
  /// and a fixed-seed random sample (and the law is marked sampled).
  std::vector<ElementSet> q_sample();
  /// Every TD subset of E when n <= kExhaustiveQ.
  const std::vector<ElementSet>& all_td_subsets();

  std::string el(Element x) const { return e_.name(x); }
  std::string set(ElementSet s) const { return e_.format(s); }
  std::string pi(std::size_t i) { return "pi" + e_.format(map(i).image()); }

  void begin_law();
  void mark_sampled() { exhaustive_ = false; }
  bool exhaustive() const { return exhaustive_; }
  std::mt19937_64& rng() { return rng_; }

  static constexpr std::size_t kAntichainCap = 200000;
  static constexpr std::size_t kExhaustiveQ = 8;
  static constexpr std::size_t kQSamples = 96;

 private:
  FiniteGpea e_;
  std::optional<CoverSystem> covers_;
  std::optional<ElementSet> center_;
  std::optional<Element> unit_;
  std::optional<std::vector<ElementSet>> ideals_;
  std::optional<std::vector<std::pair<ElementSet, ElementSet>>> splits_;
  std::optional<std::vector<ElementSet>> antichains_;
  bool antichains_truncated_ = false;
  std::optional<std::vector<NamedSet>> td_sets_;
  std::vector<std::optional<TdContext>> td_ctx_;
  std::optional<std::vector<ElementSet>> all_td_;
  bool exhaustive_ = true;
  std::mt19937_64 rng_;
};

using LawFn = Outcome (*)(Context&);

struct LawEntry {
  const char* id;
  const char* statement;
  LawFn fn;
};

void add_kernel_laws(std::vector<LawEntry>& out);
void add_exocenter_laws(std::vector<LawEntry>& out);
void add_center_laws(std::vector<LawEntry>& out);
void add_cover_laws(std::vector<LawEntry>& out);
void add_type_laws(std::vector<LawEntry>& out);

// ---- sweeps -------------------------------------------------------------

/// Calls visit(s) for every subset s of `base` (including the empty set).
/// Stops early when visit returns a value.
template <typename Visit>
Outcome for_each_subset(ElementSet base, Visit&& visit) {
  const std::uint64_t b = base.bits();
  std::uint64_t s = 0;
  for (;;) {
    if (auto o = visit(ElementSet::from_bits(s))) return o;
    if (s == b) return std::nullopt;
    s = (s - b) & b;
  }
}

/// Nonempty sets of pairwise disjoint nonzero exocenter indices.
std::vector<std::vector<std::size_t>> disjoint_families(const Exocenter& g);

/// Nonempty sets of distinct nonzero elements with pairwise disjoint covers.
std::vector<std::vector<Element>> gamma_orthogonal_sets(const FiniteGpea& e, const CoverSystem& covers,
                                                        ElementSet within);

/// Supremum and infimum of the listed values, absent when none exists.
std::optional<Element> sup_of(const FiniteGpea& e, const std::vector<Element>& values);
std::optional<Element> inf_of(const FiniteGpea& e, const std::vector<Element>& values);

/// Nonempty finite orthogonal families of nonzero elements, as sorted
/// multisets, with their orthosums. Stops after `cap` families and sets
/// `truncated`.
std::vector<std::pair<std::vector<Element>, Element>> orthogonal_families(const FiniteGpea& e, std::size_t cap,
                                                                          bool& truncated);

/// Iterated direct sum of `parts`, the first factor most significant in the
/// identifiers. Absent when it would exceed kMaxElements.
struct Product {
  FiniteGpea sum;
  std::vector<std::size_t> radix;
  /// Coordinates of an identifier of `sum`.
  std::vector<Element> decode(Element id) const;
};
std::optional<Product> product_of(const std::vector<FiniteGpea>& parts);

/// The sub-GPEA on a set containing 0, with identifier maps both ways.
struct Sub {
  FiniteGpea model;
  std::vector<Element> old_id;                // new -> old
  std::vector<std::optional<Element>> new_id;  // old -> new
};
Sub submodel(const FiniteGpea& e, ElementSet s);

/// Distributive lattice with least element in which every interval [0,y]
/// is complemented, on items 0..m-1 ordered by leq. `name` renders an item.
template <typename Leq, typename Name>
Outcome check_generalized_boolean(std::size_t m, Leq&& leq, Name&& name) {
  if (m == 0) return fail("empty");
  auto glb = [&](std::size_t a, std::size_t b) -> std::optional<std::size_t> {
    std::optional<std::size_t> best;
    for (std::size_t z = 0; z < m; ++z) {
      if (leq(z, a) && leq(z, b) && (!best || leq(*best, z))) best = z;
    }
    for (std::size_t z = 0; z < m && best; ++z) {
      if (leq(z, a) && leq(z, b) && !leq(z, *best)) best.reset();
    }
    return best;
  };
  auto lub = [&](std::size_t a, std::size_t b) -> std::optional<std::size_t> {
    std::optional<std::size_t> best;
    for (std::size_t z = 0; z < m; ++z) {
      if (leq(a, z) && leq(b, z) && (!best || leq(z, *best))) best = z;
    }
    for (std::size_t z = 0; z < m && best; ++z) {
      if (leq(a, z) && leq(b, z) && !leq(*best, z)) best.reset();
    }
    return best;
  };
  std::optional<std::size_t> bottom;
  for (std::size_t z = 0; z < m; ++z) {
    bool least = true;
    for (std::size_t y = 0; y < m; ++y) least = least && leq(z, y);
    if (least) bottom = z;
  }
  if (!bottom) return fail("no least element");
  std::vector<std::size_t> meet(m * m), join(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const auto x = glb(a, b);
      const auto y = lub(a, b);
      if (!x || !y) return fail("no meet or join for ", name(a), ", ", name(b));
      meet[a * m + b] = *x;
      join[a * m + b] = *y;
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t d = 0; d < m; ++d) {
        if (meet[a * m + join[b * m + d]] != join[meet[a * m + b] * m + meet[a * m + d]]) {
          return fail("not distributive at ", name(a), ", ", name(b), ", ", name(d));
        }
      }
      if (!leq(a, b)) continue;
      bool complemented = false;
      for (std::size_t z = 0; z < m && !complemented; ++z) {
        complemented = meet[z * m + a] == *bottom && join[z * m + a] == b;
      }
      if (!complemented) return fail(name(a), " has no complement in [0,", name(b), "]");
    }
  }
  return std::nullopt;
}

/// "{a,b,c}" in family order.
std::string fam(const FiniteGpea& e, const std::vector<Element>& f);
/// "[pi{..},pi{..}]"
std::string maps(Context& c, const std::vector<std::size_t>& f);

/// Nonempty sets of exocenter indices: all of them when GEX(E) has at most
/// 16 maps, otherwise a fixed-seed sample (and the law is marked sampled).
std::vector<std::vector<std::size_t>> gex_families(Context& c);

/// Some pairwise disjoint exocenter maps pi_i with pi_i f_i = f_i.
bool has_disjoint_assignment(Context& c, const std::vector<Element>& f);

std::size_t join_all(const Exocenter& g, const std::vector<std::size_t>& f);
std::size_t meet_all(const Exocenter& g, const std::vector<std::size_t>& f);

/// Phi: product of the images of a pairwise disjoint family onto the image
/// of its join, (e_i) -> orthosum, is an isomorphism with inverse
/// e -> (pi_i e).
Outcome check_product_map(Context& c, const std::vector<std::size_t>& f);

}  // namespace gpea::laws
