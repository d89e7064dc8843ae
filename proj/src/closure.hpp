#pragma once

// Internal helpers shared by the ideal and summand enumerations.

#include <functional>

#include "gpea/element_set.hpp"
#include "gpea/finite_gpea.hpp"

namespace gpea::detail {

/// Ganter's NextClosure: visits every closed set of `closure` over
/// {0..n-1} exactly once, in lectic order.
template <typename Closure, typename Visit>
void for_each_closed_set(std::size_t n, Closure&& closure, Visit&& visit) {
  ElementSet current = closure(ElementSet{});
  visit(current);
  const ElementSet full = ElementSet::full(n);
  while (current != full) {
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      const auto e = static_cast<Element>(i);
      if (current.contains(e)) continue;
      const ElementSet below = ElementSet::full(i);
      ElementSet next = closure((current & below) | ElementSet::single(e));
      if (((next - current) & below).empty()) {
        current = next;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
    visit(current);
  }
}

inline ElementSet down_closure(const FiniteGpea& e, ElementSet s) {
  ElementSet out;
  for (Element x : s) out |= e.down(x);
  return out;
}

/// Smallest ideal containing s.
inline ElementSet ideal_closure(const FiniteGpea& e, ElementSet s) {
  s.insert(0);
  for (;;) {
    ElementSet next = down_closure(e, s);
    for (Element a : next) {
      for (Element b : next) {
        if (auto sum = e.oplus(a, b)) next.insert(*sum);
      }
    }
    if (next == s) return s;
    s = next;
  }
}

}  // namespace gpea::detail
