#include "gpea/center.hpp"

#include "gpea/axioms.hpp"
#include "gpea/construct.hpp"
#include "gpea/errors.hpp"

namespace gpea {

namespace {

ElementSet orthogonal_to(const FiniteGpea& e, Element c) {
  ElementSet out;
  for (Element f = 0; f < e.size(); ++f) {
    if (e.perp(f, c)) out.insert(f);
  }
  return out;
}

}  // namespace

bool is_central(const FiniteGpea& e, Element c) {
  const ElementSet below = e.down(c);
  ElementSet summable;  // a with a + c defined
  for (Element a = 0; a < e.size(); ++a) {
    if (e.defined(a, c)) summable.insert(a);
  }

  // C1
  for (Element a = 0; a < e.size(); ++a) {
    bool found = false;
    for (Element a1 : below & e.down(a)) {
      const auto a2 = e.right_diff(a1, a);
      if (a2 && summable.contains(*a2)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  // C2
  for (Element a : below) {
    for (Element b : summable) {
      if (!e.perp(a, b)) return false;
    }
  }
  // C3
  for (Element a : below) {
    for (Element b : below) {
      const auto s = e.oplus(a, b);
      if (s && !below.contains(*s)) return false;
    }
  }
  // C4
  for (Element a : summable) {
    for (Element b : summable) {
      const auto s = e.oplus(a, b);
      if (s && !e.defined(*s, c)) return false;
    }
  }
  return true;
}

ElementSet central_elements(const FiniteGpea& e) {
  ElementSet out;
  for (Element c = 0; c < e.size(); ++c) {
    if (is_central(e, c)) out.insert(c);
  }
  return out;
}

ElementSet central_elements_by_splitting(const FiniteGpea& e) {
  ElementSet out;
  for (Element c = 0; c < e.size(); ++c) {
    if (direct_sum_split(e, e.down(c), orthogonal_to(e, c))) out.insert(c);
  }
  return out;
}

ExoMap pi_c(const FiniteGpea& e, Element c) {
  if (c >= e.size()) throw UsageError("element out of range");
  const auto split = direct_sum_split(e, e.down(c), orthogonal_to(e, c));
  if (!split || !is_central(e, c)) throw DomainError("element " + e.name(c) + " is not central");
  return ExoMap(split->first);
}

Element center_unit(const FiniteGpea& e) {
  const ElementSet gamma = central_elements(e);
  std::vector<Element> family;
  for (Element c : gamma) {
    if (c == 0) continue;
    bool disjoint = true;
    for (Element d : family) disjoint = disjoint && e.meet(c, d) == Element{0};
    if (disjoint) family.push_back(c);
  }
  const auto u = e.orthosum(family);
  if (!u || !gamma.contains(*u)) throw DomainError("maximal disjoint central family has no central orthosum");
  for (Element c : gamma) {
    if (!e.leq(c, *u)) throw DomainError("center unit is not the largest central element");
  }
  return *u;
}

CenterData center(const FiniteGpea& e) {
  CenterData data;
  data.gamma_set = central_elements(e);
  for (Element c : data.gamma_set) data.pi_of.emplace(c, pi_c(e, c));
  data.unit = center_unit(e);
  return data;
}

std::pair<FiniteGpea, FiniteGpea> centerless_split(const FiniteGpea& e) {
  const Element u = center_unit(e);
  return {interval_pea(e, u), restrict_to(e, orthogonal_to(e, u))};
}

}  // namespace gpea
