#pragma once

#include <map>
#include <optional>
#include <utility>

#include "gpea/element_set.hpp"
#include "gpea/exocenter.hpp"
#include "gpea/finite_gpea.hpp"

namespace gpea {

/// c is central by conditions C1..C4, checked over all pairs a, b.
bool is_central(const FiniteGpea& e, Element c);

/// Gamma(E) by the defining conditions C1..C4.
ElementSet central_elements(const FiniteGpea& e);

/// Gamma(E) computed independently: the c for which
/// E = E[0,c] + {f : f orthogonal to c} is a direct sum.
ElementSet central_elements_by_splitting(const FiniteGpea& e);

/// The exocenter map with image E[0,c]. Throws DomainError when c is not
/// central.
ExoMap pi_c(const FiniteGpea& e, Element c);

/// The largest central element, found as the orthosum of a maximal
/// pairwise-disjoint family of nonzero central elements chosen greedily in
/// increasing identifier order. Throws DomainError if the result is not the
/// order maximum of Gamma(E) (which would contradict finiteness).
Element center_unit(const FiniteGpea& e);

struct CenterData {
  ElementSet gamma_set;
  std::map<Element, ExoMap> pi_of;
  Element unit = 0;
};

CenterData center(const FiniteGpea& e);

/// (E[0,u], {f : f orthogonal to u}) for the unit u of the center.
std::pair<FiniteGpea, FiniteGpea> centerless_split(const FiniteGpea& e);

}  // namespace gpea
