#pragma once

#include <array>
#include <cstddef>
#include <functional>

#include "gpea/cover.hpp"
#include "gpea/element_set.hpp"
#include "gpea/finite_gpea.hpp"

namespace gpea {

/// [Q]_gamma: least set containing Q and 0 that is closed under x + y for
/// x, y with disjoint covers.
ElementSet closure_gamma(const FiniteGpea& e, const CoverSystem& covers, ElementSet q);
/// Q^gamma = {gamma_e q : e in E, q in Q}
ElementSet gamma_image(const CoverSystem& covers, ElementSet q);
/// Union of the intervals E[0,q], q in Q.
ElementSet downset(const FiniteGpea& e, ElementSet q);
/// Q' = {e : q meet e = 0 for all q in Q}
ElementSet disjoint_complement(const FiniteGpea& e, ElementSet q);
/// Q'' = (Q')'
ElementSet double_complement(const FiniteGpea& e, ElementSet q);

/// K = [K]_gamma = K^gamma
bool is_td(const FiniteGpea& e, const CoverSystem& covers, ElementSet k);
/// K = [K]_gamma = K down-closed
bool is_std(const FiniteGpea& e, const CoverSystem& covers, ElementSet k);
/// [K^gamma]_gamma, the smallest TD set containing K.
ElementSet td_generated(const FiniteGpea& e, const CoverSystem& covers, ElementSet k);
/// [K down]_gamma, the smallest STD set containing K.
ElementSet std_generated(const FiniteGpea& e, const CoverSystem& covers, ElementSet k);

using PeaPredicate = std::function<bool(const FiniteGpea&)>;
/// {k : predicate(E[0,k])}
ElementSet tdset_from_pea_class(const FiniteGpea& e, const PeaPredicate& predicate);
/// Every meet and join exists, meets distribute over joins, and every
/// element has a complement.
bool is_boolean_lattice(const FiniteGpea& e);

struct TdContext {
  ElementSet k;
  ElementSet k_tilde;  // K meet Gamma(E)
  Element k_star = 0;
  Element k_tilde_star = 0;
  /// Indices into the exocenter of the cover system.
  std::size_t gamma_k = 0;        // join of gamma_x, x in K
  std::size_t gamma_k_tilde = 0;  // join of gamma_x, x in K-tilde
};

/// Throws DomainError when K is not TD or the greedy gamma-orthogonal family
/// has no orthosum.
TdContext td_context(const FiniteGpea& e, const CoverSystem& covers, ElementSet center, ElementSet k);

struct TypeFlags {
  bool type_k = false;
  bool locally_type_k = false;
  bool purely_non_k = false;
  bool properly_non_k = false;

  bool operator==(const TypeFlags&) const = default;
};

/// Flags of the exocenter element with index pi.
TypeFlags classify(const CoverSystem& covers, const TdContext& ctx, std::size_t pi);

/// gamma_f = 1
bool faithful(const CoverSystem& covers, Element f);
/// pi k* for pi in Theta_gamma; throws DomainError otherwise.
Element k_sharp(const CoverSystem& covers, const TdContext& ctx, std::size_t pi);

struct Fundamental {
  std::size_t pi1 = 0;  // gamma_{K~}
  std::size_t pi2 = 0;  // gamma_K meet (gamma_{K~})'
  std::size_t pi3 = 0;  // (gamma_K)'
};

Fundamental fundamental_decomposition(const CoverSystem& covers, const TdContext& ctx);

struct DecompositionReport {
  Fundamental by_k;
  Fundamental by_f;
  std::size_t pi_i = 0;
  std::size_t pi_ii = 0;
  std::size_t pi_iii = 0;
  std::size_t pi_i_f = 0;
  std::size_t pi_i_not_f = 0;
  std::size_t pi_ii_f = 0;
  std::size_t pi_ii_not_f = 0;
  /// tau[i][j] = pi_{i+1} meet xi_{j+1}
  std::array<std::array<std::size_t, 3>, 3> tau{};
};

/// Types I, II and III for nested TD sets K in F. Throws DomainError when
/// K is not contained in F, or when tau_12, tau_13 or tau_23 is nonzero.
DecompositionReport type_i_ii_iii(const CoverSystem& covers, const TdContext& k, const TdContext& f);

}  // namespace gpea
