#include "gpea/typetheory.hpp"

#include "gpea/construct.hpp"
#include "gpea/errors.hpp"

namespace gpea {

ElementSet closure_gamma(const FiniteGpea& e, const CoverSystem& covers, ElementSet q) {
  const Exocenter& g = covers.gex();
  ElementSet p = q | ElementSet{0};
  for (;;) {
    ElementSet next = p;
    for (Element x : p) {
      for (Element y : p) {
        if (g.meet(covers.gamma_index(x), covers.gamma_index(y)) != g.zero()) continue;
        if (auto s = e.oplus(x, y)) next.insert(*s);
      }
    }
    if (next == p) return p;
    p = next;
  }
}

ElementSet gamma_image(const CoverSystem& covers, ElementSet q) {
  ElementSet out;
  for (std::size_t i : covers.theta()) {
    for (Element x : q) out.insert(covers.gex()[i](x));
  }
  return out;
}

ElementSet downset(const FiniteGpea& e, ElementSet q) {
  ElementSet out;
  for (Element x : q) out |= e.down(x);
  return out;
}

ElementSet disjoint_complement(const FiniteGpea& e, ElementSet q) { return disjointness_set(e, q); }

ElementSet double_complement(const FiniteGpea& e, ElementSet q) {
  return disjoint_complement(e, disjoint_complement(e, q));
}

bool is_td(const FiniteGpea& e, const CoverSystem& covers, ElementSet k) {
  return closure_gamma(e, covers, k) == k && gamma_image(covers, k) == k;
}

bool is_std(const FiniteGpea& e, const CoverSystem& covers, ElementSet k) {
  return closure_gamma(e, covers, k) == k && downset(e, k) == k;
}

ElementSet td_generated(const FiniteGpea& e, const CoverSystem& covers, ElementSet k) {
  return closure_gamma(e, covers, gamma_image(covers, k));
}

ElementSet std_generated(const FiniteGpea& e, const CoverSystem& covers, ElementSet k) {
  return closure_gamma(e, covers, downset(e, k));
}

ElementSet tdset_from_pea_class(const FiniteGpea& e, const PeaPredicate& predicate) {
  ElementSet out;
  for (Element x = 0; x < e.size(); ++x) {
    if (predicate(interval_pea(e, x))) out.insert(x);
  }
  return out;
}

bool is_boolean_lattice(const FiniteGpea& e) {
  const auto top = e.top();
  if (!top) return false;
  const auto n = static_cast<Element>(e.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!e.meet(a, b) || !e.join(a, b)) return false;
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (*e.meet(a, *e.join(b, c)) != *e.join(*e.meet(a, b), *e.meet(a, c))) return false;
      }
    }
  }
  for (Element a = 0; a < n; ++a) {
    bool has = false;
    for (Element b = 0; b < n && !has; ++b) has = *e.meet(a, b) == 0 && *e.join(a, b) == *top;
    if (!has) return false;
  }
  return true;
}

namespace {

// Orthosum of a greedy maximal gamma-orthogonal family in s.
Element greedy_orthosum(const FiniteGpea& e, const CoverSystem& covers, ElementSet s) {
  const Exocenter& g = covers.gex();
  std::vector<Element> family;
  for (Element x : s) {
    if (x == 0) continue;
    bool disjoint = true;
    for (Element y : family) {
      disjoint = disjoint && g.meet(covers.gamma_index(x), covers.gamma_index(y)) == g.zero();
    }
    if (disjoint) family.push_back(x);
  }
  const auto sum = e.orthosum(family);
  if (!sum) throw DomainError("gamma-orthogonal family without an orthosum");
  return *sum;
}

std::size_t join_of_covers(const CoverSystem& covers, ElementSet s) {
  std::size_t acc = covers.gex().zero();
  for (Element x : s) acc = covers.gex().join(acc, covers.gamma_index(x));
  return acc;
}

}  // namespace

TdContext td_context(const FiniteGpea& e, const CoverSystem& covers, ElementSet center, ElementSet k) {
  if (!is_td(e, covers, k)) throw DomainError("set " + e.format(k) + " is not type determining");
  TdContext ctx;
  ctx.k = k;
  ctx.k_tilde = k & center;
  ctx.k_star = greedy_orthosum(e, covers, ctx.k);
  ctx.k_tilde_star = greedy_orthosum(e, covers, ctx.k_tilde);
  ctx.gamma_k = join_of_covers(covers, ctx.k);
  ctx.gamma_k_tilde = join_of_covers(covers, ctx.k_tilde);
  return ctx;
}

TypeFlags classify(const CoverSystem& covers, const TdContext& ctx, std::size_t pi) {
  const Exocenter& g = covers.gex();
  TypeFlags f;
  const bool theta = covers.in_theta(pi);
  f.type_k = theta && g.leq(pi, ctx.gamma_k_tilde);
  f.locally_type_k = theta && g.leq(pi, ctx.gamma_k);
  f.purely_non_k = g.meet(pi, ctx.gamma_k) == g.zero();
  f.properly_non_k = g.meet(pi, ctx.gamma_k_tilde) == g.zero();
  return f;
}

bool faithful(const CoverSystem& covers, Element f) { return covers.gamma_index(f) == covers.gex().one(); }

Element k_sharp(const CoverSystem& covers, const TdContext& ctx, std::size_t pi) {
  if (!covers.in_theta(pi)) throw DomainError("k-sharp needs a map in Theta_gamma");
  return covers.gex()[pi](ctx.k_star);
}

Fundamental fundamental_decomposition(const CoverSystem& covers, const TdContext& ctx) {
  const Exocenter& g = covers.gex();
  return {ctx.gamma_k_tilde, g.meet(ctx.gamma_k, g.complement(ctx.gamma_k_tilde)), g.complement(ctx.gamma_k)};
}

DecompositionReport type_i_ii_iii(const CoverSystem& covers, const TdContext& k, const TdContext& f) {
  if (!k.k.subset_of(f.k)) throw DomainError("K must be contained in F");
  const Exocenter& g = covers.gex();
  DecompositionReport r;
  r.by_k = fundamental_decomposition(covers, k);
  r.by_f = fundamental_decomposition(covers, f);
  const std::array<std::size_t, 3> p{r.by_k.pi1, r.by_k.pi2, r.by_k.pi3};
  const std::array<std::size_t, 3> x{r.by_f.pi1, r.by_f.pi2, r.by_f.pi3};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) r.tau[i][j] = g.meet(p[i], x[j]);
  }
  if (r.tau[0][1] != g.zero() || r.tau[0][2] != g.zero() || r.tau[1][2] != g.zero()) {
    throw DomainError("nonzero tau_12, tau_13 or tau_23");
  }
  const std::size_t gk_c = g.complement(k.gamma_k);
  const std::size_t gft_c = g.complement(f.gamma_k_tilde);
  r.pi_i = k.gamma_k;
  r.pi_ii = g.meet(f.gamma_k, gk_c);
  r.pi_iii = g.complement(f.gamma_k);
  r.pi_i_f = g.meet(k.gamma_k, f.gamma_k_tilde);
  r.pi_i_not_f = g.meet(k.gamma_k, gft_c);
  r.pi_ii_f = g.meet(f.gamma_k_tilde, gk_c);
  r.pi_ii_not_f = g.meet(g.meet(f.gamma_k, gft_c), gk_c);
  return r;
}

}  // namespace gpea
