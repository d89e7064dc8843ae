// Laws about the exocenter GEX(E) and its action on E.

#include <algorithm>

#include "gpea/axioms.hpp"
#include "gpea/construct.hpp"
#include "laws/context.hpp"

namespace gpea::laws {

namespace {

using Opt = std::optional<Element>;

ExoMap complement_of(Context& c, std::size_t i) { return exo_complement(c.e(), c.map(i)); }

Outcome piprime(Context& c) {
  const auto& e = c.e();
  for (std::size_t i = 0; i < c.gex().size(); ++i) {
    const ExoMap& p = c.map(i);
    const ExoMap q = complement_of(c, i);
    for (Element x = 0; x < c.n(); ++x) {
      const Element px = p(x);
      if (e.right_diff(px, x) != Opt(q(x)) || e.left_diff(px, x) != Opt(q(x)) || e.ominus(x, px) != Opt(q(x))) {
        return fail(c.pi(i), " differences disagree at ", c.el(x));
      }
      if (!e.perp(px, q(x)) || e.oplus(px, q(x)) != Opt(x)) return fail(c.pi(i), " pi e + pi'e != e at ", c.el(x));
    }
  }
  return std::nullopt;
}

Outcome excprop_i(Context& c) {
  for (std::size_t i = 0; i < c.gex().size(); ++i) {
    const ExoMap& p = c.map(i);
    const ExoMap q = complement_of(c, i);
    for (Element x = 0; x < c.n(); ++x) {
      if (p(q(x)) != 0 || q(p(x)) != 0) return fail(c.pi(i), " at ", c.el(x));
    }
  }
  return std::nullopt;
}

Outcome excprop_ii(Context& c) {
  for (std::size_t i = 0; i < c.gex().size(); ++i) {
    const ExoMap q = complement_of(c, i);
    if (auto v = exomap_violation(c.e(), q.values())) return fail(c.pi(i), "' violates ", v->tag);
    if (exo_complement(c.e(), q) != c.map(i)) return fail(c.pi(i), "'' != pi");
  }
  return std::nullopt;
}

Outcome excprop_iii(Context& c) {
  for (std::size_t i = 0; i < c.gex().size(); ++i) {
    const ExoMap& p = c.map(i);
    for (Element f = 0; f < c.n(); ++f) {
      for (Element x : c.e().down(p(f))) {
        if (p(x) != x) return fail(c.pi(i), " e=", c.el(x), " f=", c.el(f));
      }
    }
  }
  return std::nullopt;
}

Outcome excprop_iv(Context& c) {
  for (std::size_t i = 0; i < c.gex().size(); ++i) {
    const ExoMap& p = c.map(i);
    for (Element f = 0; f < c.n(); ++f) {
      for (Element x : c.e().down(f)) {
        if (c.e().meet(x, p(f)) != Opt(p(x))) return fail(c.pi(i), " e=", c.el(x), " f=", c.el(f));
      }
    }
  }
  return std::nullopt;
}

Outcome excprop_v(Context& c) {
  for (std::size_t i = 0; i < c.gex().size(); ++i) {
    const ExoMap& p = c.map(i);
    ElementSet values;
    for (Element x = 0; x < c.n(); ++x) values.insert(p(x));
    if (values != p.image()) return fail(c.pi(i), " values ", c.set(values), " != fixed points");
    if (!is_ideal(c.e(), values)) return fail(c.pi(i), " image is not an ideal");
  }
  return std::nullopt;
}

// Sup and inf of a family equal those of its maximal (resp. minimal)
// members, which form an antichain inside the family.
Outcome excprop_vi(Context& c) {
  if (c.antichains_truncated()) c.mark_sampled();
  for (std::size_t i = 0; i < c.gex().size(); ++i) {
    const ElementSet img = c.map(i).image();
    for (ElementSet a : c.antichains()) {
      if (!a.subset_of(img)) continue;
      const Opt s = c.e().sup(a);
      const Opt m = c.e().inf(a);
      if (s && !img.contains(*s)) return fail(c.pi(i), " sup of ", c.set(a), " leaves the image");
      if (m && !img.contains(*m)) return fail(c.pi(i), " inf of ", c.set(a), " leaves the image");
    }
  }
  return std::nullopt;
}

Outcome excprop_vii(Context& c) {
  const auto& e = c.e();
  for (std::size_t i = 0; i < c.gex().size(); ++i) {
    const ExoMap q = complement_of(c, i);
    for (Element x : c.map(i).image()) {
      for (Element f : q.image()) {
        if (!e.perp(x, f) || e.oplus(x, f) != e.join(x, f) || e.meet(x, f) != Opt(0)) {
          return fail(c.pi(i), " e=", c.el(x), " f=", c.el(f));
        }
      }
    }
  }
  return std::nullopt;
}

Outcome excprop_viii(Context& c) {
  for (std::size_t i = 0; i < c.gex().size(); ++i) {
    const ExoMap& p = c.map(i);
    const ExoMap q = complement_of(c, i);
    for (Element x = 0; x < c.n(); ++x) {
      int found = 0;
      for (Element a : p.image()) {
        for (Element b : q.image()) {
          if (c.e().oplus(a, b) != Opt(x)) continue;
          ++found;
          if (a != p(x) || b != q(x)) return fail(c.pi(i), " coordinates of ", c.el(x), " are not (pi e, pi'e)");
        }
      }
      if (found != 1) return fail(c.pi(i), " ", found, " coordinate pairs for ", c.el(x));
    }
  }
  return std::nullopt;
}

Outcome excprop_ix(Context& c) {
  const auto& e = c.e();
  for (std::size_t i = 0; i < c.gex().size(); ++i) {
    const ExoMap& p = c.map(i);
    const ExoMap q = complement_of(c, i);
    for (Element x = 0; x < c.n(); ++x) {
      for (Element f = 0; f < c.n(); ++f) {
        if (e.defined(x, f) != (e.defined(p(x), p(f)) && e.defined(q(x), q(f)))) {
          return fail(c.pi(i), " e=", c.el(x), " f=", c.el(f));
        }
      }
    }
  }
  return std::nullopt;
}

Outcome excprop_x(Context& c) {
  for (std::size_t i = 0; i < c.gex().size(); ++i) {
    const ElementSet img = c.map(i).image();
    ElementSet disjoint;
    for (Element f = 0; f < c.n(); ++f) {
      bool ok = true;
      for (Element x : img) ok = ok && c.e().meet(f, x) == Opt(0);
      if (ok) disjoint.insert(f);
    }
    if (complement_of(c, i).image() != disjoint) return fail(c.pi(i), " complement image != ", c.set(disjoint));
  }
  return std::nullopt;
}

Outcome circ_i(Context& c) {
  const auto& g = c.gex();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      const ExoMap a = exo_meet(g[i], g[j]);
      if (a != exo_meet(g[j], g[i])) return fail(c.pi(i), ", ", c.pi(j), " do not commute");
      if (!is_exomap(c.e(), a.values())) return fail(c.pi(i), " o ", c.pi(j), " is not in GEX");
    }
  }
  return std::nullopt;
}

bool pointwise_below(Context& c, const ExoMap& a, const ExoMap& b) {
  for (Element x = 0; x < c.n(); ++x) {
    if (!c.e().leq(a(x), b(x))) return false;
  }
  return true;
}

Outcome circ_ii(Context& c) {
  const auto& g = c.gex();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      const bool composed = g[i] == exo_meet(g[i], g[j]);
      const bool pointwise = pointwise_below(c, g[i], g[j]);
      const bool images = g[i].image().subset_of(g[j].image());
      if (composed != pointwise || pointwise != images) return fail("xi=", c.pi(i), " pi=", c.pi(j));
    }
  }
  return std::nullopt;
}

Outcome boolalg(Context& c) {
  const auto& e = c.e();
  const auto& g = c.gex();
  const std::size_t m = g.size();
  auto leq = [&](const ExoMap& a, const ExoMap& b) { return a.image().subset_of(b.image()); };
  auto index = [&](const ExoMap& a) -> std::optional<std::size_t> { return g.find(a); };
  const auto zero = index(exo_zero(e));
  const auto one = index(exo_identity(e));
  if (!zero || !one) return fail("zero or identity map missing from GEX");
  std::vector<std::size_t> comp(m), meet(m * m), join(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!leq(g[*zero], g[i]) || !leq(g[i], g[*one])) return fail(c.pi(i), " outside [0,1]");
    const auto ci = index(exo_complement(e, g[i]));
    if (!ci) return fail(c.pi(i), "' not in GEX");
    comp[i] = *ci;
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && leq(g[i], g[j]) && leq(g[j], g[i])) return fail("order not antisymmetric: ", c.pi(i), ", ", c.pi(j));
      const auto mij = index(exo_meet(g[i], g[j]));
      const auto jij = index(exo_join(e, g[i], g[j]));
      if (!mij || !jij) return fail("meet or join of ", c.pi(i), ", ", c.pi(j), " not in GEX");
      meet[i * m + j] = *mij;
      join[i * m + j] = *jij;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (comp[i] != g.complement(i)) return fail("complement table differs at ", c.pi(i));
    if (meet[i * m + comp[i]] != *zero || join[i * m + comp[i]] != *one) return fail(c.pi(i), " and its complement");
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t mij = meet[i * m + j];
      const std::size_t jij = join[i * m + j];
      if (mij != g.meet(i, j) || jij != g.join(i, j)) return fail("operation tables differ at ", c.pi(i), ", ", c.pi(j));
      if (!leq(g[mij], g[i]) || !leq(g[mij], g[j]) || !leq(g[i], g[jij]) || !leq(g[j], g[jij])) {
        return fail("meet/join not bounds of ", c.pi(i), ", ", c.pi(j));
      }
      for (std::size_t k = 0; k < m; ++k) {
        if (leq(g[k], g[i]) && leq(g[k], g[j]) && !leq(g[k], g[mij])) return fail("meet not greatest: ", c.pi(i), ", ", c.pi(j));
        if (leq(g[i], g[k]) && leq(g[j], g[k]) && !leq(g[jij], g[k])) return fail("join not least: ", c.pi(i), ", ", c.pi(j));
        const std::size_t lhs = meet[i * m + join[j * m + k]];
        const std::size_t rhs = join[meet[i * m + j] * m + meet[i * m + k]];
        if (lhs != rhs) return fail("not distributive: ", c.pi(i), ", ", c.pi(j), ", ", c.pi(k));
      }
    }
  }
  return std::nullopt;
}

Outcome disjoint_pi_xi_i(Context& c) {
  const auto& e = c.e();
  const auto& g = c.gex();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g.meet(i, j) != g.zero()) continue;
      const ElementSet joined = g[g.join(i, j)].image();
      for (Element x : g[i].image()) {
        for (Element f : g[j].image()) {
          const Opt s = e.oplus(x, f);
          if (!e.perp(x, f) || !joined.contains(*s) || s != e.join(x, f) || e.meet(x, f) != Opt(0)) {
            return fail(c.pi(i), ", ", c.pi(j), " e=", c.el(x), " f=", c.el(f));
          }
        }
      }
    }
  }
  return std::nullopt;
}

Outcome disjoint_pi_xi_ii(Context& c) {
  const auto& e = c.e();
  const auto& g = c.gex();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g.meet(i, j) != g.zero()) continue;
      const ExoMap& join = g[g.join(i, j)];
      for (Element x = 0; x < c.n(); ++x) {
        const Element a = g[i](x);
        const Element b = g[j](x);
        if (!e.perp(a, b) || e.join(a, b) != Opt(join(x)) || e.oplus(a, b) != Opt(join(x)) || e.meet(a, b) != Opt(0)) {
          return fail(c.pi(i), ", ", c.pi(j), " e=", c.el(x));
        }
      }
    }
  }
  return std::nullopt;
}

// Calls visit on every tuple (e_1..e_k) with e_i in the image of f[i].
template <typename Visit>
Outcome for_each_choice(Context& c, const std::vector<std::size_t>& f, Visit&& visit) {
  std::vector<std::vector<Element>> pools;
  for (std::size_t i : f) pools.push_back(c.map(i).image().elements());
  std::vector<std::size_t> at(f.size(), 0);
  std::vector<Element> tuple(f.size());
  for (;;) {
    for (std::size_t k = 0; k < f.size(); ++k) tuple[k] = pools[k][at[k]];
    if (auto o = visit(tuple)) return o;
    std::size_t k = 0;
    while (k < f.size() && ++at[k] == pools[k].size()) at[k++] = 0;
    if (k == f.size()) return std::nullopt;
  }
}

Outcome finite_disjoint_i(Context& c) {
  for (const auto& f : disjoint_families(c.gex())) {
    auto o = for_each_choice(c, f, [&](const std::vector<Element>& t) -> Outcome {
      const Opt s = c.e().orthosum(t);
      if (!s || s != sup_of(c.e(), t)) return fail(maps(c, f), " family ", fam(c.e(), t));
      return std::nullopt;
    });
    if (o) return o;
  }
  return std::nullopt;
}

Outcome finite_disjoint_ii(Context& c) {
  const auto& g = c.gex();
  for (const auto& f : disjoint_families(g)) {
    const ExoMap& joined = g[join_all(g, f)];
    for (Element x = 0; x < c.n(); ++x) {
      std::vector<Element> parts;
      for (std::size_t i : f) parts.push_back(g[i](x));
      const Opt s = c.e().orthosum(parts);
      if (s != Opt(joined(x)) || sup_of(c.e(), parts) != s) return fail(maps(c, f), " e=", c.el(x));
    }
  }
  return std::nullopt;
}

Outcome pointwise_inf(Context& c) {
  const auto& g = c.gex();
  for (const auto& f : gex_families(c)) {
    const ExoMap& met = g[meet_all(g, f)];
    for (Element x = 0; x < c.n(); ++x) {
      std::vector<Element> v;
      for (std::size_t i : f) v.push_back(g[i](x));
      if (inf_of(c.e(), v) != Opt(met(x))) return fail(maps(c, f), " e=", c.el(x));
    }
  }
  return std::nullopt;
}

Outcome pointwise_sup(Context& c) {
  const auto& g = c.gex();
  for (const auto& f : gex_families(c)) {
    const ExoMap& joined = g[join_all(g, f)];
    for (Element x = 0; x < c.n(); ++x) {
      std::vector<Element> v;
      for (std::size_t i : f) v.push_back(g[i](x));
      if (sup_of(c.e(), v) != Opt(joined(x))) return fail(maps(c, f), " e=", c.el(x));
    }
  }
  return std::nullopt;
}

}  // namespace

Outcome check_product_map(Context& c, const std::vector<std::size_t>& f) {
  const auto& g = c.gex();
  const ExoMap& joined = g[join_all(g, f)];
  std::vector<FiniteGpea> parts;
  std::vector<std::vector<Element>> ids(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) parts.push_back(restrict_to(c.e(), g[f[k]].image(), &ids[k]));
  std::vector<Element> target_ids;
  const FiniteGpea target = restrict_to(c.e(), joined.image(), &target_ids);
  const auto product = product_of(parts);
  if (!product || product->sum.size() != target.size()) return fail(maps(c, f), " product size differs from the summand");
  std::vector<Element> phi(product->sum.size());
  for (Element id = 0; id < product->sum.size(); ++id) {
    const auto coords = product->decode(id);
    std::vector<Element> t;
    for (std::size_t k = 0; k < f.size(); ++k) t.push_back(ids[k][coords[k]]);
    const Opt s = c.e().orthosum(t);
    if (!s || s != sup_of(c.e(), t)) return fail(maps(c, f), " family ", fam(c.e(), t), " orthosum != sup");
    const auto pos = std::find(target_ids.begin(), target_ids.end(), *s);
    if (pos == target_ids.end()) return fail(maps(c, f), " orthosum outside the image of the join");
    phi[id] = static_cast<Element>(pos - target_ids.begin());
  }
  if (!is_isomorphism(product->sum, target, phi)) return fail(maps(c, f), " Phi is not an isomorphism");
  for (Element id = 0; id < product->sum.size(); ++id) {
    const auto coords = product->decode(id);
    const Element x = target_ids[phi[id]];
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (g[f[k]](x) != ids[k][coords[k]]) return fail(maps(c, f), " inverse of Phi at ", c.el(x));
    }
  }
  return std::nullopt;
}

namespace {

Outcome finite_cartesian(Context& c) {
  const auto& g = c.gex();
  for (const auto& f : disjoint_families(g)) {
    if (join_all(g, f) != g.one()) continue;
    if (auto o = check_product_map(c, f)) return o;
  }
  return std::nullopt;
}

std::vector<ElementSet> central_ideals(Context& c) {
  std::vector<ElementSet> out;
  for (const auto& split : c.splits()) out.push_back(split.first);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Outcome centid(Context& c) {
  std::vector<ElementSet> images;
  for (const auto& m : c.gex().maps()) images.push_back(m.image());
  std::sort(images.begin(), images.end());
  const auto central = central_ideals(c);
  if (images != central) {
    for (ElementSet s : central) {
      if (!std::binary_search(images.begin(), images.end(), s)) return fail("central ideal ", c.set(s), " is no image");
    }
    for (ElementSet s : images) {
      if (!std::binary_search(central.begin(), central.end(), s)) return fail("image ", c.set(s), " is not central");
    }
  }
  return std::nullopt;
}

Outcome pienormal(Context& c) {
  for (std::size_t i = 0; i < c.gex().size(); ++i) {
    if (!is_normal_ideal(c.e(), c.map(i).image())) return fail(c.pi(i), " image is not normal");
  }
  return std::nullopt;
}

Outcome ciposet(Context& c) {
  const auto& g = c.gex();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const ElementSet img = g[i].image();
    if (!direct_sum_split(c.e(), img, complement_of(c, i).image())) return fail(c.pi(i), "'(E) is not the complement of pi(E)");
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i != j && img == g[j].image()) return fail("two maps with image ", c.set(img));
      const bool below = g[i] == exo_meet(g[i], g[j]);
      if (below != img.subset_of(g[j].image())) return fail("order not preserved: ", c.pi(i), ", ", c.pi(j));
    }
  }
  return std::nullopt;
}

Outcome ptwise_i(Context& c) {
  if (c.antichains_truncated()) c.mark_sampled();
  for (std::size_t i = 0; i < c.gex().size(); ++i) {
    const ExoMap& p = c.map(i);
    for (ElementSet a : c.antichains()) {
      const Opt s = c.e().sup(a);
      if (!s) continue;
      std::vector<Element> v;
      for (Element x : a) v.push_back(p(x));
      if (sup_of(c.e(), v) != Opt(p(*s))) return fail(c.pi(i), " family ", c.set(a));
    }
  }
  return std::nullopt;
}

Outcome ptwise_ii(Context& c) {
  if (c.antichains_truncated()) c.mark_sampled();
  for (std::size_t i = 0; i < c.gex().size(); ++i) {
    const ExoMap& p = c.map(i);
    for (ElementSet a : c.antichains()) {
      const Opt m = c.e().inf(a);
      if (!m) continue;
      std::vector<Element> v;
      for (Element x : a) v.push_back(p(x));
      if (inf_of(c.e(), v) != Opt(p(*m))) return fail(c.pi(i), " family ", c.set(a));
    }
  }
  return std::nullopt;
}

// In a finite model an orthosummable family has finitely many nonzero
// members; zero members do not change either side.
Outcome ptwise_iii(Context& c) {
  bool truncated = false;
  const auto families = orthogonal_families(c.e(), 100000, truncated);
  if (truncated) c.mark_sampled();
  for (std::size_t i = 0; i < c.gex().size(); ++i) {
    const ExoMap& p = c.map(i);
    for (const auto& [f, s] : families) {
      std::vector<Element> v;
      for (Element x : f) v.push_back(p(x));
      if (c.e().orthosum(v) != Opt(p(s))) return fail(c.pi(i), " family ", fam(c.e(), f));
    }
  }
  return std::nullopt;
}

}  // namespace

void add_exocenter_laws(std::vector<LawEntry>& out) {
  out.push_back({"piprime", "pi'e = (pi e)/e = e\\(pi e) = e - pi e and pi e + pi'e = pi'e + pi e = e", piprime});
  out.push_back({"EXCprop.i", "pi(pi'e) = pi'(pi e) = 0", excprop_i});
  out.push_back({"EXCprop.ii", "pi' is in GEX(E) and pi'' = pi", excprop_ii});
  out.push_back({"EXCprop.iii", "e <= pi f implies e = pi e", excprop_iii});
  out.push_back({"EXCprop.iv", "e <= f implies pi e = e ^ pi f", excprop_iv});
  out.push_back({"EXCprop.v", "pi(E) equals the fixed points of pi and is an ideal", excprop_v});
  out.push_back({"EXCprop.vi", "pi(E) is closed under existing sups and infs of nonempty families", excprop_vi});
  out.push_back({"EXCprop.vii", "e in pi(E), f in pi'(E) implies e orthogonal to f, e+f = e v f, e ^ f = 0", excprop_vii});
  out.push_back({"EXCprop.viii", "e = pi e + pi'e is the only decomposition with coordinates in pi(E), pi'(E)", excprop_viii});
  out.push_back({"EXCprop.ix", "e+f exists iff pi e + pi f and pi'e + pi'f exist", excprop_ix});
  out.push_back({"EXCprop.x", "pi'(E) = {f : f ^ e = 0 for all e in pi(E)}", excprop_x});
  out.push_back({"circ.i", "xi o pi = pi o xi is in GEX(E)", circ_i});
  out.push_back({"circ.ii", "xi = xi o pi iff xi e <= pi e for all e iff xi(E) is contained in pi(E)", circ_ii});
  out.push_back({"boolalg", "GEX(E) is a Boolean algebra with complement pi', meet pi o xi, join (pi' o xi')'", boolalg});
  out.push_back({"DisjointPiXi.i", "for disjoint pi, xi: e in pi(E), f in xi(E) gives e+f = e v f in (pi v xi)(E), e ^ f = 0", disjoint_pi_xi_i});
  out.push_back({"DisjointPiXi.ii", "for disjoint pi, xi: (pi v xi)e = pi e v xi e = pi e + xi e and pi e ^ xi e = 0", disjoint_pi_xi_ii});
  out.push_back({"FinitePwiseDisjointPi.i", "e_i in pi_i(E) for pairwise disjoint pi_i are orthogonal with orthosum = sup", finite_disjoint_i});
  out.push_back({"FinitePwiseDisjointPi.ii", "(pi_1 v ... v pi_n)e = orthosum of pi_i e = sup of pi_i e", finite_disjoint_ii});
  out.push_back({"finitepointwisesup/inf.i", "(pi_1 ^ ... ^ pi_n)e = pi_1 e ^ ... ^ pi_n e", pointwise_inf});
  out.push_back({"finitepointwisesup/inf.ii", "(pi_1 v ... v pi_n)e = pi_1 e v ... v pi_n e", pointwise_sup});
  out.push_back({"finitecartesianprod", "pairwise disjoint pi_i with join 1 give E isomorphic to the product of the pi_i(E)", finite_cartesian});
  out.push_back({"CentId=piE", "the central ideals are exactly the images pi(E)", centid});
  out.push_back({"piEnormal", "pi(E) is a normal ideal", pienormal});
  out.push_back({"CIposet", "pi -> pi(E) is an order isomorphism onto the central ideals, pi'(E) the complement", ciposet});
  out.push_back({"PtwisePi.i", "pi(sup e_i) = sup pi e_i", ptwise_i});
  out.push_back({"PtwisePi.ii", "pi(inf e_i) = inf pi e_i for nonempty families", ptwise_ii});
  out.push_back({"PtwisePi.iii", "pi(orthosum e_i) = orthosum pi e_i", ptwise_iii});
}

}  // namespace gpea::laws
