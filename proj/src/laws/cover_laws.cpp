// Laws about GEX-orthogonal families, central orthocompleteness, the unit
// of the center and exocentral covers.

#include <algorithm>

#include "gpea/axioms.hpp"
#include "gpea/construct.hpp"
#include "laws/context.hpp"

namespace gpea::laws {

namespace {

using Opt = std::optional<Element>;

bool gex_orthogonal_pair(Context& c, Element e, Element f) { return has_disjoint_assignment(c, {e, f}); }

Outcome gammaex_orthogonal(Context& c) {
  for (Element e = 0; e < c.n(); ++e) {
    for (Element f = 0; f < c.n(); ++f) {
      const bool by_maps = gex_orthogonal_pair(c, e, f);
      const bool by_summands = std::any_of(c.splits().begin(), c.splits().end(), [&](const auto& p) {
        return p.first.contains(e) && p.second.contains(f);
      });
      if (by_maps != by_summands) return fail("e=", c.el(e), " f=", c.el(f));
    }
  }
  return std::nullopt;
}

// Sets of distinct nonzero elements that are pairwise GEX-orthogonal. A
// nonzero element is never GEX-orthogonal to itself and zero members change
// neither orthosums nor suprema, so these cover all finite families.
std::vector<std::vector<Element>> pairwise_gex_orthogonal_sets(Context& c) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> current;
  auto extend = [&](auto&& self, Element from) -> void {
    for (Element x = from; x < c.n(); ++x) {
      bool ok = true;
      for (Element y : current) ok = ok && gex_orthogonal_pair(c, x, y);
      if (!ok) continue;
      current.push_back(x);
      out.push_back(current);
      self(self, x + 1);
      current.pop_back();
    }
  };
  extend(extend, 1);
  return out;
}

Outcome co_i(Context& c) {
  for (Element x = 1; x < c.n(); ++x) {
    if (gex_orthogonal_pair(c, x, x)) return fail(c.el(x), " is GEX-orthogonal to itself");
  }
  for (const auto& f : pairwise_gex_orthogonal_sets(c)) {
    if (!has_disjoint_assignment(c, f)) return fail("pairwise but not jointly GEX-orthogonal: ", fam(c.e(), f));
    const Opt s = c.e().orthosum(f);
    if (!s || s != sup_of(c.e(), f)) return fail("orthosum != sup for ", fam(c.e(), f));
  }
  return std::nullopt;
}

Outcome co_ii(Context& c) {
  for (const auto& f : pairwise_gex_orthogonal_sets(c)) {
    if (!has_disjoint_assignment(c, f)) continue;
    if (!c.e().orthosum(f)) return fail("not orthogonal: ", fam(c.e(), f));
    // Orthosum of an arbitrary family: sup of the orthosums of its finite
    // subfamilies.
    std::vector<Element> partial;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.size()); ++bits) {
      std::vector<Element> sub;
      for (std::size_t k = 0; k < f.size(); ++k) {
        if ((bits >> k) & 1u) sub.push_back(f[k]);
      }
      partial.push_back(*c.e().orthosum(sub));
    }
    const Opt total = sup_of(c.e(), partial);
    const Opt sup = sup_of(c.e(), f);
    if (total.has_value() != sup.has_value() || total != sup) return fail("orthosummable iff sup fails for ", fam(c.e(), f));
  }
  return std::nullopt;
}

Outcome coce_i(Context& c) {
  const auto& g = c.gex();
  for (Element z : c.center()) {
    for (Element d : c.center()) {
      const bool a = gex_orthogonal_pair(c, z, d);
      const bool b = g.meet(c.pi_index(z), c.pi_index(d)) == g.zero();
      const bool p = c.e().perp(z, d);
      const bool m = c.e().meet(z, d) == Opt(0);
      if (a != b || b != p || p != m) return fail("c=", c.el(z), " d=", c.el(d));
    }
  }
  return std::nullopt;
}

Outcome coce_ii(Context& c) {
  const auto& e = c.e();
  return for_each_subset(c.center(), [&](ElementSet s) -> Outcome {
    const auto f = s.elements();
    bool pairwise_perp = true;
    bool pairwise_disjoint = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        pairwise_perp = pairwise_perp && e.perp(f[i], f[j]);
        pairwise_disjoint = pairwise_disjoint && e.meet(f[i], f[j]) == Opt(0);
      }
    }
    // Orthogonality needs every pair orthogonal, so larger non-pairwise
    // families are decided by the pairs.
    const bool orthogonal = (pairwise_perp || f.size() <= 8) ? e.orthosum(f).has_value() : false;
    const bool gex = has_disjoint_assignment(c, f);
    if (gex != orthogonal || orthogonal != pairwise_perp || pairwise_perp != pairwise_disjoint) {
      return fail("central family ", c.set(s));
    }
    return std::nullopt;
  });
}

Outcome cogpea(Context& c) {
  const auto cert = is_cogpea(c.e(), c.covers());
  if (!cert.holds) return fail(cert.failure);
  return std::nullopt;
}

// Pairwise disjoint maps pi_i and pairs e_i, f_i in pi_i(E) with e_i + f_i
// defined; `check` receives the three families.
template <typename Check>
Outcome sweep_disjoint_pairs(Context& c, Check&& check) {
  const auto& e = c.e();
  for (const auto& f : disjoint_families(c.gex())) {
    std::vector<std::vector<std::pair<Element, Element>>> pools;
    for (std::size_t i : f) {
      std::vector<std::pair<Element, Element>> pool;
      const ElementSet img = c.map(i).image();
      for (Element a : img) {
        for (Element b : img) {
          if (e.defined(a, b)) pool.emplace_back(a, b);
        }
      }
      pools.push_back(std::move(pool));
    }
    std::vector<std::size_t> at(f.size(), 0);
    for (;;) {
      std::vector<Element> es, fs, sums;
      for (std::size_t k = 0; k < f.size(); ++k) {
        es.push_back(pools[k][at[k]].first);
        fs.push_back(pools[k][at[k]].second);
        sums.push_back(*e.oplus(es.back(), fs.back()));
      }
      if (auto o = check(f, es, fs, sums)) return o;
      std::size_t k = 0;
      while (k < f.size() && ++at[k] == pools[k].size()) at[k++] = 0;
      if (k == f.size()) break;
    }
  }
  return std::nullopt;
}

Outcome pwisedisj_i(Context& c) {
  return sweep_disjoint_pairs(c, [&](const auto& f, const auto& es, const auto& fs, const auto& sums) -> Outcome {
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (!c.map(f[k]).image().contains(sums[k])) return fail(maps(c, f), " e_i+f_i leaves pi_i(E)");
    }
    for (const auto* fam_ptr : {&es, &fs, &sums}) {
      if (!has_disjoint_assignment(c, *fam_ptr) || !c.e().orthosum(*fam_ptr)) {
        return fail(maps(c, f), " family ", fam(c.e(), *fam_ptr), " not GEX-orthogonal and orthosummable");
      }
    }
    return std::nullopt;
  });
}

Outcome pwisedisj_ii(Context& c) {
  return sweep_disjoint_pairs(c, [&](const auto& f, const auto& es, const auto& fs, const auto& sums) -> Outcome {
    for (const auto* fam_ptr : {&es, &fs, &sums}) {
      if (c.e().orthosum(*fam_ptr) != sup_of(c.e(), *fam_ptr)) return fail(maps(c, f), " family ", fam(c.e(), *fam_ptr));
    }
    return std::nullopt;
  });
}

Outcome pwisedisj_iii(Context& c) {
  return sweep_disjoint_pairs(c, [&](const auto& f, const auto& es, const auto& fs, const auto&) -> Outcome {
    if (!c.e().defined(*c.e().orthosum(es), *c.e().orthosum(fs))) return fail(maps(c, f), " e=", fam(c.e(), es), " f=", fam(c.e(), fs));
    return std::nullopt;
  });
}

Outcome pwisedisj_iv(Context& c) {
  return sweep_disjoint_pairs(c, [&](const auto& f, const auto& es, const auto& fs, const auto& sums) -> Outcome {
    const Opt lhs = c.e().oplus(*c.e().orthosum(es), *c.e().orthosum(fs));
    if (lhs != c.e().orthosum(sums) || lhs != sup_of(c.e(), sums)) return fail(maps(c, f), " e=", fam(c.e(), es), " f=", fam(c.e(), fs));
    return std::nullopt;
  });
}

Outcome disjsup(Context& c) {
  const auto& g = c.gex();
  for (const auto& f : disjoint_families(g)) {
    const std::size_t j = join_all(g, f);
    for (std::size_t k = 0; k < g.size(); ++k) {
      const bool upper = std::all_of(f.begin(), f.end(), [&](std::size_t i) { return g[i].image().subset_of(g[k].image()); });
      if (upper && !g[j].image().subset_of(g[k].image())) return fail(maps(c, f), " join is not least");
    }
    for (Element x = 0; x < c.n(); ++x) {
      std::vector<Element> v;
      for (std::size_t i : f) v.push_back(g[i](x));
      if (sup_of(c.e(), v) != Opt(g[j](x)) || c.e().orthosum(v) != Opt(g[j](x))) return fail(maps(c, f), " e=", c.el(x));
    }
  }
  return std::nullopt;
}

// A finite lattice is complete, so it is enough that every pair has a least
// upper and a greatest lower bound under image inclusion.
Outcome completeboo(Context& c) {
  const auto& g = c.gex();
  auto leq = [&](std::size_t a, std::size_t b) { return g[a].image().subset_of(g[b].image()); };
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      std::optional<std::size_t> lub;
      std::optional<std::size_t> glb;
      for (std::size_t z = 0; z < g.size(); ++z) {
        if (leq(a, z) && leq(b, z) && (!lub || leq(z, *lub))) lub = z;
        if (leq(z, a) && leq(z, b) && (!glb || leq(*glb, z))) glb = z;
      }
      for (std::size_t z = 0; z < g.size(); ++z) {
        if (leq(a, z) && leq(b, z) && !leq(*lub, z)) return fail("no least upper bound of ", c.pi(a), ", ", c.pi(b));
        if (leq(z, a) && leq(z, b) && !leq(z, *glb)) return fail("no greatest lower bound of ", c.pi(a), ", ", c.pi(b));
      }
    }
  }
  return std::nullopt;
}

Outcome arb_sup(Context& c) {
  const auto& g = c.gex();
  for (Element x = 0; x < c.n(); ++x) {
    if (g[g.zero()](x) != 0) return fail("empty family at ", c.el(x));
  }
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

Outcome arb_inf(Context& c) {
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

Outcome arb_cart(Context& c) {
  for (const auto& f : disjoint_families(c.gex())) {
    if (auto o = check_product_map(c, f)) return o;
  }
  return std::nullopt;
}

// GEX-orthogonal families (p_i) with disjoint maps pi_i fixing them: every
// disjoint map family with every choice of p_i in pi_i(E).
template <typename Check>
Outcome sweep_cop(Context& c, Check&& check) {
  for (const auto& f : disjoint_families(c.gex())) {
    std::vector<std::vector<Element>> pools;
    for (std::size_t i : f) pools.push_back(c.map(i).image().elements());
    std::vector<std::size_t> at(f.size(), 0);
    for (;;) {
      std::vector<Element> p;
      for (std::size_t k = 0; k < f.size(); ++k) p.push_back(pools[k][at[k]]);
      if (auto o = check(f, p)) return o;
      std::size_t k = 0;
      while (k < f.size() && ++at[k] == pools[k].size()) at[k++] = 0;
      if (k == f.size()) break;
    }
  }
  return std::nullopt;
}

// Tuples of X = product of E[0,p_i].
template <typename Visit>
Outcome for_each_tuple(Context& c, const std::vector<Element>& p, Visit&& visit) {
  std::vector<std::vector<Element>> pools;
  for (Element x : p) pools.push_back(c.e().down(x).elements());
  std::vector<std::size_t> at(p.size(), 0);
  for (;;) {
    std::vector<Element> t;
    for (std::size_t k = 0; k < p.size(); ++k) t.push_back(pools[k][at[k]]);
    if (auto o = visit(t)) return o;
    std::size_t k = 0;
    while (k < p.size() && ++at[k] == pools[k].size()) at[k++] = 0;
    if (k == p.size()) return std::nullopt;
  }
}

Outcome cop_i(Context& c) {
  return sweep_cop(c, [&](const auto& f, const auto& p) -> Outcome {
    return for_each_tuple(c, p, [&](const std::vector<Element>& t) -> Outcome {
      for (std::size_t k = 0; k < f.size(); ++k) {
        if (c.map(f[k])(t[k]) != t[k]) return fail(maps(c, f), " p=", fam(c.e(), p), " e_i=", c.el(t[k]));
      }
      if (!c.e().orthosum(t)) return fail(maps(c, f), " family ", fam(c.e(), t), " not orthosummable");
      return std::nullopt;
    });
  });
}

Outcome cop_ii(Context& c) {
  return sweep_cop(c, [&](const auto& f, const auto& p) -> Outcome {
    const Opt top = sup_of(c.e(), p);
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (!top || c.map(f[k])(*top) != p[k]) return fail(maps(c, f), " pi_i p != p_i for p=", fam(c.e(), p));
    }
    return for_each_tuple(c, p, [&](const std::vector<Element>& t) -> Outcome {
      const Element s = *c.e().orthosum(t);
      for (std::size_t k = 0; k < f.size(); ++k) {
        if (c.map(f[k])(s) != t[k]) return fail(maps(c, f), " family ", fam(c.e(), t));
      }
      return std::nullopt;
    });
  });
}

Outcome cop_iii(Context& c) {
  return sweep_cop(c, [&](const auto& f, const auto& p) -> Outcome {
    const Opt top = sup_of(c.e(), p);
    if (!top) return fail(maps(c, f), " no sup for ", fam(c.e(), p));
    for (Element x : c.e().down(*top)) {
      std::vector<Element> v;
      for (std::size_t k = 0; k < f.size(); ++k) {
        const Element y = c.map(f[k])(x);
        if (c.e().meet(x, p[k]) != Opt(y) || !c.e().leq(y, p[k])) return fail(maps(c, f), " p=", fam(c.e(), p), " e=", c.el(x));
        v.push_back(y);
      }
      if (sup_of(c.e(), v) != Opt(x)) return fail(maps(c, f), " sup pi_i e != e for e=", c.el(x));
    }
    return std::nullopt;
  });
}

Outcome cop_iv(Context& c) {
  return sweep_cop(c, [&](const auto& f, const auto& p) -> Outcome {
    const Element top = *sup_of(c.e(), p);
    std::vector<FiniteGpea> parts;
    std::vector<Sub> subs;
    for (Element x : p) {
      subs.push_back(submodel(c.e(), c.e().down(x)));
      parts.push_back(subs.back().model);
    }
    const Sub target = submodel(c.e(), c.e().down(top));
    const auto product = product_of(parts);
    if (!product || product->sum.size() != target.model.size()) return fail(maps(c, f), " p=", fam(c.e(), p), ": sizes differ");
    std::vector<Element> phi(product->sum.size());
    for (Element id = 0; id < product->sum.size(); ++id) {
      const auto coords = product->decode(id);
      std::vector<Element> t;
      for (std::size_t k = 0; k < p.size(); ++k) t.push_back(subs[k].old_id[coords[k]]);
      const Opt s = c.e().orthosum(t);
      if (!s || s != sup_of(c.e(), t) || !target.new_id[*s]) return fail(maps(c, f), " family ", fam(c.e(), t));
      phi[id] = *target.new_id[*s];
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (c.map(f[k])(*s) != t[k]) return fail(maps(c, f), " inverse of Phi at ", c.el(*s));
      }
    }
    if (!is_isomorphism(product->sum, target.model, phi)) return fail(maps(c, f), " p=", fam(c.e(), p), ": Phi is not an isomorphism");
    return std::nullopt;
  });
}

std::vector<std::size_t> pi_indices(Context& c, ElementSet s) {
  std::vector<std::size_t> out;
  for (Element x : s) out.push_back(c.pi_index(x));
  return out;
}

Outcome cogpea_center_i(Context& c) {
  const ElementSet gamma = c.center();
  return for_each_subset(gamma, [&](ElementSet s) -> Outcome {
    if (s.empty()) return std::nullopt;
    const Opt m = c.e().inf(s);
    if (!m || !gamma.contains(*m)) return fail("inf of ", c.set(s), " missing or not central");
    if (c.pi_index(*m) != meet_all(c.gex(), pi_indices(c, s))) return fail("pi of inf ", c.set(s));
    for (Element z : gamma) {
      bool lower = true;
      for (Element x : s) lower = lower && c.e().leq(z, x);
      if (lower && !c.e().leq(z, *m)) return fail("not the inf in the center: ", c.set(s));
    }
    return std::nullopt;
  });
}

Outcome cogpea_center_ii(Context& c) {
  const ElementSet gamma = c.center();
  return for_each_subset(gamma, [&](ElementSet s) -> Outcome {
    bool bounded = false;
    for (Element b = 0; b < c.n() && !bounded; ++b) {
      bool upper = true;
      for (Element x : s) upper = upper && c.e().leq(x, b);
      bounded = upper;
    }
    if (!bounded) return std::nullopt;
    const Opt d = c.e().sup(s);
    if (!d || !gamma.contains(*d)) return fail("sup of ", c.set(s), " missing or not central");
    if (c.pi_index(*d) != join_all(c.gex(), pi_indices(c, s))) return fail("pi of sup ", c.set(s));
    for (Element z : gamma) {
      bool upper = true;
      for (Element x : s) upper = upper && c.e().leq(x, z);
      if (upper && !c.e().leq(*d, z)) return fail("not the sup in the center: ", c.set(s));
    }
    return std::nullopt;
  });
}

Outcome largest_i(Context& c) {
  const Element u = c.unit();
  for (Element z : c.center()) {
    if (!c.e().leq(z, u)) return fail("central ", c.el(z), " not below the unit ", c.el(u));
  }
  if (c.map(c.pi_index(u)).image() != c.e().down(u)) return fail("pi_u(E) != E[0,u]");
  return std::nullopt;
}

Outcome largest_ii(Context& c) {
  const auto gamma = c.center().elements();
  auto leq = [&](std::size_t a, std::size_t b) { return c.e().leq(gamma[a], gamma[b]); };
  if (auto o = check_generalized_boolean(gamma.size(), leq, [&](std::size_t a) { return c.el(gamma[a]); })) return o;
  for (Element z : gamma) {
    if (!c.e().leq(z, c.unit())) return fail("no top: ", c.el(z));
  }
  return std::nullopt;
}

ElementSet perp_set(const FiniteGpea& e, Element u) {
  ElementSet out;
  for (Element f = 0; f < e.size(); ++f) {
    if (e.perp(f, u)) out.insert(f);
  }
  return out;
}

Outcome centerless_i(Context& c) {
  const auto& e = c.e();
  const Element u = c.unit();
  const std::size_t pu = c.pi_index(u);
  const ElementSet comp = c.map(c.gex().complement(pu)).image();
  if (!direct_sum_split(e, e.down(u), comp)) return fail("E[0,u] is not a summand with complement ", c.set(comp));
  ElementSet residues;
  for (Element x = 0; x < c.n(); ++x) {
    const Opt m = e.meet(u, x);
    const Opt r = m ? e.ominus(x, *m) : std::nullopt;
    if (!r) return fail("e - (u ^ e) missing for e=", c.el(x));
    residues.insert(*r);
  }
  if (comp != perp_set(e, u) || comp != residues) return fail("complement descriptions differ: ", c.set(comp));
  return std::nullopt;
}

Outcome centerless_ii(Context& c) {
  const auto& e = c.e();
  const Element u = c.unit();
  const Sub h = submodel(e, e.down(u));
  ElementSet hc;
  for (Element x : central_elements(h.model)) hc.insert(h.old_id[x]);
  if (hc != c.center()) return fail("center of E[0,u] is ", c.set(hc));
  const Sub k = submodel(e, perp_set(e, u));
  if (central_elements(k.model) != ElementSet{0}) return fail("complement of E[0,u] is not centerless");
  for (const ExoMap& m : exocenter(k.model)) {
    if (m.image() == ElementSet{0}) continue;
    if (restrict_to(k.model, m.image()).top()) return fail("complement has a PEA summand");
  }
  return std::nullopt;
}

Outcome centerless_iii(Context& c) {
  const auto& e = c.e();
  const Element u = c.unit();
  for (const auto& [hs, ks] : c.splits()) {
    const bool pea = restrict_to(e, hs).top().has_value();
    const bool centerless = central_elements(restrict_to(e, ks)) == ElementSet{0};
    if (pea && centerless && (hs != e.down(u) || ks != perp_set(e, u))) {
      return fail("split ", c.set(hs), " + ", c.set(ks), " differs from E[0,u] + {f orthogonal to u}");
    }
  }
  return std::nullopt;
}

Outcome cover_meet(Context& c) {
  const auto& g = c.gex();
  for (Element x = 0; x < c.n(); ++x) {
    const std::size_t gi = c.covers().gamma_index(x);
    if (g[gi](x) != x) return fail("gamma_e does not fix e=", c.el(x));
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i](x) == x && !g[gi].image().subset_of(g[i].image())) return fail("gamma_e not below ", c.pi(i), " for e=", c.el(x));
    }
    if (exocentral_cover_by_image(c.e(), g, x) != g[gi]) return fail("smallest image containing ", c.el(x), " differs");
  }
  return std::nullopt;
}

std::size_t gam(Context& c, Element x) { return c.covers().gamma_index(x); }

Outcome excov_i(Context& c) {
  if (gam(c, 0) != c.gex().zero()) return fail("gamma_0 = ", c.pi(gam(c, 0)));
  return std::nullopt;
}

Outcome excov_ii(Context& c) {
  for (Element x = 0; x < c.n(); ++x) {
    if (c.covers().gamma(x)(x) != x) return fail("e=", c.el(x));
  }
  return std::nullopt;
}

Outcome excov_iii(Context& c) {
  for (Element f = 0; f < c.n(); ++f) {
    for (Element x : c.e().down(f)) {
      if (!c.gex().leq(gam(c, x), gam(c, f))) return fail("e=", c.el(x), " f=", c.el(f));
    }
  }
  return std::nullopt;
}

Outcome excov_iv(Context& c) {
  for (Element x = 0; x < c.n(); ++x) {
    for (Element f = 0; f < c.n(); ++f) {
      const Opt s = c.e().oplus(x, f);
      if (s && gam(c, *s) != c.gex().join(gam(c, x), gam(c, f))) return fail("e=", c.el(x), " f=", c.el(f));
    }
  }
  return std::nullopt;
}

Outcome excov_v(Context& c) {
  const auto& g = c.gex();
  for (Element x = 0; x < c.n(); ++x) {
    for (Element f = 0; f < c.n(); ++f) {
      const ExoMap composed = exo_meet(c.covers().gamma(x), c.covers().gamma(f));
      const std::size_t m = g.meet(gam(c, x), gam(c, f));
      if (gam(c, c.covers().gamma(x)(f)) != m || composed != g[m]) return fail("e=", c.el(x), " f=", c.el(f));
    }
  }
  return std::nullopt;
}

Outcome excov_vi(Context& c) {
  const auto& g = c.gex();
  for (Element x = 0; x < c.n(); ++x) {
    const std::size_t comp = g.complement(gam(c, x));
    for (Element f = 0; f < c.n(); ++f) {
      const ExoMap composed = exo_meet(g[comp], c.covers().gamma(f));
      const std::size_t m = g.meet(comp, gam(c, f));
      if (gam(c, g[comp](f)) != m || composed != g[m]) return fail("e=", c.el(x), " f=", c.el(f));
    }
  }
  return std::nullopt;
}

Outcome excov_vii(Context& c) {
  for (Element x = 0; x < c.n(); ++x) {
    for (Element f = 0; f < c.n(); ++f) {
      if (!c.covers().in_theta(c.gex().meet(gam(c, x), gam(c, f)))) return fail("e=", c.el(x), " f=", c.el(f));
    }
  }
  return std::nullopt;
}

Outcome excov_viii(Context& c) {
  const auto& g = c.gex();
  for (Element x = 0; x < c.n(); ++x) {
    for (Element f = 0; f < c.n(); ++f) {
      if (!c.covers().in_theta(g.meet(g.complement(gam(c, x)), gam(c, f)))) return fail("e=", c.el(x), " f=", c.el(f));
    }
  }
  return std::nullopt;
}

Outcome theta_gba(Context& c) {
  const auto& t = c.covers().theta();
  return check_generalized_boolean(
      t.size(), [&](std::size_t a, std::size_t b) { return c.gex().leq(t[a], t[b]); }, [&](std::size_t a) { return c.pi(t[a]); });
}

Outcome hull_system(Context& c) {
  if (!is_hull_system(c.e(), c.covers().as_tables())) return fail("covers do not form a hull system");
  ElementSet invariant;
  for (Element x = 0; x < c.n(); ++x) {
    bool ok = true;
    for (Element f = 0; f < c.n() && ok; ++f) ok = c.e().meet(x, f) == Opt(c.covers().gamma(x)(f));
    if (ok) invariant.insert(x);
  }
  if (invariant != c.center()) return fail("gamma-invariant elements ", c.set(invariant), " != center");
  for (Element z : c.center()) {
    if (gam(c, z) != c.pi_index(z)) return fail("gamma_c != pi_c for c=", c.el(z));
  }
  return std::nullopt;
}

// GEX-orthogonal families are pairwise GEX-orthogonal, so pairs settle one
// direction; the other is checked on every pairwise gamma-disjoint set.
Outcome disjoint_gamma(Context& c) {
  const auto& g = c.gex();
  for (Element x = 0; x < c.n(); ++x) {
    for (Element f = 0; f < c.n(); ++f) {
      if (x != f && gex_orthogonal_pair(c, x, f) && g.meet(gam(c, x), gam(c, f)) != g.zero()) return fail("e=", c.el(x), " f=", c.el(f));
    }
  }
  for (const auto& f : gamma_orthogonal_sets(c.e(), c.covers(), c.e().all())) {
    if (!has_disjoint_assignment(c, f)) return fail("pairwise gamma-disjoint but not GEX-orthogonal: ", fam(c.e(), f));
  }
  return std::nullopt;
}

}  // namespace

void add_cover_laws(std::vector<LawEntry>& out) {
  out.push_back({"GammaexOrthogonal", "e, f are GEX-orthogonal iff E = S + S' with e in S and f in S'", gammaex_orthogonal});
  out.push_back({"co.i", "a finite family is pairwise GEX-orthogonal iff GEX-orthogonal, and then orthosum = sup", co_i});
  out.push_back({"co.ii", "a GEX-orthogonal family is orthogonal, orthosummable iff its sup exists, orthosum = sup", co_ii});
  out.push_back({"coce.i", "central c, d are GEX-orthogonal iff pi_c ^ pi_d = 0 iff c orthogonal to d iff c ^ d = 0", coce_i});
  out.push_back({"coce.ii", "a family of central elements is GEX-orthogonal iff orthogonal iff pairwise orthogonal iff pairwise disjoint", coce_ii});
  out.push_back({"COGPEA", "E satisfies CO1 and CO2", cogpea});
  out.push_back({"COGPEAp'wisedisj.i", "(e_i), (f_i), (e_i + f_i) are GEX-orthogonal and orthosummable", pwisedisj_i});
  out.push_back({"COGPEAp'wisedisj.ii", "their orthosums equal their suprema", pwisedisj_ii});
  out.push_back({"COGPEAp'wisedisj.iii", "(orthosum e_i) + (orthosum f_i) exists", pwisedisj_iii});
  out.push_back({"COGPEAp'wisedisj.iv", "(orthosum e_i) + (orthosum f_i) = orthosum (e_i + f_i) = sup (e_i + f_i)", pwisedisj_iv});
  out.push_back({"DisjSup", "pairwise disjoint pi_i have a join with (v pi_i)e = v pi_i e = orthosum pi_i e", disjsup});
  out.push_back({"completeboo", "GEX(E) is a complete Boolean algebra", completeboo});
  out.push_back({"arbp'wisesup.i", "(v pi_i)e = v pi_i e for every family", arb_sup});
  out.push_back({"arbp'wisesup.ii", "(^ pi_i)e = ^ pi_i e for every nonempty family", arb_inf});
  out.push_back({"arbCartProd", "pairwise disjoint pi_i give pi(E) isomorphic to the product of the pi_i(E), pi = v pi_i", arb_cart});
  out.push_back({"cop.i", "e_i <= p_i implies pi_i e_i = e_i and (e_i) is orthosummable", cop_i});
  out.push_back({"cop.ii", "pi_i (orthosum e_i) = e_i and pi_i p = p_i", cop_ii});
  out.push_back({"cop.iii", "e <= p implies pi_i e = e ^ p_i and v pi_i e = e", cop_iii});
  out.push_back({"cop.iv", "(e_i) -> orthosum e_i is a PEA isomorphism of the product of E[0,p_i] onto E[0,p]", cop_iv});
  out.push_back({"COGPEAcenter.i", "a nonempty family of central elements has a central inf with pi = ^ pi_{c_i}", cogpea_center_i});
  out.push_back({"COGPEAcenter.ii", "a bounded family of central elements has a central sup with pi = v pi_{c_i}", cogpea_center_ii});
  out.push_back({"largestandboo.i", "Gamma(E) has a largest element u and Gamma(E) is contained in pi_u(E) = E[0,u]", largest_i});
  out.push_back({"largestandboo.ii", "Gamma(E) is a complete Boolean algebra", largest_ii});
  out.push_back({"centerless.i", "E[0,u] is a summand with complement {f orthogonal to u} = {e - (u ^ e)}", centerless_i});
  out.push_back({"centerless.ii", "Gamma(E[0,u]) = Gamma(E), the complement is centerless with no nonzero PEA summand", centerless_ii});
  out.push_back({"centerless.iii", "E = H + K with H a PEA and K centerless forces H = E[0,u]", centerless_iii});
  out.push_back({"ExoCenCover", "gamma_e = ^{pi : pi e = e} is the smallest map fixing e", cover_meet});
  out.push_back({"ExCovProp.i", "gamma_0 = 0", excov_i});
  out.push_back({"ExCovProp.ii", "gamma_e e = e", excov_ii});
  out.push_back({"ExCovProp.iii", "e <= f implies gamma_e <= gamma_f", excov_iii});
  out.push_back({"ExCovProp.iv", "gamma_{e+f} = gamma_e v gamma_f", excov_iv});
  out.push_back({"ExCovProp.v", "gamma_{gamma_e f} = gamma_e o gamma_f = gamma_e ^ gamma_f", excov_v});
  out.push_back({"ExCovProp.vi", "gamma_{(gamma_e)'f} = (gamma_e)' o gamma_f = (gamma_e)' ^ gamma_f", excov_vi});
  out.push_back({"ExCovProp.vii", "gamma_e ^ gamma_f is a cover", excov_vii});
  out.push_back({"ExCovProp.viii", "(gamma_e)' ^ gamma_f is a cover", excov_viii});
  out.push_back({"ThetasbgammaGBA", "the set of covers is a generalized Boolean algebra", theta_gba});
  out.push_back({"gammahullsys", "the covers form a hull system whose invariant elements are the center, gamma_c = pi_c", hull_system});
  out.push_back({"disjointgammasbei", "a family is GEX-orthogonal iff its covers are pairwise disjoint", disjoint_gamma});
}

}  // namespace gpea::laws
