// Laws about central elements, the maps pi_c and restrictions of exocenter
// maps to summands and intervals.

#include <algorithm>

#include "gpea/axioms.hpp"
#include "gpea/construct.hpp"
#include "laws/context.hpp"

namespace gpea::laws {

namespace {

using Opt = std::optional<Element>;

ElementSet perp_set(const FiniteGpea& e, Element c) {
  ElementSet out;
  for (Element f = 0; f < e.size(); ++f) {
    if (e.perp(f, c)) out.insert(f);
  }
  return out;
}

Outcome centprop_i(Context& c) {
  const auto& e = c.e();
  for (Element z : c.center()) {
    for (Element a = 0; a < c.n(); ++a) {
      int found = 0;
      for (Element a1 : e.down(z)) {
        for (Element a2 = 0; a2 < c.n(); ++a2) {
          if (!e.defined(a2, z) || e.oplus(a1, a2) != Opt(a)) continue;
          ++found;
          if (!e.perp(a1, a2)) return fail("c=", c.el(z), " a=", c.el(a), ": coordinates not orthogonal");
        }
      }
      if (found != 1) return fail("c=", c.el(z), " a=", c.el(a), ": ", found, " coordinate pairs");
    }
  }
  return std::nullopt;
}

Outcome centprop_ii(Context& c) {
  const auto& e = c.e();
  for (Element z : c.center()) {
    for (Element a = 0; a < c.n(); ++a) {
      if (e.defined(a, z) != e.perp(a, z) || e.perp(a, z) != e.defined(z, a)) return fail("c=", c.el(z), " a=", c.el(a));
    }
  }
  return std::nullopt;
}

Outcome centprop_iii(Context& c) {
  const auto& e = c.e();
  const ElementSet gamma = c.center();
  for (Element x = 0; x < c.n(); ++x) {
    for (Element y = 0; y < c.n(); ++y) {
      if (e.defined(x, y) && (gamma.contains(x) || gamma.contains(y)) && !e.perp(x, y)) return fail("x=", c.el(x), " y=", c.el(y));
    }
  }
  return std::nullopt;
}

Outcome centr(Context& c) {
  const auto& e = c.e();
  const ElementSet gamma = c.center();
  for (Element z = 0; z < c.n(); ++z) {
    const ElementSet down = e.down(z);
    const bool summand = std::any_of(c.splits().begin(), c.splits().end(), [&](const auto& p) { return p.first == down; });
    const bool split = direct_sum_split(e, down, perp_set(e, z)).has_value();
    if (gamma.contains(z) != summand || summand != split) return fail("c=", c.el(z));
  }
  return std::nullopt;
}

Outcome pic(Context& c) {
  const auto& e = c.e();
  for (std::size_t i = 0; i < c.gex().size(); ++i) {
    const ElementSet img = c.map(i).image();
    const ElementSet comp = exo_complement(e, c.map(i)).image();
    Opt largest;
    for (Element z : img) {
      if (img.subset_of(e.down(z))) largest = z;
    }
    for (Element z = 0; z < c.n(); ++z) {
      const bool first = largest == Opt(z);
      const bool second = img == e.down(z);
      const bool third = c.center().contains(z) && c.pi_index(z) == i && comp == perp_set(e, z);
      if (first != second || second != third) return fail(c.pi(i), " c=", c.el(z));
    }
  }
  return std::nullopt;
}

Outcome ceprop_i(Context& c) {
  for (Element z : c.center()) {
    const ExoMap& p = c.map(c.pi_index(z));
    for (Element x = 0; x < c.n(); ++x) {
      if (c.e().meet(x, z) != Opt(p(x))) return fail("c=", c.el(z), " e=", c.el(x));
    }
  }
  return std::nullopt;
}

Outcome ceprop_ii(Context& c) {
  for (Element z : c.center()) {
    for (Element d : c.center()) {
      const Element a = c.map(c.pi_index(z))(d);
      const Element b = c.map(c.pi_index(d))(z);
      if (a != b || c.e().meet(z, d) != Opt(a)) return fail("c=", c.el(z), " d=", c.el(d));
    }
  }
  return std::nullopt;
}

Outcome ceprop_iii(Context& c) {
  const auto& e = c.e();
  for (Element z : c.center()) {
    const ElementSet comp = exo_complement(e, c.map(c.pi_index(z))).image();
    for (Element x = 0; x < c.n(); ++x) {
      const bool a = e.meet(x, z) == Opt(0);
      if (a != comp.contains(x) || a != e.perp(x, z)) return fail("c=", c.el(z), " e=", c.el(x));
    }
  }
  return std::nullopt;
}

Outcome ceprop_iv(Context& c) {
  const auto& g = c.gex();
  for (Element z : c.center()) {
    for (Element d : c.center()) {
      const Opt m = c.e().meet(z, d);
      if (!m || !c.center().contains(*m)) return fail("c ^ d not central: c=", c.el(z), " d=", c.el(d));
      if (c.pi_index(*m) != g.meet(c.pi_index(z), c.pi_index(d))) return fail("pi_{c^d}: c=", c.el(z), " d=", c.el(d));
    }
  }
  return std::nullopt;
}

Outcome ceprop_v(Context& c) {
  const auto& g = c.gex();
  for (Element z : c.center()) {
    for (Element d : c.center()) {
      const bool a = c.e().meet(z, d) == Opt(0);
      const bool b = g.meet(c.pi_index(z), c.pi_index(d)) == g.zero();
      if (a != b || b != c.e().perp(z, d)) return fail("c=", c.el(z), " d=", c.el(d));
    }
  }
  return std::nullopt;
}

Outcome ceprop_vi(Context& c) {
  const auto& g = c.gex();
  for (Element z : c.center()) {
    for (Element d : c.center()) {
      if (!c.e().perp(z, d)) continue;
      const Element s = *c.e().oplus(z, d);
      if (c.e().join(z, d) != Opt(s) || !c.center().contains(s)) return fail("c+d: c=", c.el(z), " d=", c.el(d));
      if (c.pi_index(s) != g.join(c.pi_index(z), c.pi_index(d))) return fail("pi_{c+d}: c=", c.el(z), " d=", c.el(d));
    }
  }
  return std::nullopt;
}

Outcome ceprop_vii(Context& c) {
  const auto& g = c.gex();
  for (Element z : c.center()) {
    const std::size_t p = c.pi_index(z);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i](z) == z && !g.leq(p, i)) return fail("c=", c.el(z), " fixed by smaller-or-incomparable ", c.pi(i));
    }
  }
  return std::nullopt;
}

// Read with the map existentially quantified: h is central iff some pi in
// GEX(E) acts as e -> e ^ h, and then pi = pi_h.
Outcome ceprop_viii(Context& c) {
  const auto& g = c.gex();
  for (Element h = 0; h < c.n(); ++h) {
    std::optional<std::size_t> acting;
    for (std::size_t i = 0; i < g.size(); ++i) {
      bool ok = true;
      for (Element x = 0; x < c.n() && ok; ++x) ok = c.e().meet(x, h) == Opt(g[i](x));
      if (!ok) continue;
      if (acting) return fail("two maps act as meet with ", c.el(h));
      acting = i;
    }
    if (acting.has_value() != c.center().contains(h)) return fail("h=", c.el(h));
    if (acting && *acting != c.pi_index(h)) return fail("map acting as meet with ", c.el(h), " is not pi_h");
  }
  return std::nullopt;
}

Outcome ceprop_ix(Context& c) {
  for (Element z : c.center()) {
    for (Element d : c.center()) {
      if (c.e().leq(z, d) != c.gex().leq(c.pi_index(z), c.pi_index(d))) return fail("c=", c.el(z), " d=", c.el(d));
    }
  }
  return std::nullopt;
}

Outcome ceprop_x(Context& c) {
  const auto& g = c.gex();
  for (Element d : c.center()) {
    for (Element z : c.center()) {
      if (!c.e().leq(z, d)) continue;
      const Opt r = c.e().ominus(d, z);
      if (!r || !c.center().contains(*r)) return fail("d-c: c=", c.el(z), " d=", c.el(d));
      if (c.pi_index(*r) != g.meet(c.pi_index(d), g.complement(c.pi_index(z)))) return fail("pi_{d-c}: c=", c.el(z), " d=", c.el(d));
    }
  }
  return std::nullopt;
}

Outcome ceprop_xi(Context& c) {
  const auto& g = c.gex();
  for (Element z : c.center()) {
    for (Element d : c.center()) {
      const Opt j = c.e().join(z, d);
      if (!j || !c.center().contains(*j)) return fail("c v d: c=", c.el(z), " d=", c.el(d));
      if (c.pi_index(*j) != g.join(c.pi_index(z), c.pi_index(d))) return fail("pi_{c v d}: c=", c.el(z), " d=", c.el(d));
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> pi_c_indices(Context& c) {
  std::vector<std::size_t> out;
  for (Element z : c.center()) out.push_back(c.pi_index(z));
  return out;
}

Outcome centgea_i(Context& c) {
  const auto& g = c.gex();
  const auto p = pi_c_indices(c);
  auto in = [&](std::size_t i) { return std::find(p.begin(), p.end(), i) != p.end(); };
  for (std::size_t a : p) {
    for (std::size_t b : p) {
      if (!in(g.meet(a, b)) || !in(g.join(a, b))) return fail("not a sublattice at ", c.pi(a), ", ", c.pi(b));
    }
  }
  return check_generalized_boolean(
      p.size(), [&](std::size_t a, std::size_t b) { return g.leq(p[a], p[b]); }, [&](std::size_t a) { return c.pi(p[a]); });
}

Outcome centgea_ii(Context& c) {
  const auto& e = c.e();
  const ElementSet gamma = c.center();
  for (Element a : gamma) {
    for (Element b : gamma) {
      const Opt s = e.oplus(a, b);
      if (s && (!gamma.contains(*s) || !e.perp(a, b))) return fail("sum of central ", c.el(a), ", ", c.el(b));
      const Opt m = e.meet(a, b);
      const Opt j = e.join(a, b);
      if (!m || !j || !gamma.contains(*m) || !gamma.contains(*j)) return fail("no central meet or join for ", c.el(a), ", ", c.el(b));
    }
  }
  try {
    const FiniteGpea sub = restrict_to(e, gamma);
    if (!is_commutative(sub)) return fail("center is not commutative");
  } catch (const InvalidModel& ex) {
    return fail("center is not a sub-GPEA: ", ex.what());
  }
  return std::nullopt;
}

Outcome centgea_iii(Context& c) {
  const auto& g = c.gex();
  const auto gamma = c.center().elements();
  for (Element a : gamma) {
    for (Element b : gamma) {
      if (a != b && c.pi_index(a) == c.pi_index(b)) return fail("not injective at ", c.el(a), ", ", c.el(b));
      if (c.pi_index(*c.e().meet(a, b)) != g.meet(c.pi_index(a), c.pi_index(b)) ||
          c.pi_index(*c.e().join(a, b)) != g.join(c.pi_index(a), c.pi_index(b))) {
        return fail("lattice operations not preserved at ", c.el(a), ", ", c.el(b));
      }
    }
  }
  return std::nullopt;
}

Outcome centgea_iv(Context& c) {
  const auto gamma = c.center().elements();
  return check_generalized_boolean(
      gamma.size(), [&](std::size_t a, std::size_t b) { return c.e().leq(gamma[a], gamma[b]); },
      [&](std::size_t a) { return c.el(gamma[a]); });
}

Outcome centgea_v(Context& c) {
  const bool all = pi_c_indices(c).size() == c.gex().size();
  if (c.e().top().has_value() != all) return fail("PEA: ", c.e().top().has_value(), ", every map is some pi_c: ", all);
  return std::nullopt;
}

// xi restricted to pi(E), in the identifiers of the submodel.
std::optional<std::vector<Element>> restrict_map(const ExoMap& xi, const Sub& s) {
  std::vector<Element> out;
  for (Element old : s.old_id) {
    const auto v = s.new_id[xi(old)];
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  return out;
}

Outcome mis_i(Context& c) {
  const auto& g = c.gex();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Sub s = submodel(c.e(), g[i].image());
    for (std::size_t j = 0; j < g.size(); ++j) {
      const auto r = restrict_map(g[j], s);
      if (!r || !is_exomap(s.model, *r)) return fail(c.pi(j), " restricted to ", c.pi(i), "(E)");
    }
  }
  return std::nullopt;
}

Outcome mis_ii(Context& c) {
  const auto& g = c.gex();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Sub s = submodel(c.e(), g[i].image());
    for (const ExoMap& tau : exocenter(s.model)) {
      std::vector<Element> lifted(c.n());
      for (Element x = 0; x < c.n(); ++x) lifted[x] = s.old_id[tau(*s.new_id[g[i](x)])];
      if (!is_exomap(c.e(), lifted)) return fail("tau o ", c.pi(i), " is not in GEX(E)");
    }
  }
  return std::nullopt;
}

Outcome mis_iii(Context& c) {
  const auto& g = c.gex();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Sub s = submodel(c.e(), g[i].image());
    const Exocenter local(s.model);
    std::vector<std::size_t> h(g.size());
    std::vector<bool> hit(local.size(), false);
    for (std::size_t j = 0; j < g.size(); ++j) {
      const auto r = restrict_map(g[j], s);
      const auto k = r ? local.find(ExoMap(*r)) : std::nullopt;
      if (!k) return fail(c.pi(j), " restricted to ", c.pi(i), "(E) is not in its exocenter");
      h[j] = *k;
      hit[*k] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) return fail("restriction to ", c.pi(i), "(E) is not onto");
    for (std::size_t a = 0; a < g.size(); ++a) {
      if (h[g.complement(a)] != local.complement(h[a])) return fail("complement of ", c.pi(a), " on ", c.pi(i), "(E)");
      for (std::size_t b = 0; b < g.size(); ++b) {
        if (h[g.meet(a, b)] != local.meet(h[a], h[b]) || h[g.join(a, b)] != local.join(h[a], h[b])) {
          return fail("meet/join of ", c.pi(a), ", ", c.pi(b), " on ", c.pi(i), "(E)");
        }
      }
    }
  }
  return std::nullopt;
}

Outcome mis_iv(Context& c) {
  const auto& g = c.gex();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Sub s = submodel(c.e(), g[i].image());
    for (Element p : g[i].image()) {
      const Element q = *s.new_id[p];
      ElementSet mapped;
      for (Element x : s.model.down(q)) mapped.insert(s.old_id[x]);
      if (mapped != c.e().down(p)) return fail(c.pi(i), " p=", c.el(p), ": intervals differ as sets");
      if (!(restrict_to(s.model, s.model.down(q)).table() == restrict_to(c.e(), c.e().down(p)).table())) {
        return fail(c.pi(i), " p=", c.el(p), ": intervals differ as PEAs");
      }
    }
  }
  return std::nullopt;
}

Outcome mis_v(Context& c) {
  const auto& g = c.gex();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Sub s = submodel(c.e(), g[i].image());
    for (Element p = 0; p < c.n(); ++p) {
      ElementSet image;
      for (Element x : c.e().down(p)) image.insert(g[i](x));
      ElementSet local;
      for (Element x : s.model.down(*s.new_id[g[i](p)])) local.insert(s.old_id[x]);
      if (image != c.e().down(g[i](p)) || local != image) return fail(c.pi(i), " p=", c.el(p));
    }
  }
  return std::nullopt;
}

Outcome mis_vi(Context& c) {
  const auto& g = c.gex();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Sub s = submodel(c.e(), g[i].image());
    ElementSet local;
    for (Element x : central_elements(s.model)) local.insert(s.old_id[x]);
    if (local != (c.center() & g[i].image())) return fail(c.pi(i), ": center of the summand is ", c.set(local));
  }
  return std::nullopt;
}

Outcome nova(Context& c) {
  const auto& g = c.gex();
  for (Element k = 0; k < c.n(); ++k) {
    const Sub s = submodel(c.e(), c.e().down(k));
    for (std::size_t i = 0; i < g.size(); ++i) {
      const auto r = restrict_map(g[i], s);
      if (!r || !is_exomap(s.model, *r)) return fail(c.pi(i), " restricted to E[0,", c.el(k), "]");
    }
  }
  return std::nullopt;
}

}  // namespace

void add_center_laws(std::vector<LawEntry>& out) {
  out.push_back({"CentProp.i", "the coordinates a = a1 + a2 of C1 are unique and orthogonal", centprop_i});
  out.push_back({"CentProp.ii", "for central c: a+c exists iff a is orthogonal to c iff c+a exists", centprop_ii});
  out.push_back({"CentProp.iii", "x+y with x or y central implies x orthogonal to y", centprop_iii});
  out.push_back({"centr", "c is central iff E[0,c] is a central ideal iff E = E[0,c] + {f orthogonal to c}", centr});
  out.push_back({"pic", "pi(E) has a largest element c iff pi(E) = E[0,c] iff c is central, pi = pi_c, pi'(E) = {f orthogonal to c}", pic});
  out.push_back({"ceprop.i", "pi_c e = e ^ c", ceprop_i});
  out.push_back({"ceprop.ii", "pi_c d = pi_d c = c ^ d", ceprop_ii});
  out.push_back({"ceprop.iii", "e ^ c = 0 iff e in pi_c'(E) iff e orthogonal to c", ceprop_iii});
  out.push_back({"ceprop.iv", "c ^ d is central and pi_{c^d} = pi_c ^ pi_d", ceprop_iv});
  out.push_back({"ceprop.v", "c ^ d = 0 iff pi_c ^ pi_d = 0 iff c orthogonal to d", ceprop_v});
  out.push_back({"ceprop.vi", "c orthogonal to d implies c+d = c v d is central and pi_{c+d} = pi_c v pi_d", ceprop_vi});
  out.push_back({"ceprop.vii", "pi_c is the smallest map fixing c", ceprop_vii});
  out.push_back({"ceprop.viii", "h is central iff some pi acts as e -> e ^ h, and then pi = pi_h", ceprop_viii});
  out.push_back({"ceprop.ix", "c <= d iff pi_c <= pi_d", ceprop_ix});
  out.push_back({"ceprop.x", "c <= d implies d-c exists, is central and pi_{d-c} = pi_d ^ pi_c'", ceprop_x});
  out.push_back({"ceprop.xi", "c v d exists, is central and pi_{c v d} = pi_c v pi_d", ceprop_xi});
  out.push_back({"centgea.i", "{pi_c} is a sublattice of GEX(E) and a generalized Boolean algebra", centgea_i});
  out.push_back({"centgea.ii", "Gamma(E) is a commutative lattice-ordered sub-GPEA", centgea_ii});
  out.push_back({"centgea.iii", "c -> pi_c is a lattice isomorphism", centgea_iii});
  out.push_back({"centgea.iv", "Gamma(E) is a generalized Boolean algebra", centgea_iv});
  out.push_back({"centgea.v", "E is a PEA iff every exocenter map is some pi_c", centgea_v});
  out.push_back({"mis.i", "xi restricted to pi(E) is in GEX(pi(E))", mis_i});
  out.push_back({"mis.ii", "tau in GEX(pi(E)) gives tau o pi in GEX(E)", mis_ii});
  out.push_back({"mis.iii", "restriction to pi(E) is a surjective Boolean homomorphism", mis_iii});
  out.push_back({"mis.iv", "for p in pi(E), pi(E)[0,p] and E[0,p] coincide as sets and as PEAs", mis_iv});
  out.push_back({"mis.v", "pi(E[0,p]) = E[0,pi p] = pi(E)[0,pi p]", mis_v});
  out.push_back({"mis.vi", "Gamma(pi(E)) = Gamma(E) meet pi(E)", mis_vi});
  out.push_back({"nova", "pi restricted to E[0,k] is in GEX(E[0,k])", nova});
}

}  // namespace gpea::laws
