// Laws about closures, type-determining sets, type predicates and the type
// decompositions.

#include <algorithm>

#include "gpea/axioms.hpp"
#include "gpea/construct.hpp"
#include "laws/context.hpp"

namespace gpea::laws {

namespace {

using Opt = std::optional<Element>;

ElementSet image_of(Context& c, std::size_t i) { return c.map(i).image(); }

bool gamma_orthogonal(Context& c, const std::vector<Element>& f) {
  const auto& g = c.gex();
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (g.meet(c.covers().gamma_index(f[i]), c.covers().gamma_index(f[j])) != g.zero()) return false;
    }
  }
  return true;
}

ElementSet members(const std::vector<Element>& f) {
  ElementSet s;
  for (Element x : f) s.insert(x);
  return s;
}

/// Type predicates straight from their definitions.
struct DefFlags {
  std::vector<bool> type_k;   // pi = gamma_k for some k in K-tilde
  std::vector<bool> locally;  // pi = gamma_k for some k in K
  std::vector<bool> purely;   // pi ^ gamma_K = 0
  std::vector<bool> properly; // pi ^ gamma_K~ = 0
};

DefFlags def_flags(Context& c, const TdContext& t) {
  const auto& g = c.gex();
  DefFlags d;
  d.type_k.assign(g.size(), false);
  d.locally.assign(g.size(), false);
  d.purely.assign(g.size(), false);
  d.properly.assign(g.size(), false);
  for (Element k : t.k) d.locally[c.covers().gamma_index(k)] = true;
  for (Element k : t.k_tilde) d.type_k[c.covers().gamma_index(k)] = true;
  for (std::size_t i = 0; i < g.size(); ++i) {
    d.purely[i] = g.meet(i, t.gamma_k) == g.zero();
    d.properly[i] = g.meet(i, t.gamma_k_tilde) == g.zero();
  }
  return d;
}

std::vector<std::size_t> covers_of(Context& c, ElementSet s) {
  std::vector<std::size_t> out;
  for (Element x : s) out.push_back(c.covers().gamma_index(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string td_name(Context& c, std::size_t i) { return "K=" + c.td_sets()[i].name; }

// Calls visit(i, t) for every listed TD set.
template <typename Visit>
Outcome for_each_td(Context& c, Visit&& visit) {
  for (std::size_t i = 0; i < c.td_sets().size(); ++i) {
    if (auto o = visit(i, c.td(i))) return fail(td_name(c, i), ": ", *o);
  }
  return std::nullopt;
}

// ---- closures -------------------------------------------------------------

// Monotonicity over all pairs P subset Q follows from the pairs (Q - {x}, Q)
// when every subset is visited.
Outcome fourclosures(Context& c) {
  const auto& e = c.e();
  const auto all_sets = gamma_orthogonal_sets(e, c.covers(), e.all());
  using Op = ElementSet (*)(Context&, ElementSet);
  const std::pair<const char*, Op> ops[] = {
      {"[.]_gamma", [](Context& x, ElementSet q) { return closure_gamma(x.e(), x.covers(), q); }},
      {".^gamma", [](Context& x, ElementSet q) { return gamma_image(x.covers(), q); }},
      {".down", [](Context& x, ElementSet q) { return downset(x.e(), q); }},
      {".''", [](Context& x, ElementSet q) { return double_complement(x.e(), q); }},
  };
  for (ElementSet q : c.q_sample()) {
    const ElementSet p1 = disjoint_complement(e, q);
    if (!q.subset_of(double_complement(e, q))) return fail("Q not in Q'' for Q=", c.set(q));
    if (disjoint_complement(e, disjoint_complement(e, p1)) != p1) return fail("Q' != Q''' for Q=", c.set(q));
    for (Element x : q) {
      ElementSet p = q;
      p.erase(x);
      if (!p1.subset_of(disjoint_complement(e, p))) return fail("Q' not in P' for P=", c.set(p), " Q=", c.set(q));
    }
    for (const auto& [name, op] : ops) {
      const ElementSet cl = op(c, q);
      if (!q.subset_of(cl) && !q.empty()) return fail(name, " not extensive at ", c.set(q));
      if (op(c, cl) != cl) return fail(name, " not idempotent at ", c.set(q));
      for (Element x : q) {
        ElementSet p = q;
        p.erase(x);
        if (!op(c, p).subset_of(cl)) return fail(name, " not monotone at ", c.set(p), " in ", c.set(q));
      }
    }
    ElementSet sums{0};
    for (const auto& f : all_sets) {
      if (!members(f).subset_of(q)) continue;
      const Opt s = e.orthosum(f);
      if (!s) return fail("gamma-orthogonal family ", fam(e, f), " has no orthosum");
      sums.insert(*s);
    }
    if (sums != closure_gamma(e, c.covers(), q)) {
      return fail("[", c.set(q), "]_gamma: families give ", c.set(sums), ", fixpoint gives ",
                  c.set(closure_gamma(e, c.covers(), q)));
    }
  }
  return std::nullopt;
}

Outcome qk_i(Context& c) {
  const auto& e = c.e();
  const auto all_sets = gamma_orthogonal_sets(e, c.covers(), e.all());
  for (ElementSet q : c.q_sample()) {
    const ElementSet below = downset(e, q);
    ElementSet reached{0};
    for (const auto& f : all_sets) {
      if (!members(f).subset_of(q)) continue;
      const Opt s = e.orthosum(f);
      if (!s || sup_of(e, f) != s) return fail("Q=", c.set(q), " family ", fam(e, f), " orthosum != sup");
      reached.insert(*s);
      for (Element x : e.down(*s)) {
        std::vector<Element> parts;
        for (Element qi : f) {
          const Opt m = e.meet(x, qi);
          if (!m) return fail("no meet of ", c.el(x), " and ", c.el(qi));
          if (!below.contains(*m)) return fail(c.el(*m), " not in Q down");
          if (*m != 0) parts.push_back(*m);
        }
        if (!gamma_orthogonal(c, parts)) return fail("meets of ", c.el(x), " with ", fam(e, f), " not gamma-orthogonal");
        const Opt s2 = parts.empty() ? Opt(0) : e.orthosum(parts);
        const Opt j = parts.empty() ? Opt(0) : sup_of(e, parts);
        if (s2 != Opt(x) || j != Opt(x)) return fail(c.el(x), " != orthosum of its meets with ", fam(e, f));
      }
    }
    if (reached != closure_gamma(e, c.covers(), q)) return fail("Q=", c.set(q), " some member of [Q]_gamma has no family");
  }
  return std::nullopt;
}

// Minimality is checked against every TD (STD) subset when all of them are
// known, otherwise against the listed TD sets.
Outcome qk_generated(Context& c, bool strong) {
  const auto& e = c.e();
  std::vector<ElementSet> pool = c.all_td_subsets();
  if (c.n() > Context::kExhaustiveQ) {
    c.mark_sampled();
    for (const auto& t : c.td_sets()) pool.push_back(t.set);
  }
  for (ElementSet k : c.q_sample()) {
    const ElementSet t = strong ? std_generated(e, c.covers(), k) : td_generated(e, c.covers(), k);
    const ElementSet formula = strong ? closure_gamma(e, c.covers(), downset(e, k))
                                      : closure_gamma(e, c.covers(), gamma_image(c.covers(), k));
    if (t != formula) return fail("generated set != closure formula for K=", c.set(k));
    if (!k.subset_of(t)) return fail("K=", c.set(k), " not contained in ", c.set(t));
    if (strong ? !is_std(e, c.covers(), t) : !is_td(e, c.covers(), t)) return fail(c.set(t), " is not of the right kind");
    for (ElementSet s : pool) {
      if (strong && !is_std(e, c.covers(), s)) continue;
      if (k.subset_of(s) && !t.subset_of(s)) return fail(c.set(s), " contains K=", c.set(k), " but not ", c.set(t));
    }
  }
  return std::nullopt;
}

Outcome qk_ii(Context& c) { return qk_generated(c, false); }

// STD sets are TD, so the TD pool holds every STD set.
Outcome qk_iii(Context& c) {
  for (ElementSet s : c.q_sample()) {
    if (is_std(c.e(), c.covers(), s) && !is_td(c.e(), c.covers(), s)) return fail(c.set(s), " is STD but not TD");
  }
  return qk_generated(c, true);
}

Outcome qk_iv(Context& c) {
  const auto& e = c.e();
  for (ElementSet k : c.q_sample()) {
    const ElementSet p = disjoint_complement(e, k);
    if (downset(e, p) != p) return fail("K' not down-closed for K=", c.set(k));
    if (disjoint_complement(e, downset(e, k)) != p) return fail("(K down)' != K' for K=", c.set(k));
    if (!is_std(e, c.covers(), p)) return fail("K' not STD for K=", c.set(k));
  }
  return std::nullopt;
}

Outcome qk_v(Context& c) {
  const auto& e = c.e();
  for (ElementSet k : c.q_sample()) {
    const ElementSet p = disjoint_complement(e, k);
    if (disjoint_complement(e, td_generated(e, c.covers(), k)) != p) return fail("([K^g]_g)' != K' for K=", c.set(k));
    if (disjoint_complement(e, std_generated(e, c.covers(), k)) != p) return fail("([K down]_g)' != K' for K=", c.set(k));
  }
  return std::nullopt;
}

Outcome qk_atoms(Context& c) {
  const auto& e = c.e();
  const ElementSet a = e.atoms();
  ElementSet no_atom, atomic;
  for (Element p = 0; p < c.n(); ++p) {
    if (!e.down(p).intersects(a)) no_atom.insert(p);
    bool ok = true;
    for (Element x : e.down(p)) ok = ok && (x == 0 || e.down(x).intersects(a));
    if (ok) atomic.insert(p);
  }
  const ElementSet a1 = disjoint_complement(e, a);
  const ElementSet a2 = double_complement(e, a);
  if (a1 != no_atom) return fail("A' = ", c.set(a1), " but elements over no atom are ", c.set(no_atom));
  if (a2 != atomic) return fail("A'' = ", c.set(a2), " but atomic intervals are ", c.set(atomic));
  if (!is_std(e, c.covers(), a1) || !is_std(e, c.covers(), a2)) return fail("A' or A'' not STD");
  return std::nullopt;
}

Outcome centr_td(Context& c) {
  const ElementSet z = c.center();
  if (!is_td(c.e(), c.covers(), z)) return fail("Gamma(E)=", c.set(z), " is not TD");
  return std::nullopt;
}

Outcome type_class(Context& c) {
  const auto& e = c.e();
  const std::pair<const char*, PeaPredicate> classes[] = {
      {"commutative", is_commutative},
      {"boolean", is_boolean_lattice},
      {"any", [](const FiniteGpea&) { return true; }},
  };
  for (const auto& [name, pred] : classes) {
    const ElementSet k = tdset_from_pea_class(e, pred);
    if (!is_td(e, c.covers(), k)) return fail(name, " class gives non-TD ", c.set(k));
    if (!is_std(e, c.covers(), k)) return fail(name, " class gives non-STD ", c.set(k));
  }
  if (tdset_from_pea_class(e, classes[2].second) != e.all()) return fail("class of all PEAs does not give E");
  return std::nullopt;
}

// ---- k*, gamma_K ---------------------------------------------------------

Outcome kstar_one(Context& c, ElementSet k, Element star, std::size_t gk) {
  const auto& e = c.e();
  const auto& g = c.gex();
  if (!k.contains(star)) return fail("k*=", c.el(star), " not in K");
  if (c.covers().gamma_index(star) != gk) return fail("gamma_k* != gamma_K");
  const auto from_k = covers_of(c, k);
  const auto below_star = covers_of(c, e.down(star));
  std::vector<std::size_t> interval;
  for (std::size_t t : c.covers().theta()) {
    if (g.leq(t, gk)) interval.push_back(t);
  }
  if (from_k != below_star || from_k != interval) return fail("{gamma_k}, {gamma_e : e <= k*}, Theta[0,gamma_k*] differ");
  for (std::size_t t : from_k) {
    if (!g.leq(t, gk)) return fail(c.pi(t), " above gamma_k*");
  }
  for (std::size_t a : interval) {
    for (std::size_t b : interval) {
      if (!std::binary_search(interval.begin(), interval.end(), g.meet(a, b)) ||
          !std::binary_search(interval.begin(), interval.end(), g.join(a, b))) {
        return fail("Theta[0,gamma_k*] not a sublattice at ", c.pi(a), ", ", c.pi(b));
      }
    }
  }
  auto o = check_generalized_boolean(
      interval.size(), [&](std::size_t a, std::size_t b) { return g.leq(interval[a], interval[b]); },
      [&](std::size_t a) { return c.pi(interval[a]); });
  if (o) return fail("Theta[0,gamma_k*]: ", *o);
  // Every maximal gamma-orthogonal family in K reaches the same cover.
  const auto fams = gamma_orthogonal_sets(e, c.covers(), k - ElementSet{0});
  for (const auto& f : fams) {
    bool maximal = true;
    for (Element x : k) {
      if (x == 0 || members(f).contains(x)) continue;
      auto g2 = f;
      g2.push_back(x);
      if (gamma_orthogonal(c, g2)) maximal = false;
    }
    if (!maximal) continue;
    const Opt s = e.orthosum(f);
    if (!s || !k.contains(*s) || c.covers().gamma_index(*s) != gk) return fail("maximal family ", fam(e, f), " misses gamma_K");
  }
  return std::nullopt;
}

Outcome kstar(Context& c) {
  return for_each_td(c, [&](std::size_t, const TdContext& t) -> Outcome {
    if (!is_td(c.e(), c.covers(), t.k_tilde)) return fail("K~ not TD");
    if (t.k_tilde != (t.k & c.center())) return fail("K~ != K ^ Gamma(E)");
    if (auto o = kstar_one(c, t.k, t.k_star, t.gamma_k)) return o;
    if (auto o = kstar_one(c, t.k_tilde, t.k_tilde_star, t.gamma_k_tilde)) return fail("K~: ", *o);
    return std::nullopt;
  });
}

Outcome gammasbk_i(Context& c) {
  return for_each_td(c, [&](std::size_t, const TdContext& t) -> Outcome {
    if (!c.gex().leq(t.gamma_k_tilde, t.gamma_k)) return fail("gamma_K~ not below gamma_K");
    if (!c.covers().in_theta(t.gamma_k)) return fail("gamma_K not a cover");
    return std::nullopt;
  });
}

Outcome gammasbk_join(Context& c, bool tilde) {
  return for_each_td(c, [&](std::size_t, const TdContext& t) -> Outcome {
    const auto f = covers_of(c, tilde ? t.k_tilde : t.k);
    const std::size_t want = tilde ? t.gamma_k_tilde : t.gamma_k;
    if (join_all(c.gex(), f) != want) return fail("join of covers = ", c.pi(join_all(c.gex(), f)));
    return std::nullopt;
  });
}

Outcome gammasbk_smallest(Context& c, bool tilde) {
  return for_each_td(c, [&](std::size_t, const TdContext& t) -> Outcome {
    const ElementSet k = tilde ? t.k_tilde : t.k;
    const std::size_t want = tilde ? t.gamma_k_tilde : t.gamma_k;
    if (!k.subset_of(image_of(c, want))) return fail("K not fixed by ", c.pi(want));
    for (std::size_t p = 0; p < c.gex().size(); ++p) {
      if (tilde && !c.covers().in_theta(p)) continue;
      if (k.subset_of(image_of(c, p)) && !c.gex().leq(want, p)) return fail(c.pi(p), " fixes K but is not above");
    }
    return std::nullopt;
  });
}

Outcome gammasbk_ii(Context& c) { return gammasbk_join(c, false); }
Outcome gammasbk_iii(Context& c) { return gammasbk_smallest(c, false); }
Outcome gammasbk_iv(Context& c) { return gammasbk_join(c, true); }
Outcome gammasbk_v(Context& c) { return gammasbk_smallest(c, true); }

// ---- type predicates -------------------------------------------------------

template <typename Check>
Outcome for_each_flags(Context& c, Check&& check) {
  return for_each_td(c, [&](std::size_t, const TdContext& t) { return check(t, def_flags(c, t)); });
}

Outcome rm_type_1(Context& c) {
  return for_each_flags(c, [&](const TdContext&, const DefFlags& d) -> Outcome {
    for (std::size_t p = 0; p < c.gex().size(); ++p) {
      if (d.type_k[p] && !d.locally[p]) return fail(c.pi(p));
    }
    return std::nullopt;
  });
}

Outcome rm_type_2(Context& c) {
  return for_each_flags(c, [&](const TdContext&, const DefFlags& d) -> Outcome {
    for (std::size_t p = 0; p < c.gex().size(); ++p) {
      if (d.purely[p] && !d.properly[p]) return fail(c.pi(p));
    }
    return std::nullopt;
  });
}

Outcome rm_type_3(Context& c) {
  return for_each_flags(c, [&](const TdContext&, const DefFlags& d) -> Outcome {
    for (std::size_t p = 0; p < c.gex().size(); ++p) {
      if (d.type_k[p] && d.properly[p] && p != c.gex().zero()) return fail(c.pi(p));
    }
    return std::nullopt;
  });
}

Outcome rm_type_4(Context& c) {
  return for_each_flags(c, [&](const TdContext&, const DefFlags& d) -> Outcome {
    for (std::size_t p = 0; p < c.gex().size(); ++p) {
      if (d.locally[p] && d.purely[p] && p != c.gex().zero()) return fail(c.pi(p));
    }
    return std::nullopt;
  });
}

Outcome rm_type_5(Context& c) {
  return for_each_flags(c, [&](const TdContext&, const DefFlags& d) -> Outcome {
    for (std::size_t p = 0; p < c.gex().size(); ++p) {
      for (std::size_t x : c.covers().theta()) {
        const std::size_t m = c.gex().meet(p, x);
        if ((d.type_k[p] && !d.type_k[m]) || (d.locally[p] && !d.locally[m])) return fail(c.pi(p), " ^ ", c.pi(x));
      }
    }
    return std::nullopt;
  });
}

Outcome rm_type_6(Context& c) {
  return for_each_flags(c, [&](const TdContext&, const DefFlags& d) -> Outcome {
    for (std::size_t p = 0; p < c.gex().size(); ++p) {
      for (std::size_t x = 0; x < c.gex().size(); ++x) {
        const std::size_t m = c.gex().meet(p, x);
        if ((d.purely[p] && !d.purely[m]) || (d.properly[p] && !d.properly[m])) return fail(c.pi(p), " ^ ", c.pi(x));
      }
    }
    return std::nullopt;
  });
}

Outcome rm_type_7(Context& c) {
  return for_each_flags(c, [&](const TdContext&, const DefFlags& d) -> Outcome {
    for (std::size_t p = 0; p < c.gex().size(); ++p) {
      for (std::size_t x = 0; x < c.gex().size(); ++x) {
        const std::size_t j = c.gex().join(p, x);
        for (const auto* f : {&d.type_k, &d.locally, &d.purely, &d.properly}) {
          if ((*f)[p] && (*f)[x] && !(*f)[j]) return fail(c.pi(p), " v ", c.pi(x));
        }
      }
    }
    return std::nullopt;
  });
}

Outcome type_i(Context& c) {
  return for_each_flags(c, [&](const TdContext& t, const DefFlags& d) -> Outcome {
    for (std::size_t p = 0; p < c.gex().size(); ++p) {
      const bool thm = c.covers().in_theta(p) && c.gex().leq(p, t.gamma_k_tilde);
      if (d.type_k[p] != thm || classify(c.covers(), t, p).type_k != d.type_k[p]) return fail(c.pi(p));
    }
    return std::nullopt;
  });
}

Outcome type_ii(Context& c) {
  return for_each_flags(c, [&](const TdContext& t, const DefFlags& d) -> Outcome {
    if (!is_std(c.e(), c.covers(), t.k)) return std::nullopt;
    for (std::size_t p = 0; p < c.gex().size(); ++p) {
      if (d.type_k[p] && !image_of(c, p).subset_of(t.k)) return fail(c.pi(p), " leaves K");
    }
    return std::nullopt;
  });
}

Outcome type_iii(Context& c) {
  return for_each_flags(c, [&](const TdContext& t, const DefFlags& d) -> Outcome {
    for (std::size_t p = 0; p < c.gex().size(); ++p) {
      const bool thm = c.covers().in_theta(p) && c.gex().leq(p, t.gamma_k);
      if (d.locally[p] != thm || classify(c.covers(), t, p).locally_type_k != d.locally[p]) return fail(c.pi(p));
    }
    return std::nullopt;
  });
}

Outcome type_iv(Context& c) {
  return for_each_flags(c, [&](const TdContext& t, const DefFlags& d) -> Outcome {
    for (std::size_t p = 0; p < c.gex().size(); ++p) {
      if (classify(c.covers(), t, p).purely_non_k != d.purely[p]) return fail(c.pi(p), " flag mismatch");
      if (d.purely[p] && (t.k & image_of(c, p)) != ElementSet{0}) return fail(c.pi(p), " meets K");
    }
    return std::nullopt;
  });
}

Outcome type_v(Context& c) {
  return for_each_flags(c, [&](const TdContext& t, const DefFlags& d) -> Outcome {
    for (std::size_t p = 0; p < c.gex().size(); ++p) {
      if (classify(c.covers(), t, p).properly_non_k != d.properly[p]) return fail(c.pi(p), " flag mismatch");
      if (d.properly[p] && (t.k_tilde & image_of(c, p)) != ElementSet{0}) return fail(c.pi(p), " meets K~");
    }
    return std::nullopt;
  });
}

// f in pi(E) is faithful in the summand pi(E) iff gamma_f = pi.
Outcome faithful_law(Context& c) {
  for (Element f = 0; f < c.n(); ++f) {
    if (faithful(c.covers(), f) != (c.covers().gamma_index(f) == c.gex().one())) return fail(c.el(f));
  }
  for (std::size_t p = 0; p < c.gex().size(); ++p) {
    const Sub s = submodel(c.e(), image_of(c, p));
    const CoverSystem inner(s.model);
    for (Element f = 0; f < s.model.size(); ++f) {
      if (faithful(inner, f) != (c.covers().gamma_index(s.old_id[f]) == p)) {
        return fail(c.el(s.old_id[f]), " in ", c.pi(p));
      }
    }
  }
  return std::nullopt;
}

Outcome ksharp(Context& c) {
  const auto& g = c.gex();
  return for_each_flags(c, [&](const TdContext& t, const DefFlags& d) -> Outcome {
    for (std::size_t p : c.covers().theta()) {
      const Element ks = k_sharp(c.covers(), t, p);
      if (ks != c.map(p)(t.k_star)) return fail("k# != pi k* for ", c.pi(p));
      if (!t.k.contains(ks) || !image_of(c, p).contains(ks)) return fail("k# not in K ^ pi(E) for ", c.pi(p));
      const bool ii = c.covers().gamma_index(ks) == p;
      bool iii = true;
      for (std::size_t x : c.covers().theta()) {
        if (g.meet(x, p) == g.zero()) continue;
        const Element xk = c.map(x)(ks);
        iii = iii && xk != 0 && t.k.contains(xk);
      }
      if (d.locally[p] != ii || ii != iii) return fail("conditions disagree for ", c.pi(p));
    }
    return std::nullopt;
  });
}

Outcome ksharp_member(Context& c) {
  const auto& g = c.gex();
  return for_each_flags(c, [&](const TdContext& t, const DefFlags& d) -> Outcome {
    for (std::size_t p = 0; p < g.size(); ++p) {
      if (!d.locally[p]) continue;
      for (std::size_t x : c.covers().theta()) {
        const std::size_t m = g.meet(x, p);
        if (m == g.zero()) continue;
        if ((t.k & image_of(c, m)) == ElementSet{0}) return fail(c.pi(x), "(", c.pi(p), "(E)) has no nonzero member of K");
      }
    }
    return std::nullopt;
  });
}

Outcome cover_uniqueness(Context& c, bool tilde) {
  const auto& g = c.gex();
  return for_each_flags(c, [&](const TdContext& t, const DefFlags& d) -> Outcome {
    const std::size_t want = tilde ? t.gamma_k_tilde : t.gamma_k;
    for (std::size_t p : c.covers().theta()) {
      const std::size_t q = g.complement(p);
      const bool holds = tilde ? d.type_k[p] && d.properly[q] : d.locally[p] && d.purely[q];
      if (holds != (p == want)) return fail(c.pi(p), holds ? " also qualifies" : " fails");
    }
    return std::nullopt;
  });
}

Outcome gamma_k_unique(Context& c) { return cover_uniqueness(c, false); }
Outcome gamma_k_tilde_unique(Context& c) { return cover_uniqueness(c, true); }

// ---- decompositions ----------------------------------------------------------

bool disjoint3(const Exocenter& g, std::size_t a, std::size_t b, std::size_t d) {
  return g.meet(a, b) == g.zero() && g.meet(a, d) == g.zero() && g.meet(b, d) == g.zero();
}

// Every x is the orthosum of its three components.
Outcome splits_into(Context& c, std::size_t a, std::size_t b, std::size_t d) {
  for (Element x = 0; x < c.n(); ++x) {
    const std::vector<Element> parts{c.map(a)(x), c.map(b)(x), c.map(d)(x)};
    if (c.e().orthosum(parts) != Opt(x)) return fail(c.el(x), " is not the sum of its components");
  }
  return std::nullopt;
}

Outcome decompos(Context& c) {
  const auto& g = c.gex();
  return for_each_flags(c, [&](const TdContext& t, const DefFlags& d) -> Outcome {
    const Fundamental f = fundamental_decomposition(c.covers(), t);
    if (f.pi1 != t.gamma_k_tilde || f.pi2 != g.meet(t.gamma_k, g.complement(t.gamma_k_tilde)) ||
        f.pi3 != g.complement(t.gamma_k)) {
      return fail("triple != (gamma_K~, gamma_K ^ gamma_K~', gamma_K')");
    }
    if (g.meet(g.complement(t.gamma_k), t.gamma_k_tilde) != g.zero()) return fail("gamma_K' ^ gamma_K~ != 0");
    if (!disjoint3(g, f.pi1, f.pi2, f.pi3)) return fail("not pairwise disjoint");
    if (g.join(g.join(f.pi1, f.pi2), f.pi3) != g.one()) return fail("join != 1");
    if (!d.type_k[f.pi1]) return fail("pi1 not type-K");
    if (!d.locally[f.pi2] || !d.properly[f.pi2]) return fail("pi2 not locally type-K and properly non-K");
    if (!d.purely[f.pi3]) return fail("pi3 not purely non-K");
    return splits_into(c, f.pi1, f.pi2, f.pi3);
  });
}

// The third map of a disjoint triple joining to 1 is the complement of the
// join of the other two, so pairs exhaust the triples.
Outcome decompos_uniqueness(Context& c) {
  const auto& g = c.gex();
  return for_each_flags(c, [&](const TdContext& t, const DefFlags& d) -> Outcome {
    const Fundamental f = fundamental_decomposition(c.covers(), t);
    for (std::size_t a = 0; a < g.size(); ++a) {
      if (!d.type_k[a]) continue;
      for (std::size_t b = 0; b < g.size(); ++b) {
        if (g.meet(a, b) != g.zero() || !d.locally[b] || !d.properly[b]) continue;
        const std::size_t r = g.complement(g.join(a, b));
        if (!d.purely[r]) continue;
        if (a != f.pi1 || b != f.pi2 || r != f.pi3) return fail("second triple ", maps(c, {a, b, r}));
      }
    }
    return std::nullopt;
  });
}

template <typename Visit>
Outcome for_each_nested(Context& c, Visit&& visit) {
  const auto& sets = c.td_sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (!sets[i].set.subset_of(sets[j].set)) continue;
      const TdContext& k = c.td(i);
      const TdContext& f = c.td(j);
      if (auto o = visit(k, f, def_flags(c, k), def_flags(c, f))) {
        return fail("K=", sets[i].name, " F=", sets[j].name, ": ", *o);
      }
    }
  }
  return std::nullopt;
}

struct TypeTests {
  const DefFlags& k;
  const DefFlags& f;
  bool type_i(std::size_t p) const { return k.locally[p]; }
  bool type_ii(std::size_t p) const { return f.locally[p] && k.purely[p]; }
  bool type_iii(std::size_t p) const { return f.purely[p]; }
};

Outcome i_ii_iii(Context& c) {
  const auto& g = c.gex();
  return for_each_nested(c, [&](const TdContext& k, const TdContext& f, const DefFlags& dk,
                                const DefFlags& df) -> Outcome {
    const DecompositionReport r = type_i_ii_iii(c.covers(), k, f);
    const TypeTests ty{dk, df};
    const std::size_t kc = g.complement(k.gamma_k);
    const std::size_t ftc = g.complement(f.gamma_k_tilde);
    if (r.pi_i != k.gamma_k || r.pi_ii != g.meet(f.gamma_k, kc) || r.pi_iii != g.complement(f.gamma_k)) {
      return fail("pi_I, pi_II, pi_III formulas");
    }
    if (!disjoint3(g, r.pi_i, r.pi_ii, r.pi_iii) || g.join(g.join(r.pi_i, r.pi_ii), r.pi_iii) != g.one()) {
      return fail("not a disjoint decomposition of 1");
    }
    if (!ty.type_i(r.pi_i) || !ty.type_ii(r.pi_ii) || !ty.type_iii(r.pi_iii)) return fail("types I, II, III");
    if (auto o = splits_into(c, r.pi_i, r.pi_ii, r.pi_iii)) return o;
    if (r.pi_i_f != g.meet(k.gamma_k, f.gamma_k_tilde) || r.pi_i_not_f != g.meet(k.gamma_k, ftc) ||
        r.pi_ii_f != g.meet(f.gamma_k_tilde, kc) || r.pi_ii_not_f != g.meet(g.meet(f.gamma_k, ftc), kc)) {
      return fail("refinement formulas");
    }
    if (g.meet(r.pi_i_f, r.pi_i_not_f) != g.zero() || g.join(r.pi_i_f, r.pi_i_not_f) != r.pi_i) return fail("pi_I split");
    if (g.meet(r.pi_ii_f, r.pi_ii_not_f) != g.zero() || g.join(r.pi_ii_f, r.pi_ii_not_f) != r.pi_ii) {
      return fail("pi_II split");
    }
    if (!ty.type_i(r.pi_i_f) || !df.type_k[r.pi_i_f]) return fail("pi_IF not type I_F");
    if (!ty.type_i(r.pi_i_not_f) || !df.properly[r.pi_i_not_f]) return fail("pi_I~F not type I_~F");
    if (!ty.type_ii(r.pi_ii_f) || !df.type_k[r.pi_ii_f]) return fail("pi_IIF not type II_F");
    if (!ty.type_ii(r.pi_ii_not_f) || !df.properly[r.pi_ii_not_f]) return fail("pi_II~F not type II_~F");
    return std::nullopt;
  });
}

Outcome i_ii_iii_tau(Context& c) {
  const auto& g = c.gex();
  return for_each_nested(c, [&](const TdContext& k, const TdContext& f, const DefFlags&, const DefFlags&) -> Outcome {
    const DecompositionReport r = type_i_ii_iii(c.covers(), k, f);
    const Fundamental p = fundamental_decomposition(c.covers(), k);
    const Fundamental x = fundamental_decomposition(c.covers(), f);
    const std::size_t pi[3] = {p.pi1, p.pi2, p.pi3};
    const std::size_t xi[3] = {x.pi1, x.pi2, x.pi3};
    std::size_t all = g.zero();
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const std::size_t t = g.meet(pi[i], xi[j]);
        if (r.tau[i][j] != t) return fail("tau_", i + 1, j + 1, " != pi_", i + 1, " ^ xi_", j + 1);
        if (g.meet(all, t) != g.zero()) return fail("tau_", i + 1, j + 1, " overlaps earlier taus");
        all = g.join(all, t);
      }
    }
    const auto& t = r.tau;
    if (all != g.one()) return fail("taus do not join to 1");
    if (t[0][0] != p.pi1 || t[2][2] != x.pi3) return fail("tau_11 != pi_1 or tau_33 != xi_3");
    if (t[0][1] != g.zero() || t[0][2] != g.zero() || t[1][2] != g.zero()) return fail("tau_12, tau_13, tau_23 not 0");
    if (r.pi_i != g.join(g.join(t[0][0], t[1][0]), t[1][1]) || r.pi_ii != g.join(t[2][0], t[2][1]) ||
        r.pi_iii != t[2][2] || r.pi_i_f != g.join(t[0][0], t[1][0]) || r.pi_i_not_f != t[1][1] ||
        r.pi_ii_f != t[2][0] || r.pi_ii_not_f != t[2][1]) {
      return fail("maps are not the stated joins of taus");
    }
    return std::nullopt;
  });
}

Outcome i_ii_iii_uniqueness(Context& c) {
  const auto& g = c.gex();
  return for_each_nested(c, [&](const TdContext& k, const TdContext& f, const DefFlags& dk,
                                const DefFlags& df) -> Outcome {
    const DecompositionReport r = type_i_ii_iii(c.covers(), k, f);
    const TypeTests ty{dk, df};
    for (std::size_t a = 0; a < g.size(); ++a) {
      if (!ty.type_i(a)) continue;
      for (std::size_t b = 0; b < g.size(); ++b) {
        if (g.meet(a, b) != g.zero() || !ty.type_ii(b)) continue;
        const std::size_t rest = g.complement(g.join(a, b));
        if (!ty.type_iii(rest)) continue;
        if (a != r.pi_i || b != r.pi_ii || rest != r.pi_iii) return fail("second I/II/III triple ", maps(c, {a, b, rest}));
      }
    }
    // Splits of pi_I and pi_II into an F part and a non-F part.
    auto check_split = [&](std::size_t whole, bool first, std::size_t want_f, std::size_t want_not) -> Outcome {
      for (std::size_t a = 0; a < g.size(); ++a) {
        if (!g.leq(a, whole)) continue;
        const std::size_t b = g.meet(whole, g.complement(a));
        const bool base = first ? ty.type_i(a) && ty.type_i(b) : ty.type_ii(a) && ty.type_ii(b);
        if (!base || !df.type_k[a] || !df.properly[b]) continue;
        if (a != want_f || b != want_not) return fail("second split ", maps(c, {a, b}), " of ", c.pi(whole));
      }
      return std::nullopt;
    };
    if (auto o = check_split(r.pi_i, true, r.pi_i_f, r.pi_i_not_f)) return o;
    return check_split(r.pi_ii, false, r.pi_ii_f, r.pi_ii_not_f);
  });
}

}  // namespace

void add_type_laws(std::vector<LawEntry>& out) {
  out.push_back({"fourclosures", "the four closures are closure operators, Q in Q'', Q' = Q''', P in Q gives Q' in P', "
                                 "[Q]_gamma = orthosums of gamma-orthogonal families in Q", fourclosures});
  out.push_back({"QK.i", "q in [Q]_gamma is the orthosum and sup of a gamma-orthogonal family in Q, and e <= q is "
                         "the orthosum and sup of its meets with that family", qk_i});
  out.push_back({"QK.ii", "[K^gamma]_gamma is the smallest TD set containing K", qk_ii});
  out.push_back({"QK.iii", "[K down]_gamma is the smallest STD set containing K", qk_iii});
  out.push_back({"QK.iv", "K' = (K')down = (K down)' is STD", qk_iv});
  out.push_back({"QK.v", "K' = ([K^gamma]_gamma)' = ([K down]_gamma)'", qk_v});
  out.push_back({"QK.atoms", "A' is the set of elements over no atom, A'' the elements with atomic intervals", qk_atoms});
  out.push_back({"centrTD", "Gamma(E) is TD", centr_td});
  out.push_back({"TypeClass", "a type class gives a TD set, a strong type class an STD set", type_class});
  out.push_back({"kstar", "gamma_k* is largest in {gamma_k : k in K} = {gamma_e : e <= k*} = Theta[0,gamma_k*], a "
                          "Boolean sublattice; likewise for K~", kstar});
  out.push_back({"gammasbK.i", "gamma_K~ <= gamma_K in Theta", gammasbk_i});
  out.push_back({"gammasbK.ii", "gamma_K = v gamma_k over K", gammasbk_ii});
  out.push_back({"gammasbK.iii", "gamma_K is the smallest pi in GEX(E) with K in pi(E)", gammasbk_iii});
  out.push_back({"gammasbK.iv", "gamma_K~ = v gamma_k over K~", gammasbk_iv});
  out.push_back({"gammasbK.v", "gamma_K~ is the smallest pi in Theta with K~ in pi(E)", gammasbk_v});
  out.push_back({"rmType.i", "type-K implies locally type-K", rm_type_1});
  out.push_back({"rmType.ii", "purely non-K implies properly non-K", rm_type_2});
  out.push_back({"rmType.iii", "type-K and properly non-K implies 0", rm_type_3});
  out.push_back({"rmType.iv", "locally type-K and purely non-K implies 0", rm_type_4});
  out.push_back({"rmType.v", "type-K and locally type-K are kept by meets with covers", rm_type_5});
  out.push_back({"rmType.vi", "purely and properly non-K are kept by meets", rm_type_6});
  out.push_back({"rmType.vii", "each of the four predicates is kept by joins", rm_type_7});
  out.push_back({"Type.i", "type-K iff in Theta and <= gamma_K~", type_i});
  out.push_back({"Type.ii", "K STD and pi type-K gives pi(E) in K", type_ii});
  out.push_back({"Type.iii", "locally type-K iff in Theta and <= gamma_K", type_iii});
  out.push_back({"Type.iv", "purely non-K gives K ^ pi(E) = {0}", type_iv});
  out.push_back({"Type.v", "properly non-K gives K~ ^ pi(E) = {0}", type_v});
  out.push_back({"faithful", "f is faithful iff gamma_f = 1; f in pi(E) is faithful there iff gamma_f = pi", faithful_law});
  out.push_back({"ksharp", "k# = pi k* is in K ^ pi(E); locally type-K iff gamma_k# = pi iff every xi in Theta "
                           "meeting pi has 0 != xi k# in K", ksharp});
  out.push_back({"ksharp.corollary", "pi locally type-K and xi ^ pi != 0 give a nonzero member of K in xi(pi(E))",
                 ksharp_member});
  out.push_back({"type.i", "gamma_K is the unique pi in Theta locally type-K with pi' purely non-K", gamma_k_unique});
  out.push_back({"type.ii", "gamma_K~ is the unique xi in Theta type-K with xi' properly non-K", gamma_k_tilde_unique});
  out.push_back({"decompos", "(gamma_K~, gamma_K ^ gamma_K~', gamma_K') is disjoint, joins to 1 and has the stated "
                             "types", decompos});
  out.push_back({"decompos.uniqueness", "no other disjoint triple joining to 1 has the stated types",
                 decompos_uniqueness});
  out.push_back({"I-II-III", "pi_I = gamma_K, pi_II = gamma_F ^ gamma_K', pi_III = gamma_F' decompose E with "
                             "types I, II, III and the F refinements", i_ii_iii});
  out.push_back({"I-II-III.tau", "tau_ij = pi_i ^ xi_j decompose 1 with tau_12 = tau_13 = tau_23 = 0", i_ii_iii_tau});
  out.push_back({"I-II-III.uniqueness", "the I/II/III decomposition and its refinements are unique",
                 i_ii_iii_uniqueness});
}

}  // namespace gpea::laws
