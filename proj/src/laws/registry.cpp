#include <algorithm>
#include <set>

#include "gpea/axioms.hpp"
#include "gpea/errors.hpp"
#include "gpea/laws.hpp"
#include "laws/context.hpp"

namespace gpea {
namespace laws {

namespace {

constexpr std::uint64_t kLawSeed = 0x6770656173756974ULL;

}  // namespace

const CoverSystem& Context::covers() {
  if (!covers_) covers_.emplace(e_);
  return *covers_;
}

std::size_t Context::pi_index(Element c) {
  if (!center().contains(c)) throw DomainError("element " + el(c) + " is not central");
  const auto i = gex().find_image(e_.down(c));
  if (!i) throw DomainError("no exocenter map with image E[0," + el(c) + "]");
  return *i;
}

ElementSet Context::center() {
  if (!center_) center_ = central_elements(e_);
  return *center_;
}

Element Context::unit() {
  if (!unit_) unit_ = center_unit(e_);
  return *unit_;
}

const std::vector<ElementSet>& Context::ideals() {
  if (!ideals_) ideals_ = all_ideals(e_);
  return *ideals_;
}

const std::vector<std::pair<ElementSet, ElementSet>>& Context::splits() {
  if (!splits_) {
    splits_.emplace();
    for (ElementSet s : ideals()) {
      for (ElementSet t : ideals()) {
        if (direct_sum_split(e_, s, t)) splits_->emplace_back(s, t);
      }
    }
  }
  return *splits_;
}

const std::vector<ElementSet>& Context::antichains() {
  if (antichains_) return *antichains_;
  antichains_.emplace();
  auto& out = *antichains_;
  const auto n = static_cast<Element>(e_.size());
  auto extend = [&](auto&& self, Element from, ElementSet current, ElementSet allowed) -> void {
    for (Element x = from; x < n; ++x) {
      if (!allowed.contains(x)) continue;
      if (out.size() >= kAntichainCap) {
        antichains_truncated_ = true;
        return;
      }
      ElementSet next = current;
      next.insert(x);
      out.push_back(next);
      self(self, x + 1, next, allowed - e_.up(x) - e_.down(x));
    }
  };
  extend(extend, 0, ElementSet{}, e_.all());
  return out;
}

const std::vector<NamedSet>& Context::td_sets() {
  if (td_sets_) return *td_sets_;
  td_sets_.emplace();
  std::vector<NamedSet> candidates;
  candidates.push_back({"{0}", ElementSet{0}});
  candidates.push_back({"center", center()});
  candidates.push_back({"all", e_.all()});
  for (Element x = 0; x < e_.size(); ++x) {
    candidates.push_back({"td(" + el(x) + ")", td_generated(e_, covers(), ElementSet{x})});
  }
  candidates.push_back({"pea-class:commutative", tdset_from_pea_class(e_, is_commutative)});
  std::set<std::uint64_t> seen;
  for (auto& c : candidates) {
    if (!is_td(e_, covers(), c.set)) continue;
    if (seen.insert(c.set.bits()).second) td_sets_->push_back(std::move(c));
  }
  td_ctx_.assign(td_sets_->size(), std::nullopt);
  return *td_sets_;
}

const TdContext& Context::td(std::size_t i) {
  td_sets();
  if (!td_ctx_.at(i)) td_ctx_[i] = td_context(e_, covers(), center(), (*td_sets_)[i].set);
  return *td_ctx_[i];
}

std::vector<ElementSet> Context::q_sample() {
  std::vector<ElementSet> out;
  if (n() <= kExhaustiveQ) {
    for_each_subset(e_.all(), [&](ElementSet s) -> Outcome {
      out.push_back(s);
      return std::nullopt;
    });
    return out;
  }
  mark_sampled();
  out.push_back(ElementSet{});
  for (Element x = 0; x < n(); ++x) out.push_back(ElementSet{x});
  for (const auto& t : td_sets()) out.push_back(t.set);
  for (std::size_t i = 0; i < kQSamples; ++i) out.push_back(ElementSet::from_bits(rng_()) & e_.all());
  return out;
}

const std::vector<ElementSet>& Context::all_td_subsets() {
  if (all_td_) return *all_td_;
  all_td_.emplace();
  if (n() > kExhaustiveQ) return *all_td_;
  for_each_subset(e_.all(), [&](ElementSet s) -> Outcome {
    if (is_td(e_, covers(), s)) all_td_->push_back(s);
    return std::nullopt;
  });
  return *all_td_;
}

void Context::begin_law() {
  exhaustive_ = true;
  rng_.seed(kLawSeed);
}

std::vector<std::vector<std::size_t>> disjoint_families(const Exocenter& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t i = from; i < g.size(); ++i) {
      if (i == g.zero()) continue;
      bool ok = true;
      for (std::size_t j : current) ok = ok && g.meet(i, j) == g.zero();
      if (!ok) continue;
      current.push_back(i);
      out.push_back(current);
      self(self, i + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

std::vector<std::vector<Element>> gamma_orthogonal_sets(const FiniteGpea& e, const CoverSystem& covers,
                                                        ElementSet within) {
  const Exocenter& g = covers.gex();
  std::vector<std::vector<Element>> out;
  std::vector<Element> current;
  const auto members = (within - ElementSet{0}).elements();
  auto extend = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t k = from; k < members.size(); ++k) {
      const Element x = members[k];
      bool ok = true;
      for (Element y : current) ok = ok && g.meet(covers.gamma_index(x), covers.gamma_index(y)) == g.zero();
      if (!ok) continue;
      current.push_back(x);
      out.push_back(current);
      self(self, k + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  (void)e;
  return out;
}

std::optional<Element> sup_of(const FiniteGpea& e, const std::vector<Element>& values) {
  ElementSet s;
  for (Element v : values) s.insert(v);
  return e.sup(s);
}

std::optional<Element> inf_of(const FiniteGpea& e, const std::vector<Element>& values) {
  ElementSet s;
  for (Element v : values) s.insert(v);
  return e.inf(s);
}

std::vector<std::pair<std::vector<Element>, Element>> orthogonal_families(const FiniteGpea& e, std::size_t cap,
                                                                          bool& truncated) {
  std::vector<std::pair<std::vector<Element>, Element>> out;
  std::vector<Element> current;
  truncated = false;
  // Subfamilies of orthogonal families are orthogonal, so a failed
  // extension prunes the whole branch.
  auto extend = [&](auto&& self, Element from) -> void {
    for (Element x = from; x < e.size(); ++x) {
      if (out.size() >= cap || current.size() >= 20) {
        truncated = true;
        return;
      }
      current.push_back(x);
      if (const auto s = e.orthosum(current)) {
        out.emplace_back(current, *s);
        self(self, x);
      }
      current.pop_back();
    }
  };
  extend(extend, 1);
  return out;
}

std::vector<Element> Product::decode(Element id) const {
  std::vector<Element> out(radix.size());
  for (std::size_t i = radix.size(); i-- > 0;) {
    out[i] = static_cast<Element>(id % radix[i]);
    id /= static_cast<Element>(radix[i]);
  }
  return out;
}

std::optional<Product> product_of(const std::vector<FiniteGpea>& parts) {
  std::size_t total = 1;
  for (const auto& p : parts) total *= p.size();
  if (parts.empty() || total > kMaxElements) return std::nullopt;
  Product out{parts[0], {parts[0].size()}};
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out.sum = direct_sum(out.sum, parts[i]).sum;
    out.radix.push_back(parts[i].size());
  }
  return out;
}

std::string fam(const FiniteGpea& e, const std::vector<Element>& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + e.name(f[i]);
  return out + "}";
}

Sub submodel(const FiniteGpea& e, ElementSet s) {
  std::vector<Element> ids;
  FiniteGpea model = restrict_to(e, s, &ids);
  std::vector<std::optional<Element>> back(e.size());
  for (std::size_t i = 0; i < ids.size(); ++i) back[ids[i]] = static_cast<Element>(i);
  return {std::move(model), std::move(ids), std::move(back)};
}

std::string maps(Context& c, const std::vector<std::size_t>& f) {
  std::string out = "[";
  for (std::size_t k = 0; k < f.size(); ++k) out += (k ? "," : "") + c.pi(f[k]);
  return out + "]";
}

std::size_t join_all(const Exocenter& g, const std::vector<std::size_t>& f) {
  std::size_t acc = g.zero();
  for (std::size_t i : f) acc = g.join(acc, i);
  return acc;
}

std::size_t meet_all(const Exocenter& g, const std::vector<std::size_t>& f) {
  std::size_t acc = g.one();
  for (std::size_t i : f) acc = g.meet(acc, i);
  return acc;
}

std::vector<std::vector<std::size_t>> gex_families(Context& c) {
  const std::size_t m = c.gex().size();
  std::vector<std::vector<std::size_t>> out;
  auto add = [&](std::uint64_t bits) {
    std::vector<std::size_t> f;
    for (std::size_t i = 0; i < m; ++i) {
      if ((bits >> i) & 1u) f.push_back(i);
    }
    if (!f.empty()) out.push_back(std::move(f));
  };
  if (m <= 16) {
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << m); ++bits) add(bits);
  } else {
    c.mark_sampled();
    for (int k = 0; k < 4096; ++k) add(c.rng()() & ((m >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1)));
  }
  return out;
}

bool has_disjoint_assignment(Context& c, const std::vector<Element>& f) {
  const auto& g = c.gex();
  std::vector<std::size_t> chosen;
  auto place = [&](auto&& self, std::size_t k) -> bool {
    if (k == f.size()) return true;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i](f[k]) != f[k]) continue;
      bool ok = true;
      for (std::size_t j : chosen) ok = ok && g.meet(i, j) == g.zero();
      if (!ok) continue;
      chosen.push_back(i);
      if (self(self, k + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return place(place, 0);
}

const std::vector<LawEntry>& entries() {
  static const std::vector<LawEntry> all = [] {
    std::vector<LawEntry> v;
    add_kernel_laws(v);
    add_exocenter_laws(v);
    add_center_laws(v);
    add_cover_laws(v);
    add_type_laws(v);
    return v;
  }();
  return all;
}

}  // namespace laws

const std::vector<LawInfo>& law_registry() {
  static const std::vector<LawInfo> infos = [] {
    std::vector<LawInfo> v;
    for (const auto& entry : laws::entries()) v.push_back({entry.id, entry.statement});
    return v;
  }();
  return infos;
}

std::vector<LawResult> verify_laws(const FiniteGpea& e, const std::string& model_id,
                                   const std::vector<std::string>& selection) {
  const auto& all = laws::entries();
  std::set<std::string> wanted(selection.begin(), selection.end());
  for (const auto& id : wanted) {
    const bool known = std::any_of(all.begin(), all.end(), [&](const auto& entry) { return id == entry.id; });
    if (!known) throw UsageError("unknown law id: " + id);
  }
  laws::Context ctx(e);
  std::vector<LawResult> results;
  for (const auto& entry : all) {
    if (!wanted.empty() && !wanted.count(entry.id)) continue;
    ctx.begin_law();
    laws::Outcome outcome;
    try {
      outcome = entry.fn(ctx);
    } catch (const std::exception& ex) {
      outcome = std::string("exception: ") + ex.what();
    }
    LawResult r;
    r.law_id = entry.id;
    r.model_id = model_id;
    r.pass = !outcome.has_value();
    if (outcome) r.witness = *outcome;
    r.exhaustive = ctx.exhaustive();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace gpea
