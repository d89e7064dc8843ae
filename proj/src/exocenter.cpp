#include "gpea/exocenter.hpp"

#include <algorithm>

#include "closure.hpp"
#include "gpea/errors.hpp"

namespace gpea {

ExoMap::ExoMap(std::vector<Element> values) : values_(std::move(values)) {
  for (Element e = 0; e < values_.size(); ++e) {
    if (values_[e] == e) image_.insert(e);
  }
}

bool ExoMap::operator<(const ExoMap& o) const {
  if (image_ != o.image_) return image_ < o.image_;
  return values_ < o.values_;
}

ExoMap exo_zero(const FiniteGpea& e) { return ExoMap(std::vector<Element>(e.size(), 0)); }

ExoMap exo_identity(const FiniteGpea& e) { return ExoMap(e.all().elements()); }

std::optional<Violation> exomap_violation(const FiniteGpea& e, const std::vector<Element>& pi) {
  const auto n = static_cast<Element>(e.size());
  if (pi.size() != n || std::any_of(pi.begin(), pi.end(), [n](Element x) { return x >= n; })) {
    return Violation{"EXC1", {}};
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const auto s = e.oplus(a, b);
      if (s && e.oplus(pi[a], pi[b]) != pi[*s]) return Violation{"EXC1", {a, b}};
    }
  }
  for (Element a = 0; a < n; ++a) {
    if (pi[pi[a]] != pi[a]) return Violation{"EXC2", {a}};
  }
  for (Element a = 0; a < n; ++a) {
    if (!e.leq(pi[a], a)) return Violation{"EXC3", {a}};
  }
  for (Element a = 0; a < n; ++a) {
    if (pi[a] != a) continue;
    for (Element b = 0; b < n; ++b) {
      if (pi[b] == 0 && !e.perp(a, b)) return Violation{"EXC4", {a, b}};
    }
  }
  return std::nullopt;
}

bool is_exomap(const FiniteGpea& e, const std::vector<Element>& values) {
  return !exomap_violation(e, values).has_value();
}

ExoMap exo_complement(const FiniteGpea& e, const ExoMap& pi) {
  std::vector<Element> out(pi.size());
  for (Element a = 0; a < pi.size(); ++a) {
    const auto d = e.right_diff(pi(a), a);
    if (!d) throw DomainError("complement needs a decreasing map");
    out[a] = *d;
  }
  return ExoMap(std::move(out));
}

ExoMap exo_meet(const ExoMap& pi, const ExoMap& xi) {
  std::vector<Element> out(pi.size());
  for (Element a = 0; a < pi.size(); ++a) out[a] = pi(xi(a));
  return ExoMap(std::move(out));
}

ExoMap exo_join(const FiniteGpea& e, const ExoMap& pi, const ExoMap& xi) {
  return exo_complement(e, exo_meet(exo_complement(e, pi), exo_complement(e, xi)));
}

bool exo_leq(const ExoMap& pi, const ExoMap& xi) { return pi.image().subset_of(xi.image()); }

bool exo_disjoint(const ExoMap& pi, const ExoMap& xi) {
  return (pi.image() & xi.image()) == ElementSet{0};
}

std::optional<ExoMap> exomap_of_summand(const FiniteGpea& e, ElementSet s) {
  const auto split = central_ideal_complement(e, s);
  if (!split) return std::nullopt;
  return ExoMap(split->first);
}

namespace {

ElementSet sup_closed_ideal_closure(const FiniteGpea& e, ElementSet s) {
  for (;;) {
    ElementSet next = detail::ideal_closure(e, s);
    for (Element x = 0; x < e.size(); ++x) {
      if (!next.contains(x) && e.sup(next & e.down(x)) == x) next.insert(x);
    }
    if (next == s) return s;
    s = next;
  }
}

}  // namespace

std::vector<ElementSet> sup_closed_ideals(const FiniteGpea& e) {
  std::vector<ElementSet> out;
  detail::for_each_closed_set(
      e.size(), [&](ElementSet s) { return sup_closed_ideal_closure(e, s); },
      [&](ElementSet s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExoMap> exocenter(const FiniteGpea& e) {
  std::vector<ExoMap> out;
  for (ElementSet s : sup_closed_ideals(e)) {
    if (auto pi = exomap_of_summand(e, s)) out.push_back(std::move(*pi));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Exocenter::Exocenter(const FiniteGpea& e) : maps_(exocenter(e)) {
  const std::size_t m = maps_.size();
  complement_.resize(m);
  meet_.resize(m * m);
  join_.resize(m * m);
  auto index = [&](const ExoMap& pi) {
    auto i = find(pi);
    if (!i) throw DomainError("exocenter is not closed under its operations");
    return *i;
  };
  for (std::size_t i = 0; i < m; ++i) complement_[i] = index(exo_complement(e, maps_[i]));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) meet_[i * m + j] = index(exo_meet(maps_[i], maps_[j]));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      join_[i * m + j] = complement_[meet_[complement_[i] * m + complement_[j]]];
    }
  }
}

std::optional<std::size_t> Exocenter::find_image(ElementSet image) const {
  auto it = std::lower_bound(maps_.begin(), maps_.end(), image,
                             [](const ExoMap& pi, ElementSet s) { return pi.image() < s; });
  if (it == maps_.end() || it->image() != image) return std::nullopt;
  return static_cast<std::size_t>(it - maps_.begin());
}

std::optional<std::size_t> Exocenter::find(const ExoMap& pi) const {
  auto i = find_image(pi.image());
  if (!i || maps_[*i] != pi) return std::nullopt;
  return i;
}

Factorization factor(const FiniteGpea& e, const ExoMap& pi) {
  if (!is_exomap(e, pi.values())) throw DomainError("factor needs a map in the exocenter");
  const ExoMap pi_c = exo_complement(e, pi);
  std::vector<Element> sids;
  std::vector<Element> cids;
  FiniteGpea summand = restrict_to(e, pi.image(), &sids);
  FiniteGpea complement = restrict_to(e, pi_c.image(), &cids);
  DirectSum product = direct_sum(summand, complement);

  std::vector<Element> sfresh(e.size(), 0);
  std::vector<Element> cfresh(e.size(), 0);
  for (Element i = 0; i < sids.size(); ++i) sfresh[sids[i]] = i;
  for (Element i = 0; i < cids.size(); ++i) cfresh[cids[i]] = i;
  std::vector<Element> to(e.size());
  for (Element a = 0; a < e.size(); ++a) {
    to[a] = static_cast<Element>(sfresh[pi(a)] * complement.size() + cfresh[pi_c(a)]);
  }
  FiniteGpea target = product.sum;
  return {std::move(summand), std::move(complement), std::move(sids), std::move(cids),
          std::move(product), Morphism{e, std::move(target), std::move(to)}};
}

}  // namespace gpea
