#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "gpea/axioms.hpp"
#include "gpea/construct.hpp"
#include "gpea/errors.hpp"

namespace gpea {

namespace {

using Key = std::vector<int>;

Key encode(const SumTable& t) {
  Key out;
  out.reserve(t.size() * t.size());
  for (Element a = 0; a < t.size(); ++a) {
    for (Element b = 0; b < t.size(); ++b) {
      const auto s = t.get(a, b);
      out.push_back(s ? static_cast<int>(*s) : -1);
    }
  }
  return out;
}

std::size_t defined_count(const FiniteGpea& e, Element a) {
  std::size_t c = 0;
  for (Element x = 0; x < e.size(); ++x) c += e.defined(a, x) + e.defined(x, a);
  return c;
}

SumTable relabel(const FiniteGpea& e, const std::vector<Element>& order) {
  // order[new] = old
  std::vector<Element> fresh(e.size());
  for (Element i = 0; i < order.size(); ++i) fresh[order[i]] = i;
  SumTable t(e.size());
  for (Element i = 0; i < e.size(); ++i) {
    for (Element j = 0; j < e.size(); ++j) {
      if (auto s = e.oplus(order[i], order[j])) t.set(i, j, fresh[*s]);
    }
  }
  return t;
}

}  // namespace

SumTable canonical_table(const FiniteGpea& e) {
  using Invariant = std::pair<std::size_t, std::size_t>;
  std::vector<Invariant> inv(e.size());
  for (Element a = 0; a < e.size(); ++a) inv[a] = {e.down(a).size(), defined_count(e, a)};

  std::vector<Element> order(e.size());
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) { return inv[a] < inv[b]; });

  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [begin, end)
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && inv[order[j]] == inv[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  SumTable best = relabel(e, order);
  Key best_key = encode(best);
  // Odometer over the permutations of every block.
  for (;;) {
    std::size_t k = 0;
    for (; k < blocks.size(); ++k) {
      auto [lo, hi] = blocks[k];
      if (std::next_permutation(order.begin() + lo, order.begin() + hi)) break;
    }
    if (k == blocks.size()) break;
    SumTable candidate = relabel(e, order);
    Key key = encode(candidate);
    if (key < best_key) {
      best_key = std::move(key);
      best = std::move(candidate);
    }
  }
  return best;
}

std::vector<FiniteGpea> enumerate_gpeas(std::size_t n, std::size_t cap) {
  if (n == 0) throw UsageError("order must be at least 1");
  if (n > cap || n > kMaxEnumerationOrder) {
    throw CapExceeded("enumeration order " + std::to_string(n) + " exceeds the cap of " +
                      std::to_string(std::min(cap, kMaxEnumerationOrder)));
  }

  // Labels may be taken along a linear extension of the order, so every
  // nonzero sum a+b is strictly above max(a, b).
  std::vector<std::pair<Element, Element>> cells;
  for (Element a = 1; a < n; ++a) {
    for (Element b = 1; b < n; ++b) {
      if (std::max(a, b) + 1 < n) cells.emplace_back(a, b);
    }
  }

  SumTable table(n);
  table.fill_zero_sums();
  std::map<Key, SumTable> classes;

  auto clashes = [&](Element a, Element b, Element v) {
    for (Element x = 1; x < n; ++x) {
      if (x != b && table.get(a, x) == v) return true;
      if (x != a && table.get(x, b) == v) return true;
    }
    return false;
  };

  auto search = [&](auto&& self, std::size_t index) -> void {
    if (index == cells.size()) {
      if (!check_gpea(table).empty()) return;
      SumTable canon = canonical_table(FiniteGpea(table));
      classes.emplace(encode(canon), canon);
      return;
    }
    const auto [a, b] = cells[index];
    table.set(a, b, std::nullopt);
    self(self, index + 1);
    for (Element v = std::max(a, b) + 1; v < n; ++v) {
      if (clashes(a, b, v)) continue;
      table.set(a, b, v);
      self(self, index + 1);
    }
    table.set(a, b, std::nullopt);
  };
  search(search, 0);

  std::vector<FiniteGpea> out;
  out.reserve(classes.size());
  for (const auto& [key, t] : classes) out.emplace_back(t);
  return out;
}

std::optional<Morphism> is_isomorphic(const FiniteGpea& e, const FiniteGpea& f) {
  if (e.size() != f.size()) return std::nullopt;
  const std::size_t n = e.size();

  using Invariant = std::tuple<std::size_t, std::size_t, std::size_t>;
  auto invariants = [](const FiniteGpea& g) {
    std::vector<Invariant> inv(g.size());
    for (Element a = 0; a < g.size(); ++a) inv[a] = {g.down(a).size(), g.up(a).size(), defined_count(g, a)};
    return inv;
  };
  const auto ie = invariants(e);
  const auto jf = invariants(f);
  {
    auto se = ie;
    auto sf = jf;
    std::sort(se.begin(), se.end());
    std::sort(sf.begin(), sf.end());
    if (se != sf) return std::nullopt;
  }

  constexpr Element kUnset = ~Element{0};
  std::vector<Element> map(n, kUnset);
  std::vector<Element> inverse(n, kUnset);

  // Sums among assigned elements must correspond.
  auto consistent = [&](Element x) {
    for (Element a = 0; a < n; ++a) {
      if (map[a] == kUnset) continue;
      for (auto [p, q] : {std::pair{a, x}, std::pair{x, a}}) {
        const auto s = e.oplus(p, q);
        const auto t = f.oplus(map[p], map[q]);
        if (s.has_value() != t.has_value()) return false;
        if (!s) continue;
        if (map[*s] != kUnset && map[*s] != *t) return false;
        if (inverse[*t] != kUnset && inverse[*t] != *s) return false;
      }
    }
    return true;
  };

  auto search = [&](auto&& self, Element x) -> bool {
    if (x == n) return is_isomorphism(e, f, map);
    for (Element y = 0; y < n; ++y) {
      if (inverse[y] != kUnset || ie[x] != jf[y]) continue;
      map[x] = y;
      inverse[y] = x;
      if (consistent(x) && self(self, x + 1)) return true;
      map[x] = kUnset;
      inverse[y] = kUnset;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return Morphism{e, f, map};
}

}  // namespace gpea
