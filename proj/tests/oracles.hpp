#pragma once
// Brute-force reference computations written straight from the definitions.
// They use only raw table lookups, never the library's derived structure.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gpea/finite_gpea.hpp"

namespace oracle {

using gpea::Element;
using gpea::ElementSet;
using gpea::SumTable;
using Opt = std::optional<Element>;

/// Axiom tags violated by a raw table.
inline std::set<std::string> violations(const SumTable& t) {
  const Element n = static_cast<Element>(t.size());
  std::set<std::string> out;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        const Opt ab = t.get(a, b);
        const Opt bc = t.get(b, c);
        const Opt left = ab ? t.get(*ab, c) : std::nullopt;
        const Opt right = bc ? t.get(a, *bc) : std::nullopt;
        if (left.has_value() != right.has_value() || left != right) out.insert("GPEA1");
        if (b != c && ((ab && ab == t.get(a, c)) || (t.get(b, a) && t.get(b, a) == t.get(c, a)))) out.insert("GPEA3");
      }
      if (const Opt s = t.get(a, b)) {
        bool d = false, e = false;
        for (Element x = 0; x < n; ++x) {
          d = d || t.get(x, a) == s;
          e = e || t.get(b, x) == s;
        }
        if (!d || !e) out.insert("GPEA2");
        if (*s == 0 && (a != 0 || b != 0)) out.insert("GPEA4");
      }
    }
    if (t.get(a, 0) != Opt(a) || t.get(0, a) != Opt(a)) out.insert("GPEA5");
  }
  return out;
}

inline bool leq(const gpea::FiniteGpea& e, Element a, Element b) {
  for (Element x = 0; x < e.size(); ++x) {
    if (e.oplus(a, x) == Opt(b)) return true;
  }
  return false;
}

/// The exocenter by testing all n^n maps against EXC1-EXC4.
inline std::vector<std::vector<Element>> exocenter(const gpea::FiniteGpea& e) {
  const Element n = static_cast<Element>(e.size());
  std::vector<std::vector<Element>> out;
  std::vector<Element> p(n, 0);
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) le[a][b] = leq(e, a, b);
  }
  for (;;) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = le[p[x]][x] && p[p[x]] == p[x];
    for (Element x = 0; x < n && ok; ++x) {
      for (Element y = 0; y < n && ok; ++y) {
        if (const Opt s = e.oplus(x, y)) ok = e.oplus(p[x], p[y]) == Opt(p[*s]);
        if (ok && p[x] == x && p[y] == 0) ok = e.oplus(x, y) && e.oplus(x, y) == e.oplus(y, x);
      }
    }
    if (ok) out.push_back(p);
    Element i = 0;
    while (i < n && ++p[i] == n) p[i++] = 0;
    if (i == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline ElementSet image(const std::vector<Element>& p) {
  ElementSet s;
  for (Element x : p) s.insert(x);
  return s;
}

/// gamma_x as the map with the smallest image among maps fixing x.
inline std::vector<std::vector<Element>> covers(const gpea::FiniteGpea& e,
                                                const std::vector<std::vector<Element>>& gex) {
  std::vector<std::vector<Element>> out;
  for (Element x = 0; x < e.size(); ++x) {
    const std::vector<Element>* best = nullptr;
    for (const auto& p : gex) {
      if (p[x] != x) continue;
      if (!best || image(p).subset_of(image(*best))) best = &p;
    }
    out.push_back(*best);
  }
  return out;
}

/// [Q]_gamma as 0 together with the orthosums of all sets of nonzero members
/// of Q whose covers compose to the zero map pairwise.
inline ElementSet family_closure(const gpea::FiniteGpea& e, const std::vector<std::vector<Element>>& gamma,
                                 ElementSet q) {
  std::vector<Element> items;
  for (Element x : q) {
    if (x != 0) items.push_back(x);
  }
  auto disjoint = [&](Element a, Element b) {
    for (Element z = 0; z < e.size(); ++z) {
      if (gamma[a][gamma[b][z]] != 0) return false;
    }
    return true;
  };
  ElementSet out{0};
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << items.size()); ++mask) {
    std::vector<Element> f;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (mask >> i & 1) f.push_back(items[i]);
    }
    bool ok = true;
    for (std::size_t i = 0; i < f.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < f.size() && ok; ++j) ok = disjoint(f[i], f[j]);
    }
    if (!ok) continue;
    Opt s = Element{0};
    for (Element x : f) s = s ? e.oplus(*s, x) : std::nullopt;
    if (s) out.insert(*s);
  }
  return out;
}

/// Isomorphism classes of GPEAs on n <= 4 elements, counted by generating
/// every table with zero sums fixed and keeping the lexicographically least
/// relabeling of each valid one.
inline std::size_t class_count(std::size_t n) {
  const std::size_t cells = (n - 1) * (n - 1);
  std::set<std::vector<int>> seen;
  std::vector<int> v(cells, 0);  // 0 undefined, k -> element k
  std::vector<Element> perm(n - 1);
  for (;;) {
    SumTable t(n);
    t.fill_zero_sums();
    for (std::size_t i = 0; i < cells; ++i) {
      if (v[i]) t.set(static_cast<Element>(i / (n - 1) + 1), static_cast<Element>(i % (n - 1) + 1), v[i]);
    }
    if (violations(t).empty()) {
      std::iota(perm.begin(), perm.end(), 1);
      std::vector<int> best;
      do {
        std::vector<Element> to(n, 0);
        for (std::size_t i = 0; i + 1 < n; ++i) to[i + 1] = perm[i];
        std::vector<int> code(cells, 0);
        for (std::size_t i = 0; i < cells; ++i) {
          if (!v[i]) continue;
          const Element a = to[i / (n - 1) + 1], b = to[i % (n - 1) + 1];
          code[(a - 1) * (n - 1) + (b - 1)] = static_cast<int>(to[v[i]]);
        }
        if (best.empty() || code < best) best = code;
      } while (std::next_permutation(perm.begin(), perm.end()));
      seen.insert(best);
    }
    std::size_t i = 0;
    while (i < cells && ++v[i] == static_cast<int>(n)) v[i++] = 0;
    if (i == cells) break;
  }
  return seen.size();
}

}  // namespace oracle
