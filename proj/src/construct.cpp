#include "gpea/construct.hpp"

#include <algorithm>
#include <string>

#include "gpea/errors.hpp"

namespace gpea {

bool is_morphism(const FiniteGpea& source, const FiniteGpea& target, const std::vector<Element>& map) {
  if (map.size() != source.size()) return false;
  for (Element x : map) {
    if (x >= target.size()) return false;
  }
  if (map[0] != 0) return false;
  for (Element a = 0; a < source.size(); ++a) {
    for (Element b = 0; b < source.size(); ++b) {
      const auto s = source.oplus(a, b);
      if (s && target.oplus(map[a], map[b]) != map[*s]) return false;
    }
  }
  return true;
}

bool is_isomorphism(const FiniteGpea& source, const FiniteGpea& target, const std::vector<Element>& map) {
  if (source.size() != target.size() || !is_morphism(source, target, map)) return false;
  std::vector<Element> inverse(map.size(), 0);
  ElementSet hit;
  for (Element a = 0; a < map.size(); ++a) {
    if (hit.contains(map[a])) return false;
    hit.insert(map[a]);
    inverse[map[a]] = a;
  }
  return is_morphism(target, source, inverse);
}

FiniteGpea restrict_to(const FiniteGpea& e, ElementSet s, std::vector<Element>* old_ids) {
  if (!s.contains(0) || !s.subset_of(e.all())) throw UsageError("restriction needs a subset containing 0");
  const std::vector<Element> ids = s.elements();
  std::vector<Element> fresh(e.size(), 0);
  for (Element i = 0; i < ids.size(); ++i) fresh[ids[i]] = i;

  SumTable t(ids.size());
  for (Element i = 0; i < ids.size(); ++i) {
    for (Element j = 0; j < ids.size(); ++j) {
      const auto sum = e.oplus(ids[i], ids[j]);
      if (sum && s.contains(*sum)) t.set(i, j, fresh[*sum]);
    }
  }
  std::vector<std::string> labels;
  if (!e.labels().empty()) {
    for (Element x : ids) labels.push_back(e.labels()[x]);
  }
  if (old_ids) *old_ids = ids;
  return FiniteGpea(t, std::move(labels));
}

FiniteGpea interval_pea(const FiniteGpea& e, Element u) { return restrict_to(e, e.down(u)); }

DirectSum direct_sum(const FiniteGpea& a, const FiniteGpea& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  if (na * nb > kMaxElements) {
    throw CapExceeded("direct sum would have " + std::to_string(na * nb) + " elements");
  }
  auto id = [nb](Element x, Element y) { return static_cast<Element>(x * nb + y); };

  SumTable t(na * nb);
  for (Element x1 = 0; x1 < na; ++x1) {
    for (Element y1 = 0; y1 < nb; ++y1) {
      for (Element x2 = 0; x2 < na; ++x2) {
        for (Element y2 = 0; y2 < nb; ++y2) {
          const auto sx = a.oplus(x1, x2);
          const auto sy = b.oplus(y1, y2);
          if (sx && sy) t.set(id(x1, y1), id(x2, y2), id(*sx, *sy));
        }
      }
    }
  }
  std::vector<std::string> labels;
  if (!a.labels().empty() && !b.labels().empty()) {
    for (Element x = 0; x < na; ++x) {
      for (Element y = 0; y < nb; ++y) labels.push_back("(" + a.name(x) + "," + b.name(y) + ")");
    }
  }
  FiniteGpea sum(t, std::move(labels));

  std::vector<Element> first(na);
  std::vector<Element> second(nb);
  for (Element x = 0; x < na; ++x) first[x] = id(x, 0);
  for (Element y = 0; y < nb; ++y) second[y] = id(0, y);
  return {sum, {a, sum, std::move(first)}, {b, sum, std::move(second)}};
}

FiniteGpea cone_interval(std::size_t d, const std::vector<unsigned>& bound, std::size_t cap) {
  if (bound.size() != d) throw UsageError("cone bound must have exactly d coordinates");
  const std::size_t limit = std::min(cap, kMaxElements);
  std::size_t n = 1;
  for (unsigned b : bound) {
    n *= std::size_t{b} + 1;
    if (n > limit) throw CapExceeded("cone interval exceeds " + std::to_string(limit) + " elements");
  }

  std::vector<std::vector<unsigned>> coords(n, std::vector<unsigned>(d, 0));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rest = i;
    for (std::size_t k = d; k-- > 0;) {
      coords[i][k] = static_cast<unsigned>(rest % (bound[k] + 1));
      rest /= bound[k] + 1;
    }
  }
  auto encode = [&](const std::vector<unsigned>& x) {
    std::size_t id = 0;
    for (std::size_t k = 0; k < d; ++k) id = id * (bound[k] + 1) + x[k];
    return static_cast<Element>(id);
  };

  SumTable t(n);
  std::vector<unsigned> sum(d);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      bool fits = true;
      for (std::size_t k = 0; k < d; ++k) {
        sum[k] = coords[i][k] + coords[j][k];
        fits = fits && sum[k] <= bound[k];
      }
      if (fits) t.set(i, j, encode(sum));
    }
  }
  return FiniteGpea(t);
}

FiniteGpea chain(std::size_t n) {
  SumTable t(n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; i + j < n; ++j) t.set(i, j, i + j);
  }
  return FiniteGpea(t);
}

}  // namespace gpea
