#include "gpea/cover.hpp"

#include <algorithm>
#include <sstream>

#include "gpea/errors.hpp"

namespace gpea {

ExoMap exocentral_cover(const FiniteGpea& e, const Exocenter& gex, Element x) {
  if (x >= e.size()) throw UsageError("element out of range");
  std::size_t acc = gex.one();
  for (std::size_t i = 0; i < gex.size(); ++i) {
    if (gex[i](x) == x) acc = gex.meet(acc, i);
  }
  return gex[acc];
}

ExoMap exocentral_cover_by_image(const FiniteGpea& e, const Exocenter& gex, Element x) {
  if (x >= e.size()) throw UsageError("element out of range");
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < gex.size(); ++i) {
    if (!gex[i].image().contains(x)) continue;
    if (!best || gex[i].image().subset_of(gex[*best].image())) best = i;
  }
  // The identity always qualifies, and the qualifying images form a filter.
  for (std::size_t i = 0; i < gex.size(); ++i) {
    if (gex[i].image().contains(x) && !gex[*best].image().subset_of(gex[i].image())) {
      throw DomainError("no smallest central ideal contains " + e.name(x));
    }
  }
  return gex[*best];
}

CoverSystem::CoverSystem(const FiniteGpea& e) : CoverSystem(e, Exocenter(e)) {}

CoverSystem::CoverSystem(const FiniteGpea& e, Exocenter gex) : gex_(std::move(gex)) {
  gamma_.resize(e.size());
  for (Element x = 0; x < e.size(); ++x) gamma_[x] = *gex_.find(exocentral_cover(e, gex_, x));
  theta_ = gamma_;
  std::sort(theta_.begin(), theta_.end());
  theta_.erase(std::unique(theta_.begin(), theta_.end()), theta_.end());
}

bool CoverSystem::in_theta(std::size_t i) const { return std::binary_search(theta_.begin(), theta_.end(), i); }

std::vector<std::vector<Element>> CoverSystem::as_tables() const {
  std::vector<std::vector<Element>> out;
  out.reserve(gamma_.size());
  for (std::size_t i : gamma_) out.push_back(gex_[i].values());
  return out;
}

bool gex_orthogonal(const CoverSystem& covers, std::span<const Element> family) {
  const Exocenter& g = covers.gex();
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (g.meet(covers.gamma_index(family[i]), covers.gamma_index(family[j])) != g.zero()) return false;
    }
  }
  return true;
}

CogpeaCertificate is_cogpea(const FiniteGpea& e, const CoverSystem& covers) {
  CogpeaCertificate cert;
  std::vector<Element> nonzero;
  for (Element x = 1; x < e.size(); ++x) nonzero.push_back(x);
  const Exocenter& g = covers.gex();

  auto fail = [&](const std::vector<Element>& fam, const std::string& what) {
    if (!cert.holds) return;
    cert.holds = false;
    std::ostringstream out;
    out << what << " for family {";
    for (std::size_t i = 0; i < fam.size(); ++i) out << (i ? "," : "") << e.name(fam[i]);
    out << "}";
    cert.failure = out.str();
  };

  auto check = [&](const std::vector<Element>& fam) {
    ElementSet members;
    for (Element x : fam) members.insert(x);
    const auto sum = e.orthosum(fam);
    if (!sum || sum != e.sup(members)) {
      fail(fam, "CO1: no orthosum equal to the supremum");
      return;
    }
    for (Element x = 0; x < e.size(); ++x) {
      bool left = true;
      bool right = true;
      for (Element f : fam) {
        left = left && e.defined(x, f);
        right = right && e.defined(f, x);
      }
      if (left && !e.defined(x, *sum)) fail(fam, "CO2: e + sum missing for e = " + e.name(x));
      if (right && !e.defined(*sum, x)) fail(fam, "CO2: sum + e missing for e = " + e.name(x));
    }
  };

  std::vector<Element> current;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t k = from; k < nonzero.size(); ++k) {
      const Element x = nonzero[k];
      bool disjoint = true;
      for (Element y : current) {
        disjoint = disjoint && g.meet(covers.gamma_index(x), covers.gamma_index(y)) == g.zero();
      }
      if (!disjoint) continue;
      current.push_back(x);
      cert.families.push_back(current);
      check(current);
      self(self, k + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return cert;
}

bool is_hull_system(const FiniteGpea& e, const std::vector<std::vector<Element>>& eta) {
  const std::size_t n = e.size();
  if (eta.size() != n) return false;
  for (const auto& m : eta) {
    if (m.size() != n || std::any_of(m.begin(), m.end(), [n](Element v) { return v >= n; })) return false;
  }
  for (Element x = 0; x < n; ++x) {
    if (eta[0][x] != 0) return false;
  }
  for (Element x = 0; x < n; ++x) {
    if (eta[x][x] != x) return false;
  }
  for (Element x = 0; x < n; ++x) {
    for (Element f = 0; f < n; ++f) {
      const auto& lhs = eta[eta[x][f]];
      for (Element y = 0; y < n; ++y) {
        if (lhs[y] != eta[x][eta[f][y]]) return false;
      }
    }
  }
  return true;
}

}  // namespace gpea
