#include "gpea/axioms.hpp"

#include <sstream>

#include "closure.hpp"

namespace gpea {

std::optional<Violation> ViolationReport::first(const std::string& tag) const {
  for (const auto& v : violations_) {
    if (v.tag == tag) return v;
  }
  return std::nullopt;
}

void ViolationReport::add(std::string tag, std::vector<Element> witness) {
  violations_.push_back({std::move(tag), std::move(witness)});
}

std::string ViolationReport::render(std::size_t limit) const {
  std::ostringstream out;
  std::size_t shown = 0;
  for (const auto& v : violations_) {
    if (shown == limit) {
      out << "... " << (violations_.size() - shown) << " more\n";
      break;
    }
    out << v.tag << " (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) out << (i ? "," : "") << v.witness[i];
    out << ")\n";
    ++shown;
  }
  return out.str();
}

InvalidModel::InvalidModel(ViolationReport report)
    : std::runtime_error("table violates the GPEA axioms:\n" + report.render(5)),
      report_(std::move(report)) {}

ViolationReport check_gpea(const SumTable& t) {
  ViolationReport report;
  const auto n = static_cast<Element>(t.size());

  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        std::optional<Element> left;
        std::optional<Element> right;
        if (auto ab = t.get(a, b)) left = t.get(*ab, c);
        if (auto bc = t.get(b, c)) right = t.get(a, *bc);
        if (left != right) report.add("GPEA1", {a, b, c});
      }
    }
  }

  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const auto s = t.get(a, b);
      if (!s) continue;
      bool has_d = false;
      bool has_e = false;
      for (Element x = 0; x < n; ++x) {
        has_d = has_d || t.get(x, a) == s;
        has_e = has_e || t.get(b, x) == s;
      }
      if (!has_d || !has_e) report.add("GPEA2", {a, b});
    }
  }

  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = b + 1; c < n; ++c) {
        const auto ab = t.get(a, b);
        const auto ba = t.get(b, a);
        if ((ab && ab == t.get(a, c)) || (ba && ba == t.get(c, a))) report.add("GPEA3", {a, b, c});
      }
    }
  }

  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if ((a != 0 || b != 0) && t.get(a, b) == Element{0}) report.add("GPEA4", {a, b});
    }
  }

  for (Element a = 0; a < n; ++a) {
    if (t.get(a, 0) != a || t.get(0, a) != a) report.add("GPEA5", {a});
  }
  return report;
}

std::optional<Element> top_of(const FiniteGpea& e) { return e.top(); }

bool is_commutative(const FiniteGpea& e) {
  for (Element a = 0; a < e.size(); ++a) {
    for (Element b = 0; b < e.size(); ++b) {
      if (e.defined(a, b) && !e.perp(a, b)) return false;
    }
  }
  return true;
}

bool is_ideal(const FiniteGpea& e, ElementSet s) {
  if (s.empty() || !s.subset_of(e.all())) return false;
  for (Element a : s) {
    if (!e.down(a).subset_of(s)) return false;
    for (Element b : s) {
      if (auto sum = e.oplus(a, b); sum && !s.contains(*sum)) return false;
    }
  }
  return true;
}

bool is_normal_ideal(const FiniteGpea& e, ElementSet s) {
  if (!is_ideal(e, s)) return false;
  for (Element a = 0; a < e.size(); ++a) {
    for (Element x = 0; x < e.size(); ++x) {
      const auto sum = e.oplus(a, x);
      if (!sum) continue;
      // the unique y with y + a = a + x
      const Element y = *e.left_diff(a, *sum);
      if (s.contains(x) != s.contains(y)) return false;
    }
  }
  return true;
}

ElementSet disjointness_set(const FiniteGpea& e, ElementSet s) {
  ElementSet out;
  for (Element f = 0; f < e.size(); ++f) {
    bool disjoint = true;
    for (Element x : s) {
      if (e.meet(f, x) != Element{0}) {
        disjoint = false;
        break;
      }
    }
    if (disjoint) out.insert(f);
  }
  return out;
}

namespace {

// Coordinates of every element; false if some element has none or several.
bool coordinates(const FiniteGpea& e, ElementSet s, ElementSet complement, std::vector<Element>& first,
                 std::vector<Element>& second) {
  first.assign(e.size(), 0);
  second.assign(e.size(), 0);
  for (Element a = 0; a < e.size(); ++a) {
    int found = 0;
    for (Element a1 : s & e.down(a)) {
      const auto a2 = e.right_diff(a1, a);
      if (a2 && complement.contains(*a2)) {
        first[a] = a1;
        second[a] = *a2;
        ++found;
      }
    }
    if (found != 1) return false;
  }
  return true;
}

}  // namespace

bool has_unique_coordinates(const FiniteGpea& e, ElementSet s, ElementSet complement) {
  std::vector<Element> first;
  std::vector<Element> second;
  return coordinates(e, s, complement, first, second);
}

std::optional<SummandPair> direct_sum_split(const FiniteGpea& e, ElementSet s, ElementSet complement) {
  if (!is_ideal(e, s) || !is_ideal(e, complement)) return std::nullopt;
  for (Element a : s) {
    for (Element b : complement) {
      if (!e.perp(a, b)) return std::nullopt;
    }
  }
  SummandPair pair{s, complement, {}, {}};
  if (!coordinates(e, s, complement, pair.first, pair.second)) return std::nullopt;
  return pair;
}

std::optional<SummandPair> central_ideal_complement(const FiniteGpea& e, ElementSet s) {
  if (!is_ideal(e, s)) return std::nullopt;
  return direct_sum_split(e, s, disjointness_set(e, s));
}

std::vector<ElementSet> all_ideals(const FiniteGpea& e) {
  std::vector<ElementSet> out;
  detail::for_each_closed_set(
      e.size(), [&](ElementSet s) { return detail::ideal_closure(e, s); },
      [&](ElementSet s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gpea
