#include "gpea/finite_gpea.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gpea/axioms.hpp"
#include "gpea/errors.hpp"

namespace gpea {

namespace {

constexpr std::int8_t kNone = -1;

std::optional<Element> opt(std::int8_t v) {
  if (v == kNone) return std::nullopt;
  return static_cast<Element>(v);
}

}  // namespace

SumTable::SumTable(std::size_t n) : n_(n), cells_(n * n, kNone) {
  if (n == 0 || n > kMaxElements) {
    throw UsageError("table size must be between 1 and " + std::to_string(kMaxElements) +
                     ", got " + std::to_string(n));
  }
}

std::optional<Element> SumTable::get(Element a, Element b) const {
  if (a >= n_ || b >= n_) throw UsageError("table index out of range");
  return opt(cells_[a * n_ + b]);
}

void SumTable::set(Element a, Element b, std::optional<Element> value) {
  if (a >= n_ || b >= n_ || (value && *value >= n_)) {
    throw UsageError("table entry out of range");
  }
  cells_[a * n_ + b] = value ? static_cast<std::int8_t>(*value) : kNone;
}

void SumTable::fill_zero_sums() {
  for (Element a = 0; a < n_; ++a) {
    if (cells_[a * n_] == kNone) cells_[a * n_] = static_cast<std::int8_t>(a);
    if (cells_[a] == kNone) cells_[a] = static_cast<std::int8_t>(a);
  }
}

struct FiniteGpea::Data {
  std::size_t n = 0;
  SumTable table{1};
  std::vector<std::int8_t> sum;
  std::vector<std::uint64_t> up;
  std::vector<std::uint64_t> down;
  std::vector<std::int8_t> rdiff;  // [a*n+b] = a/b
  std::vector<std::int8_t> ldiff;  // [a*n+b] = b\a
  std::vector<std::int8_t> meet;
  std::vector<std::int8_t> join;
  std::optional<Element> top;
  std::vector<std::string> labels;
};

namespace {

// Greatest element of `set` w.r.t. the order given by `down`, if any.
std::int8_t greatest_in(std::uint64_t set, const std::vector<std::uint64_t>& down) {
  for (std::uint64_t rest = set; rest; rest &= rest - 1) {
    const auto g = std::countr_zero(rest);
    if ((set & ~down[g]) == 0) return static_cast<std::int8_t>(g);
  }
  return kNone;
}

std::int8_t least_in(std::uint64_t set, const std::vector<std::uint64_t>& up) {
  for (std::uint64_t rest = set; rest; rest &= rest - 1) {
    const auto l = std::countr_zero(rest);
    if ((set & ~up[l]) == 0) return static_cast<std::int8_t>(l);
  }
  return kNone;
}

}  // namespace

FiniteGpea::FiniteGpea(const SumTable& table, std::vector<std::string> labels) {
  ViolationReport report = check_gpea(table);
  if (!report.empty()) throw InvalidModel(std::move(report));

  const std::size_t n = table.size();
  if (!labels.empty()) {
    if (labels.size() != n) throw UsageError("expected " + std::to_string(n) + " labels");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != n) throw UsageError("labels must be distinct");
  }

  auto d = std::make_shared<Data>();
  d->n = n;
  d->table = table;
  d->labels = std::move(labels);
  d->sum.assign(n * n, kNone);
  d->up.assign(n, 0);
  d->down.assign(n, 0);
  d->rdiff.assign(n * n, kNone);
  d->ldiff.assign(n * n, kNone);
  for (Element a = 0; a < n; ++a) {
    for (Element x = 0; x < n; ++x) {
      const auto s = table.get(a, x);
      if (!s) continue;
      d->sum[a * n + x] = static_cast<std::int8_t>(*s);
      d->up[a] |= std::uint64_t{1} << *s;
      d->down[*s] |= std::uint64_t{1} << a;
      d->rdiff[a * n + *s] = static_cast<std::int8_t>(x);  // a + x = s
      d->ldiff[x * n + *s] = static_cast<std::int8_t>(a);  // a + x = s, so s\x = a
    }
  }
  d->meet.assign(n * n, kNone);
  d->join.assign(n * n, kNone);
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      const auto m = greatest_in(d->down[a] & d->down[b], d->down);
      const auto j = least_in(d->up[a] & d->up[b], d->up);
      d->meet[a * n + b] = d->meet[b * n + a] = m;
      d->join[a * n + b] = d->join[b * n + a] = j;
    }
  }
  d->top = opt(greatest_in(ElementSet::full(n).bits(), d->down));
  d_ = std::move(d);
}

std::size_t FiniteGpea::size() const { return d_->n; }
const SumTable& FiniteGpea::table() const { return d_->table; }

void FiniteGpea::check(Element e) const {
  if (e >= d_->n) {
    throw UsageError("element " + std::to_string(e) + " out of range for a model of size " +
                     std::to_string(d_->n));
  }
}

std::optional<Element> FiniteGpea::oplus(Element a, Element b) const {
  check(a);
  check(b);
  return opt(d_->sum[a * d_->n + b]);
}

ElementSet FiniteGpea::up(Element a) const {
  check(a);
  return ElementSet::from_bits(d_->up[a]);
}

ElementSet FiniteGpea::down(Element a) const {
  check(a);
  return ElementSet::from_bits(d_->down[a]);
}

std::optional<Element> FiniteGpea::right_diff(Element a, Element b) const {
  check(a);
  check(b);
  return opt(d_->rdiff[a * d_->n + b]);
}

std::optional<Element> FiniteGpea::left_diff(Element a, Element b) const {
  check(a);
  check(b);
  return opt(d_->ldiff[a * d_->n + b]);
}

std::optional<Element> FiniteGpea::ominus(Element b, Element a) const {
  const auto r = right_diff(a, b);
  const auto l = left_diff(a, b);
  if (r && l && *r == *l) return r;
  return std::nullopt;
}

bool FiniteGpea::perp(Element a, Element b) const {
  const auto ab = oplus(a, b);
  const auto ba = oplus(b, a);
  return ab && ba && *ab == *ba;
}

std::optional<Element> FiniteGpea::meet(Element a, Element b) const {
  check(a);
  check(b);
  return opt(d_->meet[a * d_->n + b]);
}

std::optional<Element> FiniteGpea::join(Element a, Element b) const {
  check(a);
  check(b);
  return opt(d_->join[a * d_->n + b]);
}

std::optional<Element> FiniteGpea::sup(ElementSet s) const {
  if (!s.subset_of(all())) throw UsageError("set has members out of range");
  std::uint64_t ub = all().bits();
  for (Element x : s) ub &= d_->up[x];
  return opt(least_in(ub, d_->up));
}

std::optional<Element> FiniteGpea::inf(ElementSet s) const {
  if (!s.subset_of(all())) throw UsageError("set has members out of range");
  std::uint64_t lb = all().bits();
  for (Element x : s) lb &= d_->down[x];
  return opt(greatest_in(lb, d_->down));
}

std::optional<Element> FiniteGpea::top() const { return d_->top; }

std::optional<Element> FiniteGpea::orthosum(std::span<const Element> family) const {
  std::vector<Element> members;
  for (Element x : family) {
    check(x);
    if (x != 0) members.push_back(x);
  }
  const std::size_t k = members.size();
  if (k > 20) throw CapExceeded("orthosum: at most 20 nonzero members are supported");
  // value[mask]: common value of every arrangement of the members in mask.
  std::vector<std::int8_t> value(std::size_t{1} << k, kNone);
  value[0] = 0;
  const std::size_t n = d_->n;
  for (std::size_t mask = 1; mask < value.size(); ++mask) {
    std::int8_t common = kNone;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      if (!((mask >> i) & 1u)) continue;
      const std::int8_t prefix = value[mask & ~(std::size_t{1} << i)];
      if (prefix == kNone) {
        ok = false;
        break;
      }
      const std::int8_t s = d_->sum[static_cast<std::size_t>(prefix) * n + members[i]];
      if (s == kNone || (common != kNone && s != common)) {
        ok = false;
        break;
      }
      common = s;
    }
    if (ok) value[mask] = common;
  }
  return opt(value.back());
}

ElementSet FiniteGpea::atoms() const {
  ElementSet result;
  for (Element a = 1; a < d_->n; ++a) {
    if (std::popcount(d_->down[a]) == 2) result.insert(a);
  }
  return result;
}

const std::vector<std::string>& FiniteGpea::labels() const { return d_->labels; }

std::string FiniteGpea::name(Element e) const {
  check(e);
  return d_->labels.empty() ? std::to_string(e) : d_->labels[e];
}

std::string FiniteGpea::format(ElementSet s) const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Element x : s) {
    if (!first) out << ',';
    out << name(x);
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace gpea
