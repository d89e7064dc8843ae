#include <doctest.h>

#include <random>

#include "gpea/axioms.hpp"
#include "gpea/construct.hpp"
#include "gpea/corpus.hpp"
#include "gpea/errors.hpp"
#include "oracles.hpp"

using namespace gpea;
using Opt = std::optional<Element>;

namespace {

FiniteGpea relabel(const FiniteGpea& e, std::mt19937& rng) {
  std::vector<Element> to(e.size());
  std::iota(to.begin(), to.end(), 0);
  std::shuffle(to.begin() + 1, to.end(), rng);
  SumTable t(e.size());
  for (Element a = 0; a < e.size(); ++a) {
    for (Element b = 0; b < e.size(); ++b) {
      if (auto s = e.oplus(a, b)) t.set(to[a], to[b], to[*s]);
    }
  }
  return FiniteGpea(t);
}

}  // namespace

TEST_CASE("enumeration matches naive class counting") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(enumerate_gpeas(n).size() == oracle::class_count(n));
  }
}

TEST_CASE("enumerated classes are distinct and canonical") {
  std::mt19937 rng(11);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto models = enumerate_gpeas(n);
    for (std::size_t i = 0; i < models.size(); ++i) {
      for (std::size_t j = i + 1; j < models.size(); ++j) CHECK_FALSE(is_isomorphic(models[i], models[j]));
      const FiniteGpea r = relabel(models[i], rng);
      CHECK(canonical_table(r) == canonical_table(models[i]));
      const auto iso = is_isomorphic(r, models[i]);
      REQUIRE(iso.has_value());
      CHECK(is_isomorphism(r, models[i], iso->map));
    }
  }
}

TEST_CASE("enumeration caps") {
  CHECK_THROWS_AS(enumerate_gpeas(6), CapExceeded);
  CHECK_THROWS_AS(enumerate_gpeas(7, 7), CapExceeded);
  CHECK_THROWS_AS(enumerate_gpeas(0), UsageError);
}

TEST_CASE("direct sums") {
  const DirectSum s = direct_sum(chain(2), chain(3));
  CHECK(s.sum.size() == 6);
  CHECK(is_morphism(chain(2), s.sum, s.first.map));
  CHECK(is_morphism(chain(3), s.sum, s.second.map));
  CHECK(s.sum.oplus(1 * 3 + 0, 0 * 3 + 2) == Opt(1 * 3 + 2));
  CHECK(s.sum.top() == Opt(5));
  CHECK(is_isomorphic(direct_sum(model_d4(), chain(1)).sum, model_d4()).has_value());
}

TEST_CASE("cone intervals") {
  CHECK(is_isomorphic(cone_interval(1, {2}), chain(3)).has_value());
  CHECK(is_isomorphic(cone_interval(2, {1, 1}), model_d4()).has_value());
  CHECK(cone_interval(2, {3, 5}).size() == 24);
  CHECK_THROWS_AS(cone_interval(2, {1}), UsageError);
  CHECK_THROWS_AS(cone_interval(2, {9, 9}), CapExceeded);
}

TEST_CASE("intervals and restrictions") {
  const FiniteGpea c5 = chain(5);
  const FiniteGpea i = interval_pea(c5, 2);
  CHECK(i.size() == 3);
  CHECK(is_isomorphic(i, chain(3)).has_value());
  std::vector<Element> old;
  const FiniteGpea r = restrict_to(model_d4(), ElementSet{0, 1}, &old);
  CHECK(r.size() == 2);
  CHECK(old == std::vector<Element>{0, 1});
}

TEST_CASE("morphism checks") {
  const FiniteGpea d4 = model_d4();
  CHECK(is_isomorphism(d4, d4, {0, 2, 1, 3}));
  CHECK_FALSE(is_isomorphism(d4, d4, {0, 1, 1, 3}));
  CHECK_FALSE(is_morphism(d4, chain(2), {0, 1, 1, 1}));
  CHECK(is_morphism(d4, chain(3), {0, 1, 1, 2}));
}
