#include <doctest.h>

#include <random>

#include "gpea/axioms.hpp"
#include "gpea/construct.hpp"
#include "gpea/corpus.hpp"
#include "oracles.hpp"

using namespace gpea;
using Opt = std::optional<Element>;

namespace {

std::set<std::string> tags(const ViolationReport& r) {
  std::set<std::string> out;
  for (const auto& v : r.violations()) out.insert(v.tag);
  return out;
}

}  // namespace

TEST_CASE("checker agrees with the naive axioms on random tables") {
  std::mt19937 rng(7);
  int valid = 0;
  for (int round = 0; round < 4000; ++round) {
    const std::size_t n = 2 + round % 3;
    SumTable t(n);
    if (round % 2) t.fill_zero_sums();
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (rng() % 3 == 0) t.set(a, b, static_cast<Element>(rng() % n));
      }
    }
    const auto want = oracle::violations(t);
    CHECK(tags(check_gpea(t)) == want);
    valid += want.empty();
  }
  CHECK(valid > 0);
}

TEST_CASE("corrupted tables name the broken axiom") {
  SumTable positivity(2);
  positivity.fill_zero_sums();
  positivity.set(1, 1, 0);
  CHECK(check_gpea(positivity).first("GPEA4")->witness == std::vector<Element>{1, 1});

  SumTable cancellation(3);
  cancellation.fill_zero_sums();
  cancellation.set(1, 1, 2);
  cancellation.set(1, 2, 2);
  CHECK(check_gpea(cancellation).first("GPEA3").has_value());

  SumTable assoc = chain(4).table();
  assoc.set(1, 2, std::nullopt);
  CHECK(check_gpea(assoc).first("GPEA1").has_value());

  SumTable zero(2);
  CHECK(check_gpea(zero).first("GPEA5").has_value());
  CHECK_THROWS_AS(FiniteGpea{zero}, InvalidModel);
}

TEST_CASE("ideals and central ideals") {
  const FiniteGpea v3 = model_v3();
  CHECK(is_ideal(v3, ElementSet{0, 1}));
  CHECK(is_normal_ideal(v3, ElementSet{0, 1}));
  CHECK_FALSE(central_ideal_complement(v3, ElementSet{0, 1}).has_value());
  CHECK(disjointness_set(v3, ElementSet{0, 1}) == ElementSet{0, 2});
  CHECK(all_ideals(v3).size() == 4);

  const FiniteGpea d4 = model_d4();
  const auto split = central_ideal_complement(d4, ElementSet{0, 1});
  REQUIRE(split.has_value());
  CHECK(split->complement == ElementSet{0, 2});
  CHECK(split->first[3] == 1);
  CHECK(split->second[3] == 2);
  CHECK_FALSE(is_ideal(d4, ElementSet{0, 1, 2}));

  const FiniteGpea c3 = chain(3);
  CHECK_FALSE(is_ideal(c3, ElementSet{0, 2}));
  CHECK_FALSE(is_ideal(c3, ElementSet{0, 1}));
  CHECK(all_ideals(c3).size() == 2);
  CHECK_FALSE(central_ideal_complement(c3, ElementSet{0, 1}).has_value());
}

TEST_CASE("commutativity") {
  CHECK(is_commutative(model_d4()));
  const auto five = enumerate_gpeas(5);
  CHECK(std::count_if(five.begin(), five.end(), [](const FiniteGpea& e) { return !is_commutative(e); }) >= 1);
}
