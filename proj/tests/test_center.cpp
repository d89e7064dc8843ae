#include <doctest.h>

#include "gpea/center.hpp"
#include "gpea/construct.hpp"
#include "gpea/corpus.hpp"
#include "gpea/errors.hpp"
#include "oracles.hpp"

using namespace gpea;

TEST_CASE("both center definitions agree with the map search") {
  for (const auto& m : corpus(4)) {
    CAPTURE(m.id);
    const ElementSet by_conditions = central_elements(m.model);
    CHECK(by_conditions == central_elements_by_splitting(m.model));
    if (m.model.size() > 6) continue;
    ElementSet want;
    for (const auto& p : oracle::exocenter(m.model)) {
      for (Element c = 0; c < m.model.size(); ++c) {
        if (oracle::image(p) == m.model.down(c)) want.insert(c);
      }
    }
    CHECK(by_conditions == want);
  }
}

TEST_CASE("center examples") {
  CHECK(central_elements(chain(3)) == ElementSet{0, 2});
  CHECK(central_elements(model_v3()) == ElementSet{0});
  CHECK(central_elements(model_d4()) == ElementSet{0, 1, 2, 3});
  CHECK(center_unit(model_v3()) == 0);
  CHECK(center_unit(model_d4()) == 3);
  CHECK(center_unit(chain(3)) == 2);
  const FiniteGpea s = direct_sum(chain(2), model_v3()).sum;
  CHECK(center_unit(s) == 3);
}

TEST_CASE("pi_c") {
  const FiniteGpea c3 = chain(3);
  CHECK(pi_c(c3, 2).values() == std::vector<Element>{0, 1, 2});
  CHECK(pi_c(c3, 0).values() == std::vector<Element>{0, 0, 0});
  CHECK_THROWS_AS(pi_c(c3, 1), DomainError);
  const CenterData d = center(model_d4());
  CHECK(d.pi_of.at(1).image() == ElementSet{0, 1});
  CHECK(d.unit == 3);
}

TEST_CASE("centerless split") {
  const auto [h, k] = centerless_split(model_v3());
  CHECK(h.size() == 1);
  CHECK(is_isomorphic(k, model_v3()).has_value());
  const auto [h2, k2] = centerless_split(direct_sum(chain(2), model_v3()).sum);
  CHECK(is_isomorphic(h2, chain(2)).has_value());
  CHECK(is_isomorphic(k2, model_v3()).has_value());
  for (const auto& m : corpus(4)) {
    const auto [a, b] = centerless_split(m.model);
    CHECK(central_elements(b) == ElementSet{0});
    CHECK(a.top().has_value());
  }
}
