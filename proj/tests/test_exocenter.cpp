#include <doctest.h>

#include "gpea/axioms.hpp"
#include "gpea/construct.hpp"
#include "gpea/corpus.hpp"
#include "gpea/errors.hpp"
#include "gpea/exocenter.hpp"
#include "oracles.hpp"

using namespace gpea;

namespace {

std::vector<std::vector<Element>> tables(const std::vector<ExoMap>& maps) {
  std::vector<std::vector<Element>> out;
  for (const auto& m : maps) out.push_back(m.values());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("exocenter agrees with the n^n map search") {
  for (const auto& m : corpus(4)) {
    if (m.model.size() > 6) continue;
    CAPTURE(m.id);
    CHECK(tables(exocenter(m.model)) == oracle::exocenter(m.model));
  }
}

TEST_CASE("exocenter sizes") {
  CHECK(exocenter(model_d4()).size() == 4);
  CHECK(exocenter(model_v3()).size() == 2);
  CHECK(exocenter(chain(3)).size() == 2);
  CHECK(exocenter(direct_sum(chain(2), chain(3)).sum).size() == 4);
}

TEST_CASE("Boolean operations on D4") {
  const FiniteGpea d4 = model_d4();
  const Exocenter g(d4);
  CHECK(g[g.zero()] == exo_zero(d4));
  CHECK(g[g.one()] == exo_identity(d4));
  const auto a = g.find_image(ElementSet{0, 1});
  const auto b = g.find_image(ElementSet{0, 2});
  REQUIRE(a);
  REQUIRE(b);
  CHECK(g.complement(*a) == *b);
  CHECK(g.meet(*a, *b) == g.zero());
  CHECK(g.join(*a, *b) == g.one());
  CHECK(exo_complement(d4, g[*a]) == g[*b]);
  CHECK(exo_meet(g[*a], g[*b]) == exo_zero(d4));
  CHECK(exo_join(d4, g[*a], g[*b]) == exo_identity(d4));
  CHECK(exo_leq(g[*a], exo_identity(d4)));
  CHECK(exo_disjoint(g[*a], g[*b]));
}

TEST_CASE("map validation names the failing condition") {
  const FiniteGpea d4 = model_d4();
  CHECK(is_exomap(d4, {0, 1, 0, 1}));
  CHECK(exomap_violation(d4, {0, 2, 1, 3}).has_value());
  CHECK(exomap_violation(d4, {0, 0, 0, 1}).has_value());
  CHECK_FALSE(is_exomap(chain(3), {0, 1, 1}));
}

TEST_CASE("summands match exocenter images") {
  for (const auto& m : corpus(4)) {
    if (m.model.size() > 8) continue;
    CAPTURE(m.id);
    const Exocenter g(m.model);
    std::size_t central = 0;
    for (ElementSet s : all_ideals(m.model)) {
      if (central_ideal_complement(m.model, s)) {
        ++central;
        CHECK(g.find_image(s).has_value());
      }
    }
    CHECK(central == g.size());
  }
}

TEST_CASE("factoring along a map") {
  const FiniteGpea d4 = model_d4();
  const Factorization f = factor(d4, ExoMap({0, 1, 0, 1}));
  CHECK(f.summand.size() == 2);
  CHECK(f.complement.size() == 2);
  CHECK(is_isomorphism(d4, f.product.sum, f.to_product.map));
  CHECK_THROWS_AS(factor(d4, ExoMap({0, 1, 1, 3})), DomainError);
}
