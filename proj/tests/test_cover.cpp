#include <doctest.h>

#include "gpea/center.hpp"
#include "gpea/construct.hpp"
#include "gpea/corpus.hpp"
#include "gpea/cover.hpp"
#include "oracles.hpp"

using namespace gpea;

TEST_CASE("covers agree with the smallest fixing map") {
  for (const auto& m : corpus(4)) {
    if (m.model.size() > 6) continue;
    CAPTURE(m.id);
    const CoverSystem covers(m.model);
    const auto want = oracle::covers(m.model, oracle::exocenter(m.model));
    for (Element x = 0; x < m.model.size(); ++x) {
      CHECK(covers.gamma(x).values() == want[x]);
      CHECK(exocentral_cover_by_image(m.model, covers.gex(), x) == covers.gamma(x));
    }
  }
}

TEST_CASE("cover examples") {
  const FiniteGpea v3 = model_v3();
  const CoverSystem cv(v3);
  CHECK(cv.gamma(1).values() == std::vector<Element>{0, 1, 2});
  CHECK(cv.gamma(0).values() == std::vector<Element>{0, 0, 0});
  CHECK_FALSE(gex_orthogonal(cv, std::vector<Element>{1, 2}));
  const CoverSystem cd(model_d4());
  CHECK(gex_orthogonal(cd, std::vector<Element>{1, 2}));
  CHECK(cd.theta().size() == 4);
}

TEST_CASE("finite models are centrally orthocomplete") {
  for (const auto& m : corpus(4)) {
    CAPTURE(m.id);
    const CoverSystem covers(m.model);
    const CogpeaCertificate cert = is_cogpea(m.model, covers);
    CHECK(cert.holds);
    CHECK(is_hull_system(m.model, covers.as_tables()));
  }
  CHECK(is_cogpea(model_d4(), CoverSystem(model_d4())).families.size() == 4);
}

TEST_CASE("hull system conditions reject other maps") {
  const FiniteGpea d4 = model_d4();
  std::vector<std::vector<Element>> eta(4, std::vector<Element>{0, 1, 2, 3});
  CHECK_FALSE(is_hull_system(d4, eta));
  CHECK(is_hull_system(d4, CoverSystem(d4).as_tables()));
}

TEST_CASE("gamma-invariant elements are the central ones") {
  for (const auto& m : corpus(4)) {
    const CoverSystem covers(m.model);
    ElementSet inv;
    for (Element x = 0; x < m.model.size(); ++x) {
      bool invariant = true;
      for (Element f = 0; f < m.model.size(); ++f) {
        invariant = invariant && m.model.meet(x, f) == std::optional<Element>(covers.gamma(x)(f));
      }
      if (invariant) inv.insert(x);
    }
    CHECK(inv == central_elements(m.model));
  }
}
