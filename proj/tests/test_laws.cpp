#include <doctest.h>

#include <fstream>
#include <set>

#include "gpea/construct.hpp"
#include "gpea/corpus.hpp"
#include "gpea/errors.hpp"
#include "gpea/laws.hpp"

using namespace gpea;

TEST_CASE("registry matches the checked-in manifest") {
  std::ifstream in(std::string(GPEA_DOCS_DIR) + "/laws.txt");
  REQUIRE(in);
  std::vector<std::string> listed;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') listed.push_back(line);
  }
  std::vector<std::string> registered;
  for (const auto& l : law_registry()) registered.push_back(l.id);
  CHECK(listed == registered);
  CHECK(std::set<std::string>(registered.begin(), registered.end()).size() == registered.size());
  for (const auto& l : law_registry()) CHECK_FALSE(l.statement.empty());
}

TEST_CASE("every law holds on the one-element model") {
  for (const auto& r : verify_laws(chain(1), "e1")) {
    CAPTURE(r.law_id);
    CHECK(r.pass);
    CHECK(r.model_id == "e1");
  }
}

TEST_CASE("selection and ordering") {
  const auto rs = verify_laws(model_d4(), "d4", {"EXCprop.iv", "gpea", "decompos"});
  REQUIRE(rs.size() == 3);
  CHECK(rs[0].law_id == "gpea");
  CHECK(rs[1].law_id == "EXCprop.iv");
  CHECK(rs[2].law_id == "decompos");
  CHECK_THROWS_AS(verify_laws(model_d4(), "d4", {"no-such-law"}), UsageError);
}

TEST_CASE("laws hold on small and non-commutative models") {
  std::vector<NamedModel> models = {{"d4", model_d4()}, {"v3", model_v3()}};
  const auto five = enumerate_gpeas(5);
  for (std::size_t k = 0; k < five.size(); ++k) models.push_back({"enum-5-" + std::to_string(k + 1), five[k]});
  for (const auto& m : models) {
    for (const auto& r : verify_laws(m.model, m.id)) {
      CAPTURE(r.law_id);
      CAPTURE(r.model_id);
      CAPTURE(r.witness);
      CHECK(r.pass);
      CHECK(r.exhaustive);
    }
  }
}

TEST_CASE("results are reproducible") {
  const FiniteGpea big = cone_interval(2, {3, 5});
  const std::vector<std::string> sel = {"fourclosures", "QK.ii", "QK.iv"};
  const auto a = verify_laws(big, "c", sel);
  const auto b = verify_laws(big, "c", sel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].pass == b[i].pass);
    CHECK(a[i].witness == b[i].witness);
    CHECK_FALSE(a[i].exhaustive);
  }
}
