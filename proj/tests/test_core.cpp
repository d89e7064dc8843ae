#include <doctest.h>

#include "gpea/axioms.hpp"
#include "gpea/construct.hpp"
#include "gpea/corpus.hpp"
#include "gpea/model_file.hpp"
#include "oracles.hpp"

using namespace gpea;
using Opt = std::optional<Element>;

TEST_CASE("element sets") {
  ElementSet s{0, 3, 5};
  CHECK(s.size() == 3);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(4));
  CHECK(ElementSet{0, 3}.subset_of(s));
  CHECK((s - ElementSet{3}) == ElementSet{0, 5});
  CHECK(s.elements() == std::vector<Element>{0, 3, 5});
  CHECK(ElementSet::full(64).size() == 64);
}

TEST_CASE("order and differences on D4") {
  const FiniteGpea d4 = model_d4();
  CHECK(d4.leq(1, 3));
  CHECK_FALSE(d4.leq(1, 2));
  CHECK(d4.right_diff(1, 3) == Opt(2));
  CHECK(d4.left_diff(1, 3) == Opt(2));
  CHECK(d4.ominus(3, 1) == Opt(2));
  CHECK(d4.meet(1, 2) == Opt(0));
  CHECK(d4.join(1, 2) == Opt(3));
  CHECK(d4.top() == Opt(3));
  CHECK(d4.atoms() == ElementSet{1, 2});
  CHECK(d4.perp(1, 2));
  for (Element a = 0; a < 4; ++a) {
    for (Element b = 0; b < 4; ++b) CHECK(d4.leq(a, b) == oracle::leq(d4, a, b));
  }
}

TEST_CASE("V3 has no supremum of its atoms") {
  const FiniteGpea v3 = model_v3();
  CHECK_FALSE(v3.sup(ElementSet{1, 2}).has_value());
  CHECK_FALSE(v3.join(1, 2).has_value());
  CHECK(v3.meet(1, 2) == Opt(0));
  CHECK_FALSE(v3.top().has_value());
  CHECK(v3.sup(ElementSet{}) == Opt(0));
}

TEST_CASE("orthosum of families") {
  const FiniteGpea d4 = model_d4();
  const std::vector<Element> ab{1, 2}, aa{1, 1}, none{};
  CHECK(d4.orthosum(ab) == Opt(3));
  CHECK_FALSE(d4.orthosum(aa).has_value());
  CHECK(d4.orthosum(none) == Opt(0));
  const FiniteGpea c4 = chain(4);
  const std::vector<Element> ones{1, 1, 1};
  CHECK(c4.orthosum(ones) == Opt(3));
}

TEST_CASE("model files") {
  SUBCASE("absent sums stay undefined") {
    const FiniteGpea e2 = parse_model("gpea 2\n");
    CHECK(e2.size() == 2);
    CHECK_FALSE(e2.defined(1, 1));
  }
  SUBCASE("D4 with 3 as top") {
    const FiniteGpea d4 = parse_model("gpea 4\nsum 1 2 3\nsum 2 1 3\n");
    CHECK(d4.top() == Opt(3));
    CHECK(is_isomorphic(d4, model_d4()).has_value());
  }
  SUBCASE("positivity violation is reported") {
    try {
      parse_model("gpea 2\nsum 1 1 0\n");
      FAIL("accepted");
    } catch (const InvalidModel& e) {
      CHECK(e.report().first("GPEA4").has_value());
    }
  }
  SUBCASE("syntax errors carry line numbers") {
    try {
      parse_model("# c\ngpea 3\nsum 1 1 2\nsum 1 1 1\n");
      FAIL("accepted");
    } catch (const ModelSyntaxError& e) {
      CHECK(e.line() == 4);
    }
    CHECK_THROWS_AS(parse_model("sum 1 1 1\n"), ModelSyntaxError);
    CHECK_THROWS_AS(parse_model("gpea 2\nsum 1 1 2\n"), ModelSyntaxError);
    CHECK_THROWS_AS(parse_model("gpea 2\nfoo\n"), ModelSyntaxError);
    CHECK_THROWS_AS(parse_model("gpea 2\nlabels x\n"), ModelSyntaxError);
    CHECK_THROWS_AS(parse_model(""), ModelSyntaxError);
  }
  SUBCASE("duplicate lines that agree are accepted") {
    CHECK(parse_model("gpea 3\nsum 1 1 2\nsum 1 1 2\n").defined(1, 1));
  }
  SUBCASE("serialization is canonical and round-trips") {
    for (const auto& m : constructed_models()) {
      const std::string text = serialize_model(m.model);
      CHECK(text.find("sum 0 ") == std::string::npos);
      const FiniteGpea back = parse_model(text);
      CHECK(back.table() == m.model.table());
      CHECK(serialize_model(back) == text);
    }
    const std::string d4 = serialize_model(model_d4());
    CHECK(d4 == "gpea 4\nlabels 0 a b 1\nsum 1 2 3\nsum 2 1 3\n");
  }
}
