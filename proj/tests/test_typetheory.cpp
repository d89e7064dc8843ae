#include <doctest.h>

#include "gpea/axioms.hpp"
#include "gpea/center.hpp"
#include "gpea/construct.hpp"
#include "gpea/corpus.hpp"
#include "gpea/cover.hpp"
#include "gpea/errors.hpp"
#include "gpea/typetheory.hpp"
#include "oracles.hpp"

using namespace gpea;

namespace {

struct Setup {
  FiniteGpea e;
  CoverSystem covers;
  ElementSet center;
  explicit Setup(FiniteGpea m) : e(m), covers(m), center(central_elements(m)) {}
  TdContext ctx(ElementSet k) const { return td_context(e, covers, center, k); }
  std::size_t zero() const { return covers.gex().zero(); }
  std::size_t one() const { return covers.gex().one(); }
};

}  // namespace

TEST_CASE("closure operators") {
  const Setup d4(model_d4()), v3(model_v3());
  CHECK(closure_gamma(d4.e, d4.covers, ElementSet{}) == ElementSet{0});
  CHECK(closure_gamma(d4.e, d4.covers, ElementSet{1, 2}) == ElementSet{0, 1, 2, 3});
  CHECK(closure_gamma(v3.e, v3.covers, ElementSet{1, 2}) == ElementSet{0, 1, 2});
  CHECK(gamma_image(d4.covers, ElementSet{0}) == ElementSet{0});
  CHECK(gamma_image(d4.covers, ElementSet{3}) == ElementSet{0, 1, 2, 3});
  CHECK(disjoint_complement(v3.e, ElementSet{}) == v3.e.all());
  CHECK(disjoint_complement(d4.e, ElementSet{1}) == ElementSet{0, 2});
  CHECK(double_complement(d4.e, ElementSet{1}) == ElementSet{0, 1});
  CHECK(downset(d4.e, ElementSet{1}) == ElementSet{0, 1});
}

TEST_CASE("fixpoint closure equals the family closure") {
  for (const auto& m : corpus(4)) {
    if (m.model.size() > 6) continue;
    CAPTURE(m.id);
    const Setup s(m.model);
    const auto gamma = oracle::covers(m.model, oracle::exocenter(m.model));
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m.model.size()); ++bits) {
      const ElementSet q = ElementSet::from_bits(bits);
      CHECK(closure_gamma(s.e, s.covers, q) == oracle::family_closure(m.model, gamma, q));
    }
  }
}

TEST_CASE("TD and STD sets") {
  const Setup d4(model_d4()), v3(model_v3());
  CHECK(is_td(d4.e, d4.covers, ElementSet{0}));
  CHECK(td_generated(d4.e, d4.covers, ElementSet{3}) == d4.e.all());
  CHECK_FALSE(is_td(d4.e, d4.covers, ElementSet{0, 3}));
  CHECK(std_generated(v3.e, v3.covers, ElementSet{1}) == ElementSet{0, 1});
  for (const auto& m : corpus(4)) {
    const Setup s(m.model);
    CHECK(is_td(s.e, s.covers, s.center));
    const ElementSet comm = tdset_from_pea_class(s.e, is_commutative);
    CHECK(is_td(s.e, s.covers, comm));
    CHECK(is_std(s.e, s.covers, comm));
    CHECK(tdset_from_pea_class(s.e, [](const FiniteGpea&) { return true; }) == s.e.all());
  }
  CHECK(tdset_from_pea_class(d4.e, is_boolean_lattice) == d4.e.all());
  CHECK(tdset_from_pea_class(chain(3), is_boolean_lattice) == ElementSet{0, 1});
  for (const auto& m : enumerate_gpeas(5)) {
    const Setup s(m);
    CHECK(is_std(s.e, s.covers, tdset_from_pea_class(s.e, is_commutative)));
  }
}

TEST_CASE("TD contexts") {
  const Setup d4(model_d4()), v3(model_v3());
  const TdContext zero = d4.ctx(ElementSet{0});
  CHECK(zero.gamma_k == d4.zero());
  CHECK(zero.k_star == 0);
  const TdContext all = d4.ctx(d4.e.all());
  CHECK(all.gamma_k == d4.one());
  CHECK(all.k_tilde == d4.e.all());
  CHECK(all.gamma_k_tilde == d4.one());
  CHECK(all.k_star == 3);
  const TdContext v = v3.ctx(v3.e.all());
  CHECK(v.gamma_k == v3.one());
  CHECK(v.k_tilde == ElementSet{0});
  CHECK(v.gamma_k_tilde == v3.zero());
  CHECK_THROWS_AS(d4.ctx(ElementSet{0, 3}), DomainError);
}

TEST_CASE("type flags") {
  const Setup v3(model_v3());
  const TdContext v = v3.ctx(v3.e.all());
  const TypeFlags z = classify(v3.covers, v, v3.zero());
  CHECK((z.type_k && z.locally_type_k && z.purely_non_k && z.properly_non_k));
  const TypeFlags id = classify(v3.covers, v, v3.one());
  CHECK(id.locally_type_k);
  CHECK_FALSE(id.type_k);
  CHECK_FALSE(id.purely_non_k);
  CHECK(id.properly_non_k);
  for (const auto& m : corpus(4)) {
    const Setup s(m.model);
    const TdContext c = s.ctx(s.center);
    const std::size_t comp = s.covers.gex().complement(c.gamma_k);
    CHECK(classify(s.covers, c, comp).purely_non_k);
    for (std::size_t p = 0; p < s.covers.gex().size(); ++p) {
      const TypeFlags f = classify(s.covers, c, p);
      CHECK((!f.type_k || f.locally_type_k));
      CHECK((!f.purely_non_k || f.properly_non_k));
    }
  }
}

TEST_CASE("faithful elements and k sharp") {
  const Setup v3(model_v3()), d4(model_d4());
  CHECK(faithful(v3.covers, 1));
  CHECK_FALSE(faithful(d4.covers, 1));
  CHECK(faithful(d4.covers, 3));
  const TdContext c = d4.ctx(d4.e.all());
  CHECK(k_sharp(d4.covers, c, c.gamma_k) == c.k_star);
  CHECK(k_sharp(d4.covers, c, d4.zero()) == 0);
}

TEST_CASE("fundamental decomposition") {
  const Setup d4(model_d4()), v3(model_v3());
  const Fundamental z = fundamental_decomposition(d4.covers, d4.ctx(ElementSet{0}));
  CHECK((z.pi1 == d4.zero() && z.pi2 == d4.zero() && z.pi3 == d4.one()));
  const Fundamental a = fundamental_decomposition(d4.covers, d4.ctx(d4.e.all()));
  CHECK((a.pi1 == d4.one() && a.pi2 == d4.zero() && a.pi3 == d4.zero()));
  const Fundamental v = fundamental_decomposition(v3.covers, v3.ctx(v3.e.all()));
  CHECK((v.pi1 == v3.zero() && v.pi2 == v3.one() && v.pi3 == v3.zero()));
}

TEST_CASE("type I, II, III") {
  const Setup v3(model_v3()), d4(model_d4());
  const TdContext none = v3.ctx(ElementSet{0});
  const TdContext all = v3.ctx(v3.e.all());
  const DecompositionReport r = type_i_ii_iii(v3.covers, none, all);
  CHECK((r.pi_i == v3.zero() && r.pi_ii == v3.one() && r.pi_iii == v3.zero()));
  const DecompositionReport same = type_i_ii_iii(v3.covers, none, none);
  CHECK(same.pi_iii == v3.one());
  CHECK(same.pi_ii == v3.zero());
  const TdContext d = d4.ctx(d4.e.all());
  const DecompositionReport dd = type_i_ii_iii(d4.covers, d, d);
  CHECK(dd.pi_ii == d4.zero());
  CHECK(dd.pi_i_f == d.gamma_k_tilde);
  CHECK_THROWS_AS(type_i_ii_iii(v3.covers, all, none), DomainError);
}
