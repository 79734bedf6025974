#include <doctest.h>

#include "algmono/aomoto.hpp"

using namespace algmono;

namespace {

Presentation pres(std::vector<std::string> names, std::vector<std::string> rels) {
  Presentation gens_only(names, {});
  std::vector<Word> words;
  for (const auto& r : rels) words.push_back(gens_only.parse_word(r));
  return Presentation(names, words);
}

KVector kv(std::initializer_list<long> xs, FieldSpec f = {}) {
  KVector v;
  for (long x : xs) v.push_back(Scalar::in(f, x));
  return v;
}

const Presentation kTorus = pres({"a", "b"}, {"a b a^-1 b^-1"});
const Presentation kGenus2 = pres({"a1", "b1", "a2", "b2"}, {"a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1"});
const Presentation kFree2({"a", "b"}, {});

}  // namespace

TEST_CASE("cohomology basis") {
  CohomologyBasis t = cohomology_basis(kTorus);
  CHECK(t.h1_basis.size() == 2);
  CHECK(t.h2_dim == 1);
  CohomologyBasis tre = cohomology_basis(pres({"a", "b"}, {"a b a b^-1 a^-1 b^-1"}));
  CHECK(tre.h1_basis.size() == 1);
  CHECK(tre.h2_dim == 0);
  CohomologyBasis c3 = cohomology_basis(pres({"a"}, {"a^3"}), FieldSpec::prime(3));
  CHECK(c3.h1_basis.size() == 1);
  CHECK(c3.h2_dim == 1);
  CHECK(t.is_coboundary(kv({0})) == true);
  CHECK_FALSE(t.is_coboundary(kv({1})));
}

TEST_CASE("cup_evaluate") {
  SUBCASE("torus") {
    CHECK(cup_evaluate(kTorus, kv({1, 0}), kv({0, 1})) == kv({1}));
    CHECK(cup_evaluate(kTorus, kv({0, 1}), kv({1, 0})) == kv({-1}));
  }
  SUBCASE("nu cup nu is a coboundary") {
    CohomologyBasis coh = cohomology_basis(kTorus);
    CHECK(coh.is_coboundary(cup_evaluate(kTorus, kv({1, 0}), kv({1, 0}))));
    CHECK(coh.is_coboundary(cup_evaluate(kTorus, kv({2, -3}), kv({2, -3}))));
    Presentation c3 = pres({"a"}, {"a^3"});
    CohomologyBasis c3h = cohomology_basis(c3, FieldSpec::prime(3));
    CHECK(c3h.is_coboundary(cup_evaluate(c3, kv({1}, FieldSpec::prime(3)), kv({1}, FieldSpec::prime(3)))));
  }
  SUBCASE("genus 2 symplectic form") {
    CHECK(cup_evaluate(kGenus2, kv({1, 0, 0, 0}), kv({0, 1, 0, 0})) == kv({1}));
    CHECK(cup_evaluate(kGenus2, kv({1, 0, 0, 0}), kv({0, 0, 1, 0})) == kv({0}));
    CHECK(cup_evaluate(kGenus2, kv({0, 0, 1, 0}), kv({0, 0, 0, 1})) == kv({1}));
  }
  SUBCASE("non-cocycles are rejected") {
    Presentation tre = pres({"a", "b"}, {"a b a b^-1 a^-1 b^-1"});
    CHECK_THROWS_AS(cup_evaluate(tre, kv({1, 0}), kv({1, 1})), NotACocycleError);
    CHECK_THROWS_AS(cup_evaluate(tre, kv({1, 1}), kv({0, 1})), NotACocycleError);
  }
}

TEST_CASE("aomoto_complex examples") {
  SUBCASE("torus") {
    AomotoComplex a = aomoto_complex(kTorus, {{1, 0}});
    CHECK(a.beta0 == 0);
    CHECK(a.beta1 == 0);
    CHECK(a.beta2_complex == 0);
    CHECK(a.complex_condition);
  }
  SUBCASE("free group") {
    AomotoComplex a = aomoto_complex(kFree2, {{1, 0}});
    CHECK(a.beta1 == 1);
    CHECK(a.h2_dim == 0);
  }
  SUBCASE("genus 2") {
    for (ZMap nu : {ZMap{{1, 0, 0, 0}}, ZMap{{0, 0, 0, 1}}, ZMap{{2, 3, -1, 5}}}) {
      AomotoComplex a = aomoto_complex(kGenus2, nu);
      CHECK(a.beta0 == 0);
      CHECK(a.beta1 == 2);
    }
  }
  SUBCASE("over F2 and F3") {
    CHECK(aomoto_complex(kTorus, {{1, 0}}, FieldSpec::prime(2)).beta1 == 0);
    CHECK(aomoto_complex(kGenus2, {{1, 0, 0, 0}}, FieldSpec::prime(3)).beta1 == 2);
  }
  SUBCASE("map12 composed with map01 vanishes") {
    AomotoComplex a = aomoto_complex(kGenus2, {{1, 1, 0, 0}});
    CohomologyBasis coh = cohomology_basis(kGenus2);
    CHECK(coh.is_coboundary(cup_evaluate(kGenus2, a.nu_class, a.nu_class)));
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(aomoto_complex(kTorus, {{2, 0}}), ValidationError);
  }
}

TEST_CASE("resonance_membership") {
  CHECK_FALSE(resonance_membership(kTorus, kv({1, 0})));
  CHECK(resonance_membership(kFree2, kv({1, 0})));
  CHECK(resonance_membership(kGenus2, kv({1, 0, 0, 0})));
  KVector half{Scalar::parse("1/2"), Scalar(0)};
  CHECK(resonance_membership(kFree2, half));
  CHECK_THROWS_AS(resonance_membership(kTorus, kv({0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(resonance_membership(pres({"a", "b"}, {"a b a b^-1 a^-1 b^-1"}), kv({1, 0})), NotACocycleError);
}
