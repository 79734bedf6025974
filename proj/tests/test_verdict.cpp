#include <doctest.h>

#include "algmono/verdict.hpp"

using namespace algmono;

namespace {

Presentation pres(std::vector<std::string> names, std::vector<std::string> rels) {
  Presentation gens_only(names, {});
  std::vector<Word> words;
  for (const auto& r : rels) words.push_back(gens_only.parse_word(r));
  return Presentation(names, words);
}

const Presentation kHeis = pres({"y", "z", "s"}, {"y z y^-1 z^-1", "s y s^-1 z^-1 y^-1", "s z s^-1 z^-1"});
const Presentation kTorus3 = pres({"y", "z", "s"}, {"y z y^-1 z^-1", "s y s^-1 y^-1", "s z s^-1 z^-1"});
const Presentation kTrefoil = pres({"a", "b"}, {"a b a b^-1 a^-1 b^-1"});
const Presentation kTorus = pres({"a", "b"}, {"a b a^-1 b^-1"});
const Attestations kBoth{{"b1N_finite", "given"}, {"b1K_finite", "given"}};
const Attestations kFiber{{"fiber-connected", "given"}, {"fiber-finite-2-skeleton", "given"}};
const Attestations kBundle{{"base-closed-connected", "given"}, {"fiber-closed-connected", "given"}};
const ThreeManifoldFlags kFlags{true, true, true, std::nullopt};

}  // namespace

TEST_CASE("rule catalogue") {
  for (const char* id : {"R1", "R2", "R3-bundle", "R3-fibration", "R4", "R5", "L-b1", "E-formal", "C-aomoto"}) {
    CAPTURE(id);
    CHECK(rule(id).id == id);
    CHECK_FALSE(rule(id).citation.empty());
    CHECK_FALSE(rule(id).statement.empty());
  }
  CHECK_THROWS(rule("R9"));
}

TEST_CASE("R1") {
  Verdict h = rule_R1_special(kHeis, {{0, 0, 1}});
  CHECK(h.conclusion == Conclusion::NotOneFormal);
  CHECK(h.blocks->block_sizes == std::vector<int>{2});
  CHECK(h.fired());
  CHECK(h.hypotheses["b1N_finite"] == true);
  CHECK(h.hypotheses["maxBlock"] == 2);
  CHECK(h.rules.front().id == "R1");
  CHECK(rule_R1_special(kTrefoil, {{1, 1}}).conclusion == Conclusion::NoObstruction);
  Verdict f = rule_R1_special(Presentation({"a", "b"}, {}), {{1, 0}});
  CHECK(f.conclusion == Conclusion::Inconclusive);
  CHECK(f.hypotheses["b1N_finite"] == false);
  CHECK_THROWS_AS(rule_R1_special(kTorus, {{2, 4}}), ValidationError);
}

TEST_CASE("R2") {
  Verdict h = rule_R2_composite(compose_to_Z(kHeis, {{0, 0, 1}}, kBoth));
  CHECK(h.conclusion == Conclusion::NotOneFormal);
  CHECK(h.subject == "pi");
  CHECK(h.hypotheses.contains("b1Gamma_finite_derived"));
  CHECK(rule_R2_composite(compose_to_Z(kTorus3, {{0, 0, 1}}, kBoth)).conclusion == Conclusion::NoObstruction);
  Verdict missing = rule_R2_composite(compose_to_Z(kHeis, {{0, 0, 1}}, {{"b1N_finite", "given"}}));
  CHECK(missing.conclusion == Conclusion::Inconclusive);
  CHECK(missing.explanation.find("b1K_finite") != std::string::npos);
}

TEST_CASE("R3") {
  JordanReport big = JordanReport::from_blocks({2, 2});
  Verdict link = rule_R3_bundle(big, BundleScenario::FibrationOverCircle, kFiber);
  CHECK(link.conclusion == Conclusion::NotOneFormal);
  CHECK(link.subject == "pi1(X)");
  Verdict bundle = rule_R3_bundle(JordanReport::from_blocks({2}), BundleScenario::BundleOverMappingTorus, kBundle);
  CHECK(bundle.conclusion == Conclusion::NotFormal);
  REQUIRE(bundle.consequences.size() == 1);
  CHECK(bundle.consequences[0].first == Conclusion::NotOneFormal);
  CHECK(rule_R3_bundle(JordanReport::from_blocks({1, 1}), BundleScenario::FibrationOverCircle, kFiber).conclusion ==
        Conclusion::NoObstruction);
  CHECK(rule_R3_bundle(big, BundleScenario::FibrationOverCircle, {}).conclusion == Conclusion::Inconclusive);
  CHECK(rule_R3_bundle(big, BundleScenario::BundleOverMappingTorus, kFiber).conclusion == Conclusion::Inconclusive);
  CHECK(rule_R3_bundle(JordanReport::from_blocks({2}, Scalar(2)), BundleScenario::FibrationOverCircle, kFiber)
            .conclusion == Conclusion::Inconclusive);
}

TEST_CASE("R4 and R5 rule table") {
  Verdict one = rule_R4_R5_three_manifold(JordanReport::from_blocks({1}), kFlags);
  CHECK(one.conclusion == Conclusion::NotOneFormal);
  CHECK(one.hypotheses["b1M"] == 2);
  CHECK(one.rules.back().id == "R5");
  Verdict two = rule_R4_R5_three_manifold(JordanReport::from_blocks({1, 1}), kFlags);
  CHECK(two.conclusion == Conclusion::NoObstruction);
  CHECK(two.hypotheses["b1M"] == 3);
  CHECK(rule_R4_R5_three_manifold(JordanReport::from_blocks({2, 1, 1}), kFlags).conclusion == Conclusion::NotOneFormal);
  CHECK(rule_R4_R5_three_manifold(JordanReport::from_blocks({}), kFlags).conclusion == Conclusion::NoObstruction);
  CHECK(rule_R4_R5_three_manifold(JordanReport::from_blocks({1}), {true, false, true, std::nullopt}).conclusion ==
        Conclusion::Inconclusive);
  CHECK(rule_R4_R5_three_manifold(JordanReport::from_blocks({1, 1}), {true, true, true, 3}).conclusion ==
        Conclusion::NoObstruction);
  CHECK_THROWS_AS(rule_R4_R5_three_manifold(JordanReport::from_blocks({1, 1}), {true, true, true, 4}),
                  std::invalid_argument);
}

TEST_CASE("crosscheck") {
  auto heis = crosscheck_equivalence(kHeis, {{0, 0, 1}}, {FieldSpec{}});
  CHECK(heis.all_agree());
  CHECK(heis.rows[0].beta1 > 0);
  CHECK(heis.rows[0].max_block == 2);
  auto torus = crosscheck_equivalence(kTorus, {{1, 0}}, {FieldSpec::prime(2)});
  CHECK(torus.all_agree());
  CHECK(torus.rows[0].beta1 == 0);
  CHECK(torus.rows[0].blocks == std::vector<int>{1});
  auto f2 = crosscheck_equivalence(Presentation({"a", "b"}, {}), {{1, 0}}, {FieldSpec{}});
  CHECK(f2.all_agree());
  CHECK(f2.rows[0].beta1 == 1);
  CHECK_FALSE(f2.rows[0].torsion);
  CHECK(to_json(f2)["allAgree"] == true);
}

TEST_CASE("escalate") {
  Verdict link = rule_R3_bundle(JordanReport::from_blocks({2, 2}), BundleScenario::FibrationOverCircle, kFiber);
  Verdict e = escalate(link, std::string("X"));
  REQUIRE(e.consequences.size() == 1);
  CHECK(e.consequences[0] == std::make_pair(Conclusion::NotFormal, std::string("X")));
  CHECK(e.rules.back().id == "E-formal");
  CHECK(escalate(e, std::string("X")).consequences.size() == 1);
  Verdict heis = rule_R1_special(kHeis, {{0, 0, 1}});
  CHECK(serialize(escalate(heis, std::nullopt)) == serialize(heis));
  Verdict t3 = rule_R1_special(kTorus3, {{0, 0, 1}});
  CHECK(serialize(escalate(t3, std::string("T3"))) == serialize(t3));
}

TEST_CASE("serialization schema and determinism") {
  Verdict v = rule_R1_special(kTrefoil, {{1, 1}});
  Json j = to_json(v);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"conclusion", "subject", "rules", "hypotheses", "evidence", "consequences",
                                         "explanation"});
  CHECK(j["rules"][0].contains("quote"));
  CHECK(j["evidence"]["invariantFactors"] == Json::parse(R"([["1","-1","1"]])"));
  CHECK(j["evidence"]["beta"] == Json::parse("[0,0,0]"));
  CHECK(serialize(v) == serialize(rule_R1_special(kTrefoil, {{1, 1}})));
}
