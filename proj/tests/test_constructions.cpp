#include <doctest.h>

#include <algorithm>

#include "algmono/constructions.hpp"
#include "algmono_tools/commands.hpp"

using namespace algmono;

namespace {

Presentation pres(std::vector<std::string> names, std::vector<std::string> rels) {
  Presentation gens_only(names, {});
  std::vector<Word> words;
  for (const auto& r : rels) words.push_back(gens_only.parse_word(r));
  return Presentation(names, words);
}

const Presentation kZ2 = pres({"y", "z"}, {"y z y^-1 z^-1"});

}  // namespace

TEST_CASE("document parsing") {
  InputDocument d = parse_document(
      "# comment\n"
      "name: demo\n"
      "gens: a b   # trailing comment\n"
      "rel: a b a^-1 b^-1\n"
      "rels: a^2 ; b^3\n"
      "nu: a=1 b=0\n"
      "field: F3\n"
      "attest: closed the manifold is closed\n"
      "space: X\n"
      "tags: one two\n");
  CHECK(d.name == "demo");
  CHECK(d.gens->value == std::vector<std::string>{"a", "b"});
  CHECK(d.rels.size() == 3);
  CHECK(d.rels[1].line == 5);
  CHECK(d.field == FieldSpec::prime(3));
  CHECK(d.attest.at("closed") == "the manifold is closed");
  CHECK(d.space == "X");
  CHECK(d.tags.size() == 2);
  Presentation p = presentation_of(d);
  CHECK(p.num_relators() == 3);
  CHECK(zmap_of(d, p).values == std::vector<long>{1, 0});
}

TEST_CASE("document errors carry line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      InputDocument d = parse_document(text);
      require_single_form(d);
      if (d.has_presentation()) zmap_of(d, presentation_of(d));
      else rational_matrix_of(d);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("gens: a\nbogus line\n") == 2);
  CHECK(line_of("gens: a\nfield: R\n") == 2);
  CHECK(line_of("gens: a b\nnu: a=1\n") == 2);
  CHECK(line_of("gens: a b\nnu: a=1 c=0\n") == 2);
  CHECK(line_of("gens: a b\nnu: 1 0 0\n") == 2);
  CHECK(line_of("gens: a b\n\nrel: a c\nnu: 1 0\n") == 3);
  CHECK(line_of("matrix: 1 2 ; 3\n") == 1);
  CHECK(line_of("matrix: 1 x\n") == 1);
  CHECK(line_of("gens: a\nmatrix: 1\n") > 0);
  CHECK(line_of("name: empty\n") > 0);
  CHECK(line_of("gens: a\nnu: 1\nscenario: sideways\n") == 3);
  CHECK(line_of("gens: a\ngens: b\n") == 2);
}

TEST_CASE("matrix documents") {
  InputDocument d = parse_document("matrix: 1 1/2 ; 0 1\nlambda: 1\n");
  KMatrix m = rational_matrix_of(d);
  CHECK(m(0, 1) == Scalar::parse("1/2"));
  CHECK(lambda_of(d) == Scalar(1));
  CHECK(lambda_of(parse_document("matrix: 1\n")) == Scalar(1));
  CHECK_THROWS_AS(integer_matrix_of(d), ParseError);
}

TEST_CASE("format_document round trip") {
  ZMap nu{{0, 1}};
  std::string text = format_document(kZ2, &nu, FieldSpec::prime(2), {"note"});
  InputDocument d = parse_document(text);
  Presentation p = presentation_of(d);
  CHECK(p.generator_names() == kZ2.generator_names());
  CHECK(p.relators() == kZ2.relators());
  CHECK(zmap_of(d, p) == nu);
  CHECK(d.field == FieldSpec::prime(2));
}

TEST_CASE("mapping_torus_presentation") {
  SUBCASE("Heisenberg from a shear") {
    Automorphism phi{{kZ2.parse_word("y z"), kZ2.parse_word("z")}};
    CHECK(abelianized_matrix(kZ2, phi) == IntMatrix({{1, 0}, {1, 1}}));
    MappingTorus mt = mapping_torus_presentation(kZ2, phi);
    CHECK(mt.presentation.num_generators() == 3);
    CHECK(mt.presentation.num_relators() == 3);
    CHECK(mt.nu.values == std::vector<long>{0, 0, 1});
    CHECK(mt.stable_letter == "s");
    CHECK(mt.attested);
    CHECK(cover_homology(mt.presentation, mt.nu).h1.t_minus_one_blocks == std::vector<int>{2});
  }
  SUBCASE("identity gives the 3-torus") {
    MappingTorus mt = mapping_torus_presentation(kZ2, Automorphism{{kZ2.parse_word("y"), kZ2.parse_word("z")}});
    CHECK(cover_homology(mt.presentation, mt.nu).h1.t_minus_one_blocks == std::vector<int>{1, 1});
    CHECK(aomoto_complex(mt.presentation, mt.nu).beta1 == 0);
  }
  SUBCASE("fibered automorphism of F2") {
    Presentation f2({"a", "b"}, {});
    Automorphism phi{{f2.parse_word("b"), f2.parse_word("a b")}};
    MappingTorus mt = mapping_torus_presentation(f2, phi);
    LambdaModule m = cover_homology(mt.presentation, mt.nu).h1;
    LambdaModule oracle = mapping_torus_oracle(IntMatrix({{0, 1}, {1, 1}}));
    CHECK(m.invariant_factors == oracle.invariant_factors);
    CHECK(m.t_minus_one_blocks.empty());
  }
  SUBCASE("stable letter avoids clashes") {
    Presentation base({"s", "s_"}, {});
    MappingTorus mt = mapping_torus_presentation(base, Automorphism{{base.parse_word("s"), base.parse_word("s_")}});
    CHECK(mt.stable_letter == "s__");
  }
  SUBCASE("non-invertible abelianization") {
    CHECK_THROWS_AS(mapping_torus_presentation(kZ2, Automorphism{{kZ2.parse_word("y^2"), kZ2.parse_word("z")}}),
                    NotInvertibleError);
    CHECK_THROWS_AS(mapping_torus_presentation(kZ2, Automorphism{{kZ2.parse_word("y")}}), std::invalid_argument);
  }
  SUBCASE("matrix automorphisms of free abelian groups") {
    Presentation z3 = free_abelian_presentation(3);
    CHECK(z3.num_relators() == 3);
    IntMatrix a({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
    MappingTorus mt = mapping_torus_presentation(z3, automorphism_from_matrix(a));
    CHECK(abelianized_matrix(z3, automorphism_from_matrix(a)) == a);
    CHECK(cover_homology(mt.presentation, mt.nu).h1.t_minus_one_blocks == std::vector<int>{3});
  }
}

TEST_CASE("compose_to_Z") {
  Presentation heis = pres({"y", "z", "s"}, {"y z y^-1 z^-1", "s y s^-1 z^-1 y^-1", "s z s^-1 z^-1"});
  CompositeScenario c = compose_to_Z(heis, {{0, 0, 1}}, {{"b1N_finite", "x"}});
  CHECK(c.mu.values == std::vector<long>{0, 0, 1});
  CHECK(c.attestations.size() == 1);
  CHECK_THROWS_AS(compose_to_Z(heis, {{0, 1, 0}}, {}), ValidationError);
}

TEST_CASE("bundled corpus") {
  std::vector<CorpusEntry> corpus = load_corpus();
  std::vector<std::string> names;
  for (const auto& e : corpus) names.push_back(e.name);
  for (const char* required : {"heisenberg", "torus3", "trefoil", "freeF2", "genus2", "linkMonodromy", "curveNode", "identity3"})
    CHECK(std::find(names.begin(), names.end(), required) != names.end());
  for (const auto& e : corpus) {
    CAPTURE(e.name);
    CHECK_FALSE(e.origin.empty());
    CHECK_FALSE(e.expected.empty());
  }
}

TEST_CASE("corpus regression") {
  for (const auto& e : load_corpus()) {
    CAPTURE(e.name);
    tools::Analysis a = tools::analyze_document(e.document);
    CHECK(tools::expectation_mismatches(a, e.expected).empty());
    if (a.crosscheck) CHECK(a.crosscheck->all_agree());
  }
}

TEST_CASE("malformed corpus text") {
  CHECK_THROWS_AS(load_corpus("[entry a]\ngens: a\nnu: 1\n[entry b]\nbad\n"), ParseError);
  CHECK_THROWS(load_corpus("gens: a\n"));
  CHECK(load_corpus("").empty());
}
