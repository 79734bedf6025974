#pragma once

#include <string>
#include <vector>

#include "algmono/covers.hpp"
#include "algmono/document.hpp"

namespace algmono {

/// Images of the base generators under a group automorphism. Only the
/// abelianized necessary condition (invertible over Z) can be checked, so
/// outputs are marked as attested rather than verified.
struct Automorphism {
  std::vector<Word> images;
  bool attested = true;
};

/// Column i = exponent sums of phi(x_i).
IntMatrix abelianized_matrix(const Presentation& base, const Automorphism& phi);

/// <x1..xn | [xi, xj], i < j>.
Presentation free_abelian_presentation(std::size_t n);
Presentation free_abelian_presentation(const std::vector<std::string>& names);
/// Automorphism of Z^n with x_i -> prod_j x_j^a(j, i).
Automorphism automorphism_from_matrix(const IntMatrix& a);

struct MappingTorus {
  Presentation presentation;
  ZMap nu;
  std::string stable_letter;
  bool attested = true;
};

/// Adds a stable letter s and relators s x_i s^-1 phi(x_i)^-1; nu = (0, ..., 0, 1).
/// Throws NotInvertibleError when the abelianized image matrix is not in GL_n(Z).
MappingTorus mapping_torus_presentation(const Presentation& base, const Automorphism& phi);

/// Two-extension scenario reduced to the composite map mu = nu o chi on pi.
struct CompositeScenario {
  Presentation pi;
  ZMap mu;
  Attestations attestations;
};

/// Validates mu and packages the scenario.
CompositeScenario compose_to_Z(const Presentation& pi, const ZMap& mu, const Attestations& attestations);

struct CorpusEntry {
  std::string name;
  InputDocument document;
  std::vector<std::string> tags;
  /// Expected values keyed by quantity (blocks, beta1, verdict, ...).
  std::map<std::string, std::string> expected;
  std::string origin;
};

/// The bundled example corpus.
std::vector<CorpusEntry> load_corpus();
std::vector<CorpusEntry> load_corpus(const std::string& text);
const std::string& bundled_corpus_text();

}  // namespace algmono
