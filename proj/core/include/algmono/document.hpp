#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algmono/groups.hpp"

namespace algmono {

/// Error at a specific line of an input document.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class Scenario {
  None,
  MappingTorus,      // monodromy of U -> U_phi -> S^1, bundle M -> U_phi
  FiberedLink,       // fibration F -> X -> S^1 of a link exterior
  BaseLocalization,  // fibration f^-1(D*) -> D* of a plane polynomial
  Fibration,         // generic fibration over the circle
  ClosedThreeManifold,
  Composite,         // two-extension scenario on a presentation
};

Scenario parse_scenario(const std::string& text);
std::string to_string(Scenario s);

/// Attestation key -> free-text justification. Presence means "attested true".
using Attestations = std::map<std::string, std::string>;

template <class T>
struct Located {
  T value;
  std::size_t line = 0;
};

/// Line-oriented input document:
///
///   gens: a b              generator names
///   rel: a b a^-1 b^-1     one relator per line (or `rels:` with ';' separators)
///   nu: a=1 b=0            homomorphism to Z
///   field: Q | F<p>
///   matrix: 1 1 ; 0 1      rows separated by ';'
///   lambda: 1
///   scenario: ...          mapping-torus | fibered-link | base-localization |
///                          fibration | closed-3-manifold | composite
///   attest: key text...    hypothesis supplied by the user
///   space: X               name of the space whose group is analyzed
///   b1M: 3                 first Betti number of the total space, if known
///   map: y -> y z          automorphism image of a generator
///   expect: key=value ...  corpus expectations
///   origin: text, tags: a b, name: x
///
/// `#` starts a comment. Keys may repeat only where noted.
struct InputDocument {
  std::string name;
  std::optional<Located<std::vector<std::string>>> gens;
  std::vector<Located<std::string>> rels;
  std::optional<Located<std::string>> nu;
  FieldSpec field;
  std::optional<Located<std::string>> matrix;
  std::optional<Located<std::string>> lambda;
  Scenario scenario = Scenario::None;
  Attestations attest;
  std::optional<std::string> space;
  std::optional<Located<long>> b1_total;
  std::vector<Located<std::pair<std::string, std::string>>> maps;
  std::map<std::string, std::string> expect;
  std::string origin;
  std::vector<std::string> tags;
  std::size_t first_line = 1;

  bool has_presentation() const { return gens.has_value(); }
  bool has_matrix() const { return matrix.has_value(); }
};

/// Parses a document; every malformed line raises ParseError with its line
/// number (counted from `first_line`).
InputDocument parse_document(const std::string& text, std::size_t first_line = 1);

/// Exactly one of {presentation form, matrix form} must be present.
void require_single_form(const InputDocument& doc);

Presentation presentation_of(const InputDocument& doc, std::vector<std::string>* warnings = nullptr);
ZMap zmap_of(const InputDocument& doc, const Presentation& p);
KMatrix rational_matrix_of(const InputDocument& doc);
IntMatrix integer_matrix_of(const InputDocument& doc);
Scalar lambda_of(const InputDocument& doc);
/// Images of the generators of `base` from `map:` lines; generators without a
/// line map to themselves.
std::vector<Word> automorphism_images_of(const InputDocument& doc, const Presentation& base);

/// Writes a presentation (and optional homomorphism) in document syntax.
std::string format_document(const Presentation& p, const ZMap* nu, FieldSpec field = {},
                            const std::vector<std::string>& comments = {});

/// Corpus files concatenate documents under `[entry <name>]` headers.
std::vector<InputDocument> parse_corpus(const std::string& text);

}  // namespace algmono
