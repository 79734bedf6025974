#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "algmono/aomoto.hpp"
#include "algmono/constructions.hpp"
#include "algmono/covers.hpp"

namespace algmono {

using Json = nlohmann::ordered_json;

/// NO_OBSTRUCTION means only that none of the implemented rules fired; nothing
/// here ever certifies formality.
enum class Conclusion { NotOneFormal, NotFormal, NoObstruction, Inconclusive };

std::string to_string(Conclusion c);

struct RuleCitation {
  std::string id;
  std::string citation;
  std::string statement;
};

/// Rule catalogue entries ("R1", "R2", "R3-bundle", "R3-fibration", "R4", "R5",
/// "L-b1", "E-formal", "C-aomoto").
const RuleCitation& rule(const std::string& id);

struct BetaSummary {
  std::size_t beta0 = 0;
  std::size_t beta1 = 0;
  std::size_t beta2_complex = 0;
};

struct Verdict {
  Conclusion conclusion = Conclusion::Inconclusive;
  /// What the conclusion is about, e.g. "G", "pi1(X)", "M".
  std::string subject;
  std::vector<RuleCitation> rules;
  /// Checked or attested facts, in insertion order.
  Json hypotheses = Json::object();
  std::optional<JordanReport> blocks;
  std::optional<BetaSummary> betas;
  std::vector<LaurentPoly> invariant_factors;
  std::optional<std::size_t> free_rank;
  /// Further conclusions implied by the first one (see escalate).
  std::vector<std::pair<Conclusion, std::string>> consequences;
  std::string explanation;

  bool fired() const { return conclusion == Conclusion::NotOneFormal || conclusion == Conclusion::NotFormal; }
};

Json to_json(const Verdict& v);
Json to_json(const JordanReport& r);
/// Deterministic serialization (stable key order, 2-space indent).
std::string serialize(const Verdict& v);

/// Special case of the extension theorem on (P, nu) over k (default Q).
Verdict rule_R1_special(const Presentation& p, const ZMap& nu, FieldSpec field = {});

/// Two-extension scenario through the composite map; needs the attestations
/// "b1N_finite" and "b1K_finite".
Verdict rule_R2_composite(const CompositeScenario& scenario, FieldSpec field = {});

enum class BundleScenario {
  /// M -> U_phi with closed connected fiber over a mapping torus of a closed manifold.
  BundleOverMappingTorus,
  /// F -> X -> S^1 with connected fiber of finite 2-skeleton.
  FibrationOverCircle,
};

/// Attestation keys required by rule R3 for a scenario.
std::vector<std::string> required_attestations(BundleScenario s);

Verdict rule_R3_bundle(const JordanReport& report, BundleScenario scenario, const Attestations& attestations);

struct ThreeManifoldFlags {
  bool closed = false;
  bool orientable = false;
  bool fibers_over_circle = false;
  /// b1(M) when supplied by the user; must match the Wang-sequence count.
  std::optional<long> b1_total;
};

/// Parity / block rules for closed orientable 3-manifolds fibering over S^1.
/// Throws std::invalid_argument when a supplied b1(M) contradicts the blocks.
Verdict rule_R4_R5_three_manifold(const JordanReport& report, const ThreeManifoldFlags& flags);

struct CrosscheckRow {
  FieldSpec field;
  std::size_t beta1 = 0;
  bool torsion = false;
  int max_block = 0;
  std::vector<int> blocks;
  bool beta1_vanishes = false;
  bool module_condition = false;
  bool agree = false;
};

struct CrosscheckReport {
  std::vector<CrosscheckRow> rows;
  bool all_agree() const;
};

/// beta_1 = 0  <=>  (H_1 of the cover is torsion with (t-1)-blocks of size <= 1),
/// for every field.
CrosscheckReport crosscheck_equivalence(const Presentation& p, const ZMap& nu, const std::vector<FieldSpec>& fields);

Json to_json(const CrosscheckReport& r);

/// A NOT_1_FORMAL verdict about pi1 of a named space also rules out formality
/// of the space. Other verdicts, or verdicts without a space, are unchanged.
Verdict escalate(Verdict v, const std::optional<std::string>& space);

}  // namespace algmono
