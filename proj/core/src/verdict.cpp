#include "algmono/verdict.hpp"

#include <map>

namespace algmono {

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::NotOneFormal: return "NOT_1_FORMAL";
    case Conclusion::NotFormal: return "NOT_FORMAL";
    case Conclusion::NoObstruction: return "NO_OBSTRUCTION";
    case Conclusion::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

const RuleCitation& rule(const std::string& id) {
  static const std::map<std::string, RuleCitation> catalogue = {
      {"R1",
       {"R1", "Jordan-block obstruction, single extension by Z",
        "G finitely presented and 1-formal, nu: G ->> Z, b1(ker nu) finite  =>  eigenvalue 1 of the monodromy on "
        "H1(ker nu; C) has only 1x1 Jordan blocks"}},
      {"R2",
       {"R2", "Jordan-block obstruction, iterated extensions",
        "1->N->G->Z->1 and 1->K->pi->G->1 with b1(N), b1(K) finite and pi finitely presented and 1-formal  =>  "
        "eigenvalue-1 Jordan blocks on H1(N; C) have size 1"}},
      {"R3-bundle",
       {"R3-bundle", "Formality obstruction for bundles over mapping tori",
        "M -> U_phi a fibration with closed connected fiber, U closed connected, phi_* on H1(U; C) with an "
        "eigenvalue-1 Jordan block of size > 1  =>  M is not formal and pi1(M) is not 1-formal"}},
      {"R3-fibration",
       {"R3-fibration", "1-formality obstruction for fibrations over the circle",
        "F -> X -> S^1 with F connected of finite 2-skeleton, h_* on H1(F; C) with an eigenvalue-1 Jordan block of "
        "size > 1  =>  pi1(X) is not 1-formal"}},
      {"R4",
       {"R4", "Eigenvalue-1 blocks of fibered closed 3-manifolds",
        "M closed orientable, fibered over S^1, pi1(M) 1-formal  =>  only 1x1 eigenvalue-1 blocks, an even number m "
        "of them, with b1(M) = m + 1 from the Wang sequence"}},
      {"R5",
       {"R5", "Parity criterion for fibered closed 3-manifolds (external result via the BNS invariant)",
        "M closed orientable, fibered over S^1, b1(M) even  =>  pi1(M) is not 1-formal"}},
      {"L-b1",
       {"L-b1", "Finiteness propagation along 1->K->Gamma->N->1 (Hochschild-Serre)",
        "b1(N) and b1(K) finite  =>  b1(Gamma) finite"}},
      {"L-primary",
       {"L-primary", "Primary parts under surjections",
        "a Lambda-linear surjection of torsion modules restricts to a surjection of (t-1)-primary parts, so "
        "blocks of size > 1 on H1(N) force blocks of size > 1 on H1(Gamma)"}},
      {"E-formal",
       {"E-formal", "Formal spaces have 1-formal fundamental groups",
        "X formal  =>  pi1(X) 1-formal; contrapositively pi1(X) not 1-formal  =>  X not formal"}},
      {"C-aomoto",
       {"C-aomoto", "Monodromy / Aomoto-Betti equivalence in degree 1",
        "H1(ker nu; k) finite-dimensional with no (t-1)-primary block of size > 1  <=>  beta1(G, nu_k) = 0"}},
  };
  return catalogue.at(id);
}

Json to_json(const JordanReport& r) {
  Json j;
  j["eigenvalue"] = r.eigenvalue.str();
  j["blocks"] = r.block_sizes;
  j["maxBlock"] = r.max_block;
  j["totalMultiplicity"] = r.total_multiplicity;
  if (!r.rank_sequence.empty()) j["rankSequence"] = r.rank_sequence;
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["conclusion"] = to_string(v.conclusion);
  j["subject"] = v.subject;
  Json rules = Json::array();
  for (const auto& r : v.rules) rules.push_back(Json{{"id", r.id}, {"citation", r.citation}, {"quote", r.statement}});
  j["rules"] = rules;
  j["hypotheses"] = v.hypotheses;
  Json ev = Json::object();
  if (v.blocks) ev["blocks"] = v.blocks->block_sizes;
  if (v.betas) ev["beta"] = {v.betas->beta0, v.betas->beta1, v.betas->beta2_complex};
  if (!v.invariant_factors.empty() || v.free_rank) {
    Json factors = Json::array();
    for (const auto& f : v.invariant_factors) factors.push_back(f.coeff_strings());
    ev["invariantFactors"] = factors;
  }
  if (v.free_rank) ev["freeRank"] = *v.free_rank;
  if (v.blocks && !v.blocks->rank_sequence.empty()) ev["rankSequence"] = v.blocks->rank_sequence;
  j["evidence"] = ev;
  Json cons = Json::array();
  for (const auto& [c, s] : v.consequences) cons.push_back(Json{{"conclusion", to_string(c)}, {"subject", s}});
  j["consequences"] = cons;
  j["explanation"] = v.explanation;
  return j;
}

std::string serialize(const Verdict& v) { return to_json(v).dump(2); }

namespace {

Json attestation_json(const Attestations& a, const std::string& key) {
  auto it = a.find(key);
  if (it == a.end()) return Json(nullptr);
  return Json{{"attested", true}, {"justification", it->second}};
}

/// Shared core of R1 and R2: classify the cover module of (p, nu).
void classify_cover(Verdict& v, const Presentation& p, const ZMap& nu, FieldSpec field, const std::string& rule_id) {
  CoverHomology h = cover_homology(p, nu, field);
  AomotoComplex ax = aomoto_complex(p, nu, field);
  v.betas = BetaSummary{ax.beta0, ax.beta1, ax.beta2_complex};
  v.invariant_factors = h.h1.invariant_factors;
  v.free_rank = h.h1.free_rank;
  v.hypotheses["field"] = field.name();
  v.hypotheses["finitely_presented"] = "by construction (finite presentation)";
  v.hypotheses["b1N_finite"] = h.b1_kernel.has_value();
  if (h.b1_kernel) v.hypotheses["b1N"] = *h.b1_kernel;
  v.rules.push_back(rule(rule_id));
  if (!h.b1_kernel) {
    v.conclusion = Conclusion::Inconclusive;
    v.explanation = "H1 of the cyclic cover has free rank " + std::to_string(h.h1.free_rank) +
                    ", so b1 of the kernel is infinite and the rule's finiteness hypothesis fails";
    return;
  }
  JordanReport rep = *monodromy_blocks_at_1(h);
  v.blocks = rep;
  v.hypotheses["maxBlock"] = rep.max_block;
  if (rep.max_block >= 2) {
    v.conclusion = Conclusion::NotOneFormal;
    v.explanation = "b1 of the kernel is finite and the monodromy has an eigenvalue-1 Jordan block of size " +
                    std::to_string(rep.max_block) + "; a 1-formal group cannot have one";
  } else {
    v.conclusion = Conclusion::NoObstruction;
    v.explanation = "all eigenvalue-1 Jordan blocks have size <= 1; the rule gives no obstruction";
  }
}

}  // namespace

Verdict rule_R1_special(const Presentation& p, const ZMap& nu, FieldSpec field) {
  Verdict v;
  v.subject = "G";
  classify_cover(v, p, nu, field, "R1");
  return v;
}

Verdict rule_R2_composite(const CompositeScenario& s, FieldSpec field) {
  Verdict v;
  v.subject = "pi";
  v.hypotheses["b1N_finite"] = attestation_json(s.attestations, "b1N_finite");
  v.hypotheses["b1K_finite"] = attestation_json(s.attestations, "b1K_finite");
  std::vector<std::string> missing;
  for (const char* key : {"b1N_finite", "b1K_finite"})
    if (!s.attestations.count(key)) missing.push_back(key);
  if (!missing.empty()) {
    v.rules.push_back(rule("R2"));
    v.conclusion = Conclusion::Inconclusive;
    v.explanation = "missing attestation:";
    for (const auto& m : missing) v.explanation += " " + m;
    return v;
  }
  Verdict inner;
  classify_cover(inner, s.pi, s.mu, field, "R2");
  v.rules = inner.rules;
  v.rules.push_back(rule("L-b1"));
  v.rules.push_back(rule("L-primary"));
  for (auto& [k, val] : inner.hypotheses.items()) {
    if (k == "b1N_finite") v.hypotheses["b1Gamma_finite_computed"] = val;
    else if (k == "b1N") v.hypotheses["b1Gamma"] = val;
    else v.hypotheses[k] = val;
  }
  v.blocks = inner.blocks;
  v.betas = inner.betas;
  v.invariant_factors = inner.invariant_factors;
  v.free_rank = inner.free_rank;
  if (!inner.blocks) {
    v.conclusion = Conclusion::Inconclusive;
    v.explanation = "attested finiteness of b1(N) and b1(K) implies b1(Gamma) finite, but the computed module for "
                    "Gamma has positive free rank; the attestations are inconsistent with the presentation";
    return v;
  }
  v.hypotheses["b1Gamma_finite_derived"] = "from b1N_finite and b1K_finite";
  v.conclusion = inner.conclusion;
  v.explanation = inner.conclusion == Conclusion::NotOneFormal
                      ? "H1(Gamma) has an eigenvalue-1 Jordan block of size " + std::to_string(inner.blocks->max_block) +
                            " with b1(Gamma) finite; pi cannot be 1-formal"
                      : "all eigenvalue-1 Jordan blocks on H1(Gamma) have size <= 1; no obstruction";
  return v;
}

std::vector<std::string> required_attestations(BundleScenario s) {
  if (s == BundleScenario::BundleOverMappingTorus) return {"base-closed-connected", "fiber-closed-connected"};
  return {"fiber-connected", "fiber-finite-2-skeleton"};
}

Verdict rule_R3_bundle(const JordanReport& report, BundleScenario scenario, const Attestations& attestations) {
  Verdict v;
  const bool bundle = scenario == BundleScenario::BundleOverMappingTorus;
  v.subject = bundle ? "M" : "pi1(X)";
  v.rules.push_back(rule(bundle ? "R3-bundle" : "R3-fibration"));
  v.blocks = report;
  v.hypotheses["eigenvalue"] = report.eigenvalue.str();
  v.hypotheses["maxBlock"] = report.max_block;
  std::vector<std::string> missing;
  for (const auto& key : required_attestations(scenario)) {
    v.hypotheses[key] = attestation_json(attestations, key);
    if (!attestations.count(key)) missing.push_back(key);
  }
  if (!report.eigenvalue.is_one()) {
    v.conclusion = Conclusion::Inconclusive;
    v.explanation = "the rule concerns eigenvalue 1, report is at " + report.eigenvalue.str();
    return v;
  }
  if (!missing.empty()) {
    v.conclusion = Conclusion::Inconclusive;
    v.explanation = "missing attestation:";
    for (const auto& m : missing) v.explanation += " " + m;
    return v;
  }
  if (report.max_block >= 2) {
    v.conclusion = bundle ? Conclusion::NotFormal : Conclusion::NotOneFormal;
    if (bundle) v.consequences.push_back({Conclusion::NotOneFormal, "pi1(M)"});
    v.explanation = "monodromy has an eigenvalue-1 Jordan block of size " + std::to_string(report.max_block);
  } else {
    v.conclusion = Conclusion::NoObstruction;
    v.explanation = "all eigenvalue-1 Jordan blocks have size <= 1; no obstruction";
  }
  return v;
}

Verdict rule_R4_R5_three_manifold(const JordanReport& report, const ThreeManifoldFlags& flags) {
  Verdict v;
  v.subject = "pi1(M)";
  v.blocks = report;
  v.hypotheses["closed"] = flags.closed;
  v.hypotheses["orientable"] = flags.orientable;
  v.hypotheses["fibersOverCircle"] = flags.fibers_over_circle;
  v.hypotheses["eigenvalue"] = report.eigenvalue.str();
  v.hypotheses["maxBlock"] = report.max_block;
  if (!flags.closed || !flags.orientable || !flags.fibers_over_circle || !report.eigenvalue.is_one()) {
    v.rules.push_back(rule("R4"));
    v.conclusion = Conclusion::Inconclusive;
    v.explanation = report.eigenvalue.is_one() ? "rule needs M closed, orientable and fibered over the circle"
                                               : "rule needs the eigenvalue-1 data";
    return v;
  }
  // Wang sequence: b1(M) = 1 + dim of the monodromy coinvariants = 1 + #blocks.
  const long b1 = 1 + static_cast<long>(report.block_sizes.size());
  const int m = report.count_of_size(1);
  v.hypotheses["m"] = m;
  v.hypotheses["b1M"] = b1;
  if (flags.b1_total && *flags.b1_total != b1)
    throw std::invalid_argument("supplied b1(M) = " + std::to_string(*flags.b1_total) +
                                " contradicts the Wang-sequence count 1 + #blocks = " + std::to_string(b1));
  if (flags.b1_total) v.hypotheses["b1M_supplied"] = *flags.b1_total;
  if (report.max_block >= 2) {
    v.rules.push_back(rule("R4"));
    v.conclusion = Conclusion::NotOneFormal;
    v.explanation = "eigenvalue-1 Jordan block of size " + std::to_string(report.max_block) + "; b1(M) = " + std::to_string(b1);
  } else if (m % 2 == 1) {
    v.rules.push_back(rule("R4"));
    v.rules.push_back(rule("R5"));
    v.conclusion = Conclusion::NotOneFormal;
    v.explanation = "m = " + std::to_string(m) + " blocks of size 1 is odd, so b1(M) = m + 1 = " + std::to_string(b1) +
                    " is even";
  } else {
    v.rules.push_back(rule("R4"));
    v.conclusion = Conclusion::NoObstruction;
    v.explanation = "m = " + std::to_string(m) + " blocks of size 1, b1(M) = " + std::to_string(b1) +
                    " is odd; no obstruction";
  }
  return v;
}

bool CrosscheckReport::all_agree() const {
  for (const auto& r : rows)
    if (!r.agree) return false;
  return true;
}

CrosscheckReport crosscheck_equivalence(const Presentation& p, const ZMap& nu, const std::vector<FieldSpec>& fields) {
  validate_zmap(p, nu);
  CrosscheckReport rep;
  for (FieldSpec f : fields) {
    CrosscheckRow row;
    row.field = f;
    CoverHomology h = cover_homology(p, nu, f);
    AomotoComplex ax = aomoto_complex(p, nu, f);
    row.beta1 = ax.beta1;
    row.torsion = h.h1.is_torsion();
    row.blocks = h.h1.t_minus_one_blocks;
    for (int b : row.blocks) row.max_block = std::max(row.max_block, b);
    row.beta1_vanishes = ax.beta1 == 0;
    row.module_condition = row.torsion && row.max_block <= 1;
    row.agree = row.beta1_vanishes == row.module_condition;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

Json to_json(const CrosscheckReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"field", row.field.name()},
                        {"beta1", row.beta1},
                        {"torsion", row.torsion},
                        {"maxBlock", row.max_block},
                        {"blocks", row.blocks},
                        {"agree", row.agree}});
  return Json{{"rule", rule("C-aomoto").id}, {"allAgree", r.all_agree()}, {"fields", rows}};
}

Verdict escalate(Verdict v, const std::optional<std::string>& space) {
  if (!space || v.conclusion != Conclusion::NotOneFormal) return v;
  for (const auto& [c, s] : v.consequences)
    if (c == Conclusion::NotFormal && s == *space) return v;
  v.subject = "pi1(" + *space + ")";
  v.consequences.push_back({Conclusion::NotFormal, *space});
  v.rules.push_back(rule("E-formal"));
  return v;
}

}  // namespace algmono
