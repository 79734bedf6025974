#include "algmono_tools/commands.hpp"

#include <algorithm>
#include <sstream>

#include "algmono_tools/random.hpp"

namespace algmono::tools {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

template <class T>
std::string list_str(const std::vector<T>& xs) {
  std::vector<std::string> parts;
  for (const auto& x : xs) parts.push_back(std::to_string(x));
  return "[" + join(parts, ", ") + "]";
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text == "none" || text.empty()) return out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

bool attested(const Attestations& a, const std::string& key) { return a.count(key) > 0; }

Verdict matrix_verdict(const InputDocument& doc, const JordanReport& report) {
  switch (doc.scenario) {
    case Scenario::MappingTorus:
      return rule_R3_bundle(report, BundleScenario::BundleOverMappingTorus, doc.attest);
    case Scenario::FiberedLink:
    case Scenario::BaseLocalization:
    case Scenario::Fibration:
      return rule_R3_bundle(report, BundleScenario::FibrationOverCircle, doc.attest);
    case Scenario::ClosedThreeManifold: {
      ThreeManifoldFlags flags{attested(doc.attest, "closed"), attested(doc.attest, "orientable"),
                               attested(doc.attest, "fibers-over-circle"), std::nullopt};
      if (doc.b1_total) flags.b1_total = doc.b1_total->value;
      return rule_R4_R5_three_manifold(report, flags);
    }
    default: {
      Verdict v;
      v.subject = "monodromy";
      v.blocks = report;
      v.explanation = "matrix input needs a scenario (mapping-torus, fibered-link, base-localization, fibration or "
                      "closed-3-manifold) before any rule applies";
      return v;
    }
  }
}

std::vector<int> analysis_blocks(const Analysis& a, bool& known) {
  known = true;
  if (a.matrix_blocks) {
    auto b = a.matrix_blocks->block_sizes;
    std::sort(b.begin(), b.end());
    return b;
  }
  if (a.homology && a.homology->h1.is_torsion()) return a.homology->h1.t_minus_one_blocks;
  known = false;
  return {};
}

}  // namespace

std::vector<FieldSpec> crosscheck_fields(FieldSpec primary) {
  std::vector<FieldSpec> out{primary};
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)})
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  return out;
}

Analysis analyze_document(const InputDocument& doc) {
  require_single_form(doc);
  Analysis a;
  a.name = doc.name;
  a.field = doc.field;
  if (doc.has_presentation()) {
    Presentation p = presentation_of(doc, &a.warnings);
    ZMap nu = validate_zmap(p, zmap_of(doc, p));
    a.homology = cover_homology(p, nu, doc.field);
    a.aomoto = aomoto_complex(p, nu, doc.field);
    a.betti1_group = betti_1(p, doc.field);
    a.crosscheck = crosscheck_equivalence(p, nu, crosscheck_fields(doc.field));
    a.verdict = doc.scenario == Scenario::Composite ? rule_R2_composite(compose_to_Z(p, nu, doc.attest), doc.field)
                                                     : rule_R1_special(p, nu, doc.field);
  } else {
    KMatrix m = rational_matrix_of(doc);
    if (!m.is_square())
      throw std::invalid_argument("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                  ", not square");
    a.matrix_blocks = matrix_jordan_at(m, lambda_of(doc));
    a.verdict = matrix_verdict(doc, *a.matrix_blocks);
  }
  a.verdict = escalate(a.verdict, doc.space);
  return a;
}

Json to_json(const Analysis& a) {
  Json j;
  j["name"] = a.name;
  j["field"] = a.field.name();
  if (a.homology) {
    const auto& h = a.homology->h1;
    Json factors = Json::array();
    for (const auto& f : h.invariant_factors) factors.push_back(f.coeff_strings());
    Json mod;
    mod["invariantFactors"] = factors;
    mod["freeRank"] = h.free_rank;
    mod["blocks"] = h.t_minus_one_blocks;
    mod["b1Kernel"] = a.homology->b1_kernel ? Json(*a.homology->b1_kernel) : Json(nullptr);
    j["module"] = mod;
  }
  if (a.aomoto)
    j["aomoto"] = Json{{"beta0", a.aomoto->beta0},
                       {"beta1", a.aomoto->beta1},
                       {"beta2Complex", a.aomoto->beta2_complex},
                       {"h1", a.aomoto->h1_dim},
                       {"h2", a.aomoto->h2_dim}};
  if (a.betti1_group) j["b1Group"] = *a.betti1_group;
  if (a.matrix_blocks) j["jordan"] = algmono::to_json(*a.matrix_blocks);
  j["verdict"] = algmono::to_json(a.verdict);
  if (a.crosscheck) j["crosscheck"] = algmono::to_json(*a.crosscheck);
  if (!a.warnings.empty()) j["warnings"] = a.warnings;
  return j;
}

std::string to_text(const Analysis& a) {
  std::ostringstream os;
  if (!a.name.empty()) os << "name: " << a.name << '\n';
  os << "field: " << a.field.name() << '\n';
  for (const auto& w : a.warnings) os << "warning: " << w << '\n';
  if (a.homology) {
    const auto& h = a.homology->h1;
    std::vector<std::string> factors;
    for (const auto& f : h.invariant_factors) factors.push_back(f.str());
    os << "invariant factors: " << (factors.empty() ? "(none)" : join(factors, ", ")) << '\n';
    os << "free rank: " << h.free_rank << '\n';
    if (a.homology->b1_kernel) os << "dim H1(cover): " << *a.homology->b1_kernel << '\n';
    else os << "dim H1(cover): infinite\n";
    os << "blocks at t-1: " << list_str(h.t_minus_one_blocks) << '\n';
  }
  if (a.aomoto)
    os << "aomoto: beta0 = " << a.aomoto->beta0 << ", beta1 = " << a.aomoto->beta1
       << ", beta2 (complex) = " << a.aomoto->beta2_complex << '\n';
  if (a.betti1_group) os << "b1(G): " << *a.betti1_group << '\n';
  if (a.matrix_blocks) {
    os << "jordan at " << a.matrix_blocks->eigenvalue.str() << ": " << list_str(a.matrix_blocks->block_sizes) << '\n';
    os << "rank sequence: " << list_str(a.matrix_blocks->rank_sequence) << '\n';
  }
  const Verdict& v = a.verdict;
  for (const auto& r : v.rules) os << "rule " << r.id << ": " << r.citation << '\n';
  for (auto it = v.hypotheses.begin(); it != v.hypotheses.end(); ++it)
    os << "  " << it.key() << " = " << it.value().dump() << '\n';
  os << "verdict: " << to_string(v.conclusion) << " (" << v.subject << ")\n";
  for (const auto& [c, s] : v.consequences) os << "  also: " << to_string(c) << " (" << s << ")\n";
  os << "  " << v.explanation << '\n';
  if (a.crosscheck) {
    std::vector<std::string> rows;
    for (const auto& r : a.crosscheck->rows) rows.push_back(r.field.name() + (r.agree ? " ok" : " VIOLATION"));
    os << "crosscheck: " << join(rows, ", ") << '\n';
  }
  return os.str();
}

std::vector<std::string> expectation_mismatches(const Analysis& a, const std::map<std::string, std::string>& expect) {
  std::vector<std::string> out;
  for (const auto& [key, want] : expect) {
    std::string got;
    if (key == "blocks") {
      bool known = false;
      auto blocks = analysis_blocks(a, known);
      auto expected = parse_int_list(want);
      std::sort(expected.begin(), expected.end());
      if (!known) got = "unavailable";
      else if (blocks == expected) continue;
      else got = list_str(blocks);
    } else if (key == "beta1") {
      if (a.aomoto && std::to_string(a.aomoto->beta1) == want) continue;
      got = a.aomoto ? std::to_string(a.aomoto->beta1) : "unavailable";
    } else if (key == "torsion") {
      got = !a.homology ? "unavailable" : a.homology->h1.is_torsion() ? "yes" : "no";
      if (got == want) continue;
    } else if (key == "factors") {
      std::vector<std::string> fs;
      if (a.homology)
        for (const auto& f : a.homology->h1.invariant_factors) fs.push_back(join(f.coeff_strings(), ","));
      got = a.homology ? join(fs, "|") : "unavailable";
      if (got == want) continue;
    } else if (key == "verdict") {
      got = to_string(a.verdict.conclusion);
      if (got == want) continue;
    } else {
      got = "unknown key";
    }
    out.push_back(key + ": expected " + want + ", got " + got);
  }
  return out;
}

namespace {

CommandResult input_error(const std::string& msg) { return {kInputError, "", "error: " + msg + "\n"}; }

template <class F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return input_error(e.what());
  } catch (const ValidationError& e) {
    return input_error(e.what());
  } catch (const NotInvertibleError& e) {
    return input_error(e.what());
  } catch (const std::invalid_argument& e) {
    return input_error(e.what());
  } catch (const std::out_of_range& e) {
    return input_error(e.what());
  }
}

std::string dump_violation(const Presentation& p, const ZMap& nu, const CrosscheckReport& rep) {
  std::string out = format_document(p, &nu, FieldSpec{}, {"crosscheck violation"});
  out += algmono::to_json(rep).dump(2) + "\n";
  return out;
}

}  // namespace

CommandResult cmd_analyze(const std::string& text, bool json) {
  return guarded([&]() {
    Analysis a = analyze_document(parse_document(text));
    CommandResult r;
    r.out = json ? to_json(a).dump(2) + "\n" : to_text(a);
    if (a.crosscheck && !a.crosscheck->all_agree()) {
      r.exit_code = kCrosscheckViolation;
      r.err = "crosscheck violation\n";
    } else if (a.verdict.conclusion == Conclusion::Inconclusive) {
      r.exit_code = kHypothesisFailure;
    }
    return r;
  });
}

CommandResult cmd_mapping_torus(const std::string& base_text, const std::string& aut_text) {
  return guarded([&]() {
    InputDocument base_doc = parse_document(base_text);
    if (!base_doc.has_presentation()) throw ParseError(base_doc.first_line, "base document needs a 'gens:' line");
    Presentation base = presentation_of(base_doc);
    InputDocument aut_doc = parse_document(aut_text);
    Automorphism phi;
    if (aut_doc.has_matrix()) {
      if (!aut_doc.maps.empty()) throw ParseError(aut_doc.matrix->line, "use either 'matrix:' or 'map:' lines, not both");
      IntMatrix a = integer_matrix_of(aut_doc);
      if (!a.is_square() || a.rows() != base.num_generators())
        throw std::invalid_argument("automorphism matrix must be " + std::to_string(base.num_generators()) + "x" +
                                    std::to_string(base.num_generators()));
      phi = automorphism_from_matrix(a);
    } else {
      phi.images = automorphism_images_of(aut_doc, base);
    }
    MappingTorus mt = mapping_torus_presentation(base, phi);
    std::vector<std::string> comments{
        "mapping torus with stable letter " + mt.stable_letter,
        "automorphism attested: only the abelianized image was checked to be invertible over Z"};
    return CommandResult{kOk, format_document(mt.presentation, &mt.nu, base_doc.field, comments), ""};
  });
}

CommandResult cmd_jordan(const std::string& text) {
  return guarded([&]() {
    InputDocument doc = parse_document(text);
    KMatrix m = rational_matrix_of(doc);
    if (!m.is_square())
      throw std::invalid_argument("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                  ", not square");
    return CommandResult{kOk, algmono::to_json(matrix_jordan_at(m, lambda_of(doc))).dump(2) + "\n", ""};
  });
}

CommandResult cmd_crosscheck_random(std::size_t cases, std::uint64_t seed) {
  Rng rng(seed);
  std::size_t skipped = 0, violations = 0;
  std::ostringstream dumps;
  for (std::size_t i = 0; i < cases; ++i) {
    for (;;) {
      RandomCase c = random_case(rng);
      try {
        validate_zmap(c.presentation, c.nu);
      } catch (const ValidationError&) {
        ++skipped;
        continue;
      }
      CrosscheckReport rep = crosscheck_equivalence(c.presentation, c.nu, crosscheck_fields(FieldSpec{}));
      if (!rep.all_agree()) {
        ++violations;
        dumps << dump_violation(c.presentation, c.nu, rep);
      }
      break;
    }
  }
  CommandResult r;
  std::ostringstream os;
  os << "seed: " << seed << '\n'
     << "cases: " << cases << " checked (" << skipped << " draws with invalid nu redrawn)\n"
     << "violations: " << violations << '\n'
     << (violations ? "FAIL" : "PASS") << '\n';
  r.out = os.str() + dumps.str();
  r.exit_code = violations ? kCrosscheckViolation : kOk;
  return r;
}

CommandResult cmd_crosscheck_corpus() {
  CommandResult r;
  std::ostringstream os;
  std::size_t failures = 0;
  for (const auto& entry : load_corpus()) {
    std::vector<std::string> problems;
    try {
      Analysis a = analyze_document(entry.document);
      if (a.crosscheck && !a.crosscheck->all_agree()) problems.push_back("crosscheck violation");
      for (auto& m : expectation_mismatches(a, entry.expected)) problems.push_back(m);
    } catch (const std::exception& e) {
      problems.push_back(std::string("error: ") + e.what());
    }
    os << entry.name << ": " << (problems.empty() ? "ok" : "FAIL") << '\n';
    for (const auto& p : problems) os << "  " << p << '\n';
    failures += problems.empty() ? 0 : 1;
  }
  os << (failures ? "FAIL" : "PASS") << '\n';
  r.out = os.str();
  r.exit_code = failures ? kCrosscheckViolation : kOk;
  return r;
}

}  // namespace algmono::tools
