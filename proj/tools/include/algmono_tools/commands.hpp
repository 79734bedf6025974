#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "algmono/constructions.hpp"
#include "algmono/verdict.hpp"

namespace algmono::tools {

enum ExitCode : int { kOk = 0, kInputError = 1, kHypothesisFailure = 2, kCrosscheckViolation = 3 };

struct CommandResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// Everything computed for one input document.
struct Analysis {
  std::string name;
  FieldSpec field;
  std::optional<CoverHomology> homology;
  std::optional<AomotoComplex> aomoto;
  std::optional<std::size_t> betti1_group;
  std::optional<CrosscheckReport> crosscheck;
  std::optional<JordanReport> matrix_blocks;
  Verdict verdict;
  std::vector<std::string> warnings;
};

/// Runs the pipeline selected by the document's form and scenario. Throws
/// ParseError, ValidationError and std::invalid_argument on bad input.
Analysis analyze_document(const InputDocument& doc);

Json to_json(const Analysis& a);
std::string to_text(const Analysis& a);

/// Differences between an analysis and a corpus entry's `expect:` values.
std::vector<std::string> expectation_mismatches(const Analysis& a, const std::map<std::string, std::string>& expect);

CommandResult cmd_analyze(const std::string& text, bool json);
CommandResult cmd_mapping_torus(const std::string& base_text, const std::string& aut_text);
CommandResult cmd_jordan(const std::string& text);
CommandResult cmd_crosscheck_random(std::size_t cases, std::uint64_t seed);
CommandResult cmd_crosscheck_corpus();

/// Fields used by the crosscheck: the document field followed by Q, F2, F3.
std::vector<FieldSpec> crosscheck_fields(FieldSpec primary);

}  // namespace algmono::tools
