#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "algmono_tools/commands.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(const algmono::tools::CommandResult& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace algmono::tools;
  CLI::App app{"Jordan-block obstructions to 1-formality from group presentations"};
  app.require_subcommand(1);

  std::string file, base, aut;
  bool json = false;
  auto* analyze = app.add_subcommand("analyze", "cover homology, Aomoto-Betti numbers and rule verdicts");
  analyze->add_option("file", file, "input document ('-' for stdin)")->required();
  analyze->add_flag("--json", json, "emit JSON");

  auto* torus = app.add_subcommand("mapping-torus", "presentation of a mapping torus");
  torus->add_option("base", base, "base presentation document")->required();
  torus->add_option("aut", aut, "automorphism document ('map:' lines or 'matrix:')")->required();

  auto* jordan = app.add_subcommand("jordan", "Jordan blocks of a matrix at lambda, as JSON");
  jordan->add_option("file", file, "document with 'matrix:' and optional 'lambda:'")->required();

  std::size_t random_cases = 0;
  std::uint64_t seed = 1;
  auto* cross = app.add_subcommand("crosscheck", "check beta1 = 0 <=> small torsion module");
  auto* random_opt = cross->add_option("--random", random_cases, "number of random presentations");
  cross->add_option("--seed", seed, "random seed")->needs(random_opt);
  auto* corpus_flag = cross->add_flag("--corpus", "run on the bundled corpus");
  random_opt->excludes(corpus_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*analyze) return emit(cmd_analyze(read_input(file), json));
    if (*torus) return emit(cmd_mapping_torus(read_input(base), read_input(aut)));
    if (*jordan) return emit(cmd_jordan(read_input(file)));
    if (*cross) {
      if (*corpus_flag) return emit(cmd_crosscheck_corpus());
      if (!*random_opt) {
        std::cerr << "error: crosscheck needs --random N or --corpus\n";
        return kInputError;
      }
      return emit(cmd_crosscheck_random(random_cases, seed));
    }
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
