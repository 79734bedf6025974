#include "algmono_tools/random.hpp"

#include <algorithm>

namespace algmono::tools {

namespace {

long pick(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

}  // namespace

Word random_word(Rng& rng, std::size_t generators, std::size_t max_length) {
  const auto len = static_cast<std::size_t>(pick(rng, 1, static_cast<long>(max_length)));
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < len; ++i)
    letters.push_back({static_cast<std::size_t>(pick(rng, 0, static_cast<long>(generators) - 1)), pick(rng, 0, 1) ? 1L : -1L});
  return Word(letters);
}

Presentation random_presentation(Rng& rng, const RandomPresentationLimits& limits) {
  const auto n = static_cast<std::size_t>(pick(rng, 1, static_cast<long>(limits.max_generators)));
  const auto m = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(limits.max_relators)));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<Word> rels;
  for (std::size_t j = 0; j < m; ++j) rels.push_back(random_word(rng, n, limits.max_length));
  return Presentation(names, rels);
}

RandomCase random_case(Rng& rng, const RandomPresentationLimits& limits) {
  if (pick(rng, 0, 1) == 0) {
    RandomCase c{random_presentation(rng, limits), {}};
    for (std::size_t i = 0; i < c.presentation.num_generators(); ++i) c.nu.values.push_back(pick(rng, -2, 2));
    return c;
  }
  const auto n = static_cast<std::size_t>(pick(rng, 1, static_cast<long>(limits.max_generators)));
  const auto m = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(limits.max_relators)));
  const auto anchor = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(n) - 1));
  ZMap nu;
  for (std::size_t i = 0; i < n; ++i) nu.values.push_back(i == anchor ? 1 : pick(rng, -2, 2));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<Word> rels;
  for (std::size_t j = 0; j < m; ++j) {
    for (int attempt = 0; attempt < 20; ++attempt) {
      Word w = random_word(rng, n, limits.max_length);
      const long s = evaluate(nu, w);
      if (w.length() + static_cast<std::size_t>(std::labs(s)) > limits.max_length) continue;
      Word r = s == 0 ? w : w * Word({{anchor, -s}});
      if (r.empty()) continue;
      // Rotate so the closing letter is not always last.
      auto letters = r.expanded();
      std::rotate(letters.begin(), letters.begin() + pick(rng, 0, static_cast<long>(letters.size()) - 1), letters.end());
      rels.push_back(Word(letters));
      break;
    }
  }
  return RandomCase{Presentation(names, rels), nu};
}

IntMatrix random_gl(Rng& rng, std::size_t n, int moves) {
  IntMatrix a = IntMatrix::identity(n);
  if (n == 0) return a;
  for (int k = 0; k < moves; ++k) {
    const auto i = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(n) - 1));
    const auto j = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(n) - 1));
    switch (pick(rng, 0, 3)) {
      case 0:
      case 1:
        if (i != j) a.add_row_multiple(i, j, pick(rng, -2, 2));
        break;
      case 2:
        a.scale_row(i, -1L);
        break;
      default:
        a.swap_rows(i, j);
    }
  }
  return a;
}

}  // namespace algmono::tools
