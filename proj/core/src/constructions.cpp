#include "algmono/constructions.hpp"

#include <algorithm>

#include "corpus_data.hpp"

namespace algmono {

IntMatrix abelianized_matrix(const Presentation& base, const Automorphism& phi) {
  const std::size_t n = base.num_generators();
  if (phi.images.size() != n)
    throw std::invalid_argument("automorphism gives " + std::to_string(phi.images.size()) + " images for " +
                                std::to_string(n) + " generators");
  IntMatrix a(n, n, 0L);
  for (std::size_t i = 0; i < n; ++i) {
    auto sums = phi.images[i].exponent_sums(n);
    for (std::size_t j = 0; j < n; ++j) a(j, i) = sums[j];
  }
  return a;
}

Presentation free_abelian_presentation(const std::vector<std::string>& names) {
  std::vector<Word> rels;
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j) rels.push_back(Word({{i, 1}, {j, 1}, {i, -1}, {j, -1}}));
  return Presentation(names, std::move(rels));
}

Presentation free_abelian_presentation(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return free_abelian_presentation(names);
}

Automorphism automorphism_from_matrix(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("automorphism matrix must be square");
  Automorphism phi;
  for (std::size_t i = 0; i < a.cols(); ++i) {
    std::vector<Letter> letters;
    for (std::size_t j = 0; j < a.rows(); ++j)
      if (a(j, i) != 0) letters.push_back({j, a(j, i)});
    phi.images.push_back(Word(letters));
  }
  return phi;
}

MappingTorus mapping_torus_presentation(const Presentation& base, const Automorphism& phi) {
  mpz_class det = determinant(abelianized_matrix(base, phi));
  if (det != 1 && det != -1)
    throw NotInvertibleError("abelianized automorphism has determinant " + det.get_str() + ", not +-1");
  const std::size_t n = base.num_generators();
  std::vector<std::string> names = base.generator_names();
  std::string s = "s";
  while (std::find(names.begin(), names.end(), s) != names.end()) s += "_";
  names.push_back(s);
  std::vector<Word> rels = base.relators();
  for (std::size_t i = 0; i < n; ++i)
    rels.push_back(Word({{n, 1}, {i, 1}, {n, -1}}) * phi.images[i].inverse());
  MappingTorus mt{Presentation(names, std::move(rels)), ZMap{}, s, phi.attested};
  mt.nu.values.assign(n + 1, 0);
  mt.nu.values[n] = 1;
  validate_zmap(mt.presentation, mt.nu);
  return mt;
}

CompositeScenario compose_to_Z(const Presentation& pi, const ZMap& mu, const Attestations& attestations) {
  return CompositeScenario{pi, validate_zmap(pi, mu), attestations};
}

const std::string& bundled_corpus_text() {
  static const std::string text(kBundledCorpus);
  return text;
}

std::vector<CorpusEntry> load_corpus(const std::string& text) {
  std::vector<CorpusEntry> out;
  for (auto& doc : parse_corpus(text)) {
    CorpusEntry e;
    e.name = doc.name;
    e.tags = doc.tags;
    e.expected = doc.expect;
    e.origin = doc.origin;
    e.document = std::move(doc);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CorpusEntry> load_corpus() { return load_corpus(bundled_corpus_text()); }

}  // namespace algmono
