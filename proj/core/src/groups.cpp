#include "algmono/groups.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace algmono {

Word::Word(const std::vector<Letter>& letters) {
  for (const auto& l : letters) {
    if (l.exp == 0) continue;
    if (!letters_.empty() && letters_.back().gen == l.gen) {
      letters_.back().exp += l.exp;
      if (letters_.back().exp == 0) letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

std::size_t Word::length() const {
  std::size_t n = 0;
  for (const auto& l : letters_) n += static_cast<std::size_t>(l.exp < 0 ? -l.exp : l.exp);
  return n;
}

std::vector<Letter> Word::expanded() const {
  std::vector<Letter> out;
  out.reserve(length());
  for (const auto& l : letters_)
    for (long k = 0; k < (l.exp < 0 ? -l.exp : l.exp); ++k) out.push_back({l.gen, l.exp < 0 ? -1 : 1});
  return out;
}

std::vector<long> Word::exponent_sums(std::size_t num_generators) const {
  std::vector<long> sums(num_generators, 0);
  for (const auto& l : letters_) {
    if (l.gen >= num_generators) throw std::out_of_range("generator index out of range");
    sums[l.gen] += l.exp;
  }
  return sums;
}

std::size_t Word::max_generator() const {
  std::size_t m = 0;
  for (const auto& l : letters_) m = std::max(m, l.gen);
  return m;
}

Word Word::inverse() const {
  std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
  for (auto& l : inv) l.exp = -l.exp;
  return Word(inv);
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> all = a.letters_;
  all.insert(all.end(), b.letters_.begin(), b.letters_.end());
  // Cancellation at the seam may cascade; the constructor handles it because it
  // reduces against the already-reduced prefix.
  return Word(all);
}

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> relators,
                           std::vector<std::string>* warnings)
    : names_(std::move(generator_names)) {
  if (names_.empty()) throw std::invalid_argument("a presentation needs at least one generator");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate generator name '" + names_[i] + "'");
  for (std::size_t j = 0; j < relators.size(); ++j) {
    auto& r = relators[j];
    if (r.empty()) {
      if (warnings) warnings->push_back("relator " + std::to_string(j + 1) + " reduces to the identity and was dropped");
      continue;
    }
    if (r.max_generator() >= names_.size()) throw std::out_of_range("relator uses an unknown generator");
    relators_.push_back(std::move(r));
  }
}

std::size_t Presentation::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw std::out_of_range("unknown generator '" + name + "'");
}

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace

Word Presentation::parse_word(const std::string& text) const {
  std::istringstream in(text);
  std::string tok;
  std::vector<Letter> letters;
  while (in >> tok) {
    if (tok == "1") continue;
    std::string name = tok;
    long exp = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string e = tok.substr(caret + 1);
      std::size_t used = 0;
      try {
        exp = std::stol(e, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != e.size() || e.empty()) throw std::invalid_argument("bad exponent in token '" + tok + "'");
    }
    if (!is_identifier(name)) throw std::invalid_argument("bad generator token '" + tok + "'");
    letters.push_back({index_of(name), exp});
  }
  return Word(letters);
}

std::string Presentation::format_word(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w.letters()) {
    os << (first ? "" : " ") << names_.at(l.gen);
    if (l.exp != 1) os << '^' << l.exp;
    first = false;
  }
  return os.str();
}

long evaluate(const ZMap& nu, const Word& w) {
  long v = 0;
  for (const auto& l : w.letters()) v += nu.values.at(l.gen) * l.exp;
  return v;
}

ZMap validate_zmap(const Presentation& p, const ZMap& nu) {
  if (nu.values.size() != p.num_generators())
    throw ValidationError(ValidationError::Kind::LengthMismatch,
                          "LengthMismatch: " + std::to_string(nu.values.size()) + " values for " +
                              std::to_string(p.num_generators()) + " generators");
  for (std::size_t j = 0; j < p.num_relators(); ++j)
    if (long v = evaluate(nu, p.relators()[j]); v != 0)
      throw ValidationError(ValidationError::Kind::NotAHomomorphism,
                            "NotAHomomorphism: relator " + std::to_string(j + 1) + " (" +
                                p.format_word(p.relators()[j]) + ") has value " + std::to_string(v));
  long g = 0;
  for (long v : nu.values) g = std::gcd(g, v);
  if (g != 1)
    throw ValidationError(ValidationError::Kind::NotSurjective, "NotSurjective: gcd=" + std::to_string(g));
  return nu;
}

LaurentPoly fox_derivative(const Word& r, std::size_t gen, const ZMap& nu, FieldSpec field) {
  // Left-to-right scan with the running exponent of t^nu(prefix):
  //   d(u x)/dx = du/dx + u,   d(u x^-1)/dx = du/dx - u x^-1.
  const Scalar one = Scalar::in(field, 1);
  LaurentPoly acc = LaurentPoly(Scalar::in(field, 0));
  long prefix = 0;
  for (const auto& l : r.expanded()) {
    const long step = nu.values.at(l.gen);
    if (l.exp > 0) {
      if (l.gen == gen) acc += LaurentPoly::monomial(one, prefix);
      prefix += step;
    } else {
      prefix -= step;
      if (l.gen == gen) acc -= LaurentPoly::monomial(one, prefix);
    }
  }
  return acc;
}

LambdaMatrix fox_matrix(const Presentation& p, const ZMap& nu, FieldSpec field) {
  LambdaMatrix m(p.num_relators(), p.num_generators());
  for (std::size_t j = 0; j < p.num_relators(); ++j)
    for (std::size_t i = 0; i < p.num_generators(); ++i) m(j, i) = fox_derivative(p.relators()[j], i, nu, field);
  return m;
}

IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m(p.num_relators(), p.num_generators(), 0L);
  for (std::size_t j = 0; j < p.num_relators(); ++j) {
    auto sums = p.relators()[j].exponent_sums(p.num_generators());
    for (std::size_t i = 0; i < sums.size(); ++i) m(j, i) = sums[i];
  }
  return m;
}

std::size_t betti_1(const Presentation& p, FieldSpec field) {
  return p.num_generators() - rank(to_field(exponent_matrix(p), field));
}

}  // namespace algmono
