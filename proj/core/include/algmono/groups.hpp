#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "algmono/matrix.hpp"

namespace algmono {

struct Letter {
  std::size_t gen = 0;
  long exp = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word: adjacent letters have distinct generators, exponents nonzero.
class Word {
 public:
  Word() = default;
  /// Reduces freely (merging adjacent powers, cancelling to the identity).
  explicit Word(const std::vector<Letter>& letters);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  /// Number of unit letters, sum of |exponent|.
  std::size_t length() const;
  /// Letters expanded to exponents +-1.
  std::vector<Letter> expanded() const;
  /// Total exponent of every generator, for `num_generators` generators.
  std::vector<long> exponent_sums(std::size_t num_generators) const;
  std::size_t max_generator() const;

  Word inverse() const;
  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

class Presentation {
 public:
  Presentation() = default;
  /// Empty relators are dropped; a note is appended to `warnings` when given.
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators,
               std::vector<std::string>* warnings = nullptr);

  std::size_t num_generators() const { return names_.size(); }
  std::size_t num_relators() const { return relators_.size(); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }
  /// Index of a generator name; throws std::out_of_range.
  std::size_t index_of(const std::string& name) const;

  /// Parses the token syntax "a b^-1 c^3" (tokens separated by whitespace).
  Word parse_word(const std::string& text) const;
  std::string format_word(const Word& w) const;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

/// Values nu(x_i) of a homomorphism G -> Z on the generators.
struct ZMap {
  std::vector<long> values;
  friend bool operator==(const ZMap&, const ZMap&) = default;
};

class ValidationError : public std::invalid_argument {
 public:
  enum class Kind { LengthMismatch, NotAHomomorphism, NotSurjective };
  ValidationError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Checks that nu kills every relator and that gcd(nu) = 1.
ZMap validate_zmap(const Presentation& p, const ZMap& nu);

/// nu evaluated on a word.
long evaluate(const ZMap& nu, const Word& w);

/// Image of the Fox derivative d r / d x_gen under g -> t^nu(g).
LaurentPoly fox_derivative(const Word& r, std::size_t gen, const ZMap& nu, FieldSpec field = {});

/// m x n matrix of specialized Fox derivatives (row = relator, column = generator).
LambdaMatrix fox_matrix(const Presentation& p, const ZMap& nu, FieldSpec field = {});

/// Entry (j, i) = total exponent of x_i in r_j.
IntMatrix exponent_matrix(const Presentation& p);

/// dim_k H_1(G; k) = n - rank_k(exponent matrix).
std::size_t betti_1(const Presentation& p, FieldSpec field = {});

}  // namespace algmono
