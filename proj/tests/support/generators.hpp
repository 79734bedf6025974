#pragma once

// Hand-rolled random generators for property tests.

#include <random>

#include "algmono/aomoto.hpp"
#include "algmono/laurent.hpp"
#include "algmono/matrix.hpp"
#include "algmono_tools/random.hpp"

namespace gen {

using algmono::tools::Rng;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline algmono::FieldSpec field_of(int index) {
  return index == 0 ? algmono::FieldSpec::rationals() : algmono::FieldSpec::prime(index == 1 ? 2 : 3);
}

/// Random Laurent polynomial of width <= max_width (zero with probability ~zero_chance%).
inline algmono::LaurentPoly laurent(Rng& rng, long max_width, algmono::FieldSpec field, int zero_chance = 20,
                                    long coeff_bound = 3) {
  if (uniform(rng, 0, 99) < zero_chance) return algmono::LaurentPoly::from_ints({}, 0, field);
  std::vector<long> cs;
  const long w = uniform(rng, 0, max_width);
  for (long i = 0; i <= w; ++i) cs.push_back(uniform(rng, -coeff_bound, coeff_bound));
  return algmono::LaurentPoly::from_ints(cs, uniform(rng, -2, 2), field);
}

inline algmono::LambdaMatrix lambda_matrix(Rng& rng, std::size_t rows, std::size_t cols, long max_width,
                                           algmono::FieldSpec field) {
  algmono::LambdaMatrix m(rows, cols, algmono::LaurentPoly::from_ints({}, 0, field));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = laurent(rng, max_width, field);
  return m;
}

/// Product of elementary matrices and unit scalings: invertible over Lambda.
inline algmono::LambdaMatrix unimodular(Rng& rng, std::size_t n, algmono::FieldSpec field, int moves = 4) {
  algmono::LambdaMatrix u(n, n, algmono::LaurentPoly::from_ints({}, 0, field));
  for (std::size_t i = 0; i < n; ++i) u(i, i) = algmono::LaurentPoly::from_ints({1}, 0, field);
  if (n == 0) return u;
  for (int k = 0; k < moves; ++k) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    const auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    if (i != j) u.add_row_multiple(i, j, laurent(rng, 1, field, 0, 2));
    else u.scale_row(i, algmono::LaurentPoly::from_ints({uniform(rng, 0, 1) ? 1L : -1L}, uniform(rng, -1, 1), field));
  }
  return u;
}

/// Random element of the cocycle space, as a combination of an H^1 basis.
inline algmono::KVector cocycle(Rng& rng, const algmono::CohomologyBasis& coh, std::size_t n) {
  algmono::KVector v(n, algmono::Scalar::in(coh.field, 0));
  for (const auto& b : coh.h1_basis) {
    const algmono::Scalar c = algmono::Scalar::in(coh.field, uniform(rng, -3, 3));
    for (std::size_t i = 0; i < n; ++i) v[i] = v[i] + c * b[i];
  }
  return v;
}

}  // namespace gen
