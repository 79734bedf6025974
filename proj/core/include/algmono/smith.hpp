#pragma once

#include <vector>

#include "algmono/matrix.hpp"

namespace algmono {

/// Smith normal form U * A * V = diag(factors, 0, ...) over Lambda.
///
/// `factors` holds the rank-many nonzero diagonal entries, each normalized to a
/// monic polynomial with nonzero constant term (units become 1), ordered so
/// that factors[i] divides factors[i+1]. U and V are invertible over Lambda;
/// their inverses are tracked alongside so callers can change bases in both
/// directions without inverting.
struct SmithForm {
  std::vector<LaurentPoly> factors;
  LambdaMatrix U, U_inv;
  LambdaMatrix V, V_inv;
  std::size_t rank = 0;

  /// diag(factors) padded with zeros to the shape of the input.
  LambdaMatrix diagonal(std::size_t rows, std::size_t cols) const;
};

SmithForm smith_normal_form(const LambdaMatrix& a);

/// Solves A x = b over Lambda for a given Smith form of A; returns false if no
/// solution exists.
bool solve_in_image(const SmithForm& snf, const std::vector<LaurentPoly>& b, std::vector<LaurentPoly>* x = nullptr);

}  // namespace algmono
