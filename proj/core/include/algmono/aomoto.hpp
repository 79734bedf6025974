#pragma once

#include <vector>

#include "algmono/groups.hpp"

namespace algmono {

/// Low-degree cohomology of the presentation 2-complex over k. With one
/// 0-cell, cochains are C^1 = k^n, C^2 = k^m and delta^1 is the exponent
/// matrix; there are no 1-coboundaries.
struct CohomologyBasis {
  KMatrix coboundary;  // delta^1 : k^n -> k^m
  std::vector<KVector> h1_basis;
  std::size_t h2_dim = 0;
  FieldSpec field;

  /// True when the 2-cochain c is a coboundary (its class in H^2 vanishes).
  bool is_coboundary(const KVector& c) const;
  /// Dimension of the span of the classes of the given 2-cochains in H^2.
  std::size_t class_rank(const std::vector<KVector>& cochains) const;
};

CohomologyBasis cohomology_basis(const Presentation& p, FieldSpec field = {});

class NotACocycleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cup product of 1-cocycles a, b evaluated on every relator. For
/// r = y_1 ... y_L (unit letters), the value is the sum over letters of
/// a(w_j) * b(y_j), where w_j is the Fox prefix of y_j: y_1 ... y_(j-1) for a
/// positive letter and y_1 ... y_j for an inverse letter, and b(x^-1) = -b(x).
KVector cup_evaluate(const Presentation& p, const KVector& a, const KVector& b);

/// The Aomoto complex H^0 -> H^1 -> H^2 given by left multiplication by a
/// degree-one class.
struct AomotoComplex {
  KVector nu_class;
  /// n x 1: image of 1 in H^0, written in cochain coordinates.
  KMatrix map01;
  /// m x dim H^1: cochain representatives of nu * h for each H^1 basis vector h.
  KMatrix map12;
  std::size_t beta0 = 0;
  std::size_t beta1 = 0;
  /// H^2 of the three-term complex; depends on the presentation, not only on G.
  std::size_t beta2_complex = 0;
  std::size_t h1_dim = 0;
  std::size_t h2_dim = 0;
  /// [nu * nu] = 0 in H^2 (checked).
  bool complex_condition = false;
};

/// Aomoto complex for an arbitrary nonzero cocycle z (no integrality needed).
AomotoComplex aomoto_complex_for(const Presentation& p, const KVector& z, FieldSpec field);

/// Validates (p, nu) and builds the Aomoto complex of nu_k.
AomotoComplex aomoto_complex(const Presentation& p, const ZMap& nu, FieldSpec field = {});

/// z in R^1: beta_1 computed with z is positive. Throws NotACocycleError or
/// std::invalid_argument for z = 0.
bool resonance_membership(const Presentation& p, const KVector& z, FieldSpec field = {});

}  // namespace algmono
