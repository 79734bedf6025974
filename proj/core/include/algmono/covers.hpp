#pragma once

#include <optional>
#include <vector>

#include "algmono/groups.hpp"
#include "algmono/module.hpp"

namespace algmono {

/// Equivariant chain complex Lambda^m --d2--> Lambda^n --d1--> Lambda of the
/// infinite cyclic cover of the presentation 2-complex.
struct CoverChainComplex {
  LambdaMatrix d2;  // n x m, column j = Fox derivatives of relator j
  LambdaMatrix d1;  // 1 x n, entries t^nu(x_i) - 1
};

CoverChainComplex cover_chain_complex(const Presentation& p, const ZMap& nu, FieldSpec field = {});

/// H_1 of the infinite cyclic cover as a Lambda-module.
struct CoverHomology {
  LambdaModule h1;
  /// Normalized generator of the cokernel of d1; always t - 1.
  LaurentPoly h0_generator;
  /// dim_k H_1 when finite (torsion module), nullopt when infinite.
  std::optional<long> b1_kernel;
  /// n x (n-1) matrix whose columns form a basis of ker d1.
  LambdaMatrix kernel_basis;
  FieldSpec field;
};

/// Validates (p, nu) and computes H_1(X; k[Z]_nu) = ker d1 / im d2.
CoverHomology cover_homology(const Presentation& p, const ZMap& nu, FieldSpec field = {});

/// Jordan blocks of an operator at one eigenvalue.
struct JordanReport {
  Scalar eigenvalue = Scalar(1);
  /// Sorted in decreasing order.
  std::vector<int> block_sizes;
  int max_block = 0;
  int total_multiplicity = 0;
  /// rank (A - lambda)^k for k = 0, 1, ... until it stabilizes (matrix input only).
  std::vector<std::size_t> rank_sequence;

  static JordanReport from_blocks(std::vector<int> blocks, Scalar eigenvalue = Scalar(1));
  int count_of_size(int size) const;
};

/// Jordan blocks at t = 1 of the monodromy on a finite H_1 of the cover;
/// nullopt when b1 of the kernel is infinite.
std::optional<JordanReport> monodromy_blocks_at_1(const CoverHomology& h);

/// Jordan structure of a square matrix at lambda from the rank sequence
/// r_k = rank (A - lambda I)^k: #blocks of size >= k is r_(k-1) - r_k.
JordanReport matrix_jordan_at(const KMatrix& a, const Scalar& lambda);

class NotInvertibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Module with presentation t I - A: H_1 of the kernel of the extension of Z
/// by Z^n with monodromy A. Throws NotInvertibleError unless det A = +-1.
LambdaModule mapping_torus_oracle(const IntMatrix& a, FieldSpec field = {});

}  // namespace algmono
