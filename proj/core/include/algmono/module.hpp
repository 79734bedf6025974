#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "algmono/smith.hpp"

namespace algmono {

class NotTorsionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Finitely generated Lambda-module Lambda^rows / (column span of the
/// presentation matrix), with its structure read off a Smith form.
struct LambdaModule {
  LambdaMatrix presentation;
  SmithForm smith;
  std::size_t free_rank = 0;
  /// Non-unit invariant factors, normalized, in divisibility order.
  std::vector<LaurentPoly> invariant_factors;
  /// (t-1)-adic valuations of the invariant factors that are divisible by t-1,
  /// in non-decreasing order: the sizes of the Jordan blocks at eigenvalue 1.
  std::vector<int> t_minus_one_blocks;

  std::size_t generators() const { return presentation.rows(); }
  bool is_torsion() const { return free_rank == 0; }
  /// dim_k of the module; throws NotTorsionError when free_rank > 0.
  long dimension() const;
};

LambdaModule module_from_presentation(const LambdaMatrix& presentation);

/// Block sizes of the (t-1)-primary part; throws NotTorsionError.
std::vector<int> primary_part_dims(const LambdaModule& m);

/// A torsion module as a finite-dimensional k-vector space with the action of t.
///
/// Coordinates follow the Smith decomposition: for every non-unit invariant
/// factor d_i of degree e_i, the basis vectors t^0 g_i, ..., t^(e_i - 1) g_i,
/// where g_i is the image of U_inv e_i.
class KModel {
 public:
  explicit KModel(const LambdaModule& m);

  std::size_t dimension() const { return dim_; }
  /// Matrix of multiplication by t.
  const KMatrix& t_action() const { return t_action_; }
  /// Coordinates of the class of x in Lambda^generators.
  KVector coordinates(const std::vector<LaurentPoly>& x) const;
  /// A representative in Lambda^generators of basis vector `index`.
  std::vector<LaurentPoly> representative(std::size_t index) const;
  /// Basis (as coordinate vectors) of the generalized eigenspace of t at 1.
  std::vector<KVector> primary_basis() const;
  FieldSpec field() const { return field_; }

 private:
  struct Summand {
    std::size_t smith_index;
    LaurentPoly factor;
    LaurentPoly t_inverse;  // inverse of t modulo factor
    std::size_t start;
    std::size_t degree;
  };

  LambdaModule module_;
  std::vector<Summand> summands_;
  std::size_t dim_ = 0;
  KMatrix t_action_;
  FieldSpec field_;
};

struct PrimarySurjectionReport {
  bool well_defined = false;
  bool surjective = false;
  std::size_t source_primary_dim = 0;
  std::size_t target_primary_dim = 0;
  std::vector<int> source_blocks;
  std::vector<int> target_blocks;
  /// Rank of the induced map restricted to the (t-1)-primary parts.
  std::size_t restricted_rank = 0;
  bool primary_surjective = false;
};

class NotSurjectiveError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Checks that phi (target.generators() x source.generators()) defines a
/// Lambda-linear surjection source -> target of torsion modules, and that it
/// restricts to a surjection of (t-1)-primary parts.
/// Throws NotTorsionError, NotSurjectiveError, or std::invalid_argument when
/// phi does not respect the relations.
PrimarySurjectionReport check_primary_surjection(const LambdaMatrix& phi, const LambdaModule& source,
                                                 const LambdaModule& target);

}  // namespace algmono
