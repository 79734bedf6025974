#include "algmono/covers.hpp"

#include <algorithm>
#include <functional>

namespace algmono {

CoverChainComplex cover_chain_complex(const Presentation& p, const ZMap& nu, FieldSpec field) {
  CoverChainComplex c;
  c.d2 = fox_matrix(p, nu, field).transposed();
  if (c.d2.rows() != p.num_generators()) c.d2 = LambdaMatrix(p.num_generators(), 0);
  c.d1 = LambdaMatrix(1, p.num_generators());
  for (std::size_t i = 0; i < p.num_generators(); ++i) c.d1(0, i) = LaurentPoly::t_power_minus_one(nu.values[i], field);
  return c;
}

CoverHomology cover_homology(const Presentation& p, const ZMap& nu, FieldSpec field) {
  validate_zmap(p, nu);
  CoverChainComplex cx = cover_chain_complex(p, nu, field);
  const std::size_t n = p.num_generators();

  // Column-reduce the row d1 to (g, 0, ..., 0) by unimodular operations,
  // tracking V and V^-1. gcd(nu) = 1 forces g ~ t - 1.
  LambdaMatrix row = cx.d1;
  LambdaMatrix V = LambdaMatrix::identity(n), V_inv = LambdaMatrix::identity(n);
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    row.swap_cols(a, b);
    V.swap_cols(a, b);
    V_inv.swap_rows(a, b);
  };
  for (;;) {
    std::size_t piv = n;
    for (std::size_t j = 0; j < n; ++j)
      if (!row(0, j).is_zero() && (piv == n || row(0, j).width() < row(0, piv).width())) piv = j;
    if (piv == n) break;
    swap_cols(0, piv);
    bool done = true;
    for (std::size_t j = 1; j < n; ++j) {
      if (row(0, j).is_zero()) continue;
      LaurentPoly q = laurent_divmod(row(0, j), row(0, 0)).quotient;
      row.add_col_multiple(j, 0, -q);
      V.add_col_multiple(j, 0, -q);
      V_inv.add_row_multiple(0, j, q);
      done = done && row(0, j).is_zero();
    }
    if (done) break;
  }
  // Make the surviving entry monic with offset 0.
  LaurentPoly u = row(0, 0).unit_part();
  row.scale_col(0, u.unit_inverse());
  V.scale_col(0, u.unit_inverse());
  V_inv.scale_row(0, u);

  CoverHomology h;
  h.field = field;
  h.h0_generator = row(0, 0);
  h.kernel_basis = V.submatrix(0, n, 1, n);
  // d2 = V (V^-1 d2), and the first row of V^-1 d2 vanishes because d1 d2 = 0.
  LambdaMatrix coords = V_inv * cx.d2;
  for (std::size_t j = 0; j < coords.cols(); ++j)
    if (!coords(0, j).is_zero()) throw std::logic_error("d1 * d2 != 0: Fox calculus invariant violated");
  h.h1 = module_from_presentation(coords.submatrix(1, n, 0, coords.cols()));
  if (h.h1.is_torsion()) h.b1_kernel = h.h1.dimension();
  return h;
}

JordanReport JordanReport::from_blocks(std::vector<int> blocks, Scalar eigenvalue) {
  JordanReport r;
  r.eigenvalue = std::move(eigenvalue);
  std::sort(blocks.begin(), blocks.end(), std::greater<>());
  r.block_sizes = std::move(blocks);
  r.max_block = r.block_sizes.empty() ? 0 : r.block_sizes.front();
  for (int b : r.block_sizes) r.total_multiplicity += b;
  return r;
}

int JordanReport::count_of_size(int size) const {
  return static_cast<int>(std::count(block_sizes.begin(), block_sizes.end(), size));
}

std::optional<JordanReport> monodromy_blocks_at_1(const CoverHomology& h) {
  if (!h.b1_kernel) return std::nullopt;
  return JordanReport::from_blocks(h.h1.t_minus_one_blocks, Scalar::in(h.field, 1));
}

JordanReport matrix_jordan_at(const KMatrix& a, const Scalar& lambda) {
  if (!a.is_square()) throw std::invalid_argument("Jordan analysis needs a square matrix, got " + std::to_string(a.rows()) +
                                                  "x" + std::to_string(a.cols()));
  const std::size_t n = a.rows();
  KMatrix shifted = a;
  for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
  std::vector<std::size_t> ranks{n};
  KMatrix power = KMatrix::identity(n);
  while (true) {
    power = power * shifted;
    std::size_t r = rank(power);
    if (r == ranks.back()) break;
    ranks.push_back(r);
    if (n == 0) break;
  }
  // at_least[k] = #blocks of size >= k = r_(k-1) - r_k.
  std::vector<int> blocks;
  const std::size_t K = ranks.size() - 1;
  for (std::size_t k = 1; k <= K; ++k) {
    long at_least = static_cast<long>(ranks[k - 1]) - static_cast<long>(ranks[k]);
    long at_least_next = k < K ? static_cast<long>(ranks[k]) - static_cast<long>(ranks[k + 1]) : 0;
    for (long c = 0; c < at_least - at_least_next; ++c) blocks.push_back(static_cast<int>(k));
  }
  JordanReport rep = JordanReport::from_blocks(std::move(blocks), lambda);
  rep.rank_sequence = std::move(ranks);
  return rep;
}

LambdaModule mapping_torus_oracle(const IntMatrix& a, FieldSpec field) {
  if (!a.is_square()) throw NotInvertibleError("monodromy matrix must be square");
  mpz_class det = determinant(a);
  if (det != 1 && det != -1) throw NotInvertibleError("monodromy matrix has determinant " + det.get_str() + ", not +-1");
  const std::size_t n = a.rows();
  LambdaMatrix p(n, n);
  const Scalar one = Scalar::in(field, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      p(i, j) = LaurentPoly(Scalar::in(field, -a(i, j)));
      if (i == j) p(i, j) += LaurentPoly::monomial(one, 1);
    }
  return module_from_presentation(p);
}

}  // namespace algmono
