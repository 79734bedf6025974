#include "algmono/matrix.hpp"

#include <sstream>

namespace algmono {

KMatrix to_field(const IntMatrix& m, FieldSpec field) {
  KMatrix out(m.rows(), m.cols(), Scalar::in(field, 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Scalar::in(field, m(i, j));
  return out;
}

KMatrix to_field(const KMatrix& m, FieldSpec field) {
  KMatrix out(m.rows(), m.cols(), Scalar::in(field, 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to(field);
  return out;
}

LambdaMatrix to_lambda(const KMatrix& m) {
  LambdaMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = LaurentPoly(m(i, j));
  return out;
}

namespace {

std::uint32_t matrix_modulus(const KMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).modulus() != 0) return m(i, j).modulus();
  return 0;
}

std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(KMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(piv, r);
    a.scale_row(r, a(r, c).inverse());
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (i != r && !a(i, c).is_zero()) a.add_row_multiple(i, r, -a(i, c));
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const KMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (matrix_modulus(m) != 0) {
    KMatrix a = m;
    return rref(a).size();
  }
  std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class den = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).rational().get_den().get_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& q = m(i, j).rational();
      rows[i][j] = q.get_num() * (den / q.get_den());
    }
  }
  return bareiss_rank(std::move(rows), m.cols());
}

std::vector<KVector> kernel_basis(const KMatrix& m) {
  KMatrix a = m;
  std::vector<std::size_t> pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  Scalar zero = Scalar::in(FieldSpec::rationals(), 0);
  if (auto p = matrix_modulus(m)) zero = Scalar::in(FieldSpec::prime(p), 0);
  std::vector<KVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    KVector v(m.cols(), zero);
    v[free] = zero + Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

KVector mat_vec(const KMatrix& m, const KVector& x) {
  if (x.size() != m.cols()) throw std::invalid_argument("apply: dimension mismatch");
  KVector y(m.rows(), Scalar(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
  return y;
}

KMatrix from_columns(const std::vector<KVector>& columns, std::size_t dim) {
  KMatrix out(dim, columns.size(), Scalar(0));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != dim) throw std::invalid_argument("from_columns: ragged input");
    for (std::size_t i = 0; i < dim; ++i) out(i, j) = columns[j][i];
  }
  return out;
}

mpz_class determinant(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

LaurentPoly determinant(const LambdaMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly(1);
  LambdaMatrix a = m;
  LaurentPoly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k).is_zero()) ++piv;
      if (piv == n) return {};
      a.swap_rows(piv, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = exact_divide(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

std::string to_string(const LambdaMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "") << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace algmono
