#include "algmono/smith.hpp"

#include <optional>
#include <utility>

namespace algmono {

namespace {

/// Working state: S = U A V with U_inv, V_inv kept in sync.
struct Reduction {
  LambdaMatrix S, U, U_inv, V, V_inv;

  void swap_rows(std::size_t a, std::size_t b) {
    S.swap_rows(a, b);
    U.swap_rows(a, b);
    U_inv.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    S.swap_cols(a, b);
    V.swap_cols(a, b);
    V_inv.swap_rows(a, b);
  }
  // row[dst] += f row[src]; the inverse update is col[src] -= col[dst] f.
  void add_row(std::size_t dst, std::size_t src, const LaurentPoly& f) {
    S.add_row_multiple(dst, src, f);
    U.add_row_multiple(dst, src, f);
    U_inv.add_col_multiple(src, dst, -f);
  }
  void add_col(std::size_t dst, std::size_t src, const LaurentPoly& f) {
    S.add_col_multiple(dst, src, f);
    V.add_col_multiple(dst, src, f);
    V_inv.add_row_multiple(src, dst, -f);
  }
  // Scale row r by the unit u.
  void scale_row(std::size_t r, const LaurentPoly& u) {
    S.scale_row(r, u);
    U.scale_row(r, u);
    U_inv.scale_col(r, u.unit_inverse());
  }
};

/// Minimal-width nonzero entry of the trailing submatrix, ties by (row, col).
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const LambdaMatrix& s, std::size_t k) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  long best_width = 0;
  for (std::size_t i = k; i < s.rows(); ++i)
    for (std::size_t j = k; j < s.cols(); ++j) {
      const auto& e = s(i, j);
      if (e.is_zero()) continue;
      if (!best || e.width() < best_width) {
        best = {i, j};
        best_width = e.width();
      }
    }
  return best;
}

/// Divides each trailing row by its rational content (a unit over Q).
void rescale_rows(Reduction& red, std::size_t k) {
  for (std::size_t i = k; i < red.S.rows(); ++i) {
    mpz_class num = 0, den = 1;
    bool any = false;
    for (std::size_t j = k; j < red.S.cols(); ++j) {
      const auto& e = red.S(i, j);
      if (e.is_zero()) continue;
      if (e.modulus() != 0) return;
      any = true;
      mpq_class c = rational_content(e);
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num().get_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    }
    if (!any) continue;
    mpq_class content(num, den);
    content.canonicalize();
    if (content == 1) continue;
    red.scale_row(i, LaurentPoly(Scalar(mpq_class(1 / content))));
  }
}

}  // namespace

LambdaMatrix SmithForm::diagonal(std::size_t rows, std::size_t cols) const {
  LambdaMatrix d(rows, cols);
  for (std::size_t i = 0; i < factors.size(); ++i) d(i, i) = factors[i];
  return d;
}

SmithForm smith_normal_form(const LambdaMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  Reduction red{a, LambdaMatrix::identity(m), LambdaMatrix::identity(m), LambdaMatrix::identity(n),
                LambdaMatrix::identity(n)};
  std::size_t k = 0;
  while (k < m && k < n) {
    auto piv = find_pivot(red.S, k);
    if (!piv) break;
    red.swap_rows(k, piv->first);
    red.swap_cols(k, piv->second);
    for (;;) {
      bool residue = false;
      const LaurentPoly p = red.S(k, k);
      for (std::size_t i = k + 1; i < m; ++i) {
        if (red.S(i, k).is_zero()) continue;
        auto [q, r] = laurent_divmod(red.S(i, k), p);
        red.add_row(i, k, -q);
        residue = residue || !r.is_zero();
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (red.S(k, j).is_zero()) continue;
        auto [q, r] = laurent_divmod(red.S(k, j), p);
        red.add_col(j, k, -q);
        residue = residue || !r.is_zero();
      }
      if (!residue) {
        // Pivot must divide the whole trailing block; otherwise pull an
        // offending row into row k and reduce again.
        std::optional<std::size_t> bad;
        for (std::size_t i = k + 1; i < m && !bad; ++i)
          for (std::size_t j = k + 1; j < n; ++j)
            if (!divides(p, red.S(i, j))) {
              bad = i;
              break;
            }
        if (!bad) break;
        red.add_row(k, *bad, LaurentPoly(1));
      }
      rescale_rows(red, k);
      auto next = find_pivot(red.S, k);
      red.swap_rows(k, next->first);
      red.swap_cols(k, next->second);
    }
    red.scale_row(k, red.S(k, k).unit_part().unit_inverse());
    rescale_rows(red, k + 1);
    ++k;
  }

  SmithForm out;
  out.rank = k;
  for (std::size_t i = 0; i < k; ++i) out.factors.push_back(red.S(i, i));
  out.U = std::move(red.U);
  out.U_inv = std::move(red.U_inv);
  out.V = std::move(red.V);
  out.V_inv = std::move(red.V_inv);
  return out;
}

bool solve_in_image(const SmithForm& snf, const std::vector<LaurentPoly>& b, std::vector<LaurentPoly>* x) {
  // A x = b  <=>  D (V^-1 x) = U b.
  const std::size_t m = snf.U.rows(), n = snf.V.rows();
  if (b.size() != m) throw std::invalid_argument("solve_in_image: dimension mismatch");
  std::vector<LaurentPoly> ub(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (!b[j].is_zero()) ub[i] += snf.U(i, j) * b[j];
  std::vector<LaurentPoly> y(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (i < snf.rank) {
      auto [q, r] = laurent_divmod(ub[i], snf.factors[i]);
      if (!r.is_zero()) return false;
      y[i] = q;
    } else if (!ub[i].is_zero()) {
      return false;
    }
  }
  if (x) {
    x->assign(n, LaurentPoly());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!y[j].is_zero()) (*x)[i] += snf.V(i, j) * y[j];
  }
  return true;
}

}  // namespace algmono
