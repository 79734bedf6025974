#include "algmono/aomoto.hpp"

namespace algmono {

namespace {

KVector to_field(const KVector& v, FieldSpec field) {
  KVector out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s.to(field));
  return out;
}

bool is_zero_vector(const KVector& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

std::vector<KVector> columns_of(const KMatrix& m) {
  std::vector<KVector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return cols;
}

}  // namespace

std::size_t CohomologyBasis::class_rank(const std::vector<KVector>& cochains) const {
  auto cols = columns_of(coboundary);
  const std::size_t base = rank(from_columns(cols, coboundary.rows()));
  cols.insert(cols.end(), cochains.begin(), cochains.end());
  return rank(from_columns(cols, coboundary.rows())) - base;
}

bool CohomologyBasis::is_coboundary(const KVector& c) const { return class_rank({c}) == 0; }

CohomologyBasis cohomology_basis(const Presentation& p, FieldSpec field) {
  CohomologyBasis b;
  b.field = field;
  b.coboundary = to_field(exponent_matrix(p), field);
  if (b.coboundary.rows() == 0) b.coboundary = KMatrix(0, p.num_generators(), Scalar::in(field, 0));
  b.h1_basis = kernel_basis(b.coboundary);
  b.h2_dim = p.num_relators() - rank(b.coboundary);
  return b;
}

KVector cup_evaluate(const Presentation& p, const KVector& a, const KVector& b) {
  const std::size_t n = p.num_generators();
  if (a.size() != n || b.size() != n) throw std::invalid_argument("cup_evaluate: cochain length mismatch");
  KVector out;
  out.reserve(p.num_relators());
  for (std::size_t j = 0; j < p.num_relators(); ++j) {
    Scalar a_prefix(0), a_total(0), b_total(0), value(0);
    for (const auto& l : p.relators()[j].expanded()) {
      if (l.exp > 0) {
        value += a_prefix * b[l.gen];
        a_prefix += a[l.gen];
      } else {
        a_prefix -= a[l.gen];
        value -= a_prefix * b[l.gen];
      }
    }
    for (const auto& l : p.relators()[j].letters()) {
      a_total += a[l.gen] * Scalar(l.exp);
      b_total += b[l.gen] * Scalar(l.exp);
    }
    if (!a_total.is_zero() || !b_total.is_zero())
      throw NotACocycleError("cochain does not vanish on relator " + std::to_string(j + 1));
    out.push_back(value);
  }
  return out;
}

AomotoComplex aomoto_complex_for(const Presentation& p, const KVector& z_in, FieldSpec field) {
  const KVector z = to_field(z_in, field);
  if (z.size() != p.num_generators()) throw std::invalid_argument("class has wrong length");
  if (is_zero_vector(z)) throw std::invalid_argument("the zero class has no Aomoto complex");
  CohomologyBasis coh = cohomology_basis(p, field);
  if (!is_zero_vector(mat_vec(coh.coboundary, z))) throw NotACocycleError("class does not vanish on the relators");

  AomotoComplex ax;
  ax.nu_class = z;
  ax.h1_dim = coh.h1_basis.size();
  ax.h2_dim = coh.h2_dim;
  ax.map01 = from_columns({z}, z.size());
  std::vector<KVector> products;
  for (const auto& h : coh.h1_basis) products.push_back(cup_evaluate(p, z, h));
  ax.map12 = from_columns(products, p.num_relators());
  ax.complex_condition = coh.is_coboundary(cup_evaluate(p, z, z));

  const std::size_t rank01 = 1;  // z != 0 and there are no 1-coboundaries
  const std::size_t rank12 = coh.class_rank(products);
  ax.beta0 = 1 - rank01;
  ax.beta1 = (ax.h1_dim - rank12) - rank01;
  ax.beta2_complex = ax.h2_dim - rank12;
  return ax;
}

AomotoComplex aomoto_complex(const Presentation& p, const ZMap& nu, FieldSpec field) {
  validate_zmap(p, nu);
  KVector z;
  for (long v : nu.values) z.push_back(Scalar::in(field, v));
  return aomoto_complex_for(p, z, field);
}

bool resonance_membership(const Presentation& p, const KVector& z, FieldSpec field) {
  return aomoto_complex_for(p, z, field).beta1 > 0;
}

}  // namespace algmono
