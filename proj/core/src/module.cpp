#include "algmono/module.hpp"

#include <algorithm>

namespace algmono {

long LambdaModule::dimension() const {
  if (!is_torsion()) throw NotTorsionError("module has free rank " + std::to_string(free_rank));
  long d = 0;
  for (const auto& f : invariant_factors) d += f.width();
  return d;
}

LambdaModule module_from_presentation(const LambdaMatrix& presentation) {
  LambdaModule m;
  m.presentation = presentation;
  m.smith = smith_normal_form(presentation);
  m.free_rank = presentation.rows() - m.smith.rank;
  for (const auto& f : m.smith.factors) {
    if (f.is_unit()) continue;
    m.invariant_factors.push_back(f);
    if (int v = t_minus_one_valuation(f); v > 0) m.t_minus_one_blocks.push_back(v);
  }
  std::sort(m.t_minus_one_blocks.begin(), m.t_minus_one_blocks.end());
  return m;
}

std::vector<int> primary_part_dims(const LambdaModule& m) {
  if (!m.is_torsion()) throw NotTorsionError("primary part requested for a module of free rank " + std::to_string(m.free_rank));
  return m.t_minus_one_blocks;
}

namespace {

FieldSpec field_of(const LambdaModule& m) {
  for (const auto& f : m.smith.factors)
    if (f.modulus() != 0) return FieldSpec::prime(f.modulus());
  for (std::size_t i = 0; i < m.presentation.rows(); ++i)
    for (std::size_t j = 0; j < m.presentation.cols(); ++j)
      if (auto p = m.presentation(i, j).modulus()) return FieldSpec::prime(p);
  return FieldSpec::rationals();
}

/// Ordinary polynomial remainder of g (offset >= 0) modulo the offset-0 factor d.
LaurentPoly poly_rem(const LaurentPoly& g, const LaurentPoly& d) {
  if (g.is_zero() || g.top_exponent() < d.width()) return g;
  std::vector<Scalar> c(static_cast<std::size_t>(g.top_exponent() + 1), Scalar(0));
  for (long e = g.offset(); e <= g.top_exponent(); ++e) c[static_cast<std::size_t>(e)] = g.coeff(e);
  const long db = d.width();
  Scalar lead_inv = d.leading().inverse();
  for (long k = g.top_exponent(); k >= db; --k) {
    Scalar q = c[static_cast<std::size_t>(k)] * lead_inv;
    if (q.is_zero()) continue;
    for (long j = 0; j <= db; ++j) c[static_cast<std::size_t>(k - db + j)] -= q * d.coeff(j);
  }
  c.resize(static_cast<std::size_t>(db));
  return LaurentPoly(0, std::move(c));
}

/// Canonical representative of g modulo d in span{1, t, ..., t^(deg d - 1)};
/// tinv = t^-1 mod d absorbs negative exponents.
LaurentPoly reduce_mod(const LaurentPoly& g, const LaurentPoly& d, const LaurentPoly& tinv) {
  if (g.is_zero()) return g;
  const long shift = g.offset();
  LaurentPoly acc = poly_rem(g.shifted(-shift), d);
  const LaurentPoly step = shift >= 0 ? LaurentPoly::monomial(Scalar(1), 1) : tinv;
  for (long i = 0; i < (shift >= 0 ? shift : -shift); ++i) acc = poly_rem(acc * step, d);
  return acc;
}

}  // namespace

KModel::KModel(const LambdaModule& m) : module_(m), field_(field_of(m)) {
  if (!m.is_torsion()) throw NotTorsionError("k-model of a module of free rank " + std::to_string(m.free_rank));
  for (std::size_t i = 0; i < m.smith.rank; ++i) {
    const auto& d = m.smith.factors[i];
    if (d.is_unit()) continue;
    // d = c0 + t q(t)  =>  t^-1 = -q(t)/c0 mod d.
    Scalar c0 = d.coeff(0);
    LaurentPoly q = (d - LaurentPoly(c0)).shifted(-1);
    LaurentPoly tinv = q * LaurentPoly(-c0.inverse());
    summands_.push_back({i, d, tinv, dim_, static_cast<std::size_t>(d.width())});
    dim_ += static_cast<std::size_t>(d.width());
  }
  Scalar zero = Scalar::in(field_, 0);
  t_action_ = KMatrix(dim_, dim_, zero);
  for (const auto& s : summands_) {
    // Companion matrix of the monic factor.
    for (std::size_t j = 0; j + 1 < s.degree; ++j) t_action_(s.start + j + 1, s.start + j) = Scalar::in(field_, 1);
    for (std::size_t j = 0; j < s.degree; ++j)
      t_action_(s.start + j, s.start + s.degree - 1) = -s.factor.coeff(static_cast<long>(j));
  }
}

KVector KModel::coordinates(const std::vector<LaurentPoly>& x) const {
  const auto& U = module_.smith.U;
  if (x.size() != U.cols()) throw std::invalid_argument("coordinates: dimension mismatch");
  KVector out(dim_, Scalar::in(field_, 0));
  for (const auto& s : summands_) {
    LaurentPoly y;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!x[j].is_zero()) y += U(s.smith_index, j) * x[j];
    LaurentPoly r = reduce_mod(y, s.factor, s.t_inverse);
    for (std::size_t e = 0; e < s.degree; ++e) out[s.start + e] = r.coeff(static_cast<long>(e)).to(field_);
  }
  return out;
}

std::vector<LaurentPoly> KModel::representative(std::size_t index) const {
  for (const auto& s : summands_) {
    if (index < s.start || index >= s.start + s.degree) continue;
    const auto& Ui = module_.smith.U_inv;
    std::vector<LaurentPoly> v(Ui.rows());
    for (std::size_t r = 0; r < Ui.rows(); ++r) v[r] = Ui(r, s.smith_index).shifted(static_cast<long>(index - s.start));
    return v;
  }
  throw std::out_of_range("basis index out of range");
}

std::vector<KVector> KModel::primary_basis() const {
  if (dim_ == 0) return {};
  KMatrix n = t_action_;
  for (std::size_t i = 0; i < dim_; ++i) n(i, i) -= Scalar::in(field_, 1);
  KMatrix power = n;
  for (std::size_t k = 1; k < dim_; ++k) power = power * n;
  return kernel_basis(power);
}

PrimarySurjectionReport check_primary_surjection(const LambdaMatrix& phi, const LambdaModule& source,
                                                 const LambdaModule& target) {
  if (!source.is_torsion() || !target.is_torsion()) throw NotTorsionError("primary surjection check needs torsion modules");
  if (phi.rows() != target.generators() || phi.cols() != source.generators())
    throw std::invalid_argument("map has shape " + std::to_string(phi.rows()) + "x" + std::to_string(phi.cols()) +
                                ", expected " + std::to_string(target.generators()) + "x" +
                                std::to_string(source.generators()));
  PrimarySurjectionReport rep;
  // Well defined: phi maps every source relation into the target relations.
  LambdaMatrix images = phi * source.presentation;
  for (std::size_t j = 0; j < images.cols(); ++j)
    if (!solve_in_image(target.smith, images.column(j)))
      throw std::invalid_argument("map does not send relation " + std::to_string(j) + " into the target relations");
  rep.well_defined = true;
  // Surjective: coker [phi | target relations] = 0.
  SmithForm joint = smith_normal_form(phi.hconcat(target.presentation));
  rep.surjective = joint.rank == target.generators() &&
                   std::all_of(joint.factors.begin(), joint.factors.end(), [](const LaurentPoly& f) { return f.is_unit(); });
  if (!rep.surjective) throw NotSurjectiveError("map is not surjective");

  KModel src(source), tgt(target);
  std::vector<KVector> columns;
  for (std::size_t b = 0; b < src.dimension(); ++b) {
    auto rep_vec = src.representative(b);
    std::vector<LaurentPoly> image(phi.rows());
    for (std::size_t i = 0; i < phi.rows(); ++i)
      for (std::size_t j = 0; j < phi.cols(); ++j)
        if (!rep_vec[j].is_zero()) image[i] += phi(i, j) * rep_vec[j];
    columns.push_back(tgt.coordinates(image));
  }
  KMatrix induced = from_columns(columns, tgt.dimension());
  auto src_primary = src.primary_basis();
  auto tgt_primary = tgt.primary_basis();
  rep.source_primary_dim = src_primary.size();
  rep.target_primary_dim = tgt_primary.size();
  rep.source_blocks = source.t_minus_one_blocks;
  rep.target_blocks = target.t_minus_one_blocks;
  std::vector<KVector> restricted;
  for (const auto& v : src_primary) restricted.push_back(mat_vec(induced, v));
  rep.restricted_rank = rank(from_columns(restricted, tgt.dimension()));
  rep.primary_surjective = rep.restricted_rank == rep.target_primary_dim && rep.source_primary_dim >= rep.target_primary_dim;
  return rep;
}

}  // namespace algmono
