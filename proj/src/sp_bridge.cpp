#include "superlie/sp_bridge.hpp"

#include <algorithm>
#include <optional>

#include "superlie/errors.hpp"

namespace superlie {

SpElement::SpElement(SpacePtr space, Matrix matrix)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
  if (!is_in_sp(*space_, matrix_)) throw Error(ErrorCode::NotSymplectic);
}

QuadraticElement::QuadraticElement(PolyElement poly) : poly_(std::move(poly)) {
  if (!poly_.is_homogeneous(2))
    throw Error(ErrorCode::InvalidInput, "quadratic element must be homogeneous of degree 2");
}

Vector ad_on_v(const QuadraticElement& w, const Vector& v) {
  return Scalar(-2) * iota(v, w.poly()).linear_part();
}

SpElement a_map(const QuadraticElement& w) {
  const auto& space = w.space();
  const std::size_t n = space->dim();
  Matrix a(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector image = ad_on_v(w, basis_vector(*space, j));
    for (std::size_t i = 0; i < n; ++i) a(i, j) = image[i];
  }
  return SpElement(space, std::move(a));
}

PolyElement tau_action(const SpElement& alpha, const PolyElement& a) {
  if (!(*alpha.space() == *a.space())) throw Error(ErrorCode::SpaceMismatch);
  const Matrix& m = alpha.matrix();
  PolyElement out(a.space());
  for (const auto& [e, c] : a.terms()) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m(i, j) == 0) continue;
        // x_j ↦ Σ_i alpha_ij x_i inside x^e
        Exponent d = e;
        --d[j];
        ++d[i];
        out.add_term(d, c * e[j] * m(i, j));
      }
    }
  }
  return out;
}

QuadraticBasis::QuadraticBasis(SpacePtr space) : space_(std::move(space)) {
  const std::size_t n = space_->dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Exponent e(n, 0);
      ++e[i];
      ++e[j];
      monomials_.push_back(std::move(e));
    }
  // Lexicographic order, matching PolyElement term order.
  std::sort(monomials_.begin(), monomials_.end());

  const std::size_t k = monomials_.size();
  std::vector<PolyElement> elems;
  elems.reserve(k);
  for (const auto& e : monomials_) elems.push_back(PolyElement::monomial(space_, e));
  gram_ = Matrix(k, k);
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q) gram_(p, q) = bilinear_form(elems[p], elems[q]);
  gram_inverse_ = invert(gram_);
  images_.reserve(k);
  for (const auto& el : elems) images_.push_back(a_map(QuadraticElement(el)).matrix());
}

QuadraticElement QuadraticBasis::element(std::size_t p) const {
  return QuadraticElement(PolyElement::monomial(space_, monomials_.at(p)));
}

QuadraticElement QuadraticBasis::from_coords(const Vector& coords) const {
  if (coords.size() != size()) throw Error(ErrorCode::DimensionMismatch, "S2 coordinates");
  PolyElement p(space_);
  for (std::size_t i = 0; i < coords.size(); ++i) p.add_term(monomials_[i], coords[i]);
  return QuadraticElement(std::move(p));
}

Vector QuadraticBasis::coords(const QuadraticElement& w) const {
  if (!(*w.space() == *space_)) throw Error(ErrorCode::SpaceMismatch);
  Vector out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = w.poly().coeff(monomials_[i]);
  return out;
}

QuadraticElement QuadraticBasis::a_inverse(const SpElement& alpha) const {
  if (!(*alpha.space() == *space_)) throw Error(ErrorCode::SpaceMismatch);
  const Matrix& omega = space_->omega();
  const Matrix& m = alpha.matrix();
  const std::size_t n = space_->dim();
  Vector rhs(size());
  for (std::size_t p = 0; p < size(); ++p) {
    std::size_t i = 0;
    while (monomials_[p][i] == 0) ++i;
    const std::size_t j = monomials_[p][i] == 2 ? i : [&] {
      std::size_t t = i + 1;
      while (monomials_[p][t] == 0) ++t;
      return t;
    }();
    // (x_i, alpha x_j) = Σ_k omega_ik alpha_kj
    Scalar s = 0;
    for (std::size_t k = 0; k < n; ++k) s += omega(i, k) * m(k, j);
    rhs[p] = Scalar(-1, 2) * s;
  }
  return from_coords(gram_inverse_ * rhs);
}

Scalar QuadraticBasis::trace_ratio() const {
  if (size() == 0) throw Error(ErrorCode::InvalidInput, "trace ratio needs dim v >= 2");
  std::optional<Scalar> ratio;
  for (std::size_t p = 0; p < size() && !ratio; ++p)
    for (std::size_t q = 0; q < size(); ++q) {
      const Scalar t = trace_of_product(images_[p], images_[q]);
      if (t != 0) {
        ratio = gram_(p, q) / t;
        break;
      }
    }
  if (!ratio) throw Error(ErrorCode::InconsistentRatio, "trace form vanishes on S2");
  for (std::size_t p = 0; p < size(); ++p)
    for (std::size_t q = 0; q < size(); ++q)
      if (gram_(p, q) != *ratio * trace_of_product(images_[p], images_[q]))
        throw Error(ErrorCode::InconsistentRatio, {}, {p, q});
  return *ratio;
}

QuadraticElement a_inverse(const SpElement& alpha) {
  return QuadraticBasis(alpha.space()).a_inverse(alpha);
}

QuadraticElement a_inverse(const SpacePtr& space, const Matrix& alpha) {
  return a_inverse(SpElement(space, alpha));
}

Scalar trace_ratio_constant(const SpacePtr& space) {
  if (space->dim() < 2) throw Error(ErrorCode::InvalidInput, "trace ratio needs dim v >= 2");
  return QuadraticBasis(space).trace_ratio();
}

}  // namespace superlie
