#pragma once

#include <cstddef>
#include <vector>

#include "superlie/exactla.hpp"
#include "superlie/polyweyl.hpp"
#include "superlie/symplectic.hpp"

namespace superlie {

/// A matrix in sp(v). Construction throws NotSymplectic otherwise.
class SpElement {
public:
  SpElement(SpacePtr space, Matrix matrix);

  const SpacePtr& space() const noexcept { return space_; }
  const Matrix& matrix() const noexcept { return matrix_; }

  friend bool operator==(const SpElement& a, const SpElement& b) {
    return a.matrix_ == b.matrix_ && *a.space_ == *b.space_;
  }

private:
  SpacePtr space_;
  Matrix matrix_;
};

/// An element of S²(v). Construction throws InvalidInput unless the
/// polynomial is homogeneous of degree 2 (zero allowed).
class QuadraticElement {
public:
  explicit QuadraticElement(PolyElement poly);

  const PolyElement& poly() const noexcept { return poly_; }
  const SpacePtr& space() const noexcept { return poly_.space(); }

  friend bool operator==(const QuadraticElement& a, const QuadraticElement& b) {
    return a.poly_ == b.poly_;
  }

private:
  PolyElement poly_;
};

/// (ad w)(v) = [w, v] = −2 ι(v) w, returned as a vector of v.
Vector ad_on_v(const QuadraticElement& w, const Vector& v);

/// A(w) = (ad w)|v, the isomorphism S²(v) → sp(v).
SpElement a_map(const QuadraticElement& w);

/// Derivation of S(v) extending v ↦ alpha·v; agrees with ad A⁻¹(alpha).
PolyElement tau_action(const SpElement& alpha, const PolyElement& a);

/// Monomial basis of S²(v) together with the data every inverse problem
/// over it needs: the Gram matrix of the extended form restricted to S²
/// and the images A(q) of each basis monomial. Built once per space.
class QuadraticBasis {
public:
  explicit QuadraticBasis(SpacePtr space);

  const SpacePtr& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const std::vector<Exponent>& monomials() const noexcept { return monomials_; }
  const Matrix& gram() const noexcept { return gram_; }
  const std::vector<Matrix>& images() const noexcept { return images_; }

  QuadraticElement element(std::size_t p) const;
  QuadraticElement from_coords(const Vector& coords) const;
  Vector coords(const QuadraticElement& w) const;

  /// Solves (x_i·x_j, w) = −½ (x_i, alpha x_j) over the monomial basis.
  QuadraticElement a_inverse(const SpElement& alpha) const;
  /// Unique c with (w, z) = c·tr(A(w)A(z)), checked on all basis pairs.
  Scalar trace_ratio() const;

private:
  SpacePtr space_;
  std::vector<Exponent> monomials_;
  Matrix gram_;
  Matrix gram_inverse_;
  std::vector<Matrix> images_;
};

QuadraticElement a_inverse(const SpElement& alpha);
/// Checked variant for raw matrices: throws NotSymplectic.
QuadraticElement a_inverse(const SpacePtr& space, const Matrix& alpha);

/// Fitted ratio between the extended form on S²(v) and the trace form
/// on sp(v). Throws InvalidInput for dim 0 and InconsistentRatio if no
/// single constant fits.
Scalar trace_ratio_constant(const SpacePtr& space);

}  // namespace superlie
