#pragma once

#include <cstddef>
#include <memory>

#include "superlie/exactla.hpp"

namespace superlie {

/// A vector space v with an alternating form, given by its Gram matrix
/// on the positional basis 0..dim-1. Construction only checks that omega
/// is square; `validate` checks the rest.
class SymplecticSpace {
public:
  explicit SymplecticSpace(Matrix omega);

  std::size_t dim() const noexcept { return omega_.rows(); }
  const Matrix& omega() const noexcept { return omega_; }

  friend bool operator==(const SymplecticSpace& a, const SymplecticSpace& b) {
    return a.omega_ == b.omega_;
  }

private:
  Matrix omega_;
};

using SpacePtr = std::shared_ptr<const SymplecticSpace>;

/// Throws OddDimension, NotAlternating or Singular.
void validate(const SymplecticSpace& space);

/// Validated shared handle, the form every other module works with.
SpacePtr make_space(Matrix omega);

/// Basis e_1..e_m, f_1..f_m (in that order) with (e_i, f_j) = δ_ij.
SpacePtr standard_space(std::size_t m);

/// uᵀ·omega·v
Scalar pair(const SymplecticSpace& space, const Vector& u, const Vector& v);

/// Unit vector for basis index i.
Vector basis_vector(const SymplecticSpace& space, std::size_t i);

/// alphaᵀ·omega + omega·alpha == 0
bool is_in_sp(const SymplecticSpace& space, const Matrix& alpha);

/// Basis of sp(v) as the kernel of alpha ↦ alphaᵀ·omega + omega·alpha.
std::vector<Matrix> sp_basis(const SymplecticSpace& space);

}  // namespace superlie
