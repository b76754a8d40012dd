#include "superlie/symplectic.hpp"

#include "superlie/errors.hpp"

namespace superlie {

SymplecticSpace::SymplecticSpace(Matrix omega) : omega_(std::move(omega)) {
  if (!omega_.is_square())
    throw Error(ErrorCode::DimensionMismatch, "symplectic form must be square");
}

void validate(const SymplecticSpace& space) {
  const Matrix& w = space.omega();
  if (space.dim() % 2 != 0) throw Error(ErrorCode::OddDimension);
  for (std::size_t i = 0; i < space.dim(); ++i)
    for (std::size_t j = i; j < space.dim(); ++j)
      if (w(i, j) != -w(j, i)) throw Error(ErrorCode::NotAlternating, {}, {i, j});
  if (rank(w) != space.dim()) throw Error(ErrorCode::Singular);
}

SpacePtr make_space(Matrix omega) {
  auto space = std::make_shared<const SymplecticSpace>(std::move(omega));
  validate(*space);
  return space;
}

SpacePtr standard_space(std::size_t m) {
  Matrix w(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    w(i, m + i) = 1;
    w(m + i, i) = -1;
  }
  return make_space(std::move(w));
}

Scalar pair(const SymplecticSpace& space, const Vector& u, const Vector& v) {
  if (u.size() != space.dim() || v.size() != space.dim())
    throw Error(ErrorCode::DimensionMismatch, "pair");
  const Matrix& w = space.omega();
  Scalar s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0 && w(i, j) != 0) s += u[i] * w(i, j) * v[j];
  }
  return s;
}

Vector basis_vector(const SymplecticSpace& space, std::size_t i) {
  Vector v = zero_vector(space.dim());
  v.at(i) = 1;
  return v;
}

bool is_in_sp(const SymplecticSpace& space, const Matrix& alpha) {
  if (alpha.rows() != space.dim() || alpha.cols() != space.dim())
    throw Error(ErrorCode::DimensionMismatch, "is_in_sp");
  return (alpha.transpose() * space.omega() + space.omega() * alpha).is_zero();
}

std::vector<Matrix> sp_basis(const SymplecticSpace& space) {
  const std::size_t n = space.dim();
  const Matrix& w = space.omega();
  // (αᵀω + ωα)_{ij} = Σ_k α_ki ω_kj + ω_ik α_kj, linear in the n² entries α_kl.
  Matrix system(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        system(i * n + j, k * n + i) += w(k, j);
        system(i * n + j, k * n + j) += w(i, k);
      }
  std::vector<Matrix> basis;
  for (const auto& v : kernel_basis(system)) {
    Matrix a(n, n);
    for (std::size_t k = 0; k < n * n; ++k) a(k / n, k % n) = v[k];
    basis.push_back(std::move(a));
  }
  return basis;
}

}  // namespace superlie
