#pragma once

#include <cstddef>
#include <vector>

#include "superlie/exactla.hpp"

namespace superlie {

/// One structure constant: [x_i, x_j] has coefficient `value` on x_l.
struct BracketEntry {
  std::size_t i;
  std::size_t j;
  std::size_t l;
  Scalar value;
};

/// Structure constants of an ordinary Lie algebra on the basis 0..dim-1,
/// stored densely as one coefficient vector per ordered pair.
class LieAlgebra {
public:
  explicit LieAlgebra(std::size_t dim = 0);

  /// Sparse entries with i != j; [x_j, x_i] is filled in as the negative.
  /// Entries for the same (i, j, l) accumulate.
  static LieAlgebra from_entries(std::size_t dim, const std::vector<BracketEntry>& entries);

  std::size_t dim() const noexcept { return dim_; }
  const Vector& bracket(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  Vector bracket(const Vector& x, const Vector& y) const;

  /// Raw write with no completion; lets callers describe broken tables.
  void set_bracket(std::size_t i, std::size_t j, Vector v);

  /// Nonzero entries with i < j, ordered by (i, j, l).
  std::vector<BracketEntry> entries() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

private:
  std::size_t dim_;
  std::vector<Vector> table_;
};

/// g₀ with its invariant symmetric form B_{g₀}.
struct QuadraticLieAlgebra {
  LieAlgebra algebra;
  Matrix form;

  std::size_t dim() const noexcept { return algebra.dim(); }
};

/// Checks, in order: antisymmetry, Jacobi on every basis triple, form
/// nonsingular, form symmetric, form invariant. Throws the first of
/// NotAntisymmetric(i,j), JacobiFails(i,j,l), FormSingular,
/// InvalidInput(i,j), FormNotInvariant(i,j,l).
void validate_lie(const QuadraticLieAlgebra& g);
/// Just the bracket checks of `validate_lie`.
void validate_bracket(const LieAlgebra& g);

/// Dual basis x^i with B(x_i, x^j) = δ_ij.
struct CasimirPairs {
  std::vector<Vector> duals;
};

/// Throws FormSingular.
CasimirPairs casimir_pairs(const QuadraticLieAlgebra& g);

/// Structure constants of the span of linearly independent matrices
/// closed under commutators. Throws InvalidInput otherwise.
LieAlgebra matrix_lie_algebra(const std::vector<Matrix>& basis);

/// Coordinates of `m` in the span of `basis`; throws InvalidInput when
/// m is outside the span or the basis is dependent.
Vector coordinates_in_span(const std::vector<Matrix>& basis, const Matrix& m);

}  // namespace superlie
