#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "superlie/exactla.hpp"
#include "superlie/lie_core.hpp"

namespace superlie {

/// Odd-odd brackets [y_a, y_b] ∈ g₀. The bracket of two odd elements is
/// symmetric, so each unordered pair is stored once.
class OddBracketTable {
public:
  OddBracketTable() = default;
  OddBracketTable(std::size_t odd_dim, std::size_t even_dim);

  std::size_t odd_dim() const noexcept { return odd_dim_; }
  std::size_t even_dim() const noexcept { return even_dim_; }

  const Vector& at(std::size_t a, std::size_t b) const { return cells_[index(a, b)]; }
  void set(std::size_t a, std::size_t b, Vector v);

  friend bool operator==(const OddBracketTable& x, const OddBracketTable& y) {
    return x.odd_dim_ == y.odd_dim_ && x.even_dim_ == y.even_dim_ && x.cells_ == y.cells_;
  }

private:
  std::size_t index(std::size_t a, std::size_t b) const;

  std::size_t odd_dim_ = 0;
  std::size_t even_dim_ = 0;
  std::vector<Vector> cells_;
};

/// Complete bracket tables of g = g₀ ⊕ g₁ plus the even and odd blocks of
/// a supersymmetric form. Nothing is assumed valid; see verify_superalgebra.
struct SuperAlgebraData {
  LieAlgebra even;
  std::size_t odd_dim = 0;
  /// One odd_dim × odd_dim matrix per even basis element: y ↦ [x_i, y].
  std::vector<Matrix> even_odd;
  OddBracketTable odd_odd;
  Matrix form_even;
  Matrix form_odd;

  std::size_t even_dim() const noexcept { return even.dim(); }
  std::size_t dim() const noexcept { return even.dim() + odd_dim; }

  friend bool operator==(const SuperAlgebraData&, const SuperAlgebraData&) = default;
};

/// Structure constants on the combined basis (even indices first, then
/// odd), with sparse rows for the verification loops.
class SuperTable {
public:
  using Sparse = std::vector<std::pair<std::size_t, Scalar>>;

  explicit SuperTable(const SuperAlgebraData& s);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t even_dim() const noexcept { return even_dim_; }
  bool is_odd(std::size_t i) const noexcept { return i >= even_dim_; }
  int parity(std::size_t i) const noexcept { return is_odd(i) ? 1 : 0; }

  const Sparse& bracket_sparse(std::size_t i, std::size_t j) const {
    return sparse_[i * dim_ + j];
  }
  Vector bracket(std::size_t i, std::size_t j) const;
  /// Bilinear extension to arbitrary (not necessarily homogeneous) vectors.
  Vector bracket(const Vector& x, const Vector& y) const;
  const Matrix& gram() const noexcept { return gram_; }

private:
  std::size_t even_dim_;
  std::size_t dim_;
  std::vector<Sparse> sparse_;
  Matrix gram_;
};

/// Builds tables from brackets on the combined basis (n·n vectors, row
/// major) and the full Gram matrix. Throws InvalidInput if a bracket or
/// the form mixes parities.
SuperAlgebraData assemble_superalgebra(std::size_t even_dim, std::size_t odd_dim,
                                       const std::vector<Vector>& brackets,
                                       const Matrix& gram);

struct CheckResult {
  std::string name;
  bool pass;
  std::string witness;
};

/// Graded antisymmetry, super Jacobi per parity sector, supersymmetry,
/// invariance and nonsingularity of the form. A failing check names the
/// lowest offending basis tuple (combined indexing).
std::vector<CheckResult> verify_superalgebra(const SuperAlgebraData& s);

bool all_pass(const std::vector<CheckResult>& checks);
/// nullptr when no check has that name.
const CheckResult* find_check(const std::vector<CheckResult>& checks, const std::string& name);

}  // namespace superlie
