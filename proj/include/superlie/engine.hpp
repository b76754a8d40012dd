#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "superlie/errors.hpp"
#include "superlie/lie_core.hpp"
#include "superlie/polyweyl.hpp"
#include "superlie/sp_bridge.hpp"
#include "superlie/superalgebra.hpp"
#include "superlie/symplectic.hpp"

namespace superlie {

/// ν: g₀ → sp(v), one matrix per basis element of g₀.
struct SymplecticRep {
  QuadraticLieAlgebra algebra;
  SpacePtr space;
  std::vector<Matrix> matrices;
};

/// Throws DimensionMismatch, NotSymplectic(i) or NotARepresentation(i,j).
/// Does not re-validate the algebra or the space.
void validate_rep(const SymplecticRep& rep);

/// Outcome of the super-Lie-type decision.
struct TestReport {
  bool verdict = false;
  std::optional<Scalar> casimir_scalar;
  PolyElement obstruction;
  std::vector<CheckResult> diagnostics;
};

/// Raised by the checked construction when the obstruction is nonzero.
class NotSuperLieTypeError : public Error {
public:
  explicit NotSuperLieTypeError(PolyElement obstruction);
  const PolyElement& obstruction() const noexcept { return obstruction_; }

private:
  PolyElement obstruction_;
};

struct TraceIdentity {
  Scalar lhs;
  Scalar rhs;
  Scalar constant_used;
};

/// A validated representation together with its lift ν_* into S²(v).
/// All engine operations go through this; the free functions below
/// build one on the fly.
class LiftedRep {
public:
  explicit LiftedRep(SymplecticRep rep);

  const SymplecticRep& rep() const noexcept { return rep_; }
  const SpacePtr& space() const noexcept { return rep_.space; }
  const QuadraticBasis& basis() const noexcept { return basis_; }
  std::size_t even_dim() const noexcept { return rep_.algebra.dim(); }

  const QuadraticElement& nu_star(std::size_t i) const { return lifts_.at(i); }
  /// ν_* of an arbitrary element of g₀ given in coordinates.
  QuadraticElement nu_star(const Vector& x) const;
  /// The t ∈ g₀ with B_{g₀}(x_i, t) = (ν_*(x_i), w) for every i.
  Vector nu_star_transpose(const QuadraticElement& w) const;

  /// Σ_i ν_*(x_i) ∘ ν_*(x^i) before grading.
  PolyElement casimir_polynomial() const;
  GradedDecomposition casimir_image() const;
  TestReport decide() const;
  TraceIdentity trace_identity_check() const;
  SuperAlgebraData construct() const;
  SuperAlgebraData construct_unchecked() const;

private:
  SymplecticRep rep_;
  QuadraticBasis basis_;
  std::vector<QuadraticElement> lifts_;
  std::vector<Vector> lift_coords_;
  Matrix form_inverse_;
};

QuadraticElement nu_star(const SymplecticRep& rep, std::size_t i);
Vector nu_star_transpose(const SymplecticRep& rep, const QuadraticElement& w);
/// Components only in degrees 0 and 4; anything else throws
/// InternalDegreeLeak.
GradedDecomposition casimir_image(const SymplecticRep& rep);
TestReport decide(const SymplecticRep& rep);
/// Throws NotSuperLieTypeError when the verdict is false.
SuperAlgebraData construct_superalgebra(const SymplecticRep& rep);
/// Diagnostic only: the odd bracket 2ν_*^t(y·y′) even when it cannot
/// satisfy Jacobi.
SuperAlgebraData construct_superalgebra_unchecked(const SymplecticRep& rep);
/// Throws NotSuperLieType when the verdict is false and IdentityViolated
/// when the scalar disagrees with the trace formula.
TraceIdentity trace_identity_check(const SymplecticRep& rep);

/// Σ over the odd triple of [y_a,[y_b,y_c]] cyclically; an element of the
/// odd part, returned in odd coordinates.
Vector jacobiator(const SuperAlgebraData& s, std::size_t a, std::size_t b, std::size_t c);

/// 2 ι(y_c) ι(y_b) ι(y_a) p as a vector of v.
Vector triple_contraction(const PolyElement& p, std::size_t a, std::size_t b, std::size_t c);

/// (g₀, ν, B) read off a superalgebra whose odd form is nonsingular.
SymplecticRep rep_from_superalgebra(const SuperAlgebraData& s);

/// Same representation with B_{g₀} multiplied by lambda.
SymplecticRep scale_form(const SymplecticRep& rep, const Scalar& lambda);

}  // namespace superlie
