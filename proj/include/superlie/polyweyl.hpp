#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "superlie/exactla.hpp"
#include "superlie/symplectic.hpp"

namespace superlie {

/// Exponent vector of a monomial in the positional basis of v.
using Exponent = std::vector<unsigned>;

/// An element of S(v), identified with W(v) through symmetrization.
///
/// Terms are kept in a lexicographically ordered map with no zero
/// coefficients, so equality is exact and serialization is canonical.
/// The empty map is the zero element.
class PolyElement {
public:
  using Terms = std::map<Exponent, Scalar>;

  explicit PolyElement(SpacePtr space);

  static PolyElement constant(SpacePtr space, const Scalar& c);
  static PolyElement linear(SpacePtr space, const Vector& v);
  static PolyElement variable(SpacePtr space, std::size_t i);
  static PolyElement monomial(SpacePtr space, Exponent exp, const Scalar& coeff = 1);

  const SpacePtr& space() const noexcept { return space_; }
  std::size_t nvars() const noexcept { return space_->dim(); }
  const Terms& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  /// Highest total degree, −1 for zero.
  int degree() const;
  /// True for zero too.
  bool is_homogeneous(unsigned n) const;
  Scalar coeff(const Exponent& e) const;
  /// Degree-1 coefficients as a vector of v.
  Vector linear_part() const;

  /// Accumulates c·x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const Scalar& c);

  PolyElement& operator+=(const PolyElement& o);
  PolyElement& operator-=(const PolyElement& o);
  PolyElement& operator*=(const Scalar& s);

  friend bool operator==(const PolyElement& a, const PolyElement& b) {
    return a.terms_ == b.terms_ && (a.space_ == b.space_ || *a.space_ == *b.space_);
  }

private:
  SpacePtr space_;
  Terms terms_;
};

PolyElement operator+(PolyElement a, const PolyElement& b);
PolyElement operator-(PolyElement a, const PolyElement& b);
PolyElement operator-(PolyElement a);
PolyElement operator*(const Scalar& s, PolyElement a);

/// Throws SpaceMismatch unless both live on the same symplectic space.
void require_same_space(const PolyElement& a, const PolyElement& b);

/// Commutative product of S(v).
PolyElement sym_product(const PolyElement& a, const PolyElement& b);

/// Contraction ι(u): the degree −1 derivation with ι(u)v = (u, v).
PolyElement iota(const Vector& u, const PolyElement& a);

/// Weyl product a∘b. For linear u, u∘b = u·b + ι(u)b; longer left factors
/// recurse through (u·y)∘b = u∘(y∘b) − (ι(u)y)∘b.
PolyElement weyl_product(const PolyElement& a, const PolyElement& b);
/// a∘b − b∘a
PolyElement weyl_commutator(const PolyElement& a, const PolyElement& b);

/// Component in S⁰(v).
Scalar chi(const PolyElement& a);

/// The extended form on S(v), evaluated as χ(a∘b).
Scalar bilinear_form(const PolyElement& a, const PolyElement& b);

/// Homogeneous components keyed by degree; zero components are absent.
using GradedDecomposition = std::map<unsigned, PolyElement>;

GradedDecomposition grade(const PolyElement& a);
/// Degree-n component (zero when absent).
PolyElement component(const PolyElement& a, unsigned n);
PolyElement reassemble(const GradedDecomposition& g, SpacePtr space);

/// One homogeneous piece of J(a): J acts on degree n as iⁿ, recorded as
/// sign (−1)^⌊n/2⌋ and whether a factor i remains (n odd).
struct JComponent {
  unsigned degree;
  int sign;
  bool imaginary;
  PolyElement value;  // sign already applied; the factor i is implicit
};

std::vector<JComponent> apply_J(const PolyElement& a);
/// J², a real automorphism: (−1)ⁿ on degree n.
PolyElement apply_J_squared(const PolyElement& a);
/// J(a) == a, i.e. only degrees ≡ 0 mod 4 occur.
bool is_J_fixed(const PolyElement& a);

}  // namespace superlie
