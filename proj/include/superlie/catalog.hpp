#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "superlie/engine.hpp"

namespace superlie {

/// so(m) ⊕ sp(2n) on C^m ⊗ C^{2n}. The form is λ·tr on so(m) plus tr on
/// sp(2n), with λ solved for so that the obstruction vanishes.
/// Throws InvalidInput (m or n zero), TooLarge (m·2n > 16), NoCalibration.
SymplecticRep build_osp_even(std::size_t m, std::size_t n);
/// The λ found by build_osp_even; absent when m < 2 (no so part).
std::optional<Scalar> osp_even_calibration(std::size_t m, std::size_t n);

/// 2-dim abelian g₀ with form diag(1,−1) acting by diag(1,−1), diag(−1,1).
SymplecticRep build_gl11_even();

/// sl(2) with its trace form on the irreducible of dimension two_j + 1.
/// Throws NotSymplectic for even two_j, TooLarge beyond 7.
SymplecticRep build_spin_rep(std::size_t two_j);

/// k-dim abelian algebra with the identity form and v = 0.
SymplecticRep build_abelian(std::size_t k);

/// sl(2) with its trace form acting trivially on the standard 2m-dim space.
SymplecticRep build_trivial(std::size_t m);

/// g = s ⊕ s*, as explicit tables and as (ν, B_g). Even basis is
/// [s₀, s₀*], odd basis [s₁, s₁*]. Throws InvalidInput unless s verifies.
struct DoubleResult {
  SymplecticRep rep;
  SuperAlgebraData tables;
};
DoubleResult build_double(const SuperAlgebraData& s);

/// π: s → End(V) for V = V₀ ⊕ V₁, one block matrix per basis element of
/// s (combined indexing, even first).
struct SuperRepresentation {
  std::size_t even_dim = 0;
  std::size_t odd_dim = 0;
  std::vector<Matrix> images;
};

struct FormPair {
  Matrix even;
  Matrix odd;
};

SuperRepresentation adjoint_representation(const SuperAlgebraData& s);

/// Gram matrices of (x, y) = str π(x)π(y). Throws NotARepresentation(i,j)
/// and NotInvariant if the result fails invariance.
FormPair supertrace_form(const SuperAlgebraData& s, const SuperRepresentation& pi);

/// g / rad B with the induced form. Throws NotInvariant when the form is
/// not invariant and supersymmetric, NotAnIdeal if the radical is not.
SuperAlgebraData riemannian_quotient(const SuperAlgebraData& s, const FormPair& form);

/// A registry name with its arguments, e.g. osp_even(2,1) or double(gl11).
struct InstanceSpec {
  std::string name;
  std::vector<std::size_t> params;
  std::shared_ptr<InstanceSpec> inner;  // only for double(...)
};

/// Throws UnknownInstance for names outside the registry or malformed text.
InstanceSpec parse_instance(const std::string& text);
/// Canonical text form, e.g. "osp_even(2,1)".
std::string instance_text(const InstanceSpec& spec);
SymplecticRep build_instance(const InstanceSpec& spec);
SymplecticRep build_instance(const std::string& text);

struct InstanceDescriptor {
  std::string name;
  std::vector<std::size_t> parameters;
  bool expected_verdict;
  std::optional<Scalar> expected_scalar;
};

/// Curated positive and negative instances; `name` parses with
/// parse_instance when combined with `parameters`.
std::vector<InstanceDescriptor> curated_instances();
std::string descriptor_text(const InstanceDescriptor& d);

}  // namespace superlie
