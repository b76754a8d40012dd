#include <doctest.h>

#include "../oracles.hpp"
#include "superlie/catalog.hpp"

using namespace superlie;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

void check_all_pass(const SuperAlgebraData& s) {
  for (const auto& c : verify_superalgebra(s)) {
    INFO(c.name << " " << c.witness);
    CHECK(c.pass);
  }
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("osp_even(1,1) is sl2 on its standard plane") {
  const auto rep = build_osp_even(1, 1);
  CHECK(rep.matrices == std::vector<Matrix>{Matrix{{1, 0}, {0, -1}}, Matrix{{0, 1}, {0, 0}}, Matrix{{0, 0}, {1, 0}}});
  CHECK(rep.algebra.form == Matrix{{2, 0, 0}, {0, 0, 1}, {0, 1, 0}});
  CHECK(*decide(rep).casimir_scalar == frac(-3, 8));
  CHECK_FALSE(osp_even_calibration(1, 1).has_value());
}

TEST_CASE("osp_even calibrates to the supertrace ratio") {
  for (auto [m, n] : {std::pair{2, 1}, std::pair{1, 2}, std::pair{3, 1}}) {
    const auto rep = build_osp_even(m, n);
    CHECK(rep.space->dim() == static_cast<std::size_t>(2 * m * n));
    validate_lie(rep.algebra);
    CHECK(decide(rep).verdict);
    check_all_pass(construct_superalgebra(rep));
    if (m >= 2) CHECK(*osp_even_calibration(m, n) == -1);
  }
}

TEST_CASE("osp_even size limits") {
  CHECK(code_of([] { build_osp_even(3, 3); }) == ErrorCode::TooLarge);
  CHECK(code_of([] { build_osp_even(0, 1); }) == ErrorCode::InvalidInput);
}

TEST_CASE("gl11") {
  const auto rep = build_gl11_even();
  CHECK(rep.algebra.form == Matrix{{1, 0}, {0, -1}});
  const auto r = decide(rep);
  CHECK(r.verdict);
  CHECK(*r.casimir_scalar == 0);
  const auto s = construct_superalgebra(rep);
  // E12 E21 + E21 E12 = E11 + E22
  const Matrix e12{{0, 1}, {0, 0}}, e21{{0, 0}, {1, 0}};
  const Matrix sc = oracle::supercommutator(e12, true, e21, true);
  CHECK(s.odd_odd.at(0, 1) == Vector{sc(0, 0), sc(1, 1)});
  check_all_pass(s);
}

TEST_CASE("spin representations") {
  CHECK(decide(build_spin_rep(1)).verdict == decide(build_osp_even(1, 1)).verdict);
  CHECK(*decide(build_spin_rep(1)).casimir_scalar == frac(-3, 8));
  CHECK_FALSE(decide(build_spin_rep(3)).verdict);
  CHECK(code_of([] { build_spin_rep(2); }) == ErrorCode::NotSymplectic);
  CHECK(code_of([] { build_spin_rep(9); }) == ErrorCode::TooLarge);
  for (std::size_t j : {1, 3, 5, 7}) {
    const auto rep = build_spin_rep(j);
    CHECK(rep.space->dim() == j + 1);
    CHECK_NOTHROW(validate_rep(rep));
    CHECK(rep.space->omega()(0, j) == 1);
  }
}

TEST_CASE("abelian has an empty odd part") {
  const auto rep = build_abelian(2);
  CHECK(rep.space->dim() == 0);
  const auto r = decide(rep);
  CHECK(r.verdict);
  CHECK(*r.casimir_scalar == 0);
  CHECK(construct_superalgebra(rep).odd_dim == 0);
}

TEST_CASE("double of a 1-dim abelian algebra") {
  const auto s = construct_superalgebra(build_abelian(1));
  const auto d = build_double(s);
  CHECK(d.tables.even_dim() == 2);
  CHECK(d.tables.odd_dim == 0);
  CHECK(d.tables.form_even == Matrix{{0, 1}, {1, 0}});
  const auto r = decide(d.rep);
  CHECK(r.verdict);
  CHECK(*r.casimir_scalar == 0);
}

TEST_CASE("double round trips through the engine") {
  for (const auto& inner : {build_gl11_even(), build_osp_even(1, 1), build_abelian(1)}) {
    const auto s = construct_superalgebra(inner);
    const auto d = build_double(s);
    check_all_pass(d.tables);
    CHECK(decide(d.rep).verdict);
    const auto rebuilt = construct_superalgebra(d.rep);
    CHECK(rebuilt.odd_odd == d.tables.odd_odd);
    CHECK(rebuilt == d.tables);
  }
}

TEST_CASE("double needs a verified superalgebra") {
  auto s = construct_superalgebra(build_gl11_even());
  s.odd_odd.set(0, 0, Vector{1, 0});
  CHECK(code_of([&] { build_double(s); }) == ErrorCode::InvalidInput);
}

TEST_CASE("supertrace forms") {
  const auto osp = construct_superalgebra(build_osp_even(1, 1));
  const auto killing = supertrace_form(osp, adjoint_representation(osp));
  CHECK(rank(killing.even) == 3);
  CHECK(rank(killing.odd) == 2);

  // gl(1|1) in its defining representation
  const auto gl = construct_superalgebra(build_gl11_even());
  // h1 = E11, h2 = E22, x = E12, y = E21 on C^{1|1}
  SuperRepresentation def{1, 1, {Matrix{{1, 0}, {0, 0}}, Matrix{{0, 0}, {0, 1}}, Matrix{{0, 1}, {0, 0}}, Matrix{{0, 0}, {1, 0}}}};
  const auto f = supertrace_form(gl, def);
  CHECK(f.even == Matrix{{1, 0}, {0, -1}});
  CHECK(f.odd == Matrix{{0, 1}, {-1, 0}});

  SuperRepresentation zero{1, 1, std::vector<Matrix>(4, Matrix(2, 2))};
  const auto z = supertrace_form(gl, zero);
  CHECK(z.even.is_zero());
  CHECK(z.odd.is_zero());

  SuperRepresentation bad = def;
  std::swap(bad.images[2], bad.images[3]);
  bad.images[0] = Matrix{{0, 0}, {0, 1}};
  CHECK(code_of([&] { supertrace_form(gl, bad); }) == ErrorCode::NotARepresentation);
}

TEST_CASE("riemannian quotient") {
  const auto gl = construct_superalgebra(build_gl11_even());
  CHECK(riemannian_quotient(gl, {gl.form_even, gl.form_odd}) == gl);

  const auto zero = riemannian_quotient(gl, {Matrix(2, 2), Matrix(2, 2)});
  CHECK(zero.dim() == 0);

  const auto d = build_double(construct_superalgebra(build_abelian(1))).tables;
  const auto q = riemannian_quotient(d, {Matrix{{1, 0}, {0, 0}}, Matrix(0, 0)});
  CHECK(q.dim() == 1);
  CHECK(q.form_even == Matrix{{1}});

  CHECK(code_of([&] { riemannian_quotient(gl, {Matrix::identity(2), gl.form_odd}); }) ==
        ErrorCode::NotInvariant);
}

TEST_CASE("registry parsing") {
  CHECK(instance_text(parse_instance("osp_even(2, 1)")) == "osp_even(2,1)");
  CHECK(instance_text(parse_instance("gl11")) == "gl11");
  CHECK(instance_text(parse_instance("double(double(gl11))")) == "double(double(gl11))");
  for (const char* bad : {"nosuch", "osp_even(1)", "gl11(3)", "double()", "spin(3", "spin(x)", "double(nosuch)"})
    CHECK(code_of([&] { parse_instance(bad); }) == ErrorCode::UnknownInstance);
}

TEST_CASE("curated instances reproduce their recorded verdicts") {
  for (const auto& d : curated_instances()) {
    INFO(descriptor_text(d));
    const auto r = decide(build_instance(descriptor_text(d)));
    CHECK(r.verdict == d.expected_verdict);
    if (d.expected_scalar) CHECK(*r.casimir_scalar == *d.expected_scalar);
  }
}

}
