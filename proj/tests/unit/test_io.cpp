#include <doctest.h>

#include <filesystem>

#include "superlie/catalog.hpp"
#include "superlie/io.hpp"

using namespace superlie;
using io::json;

namespace {

ErrorCode load_code(const std::string& text) {
  try {
    io::validate_problem(io::problem_from_json(io::parse_json(text)));
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidInput;
}

const char* kSl2 = R"({
  "space": {"dim": 2, "omega": "standard"},
  "g0": {"dim": 3, "brackets": [[0,1,1,"2"],[0,2,2,"-2"],[1,2,0,1]],
         "form": [["2",0,0],[0,0,1],[0,1,0]]},
  "nu": [[[1,0],[0,-1]], [[0,1],[0,0]], [[0,0],[1,0]]]
})";

}  // namespace

TEST_SUITE("io") {

TEST_CASE("scalars") {
  CHECK(io::to_json(frac(-3, 8)) == json("-3/8"));
  CHECK(io::scalar_from_json(json("6/4")) == frac(3, 2));
  CHECK(io::scalar_from_json(json(7)) == 7);
  CHECK_THROWS_AS(io::scalar_from_json(json(0.5)), Error);
}

TEST_CASE("problem round trip") {
  for (const char* name : {"osp_even(2,1)", "gl11", "spin(3)", "abelian(2)", "double(gl11)"}) {
    INFO(name);
    const auto rep = build_instance(name);
    const json j = io::problem_to_json(rep);
    const auto back = io::problem_from_json(io::parse_json(io::dump(j)));
    CHECK(back.algebra.algebra == rep.algebra.algebra);
    CHECK(back.algebra.form == rep.algebra.form);
    CHECK(*back.space == *rep.space);
    CHECK(back.matrices == rep.matrices);
    CHECK(io::dump(io::problem_to_json(back)) == io::dump(j));
  }
}

TEST_CASE("hand-written problem file") {
  const auto rep = io::problem_from_json(io::parse_json(kSl2));
  CHECK_NOTHROW(io::validate_problem(rep));
  CHECK(rep.algebra.algebra == build_osp_even(1, 1).algebra.algebra);
  CHECK(*decide(rep).casimir_scalar == frac(-3, 8));
}

TEST_CASE("validation names the first failure") {
  std::string s = kSl2;
  CHECK(load_code(std::string(kSl2).replace(s.find("\"standard\""), 10, "[[1,0],[0,1]]")) ==
        ErrorCode::NotAlternating);
  CHECK(load_code(R"({"space": {"dim": 3, "omega": "standard"}, "g0": {"dim": 0, "brackets": [], "form": []}, "nu": []})") ==
        ErrorCode::OddDimension);
  CHECK(load_code("{") == ErrorCode::ParseError);
  CHECK(load_code(R"({"space": {"dim": 2, "omega": "standard"}})") == ErrorCode::ParseError);
  // both orders given and inconsistent
  CHECK(load_code(R"({"space": {"dim": 2, "omega": "standard"},
      "g0": {"dim": 2, "brackets": [[0,1,0,1],[1,0,0,1]], "form": [[1,0],[0,1]]},
      "nu": [[[0,0],[0,0]], [[0,0],[0,0]]]})") == ErrorCode::NotAntisymmetric);
  CHECK(load_code(R"({"space": {"dim": 2, "omega": "standard"},
      "g0": {"dim": 1, "brackets": [], "form": [[1]]}, "nu": [[[1,0],[0,1]]]})") == ErrorCode::NotSymplectic);
}

TEST_CASE("polynomials serialize in lexicographic order") {
  auto v = standard_space(1);
  PolyElement p(v);
  p.add_term({0, 2}, frac(-1, 4));
  p.add_term({2, 0}, frac(1, 4));
  const json j = io::to_json(p);
  CHECK(j.dump() == R"([{"exp":[0,2],"coeff":"-1/4"},{"exp":[2,0],"coeff":"1/4"}])");
  CHECK(io::poly_from_json(j, v) == p);
}

TEST_CASE("superalgebra round trip") {
  for (const char* name : {"osp_even(1,1)", "gl11", "double(gl11)"}) {
    const auto s = construct_superalgebra(build_instance(name));
    CHECK(io::superalgebra_from_json(io::superalgebra_to_json(s)) == s);
  }
}

TEST_CASE("files and digests") {
  CHECK(io::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  const auto dir = std::filesystem::temp_directory_path() / "superlie_io_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "x.json").string();
  io::write_file_atomic(path, "one");
  io::write_file_atomic(path, "two");
  CHECK(io::read_file(path) == "two");
  CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
  CHECK_THROWS_AS(io::read_file((dir / "missing.json").string()), Error);
  CHECK_THROWS_AS(io::write_file_atomic((dir / "no" / "such" / "dir.json").string(), "x"), Error);
  std::filesystem::remove_all(dir);
}

}
