#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "superlie/engine.hpp"

namespace superlie::io {

using json = nlohmann::ordered_json;

// Rationals always travel as strings ("p/q" or "p"); plain JSON integers
// are accepted on input.
json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);

json to_json(const PolyElement& p);
PolyElement poly_from_json(const json& j, const SpacePtr& space);

/// {"dim", "omega"}; omega is a matrix or "standard". Not validated.
json space_to_json(const SymplecticSpace& s);
SpacePtr space_from_json(const json& j);

/// {"dim", "brackets": [[i, j, l, c]...] with i < j, "form"}
json g0_to_json(const QuadraticLieAlgebra& g);
QuadraticLieAlgebra g0_from_json(const json& j);

/// {"space", "g0", "nu"}. Parsing only checks shapes; see validate_problem.
json problem_to_json(const SymplecticRep& rep);
SymplecticRep problem_from_json(const json& j);
/// Space, then g₀, then ν; throws the first failing invariant.
void validate_problem(const SymplecticRep& rep);

json checks_to_json(const std::vector<CheckResult>& checks);

/// Nonzero odd brackets as [[a, b, [coeffs]]...] with a <= b.
json odd_brackets_to_json(const SuperAlgebraData& s);

json superalgebra_to_json(const SuperAlgebraData& s);
SuperAlgebraData superalgebra_from_json(const json& j);

/// Throws ParseError with the parser's message.
json parse_json(const std::string& text);
/// Insertion-ordered keys, 2-space indent, trailing newline.
std::string dump(const json& j);

/// Throws IoError.
std::string read_file(const std::string& path);
/// Writes to a sibling temporary and renames over the target.
void write_file_atomic(const std::string& path, const std::string& contents);

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& bytes);

}  // namespace superlie::io
