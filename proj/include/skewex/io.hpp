#ifndef SKEWEX_IO_HPP
#define SKEWEX_IO_HPP

// JSON formats. Rationals are "p/q" or "p" strings; algebras are
//   { "dim": n, "labels": [...], "unit": [...], "sc": [[i, j, k, "c"], ...] }
// with zero entries omitted, maps are { "matrix": [[...], ...] } with rows
// indexing output coordinates.

#include "skewex/algebra.hpp"
#include "skewex/extension.hpp"
#include "skewex/laurent.hpp"
#include "skewex/mathieu.hpp"
#include "skewex/ore.hpp"

#include <json.hpp>

#include <string>

namespace skewex {

using json = nlohmann::ordered_json;

json to_json(const Rat& r);
json to_json(const Vec& v);
json to_json(const Mat& m);
json to_json(const Algebra& a);
json to_json(const SkewPoly& f);
json to_json(const LaurentSkewPoly& f);
json to_json(const Poly& p);
/// The algebra format plus "embed", "u", "u_inverse" and "p".
json to_json(const ExtensionResult& r);
json to_json(const IdempotentSet& s);
json to_json(const MsVerdict& v);
json map_to_json(const Mat& m, const std::string& role = {});

// Readers throw ParseError naming the offending field.
Rat rat_from_json(const json& j, const std::string& where);
Vec vec_from_json(const json& j, const std::string& where);
Mat mat_from_json(const json& j, const std::string& where);
/// Also throws ValidationError when the tensor is not associative or the
/// unit fails; the witness is the failing basis triple or index.
Algebra algebra_from_json(const json& j);
Mat map_matrix_from_json(const json& j, Index dim);

/// Parses a whole file; syntax errors become ParseError with the position.
json read_json_file(const std::string& path);

}  // namespace skewex

#endif  // SKEWEX_IO_HPP
