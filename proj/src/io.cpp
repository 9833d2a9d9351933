#include "skewex/io.hpp"

#include "skewex/error.hpp"

#include <fstream>
#include <sstream>

namespace skewex {

json to_json(const Rat& r) { return to_string(r); }

json to_json(const Vec& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

json to_json(const Mat& m) {
  json out = json::array();
  for (Index i = 0; i < m.rows(); ++i) out.push_back(to_json(Vec(m.row(i).transpose())));
  return out;
}

json to_json(const Algebra& a) {
  json sc = json::array();
  const Index n = a.dim();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        const Rat& c = a.tensor()(i, j, k);
        if (c != 0) sc.push_back(json::array({i, j, k, to_string(c)}));
      }
    }
  }
  return json{{"dim", n}, {"labels", a.labels()}, {"unit", to_json(a.unit())}, {"sc", std::move(sc)}};
}

json to_json(const SkewPoly& f) {
  json out = json::array();
  for (const Element& c : f.coeffs()) out.push_back(to_json(c));
  return out;
}

json to_json(const LaurentSkewPoly& f) {
  json out = json::array();
  for (const auto& [k, c] : f.terms()) out.push_back(json::array({k, to_json(c)}));
  return out;
}

json to_json(const Poly& p) {
  json out = json::array();
  for (const Rat& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

json to_json(const ExtensionResult& r) {
  json out = to_json(r.algebra);
  out["embed"] = to_json(r.embed);
  out["u"] = to_json(r.u);
  if (r.u_inverse) out["u_inverse"] = to_json(*r.u_inverse);
  out["p"] = to_json(r.p);
  out["free_rank"] = r.free_rank;
  out["collapsed_dim"] = r.collapsed_dim;
  return out;
}

json to_json(const IdempotentSet& s) {
  json items = json::array();
  for (std::size_t i = 0; i < s.items.size(); ++i) {
    items.push_back({{"e", to_json(s.items[i])}, {"provenance", to_string(s.provenance[i])}});
  }
  json out{{"items", std::move(items)}, {"complete", s.complete}};
  if (s.inconclusive_reason) out["inconclusive_reason"] = *s.inconclusive_reason;
  return out;
}

json to_json(const MsVerdict& v) {
  json checked = json::array();
  for (const auto& [e, inside] : v.checked) checked.push_back({{"e", to_json(e)}, {"ideal_in_v", inside}});
  json out{{"status", to_string(v.status)}, {"checked", std::move(checked)}};
  if (v.witness) out["witness"] = to_json(*v.witness);
  return out;
}

json map_to_json(const Mat& m, const std::string& role) {
  json out{{"matrix", to_json(m)}};
  if (!role.empty()) out["role"] = role;
  return out;
}

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

Index index_from_json(const json& j, Index bound, const std::string& where) {
  if (!j.is_number_integer()) parse_fail(where, "expected an integer index");
  const auto v = j.get<long long>();
  if (v < 0 || v >= bound) parse_fail(where, "index " + std::to_string(v) + " out of range [0, " + std::to_string(bound) + ")");
  return static_cast<Index>(v);
}

}  // namespace

Rat rat_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (!j.is_string()) parse_fail(where, "expected a rational string");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const Error& e) {
    parse_fail(where, e.message());
  }
}

Vec vec_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "expected an array");
  Vec v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = rat_from_json(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

Mat mat_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "expected an array of rows");
  const Index rows = static_cast<Index>(j.size());
  const Index cols = rows == 0 ? 0 : static_cast<Index>(j[0].is_array() ? j[0].size() : 0);
  Mat m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const Vec row = vec_from_json(j[static_cast<std::size_t>(i)], at);
    if (row.size() != cols) parse_fail(at, "row length " + std::to_string(row.size()) + ", expected " + std::to_string(cols));
    m.row(i) = row.transpose();
  }
  return m;
}

Algebra algebra_from_json(const json& j) {
  if (!j.is_object()) parse_fail("algebra", "expected an object");
  if (!j.contains("dim")) parse_fail("dim", "missing");
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 0) parse_fail("dim", "expected a nonnegative integer");
  const Index n = static_cast<Index>(j["dim"].get<long long>());

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const json& l = j["labels"];
    if (!l.is_array() || static_cast<Index>(l.size()) != n) parse_fail("labels", "expected " + std::to_string(n) + " strings");
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (!l[i].is_string()) parse_fail("labels[" + std::to_string(i) + "]", "expected a string");
      labels.push_back(l[i].get<std::string>());
    }
  }

  if (!j.contains("unit")) parse_fail("unit", "missing");
  const Vec unit = vec_from_json(j["unit"], "unit");
  if (unit.size() != n) parse_fail("unit", "expected " + std::to_string(n) + " entries");

  if (!j.contains("sc") || !j["sc"].is_array()) parse_fail("sc", "expected an array of [i, j, k, c] entries");
  StructureTensor sc(n);
  const json& entries = j["sc"];
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string at = "sc[" + std::to_string(e) + "]";
    const json& t = entries[e];
    if (!t.is_array() || t.size() != 4) parse_fail(at, "expected [i, j, k, c]");
    const Index i = index_from_json(t[0], n, at + "[0]");
    const Index jj = index_from_json(t[1], n, at + "[1]");
    const Index k = index_from_json(t[2], n, at + "[2]");
    sc(i, jj, k) += rat_from_json(t[3], at + "[3]");
  }

  try {
    return make_algebra(std::move(sc), unit, std::move(labels));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotAssociative || e.kind() == ErrorKind::UnitFails) {
      throw Error(ErrorKind::ValidationError, e.what(), e.witness());
    }
    throw;
  }
}

Mat map_matrix_from_json(const json& j, Index dim) {
  if (!j.is_object() || !j.contains("matrix")) parse_fail("map", "expected an object with a \"matrix\" field");
  const Mat m = mat_from_json(j["matrix"], "matrix");
  if (m.rows() != dim || m.cols() != dim) {
    parse_fail("matrix", "expected " + std::to_string(dim) + "x" + std::to_string(dim) + ", got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  return m;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what(), {static_cast<long>(e.byte)});
  }
}

}  // namespace skewex
