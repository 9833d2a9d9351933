#include "skewex/rational.hpp"
#include "skewex/error.hpp"

#include <cctype>

namespace skewex {

std::string to_string(const Rat& r) { return r.str(); }

Rat parse_rat(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  const std::string_view t = trim(text);
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  const auto slash = t.find('/');
  std::string num(t.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(t.substr(slash + 1));
  if (!num.empty() && num.front() == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-') {
    throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
  }
  const Int d(den);
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator: '" + std::string(text) + "'");
  return Rat(Int(num), d);
}

Mat zeros(Index rows, Index cols) { return Mat::Zero(rows, cols); }
Vec zeros(Index n) { return Vec::Zero(n); }
Mat identity(Index n) { return Mat::Identity(n, n); }
Vec unit_vector(Index n, Index i) {
  Vec v = Vec::Zero(n);
  v(i) = 1;
  return v;
}

bool is_zero(const Mat& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (m(i, j) != 0) return false;
    }
  }
  return true;
}

bool is_zero(const Vec& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) return false;
  }
  return true;
}

Rat numerator_of(const Rat& r) { return Rat(boost::multiprecision::numerator(r)); }
Rat denominator_of(const Rat& r) { return Rat(boost::multiprecision::denominator(r)); }

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::UnitFails: return "UnitFails";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::ImproperIdeal: return "ImproperIdeal";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotLocallyNilpotent: return "NotLocallyNilpotent";
    case ErrorKind::NotInKernelChain: return "NotInKernelChain";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::AnnihilatorFails: return "AnnihilatorFails";
    case ErrorKind::ConstantTermZero: return "ConstantTermZero";
    case ErrorKind::AssociativityFails: return "AssociativityFails";
    case ErrorKind::EmbeddingFails: return "EmbeddingFails";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::PhibarNotSurjective: return "PhibarNotSurjective";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::InternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

}  // namespace skewex
