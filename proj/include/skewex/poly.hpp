#ifndef SKEWEX_POLY_HPP
#define SKEWEX_POLY_HPP

#include "skewex/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skewex {

/// Univariate polynomial over Q, coefficients from the constant term up.
/// Trailing zeros are always trimmed; the zero polynomial has degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);

  static Poly constant(const Rat& c);
  /// t^k
  static Poly monomial(int k, const Rat& c = Rat(1));
  /// (t - r0)(t - r1)...
  static Poly from_roots(const std::vector<Rat>& roots);

  int degree() const { return static_cast<int>(m_coeffs.size()) - 1; }
  bool is_zero() const { return m_coeffs.empty(); }
  bool is_monic() const { return !is_zero() && m_coeffs.back() == 1; }
  /// Coefficient of t^i, zero beyond the degree.
  Rat coeff(int i) const;
  const Rat& leading() const { return m_coeffs.back(); }
  const std::vector<Rat>& coeffs() const { return m_coeffs; }

  Poly monic() const;
  Poly derivative() const;
  Rat operator()(const Rat& x) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, const Poly& p);
  friend Poly operator-(const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.m_coeffs == b.m_coeffs; }

  std::string str() const;

 private:
  void trim();
  std::vector<Rat> m_coeffs;
};

/// Quotient and remainder, deg(rem) < deg(divisor).
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);
Poly lcm(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& p);
/// p / gcd(p, p'), monic.
Poly squarefree_part(const Poly& p);
/// Distinct rational roots in increasing order.
std::vector<Rat> rational_roots(const Poly& p);

/// p(m) by Horner's rule; m square.
Mat evaluate(const Poly& p, const Mat& m);

/// The monic generator of {q : q(m) = 0}, assembled as the lcm of the
/// Krylov relation polynomials of the standard basis vectors and
/// re-verified before return.
Poly minimal_polynomial(const Mat& m);

/// "c0,c1,...,cd" with rational entries, constant first.
Poly parse_poly(std::string_view csv);

}  // namespace skewex

#endif  // SKEWEX_POLY_HPP
