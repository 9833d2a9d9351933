#ifndef SKEWEX_ORE_HPP
#define SKEWEX_ORE_HPP

#include "skewex/algebra.hpp"
#include "skewex/extension.hpp"
#include "skewex/maps.hpp"

#include <optional>
#include <vector>

namespace skewex {

/// sum_i a_i X^i with coefficients on the left; trailing zeros trimmed.
class SkewPoly {
 public:
  explicit SkewPoly(Index dim) : m_dim(dim) {}
  SkewPoly(Index dim, std::vector<Element> coeffs);

  static SkewPoly constant(const Element& a) { return SkewPoly(a.size(), {a}); }
  /// a X^k
  static SkewPoly term(const Element& a, int k);

  Index algebra_dim() const { return m_dim; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(m_coeffs.size()) - 1; }
  bool is_zero() const { return m_coeffs.empty(); }
  Element coeff(int i) const;
  const std::vector<Element>& coeffs() const { return m_coeffs; }

  friend SkewPoly operator+(const SkewPoly& f, const SkewPoly& g);
  friend SkewPoly operator-(const SkewPoly& f, const SkewPoly& g);
  friend SkewPoly operator*(const Rat& s, const SkewPoly& f);
  friend bool operator==(const SkewPoly& f, const SkewPoly& g) {
    return f.m_dim == g.m_dim && f.m_coeffs == g.m_coeffs;
  }

 private:
  void trim();
  Index m_dim;
  std::vector<Element> m_coeffs;
};

/// a * f, coefficientwise from the left.
SkewPoly left_scale(const Algebra& a, const Element& x, const SkewPoly& f);

/// X * g via Xa = aX + Da.
SkewPoly x_times(const SkewPoly& g, const Derivation& d);

/// f g in A[X; D], computed only from the rewrite Xa = aX + Da.
SkewPoly skew_mul(const Algebra& a, const SkewPoly& f, const SkewPoly& g, const Derivation& d);

struct CommutatorPower {
  /// X^n a - a X^n by rewriting.
  SkewPoly direct;
  /// sum_{i=1}^n C(n, i) D^i(a) X^{n-i}.
  SkewPoly formula;
  bool agree() const { return direct == formula; }
};
CommutatorPower commutator_power(const Algebra& a, int n, const Element& x, const Derivation& d);

/// Right-coefficient form f = sum X^j c_j, coefficients by exponent.
std::vector<Element> to_right_form(const SkewPoly& f, const Derivation& d);
SkewPoly from_right_form(const Algebra& a, const std::vector<Element>& right, const Derivation& d);

struct ConstantTerms {
  /// a_0 of the left-normal form.
  Element left_c0;
  /// c_0 of the right-normal form.
  Element right_c0;
};
/// Verifies the left -> right -> left round trip before returning.
ConstantTerms constant_terms(const Algebra& a, const SkewPoly& f, const Derivation& d);

/// q(D) applied to x.
Element apply_poly(const Poly& q, const Mat& m, const Element& x);

struct ConstantTermIdentity {
  /// Constant term of q(X) b.
  Element lhs;
  /// q(D)(b).
  Element rhs;
  bool holds() const { return lhs == rhs; }
};
ConstantTermIdentity constant_term_identity(const Algebra& a, const Poly& q, const Element& b, const Derivation& d);

struct ConstantTermMembership {
  /// [0] of X^m q(X) b X^k.
  Element constant_term;
  /// 0 when k >= 1, q(D)(D^m b) when k = 0.
  Element closed_form;
  /// constant_term lies in A Im q(D).
  bool member = false;
  bool agree() const { return constant_term == closed_form; }
};
ConstantTermMembership constant_term_membership(const Algebra& a, const Poly& q, int m, const Element& b, int k,
                                                const Derivation& d);

/// span{x y : x in A, y in Im m}
Subspace left_image_span(const Algebra& a, const Mat& m);
/// span{y x : x in A, y in Im m}
Subspace right_image_span(const Algebra& a, const Mat& m);

/// B = A[X; D] / (p(X)) with u the class of X, so D = ad_u on A. p defaults
/// to the minimal polynomial of D. Throws NotMonic, AnnihilatorFails,
/// AssociativityFails, EmbeddingFails.
ExtensionResult ore_quotient(const Algebra& a, const Derivation& d, std::optional<Poly> p = std::nullopt,
                             ExtensionOptions options = {});

struct SimpleImage {
  bool left_full = false;
  bool right_full = false;
  Simplicity simplicity;
  bool derivation_nonzero = false;
  bool hypotheses_hold() const {
    return simplicity.status == Simplicity::Status::Simple && derivation_nonzero;
  }
};
SimpleImage simple_image_check(const Algebra& a, const Derivation& d);

/// Binomial coefficient as a rational.
Rat binomial(int n, int k);

}  // namespace skewex

#endif  // SKEWEX_ORE_HPP
