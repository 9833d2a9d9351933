#ifndef SKEWEX_LAURENT_HPP
#define SKEWEX_LAURENT_HPP

#include "skewex/algebra.hpp"
#include "skewex/extension.hpp"
#include "skewex/maps.hpp"

#include <map>
#include <optional>
#include <vector>

namespace skewex {

/// sum_i a_i X^i over i in Z, coefficients on the left, zeros never stored.
class LaurentSkewPoly {
 public:
  explicit LaurentSkewPoly(Index dim) : m_dim(dim) {}

  static LaurentSkewPoly term(const Element& a, int k);

  Index algebra_dim() const { return m_dim; }
  bool is_zero() const { return m_terms.empty(); }
  Element coeff(int k) const;
  const std::map<int, Element>& terms() const { return m_terms; }
  void add_term(int k, const Element& a);

  friend LaurentSkewPoly operator+(const LaurentSkewPoly& f, const LaurentSkewPoly& g);
  friend bool operator==(const LaurentSkewPoly& f, const LaurentSkewPoly& g);

 private:
  Index m_dim;
  std::map<int, Element> m_terms;
};

/// Powers phi^k for k in Z of an automorphism.
class AutomorphismPowers {
 public:
  /// Throws NotAutomorphism when phi is not invertible.
  explicit AutomorphismPowers(const AlgebraEndo& phi);
  const Mat& operator()(int k) const;

 private:
  Mat m_forward;
  Mat m_backward;
  mutable std::map<int, Mat> m_cache;
};

/// f g in A[X^{-1}, X; phi] via X^k a = phi^k(a) X^k.
LaurentSkewPoly laurent_mul(const Algebra& a, const LaurentSkewPoly& f, const LaurentSkewPoly& g,
                            const AlgebraEndo& phi);
/// X^k x X^{-k}, computed by multiplication in the Laurent ring.
Element conjugate(const Algebra& a, const Element& x, int k, const AlgebraEndo& phi);

/// f[1]: the sum of the left coefficients.
Element eval_at_one(const LaurentSkewPoly& f);

/// Scalar Laurent polynomial: exponent -> coefficient.
using ScalarLaurent = std::map<int, Rat>;
/// f(phi) = sum alpha_i phi^i.
Mat evaluate(const ScalarLaurent& f, const AlgebraEndo& phi);

struct EvaluationAtOne {
  /// h[1] for h = b X^j f(X) c X^k, by multiplication.
  Element h1;
  /// b f(phi)(phi^j(c)).
  Element closed_form;
  /// h[1] lies in A Im f(phi).
  bool member = false;
  bool holds() const { return member && h1 == closed_form; }
};
EvaluationAtOne evaluation_at_one_check(const Algebra& a, const ScalarLaurent& f, const Element& b, const Element& c, int j, int k,
                      const AlgebraEndo& phi);

/// B = A[X^{-1}, X; phi] / (p(X)) with u the class of X, so phi = Ad_u on
/// A. u^{-1} = -alpha_0^{-1} (u^{d-1} + sum_{i>=1} alpha_i u^{i-1}). p
/// defaults to the minimal polynomial of phi. Throws NotAutomorphism,
/// NotMonic, AnnihilatorFails, ConstantTermZero, AssociativityFails,
/// EmbeddingFails.
ExtensionResult laurent_quotient(const Algebra& a, const AlgebraEndo& phi, std::optional<Poly> p = std::nullopt,
                                 ExtensionOptions options = {});

/// Ker(iota) = 0.
bool embedding_injective(const ExtensionResult& result);

}  // namespace skewex

#endif  // SKEWEX_LAURENT_HPP
