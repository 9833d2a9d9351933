#ifndef SKEWEX_MAPS_HPP
#define SKEWEX_MAPS_HPP

#include "skewex/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace skewex {

/// Outcome of an identity check on basis pairs; `witness` holds the first
/// failing pair (or the basis index for a unit failure).
struct Check {
  bool ok = true;
  std::vector<long> witness;
  std::string detail;

  explicit operator bool() const { return ok; }
};

Check is_derivation(const Algebra& a, const Mat& m);
Check is_endomorphism(const Algebra& a, const Mat& m, bool require_unital = true);
Check is_automorphism(const Algebra& a, const Mat& m, bool require_unital = true);
/// delta(xy) = delta(x) y + x delta(y) - delta(x) delta(y) on basis pairs.
Check is_ederivation(const Algebra& a, const Mat& m);

/// A linear map that satisfies the Leibniz rule.
class Derivation {
 public:
  /// Throws ValidationError carrying the failing basis pair.
  static Derivation certify(const Algebra& a, Mat m);
  const Mat& matrix() const { return m_matrix; }
  Element operator()(const Element& x) const { return m_matrix * x; }

 private:
  explicit Derivation(Mat m) : m_matrix(std::move(m)) {}
  Mat m_matrix;
};

/// A multiplicative linear map; `unital()` records whether phi(1) = 1 was
/// required when it was certified.
class AlgebraEndo {
 public:
  static AlgebraEndo certify(const Algebra& a, Mat m, bool require_unital = true);
  const Mat& matrix() const { return m_matrix; }
  Element operator()(const Element& x) const { return m_matrix * x; }
  bool unital() const { return m_unital; }
  bool invertible() const { return m_invertible; }

 private:
  AlgebraEndo(Mat m, bool unital, bool invertible) : m_matrix(std::move(m)), m_unital(unital), m_invertible(invertible) {}
  Mat m_matrix;
  bool m_unital;
  bool m_invertible;
};

/// delta = I - phi for an algebra endomorphism phi.
class EDerivation {
 public:
  static EDerivation certify(const Algebra& a, Mat m, bool require_unital = true);
  static EDerivation from_endomorphism(const AlgebraEndo& phi);
  const Mat& matrix() const { return m_matrix; }
  const AlgebraEndo& phi() const { return m_phi; }

 private:
  EDerivation(Mat m, AlgebraEndo phi) : m_matrix(std::move(m)), m_phi(std::move(phi)) {}
  Mat m_matrix;
  AlgebraEndo m_phi;
};

/// ad_u(x) = ux - xu.
Derivation ad(const Algebra& a, const Element& u);
/// Ad_u(x) = u x u^{-1}; throws NotInvertible.
AlgebraEndo Ad(const Algebra& a, const Element& u);

struct LocalFiniteness {
  bool locally_finite = true;
  /// I - eta is locally finite as well; always true in finite dimension.
  bool complement_locally_finite = true;
  bool locally_nilpotent = false;
  std::optional<int> nilpotency_index;
  Poly min_poly;
};

/// In finite dimension every map is LF with its minimal polynomial as the
/// certificate; LN iff the minimal polynomial is t^k.
LocalFiniteness local_finiteness_report(const Mat& eta);

struct KernelChain {
  Subspace ker_ge1;
  int stabilization_index = 1;
};

/// Union of Ker phi ⊆ Ker phi^2 ⊆ ..., stabilized within dim A steps and
/// verified to be a two-sided ideal.
KernelChain ker_chain(const Algebra& a, const AlgebraEndo& phi);

struct InducedMap {
  Algebra quotient;
  Mat projection;
  Mat phibar;
  bool injective = false;
  bool surjective = false;
};

/// The map induced by phi on A / Ker_{>=1} phi, checked against
/// phibar * pi = pi * phi on every basis vector.
InducedMap induced_map(const Algebra& a, const AlgebraEndo& phi);

/// For a with phi^k(a) = 0: b = a + phi(a) + ... + phi^{k-1}(a), which
/// satisfies (I - phi) b = a. Throws NotInKernelChain.
Element chain_preimage(const Algebra& a, const AlgebraEndo& phi, const Element& x);

/// Least m <= bound with phi^m = I.
std::optional<int> automorphism_order(const AlgebraEndo& phi, int bound = 64);

/// exp(D) as a finite sum; throws NotLocallyNilpotent. The result is
/// verified to be an automorphism with inverse exp(-D).
AlgebraEndo exp_derivation(const Algebra& a, const Derivation& d);

/// Basis of Der(A), from the Leibniz identity as a linear system in the
/// n^2 matrix entries.
std::vector<Derivation> derivation_space(const Algebra& a);

/// Composite phi^k.
Mat matrix_power(const Mat& m, int k);

}  // namespace skewex

#endif  // SKEWEX_MAPS_HPP
