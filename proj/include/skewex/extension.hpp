#ifndef SKEWEX_EXTENSION_HPP
#define SKEWEX_EXTENSION_HPP

#include "skewex/algebra.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace skewex {

/// An algebra B containing A through `embed`, with the witness u making the
/// given derivation inner (resp. automorphism inner, with u invertible).
struct ExtensionResult {
  Algebra algebra;
  /// iota : A -> B, rows = B coordinates.
  Mat embed;
  Element u;
  std::optional<Element> u_inverse;
  Poly p;
  /// deg(p) * dim A: the rank of the free left A-module on 1, X, ..., X^{d-1}.
  Index free_rank = 0;
  /// Dimension of the image of the two-sided ideal (p(X)) in that free
  /// module; dim B = free_rank - collapsed_dim.
  Index collapsed_dim = 0;
};

struct ExtensionOptions {
  /// Test hook: build even when p does not annihilate the map.
  bool skip_annihilator_check = false;
};

namespace detail {

/// Left-normal coefficients, indexed by X-exponent, of (a X^s)(b X^t) in
/// the ambient skew ring.
using TermProduct = std::function<std::vector<Vec>(const Element& a, int s, const Element& b, int t)>;

/// B = (free left A-module on X^0..X^{d-1}) / K, where K is the image of
/// the two-sided ideal generated by p(X): the closure of {p(X) b} under
/// left multiplication by A and X and right multiplication by X. Checks
/// associativity, that iota is an injective unital homomorphism, p(u) = 0,
/// and generation as a left and right A-module by powers of u.
ExtensionResult quotient_extension(const Algebra& a, const Poly& p, const TermProduct& product, bool invertible_u);

}  // namespace detail
}  // namespace skewex

#endif  // SKEWEX_EXTENSION_HPP
