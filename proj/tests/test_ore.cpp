#include "skewex/generate.hpp"
#include "skewex/ore.hpp"
#include "skewex/random.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace skewex;
using oracle::mat;
using oracle::vec;

namespace {

SkewPoly random_skew(const Algebra& a, std::mt19937_64& rng, int max_degree) {
  std::vector<Element> c;
  const int d = static_cast<int>(draw_between(rng, 0, max_degree));
  for (int i = 0; i <= d; ++i) c.push_back(random_element(a, rng, -2, 2));
  return SkewPoly(a.dim(), c);
}

Derivation random_derivation(const Algebra& a, std::mt19937_64& rng) {
  Mat m = zeros(a.dim(), a.dim());
  for (const auto& d : derivation_space(a)) m += Rat(draw_between(rng, -2, 2)) * d.matrix();
  return Derivation::certify(a, m);
}

}  // namespace

TEST_CASE("X t = t X + t under the Euler derivation") {
  const Algebra a = corpus::truncated(2);
  const Derivation d = Derivation::certify(a, corpus::euler(2));
  const Element t = a.basis_element(1);
  const SkewPoly xt = skew_mul(a, SkewPoly::term(a.unit(), 1), SkewPoly::constant(t), d);
  CHECK(xt == SkewPoly(2, {t, t}));
  // X^2 t = t X^2 + 2 t X + t
  const SkewPoly x2t = skew_mul(a, SkewPoly::term(a.unit(), 2), SkewPoly::constant(t), d);
  CHECK(x2t == SkewPoly(2, {t, Rat(2) * t, t}));
}

TEST_CASE("skew multiplication agrees with the binomial expansion") {
  std::mt19937_64 rng(41);
  const std::vector<Algebra> algebras{matrix_algebra(2), corpus::truncated(3), upper_triangular(2)};
  for (int round = 0; round < 30; ++round) {
    for (const Algebra& a : algebras) {
      const Derivation d = random_derivation(a, rng);
      const SkewPoly f = random_skew(a, rng, 3);
      const SkewPoly g = random_skew(a, rng, 3);
      CHECK(skew_mul(a, f, g, d) == oracle::binomial_skew_mul(a, f, g, d.matrix()));
    }
  }
}

TEST_CASE("skew multiplication is associative") {
  std::mt19937_64 rng(42);
  const Algebra a = upper_triangular(2);
  for (int round = 0; round < 20; ++round) {
    const Derivation d = random_derivation(a, rng);
    const SkewPoly f = random_skew(a, rng, 2);
    const SkewPoly g = random_skew(a, rng, 2);
    const SkewPoly h = random_skew(a, rng, 2);
    CHECK(skew_mul(a, skew_mul(a, f, g, d), h, d) == skew_mul(a, f, skew_mul(a, g, h, d), d));
  }
}

TEST_CASE("right-coefficient form round trip") {
  std::mt19937_64 rng(43);
  const Algebra a = matrix_algebra(2);
  for (int round = 0; round < 20; ++round) {
    const Derivation d = random_derivation(a, rng);
    const SkewPoly f = random_skew(a, rng, 4);
    const auto right = to_right_form(f, d);
    CHECK(from_right_form(a, right, d) == f);
    // sum_j X^j c_j rebuilt by multiplication
    SkewPoly rebuilt(a.dim());
    for (std::size_t j = 0; j < right.size(); ++j) {
      rebuilt = rebuilt + skew_mul(a, SkewPoly::term(a.unit(), static_cast<int>(j)), SkewPoly::constant(right[j]), d);
    }
    CHECK(rebuilt == f);
    const ConstantTerms ct = constant_terms(a, f, d);
    CHECK(ct.left_c0 == f.coeff(0));
    CHECK(ct.right_c0 == (right.empty() ? a.zero() : right[0]));
  }
}

TEST_CASE("constant term of X t in right form") {
  // X t = t X + t = X t, so in right form c_0 = 0 and c_1 = t.
  const Algebra a = corpus::truncated(2);
  const Derivation d = Derivation::certify(a, corpus::euler(2));
  const Element t = a.basis_element(1);
  const SkewPoly f(2, {t, t});
  const auto right = to_right_form(f, d);
  REQUIRE(right.size() == 2);
  CHECK(right[0] == a.zero());
  CHECK(right[1] == t);
}

TEST_CASE("apply_poly and the constant-term identity") {
  const Algebra a = corpus::truncated(3);
  const Derivation d = Derivation::certify(a, corpus::euler(3));
  const Element b = vec({1, 1, 1});
  // q(D) = D^2 - D kills 1 and t, and sends t^2 to 2 t^2
  const Poly q({0, -1, 1});
  CHECK(apply_poly(q, d.matrix(), b) == vec({0, 0, 2}));
  const ConstantTermIdentity id = constant_term_identity(a, q, b, d);
  CHECK(id.holds());
  CHECK(id.lhs == vec({0, 0, 2}));
  const ConstantTermMembership m0 = constant_term_membership(a, q, 2, b, 0, d);
  CHECK(m0.agree());
  CHECK(m0.member);
  CHECK(m0.closed_form == vec({0, 0, 8}));
  const ConstantTermMembership m1 = constant_term_membership(a, q, 1, b, 2, d);
  CHECK(m1.agree());
  CHECK(m1.closed_form == a.zero());
}

TEST_CASE("commutator powers") {
  std::mt19937_64 rng(44);
  const Algebra a = matrix_algebra(2);
  for (int n = 1; n <= 6; ++n) {
    const Derivation d = random_derivation(a, rng);
    const CommutatorPower cp = commutator_power(a, n, random_element(a, rng), d);
    CHECK(cp.agree());
  }
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(3, 4) == 0);
}

TEST_CASE("image spans of an inner derivation of M2") {
  const Algebra a = matrix_algebra(2);
  const Mat d = ad(a, matrix_unit(2, 0, 1)).matrix();
  CHECK(left_image_span(a, d).is_full());
  CHECK(right_image_span(a, d).is_full());
  // On T2, Im ad(E12) = <E12>, so A Im D = <E12>.
  const Algebra t2 = upper_triangular(2);
  const Mat dt = ad(t2, t2.basis_element(1)).matrix();
  CHECK(left_image_span(t2, dt).dim() == 1);
  CHECK(right_image_span(t2, dt).dim() == 1);
}

TEST_CASE("Euler derivation on Q[t]/(t^2) gives the upper triangular 2x2 matrices") {
  const Algebra a = corpus::truncated(2);
  const Mat d = corpus::euler(2);
  const ExtensionResult r = ore_quotient(a, Derivation::certify(a, d));
  CHECK(r.p == Poly({0, -1, 1}));
  CHECK(r.free_rank == 4);
  CHECK(r.collapsed_dim == 1);
  CHECK(r.algebra.dim() == 3);
  CHECK(oracle::extension_violation(a, r, d, false).empty());

  // psi(1) = I, psi(t) = E12, psi(u) = E11 is an isomorphism onto T2.
  const Algebra& b = r.algebra;
  const Algebra t2 = upper_triangular(2);
  const std::vector<Element> src{r.embed.col(0), r.embed.col(1), r.u};
  const std::vector<Element> dst{t2.unit(), t2.basis_element(1), t2.basis_element(0)};
  Mat s(3, 3);
  Mat t(3, 3);
  for (Index i = 0; i < 3; ++i) {
    s.col(i) = src[static_cast<std::size_t>(i)];
    t.col(i) = dst[static_cast<std::size_t>(i)];
  }
  const auto s_inv = inverse(s);
  REQUIRE(s_inv);
  const Mat psi = t * *s_inv;
  CHECK(oracle::bareiss_rank(psi) == 3);
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 3; ++j) {
      const Element x = b.basis_element(i);
      const Element y = b.basis_element(j);
      CHECK(psi * multiply(b, x, y) == multiply(t2, Element(psi * x), Element(psi * y)));
    }
  }
}

TEST_CASE("zero derivation with p = s gives B = A") {
  for (const Algebra& a : {corpus::truncated(2), matrix_algebra(2)}) {
    const Mat zero = zeros(a.dim(), a.dim());
    const ExtensionResult r = ore_quotient(a, Derivation::certify(a, zero), Poly({0, 1}));
    CHECK(r.algebra.dim() == a.dim());
    CHECK(r.collapsed_dim == 0);
    CHECK(oracle::bareiss_rank(r.embed) == a.dim());
    CHECK(r.u == r.algebra.zero());
    CHECK(oracle::extension_violation(a, r, zero, false).empty());
  }
}

TEST_CASE("Ore quotients of nilpotent derivations") {
  const Algebra m2 = matrix_algebra(2);
  const Mat d = ad(m2, matrix_unit(2, 0, 1)).matrix();
  const ExtensionResult r = ore_quotient(m2, Derivation::certify(m2, d));
  CHECK(r.p == Poly({0, 0, 0, 1}));
  CHECK(r.algebra.dim() == 8);
  CHECK(oracle::extension_violation(m2, r, d, false).empty());
}

TEST_CASE("Ore quotient preconditions") {
  const Algebra a = corpus::truncated(2);
  const Derivation d = Derivation::certify(a, corpus::euler(2));
  try {
    ore_quotient(a, d, Poly({0, 2}));
    FAIL("accepted a non-monic p");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMonic);
  }
  try {
    ore_quotient(a, d, Poly({0, 1}));
    FAIL("accepted p with p(D) != 0");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AnnihilatorFails);
    CHECK(e.witness() == std::vector<long>{1});
  }
  // Past the precondition the quotient kills iota(t): the embedding fails.
  try {
    ore_quotient(a, d, Poly({0, 1}), ExtensionOptions{true});
    FAIL("forced construction succeeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmbeddingFails);
  }
  // A multiple of the minimal polynomial is accepted.
  const ExtensionResult r = ore_quotient(a, d, Poly({0, -1, 1}) * Poly({1, 1}));
  CHECK(oracle::extension_violation(a, r, corpus::euler(2), false).empty());
}

TEST_CASE("simple image check on M2 and T2") {
  const Algebra m2 = matrix_algebra(2);
  const SimpleImage s = simple_image_check(m2, ad(m2, matrix_unit(2, 1, 0)));
  CHECK(s.hypotheses_hold());
  CHECK(s.left_full);
  CHECK(s.right_full);
  const Algebra t2 = upper_triangular(2);
  const SimpleImage t = simple_image_check(t2, ad(t2, t2.basis_element(1)));
  CHECK_FALSE(t.hypotheses_hold());
  CHECK_FALSE(t.left_full);
}
