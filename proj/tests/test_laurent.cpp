#include "skewex/generate.hpp"
#include "skewex/laurent.hpp"
#include "skewex/random.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace skewex;
using oracle::mat;
using oracle::vec;

namespace {

LaurentSkewPoly random_laurent(const Algebra& a, std::mt19937_64& rng) {
  LaurentSkewPoly f(a.dim());
  const int terms = static_cast<int>(draw_between(rng, 1, 4));
  for (int i = 0; i < terms; ++i) f.add_term(static_cast<int>(draw_between(rng, -3, 3)), random_element(a, rng, -2, 2));
  return f;
}

const Mat kInversion = mat({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});

}  // namespace

TEST_CASE("Laurent multiplication agrees with single-step rewriting") {
  std::mt19937_64 rng(51);
  const Algebra c3 = cyclic_group_algebra(3);
  const Algebra m2 = matrix_algebra(2);
  const AlgebraEndo inv = AlgebraEndo::certify(c3, kInversion);
  const AlgebraEndo ad = Ad(m2, from_matrix(mat({{1, 1}, {0, 2}})));
  for (int round = 0; round < 30; ++round) {
    const LaurentSkewPoly f = random_laurent(c3, rng);
    const LaurentSkewPoly g = random_laurent(c3, rng);
    CHECK(laurent_mul(c3, f, g, inv) == oracle::rewrite_laurent_mul(c3, f, g, kInversion));
    const LaurentSkewPoly p = random_laurent(m2, rng);
    const LaurentSkewPoly q = random_laurent(m2, rng);
    CHECK(laurent_mul(m2, p, q, ad) == oracle::rewrite_laurent_mul(m2, p, q, ad.matrix()));
  }
}

TEST_CASE("conjugation by powers of X applies powers of phi") {
  std::mt19937_64 rng(52);
  const Algebra m2 = matrix_algebra(2);
  const AlgebraEndo phi = Ad(m2, from_matrix(mat({{1, 1}, {0, 1}})));
  const AutomorphismPowers pw(phi);
  for (int k = -3; k <= 3; ++k) {
    const Element x = random_element(m2, rng);
    CHECK(conjugate(m2, x, k, phi) == pw(k) * x);
  }
  CHECK(pw(-1) * phi.matrix() == identity(4));
  CHECK_THROWS_AS(AutomorphismPowers(AlgebraEndo::certify(corpus::qxq(), mat({{1, 0}, {1, 0}}))), Error);
}

TEST_CASE("evaluation at one") {
  std::mt19937_64 rng(53);
  const Algebra c3 = cyclic_group_algebra(3);
  const AlgebraEndo phi = AlgebraEndo::certify(c3, kInversion);
  LaurentSkewPoly f(3);
  f.add_term(-1, vec({1, 0, 0}));
  f.add_term(2, vec({0, 1, 0}));
  CHECK(eval_at_one(f) == vec({1, 1, 0}));
  // f = 1 - X^{-1}: f(phi) = I - phi^{-1}
  const ScalarLaurent s{{0, 1}, {-1, -1}};
  CHECK(evaluate(s, phi) == identity(3) - kInversion);
  for (int round = 0; round < 20; ++round) {
    const int j = static_cast<int>(draw_between(rng, -2, 2));
    const int k = static_cast<int>(draw_between(rng, -2, 2));
    const EvaluationAtOne e = evaluation_at_one_check(c3, s, random_element(c3, rng), random_element(c3, rng), j, k, phi);
    CHECK(e.holds());
  }
}

TEST_CASE("swap on Q x Q with s^2 - 1 gives M2") {
  const Algebra qq = corpus::qxq();
  const Mat swap = mat({{0, 1}, {1, 0}});
  const ExtensionResult r = laurent_quotient(qq, AlgebraEndo::certify(qq, swap));
  CHECK(r.p == Poly({-1, 0, 1}));
  CHECK(r.algebra.dim() == 4);
  CHECK(r.collapsed_dim == 0);
  CHECK(oracle::extension_violation(qq, r, swap, true).empty());
  CHECK(embedding_injective(r));
  CHECK(is_simple(r.algebra).status == Simplicity::Status::Simple);
  REQUIRE(r.u_inverse);
  CHECK(*r.u_inverse == r.u);
}

TEST_CASE("inversion on Q[C3]") {
  const Algebra c3 = cyclic_group_algebra(3);
  const ExtensionResult r = laurent_quotient(c3, AlgebraEndo::certify(c3, kInversion));
  CHECK(r.algebra.dim() == 6);
  CHECK(oracle::extension_violation(c3, r, kInversion, true).empty());
}

TEST_CASE("inner automorphism of M2") {
  const Algebra m2 = matrix_algebra(2);
  const AlgebraEndo phi = Ad(m2, from_matrix(mat({{1, 0}, {0, 2}})));
  const ExtensionResult r = laurent_quotient(m2, phi);
  // Eigenvalues of Ad: 1, 2, 1/2
  CHECK(r.p == Poly::from_roots({1, 2, Rat(1, 2)}));
  CHECK(oracle::extension_violation(m2, r, phi.matrix(), true).empty());
}

TEST_CASE("identity with p = s - 1 gives B = A") {
  const Algebra t2 = upper_triangular(2);
  const AlgebraEndo id = AlgebraEndo::certify(t2, identity(3));
  const ExtensionResult r = laurent_quotient(t2, id);
  CHECK(r.p == Poly({-1, 1}));
  CHECK(r.algebra.dim() == 3);
  CHECK(r.u == r.algebra.unit());
}

TEST_CASE("Laurent quotient preconditions") {
  const Algebra qq = corpus::qxq();
  const AlgebraEndo swap = AlgebraEndo::certify(qq, mat({{0, 1}, {1, 0}}));
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InternalConsistency;
  };
  CHECK(kind_of([&] { laurent_quotient(qq, swap, Poly({-2, 0, 2})); }) == ErrorKind::NotMonic);
  CHECK(kind_of([&] { laurent_quotient(qq, swap, Poly({-1, 1})); }) == ErrorKind::AnnihilatorFails);
  // s (s^2 - 1) annihilates but has no constant term
  CHECK(kind_of([&] { laurent_quotient(qq, swap, Poly({0, -1, 0, 1})); }) == ErrorKind::ConstantTermZero);
  const AlgebraEndo proj = AlgebraEndo::certify(qq, mat({{1, 0}, {1, 0}}));
  CHECK(kind_of([&] { laurent_quotient(qq, proj); }) == ErrorKind::NotAutomorphism);
}
