#include "skewex/generate.hpp"
#include "skewex/maps.hpp"
#include "skewex/random.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace skewex;
using oracle::mat;
using oracle::vec;

TEST_CASE("derivation space dimensions") {
  // Hand-derived: Der(M_n) = inner = sl_n, Der(T2) = inner = T2 / center,
  // Der(Q[t]/(t^k)) = {t -> t f(t) ...}, semisimple commutative has none.
  CHECK(derivation_space(matrix_algebra(2)).size() == 3);
  CHECK(derivation_space(matrix_algebra(3)).size() == 8);
  CHECK(derivation_space(upper_triangular(2)).size() == 2);
  CHECK(derivation_space(corpus::truncated(2)).size() == 1);
  CHECK(derivation_space(corpus::truncated(3)).size() == 2);
  CHECK(derivation_space(corpus::qxq()).empty());
  CHECK(derivation_space(cyclic_group_algebra(3)).empty());
}

TEST_CASE("certification reports the failing basis pair") {
  const Algebra a = corpus::truncated(2);
  CHECK(is_derivation(a, corpus::euler(2)));
  const Check c = is_derivation(a, mat({{1, 0}, {0, 0}}));
  CHECK_FALSE(c);
  CHECK(c.witness == std::vector<long>{0, 0});
  CHECK_THROWS_AS(Derivation::certify(a, mat({{1, 0}, {0, 0}})), Error);
  CHECK_THROWS_AS(Derivation::certify(a, identity(3)), Error);

  const Algebra qq = corpus::qxq();
  CHECK(is_automorphism(qq, mat({{0, 1}, {1, 0}})));
  CHECK(is_endomorphism(qq, mat({{1, 0}, {1, 0}})));
  CHECK_FALSE(is_automorphism(qq, mat({{1, 0}, {1, 0}})));
  // (a, b) -> (a, 0) is multiplicative but not unital
  CHECK_FALSE(is_endomorphism(qq, mat({{1, 0}, {0, 0}})));
  CHECK(is_endomorphism(qq, mat({{1, 0}, {0, 0}}), false));
}

TEST_CASE("E-derivations are I - phi") {
  const Algebra qq = corpus::qxq();
  const AlgebraEndo phi = AlgebraEndo::certify(qq, mat({{1, 0}, {1, 0}}));
  const EDerivation d = EDerivation::from_endomorphism(phi);
  CHECK(d.matrix() == mat({{0, 0}, {-1, 1}}));
  CHECK(is_ederivation(qq, d.matrix()));
  CHECK(EDerivation::certify(qq, d.matrix()).phi().matrix() == phi.matrix());
  CHECK_FALSE(is_ederivation(qq, mat({{1, 0}, {0, 1}}) + mat({{1, 0}, {0, 0}})));
}

TEST_CASE("inner maps") {
  std::mt19937_64 rng(31);
  const Algebra a = matrix_algebra(3);
  for (int i = 0; i < 10; ++i) {
    const Element u = random_element(a, rng);
    const Element x = random_element(a, rng);
    CHECK(ad(a, u)(x) == oracle::matrix_product(3, u, x) - oracle::matrix_product(3, x, u));
    if (const auto v = inverse(a, u)) {
      CHECK(Ad(a, u)(x) == oracle::matrix_product(3, oracle::matrix_product(3, u, x), *v));
    }
  }
  CHECK_THROWS_AS(Ad(a, matrix_unit(3, 0, 0)), Error);
}

TEST_CASE("exp of ad(E12) is Ad(1 + E12)") {
  const Algebra a = matrix_algebra(2);
  const Element e12 = matrix_unit(2, 0, 1);
  const AlgebraEndo e = exp_derivation(a, ad(a, e12));
  CHECK(e.matrix() == Ad(a, a.unit() + e12).matrix());
  CHECK_THROWS_AS(exp_derivation(corpus::truncated(2), Derivation::certify(corpus::truncated(2), corpus::euler(2))), Error);
}

TEST_CASE("local finiteness reports") {
  const auto euler = local_finiteness_report(corpus::euler(2));
  CHECK(euler.locally_finite);
  CHECK_FALSE(euler.locally_nilpotent);
  CHECK(euler.min_poly == Poly({0, -1, 1}));
  const auto nil = local_finiteness_report(ad(matrix_algebra(2), matrix_unit(2, 0, 1)).matrix());
  CHECK(nil.locally_nilpotent);
  CHECK(*nil.nilpotency_index == 3);
}

TEST_CASE("kernel chain of t -> 0 on Q[t]/(t^3)") {
  const Algebra a = corpus::truncated(3);
  const AlgebraEndo phi = AlgebraEndo::certify(a, mat({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
  const KernelChain kc = ker_chain(a, phi);
  CHECK(kc.ker_ge1 == radical(a));
  CHECK(kc.stabilization_index == 1);
  const InducedMap im = induced_map(a, phi);
  CHECK(im.quotient.dim() == 1);
  CHECK(im.injective);
  CHECK(im.surjective);
  const Element t = a.basis_element(1);
  CHECK(chain_preimage(a, phi, t) == t);
  CHECK_THROWS_AS(chain_preimage(a, phi, a.unit()), Error);
}

TEST_CASE("kernel chain that needs two steps") {
  // phi(x, y) = (y, x(0)) on Q[t]/(t^2) x Q[t]/(t^2): t1 -> 0 and t2 -> t1,
  // so Ker phi = <t1> and Ker phi^2 = <t1, t2>.
  const Algebra a = direct_product(corpus::truncated(2), corpus::truncated(2));
  const AlgebraEndo phi = AlgebraEndo::certify(a, mat({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 0, 0, 0}}));
  const KernelChain kc = ker_chain(a, phi);
  CHECK(kc.ker_ge1.dim() == 2);
  CHECK(kc.stabilization_index == 2);
  const Element t2 = a.basis_element(3);
  const Element b = chain_preimage(a, phi, t2);
  CHECK(b == vec({0, 1, 0, 1}));
  CHECK(b - phi(b) == t2);
}

TEST_CASE("automorphism orders") {
  const Algebra m2 = matrix_algebra(2);
  CHECK(*automorphism_order(Ad(m2, from_matrix(mat({{0, -1}, {1, 0}})))) == 2);
  CHECK(*automorphism_order(Ad(m2, from_matrix(mat({{0, -1}, {1, -1}})))) == 3);
  CHECK(*automorphism_order(Ad(m2, from_matrix(mat({{1, -1}, {1, 0}})))) == 3);
  CHECK(*automorphism_order(AlgebraEndo::certify(corpus::qxq(), mat({{0, 1}, {1, 0}}))) == 2);
  CHECK_FALSE(automorphism_order(Ad(m2, from_matrix(mat({{1, 0}, {0, 2}})))));
}

TEST_CASE("matrix power") {
  const Mat m = mat({{1, 1}, {0, 1}});
  CHECK(matrix_power(m, 0) == identity(2));
  CHECK(matrix_power(m, 5) == mat({{1, 5}, {0, 1}}));
}
