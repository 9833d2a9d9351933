#include "skewex/generate.hpp"
#include "skewex/mathieu.hpp"
#include "skewex/random.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace skewex;
using oracle::mat;
using oracle::vec;

namespace {

const Rat kHalf(1, 2);

std::vector<Rat> small_grid() { return {-1, -kHalf, 0, kHalf, 1}; }

}  // namespace

TEST_CASE("idempotents of Q[t]/(t^2 - t) and Q[C2]") {
  const IdempotentSet s = enumerate_idempotents(corpus::split());
  CHECK(s.complete);
  CHECK(oracle::same_set(s.items, {vec({0, 0}), vec({1, 0}), vec({0, 1}), vec({1, -1})}));
  CHECK(s.items.front() == vec({0, 0}));
  const IdempotentSet c = enumerate_idempotents(cyclic_group_algebra(2));
  CHECK(oracle::same_set(c.items, {vec({0, 0}), vec({1, 0}), vec({kHalf, kHalf}), vec({kHalf, -kHalf})}));
}

TEST_CASE("idempotents agree with a grid search") {
  for (const auto& e : corpus::all()) {
    if (!is_commutative(e.algebra) || e.algebra.dim() > 3) continue;
    const IdempotentSet s = enumerate_idempotents(e.algebra);
    CHECK(s.complete);
    // Q[C3] has (1 + g + g^2) / 3 which is off the grid.
    if (e.name == "Q[C3]") continue;
    CHECK(oracle::same_set(s.items, oracle::grid_idempotents(e.algebra, small_grid())));
  }
}

TEST_CASE("provenance of enumerated idempotents") {
  // Q[t]/((t^2 - t)^2): the class of t lifts to 3t^2 - 2t^3.
  const Algebra a = poly_quotient(Poly({0, 0, 1, -2, 1}));
  const IdempotentSet s = enumerate_idempotents(a);
  CHECK(s.complete);
  REQUIRE(s.items.size() == 4);
  CHECK(std::count(s.provenance.begin(), s.provenance.end(), Provenance::Lifted) == 2);
  CHECK(std::count(s.provenance.begin(), s.provenance.end(), Provenance::Sum) == 2);
  for (const Element& e : s.items) CHECK(multiply(a, e, e) == e);
  // 3t^2 - 2t^3 reduced mod t^4 - 2t^3 + t^2 is 3t^2 - 2t^3 itself
  const bool has = std::find(s.items.begin(), s.items.end(), vec({0, 0, 3, -2})) != s.items.end();
  CHECK(has);
}

TEST_CASE("fields without rational splitting") {
  // Q(i) and Q(i) x Q(sqrt 2) are recognized as fields component by component.
  const IdempotentSet gi = enumerate_idempotents(poly_quotient(Poly({1, 0, 1})));
  CHECK(gi.complete);
  CHECK(gi.items.size() == 2);
  const IdempotentSet two = enumerate_idempotents(poly_quotient(Poly({1, 0, 1}) * Poly({-2, 0, 1})));
  CHECK(two.complete);
  CHECK(two.items.size() == 4);
  const IdempotentSet c3 = enumerate_idempotents(cyclic_group_algebra(3));
  CHECK(c3.complete);
  CHECK(oracle::same_set(c3.items, {vec({0, 0, 0}), vec({1, 0, 0}), vec({Rat(1, 3), Rat(1, 3), Rat(1, 3)}),
                                    vec({Rat(2, 3), Rat(-1, 3), Rat(-1, 3)})}));
  // Q[C5] = Q x Q(zeta_5) has a degree-4 component, which is not decided.
  const IdempotentSet c5 = enumerate_idempotents(cyclic_group_algebra(5));
  CHECK_FALSE(c5.complete);
  CHECK(c5.inconclusive_reason.has_value());
  CHECK(c5.items.size() == 4);
}

TEST_CASE("enumeration limits") {
  const Algebra q3 = direct_product(corpus::qxq(), base_field());
  CHECK(enumerate_idempotents(q3).items.size() == 8);
  try {
    enumerate_idempotents(q3, 4);
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
  CHECK_THROWS_AS(enumerate_idempotents(matrix_algebra(2)), Error);
}

TEST_CASE("trace equals rank") {
  std::mt19937_64 rng(61);
  for (int n : {2, 3}) {
    const Algebra a = matrix_algebra(n);
    for (const Element& e : conjugated_diagonal_idempotents(n, 10, rng)) {
      const TraceRank tr = trace_rank_idempotent(a, e);
      CHECK(tr.equal());
      CHECK(tr.rank == oracle::bareiss_rank(left_regular(a, e)));
      // mu(e) on M_n is n copies of e
      CHECK(tr.rank == n * oracle::bareiss_rank(to_matrix(e, n)));
    }
    for (const Element& e : rank_one_idempotents(n, 30)) {
      CHECK(to_matrix(e, n) * to_matrix(e, n) == to_matrix(e, n));
      CHECK(oracle::bareiss_rank(to_matrix(e, n)) == 1);
    }
  }
  CHECK(rank_one_idempotents(2, 100).size() == 100);
  CHECK_THROWS_AS(trace_rank_idempotent(corpus::truncated(2), vec({0, 1})), Error);
}

TEST_CASE("Mathieu verdicts on Q x Q") {
  const Algebra a = corpus::qxq();
  const IdempotentSet idems = enumerate_idempotents(a);
  const MsVerdict line = ms_check(a, span(std::vector<Element>{a.unit()}, 2), idems);
  CHECK(line.status == MsVerdict::Status::NotMS);
  CHECK(*line.witness == a.unit());
  const MsVerdict factor = ms_check(a, span(std::vector<Element>{vec({1, 0})}, 2), idems);
  CHECK(factor.status == MsVerdict::Status::IsMS);
  // The anti-diagonal contains no idempotent other than 0.
  const MsVerdict anti = ms_check(a, span(std::vector<Element>{vec({1, -1})}, 2), idems);
  CHECK(anti.status == MsVerdict::Status::IsMS);
  CHECK(anti.checked.size() == 1);
}

TEST_CASE("one-sided verdicts on T2") {
  // e = E11 + E12 is idempotent with T2 e = <e> but e T2 = <E11, E12>.
  const Algebra t2 = upper_triangular(2);
  const Element e = vec({1, 1, 0});
  IdempotentSet idems;
  idems.items = {t2.zero(), e};
  idems.provenance = {Provenance::Sum, Provenance::Primitive};
  idems.complete = false;
  const Subspace v = span(std::vector<Element>{e}, 3);
  CHECK(ms_check(t2, v, idems, Side::Left).status == MsVerdict::Status::InconclusiveIdempotents);
  CHECK(ms_check(t2, v, idems, Side::Right).status == MsVerdict::Status::NotMS);
  CHECK(ms_check(t2, v, idems, Side::TwoSided).status == MsVerdict::Status::NotMS);
}

TEST_CASE("power spans") {
  const Algebra a = corpus::truncated(3);
  const PowerSpan p = power_span(a, a.basis_element(1));
  CHECK(p.all.dim() == 2);
  CHECK(p.tail.is_zero());
  CHECK(p.n0 == 3);
  const Algebra qq = corpus::qxq();
  const PowerSpan q = power_span(qq, vec({2, 0}));
  CHECK(q.all.dim() == 1);
  CHECK(q.tail == q.all);
  CHECK(q.n0 == 1);
}

TEST_CASE("Mathieu witness checks") {
  const Algebra a = corpus::truncated(3);
  const Subspace rad = radical(a);
  const Element t = a.basis_element(1);
  CHECK(ms_witness_check(a, rad, t, a.unit(), a.unit(), Side::TwoSided) == WitnessResult::Pass);
  CHECK(ms_witness_check(a, rad, a.unit(), a.unit(), a.unit(), Side::Left) == WitnessResult::NotApplicable);
  const Algebra qq = corpus::qxq();
  const Subspace line = span(std::vector<Element>{qq.unit()}, 2);
  CHECK(ms_witness_check(qq, line, qq.unit(), vec({1, 0}), qq.unit(), Side::Left) == WitnessResult::Fail);
}

TEST_CASE("audits of derivation and automorphism images") {
  const Algebra m2 = matrix_algebra(2);
  const Mat d = ad(m2, matrix_unit(2, 0, 1)).matrix();
  CHECK(traceless_image(m2, d));
  CHECK(image_idempotent_audit(m2, d, rank_one_idempotents(2, 100)).empty());
  // A map whose image contains E11 is caught by both checks.
  Mat bad = zeros(4, 4);
  bad(0, 0) = 1;
  CHECK_FALSE(traceless_image(m2, bad));
  const auto found = image_idempotent_audit(m2, bad, std::vector<Element>{matrix_unit(2, 0, 0), m2.zero()});
  REQUIRE(found.size() == 1);
  CHECK(found[0] == matrix_unit(2, 0, 0));

  const Algebra qq = corpus::qxq();
  const IdempotentSet idems = enumerate_idempotents(qq);
  CHECK(image_idempotent_audit(qq, identity(2) - mat({{0, 1}, {1, 0}}), idems).empty());
  CHECK(image_idempotent_audit(qq, identity(2) - mat({{1, 0}, {1, 0}}), idems).size() == 1);
}

TEST_CASE("kernel chain biconditional") {
  const Algebra qq = corpus::qxq();
  const AlgebraEndo phi = AlgebraEndo::certify(qq, mat({{1, 0}, {1, 0}}));
  const KernelChainReport rep = kernel_chain_check(qq, phi, enumerate_idempotents(qq));
  CHECK(rep.holds());
  REQUIRE(rep.rows.size() == 4);
  int in_image = 0;
  for (const auto& row : rep.rows) in_image += row.in_image;
  CHECK(in_image == 2);

  std::mt19937_64 rng(62);
  for (int i = 0; i < 30; ++i) {
    const LocalEndomorphism le = random_local_endomorphism(rng);
    if (!induced_map(le.algebra, le.phi).surjective) continue;
    CHECK(kernel_chain_check(le.algebra, le.phi, enumerate_idempotents(le.algebra)).holds());
  }
}

TEST_CASE("the idempotent cap honours the environment") {
  CHECK(idempotent_cap() >= 1);
}
