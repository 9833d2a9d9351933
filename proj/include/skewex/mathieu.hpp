#ifndef SKEWEX_MATHIEU_HPP
#define SKEWEX_MATHIEU_HPP

// Idempotents, the idempotent criterion for Mathieu subspaces, and audits of
// which idempotents can land in the image of a derivation-like map.

#include "skewex/algebra.hpp"
#include "skewex/maps.hpp"

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace skewex {

enum class Provenance { Primitive, Sum, Lifted };
const char* to_string(Provenance p);

struct IdempotentSet {
  std::vector<Element> items;
  /// Parallel to items.
  std::vector<Provenance> provenance;
  bool complete = true;
  std::optional<std::string> inconclusive_reason;
};

/// 2^20 unless SKEWEX_IDEMPOTENT_CAP is set.
std::size_t idempotent_cap();

/// All idempotents of a commutative algebra: split A/rad by rational
/// eigen-projections of the basis, lift by e <- 3e^2 - 2e^3, then take all
/// sums of orthogonal primitives. A component that does not split over Q
/// counts as primitive when it is visibly a field (generated by one element
/// whose minimal polynomial has degree <= 3 and no rational root); any
/// other leaves the set incomplete. Throws NotCommutative, CapExceeded.
IdempotentSet enumerate_idempotents(const Algebra& a, std::size_t cap = idempotent_cap());

struct TraceRank {
  Rat trace;
  Index rank = 0;
  bool equal() const { return trace == Rat(rank); }
};
/// Throws NotIdempotent.
TraceRank trace_rank_idempotent(const Algebra& a, const Element& e);

struct MsVerdict {
  enum class Status { IsMS, NotMS, InconclusiveIdempotents } status = Status::IsMS;
  /// For NotMS: an idempotent e in V whose ideal is not inside V.
  std::optional<Element> witness;
  /// Every idempotent found in V, with whether its ideal stays in V.
  std::vector<std::pair<Element, bool>> checked;
};
const char* to_string(MsVerdict::Status s);

/// Idempotent criterion, over the idempotents that lie in V.
MsVerdict ms_check(const Algebra& a, const Subspace& v, const IdempotentSet& idems, Side side = Side::TwoSided);

struct PowerSpan {
  /// span{x^m : m >= 1}
  Subspace all;
  /// span{x^m : m >= n0}, where the tail has stopped shrinking.
  Subspace tail;
  int n0 = 1;
};
PowerSpan power_span(const Algebra& a, const Element& x);

enum class WitnessResult { Pass, Fail, NotApplicable };
const char* to_string(WitnessResult r);

/// If every power of x lies in V, test b x^m (left), x^m c (right) or
/// b x^m c (two-sided) in V for all large m.
WitnessResult ms_witness_check(const Algebra& a, const Subspace& v, const Element& x, const Element& b,
                               const Element& c, Side side);

/// Nonzero idempotents of the list that lie in the column span of m.
std::vector<Element> image_idempotent_audit(const Algebra& a, const Mat& m, const IdempotentSet& idems);
std::vector<Element> image_idempotent_audit(const Algebra& a, const Mat& m, const std::vector<Element>& candidates);

/// tr mu(y) = 0 for all y in the column span of m. A nonzero idempotent has
/// tr mu(e) = rank mu(e) > 0, so a passing check rules out every one.
Check traceless_image(const Algebra& a, const Mat& m);

/// Rank-one projections v w^T / (w^T v) of M_n with v = (1, s, s^2, ...),
/// w = (1, r, r^2, ...) for s, r on a rational grid; `count` of them.
std::vector<Element> rank_one_idempotents(int n, int count);

/// P diag(0/1) P^{-1} for random small invertible P; includes 0 and 1 only
/// when the diagonal pattern says so.
std::vector<Element> conjugated_diagonal_idempotents(int n, int count, std::mt19937_64& rng);

struct KernelChainRow {
  Element e;
  bool in_image = false;
  bool in_kernel_chain = false;
  /// Only meaningful when in_image: (e) is inside Im(I - phi).
  bool ideal_in_image = true;
  bool holds() const { return in_image == in_kernel_chain && (!in_image || ideal_in_image); }
};
struct KernelChainReport {
  std::vector<KernelChainRow> rows;
  bool holds() const;
};
/// e in Im(I - phi) iff e in Ker_{>=1} phi, over every idempotent given.
/// Throws PhibarNotSurjective.
KernelChainReport kernel_chain_check(const Algebra& a, const AlgebraEndo& phi, const IdempotentSet& idems);

}  // namespace skewex

#endif  // SKEWEX_MATHIEU_HPP
