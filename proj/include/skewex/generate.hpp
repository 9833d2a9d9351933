#ifndef SKEWEX_GENERATE_HPP
#define SKEWEX_GENERATE_HPP

// Random algebras, elements and maps for the explorer and the tests. All
// draws go through draw_between, so a seed fixes every value.

#include "skewex/algebra.hpp"
#include "skewex/maps.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace skewex {

struct Block {
  enum class Kind { Truncated, Split, Cyclic, Matrix, UpperTriangular } kind;
  /// Truncated: Q[t]/(t^k); Cyclic: Q[C_m]; Matrix: M_n; UpperTriangular: n.
  /// Split is Q[t]/(t^2 - t) and ignores it.
  int param = 1;

  Index dim() const;
  std::string name() const;
  Algebra build() const;
  friend bool operator==(const Block&, const Block&) = default;
};

struct RandomAlgebra {
  std::vector<Block> blocks;
  /// Product of the blocks, possibly in a changed basis.
  Algebra algebra;
  /// Columns: new basis in product coordinates (identity if unchanged).
  Mat basis;
  std::string description;
};

Algebra product_of(const std::vector<Block>& blocks);
/// 1 to 3 blocks with total dimension <= max_dim, then a random change of
/// basis half of the time.
RandomAlgebra random_algebra(std::mt19937_64& rng, int max_dim);

/// Integer coordinates in [lo, hi].
Element random_element(const Algebra& a, std::mt19937_64& rng, long lo = -3, long hi = 3);
/// L U with unit triangular L, U and off-diagonal entries in [-1, 1], so
/// the inverse is integral too.
Mat random_invertible_matrix(Index n, std::mt19937_64& rng);
std::optional<Element> random_unit(const Algebra& a, std::mt19937_64& rng, int attempts = 20);
/// Random combination of the nilpotent basis derivations, or nullopt.
std::optional<Derivation> random_nilpotent_derivation(const Algebra& a, const std::vector<Derivation>& basis,
                                                      std::mt19937_64& rng);
/// Automorphisms exchanging equal blocks of a product, expressed in the
/// algebra's (possibly changed) basis.
std::vector<AlgebraEndo> block_swaps(const RandomAlgebra& r);

/// A unital endomorphism of prod Q[t]/(t^k_i): factor j is fed by factor
/// f(j) through t -> c t^s (s k_src >= k_tgt) or t -> 0.
struct LocalEndomorphism {
  Algebra algebra;
  AlgebraEndo phi;
  std::string description;
};
LocalEndomorphism random_local_endomorphism(std::mt19937_64& rng, int max_blocks = 3, int max_k = 3);

}  // namespace skewex

#endif  // SKEWEX_GENERATE_HPP
