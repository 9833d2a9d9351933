#ifndef SKEWEX_ALGEBRA_HPP
#define SKEWEX_ALGEBRA_HPP

#include "skewex/linear.hpp"
#include "skewex/poly.hpp"
#include "skewex/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace skewex {

/// Coordinates of an algebra element relative to the algebra's basis.
using Element = Vec;

/// Dense c[i][j][k] with e_i e_j = sum_k c[i][j][k] e_k.
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(Index n) : m_n(n), m_data(static_cast<std::size_t>(n * n * n)) {}

  Index dim() const { return m_n; }
  Rat& operator()(Index i, Index j, Index k) { return m_data[offset(i, j, k)]; }
  const Rat& operator()(Index i, Index j, Index k) const { return m_data[offset(i, j, k)]; }

  /// e_i e_j as a coordinate vector.
  Vec product(Index i, Index j) const;
  void set_product(Index i, Index j, const Vec& v);

 private:
  std::size_t offset(Index i, Index j, Index k) const { return static_cast<std::size_t>((i * m_n + j) * m_n + k); }
  Index m_n = 0;
  std::vector<Rat> m_data;
};

/// A finite-dimensional unital associative Q-algebra. Instances only come
/// out of make_algebra (or the builders that call it), so associativity
/// and the two-sided unit have always been verified.
class Algebra {
 public:
  Algebra() = default;

  Index dim() const { return m_tensor.dim(); }
  const std::vector<std::string>& labels() const { return m_labels; }
  const Element& unit() const { return m_unit; }
  const StructureTensor& tensor() const { return m_tensor; }

  /// Matrix of x -> e_i x.
  const Mat& left_basis(Index i) const { return m_left[static_cast<std::size_t>(i)]; }
  /// Matrix of x -> x e_j.
  const Mat& right_basis(Index j) const { return m_right[static_cast<std::size_t>(j)]; }

  Element basis_element(Index i) const { return unit_vector(dim(), i); }
  Element zero() const { return zeros(dim()); }

  friend Algebra make_algebra(StructureTensor sc, Element unit, std::vector<std::string> labels);

 private:
  StructureTensor m_tensor;
  std::vector<std::string> m_labels;
  Element m_unit;
  std::vector<Mat> m_left;
  std::vector<Mat> m_right;
};

/// Validates associativity on all basis triples and the two-sided unit.
/// Throws NotAssociative (witness i, j, k) or UnitFails (witness basis index).
Algebra make_algebra(StructureTensor sc, Element unit, std::vector<std::string> labels = {});

Element multiply(const Algebra& a, const Element& x, const Element& y);
Element power(const Algebra& a, const Element& x, int m);
Element evaluate(const Algebra& a, const Poly& p, const Element& x);
std::optional<Element> inverse(const Algebra& a, const Element& x);
bool is_commutative(const Algebra& a);

/// The regular representation mu(x): left multiplication by x.
Mat left_regular(const Algebra& a, const Element& x);
/// rho(x): right multiplication by x.
Mat right_regular(const Algebra& a, const Element& x);
Rat trace_of(const Algebra& a, const Element& x);

enum class Side { Left, Right, TwoSided };
const char* to_string(Side side);

Subspace left_ideal(const Algebra& a, const std::vector<Element>& gens);
Subspace right_ideal(const Algebra& a, const std::vector<Element>& gens);
Subspace two_sided_ideal(const Algebra& a, const std::vector<Element>& gens);
Subspace ideal(const Algebra& a, const std::vector<Element>& gens, Side side);
bool is_two_sided_ideal(const Algebra& a, const Subspace& s);
/// span{x y : x in s, y in t}
Subspace product_space(const Algebra& a, const Subspace& s, const Subspace& t);

/// Smallest unital multiplicatively closed subspace containing gens.
Subspace subalgebra_generated(const Algebra& a, const std::vector<Element>& gens);

struct Quotient {
  Algebra algebra;
  /// pi : A -> A/I, rows = quotient coordinates.
  Mat projection;
  /// Coordinate inclusion of the complement, pi * section = I.
  Mat section;
};

/// A / I on the complement basis given by the non-pivot coordinates of I.
/// Throws NotAnIdeal or ImproperIdeal.
Quotient quotient(const Algebra& a, const Subspace& ideal);

struct Subalgebra {
  Algebra algebra;
  /// Columns are the subalgebra basis in A's coordinates.
  Mat inclusion;
};

/// s must be a unital subalgebra; its echelon basis becomes the new basis.
Subalgebra restrict_to(const Algebra& a, const Subspace& s);

/// Kernel of the trace form (x, y) -> tr mu(xy): the Jacobson radical in
/// characteristic zero.
Subspace radical(const Algebra& a);
/// Least k >= 1 with I^k = 0, or nullopt if I is not nilpotent.
std::optional<int> nilpotency_index(const Algebra& a, const Subspace& ideal);
Subspace center(const Algebra& a);

struct Simplicity {
  enum class Status { Simple, NotSimple, Inconclusive } status;
  /// For NotSimple: a proper nonzero two-sided ideal.
  std::optional<Subspace> witness;
};
const char* to_string(Simplicity::Status s);

/// Simple iff the radical vanishes and the center has no idempotents
/// besides 0 and 1.
Simplicity is_simple(const Algebra& a);

// Builders. Basis orders: matrix units E_ij row-major; powers 1, t, ...,
// t^{d-1}; group elements g^0..g^{m-1}; concatenated bases; E_ij with i <= j.
Algebra base_field();
Algebra matrix_algebra(int n);
Algebra poly_quotient(const Poly& f);
Algebra cyclic_group_algebra(int m);
Algebra direct_product(const Algebra& a, const Algebra& b);
Algebra upper_triangular(int n);
/// The same algebra written in the basis given by the columns of p.
Algebra change_basis(const Algebra& a, const Mat& p);

/// E_ij in matrix_algebra(n).
Element matrix_unit(int n, int i, int j);
/// Row-major flattening of an n x n matrix into matrix_algebra(n) coordinates.
Element from_matrix(const Mat& m);
Mat to_matrix(const Element& x, int n);

}  // namespace skewex

#endif  // SKEWEX_ALGEBRA_HPP
