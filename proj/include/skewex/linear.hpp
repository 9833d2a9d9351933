#ifndef SKEWEX_LINEAR_HPP
#define SKEWEX_LINEAR_HPP

// Exact linear algebra over a field scalar. Everything here is written
// against a generic `Scalar` so long as `Scalar(0) == x` is an exact test;
// the library instantiates it with Rat.

#include "skewex/error.hpp"
#include "skewex/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace skewex {

template <typename Scalar>
struct EchelonForm {
  MatrixX<Scalar> reduced;
  std::vector<Index> pivots;

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Gauss-Jordan elimination to the unique reduced row-echelon form.
template <typename Scalar>
EchelonForm<Scalar> rref(MatrixX<Scalar> m) {
  EchelonForm<Scalar> out;
  const Index rows = m.rows();
  const Index cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = -1;
    for (Index i = r; i < rows; ++i) {
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Scalar f = m(i, c);
      for (Index j = c; j < cols; ++j) {
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <typename Scalar>
Index rank(const MatrixX<Scalar>& m) {
  return rref(m).rank();
}

/// Some x with m x = b, free variables set to zero; nullopt if inconsistent.
template <typename Scalar>
std::optional<VectorX<Scalar>> solve(const MatrixX<Scalar>& m, const VectorX<Scalar>& b) {
  if (b.size() != m.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "solve: right-hand side length differs from row count");
  }
  MatrixX<Scalar> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  const auto e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  VectorX<Scalar> x = VectorX<Scalar>::Zero(m.cols());
  for (Index r = 0; r < e.rank(); ++r) x(e.pivots[r]) = e.reduced(r, m.cols());
  return x;
}

template <typename Scalar>
std::optional<MatrixX<Scalar>> inverse(const MatrixX<Scalar>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const Index n = m.rows();
  MatrixX<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = MatrixX<Scalar>::Identity(n, n);
  const auto e = rref(std::move(aug));
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return MatrixX<Scalar>(e.reduced.rightCols(n));
}

/// A subspace of Scalar^n stored by its reduced row-echelon basis. The
/// basis is canonical, so two subspaces are equal iff their bases are.
template <typename Scalar>
class BasicSubspace {
 public:
  using Vector = VectorX<Scalar>;
  using Matrix = MatrixX<Scalar>;

  BasicSubspace() = default;

  static BasicSubspace zero(Index ambient) { return BasicSubspace(ambient, Matrix(0, ambient), {}); }
  static BasicSubspace full(Index ambient) {
    std::vector<Index> piv(static_cast<std::size_t>(ambient));
    for (Index i = 0; i < ambient; ++i) piv[static_cast<std::size_t>(i)] = i;
    return BasicSubspace(ambient, Matrix::Identity(ambient, ambient), std::move(piv));
  }

  /// Row space of `rows` (each row is one spanning vector).
  static BasicSubspace from_rows(const Matrix& rows) {
    auto e = rref(rows);
    Matrix basis = e.reduced.topRows(e.rank());
    return BasicSubspace(rows.cols(), std::move(basis), std::move(e.pivots));
  }

  Index ambient_dim() const { return m_ambient; }
  Index dim() const { return m_basis.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == m_ambient; }

  /// Rows are the canonical basis vectors.
  const Matrix& basis() const { return m_basis; }
  Vector basis_vector(Index i) const { return m_basis.row(i).transpose(); }
  std::vector<Vector> basis_vectors() const {
    std::vector<Vector> out;
    out.reserve(static_cast<std::size_t>(dim()));
    for (Index i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
    return out;
  }
  const std::vector<Index>& pivots() const { return m_pivots; }

  /// Coordinates that are not pivots of the basis; they index a
  /// complement and hence a basis of the quotient space.
  std::vector<Index> complement_coords() const {
    std::vector<Index> out;
    std::size_t p = 0;
    for (Index c = 0; c < m_ambient; ++c) {
      if (p < m_pivots.size() && m_pivots[p] == c) {
        ++p;
      } else {
        out.push_back(c);
      }
    }
    return out;
  }

  /// v minus its echelon projection; zero iff v lies in the subspace.
  Vector residual(Vector v) const {
    check_length(v.size());
    for (Index r = 0; r < dim(); ++r) {
      const Scalar f = v(m_pivots[static_cast<std::size_t>(r)]);
      if (f != 0) v -= f * basis_vector(r);
    }
    return v;
  }

  bool contains(const Vector& v) const {
    const Vector res = residual(v);
    for (Index i = 0; i < res.size(); ++i) {
      if (res(i) != 0) return false;
    }
    return true;
  }

  bool is_subset_of(const BasicSubspace& other) const {
    check_same(other);
    for (Index r = 0; r < dim(); ++r) {
      if (!other.contains(basis_vector(r))) return false;
    }
    return true;
  }

  BasicSubspace sum(const BasicSubspace& other) const {
    check_same(other);
    Matrix stacked(dim() + other.dim(), m_ambient);
    stacked << m_basis, other.m_basis;
    return from_rows(stacked);
  }

  /// Zassenhaus: row-reduce [[S, S], [T, 0]]; rows with zero left half
  /// carry the intersection in their right half.
  BasicSubspace intersect(const BasicSubspace& other) const {
    check_same(other);
    const Index n = m_ambient;
    Matrix z = Matrix::Zero(dim() + other.dim(), 2 * n);
    z.topLeftCorner(dim(), n) = m_basis;
    z.topRightCorner(dim(), n) = m_basis;
    z.bottomLeftCorner(other.dim(), n) = other.m_basis;
    const auto e = rref(std::move(z));
    std::vector<Index> rows;
    for (Index r = 0; r < e.rank(); ++r) {
      if (e.pivots[static_cast<std::size_t>(r)] >= n) rows.push_back(r);
    }
    Matrix gens(static_cast<Index>(rows.size()), n);
    for (std::size_t i = 0; i < rows.size(); ++i) gens.row(static_cast<Index>(i)) = e.reduced.row(rows[i]).tail(n);
    return from_rows(gens);
  }

  friend bool operator==(const BasicSubspace& a, const BasicSubspace& b) {
    return a.m_ambient == b.m_ambient && a.m_basis.rows() == b.m_basis.rows() && a.m_basis == b.m_basis;
  }

 private:
  BasicSubspace(Index ambient, Matrix basis, std::vector<Index> pivots)
      : m_ambient(ambient), m_basis(std::move(basis)), m_pivots(std::move(pivots)) {}

  void check_length(Index n) const {
    if (n != m_ambient) throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
  }
  void check_same(const BasicSubspace& other) const {
    if (other.m_ambient != m_ambient) throw Error(ErrorKind::DimensionMismatch, "subspaces live in different spaces");
  }

  Index m_ambient = 0;
  Matrix m_basis;
  std::vector<Index> m_pivots;
};

using Subspace = BasicSubspace<Rat>;

template <typename Scalar>
BasicSubspace<Scalar> span(const std::vector<VectorX<Scalar>>& vectors, Index ambient) {
  MatrixX<Scalar> rows(static_cast<Index>(vectors.size()), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient) throw Error(ErrorKind::DimensionMismatch, "span: vector length differs from ambient dimension");
    rows.row(static_cast<Index>(i)) = vectors[i].transpose();
  }
  return BasicSubspace<Scalar>::from_rows(rows);
}

/// {x : m x = 0}; dim = cols - rank.
template <typename Scalar>
BasicSubspace<Scalar> kernel(const MatrixX<Scalar>& m) {
  const auto e = rref(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<VectorX<Scalar>> gens;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    VectorX<Scalar> v = VectorX<Scalar>::Zero(n);
    v(free) = 1;
    for (Index r = 0; r < e.rank(); ++r) v(e.pivots[static_cast<std::size_t>(r)]) = -e.reduced(r, free);
    gens.push_back(std::move(v));
  }
  return span(gens, n);
}

/// Column space (image) of m.
template <typename Scalar>
BasicSubspace<Scalar> image(const MatrixX<Scalar>& m) {
  return BasicSubspace<Scalar>::from_rows(m.transpose());
}

/// Projection onto the quotient space ambient / s, in the coordinates
/// left over after removing the pivots of s (rows = those coordinates).
template <typename Scalar>
MatrixX<Scalar> quotient_projection(const BasicSubspace<Scalar>& s) {
  const auto comp = s.complement_coords();
  const Index m = static_cast<Index>(comp.size());
  MatrixX<Scalar> pi = MatrixX<Scalar>::Zero(m, s.ambient_dim());
  for (Index c = 0; c < m; ++c) pi(c, comp[static_cast<std::size_t>(c)]) = 1;
  // Pivot coordinate p of basis row r reduces to e_p - row_r.
  for (Index r = 0; r < s.dim(); ++r) {
    const Index p = s.pivots()[static_cast<std::size_t>(r)];
    for (Index c = 0; c < m; ++c) pi(c, p) = -s.basis()(r, comp[static_cast<std::size_t>(c)]);
  }
  return pi;
}

}  // namespace skewex

#endif  // SKEWEX_LINEAR_HPP
