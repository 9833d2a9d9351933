#ifndef SKEWEX_TESTS_ORACLES_HPP
#define SKEWEX_TESTS_ORACLES_HPP

// Reference computations used to derive expected values. They avoid the
// library's own algorithms: fraction-free elimination instead of rref,
// matrix-power dependence instead of Krylov lcm, binomial expansion
// instead of rewriting, and so on.

#include "skewex/algebra.hpp"
#include "skewex/extension.hpp"
#include "skewex/laurent.hpp"
#include "skewex/maps.hpp"
#include "skewex/ore.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace oracle {

using namespace skewex;

/// Rank by Bareiss fraction-free elimination on the cleared-denominator
/// integer matrix.
inline Index bareiss_rank(const Mat& m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  std::vector<std::vector<Int>> a(static_cast<std::size_t>(rows), std::vector<Int>(static_cast<std::size_t>(cols)));
  for (Index i = 0; i < rows; ++i) {
    Int l = 1;
    for (Index j = 0; j < cols; ++j) {
      const Int d = boost::multiprecision::denominator(m(i, j));
      l = l / boost::multiprecision::gcd(l, d) * d;
    }
    for (Index j = 0; j < cols; ++j) {
      const Rat v = m(i, j) * Rat(l);
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = boost::multiprecision::numerator(v);
    }
  }
  Index rank = 0;
  Int prev = 1;
  for (Index c = 0; c < cols && rank < rows; ++c) {
    Index piv = -1;
    for (Index i = rank; i < rows; ++i) {
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(rank)]);
    const auto& p = a[static_cast<std::size_t>(rank)];
    for (Index i = rank + 1; i < rows; ++i) {
      auto& r = a[static_cast<std::size_t>(i)];
      const Int f = r[static_cast<std::size_t>(c)];
      for (Index j = 0; j < cols; ++j) {
        r[static_cast<std::size_t>(j)] =
            (p[static_cast<std::size_t>(c)] * r[static_cast<std::size_t>(j)] - f * p[static_cast<std::size_t>(j)]) / prev;
      }
    }
    prev = p[static_cast<std::size_t>(c)];
    ++rank;
  }
  return rank;
}

/// Least k with I, M, ..., M^k dependent, and the monic relation, found by
/// flattening the powers and solving one linear system.
inline Poly brute_minimal_polynomial(const Mat& m) {
  const Index n = m.rows();
  std::vector<Mat> pw{identity(n)};
  for (Index k = 1; k <= n; ++k) {
    pw.push_back(pw.back() * m);
    Mat sys(n * n, k);
    for (Index j = 0; j < k; ++j) sys.col(j) = pw[static_cast<std::size_t>(j)].reshaped();
    const Vec rhs = -pw[static_cast<std::size_t>(k)].reshaped();
    if (auto x = solve(sys, rhs)) {
      std::vector<Rat> c(x->data(), x->data() + x->size());
      c.emplace_back(1);
      return Poly(c);
    }
  }
  return Poly();
}

/// (a X^i)(b X^j) = sum_k C(i, k) a D^k(b) X^{i+j-k}.
inline SkewPoly binomial_skew_mul(const Algebra& a, const SkewPoly& f, const SkewPoly& g, const Mat& d) {
  std::vector<Element> out(static_cast<std::size_t>(std::max(0, f.degree() + g.degree() + 1)), a.zero());
  for (int i = 0; i <= f.degree(); ++i) {
    for (int j = 0; j <= g.degree(); ++j) {
      Element dk = g.coeff(j);
      for (int k = 0; k <= i; ++k) {
        out[static_cast<std::size_t>(i + j - k)] += binomial(i, k) * multiply(a, f.coeff(i), dk);
        dk = d * dk;
      }
    }
  }
  return SkewPoly(a.dim(), out);
}

/// Laurent product by single-step rewrites X c = phi(c) X, X^{-1} c = phi^{-1}(c) X^{-1}.
inline LaurentSkewPoly rewrite_laurent_mul(const Algebra& a, const LaurentSkewPoly& f, const LaurentSkewPoly& g,
                                           const Mat& phi) {
  const Mat phi_inv = *inverse(phi);
  LaurentSkewPoly out(a.dim());
  for (const auto& [i, x] : f.terms()) {
    for (const auto& [j, y] : g.terms()) {
      Element c = y;
      for (int s = 0; s < std::abs(i); ++s) c = (i > 0 ? phi : phi_inv) * c;
      out.add_term(i + j, multiply(a, x, c));
    }
  }
  return out;
}

/// A x A = span{e_i x e_j} in a unital algebra, without iteration.
inline Subspace principal_ideal(const Algebra& a, const Element& x) {
  std::vector<Element> gens;
  for (Index i = 0; i < a.dim(); ++i) {
    for (Index j = 0; j < a.dim(); ++j) {
      gens.push_back(multiply(a, multiply(a, a.basis_element(i), x), a.basis_element(j)));
    }
  }
  return span(gens, a.dim());
}

/// All e with coordinates in `grid` and e^2 = e.
inline std::vector<Element> grid_idempotents(const Algebra& a, const std::vector<Rat>& grid) {
  std::vector<Element> out;
  const Index n = a.dim();
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    Element e(n);
    for (Index i = 0; i < n; ++i) e(i) = grid[idx[static_cast<std::size_t>(i)]];
    if (multiply(a, e, e) == e) out.push_back(e);
    Index k = 0;
    while (k < n && ++idx[static_cast<std::size_t>(k)] == grid.size()) idx[static_cast<std::size_t>(k++)] = 0;
    if (k == n) break;
  }
  return out;
}

/// Matrix product read back through the row-major matrix-unit basis.
inline Element matrix_product(int n, const Element& x, const Element& y) {
  return from_matrix(Mat(to_matrix(x, n) * to_matrix(y, n)));
}

inline bool same_set(std::vector<Element> a, std::vector<Element> b) {
  if (a.size() != b.size()) return false;
  for (const Element& x : a) {
    auto it = std::find(b.begin(), b.end(), x);
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

inline Vec vec(std::initializer_list<Rat> xs) {
  Vec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const Rat& x : xs) v(i++) = x;
  return v;
}

inline Mat mat(std::initializer_list<std::initializer_list<Rat>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  Mat m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (const Rat& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

/// (e_i e_j) e_k = e_i (e_j e_k) on all basis triples, by sparse sums over
/// the structure constants.
inline bool associative(const StructureTensor& t) {
  const Index n = t.dim();
  std::vector<std::vector<std::pair<Index, Rat>>> nz(static_cast<std::size_t>(n * n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        if (t(i, j, k) != 0) nz[static_cast<std::size_t>(i * n + j)].emplace_back(k, t(i, j, k));
      }
    }
  }
  Vec lhs(n);
  Vec rhs(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        lhs.setZero();
        rhs.setZero();
        for (const auto& [l, c] : nz[static_cast<std::size_t>(i * n + j)]) {
          for (const auto& [m, d] : nz[static_cast<std::size_t>(l * n + k)]) lhs(m) += c * d;
        }
        for (const auto& [l, c] : nz[static_cast<std::size_t>(j * n + k)]) {
          for (const auto& [m, d] : nz[static_cast<std::size_t>(i * n + l)]) rhs(m) += c * d;
        }
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

/// First violated postcondition of an extension of `a` making `m` inner
/// (ad_u when `laurent` is false, Ad_u otherwise), or an empty string.
/// Every check is recomputed from the structure constants of B.
inline std::string extension_violation(const Algebra& a, const ExtensionResult& r, const Mat& m, bool laurent) {
  const Algebra& b = r.algebra;
  const Index n = a.dim();
  if (r.embed.rows() != b.dim() || r.embed.cols() != n) return "embedding has the wrong shape";
  if (bareiss_rank(r.embed) != n) return "embedding not injective";
  if (r.embed * a.unit() != b.unit()) return "embedding not unital";
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Element lhs = r.embed * multiply(a, a.basis_element(i), a.basis_element(j));
      if (lhs != multiply(b, r.embed.col(i), r.embed.col(j))) return "embedding not multiplicative";
    }
  }
  if (!associative(b.tensor())) return "B not associative";
  Element pu = b.zero();
  Element upow = b.unit();
  for (int i = 0; i <= r.p.degree(); ++i) {
    pu += r.p.coeff(i) * upow;
    upow = multiply(b, upow, r.u);
  }
  if (pu != b.zero()) return "p(u) != 0";
  std::optional<Element> uinv;
  if (laurent) {
    if (!r.u_inverse) return "no inverse of u";
    uinv = *r.u_inverse;
    if (multiply(b, r.u, *uinv) != b.unit() || multiply(b, *uinv, r.u) != b.unit()) return "u u^-1 != 1";
  }
  for (Index i = 0; i < n; ++i) {
    const Element x = r.embed.col(i);
    const Element image = r.embed * (m * a.basis_element(i));
    const Element inner = laurent ? Element(multiply(b, multiply(b, r.u, x), *uinv))
                                  : Element(multiply(b, r.u, x) - multiply(b, x, r.u));
    if (inner != image) return laurent ? "Ad_u o iota != iota o phi" : "ad_u o iota != iota o D";
  }
  // B = sum_i iota(A) u^i
  std::vector<Element> gens;
  upow = b.unit();
  for (int i = 0; i < std::max(1, r.p.degree()); ++i) {
    for (Index k = 0; k < n; ++k) gens.push_back(multiply(b, Element(r.embed.col(k)), upow));
    upow = multiply(b, upow, r.u);
  }
  if (!span(gens, b.dim()).is_full()) return "B not generated by iota(A) and powers of u";
  return {};
}

}  // namespace oracle

#endif  // SKEWEX_TESTS_ORACLES_HPP
