#include "skewex/algebra.hpp"

#include "skewex/error.hpp"

#include <string>

namespace skewex {

Vec StructureTensor::product(Index i, Index j) const {
  Vec v(m_n);
  for (Index k = 0; k < m_n; ++k) v(k) = (*this)(i, j, k);
  return v;
}

void StructureTensor::set_product(Index i, Index j, const Vec& v) {
  for (Index k = 0; k < m_n; ++k) (*this)(i, j, k) = v(k);
}

namespace {

struct SparseVec {
  std::vector<std::pair<Index, Rat>> terms;
};

std::vector<SparseVec> sparse_products(const StructureTensor& sc) {
  const Index n = sc.dim();
  std::vector<SparseVec> out(static_cast<std::size_t>(n * n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      auto& t = out[static_cast<std::size_t>(i * n + j)].terms;
      for (Index k = 0; k < n; ++k) {
        if (sc(i, j, k) != 0) t.emplace_back(k, sc(i, j, k));
      }
    }
  }
  return out;
}

}  // namespace

Algebra make_algebra(StructureTensor sc, Element unit, std::vector<std::string> labels) {
  const Index n = sc.dim();
  if (unit.size() != n) throw Error(ErrorKind::DimensionMismatch, "unit length differs from dimension");
  if (labels.empty()) {
    for (Index i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  }
  if (static_cast<Index>(labels.size()) != n) throw Error(ErrorKind::DimensionMismatch, "label count differs from dimension");

  const auto prods = sparse_products(sc);
  auto prod = [&](Index i, Index j) -> const SparseVec& { return prods[static_cast<std::size_t>(i * n + j)]; };

  // (e_i e_j) e_k - e_i (e_j e_k), accumulated sparsely.
  Vec acc = zeros(n);
  std::vector<Index> touched;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        touched.clear();
        for (const auto& [l, c] : prod(i, j).terms) {
          for (const auto& [m, d] : prod(l, k).terms) {
            acc(m) += c * d;
            touched.push_back(m);
          }
        }
        for (const auto& [l, c] : prod(j, k).terms) {
          for (const auto& [m, d] : prod(i, l).terms) {
            acc(m) -= c * d;
            touched.push_back(m);
          }
        }
        bool ok = true;
        for (Index m : touched) {
          if (acc(m) != 0) ok = false;
          acc(m) = 0;
        }
        if (!ok) {
          throw Error(ErrorKind::NotAssociative,
                      "(e" + std::to_string(i) + " e" + std::to_string(j) + ") e" + std::to_string(k) +
                          " != e" + std::to_string(i) + " (e" + std::to_string(j) + " e" + std::to_string(k) + ")",
                      {static_cast<long>(i), static_cast<long>(j), static_cast<long>(k)});
        }
      }
    }
  }

  Algebra a;
  a.m_left.assign(static_cast<std::size_t>(n), zeros(n, n));
  a.m_right.assign(static_cast<std::size_t>(n), zeros(n, n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (const auto& [k, c] : prod(i, j).terms) {
        a.m_left[static_cast<std::size_t>(i)](k, j) = c;
        a.m_right[static_cast<std::size_t>(j)](k, i) = c;
      }
    }
  }

  Mat lu = zeros(n, n);
  Mat ru = zeros(n, n);
  for (Index i = 0; i < n; ++i) {
    if (unit(i) == 0) continue;
    lu += unit(i) * a.m_left[static_cast<std::size_t>(i)];
    ru += unit(i) * a.m_right[static_cast<std::size_t>(i)];
  }
  for (Index j = 0; j < n; ++j) {
    for (Index k = 0; k < n; ++k) {
      const Rat expect = j == k ? 1 : 0;
      if (lu(k, j) != expect || ru(k, j) != expect) {
        throw Error(ErrorKind::UnitFails, "unit does not fix basis element e" + std::to_string(j), {static_cast<long>(j)});
      }
    }
  }

  a.m_tensor = std::move(sc);
  a.m_unit = std::move(unit);
  a.m_labels = std::move(labels);
  return a;
}

Element multiply(const Algebra& a, const Element& x, const Element& y) { return left_regular(a, x) * y; }

Element power(const Algebra& a, const Element& x, int m) {
  Element r = a.unit();
  for (int i = 0; i < m; ++i) r = multiply(a, x, r);
  return r;
}

Element evaluate(const Algebra& a, const Poly& p, const Element& x) {
  const Mat mx = left_regular(a, x);
  Element acc = a.zero();
  for (int i = p.degree(); i >= 0; --i) acc = mx * acc + p.coeff(i) * a.unit();
  return acc;
}

std::optional<Element> inverse(const Algebra& a, const Element& x) {
  auto y = solve(left_regular(a, x), a.unit());
  if (!y) return std::nullopt;
  if (multiply(a, *y, x) != a.unit()) return std::nullopt;
  return y;
}

bool is_commutative(const Algebra& a) {
  for (Index i = 0; i < a.dim(); ++i) {
    if (a.left_basis(i) != a.right_basis(i)) return false;
  }
  return true;
}

Mat left_regular(const Algebra& a, const Element& x) {
  Mat m = zeros(a.dim(), a.dim());
  for (Index i = 0; i < a.dim(); ++i) {
    if (x(i) != 0) m += x(i) * a.left_basis(i);
  }
  return m;
}

Mat right_regular(const Algebra& a, const Element& x) {
  Mat m = zeros(a.dim(), a.dim());
  for (Index i = 0; i < a.dim(); ++i) {
    if (x(i) != 0) m += x(i) * a.right_basis(i);
  }
  return m;
}

Rat trace_of(const Algebra& a, const Element& x) { return left_regular(a, x).trace(); }

const char* to_string(Side side) {
  switch (side) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::TwoSided: return "two-sided";
  }
  return "?";
}

namespace {

// Smallest subspace containing gens and stable under every operator given.
Subspace close_under(Index n, const std::vector<Element>& gens, const std::vector<const Mat*>& ops) {
  Subspace s = span(gens, n);
  while (true) {
    std::vector<Element> more = s.basis_vectors();
    const auto base = more.size();
    for (std::size_t r = 0; r < base; ++r) {
      for (const Mat* op : ops) more.push_back(*op * more[r]);
    }
    Subspace next = span(more, n);
    if (next.dim() == s.dim()) return s;
    s = std::move(next);
  }
}

}  // namespace

Subspace left_ideal(const Algebra& a, const std::vector<Element>& gens) { return ideal(a, gens, Side::Left); }
Subspace right_ideal(const Algebra& a, const std::vector<Element>& gens) { return ideal(a, gens, Side::Right); }
Subspace two_sided_ideal(const Algebra& a, const std::vector<Element>& gens) { return ideal(a, gens, Side::TwoSided); }

Subspace ideal(const Algebra& a, const std::vector<Element>& gens, Side side) {
  std::vector<const Mat*> ops;
  for (Index i = 0; i < a.dim(); ++i) {
    if (side != Side::Right) ops.push_back(&a.left_basis(i));
    if (side != Side::Left) ops.push_back(&a.right_basis(i));
  }
  return close_under(a.dim(), gens, ops);
}

bool is_two_sided_ideal(const Algebra& a, const Subspace& s) {
  for (const Element& v : s.basis_vectors()) {
    for (Index i = 0; i < a.dim(); ++i) {
      if (!s.contains(a.left_basis(i) * v) || !s.contains(a.right_basis(i) * v)) return false;
    }
  }
  return true;
}

Subspace product_space(const Algebra& a, const Subspace& s, const Subspace& t) {
  std::vector<Element> gens;
  for (const Element& x : s.basis_vectors()) {
    const Mat lx = left_regular(a, x);
    for (const Element& y : t.basis_vectors()) gens.push_back(lx * y);
  }
  return span(gens, a.dim());
}

Subspace subalgebra_generated(const Algebra& a, const std::vector<Element>& gens) {
  std::vector<Element> start = gens;
  start.push_back(a.unit());
  Subspace s = span(start, a.dim());
  while (true) {
    Subspace next = s.sum(product_space(a, s, s));
    if (next.dim() == s.dim()) return s;
    s = std::move(next);
  }
}

Quotient quotient(const Algebra& a, const Subspace& ideal_space) {
  const Index n = a.dim();
  if (ideal_space.ambient_dim() != n) throw Error(ErrorKind::DimensionMismatch, "ideal lives in a different space");
  if (ideal_space.is_full()) throw Error(ErrorKind::ImproperIdeal, "quotient by the whole algebra");
  if (!is_two_sided_ideal(a, ideal_space)) throw Error(ErrorKind::NotAnIdeal, "subspace is not a two-sided ideal");

  const auto comp = ideal_space.complement_coords();
  const Index m = static_cast<Index>(comp.size());
  Mat pi = quotient_projection(ideal_space);
  Mat sec = zeros(n, m);
  for (Index c = 0; c < m; ++c) sec(comp[static_cast<std::size_t>(c)], c) = 1;

  StructureTensor sc(m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      sc.set_product(i, j, pi * a.tensor().product(comp[static_cast<std::size_t>(i)], comp[static_cast<std::size_t>(j)]));
    }
  }
  std::vector<std::string> labels;
  for (Index c : comp) labels.push_back(a.labels()[static_cast<std::size_t>(c)] + "+I");
  return {make_algebra(std::move(sc), pi * a.unit(), std::move(labels)), std::move(pi), std::move(sec)};
}

Subalgebra restrict_to(const Algebra& a, const Subspace& s) {
  const Index m = s.dim();
  Mat inc = s.basis().transpose();
  StructureTensor sc(m);
  for (Index i = 0; i < m; ++i) {
    const Mat li = left_regular(a, inc.col(i));
    for (Index j = 0; j < m; ++j) {
      auto coords = solve(inc, Vec(li * inc.col(j)));
      if (!coords) throw Error(ErrorKind::InvalidParameter, "subspace is not closed under multiplication");
      sc.set_product(i, j, *coords);
    }
  }
  auto u = solve(inc, a.unit());
  if (!u) throw Error(ErrorKind::InvalidParameter, "subspace does not contain the unit");
  return {make_algebra(std::move(sc), *u), std::move(inc)};
}

Subspace radical(const Algebra& a) {
  const Index n = a.dim();
  Mat form(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      form(i, j) = (a.left_basis(i) * a.left_basis(j)).trace();
      form(j, i) = form(i, j);
    }
  }
  return kernel(form);
}

std::optional<int> nilpotency_index(const Algebra& a, const Subspace& ideal_space) {
  Subspace p = ideal_space;
  for (int k = 1; k <= a.dim() + 1; ++k) {
    if (p.is_zero()) return k;
    p = product_space(a, p, ideal_space);
  }
  return std::nullopt;
}

Subspace center(const Algebra& a) {
  const Index n = a.dim();
  // x is central iff (L_i - R_i) x = 0 for every basis index i.
  Mat stacked(n * n, n);
  for (Index i = 0; i < n; ++i) stacked.middleRows(i * n, n) = a.left_basis(i) - a.right_basis(i);
  return kernel(stacked);
}

const char* to_string(Simplicity::Status s) {
  switch (s) {
    case Simplicity::Status::Simple: return "Simple";
    case Simplicity::Status::NotSimple: return "NotSimple";
    case Simplicity::Status::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Algebra base_field() {
  StructureTensor sc(1);
  sc(0, 0, 0) = 1;
  return make_algebra(std::move(sc), unit_vector(1, 0), {"1"});
}

Element matrix_unit(int n, int i, int j) { return unit_vector(n * n, i * n + j); }

Element from_matrix(const Mat& m) {
  const Index n = m.rows();
  Element v(n * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) v(i * n + j) = m(i, j);
  }
  return v;
}

Mat to_matrix(const Element& x, int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = x(i * n + j);
  }
  return m;
}

Algebra matrix_algebra(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "matrix_algebra needs n >= 1");
  const Index d = static_cast<Index>(n) * n;
  StructureTensor sc(d);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      for (int l = 0; l < n; ++l) sc(i * n + j, j * n + l, i * n + l) = 1;
    }
  }
  return make_algebra(std::move(sc), from_matrix(identity(n)), std::move(labels));
}

Algebra poly_quotient(const Poly& f) {
  if (!f.is_monic() || f.degree() < 1) throw Error(ErrorKind::InvalidParameter, "poly_quotient needs a monic polynomial of degree >= 1");
  const int d = f.degree();
  // Reductions of t^m mod f for m < 2d - 1.
  std::vector<Vec> powers;
  for (int m = 0; m <= 2 * d - 2; ++m) {
    const Poly r = divmod(Poly::monomial(m), f).second;
    Vec v = zeros(d);
    for (int i = 0; i < d; ++i) v(i) = r.coeff(i);
    powers.push_back(std::move(v));
  }
  StructureTensor sc(d);
  std::vector<std::string> labels;
  for (int i = 0; i < d; ++i) {
    labels.push_back(i == 0 ? "1" : (i == 1 ? "t" : "t^" + std::to_string(i)));
    for (int j = 0; j < d; ++j) sc.set_product(i, j, powers[static_cast<std::size_t>(i + j)]);
  }
  return make_algebra(std::move(sc), unit_vector(d, 0), std::move(labels));
}

Algebra cyclic_group_algebra(int m) {
  if (m < 1) throw Error(ErrorKind::InvalidParameter, "cyclic_group_algebra needs m >= 1");
  StructureTensor sc(m);
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) {
    labels.push_back("g^" + std::to_string(i));
    for (int j = 0; j < m; ++j) sc(i, j, (i + j) % m) = 1;
  }
  return make_algebra(std::move(sc), unit_vector(m, 0), std::move(labels));
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
  const Index na = a.dim();
  const Index n = na + b.dim();
  StructureTensor sc(n);
  for (Index i = 0; i < na; ++i) {
    for (Index j = 0; j < na; ++j) {
      for (Index k = 0; k < na; ++k) sc(i, j, k) = a.tensor()(i, j, k);
    }
  }
  for (Index i = 0; i < b.dim(); ++i) {
    for (Index j = 0; j < b.dim(); ++j) {
      for (Index k = 0; k < b.dim(); ++k) sc(na + i, na + j, na + k) = b.tensor()(i, j, k);
    }
  }
  Vec unit(n);
  unit << a.unit(), b.unit();
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("(" + l + ",0)");
  for (const auto& l : b.labels()) labels.push_back("(0," + l + ")");
  return make_algebra(std::move(sc), std::move(unit), std::move(labels));
}

Algebra upper_triangular(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "upper_triangular needs n >= 1");
  std::vector<std::pair<int, int>> units;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) units.emplace_back(i, j);
  }
  const Index d = static_cast<Index>(units.size());
  auto index_of = [&](int i, int j) {
    for (Index k = 0; k < d; ++k) {
      if (units[static_cast<std::size_t>(k)] == std::make_pair(i, j)) return k;
    }
    return Index(-1);
  };
  StructureTensor sc(d);
  Vec unit = zeros(d);
  std::vector<std::string> labels;
  for (Index a = 0; a < d; ++a) {
    const auto [i, j] = units[static_cast<std::size_t>(a)];
    labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    if (i == j) unit(a) = 1;
    for (Index b = 0; b < d; ++b) {
      const auto [k, l] = units[static_cast<std::size_t>(b)];
      if (j == k) sc(a, b, index_of(i, l)) = 1;
    }
  }
  return make_algebra(std::move(sc), std::move(unit), std::move(labels));
}

Algebra change_basis(const Algebra& a, const Mat& p) {
  const auto pinv = inverse(p);
  if (!pinv) throw Error(ErrorKind::InvalidParameter, "change_basis needs an invertible matrix");
  const Index n = a.dim();
  StructureTensor sc(n);
  for (Index i = 0; i < n; ++i) {
    const Mat li = left_regular(a, p.col(i));
    for (Index j = 0; j < n; ++j) sc.set_product(i, j, *pinv * (li * p.col(j)));
  }
  return make_algebra(std::move(sc), *pinv * a.unit());
}

}  // namespace skewex
