#include "skewex/maps.hpp"

#include "skewex/error.hpp"

#include <string>

namespace skewex {

namespace {

std::string pair_text(Index i, Index j) { return "(e" + std::to_string(i) + ", e" + std::to_string(j) + ")"; }

Check fail(Index i, Index j, const std::string& what) {
  return {false, {static_cast<long>(i), static_cast<long>(j)}, what + " fails on " + pair_text(i, j)};
}

}  // namespace

Mat matrix_power(const Mat& m, int k) {
  Mat r = identity(m.rows());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

Check is_derivation(const Algebra& a, const Mat& m) {
  const Index n = a.dim();
  if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::DimensionMismatch, "map size differs from algebra dimension");
  for (Index i = 0; i < n; ++i) {
    const Mat dl = left_regular(a, m.col(i));
    for (Index j = 0; j < n; ++j) {
      const Vec lhs = m * a.tensor().product(i, j);
      const Vec rhs = dl.col(j) + a.left_basis(i) * m.col(j);
      if (lhs != rhs) return fail(i, j, "Leibniz rule");
    }
  }
  return {};
}

Check is_endomorphism(const Algebra& a, const Mat& m, bool require_unital) {
  const Index n = a.dim();
  if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::DimensionMismatch, "map size differs from algebra dimension");
  for (Index i = 0; i < n; ++i) {
    const Mat li = left_regular(a, m.col(i));
    for (Index j = 0; j < n; ++j) {
      if (m * a.tensor().product(i, j) != li * m.col(j)) return fail(i, j, "multiplicativity");
    }
  }
  if (require_unital && m * a.unit() != a.unit()) return {false, {-1}, "unit is not preserved"};
  return {};
}

Check is_automorphism(const Algebra& a, const Mat& m, bool require_unital) {
  Check c = is_endomorphism(a, m, require_unital);
  if (!c) return c;
  if (rank(m) < a.dim()) return {false, {}, "map is not invertible"};
  return {};
}

Check is_ederivation(const Algebra& a, const Mat& m) {
  const Index n = a.dim();
  if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::DimensionMismatch, "map size differs from algebra dimension");
  for (Index i = 0; i < n; ++i) {
    const Mat dl = left_regular(a, m.col(i));
    for (Index j = 0; j < n; ++j) {
      const Vec lhs = m * a.tensor().product(i, j);
      const Vec rhs = dl.col(j) + a.left_basis(i) * m.col(j) - dl * m.col(j);
      if (lhs != rhs) return fail(i, j, "E-derivation identity");
    }
  }
  return {};
}

Derivation Derivation::certify(const Algebra& a, Mat m) {
  const Check c = is_derivation(a, m);
  if (!c) throw Error(ErrorKind::ValidationError, "not a derivation: " + c.detail, c.witness);
  return Derivation(std::move(m));
}

AlgebraEndo AlgebraEndo::certify(const Algebra& a, Mat m, bool require_unital) {
  const Check c = is_endomorphism(a, m, require_unital);
  if (!c) throw Error(ErrorKind::ValidationError, "not an endomorphism: " + c.detail, c.witness);
  const bool inv = rank(m) == a.dim();
  return AlgebraEndo(std::move(m), require_unital, inv);
}

EDerivation EDerivation::certify(const Algebra& a, Mat m, bool require_unital) {
  const Check c = is_ederivation(a, m);
  if (!c) throw Error(ErrorKind::ValidationError, "not an E-derivation: " + c.detail, c.witness);
  // The identity is equivalent to I - delta being multiplicative; both
  // checks run so a disagreement surfaces immediately.
  Mat phi = identity(a.dim()) - m;
  const Check e = is_endomorphism(a, phi, false);
  if (!e) throw Error(ErrorKind::InternalConsistency, "E-derivation identity holds but I - delta is not multiplicative");
  return EDerivation(std::move(m), AlgebraEndo::certify(a, std::move(phi), require_unital));
}

EDerivation EDerivation::from_endomorphism(const AlgebraEndo& phi) {
  return EDerivation(identity(phi.matrix().rows()) - phi.matrix(), phi);
}

Derivation ad(const Algebra& a, const Element& u) {
  return Derivation::certify(a, left_regular(a, u) - right_regular(a, u));
}

AlgebraEndo Ad(const Algebra& a, const Element& u) {
  const auto uinv = inverse(a, u);
  if (!uinv) throw Error(ErrorKind::NotInvertible, "Ad needs an invertible element");
  return AlgebraEndo::certify(a, left_regular(a, u) * right_regular(a, *uinv));
}

LocalFiniteness local_finiteness_report(const Mat& eta) {
  LocalFiniteness r;
  r.min_poly = minimal_polynomial(eta);
  const int d = r.min_poly.degree();
  r.locally_nilpotent = r.min_poly == Poly::monomial(d);
  if (r.locally_nilpotent) r.nilpotency_index = d;
  return r;
}

KernelChain ker_chain(const Algebra& a, const AlgebraEndo& phi) {
  const Mat& m = phi.matrix();
  Mat pk = m;
  Subspace prev = kernel(pk);
  int k = 1;
  while (true) {
    pk = pk * m;
    Subspace next = kernel(pk);
    if (next == prev) break;
    prev = std::move(next);
    ++k;
    if (k > a.dim() + 1) throw Error(ErrorKind::InternalConsistency, "kernel chain failed to stabilize");
  }
  if (!is_two_sided_ideal(a, prev)) throw Error(ErrorKind::InternalConsistency, "Ker_{>=1} phi is not an ideal");
  return {std::move(prev), k};
}

InducedMap induced_map(const Algebra& a, const AlgebraEndo& phi) {
  const KernelChain kc = ker_chain(a, phi);
  InducedMap out;
  if (kc.ker_ge1.is_full()) {
    // Only possible for non-unital phi; the quotient is the zero algebra.
    out.quotient = make_algebra(StructureTensor(0), Vec(0));
    out.projection = zeros(0, a.dim());
    out.phibar = zeros(0, 0);
    out.injective = out.surjective = true;
    return out;
  }
  Quotient q = quotient(a, kc.ker_ge1);
  out.phibar = q.projection * phi.matrix() * q.section;
  if (out.phibar * q.projection != q.projection * phi.matrix()) {
    throw Error(ErrorKind::InternalConsistency, "induced map does not commute with the projection");
  }
  const Index r = rank(out.phibar);
  out.injective = r == q.algebra.dim();
  out.surjective = out.injective;
  if (!out.injective) throw Error(ErrorKind::InternalConsistency, "induced map is not injective");
  out.quotient = std::move(q.algebra);
  out.projection = std::move(q.projection);
  return out;
}

Element chain_preimage(const Algebra& a, const AlgebraEndo& phi, const Element& x) {
  const Mat& m = phi.matrix();
  Element term = x;
  Element b = a.zero();
  for (int k = 0; k <= a.dim(); ++k) {
    if (is_zero(term)) {
      if (b - m * b != x) throw Error(ErrorKind::InternalConsistency, "(I - phi) b != a");
      return b;
    }
    b += term;
    term = m * term;
  }
  throw Error(ErrorKind::NotInKernelChain, "no power of phi kills the element");
}

std::optional<int> automorphism_order(const AlgebraEndo& phi, int bound) {
  const Mat id = identity(phi.matrix().rows());
  Mat p = phi.matrix();
  for (int m = 1; m <= bound; ++m) {
    if (p == id) return m;
    p = p * phi.matrix();
  }
  return std::nullopt;
}

AlgebraEndo exp_derivation(const Algebra& a, const Derivation& d) {
  const LocalFiniteness lf = local_finiteness_report(d.matrix());
  if (!lf.locally_nilpotent) throw Error(ErrorKind::NotLocallyNilpotent, "exp needs a nilpotent derivation");
  const Index n = a.dim();
  auto series = [&](const Mat& m) {
    Mat sum = identity(n);
    Mat term = identity(n);
    for (int i = 1; i < *lf.nilpotency_index; ++i) {
      term = term * m / Rat(i);
      sum += term;
    }
    return sum;
  };
  const Mat e = series(d.matrix());
  const Mat einv = series(-d.matrix());
  if (e * einv != identity(n)) throw Error(ErrorKind::InternalConsistency, "exp(D) exp(-D) != I");
  AlgebraEndo out = AlgebraEndo::certify(a, e);
  if (!out.invertible()) throw Error(ErrorKind::InternalConsistency, "exp(D) is not invertible");
  return out;
}

std::vector<Derivation> derivation_space(const Algebra& a) {
  const Index n = a.dim();
  // Unknown M(r, s) sits at column r * n + s. Row block (i, j) encodes
  // M(e_i e_j) - M(e_i) e_j - e_i M(e_j) = 0.
  Mat sys = zeros(n * n * n, n * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Index row0 = (i * n + j) * n;
      const Vec cij = a.tensor().product(i, j);
      const Mat& rj = a.right_basis(j);
      const Mat& li = a.left_basis(i);
      for (Index r = 0; r < n; ++r) {
        for (Index s = 0; s < n; ++s) {
          if (cij(s) != 0) sys(row0 + r, r * n + s) += cij(s);
        }
        for (Index k = 0; k < n; ++k) {
          // (R_j M e_i)_r = sum_k R_j(r, k) M(k, i)
          if (rj(r, k) != 0) sys(row0 + r, k * n + i) -= rj(r, k);
          if (li(r, k) != 0) sys(row0 + r, k * n + j) -= li(r, k);
        }
      }
    }
  }
  const Subspace sol = kernel(sys);
  std::vector<Derivation> out;
  for (const Vec& v : sol.basis_vectors()) {
    Mat m(n, n);
    for (Index r = 0; r < n; ++r) {
      for (Index s = 0; s < n; ++s) m(r, s) = v(r * n + s);
    }
    out.push_back(Derivation::certify(a, std::move(m)));
  }
  return out;
}

}  // namespace skewex
