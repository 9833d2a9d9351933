#include "skewex/ore.hpp"

#include "skewex/error.hpp"

namespace skewex {

SkewPoly::SkewPoly(Index dim, std::vector<Element> coeffs) : m_dim(dim), m_coeffs(std::move(coeffs)) {
  for (const Element& c : m_coeffs) {
    if (c.size() != m_dim) throw Error(ErrorKind::DimensionMismatch, "skew polynomial coefficient has the wrong length");
  }
  trim();
}

SkewPoly SkewPoly::term(const Element& a, int k) {
  std::vector<Element> c(static_cast<std::size_t>(k + 1), zeros(a.size()));
  c.back() = a;
  return SkewPoly(a.size(), std::move(c));
}

void SkewPoly::trim() {
  while (!m_coeffs.empty() && skewex::is_zero(m_coeffs.back())) m_coeffs.pop_back();
}

Element SkewPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return zeros(m_dim);
  return m_coeffs[static_cast<std::size_t>(i)];
}

SkewPoly operator+(const SkewPoly& f, const SkewPoly& g) {
  std::vector<Element> c;
  for (int i = 0; i <= std::max(f.degree(), g.degree()); ++i) c.push_back(f.coeff(i) + g.coeff(i));
  return SkewPoly(f.m_dim, std::move(c));
}

SkewPoly operator-(const SkewPoly& f, const SkewPoly& g) { return f + Rat(-1) * g; }

SkewPoly operator*(const Rat& s, const SkewPoly& f) {
  std::vector<Element> c = f.m_coeffs;
  for (Element& x : c) x *= s;
  return SkewPoly(f.m_dim, std::move(c));
}

SkewPoly left_scale(const Algebra& a, const Element& x, const SkewPoly& f) {
  const Mat lx = left_regular(a, x);
  std::vector<Element> c;
  for (const Element& y : f.coeffs()) c.push_back(lx * y);
  return SkewPoly(a.dim(), std::move(c));
}

SkewPoly x_times(const SkewPoly& g, const Derivation& d) {
  // X (b X^j) = b X^{j+1} + D(b) X^j
  std::vector<Element> c(static_cast<std::size_t>(g.degree() + 2), zeros(g.algebra_dim()));
  for (int j = 0; j <= g.degree(); ++j) {
    c[static_cast<std::size_t>(j + 1)] += g.coeff(j);
    c[static_cast<std::size_t>(j)] += d(g.coeff(j));
  }
  return SkewPoly(g.algebra_dim(), std::move(c));
}

SkewPoly skew_mul(const Algebra& a, const SkewPoly& f, const SkewPoly& g, const Derivation& d) {
  SkewPoly acc(a.dim());
  SkewPoly xg = g;
  for (int i = 0; i <= f.degree(); ++i) {
    if (i > 0) xg = x_times(xg, d);
    if (!is_zero(f.coeff(i))) acc = acc + left_scale(a, f.coeff(i), xg);
  }
  return acc;
}

Rat binomial(int n, int k) {
  if (k < 0 || k > n) return Rat(0);
  Rat r = 1;
  for (int i = 1; i <= k; ++i) r = r * Rat(n - k + i) / Rat(i);
  return r;
}

CommutatorPower commutator_power(const Algebra& a, int n, const Element& x, const Derivation& d) {
  const SkewPoly xn = SkewPoly::term(a.unit(), n);
  const SkewPoly ax = SkewPoly::constant(x);
  CommutatorPower out{skew_mul(a, xn, ax, d) - skew_mul(a, ax, xn, d), SkewPoly(a.dim())};
  Element dix = x;
  for (int i = 1; i <= n; ++i) {
    dix = d(dix);
    out.formula = out.formula + binomial(n, i) * SkewPoly::term(dix, n - i);
  }
  return out;
}

namespace {

// a X^i in right form, from a X = X a - D(a) applied recursively.
void push_right(const Element& x, int i, const Derivation& d, const Rat& sign, std::vector<Element>& out) {
  if (is_zero(x)) return;
  if (i == 0) {
    out[0] += sign * x;
    return;
  }
  // a X^i = X (a X^{i-1}) - D(a) X^{i-1}
  std::vector<Element> shifted(out.size(), zeros(x.size()));
  push_right(x, i - 1, d, sign, shifted);
  for (std::size_t j = 0; j + 1 < out.size(); ++j) out[j + 1] += shifted[j];
  push_right(d(x), i - 1, d, -sign, out);
}

}  // namespace

std::vector<Element> to_right_form(const SkewPoly& f, const Derivation& d) {
  std::vector<Element> out(static_cast<std::size_t>(std::max(f.degree(), 0) + 1), zeros(f.algebra_dim()));
  for (int i = 0; i <= f.degree(); ++i) push_right(f.coeff(i), i, d, Rat(1), out);
  return out;
}

SkewPoly from_right_form(const Algebra& a, const std::vector<Element>& right, const Derivation& d) {
  SkewPoly acc(a.dim());
  for (std::size_t j = 0; j < right.size(); ++j) {
    acc = acc + skew_mul(a, SkewPoly::term(a.unit(), static_cast<int>(j)), SkewPoly::constant(right[j]), d);
  }
  return acc;
}

ConstantTerms constant_terms(const Algebra& a, const SkewPoly& f, const Derivation& d) {
  const auto right = to_right_form(f, d);
  if (!(from_right_form(a, right, d) == f)) {
    throw Error(ErrorKind::InternalConsistency, "left -> right -> left conversion is not the identity");
  }
  return {f.coeff(0), right[0]};
}

Element apply_poly(const Poly& q, const Mat& m, const Element& x) {
  Element acc = zeros(x.size());
  for (int i = q.degree(); i >= 0; --i) acc = m * acc + q.coeff(i) * x;
  return acc;
}

namespace {

SkewPoly scalar_skew(const Algebra& a, const Poly& q) {
  std::vector<Element> c;
  for (int i = 0; i <= q.degree(); ++i) c.push_back(q.coeff(i) * a.unit());
  return SkewPoly(a.dim(), std::move(c));
}

}  // namespace

ConstantTermIdentity constant_term_identity(const Algebra& a, const Poly& q, const Element& b, const Derivation& d) {
  const SkewPoly qb = skew_mul(a, scalar_skew(a, q), SkewPoly::constant(b), d);
  return {qb.coeff(0), apply_poly(q, d.matrix(), b)};
}

Subspace left_image_span(const Algebra& a, const Mat& m) {
  std::vector<Element> gens;
  const Subspace im = image(m);
  for (const Element& y : im.basis_vectors()) {
    for (Index i = 0; i < a.dim(); ++i) gens.push_back(a.left_basis(i) * y);
  }
  return span(gens, a.dim());
}

Subspace right_image_span(const Algebra& a, const Mat& m) {
  std::vector<Element> gens;
  const Subspace im = image(m);
  for (const Element& y : im.basis_vectors()) {
    for (Index i = 0; i < a.dim(); ++i) gens.push_back(a.right_basis(i) * y);
  }
  return span(gens, a.dim());
}

ConstantTermMembership constant_term_membership(const Algebra& a, const Poly& q, int m, const Element& b, int k,
                                                const Derivation& d) {
  const SkewPoly xm = SkewPoly::term(a.unit(), m);
  const SkewPoly bxk = SkewPoly::term(b, k);
  const SkewPoly h = skew_mul(a, skew_mul(a, xm, scalar_skew(a, q), d), bxk, d);
  ConstantTermMembership out;
  out.constant_term = h.coeff(0);
  if (k >= 1) {
    out.closed_form = a.zero();
  } else {
    Element dmb = b;
    for (int i = 0; i < m; ++i) dmb = d(dmb);
    out.closed_form = apply_poly(q, d.matrix(), dmb);
  }
  out.member = left_image_span(a, evaluate(q, d.matrix())).contains(out.constant_term);
  return out;
}

ExtensionResult ore_quotient(const Algebra& a, const Derivation& d, std::optional<Poly> p, ExtensionOptions options) {
  if (!p) p = minimal_polynomial(d.matrix());
  if (!p->is_monic() || p->degree() < 1) throw Error(ErrorKind::NotMonic, "p must be monic of degree >= 1");
  if (!options.skip_annihilator_check) {
    const Mat pd = evaluate(*p, d.matrix());
    for (Index j = 0; j < pd.cols(); ++j) {
      if (!is_zero(Vec(pd.col(j)))) {
        throw Error(ErrorKind::AnnihilatorFails, "p(D) != 0 on basis vector e" + std::to_string(j), {static_cast<long>(j)});
      }
    }
  }
  const detail::TermProduct product = [&](const Element& x, int s, const Element& y, int t) {
    const SkewPoly prod = skew_mul(a, SkewPoly::term(x, s), SkewPoly::term(y, t), d);
    std::vector<Vec> out(prod.coeffs().begin(), prod.coeffs().end());
    return out;
  };
  ExtensionResult r = detail::quotient_extension(a, *p, product, false);

  // D = ad_u on iota(A).
  for (Index i = 0; i < a.dim(); ++i) {
    const Element x = r.embed.col(i);
    const Element adu = multiply(r.algebra, r.u, x) - multiply(r.algebra, x, r.u);
    if (adu != r.embed * d(a.basis_element(i))) {
      throw Error(ErrorKind::InternalConsistency, "ad_u(iota(e" + std::to_string(i) + ")) != iota(D e" + std::to_string(i) + ")",
                  {static_cast<long>(i)});
    }
  }
  return r;
}

SimpleImage simple_image_check(const Algebra& a, const Derivation& d) {
  SimpleImage out;
  out.left_full = left_image_span(a, d.matrix()).is_full();
  out.right_full = right_image_span(a, d.matrix()).is_full();
  out.simplicity = is_simple(a);
  out.derivation_nonzero = !is_zero(d.matrix());
  return out;
}

}  // namespace skewex
