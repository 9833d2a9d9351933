#include "skewex/laurent.hpp"

#include "skewex/error.hpp"

#include <algorithm>

namespace skewex {

LaurentSkewPoly LaurentSkewPoly::term(const Element& a, int k) {
  LaurentSkewPoly f(a.size());
  f.add_term(k, a);
  return f;
}

Element LaurentSkewPoly::coeff(int k) const {
  const auto it = m_terms.find(k);
  return it == m_terms.end() ? zeros(m_dim) : it->second;
}

void LaurentSkewPoly::add_term(int k, const Element& a) {
  if (a.size() != m_dim) throw Error(ErrorKind::DimensionMismatch, "Laurent coefficient has the wrong length");
  auto it = m_terms.find(k);
  if (it == m_terms.end()) {
    if (!skewex::is_zero(a)) m_terms.emplace(k, a);
    return;
  }
  it->second += a;
  if (skewex::is_zero(it->second)) m_terms.erase(it);
}

LaurentSkewPoly operator+(const LaurentSkewPoly& f, const LaurentSkewPoly& g) {
  LaurentSkewPoly out = f;
  for (const auto& [k, c] : g.m_terms) out.add_term(k, c);
  return out;
}

bool operator==(const LaurentSkewPoly& f, const LaurentSkewPoly& g) {
  if (f.m_dim != g.m_dim || f.m_terms.size() != g.m_terms.size()) return false;
  return std::equal(f.m_terms.begin(), f.m_terms.end(), g.m_terms.begin(),
                    [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
}

AutomorphismPowers::AutomorphismPowers(const AlgebraEndo& phi) : m_forward(phi.matrix()) {
  auto inv = inverse(phi.matrix());
  if (!inv) throw Error(ErrorKind::NotAutomorphism, "the Laurent ring needs an invertible phi");
  m_backward = std::move(*inv);
}

const Mat& AutomorphismPowers::operator()(int k) const {
  auto it = m_cache.find(k);
  if (it != m_cache.end()) return it->second;
  Mat p = identity(m_forward.rows());
  const Mat& step = k >= 0 ? m_forward : m_backward;
  for (int i = 0; i < std::abs(k); ++i) p = p * step;
  return m_cache.emplace(k, std::move(p)).first->second;
}

namespace {

LaurentSkewPoly multiply_with(const Algebra& a, const LaurentSkewPoly& f, const LaurentSkewPoly& g,
                              const AutomorphismPowers& powers) {
  // (a X^i)(b X^j) = a phi^i(b) X^{i+j}
  LaurentSkewPoly out(a.dim());
  for (const auto& [i, x] : f.terms()) {
    const Mat lx = left_regular(a, x);
    for (const auto& [j, y] : g.terms()) out.add_term(i + j, lx * (powers(i) * y));
  }
  return out;
}

}  // namespace

LaurentSkewPoly laurent_mul(const Algebra& a, const LaurentSkewPoly& f, const LaurentSkewPoly& g,
                            const AlgebraEndo& phi) {
  return multiply_with(a, f, g, AutomorphismPowers(phi));
}

Element conjugate(const Algebra& a, const Element& x, int k, const AlgebraEndo& phi) {
  const AutomorphismPowers powers(phi);
  const LaurentSkewPoly left = multiply_with(a, LaurentSkewPoly::term(a.unit(), k), LaurentSkewPoly::term(x, 0), powers);
  const LaurentSkewPoly r = multiply_with(a, left, LaurentSkewPoly::term(a.unit(), -k), powers);
  if (r.terms().size() > 1 || (!r.is_zero() && r.terms().begin()->first != 0)) {
    throw Error(ErrorKind::InternalConsistency, "conjugation left the degree-zero part");
  }
  return r.coeff(0);
}

Element eval_at_one(const LaurentSkewPoly& f) {
  Element acc = zeros(f.algebra_dim());
  for (const auto& [k, c] : f.terms()) acc += c;
  return acc;
}

Mat evaluate(const ScalarLaurent& f, const AlgebraEndo& phi) {
  const AutomorphismPowers powers(phi);
  Mat acc = zeros(phi.matrix().rows(), phi.matrix().cols());
  for (const auto& [i, alpha] : f) acc += alpha * powers(i);
  return acc;
}

EvaluationAtOne evaluation_at_one_check(const Algebra& a, const ScalarLaurent& f, const Element& b, const Element& c, int j, int k,
                      const AlgebraEndo& phi) {
  const AutomorphismPowers powers(phi);
  LaurentSkewPoly fx(a.dim());
  for (const auto& [i, alpha] : f) fx.add_term(i, alpha * a.unit());
  LaurentSkewPoly h = multiply_with(a, LaurentSkewPoly::term(b, j), fx, powers);
  h = multiply_with(a, h, LaurentSkewPoly::term(c, k), powers);

  EvaluationAtOne out;
  out.h1 = eval_at_one(h);
  const Mat fphi = evaluate(f, phi);
  out.closed_form = multiply(a, b, fphi * (powers(j) * c));
  std::vector<Element> gens;
  for (const Element& y : image(fphi).basis_vectors()) {
    for (Index i = 0; i < a.dim(); ++i) gens.push_back(a.left_basis(i) * y);
  }
  out.member = span(gens, a.dim()).contains(out.h1);
  return out;
}

ExtensionResult laurent_quotient(const Algebra& a, const AlgebraEndo& phi, std::optional<Poly> p,
                                 ExtensionOptions options) {
  const AutomorphismPowers powers(phi);
  if (!p) p = minimal_polynomial(phi.matrix());
  if (!p->is_monic() || p->degree() < 1) throw Error(ErrorKind::NotMonic, "p must be monic of degree >= 1");
  if (p->coeff(0) == 0) throw Error(ErrorKind::ConstantTermZero, "p(0) must be a unit");
  if (!options.skip_annihilator_check) {
    const Mat pp = evaluate(*p, phi.matrix());
    for (Index j = 0; j < pp.cols(); ++j) {
      if (!is_zero(Vec(pp.col(j)))) {
        throw Error(ErrorKind::AnnihilatorFails, "p(phi) != 0 on basis vector e" + std::to_string(j), {static_cast<long>(j)});
      }
    }
  }
  const detail::TermProduct product = [&](const Element& x, int s, const Element& y, int t) {
    const LaurentSkewPoly prod = multiply_with(a, LaurentSkewPoly::term(x, s), LaurentSkewPoly::term(y, t), powers);
    std::vector<Vec> out;
    for (const auto& [k, c] : prod.terms()) {
      if (k < 0) throw Error(ErrorKind::InternalConsistency, "negative exponent in a product of nonnegative terms");
      if (out.size() <= static_cast<std::size_t>(k)) out.resize(static_cast<std::size_t>(k + 1), Vec());
      out[static_cast<std::size_t>(k)] = c;
    }
    return out;
  };
  ExtensionResult r = detail::quotient_extension(a, *p, product, true);

  // phi = Ad_u on iota(A).
  for (Index i = 0; i < a.dim(); ++i) {
    const Element x = r.embed.col(i);
    const Element conj = multiply(r.algebra, multiply(r.algebra, r.u, x), *r.u_inverse);
    if (conj != r.embed * phi(a.basis_element(i))) {
      throw Error(ErrorKind::InternalConsistency, "Ad_u(iota(e" + std::to_string(i) + ")) != iota(phi e" + std::to_string(i) + ")",
                  {static_cast<long>(i)});
    }
  }
  return r;
}

bool embedding_injective(const ExtensionResult& result) { return kernel(result.embed).is_zero(); }

}  // namespace skewex
