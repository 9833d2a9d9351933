#include "skewex/extension.hpp"

#include "skewex/error.hpp"

#include <map>
#include <string>

namespace skewex::detail {

namespace {

// Residues of t^m modulo p, cached by exponent.
class PowerReducer {
 public:
  explicit PowerReducer(const Poly& p) : m_p(p) {}

  const Poly& operator()(int m) {
    auto it = m_cache.find(m);
    if (it == m_cache.end()) it = m_cache.emplace(m, divmod(Poly::monomial(m), m_p).second).first;
    return it->second;
  }

 private:
  Poly m_p;
  std::map<int, Poly> m_cache;
};

}  // namespace

ExtensionResult quotient_extension(const Algebra& a, const Poly& p, const TermProduct& product, bool invertible_u) {
  const Index n = a.dim();
  const int d = p.degree();
  const Index big = n * d;
  PowerReducer residue(p);

  // Coordinates of the free module: index s * n + i is e_i X^s.
  auto reduce = [&](const std::vector<Vec>& coeffs) {
    Vec out = zeros(big);
    for (int m = 0; m < static_cast<int>(coeffs.size()); ++m) {
      const Vec& c = coeffs[static_cast<std::size_t>(m)];
      if (c.size() == 0 || is_zero(c)) continue;
      const Poly& r = residue(m);
      for (int s = 0; s < d; ++s) {
        if (r.coeff(s) != 0) out.segment(s * n, n) += r.coeff(s) * c;
      }
    }
    return out;
  };
  auto slice_element = [&](Index idx, int& s) {
    s = static_cast<int>(idx / n);
    return a.basis_element(idx % n);
  };

  StructureTensor free_sc(big);
  for (Index x = 0; x < big; ++x) {
    int s = 0;
    const Element ex = slice_element(x, s);
    for (Index y = 0; y < big; ++y) {
      int t = 0;
      const Element ey = slice_element(y, t);
      free_sc.set_product(x, y, reduce(product(ex, s, ey, t)));
    }
  }

  // Left actions of A and X, right action of X. The right action of A is
  // not defined on the free module; the closure below only uses these.
  std::vector<Mat> ops;
  for (Index i = 0; i < n; ++i) {
    Mat li(big, big);
    for (Index y = 0; y < big; ++y) li.col(y) = free_sc.product(i, y);
    ops.push_back(std::move(li));
  }
  Mat left_x(big, big);
  Mat right_x(big, big);
  for (Index y = 0; y < big; ++y) {
    int t = 0;
    const Element ey = slice_element(y, t);
    left_x.col(y) = reduce(product(a.unit(), 1, ey, t));
    std::vector<Vec> shifted(static_cast<std::size_t>(t + 2), Vec());
    shifted[static_cast<std::size_t>(t + 1)] = ey;
    right_x.col(y) = reduce(shifted);
  }
  ops.push_back(std::move(left_x));
  ops.push_back(std::move(right_x));

  std::vector<Vec> gens;
  for (Index j = 0; j < n; ++j) {
    Vec g = zeros(big);
    for (int s = 0; s <= d; ++s) {
      if (p.coeff(s) != 0) g += p.coeff(s) * reduce(product(a.unit(), s, a.basis_element(j), 0));
    }
    gens.push_back(std::move(g));
  }
  Subspace collapsed = span(gens, big);
  while (true) {
    std::vector<Vec> more = collapsed.basis_vectors();
    const auto base = more.size();
    for (std::size_t r = 0; r < base; ++r) {
      for (const Mat& op : ops) more.push_back(op * more[r]);
    }
    Subspace next = span(more, big);
    if (next.dim() == collapsed.dim()) break;
    collapsed = std::move(next);
  }
  if (collapsed.is_full()) {
    throw Error(ErrorKind::EmbeddingFails, "the ideal generated by p(X) is everything; A does not embed");
  }

  const Mat pi = quotient_projection(collapsed);
  const auto comp = collapsed.complement_coords();
  const Index m = static_cast<Index>(comp.size());
  StructureTensor sc(m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      sc.set_product(i, j, pi * free_sc.product(comp[static_cast<std::size_t>(i)], comp[static_cast<std::size_t>(j)]));
    }
  }
  std::vector<std::string> labels;
  for (Index c : comp) {
    const int s = static_cast<int>(c / n);
    std::string l = a.labels()[static_cast<std::size_t>(c % n)];
    if (s >= 1) l += s == 1 ? "*X" : "*X^" + std::to_string(s);
    labels.push_back(std::move(l));
  }
  Vec unit_free = zeros(big);
  unit_free.head(n) = a.unit();

  ExtensionResult out;
  try {
    out.algebra = make_algebra(std::move(sc), pi * unit_free, std::move(labels));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotAssociative) {
      throw Error(ErrorKind::AssociativityFails, "extension is not associative: " + e.message(), e.witness());
    }
    throw;
  }
  const Algebra& b = out.algebra;
  out.p = p;
  out.free_rank = big;
  out.collapsed_dim = collapsed.dim();
  out.embed = pi.leftCols(n);
  std::vector<Vec> x_coeffs(2, Vec());
  x_coeffs[1] = a.unit();
  out.u = pi * reduce(x_coeffs);

  const Mat& iota = out.embed;
  if (iota * a.unit() != b.unit()) throw Error(ErrorKind::InternalConsistency, "iota(1_A) != 1_B");
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (iota * a.tensor().product(i, j) != multiply(b, iota.col(i), iota.col(j))) {
        throw Error(ErrorKind::InternalConsistency, "iota is not multiplicative",
                    {static_cast<long>(i), static_cast<long>(j)});
      }
    }
  }
  if (rank(iota) != n) throw Error(ErrorKind::EmbeddingFails, "iota has a nonzero kernel");
  if (!is_zero(evaluate(b, p, out.u))) throw Error(ErrorKind::InternalConsistency, "p(u) != 0");

  if (invertible_u) {
    const Rat a0 = p.coeff(0);
    Element inv = power(b, out.u, d - 1);
    for (int i = 1; i < d; ++i) inv += p.coeff(i) * power(b, out.u, i - 1);
    inv *= Rat(-1) / a0;
    if (multiply(b, out.u, inv) != b.unit() || multiply(b, inv, out.u) != b.unit()) {
      throw Error(ErrorKind::InternalConsistency, "u u^{-1} != 1");
    }
    out.u_inverse = std::move(inv);
  }

  // Generation by powers of u on either side.
  std::vector<Element> upow;
  for (int s = 0; s < d; ++s) upow.push_back(power(b, out.u, s));
  if (out.u_inverse) {
    for (int s = 1; s < d; ++s) upow.push_back(power(b, *out.u_inverse, s));
  }
  std::vector<Element> left_gens;
  std::vector<Element> right_gens;
  for (const Element& w : upow) {
    for (Index i = 0; i < n; ++i) {
      left_gens.push_back(multiply(b, iota.col(i), w));
      right_gens.push_back(multiply(b, w, iota.col(i)));
    }
  }
  if (!span(left_gens, b.dim()).is_full()) throw Error(ErrorKind::InternalConsistency, "B is not generated as a left A-module");
  if (!span(right_gens, b.dim()).is_full()) throw Error(ErrorKind::InternalConsistency, "B is not generated as a right A-module");
  return out;
}

}  // namespace skewex::detail
