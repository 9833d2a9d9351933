#include "skewex/poly.hpp"

#include "skewex/error.hpp"
#include "skewex/linear.hpp"

#include <algorithm>
#include <sstream>

namespace skewex {

Poly::Poly(std::vector<Rat> coeffs) : m_coeffs(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!m_coeffs.empty() && m_coeffs.back() == 0) m_coeffs.pop_back();
}

Poly Poly::constant(const Rat& c) { return Poly({c}); }

Poly Poly::monomial(int k, const Rat& c) {
  std::vector<Rat> v(static_cast<std::size_t>(k + 1));
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::from_roots(const std::vector<Rat>& roots) {
  Poly p = constant(1);
  for (const Rat& r : roots) p = p * Poly({-r, Rat(1)});
  return p;
}

Rat Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rat(0);
  return m_coeffs[static_cast<std::size_t>(i)];
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return (Rat(1) / leading()) * *this;
}

Poly Poly::derivative() const {
  std::vector<Rat> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(Rat(i) * coeff(i));
  return Poly(std::move(d));
}

Rat Poly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1));
  for (int i = 0; i < static_cast<int>(c.size()); ++i) c[static_cast<std::size_t>(i)] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(c));
}

Poly operator-(const Poly& p) { return Rat(-1) * p; }
Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(static_cast<std::size_t>(a.degree() + b.degree() + 1));
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) c[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
  }
  return Poly(std::move(c));
}

Poly operator*(const Rat& s, const Poly& p) {
  std::vector<Rat> c = p.coeffs();
  for (Rat& x : c) x *= s;
  return Poly(std::move(c));
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat c = coeff(i);
    if (c == 0) continue;
    const Rat mag = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << to_string(mag);
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidParameter, "polynomial division by zero");
  std::vector<Rat> rem = a.coeffs();
  const int db = b.degree();
  const int dq = a.degree() - db;
  if (dq < 0) return {Poly(), a};
  std::vector<Rat> quo(static_cast<std::size_t>(dq + 1));
  for (int k = dq; k >= 0; --k) {
    const Rat f = rem[static_cast<std::size_t>(k + db)] / b.leading();
    quo[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= f * b.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  return divmod(a * b, gcd(a, b)).first.monic();
}

bool divides(const Poly& d, const Poly& p) { return divmod(p, d).second.is_zero(); }

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

namespace {

// Sign variations of a Sturm chain at x.
int sign_changes(const std::vector<Poly>& chain, const Rat& x) {
  int changes = 0;
  int last = 0;
  for (const Poly& s : chain) {
    const Rat v = s(x);
    const int sg = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

// Integer roots of a square-free g in (lo, hi], found by bisecting with a
// Sturm chain until intervals are shorter than 1.
void integer_roots(const Poly& g, const std::vector<Poly>& chain, const Rat& lo, const Rat& hi, int count,
                   std::vector<Rat>& out) {
  if (count <= 0) return;
  if (hi - lo < 1) {
    // At most one integer fits in (lo, hi].
    Int k = boost::multiprecision::numerator(hi) / boost::multiprecision::denominator(hi);
    if (Rat(k) > hi) k -= 1;
    if (Rat(k) > lo && g(Rat(k)) == 0) out.push_back(Rat(k));
    return;
  }
  const Rat mid = (lo + hi) / 2;
  const int left = sign_changes(chain, lo) - sign_changes(chain, mid);
  integer_roots(g, chain, lo, mid, left, out);
  integer_roots(g, chain, mid, hi, count - left, out);
}

}  // namespace

std::vector<Rat> rational_roots(const Poly& p) {
  if (p.degree() <= 0) return {};
  Poly f = squarefree_part(p);
  std::vector<Rat> roots;
  // Zero is handled apart so the remaining constant term is nonzero.
  if (f.coeff(0) == 0) {
    roots.push_back(Rat(0));
    f = divmod(f, Poly::monomial(1)).first;
  }
  if (f.degree() >= 1) {
    // Clear denominators: lead * root is an integer for every rational
    // root, so substitute y = lead * x and look for integer roots.
    Int den = 1;
    for (const Rat& c : f.coeffs()) den = boost::multiprecision::lcm(den, Int(boost::multiprecision::denominator(c)));
    const Rat lead = f.leading() * Rat(den);
    std::vector<Rat> gc(f.coeffs().size());
    Rat scale = 1;
    for (std::size_t i = 0; i < gc.size(); ++i) {
      gc[i] = f.coeffs()[i] * Rat(den) / scale;
      scale *= lead;
    }
    const Poly g = Poly(std::move(gc)).monic();
    std::vector<Poly> chain{g, g.derivative()};
    while (chain.back().degree() > 0) {
      Poly r = -divmod(chain[chain.size() - 2], chain.back()).second;
      if (r.is_zero()) break;
      chain.push_back(std::move(r));
    }
    Rat bound = 0;
    for (int i = 0; i < g.degree(); ++i) {
      const Rat a = g.coeff(i) < 0 ? Rat(-g.coeff(i)) : g.coeff(i);
      if (a > bound) bound = a;
    }
    bound += 2;
    const Rat lo = -bound;
    const int total = sign_changes(chain, lo) - sign_changes(chain, bound);
    std::vector<Rat> ys;
    integer_roots(g, chain, lo, bound, total, ys);
    for (const Rat& y : ys) roots.push_back(y / lead);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

Mat evaluate(const Poly& p, const Mat& m) {
  const Index n = m.rows();
  Mat acc = zeros(n, n);
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * m;
    if (p.coeff(i) != 0) acc += p.coeff(i) * identity(n);
  }
  return acc;
}

namespace {

// Monic relation polynomial of v under m: least k with m^k v in
// span{v, ..., m^{k-1} v}.
Poly krylov_relation(const Mat& m, const Vec& v) {
  const Index n = m.rows();
  std::vector<Vec> seq{v};
  while (true) {
    const Index k = static_cast<Index>(seq.size());
    Mat basis(n, k);
    for (Index j = 0; j < k; ++j) basis.col(j) = seq[static_cast<std::size_t>(j)];
    const Vec next = m * seq.back();
    if (auto c = solve(basis, next)) {
      std::vector<Rat> coeffs(static_cast<std::size_t>(k + 1));
      for (Index j = 0; j < k; ++j) coeffs[static_cast<std::size_t>(j)] = -(*c)(j);
      coeffs.back() = 1;
      return Poly(std::move(coeffs));
    }
    seq.push_back(next);
  }
}

}  // namespace

Poly minimal_polynomial(const Mat& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "minimal_polynomial needs a square matrix");
  const Index n = m.rows();
  Poly p = Poly::constant(1);
  for (Index i = 0; i < n; ++i) {
    const Vec e = unit_vector(n, i);
    // Skip vectors already annihilated by the running lcm.
    Vec pe = zeros(n);
    for (int d = p.degree(); d >= 0; --d) pe = m * pe + p.coeff(d) * e;
    if (is_zero(pe)) continue;
    p = lcm(p, krylov_relation(m, e));
  }
  if (!is_zero(evaluate(p, m))) throw Error(ErrorKind::InternalConsistency, "minimal polynomial does not annihilate");
  return p;
}

Poly parse_poly(std::string_view csv) {
  std::vector<Rat> coeffs;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const auto comma = csv.find(',', start);
    const auto end = comma == std::string_view::npos ? csv.size() : comma;
    coeffs.push_back(parse_rat(csv.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Poly(std::move(coeffs));
}

}  // namespace skewex
