#include "skewex/mathieu.hpp"

#include "skewex/error.hpp"
#include "skewex/random.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>

namespace skewex {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Primitive: return "primitive";
    case Provenance::Sum: return "sum";
    case Provenance::Lifted: return "lifted";
  }
  return "?";
}

const char* to_string(MsVerdict::Status s) {
  switch (s) {
    case MsVerdict::Status::IsMS: return "IsMS";
    case MsVerdict::Status::NotMS: return "NotMS";
    case MsVerdict::Status::InconclusiveIdempotents: return "InconclusiveIdempotents";
  }
  return "?";
}

const char* to_string(WitnessResult r) {
  switch (r) {
    case WitnessResult::Pass: return "pass";
    case WitnessResult::Fail: return "fail";
    case WitnessResult::NotApplicable: return "not-applicable";
  }
  return "?";
}

std::size_t idempotent_cap() {
  if (const char* env = std::getenv("SKEWEX_IDEMPOTENT_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t{1} << 20;
}

namespace {

// Splits the unit of a semisimple commutative algebra into orthogonal
// idempotents using rational eigenvalues of each basis element.
std::vector<Element> split_unit(const Algebra& bar) {
  std::vector<Element> parts{bar.unit()};
  for (Index i = 0; i < bar.dim(); ++i) {
    const Element b = bar.basis_element(i);
    const Poly m = squarefree_part(minimal_polynomial(left_regular(bar, b)));
    std::vector<Element> pieces;
    Element rest = bar.unit();
    for (const Rat& lambda : rational_roots(m)) {
      // m(t) / (t - lambda), normalized to 1 at lambda
      const Poly q = divmod(m, Poly::from_roots({lambda})).first;
      Element e = evaluate(bar, q, b) * (Rat(1) / q(lambda));
      rest -= e;
      pieces.push_back(std::move(e));
    }
    if (!is_zero(rest)) pieces.push_back(std::move(rest));
    if (pieces.size() <= 1) continue;
    std::vector<Element> refined;
    for (const Element& f : parts) {
      for (const Element& e : pieces) {
        Element g = multiply(bar, f, e);
        if (!is_zero(g)) refined.push_back(std::move(g));
      }
    }
    parts = std::move(refined);
  }
  return parts;
}

// True when the component f A is shown to be a field: some f b has a
// minimal polynomial on the component of degree dim(f A) <= 3 with no
// rational root, so the component is Q[t]/(m) with m irreducible.
bool component_is_field(const Algebra& bar, const Element& f, Index dim) {
  if (dim > 3) return false;
  std::vector<Element> probes;
  Element mix = bar.zero();
  for (Index i = 0; i < bar.dim(); ++i) {
    probes.push_back(bar.basis_element(i));
    mix += Rat(i + 1) * bar.basis_element(i);
  }
  probes.push_back(mix);
  for (const Element& b : probes) {
    Poly m = squarefree_part(minimal_polynomial(left_regular(bar, multiply(bar, f, b))));
    if (dim < bar.dim()) {
      // The complement contributes the factor t.
      const auto [quo, rem] = divmod(m, Poly::monomial(1));
      if (!rem.is_zero()) continue;
      m = quo;
    }
    if (m.degree() == dim && rational_roots(m).empty()) return true;
  }
  return false;
}

}  // namespace

IdempotentSet enumerate_idempotents(const Algebra& a, std::size_t cap) {
  if (!is_commutative(a)) throw Error(ErrorKind::NotCommutative, "idempotent enumeration needs a commutative algebra");
  const Index n = a.dim();
  IdempotentSet out;
  if (n == 0) {
    out.items.push_back(a.zero());
    out.provenance.push_back(Provenance::Sum);
    return out;
  }

  const Subspace rad = radical(a);
  std::optional<Quotient> q;
  if (!rad.is_zero()) q = quotient(a, rad);
  const Algebra& bar = q ? q->algebra : a;
  const std::vector<Element> parts = split_unit(bar);

  for (const Element& f : parts) {
    const Index r = rank(left_regular(bar, f));
    if (r > 1 && !component_is_field(bar, f, r)) {
      out.complete = false;
      out.inconclusive_reason = "a component of dimension " + std::to_string(r) +
                                " does not split over Q (irreducible factor of degree >= 2)";
      break;
    }
  }

  // Newton lifting; the number of steps is at most ceil(log2(index)).
  int max_steps = 0;
  if (q) {
    const auto k = nilpotency_index(a, rad);
    if (!k) throw Error(ErrorKind::InternalConsistency, "radical is not nilpotent");
    max_steps = static_cast<int>(std::bit_width(static_cast<unsigned>(*k - 1)));
  }
  std::vector<Element> primitives;
  std::vector<bool> lifted;
  for (const Element& f : parts) {
    Element e = q ? Element(q->section * f) : f;
    int steps = 0;
    while (multiply(a, e, e) != e) {
      const Element e2 = multiply(a, e, e);
      e = Rat(3) * e2 - Rat(2) * multiply(a, e2, e);
      ++steps;
      if (!q || q->projection * e != f) throw Error(ErrorKind::InternalConsistency, "lift left its residue class");
      if (steps > max_steps) throw Error(ErrorKind::InternalConsistency, "Newton lifting did not converge in time");
    }
    primitives.push_back(std::move(e));
    lifted.push_back(steps > 0);
  }

  const std::size_t k = primitives.size();
  if (k >= 63 || (std::size_t{1} << k) > cap) {
    throw Error(ErrorKind::CapExceeded,
                std::to_string(k) + " primitive idempotents exceed the cap of " + std::to_string(cap),
                {static_cast<long>(k)});
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    Element e = a.zero();
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) e += primitives[i];
    }
    if (multiply(a, e, e) != e) throw Error(ErrorKind::InternalConsistency, "sum of primitives is not idempotent");
    Provenance p = Provenance::Sum;
    if (std::popcount(mask) == 1) p = lifted[static_cast<std::size_t>(std::countr_zero(mask))] ? Provenance::Lifted : Provenance::Primitive;
    out.items.push_back(std::move(e));
    out.provenance.push_back(p);
  }
  return out;
}

TraceRank trace_rank_idempotent(const Algebra& a, const Element& e) {
  if (multiply(a, e, e) != e) throw Error(ErrorKind::NotIdempotent, "e^2 != e");
  const Mat m = left_regular(a, e);
  return {m.trace(), rank(m)};
}

MsVerdict ms_check(const Algebra& a, const Subspace& v, const IdempotentSet& idems, Side side) {
  MsVerdict out;
  for (const Element& e : idems.items) {
    if (!v.contains(e)) continue;
    const bool inside = ideal(a, {e}, side).is_subset_of(v);
    out.checked.emplace_back(e, inside);
    if (!inside) {
      out.status = MsVerdict::Status::NotMS;
      out.witness = e;
      return out;
    }
  }
  out.status = idems.complete ? MsVerdict::Status::IsMS : MsVerdict::Status::InconclusiveIdempotents;
  return out;
}

PowerSpan power_span(const Algebra& a, const Element& x) {
  const int d = minimal_polynomial(left_regular(a, x)).degree();
  std::vector<Element> powers{a.unit(), x};
  auto pw = [&](int m) -> const Element& {
    while (static_cast<int>(powers.size()) <= m) powers.push_back(multiply(a, powers.back(), x));
    return powers[static_cast<std::size_t>(m)];
  };
  auto window = [&](int start) {
    std::vector<Element> gens;
    for (int m = start; m < start + d; ++m) gens.push_back(pw(m));
    return span(gens, a.dim());
  };
  PowerSpan out{window(1), Subspace(), 1};
  Subspace cur = out.all;
  while (true) {
    Subspace next = window(out.n0 + 1);
    if (next == cur) break;
    cur = std::move(next);
    ++out.n0;
  }
  out.tail = std::move(cur);
  return out;
}

WitnessResult ms_witness_check(const Algebra& a, const Subspace& v, const Element& x, const Element& b,
                               const Element& c, Side side) {
  const PowerSpan ps = power_span(a, x);
  if (!ps.all.is_subset_of(v)) return WitnessResult::NotApplicable;
  for (const Element& y : ps.tail.basis_vectors()) {
    Element z = y;
    if (side != Side::Right) z = multiply(a, b, z);
    if (side != Side::Left) z = multiply(a, z, c);
    if (!v.contains(z)) return WitnessResult::Fail;
  }
  return WitnessResult::Pass;
}

std::vector<Element> image_idempotent_audit(const Algebra& a, const Mat& m, const std::vector<Element>& candidates) {
  (void)a;
  const Subspace im = image(m);
  std::vector<Element> found;
  for (const Element& e : candidates) {
    if (!is_zero(e) && im.contains(e)) found.push_back(e);
  }
  return found;
}

std::vector<Element> image_idempotent_audit(const Algebra& a, const Mat& m, const IdempotentSet& idems) {
  return image_idempotent_audit(a, m, idems.items);
}

Check traceless_image(const Algebra& a, const Mat& m) {
  Check out;
  for (Index j = 0; j < m.cols(); ++j) {
    const Rat t = trace_of(a, m.col(j));
    if (t != 0) {
      out.ok = false;
      out.witness = {static_cast<long>(j)};
      out.detail = "trace of the image of e" + std::to_string(j) + " is " + to_string(t);
      return out;
    }
  }
  return out;
}

std::vector<Element> rank_one_idempotents(int n, int count) {
  std::vector<Element> out;
  for (int k = 0; static_cast<int>(out.size()) < count; ++k) {
    const Rat s = Rat(k % 11 - 5) / 3;
    const Rat r = Rat(k / 11 % 13 - 6) / 2 + Rat(k / 143);
    Vec v(n);
    Vec w(n);
    Rat ps = 1;
    Rat pr = 1;
    for (int i = 0; i < n; ++i) {
      v(i) = ps;
      w(i) = pr;
      ps *= s;
      pr *= r;
    }
    const Rat dot = w.dot(v);
    if (dot == 0) continue;
    const Mat e = v * w.transpose() * (Rat(1) / dot);
    out.push_back(from_matrix(e));
  }
  return out;
}

std::vector<Element> conjugated_diagonal_idempotents(int n, int count, std::mt19937_64& rng) {
  std::vector<Element> out;
  while (static_cast<int>(out.size()) < count) {
    Mat p(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) p(i, j) = Rat(draw_between(rng, -3, 3));
    }
    const auto pinv = inverse(p);
    if (!pinv) continue;
    Mat diag = zeros(n, n);
    for (int i = 0; i < n; ++i) diag(i, i) = draw_bool(rng) ? 1 : 0;
    out.push_back(from_matrix(Mat(p * diag * *pinv)));
  }
  return out;
}

bool KernelChainReport::holds() const {
  for (const KernelChainRow& r : rows) {
    if (!r.holds()) return false;
  }
  return true;
}

KernelChainReport kernel_chain_check(const Algebra& a, const AlgebraEndo& phi, const IdempotentSet& idems) {
  const InducedMap induced = induced_map(a, phi);
  if (!induced.surjective) throw Error(ErrorKind::PhibarNotSurjective, "induced map on A / Ker_{>=1} phi is not onto");
  const KernelChain chain = ker_chain(a, phi);
  const Subspace im = image(Mat(identity(a.dim()) - phi.matrix()));
  KernelChainReport out;
  for (const Element& e : idems.items) {
    KernelChainRow row{e};
    row.in_image = im.contains(e);
    row.in_kernel_chain = chain.ker_ge1.contains(e);
    if (row.in_image) row.ideal_in_image = two_sided_ideal(a, {e}).is_subset_of(im);
    out.rows.push_back(std::move(row));
  }
  return out;
}

Simplicity is_simple(const Algebra& a) {
  const Subspace rad = radical(a);
  if (!rad.is_zero()) return {Simplicity::Status::NotSimple, rad};
  // Semisimple: simple iff the center is a field, i.e. has no idempotent
  // other than 0 and 1.
  const Subalgebra z = restrict_to(a, center(a));
  const IdempotentSet idems = enumerate_idempotents(z.algebra);
  for (const Element& e : idems.items) {
    if (is_zero(e) || e == z.algebra.unit()) continue;
    return {Simplicity::Status::NotSimple, two_sided_ideal(a, {Element(z.inclusion * e)})};
  }
  return {idems.complete ? Simplicity::Status::Simple : Simplicity::Status::Inconclusive, std::nullopt};
}

}  // namespace skewex
