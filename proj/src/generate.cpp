#include "skewex/generate.hpp"

#include "skewex/error.hpp"
#include "skewex/random.hpp"

namespace skewex {

Index Block::dim() const {
  switch (kind) {
    case Kind::Truncated: return param;
    case Kind::Split: return 2;
    case Kind::Cyclic: return param;
    case Kind::Matrix: return param * param;
    case Kind::UpperTriangular: return param * (param + 1) / 2;
  }
  return 0;
}

std::string Block::name() const {
  const std::string p = std::to_string(param);
  switch (kind) {
    case Kind::Truncated: return param == 1 ? "Q" : "Q[t]/(t^" + p + ")";
    case Kind::Split: return "Q[t]/(t^2-t)";
    case Kind::Cyclic: return "Q[C" + p + "]";
    case Kind::Matrix: return "M" + p;
    case Kind::UpperTriangular: return "T" + p;
  }
  return "?";
}

Algebra Block::build() const {
  switch (kind) {
    case Kind::Truncated: return poly_quotient(Poly::monomial(param));
    case Kind::Split: return poly_quotient(Poly({0, -1, 1}));
    case Kind::Cyclic: return cyclic_group_algebra(param);
    case Kind::Matrix: return matrix_algebra(param);
    case Kind::UpperTriangular: return upper_triangular(param);
  }
  throw Error(ErrorKind::InvalidParameter, "unknown block kind");
}

Algebra product_of(const std::vector<Block>& blocks) {
  if (blocks.empty()) throw Error(ErrorKind::InvalidParameter, "product of no blocks");
  Algebra out = blocks.front().build();
  for (std::size_t i = 1; i < blocks.size(); ++i) out = direct_product(out, blocks[i].build());
  return out;
}

RandomAlgebra random_algebra(std::mt19937_64& rng, int max_dim) {
  using K = Block::Kind;
  const std::vector<Block> menu{{K::Truncated, 1}, {K::Truncated, 2}, {K::Truncated, 3}, {K::Split, 0},
                                {K::Cyclic, 2},    {K::Cyclic, 3},    {K::Matrix, 2},    {K::UpperTriangular, 2}};
  RandomAlgebra out;
  const int count = static_cast<int>(draw_between(rng, 1, 3));
  Index room = max_dim;
  for (int b = 0; b < count && room > 0; ++b) {
    std::vector<Block> fits;
    for (const Block& x : menu) {
      if (x.dim() <= room) fits.push_back(x);
    }
    const Block pick = fits[static_cast<std::size_t>(draw_between(rng, 0, static_cast<long>(fits.size()) - 1))];
    out.blocks.push_back(pick);
    room -= pick.dim();
  }
  const Algebra plain = product_of(out.blocks);
  for (std::size_t i = 0; i < out.blocks.size(); ++i) out.description += (i ? " x " : "") + out.blocks[i].name();
  if (draw_bool(rng)) {
    out.basis = random_invertible_matrix(plain.dim(), rng);
    out.algebra = change_basis(plain, out.basis);
    out.description += " (changed basis)";
  } else {
    out.basis = identity(plain.dim());
    out.algebra = plain;
  }
  return out;
}

Element random_element(const Algebra& a, std::mt19937_64& rng, long lo, long hi) {
  Element x(a.dim());
  for (Index i = 0; i < a.dim(); ++i) x(i) = Rat(draw_between(rng, lo, hi));
  return x;
}

Mat random_invertible_matrix(Index n, std::mt19937_64& rng) {
  Mat lower = identity(n);
  Mat upper = identity(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < i; ++j) {
      lower(i, j) = Rat(draw_between(rng, -1, 1));
      upper(j, i) = Rat(draw_between(rng, -1, 1));
    }
  }
  return lower * upper;
}

std::optional<Element> random_unit(const Algebra& a, std::mt19937_64& rng, int attempts) {
  for (int i = 0; i < attempts; ++i) {
    const Element x = random_element(a, rng, -2, 2);
    if (inverse(a, x)) return x;
  }
  return std::nullopt;
}

std::optional<Derivation> random_nilpotent_derivation(const Algebra& a, const std::vector<Derivation>& basis,
                                                      std::mt19937_64& rng) {
  if (basis.empty()) return std::nullopt;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Mat m = zeros(a.dim(), a.dim());
    for (const Derivation& d : basis) m += Rat(draw_between(rng, -1, 1)) * d.matrix();
    if (!is_zero(m) && local_finiteness_report(m).locally_nilpotent) return Derivation::certify(a, m);
  }
  std::vector<const Derivation*> nilpotent;
  for (const Derivation& d : basis) {
    if (local_finiteness_report(d.matrix()).locally_nilpotent) nilpotent.push_back(&d);
  }
  if (nilpotent.empty()) return std::nullopt;
  return *nilpotent[static_cast<std::size_t>(draw_between(rng, 0, static_cast<long>(nilpotent.size()) - 1))];
}

std::vector<AlgebraEndo> block_swaps(const RandomAlgebra& r) {
  std::vector<Index> offset{0};
  for (const Block& b : r.blocks) offset.push_back(offset.back() + b.dim());
  const Index n = offset.back();
  const auto basis_inv = inverse(r.basis);
  std::vector<AlgebraEndo> out;
  for (std::size_t i = 0; i < r.blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < r.blocks.size(); ++j) {
      if (!(r.blocks[i] == r.blocks[j])) continue;
      Mat swap = identity(n);
      const Index d = r.blocks[i].dim();
      for (Index k = 0; k < d; ++k) {
        const Index x = offset[i] + k;
        const Index y = offset[j] + k;
        swap(x, x) = 0;
        swap(y, y) = 0;
        swap(x, y) = 1;
        swap(y, x) = 1;
      }
      out.push_back(AlgebraEndo::certify(r.algebra, *basis_inv * swap * r.basis));
    }
  }
  return out;
}

LocalEndomorphism random_local_endomorphism(std::mt19937_64& rng, int max_blocks, int max_k) {
  const int count = static_cast<int>(draw_between(rng, 1, max_blocks));
  std::vector<int> k(static_cast<std::size_t>(count));
  std::vector<Index> offset{0};
  std::vector<Block> blocks;
  for (int i = 0; i < count; ++i) {
    k[static_cast<std::size_t>(i)] = static_cast<int>(draw_between(rng, 1, max_k));
    blocks.push_back({Block::Kind::Truncated, k[static_cast<std::size_t>(i)]});
    offset.push_back(offset.back() + k[static_cast<std::size_t>(i)]);
  }
  const Algebra a = product_of(blocks);
  Mat m = zeros(a.dim(), a.dim());
  std::string desc;
  for (const Block& b : blocks) desc += (desc.empty() ? "" : " x ") + b.name();
  desc += "; ";
  for (int tgt = 0; tgt < count; ++tgt) {
    const int src = static_cast<int>(draw_between(rng, 0, count - 1));
    const int ks = k[static_cast<std::size_t>(src)];
    const int kt = k[static_cast<std::size_t>(tgt)];
    // t -> c t^s needs s * ks >= kt so that t^ks still maps to zero.
    int s = 0;
    Rat c = 0;
    if (kt > 1 && draw_between(rng, 0, 3) != 0) {
      const int smin = (kt + ks - 1) / ks;
      s = static_cast<int>(draw_between(rng, smin, std::max(smin, kt - 1)));
      c = Rat(draw_between(rng, 1, 3)) * (draw_bool(rng) ? 1 : -1);
    }
    desc += "[" + std::to_string(tgt) + "<-" + std::to_string(src) + (s > 0 ? ": t->" + to_string(c) + "t^" + std::to_string(s) : ": t->0") + "]";
    // image of t^p from the source block, p < ks
    for (int p = 0; p < ks; ++p) {
      const Index col = offset[static_cast<std::size_t>(src)] + p;
      if (p == 0) {
        m(offset[static_cast<std::size_t>(tgt)], col) += 1;
      } else if (s > 0 && s * p < kt) {
        Rat cp = 1;
        for (int i = 0; i < p; ++i) cp *= c;
        m(offset[static_cast<std::size_t>(tgt)] + s * p, col) += cp;
      }
    }
  }
  return {a, AlgebraEndo::certify(a, m), desc};
}

}  // namespace skewex
