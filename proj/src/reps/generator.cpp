#include "dgrep/generator.hpp"

#include <optional>

#include "dgrep/error.hpp"

namespace dgrep {

namespace {

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

long small_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// sign(g) * permutation matrix of a random action, conjugated by a unimodular p.
std::vector<Matrix> random_group_rep(Rng& rng, const FiniteGroup& G, std::size_t n, Field f) {
  std::vector<Matrix> out;
  if (n == 0) {
    out.assign(G.order(), Matrix(0, 0, f));
    return out;
  }
  auto actions = all_actions(G, n);
  const GAction& perm = actions[pick(rng, actions.size())];
  auto signs = all_actions(G, 2);
  const GAction& sign = signs[pick(rng, signs.size())];
  Matrix p = random_unimodular(rng, n, f);
  Matrix pinv = *p.inverse();
  for (std::size_t g = 0; g < G.order(); ++g) {
    Matrix m(n, n, f);
    long s = sign.act(g, 0) == 0 ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i) m(perm.act(g, i), i) = Scalar(s, f);
    out.push_back(p * m * pinv);
  }
  return out;
}

}  // namespace

FiniteGroup random_group(Rng& rng, std::size_t order) {
  switch (order) {
    case 4:
      return pick(rng, 2) ? FiniteGroup::cyclic(4)
                          : FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    case 6:
      return pick(rng, 2) ? FiniteGroup::cyclic(6) : FiniteGroup::symmetric(3);
    default:
      if (order == 0 || order > 6) throw Error("random_group: order must be between 1 and 6");
      return FiniteGroup::cyclic(order);
  }
}

Digroup random_digroup(Rng& rng, const FiniteGroup& group, std::size_t halo_size) {
  if (halo_size == 0) throw Error("random_digroup: halo must be nonempty");
  auto actions = all_actions(group, halo_size);
  return Digroup(actions[pick(rng, actions.size())]);
}

Matrix random_unimodular(Rng& rng, std::size_t n, Field f) {
  Matrix lower = Matrix::identity(n, f), upper = Matrix::identity(n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = Scalar(small_int(rng, -1, 1), f);
      upper(j, i) = Scalar(small_int(rng, -1, 1), f);
    }
  return lower * upper;
}

Matrix random_small(Rng& rng, std::size_t rows, std::size_t cols, Field f) {
  Matrix m(rows, cols, f);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(small_int(rng, -2, 2), f);
  return m;
}

SemilinearObject random_semilinear(Rng& rng, const Digroup& d, std::size_t dim, Field f) {
  const FiniteGroup& G = d.group();
  const GAction& act = d.action();
  std::size_t r = pick(rng, dim + 1), k = dim - r;
  auto tc = random_group_rep(rng, G, r, f);
  auto tk = random_group_rep(rng, G, k, f);

  // A_a for one point per orbit, averaged over its stabilizer, then transported.
  std::vector<std::optional<Matrix>> a(d.halo_size());
  for (std::size_t al = 0; al < d.halo_size(); ++al) {
    if (a[al]) continue;
    Matrix x = random_small(rng, k, r, f);
    std::vector<std::size_t> stab;
    for (std::size_t h = 0; h < G.order(); ++h)
      if (act.act(h, al) == al) stab.push_back(h);
    Matrix avg(k, r, f);
    if (f.inverts(stab.size())) {
      for (std::size_t h : stab) avg += tk[h] * x * *tc[h].inverse();
      avg *= Scalar(1, f) / Scalar(static_cast<long>(stab.size()), f);
    }
    for (std::size_t g = 0; g < G.order(); ++g) {
      std::size_t b = act.act(g, al);
      if (!a[b]) a[b] = tk[g] * avg * *tc[g].inverse();
    }
  }

  Matrix p = random_unimodular(rng, dim, f);
  Matrix pinv = *p.inverse();
  SemilinearObject out{d, dim, f, {}, {}};
  for (std::size_t al = 0; al < d.halo_size(); ++al) {
    Matrix e(dim, dim, f);
    e.set_block(0, 0, Matrix::identity(r, f));
    e.set_block(r, 0, *a[al]);
    out.epsilon.push_back(p * e * pinv);
  }
  for (std::size_t g = 0; g < G.order(); ++g) out.t.push_back(p * block_diagonal(tc[g], tk[g]) * pinv);
  return out;
}

Representation random_representation(Rng& rng, const Digroup& d, std::size_t dim, Field f) {
  return from_semilinear(random_semilinear(rng, d, dim, f));
}

}  // namespace dgrep
