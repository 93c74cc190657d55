#include "dgrep/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dgrep/error.hpp"

namespace dgrep {

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

void check_square(const Table& mul) {
  if (mul.empty()) throw AxiomFailure("group table is empty");
  for (const auto& row : mul) {
    if (row.size() != mul.size()) throw AxiomFailure("group table is not square");
    for (auto v : row)
      if (v >= mul.size()) throw AxiomFailure("group table entry out of range");
  }
}

}  // namespace

FiniteGroup FiniteGroup::from_table_unchecked(Table mul) {
  check_square(mul);
  FiniteGroup g;
  g.mul_ = std::move(mul);
  std::size_t n = g.mul_.size();
  g.identity_ = 0;
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = g.mul_[e][a] == a && g.mul_[a][e] == a;
    if (ok) {
      g.identity_ = e;
      break;
    }
  }
  g.inv_.assign(n, g.identity_);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.mul_[a][b] == g.identity_ && g.mul_[b][a] == g.identity_) {
        g.inv_[a] = b;
        break;
      }
  return g;
}

FiniteGroup FiniteGroup::from_table(Table mul) {
  FiniteGroup g = from_table_unchecked(std::move(mul));
  Report r = g.check();
  if (const Check* bad = r.first_failure())
    throw AxiomFailure("group table fails " + bad->name + " at " + bad->counterexample);
  return g;
}

Report FiniteGroup::check() const {
  Report r;
  std::size_t n = order();
  Check& assoc = r.add("associativity");
  for (std::size_t a = 0; a < n && assoc.ok; ++a)
    for (std::size_t b = 0; b < n && assoc.ok; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) {
          Report::fail(assoc, triple(a, b, c));
          break;
        }
  Check& ident = r.add("identity");
  for (std::size_t a = 0; a < n; ++a)
    if (mul_[identity_][a] != a || mul_[a][identity_] != a) {
      Report::fail(ident, std::to_string(a));
      break;
    }
  Check& inverse = r.add("inverse");
  for (std::size_t a = 0; a < n; ++a)
    if (mul_[a][inv_[a]] != identity_ || mul_[inv_[a]][a] != identity_) {
      Report::fail(inverse, std::to_string(a));
      break;
    }
  return r;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw Error("cyclic group order must be positive");
  Table mul(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  return from_table(std::move(mul));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  if (n == 0 || n > 4) throw Error("symmetric group supported for 1 <= n <= 4");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::vector<std::size_t>& q) {
    return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  Table mul(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      mul[a][b] = index_of(c);
    }
  return from_table(std::move(mul));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  std::size_t na = a.order(), nb = b.order();
  Table mul(na * nb, std::vector<std::size_t>(na * nb));
  for (std::size_t x = 0; x < na * nb; ++x)
    for (std::size_t y = 0; y < na * nb; ++y)
      mul[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  return from_table(std::move(mul));
}

std::vector<std::size_t> FiniteGroup::generators() const {
  std::vector<std::size_t> gens;
  std::set<std::size_t> closure{identity_};
  for (std::size_t cand = 0; cand < order() && closure.size() < order(); ++cand) {
    if (closure.count(cand)) continue;
    gens.push_back(cand);
    // In a finite group the submonoid generated by gens is the subgroup.
    closure = {identity_};
    std::vector<std::size_t> frontier{identity_};
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (auto x : frontier)
        for (auto s : gens) {
          std::size_t y = mul(s, x);
          if (closure.insert(y).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
  }
  return gens;
}

GAction GAction::from_table_unchecked(FiniteGroup group, Table act) {
  if (act.size() != group.order()) throw AxiomFailure("action table needs one row per group element");
  std::size_t m = act.empty() ? 0 : act.front().size();
  if (m == 0) throw AxiomFailure("halo must be nonempty");
  for (const auto& row : act) {
    if (row.size() != m) throw AxiomFailure("action table rows differ in length");
    for (auto v : row)
      if (v >= m) throw AxiomFailure("action table entry out of range");
  }
  GAction a;
  a.group_ = std::move(group);
  a.set_size_ = m;
  a.act_ = std::move(act);
  return a;
}

GAction GAction::from_table(FiniteGroup group, Table act) {
  GAction a = from_table_unchecked(std::move(group), std::move(act));
  Report r = a.check();
  if (const Check* bad = r.first_failure())
    throw AxiomFailure("action fails " + bad->name + " at " + bad->counterexample);
  return a;
}

GAction GAction::trivial(FiniteGroup group, std::size_t set_size) {
  if (set_size == 0) throw AxiomFailure("halo must be nonempty");
  std::vector<std::size_t> row(set_size);
  std::iota(row.begin(), row.end(), 0);
  Table act(group.order(), row);
  return from_table(std::move(group), std::move(act));
}

bool GAction::is_trivial() const {
  for (const auto& row : act_)
    for (std::size_t a = 0; a < row.size(); ++a)
      if (row[a] != a) return false;
  return true;
}

Report GAction::check() const {
  Report r;
  Check& unit = r.add("action identity");
  for (std::size_t a = 0; a < set_size_; ++a)
    if (act_[group_.identity()][a] != a) {
      Report::fail(unit, std::to_string(a));
      break;
    }
  Check& compat = r.add("action compatibility");
  std::size_t n = group_.order();
  for (std::size_t g = 0; g < n && compat.ok; ++g)
    for (std::size_t h = 0; h < n && compat.ok; ++h)
      for (std::size_t a = 0; a < set_size_; ++a)
        if (act_[group_.mul(g, h)][a] != act_[g][act_[h][a]]) {
          Report::fail(compat, triple(g, h, a));
          break;
        }
  return r;
}

std::vector<GAction> all_actions(const FiniteGroup& group, std::size_t set_size) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(set_size);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  auto gens = group.generators();
  std::vector<GAction> out;
  std::vector<std::size_t> choice(gens.size(), 0);
  while (true) {
    // Propagate generator images along words; reject inconsistent assignments.
    Table act(group.order());
    act[group.identity()] = perms[0];
    std::vector<std::size_t> frontier{group.identity()};
    bool consistent = true;
    while (!frontier.empty() && consistent) {
      std::vector<std::size_t> next;
      for (auto x : frontier)
        for (std::size_t k = 0; k < gens.size() && consistent; ++k) {
          std::size_t y = group.mul(gens[k], x);
          std::vector<std::size_t> img(set_size);
          for (std::size_t a = 0; a < set_size; ++a) img[a] = perms[choice[k]][act[x][a]];
          if (act[y].empty()) {
            act[y] = std::move(img);
            next.push_back(y);
          } else if (act[y] != img) {
            consistent = false;
          }
        }
      frontier = std::move(next);
    }
    if (consistent) {
      GAction a = GAction::from_table_unchecked(group, act);
      if (a.check().ok()) out.push_back(std::move(a));
    }
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == perms.size()) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return out;
}

}  // namespace dgrep
