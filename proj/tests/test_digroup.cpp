#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dgrep/digroup.hpp"
#include "dgrep/error.hpp"
#include "dgrep/generator.hpp"

using namespace dgrep;

namespace {

// Counts maps G -> Sym(n) satisfying the action laws, by trying every assignment.
std::size_t brute_action_count(const FiniteGroup& g, std::size_t n) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::size_t count = 0;
  std::vector<std::size_t> choice(g.order(), 0);
  while (true) {
    bool ok = perms[choice[g.identity()]] == perms[0];
    for (std::size_t a = 0; a < g.order() && ok; ++a)
      for (std::size_t b = 0; b < g.order() && ok; ++b)
        for (std::size_t x = 0; x < n && ok; ++x)
          ok = perms[choice[g.mul(a, b)]][x] == perms[choice[a]][perms[choice[b]][x]];
    count += ok;
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == perms.size()) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  return count;
}

}  // namespace

TEST_CASE("named groups satisfy the group axioms") {
  for (std::size_t n = 1; n <= 6; ++n) CHECK(FiniteGroup::cyclic(n).check().ok());
  for (std::size_t n = 1; n <= 4; ++n) CHECK(FiniteGroup::symmetric(n).check().ok());
  CHECK(FiniteGroup::symmetric(3).order() == 6);
  CHECK(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)).check().ok());
  CHECK_THROWS(FiniteGroup::symmetric(5));
}

TEST_CASE("broken tables are rejected") {
  Table not_assoc = {{0, 1, 2}, {1, 0, 2}, {2, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_table(not_assoc), AxiomFailure);
  CHECK_FALSE(FiniteGroup::from_table_unchecked(not_assoc).check().ok());
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  CHECK_THROWS_AS(GAction::from_table(c2, {{1, 0}, {1, 0}}), AxiomFailure);
  CHECK_FALSE(GAction::from_table_unchecked(c2, {{0, 0}, {1, 0}}).check().ok());
}

TEST_CASE("all_actions matches a brute-force count") {
  struct Case {
    FiniteGroup g;
    std::size_t n, expected;
  };
  std::vector<Case> cases = {{FiniteGroup::cyclic(2), 2, 2}, {FiniteGroup::cyclic(2), 3, 4},
                             {FiniteGroup::cyclic(3), 3, 3}, {FiniteGroup::symmetric(3), 3, 10},
                             {FiniteGroup::cyclic(6), 3, 6},  {FiniteGroup::cyclic(4), 1, 1}};
  for (const auto& c : cases) {
    auto acts = all_actions(c.g, c.n);
    CHECK(acts.size() == c.expected);
    CHECK(brute_action_count(c.g, c.n) == c.expected);
    for (const auto& a : acts) CHECK(a.check().ok());
  }
}

TEST_CASE("product model operations") {
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  Digroup d(GAction::from_table(c2, {{0, 1}, {1, 0}}));
  CHECK(d.size() == 4);
  Element x{1, 0}, y{1, 1};
  CHECK(d.vdash(x, y) == Element{0, 0});  // (s,e0) |- (s,e1) = (1, s.e1)
  CHECK(d.dashv(x, y) == Element{0, 0});
  CHECK(d.dashv(y, x) == Element{0, 1});
  CHECK(d.halo() == std::vector<Element>{{0, 0}, {0, 1}});
  CHECK(d.is_bar_unit({0, 1}));
  CHECK_FALSE(d.is_bar_unit({1, 1}));
  CHECK(d.sharp(x) == Element{1, 1});
  for (std::size_t i = 0; i < d.size(); ++i) CHECK(d.index(d.element(i)) == i);
  CHECK_THROWS(d.index({2, 0}));
}

TEST_CASE("inverses at a bar-unit") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  for (const auto& act : all_actions(s3, 3)) {
    Digroup d(act);
    for (Element e : d.halo())
      for (Element x : d.elements()) {
        auto inv = d.inverses_at(x, e);
        CHECK(d.dashv(inv.left, x) == e);
        CHECK(d.vdash(x, inv.right) == e);
      }
    CHECK_THROWS(d.inverses_at({0, 0}, {1, 0}));
  }
}

TEST_CASE("random digroups satisfy every axiom") {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t order = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    std::size_t halo = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    Digroup d = random_digroup(rng, random_group(rng, order), halo);
    CHECK(d.size() == order * halo);
    Report r = check_axioms(d);
    CHECK_MESSAGE(r.ok(), (r.first_failure() ? r.first_failure()->name : ""));
    for (Element x : d.elements()) {
      CHECK(d.is_bar_unit(d.vdash(x, d.sharp(x))));
      CHECK(d.is_bar_unit(d.vdash(d.sharp(x), x)));
    }
  }
}

TEST_CASE("axiom check catches a corrupted group table") {
  // Z/3 with one product swapped: no longer associative.
  Table bad = {{0, 1, 2}, {1, 0, 0}, {2, 0, 1}};
  Digroup d(GAction::from_table_unchecked(FiniteGroup::from_table_unchecked(bad), {{0}, {0}, {0}}));
  CHECK_FALSE(check_axioms(d).ok());
}

TEST_CASE("right group at each bar-unit") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  for (const auto& act : all_actions(s3, 3)) {
    Digroup d(act);
    for (Element e : d.halo()) {
      RightGroup rg = right_group_at(d, e);
      CHECK(rg.verification.ok());
      CHECK(rg.unit == e);
      REQUIRE(rg.elements.size() == s3.order());
      for (std::size_t g = 0; g < s3.order(); ++g) {
        CHECK(rg.elements[g] == Element{s3.inv(g), act.act(s3.inv(g), e.alpha)});
        CHECK(d.vdash(rg.elements[g], d.element(0)).g == s3.inv(g));
      }
      for (std::size_t a = 0; a < s3.order(); ++a)
        for (std::size_t b = 0; b < s3.order(); ++b)
          CHECK(rg.elements[rg.table[a][b]] == d.vdash(rg.elements[a], rg.elements[b]));
    }
  }
}
