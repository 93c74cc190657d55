#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgrep/commands.hpp"
#include "dgrep/error.hpp"
#include "dgrep/halo.hpp"
#include "instances.hpp"

using namespace dgrep;

namespace {

Matrix one(long x) { return Matrix::from_ints({{x}}); }

struct Example {
  SemilinearObject q, w;
  Representation rq, rw;
};

Example example() {
  Representation v = nonsplit_example();
  SubQuotient sq = sub_quotient(v, nonsplit_example_w_basis());
  return {to_semilinear(sq.quotient), to_semilinear(sq.sub), sq.quotient, sq.sub};
}

Digroup swap_digroup() { return Digroup(GAction::from_table(FiniteGroup::cyclic(2), {{0, 1}, {1, 0}})); }

}  // namespace

TEST_CASE("Hom over B_E") {
  Example e = example();
  CHECK(e.q.epsilon == std::vector<Matrix>{one(1), one(1)});
  CHECK(e.w.epsilon == std::vector<Matrix>{one(0), one(0)});
  CHECK(hom_BE(e.q.underlying(), e.w.underlying()).empty());
  HomSpaceWithAction h = g_action_on_hom({}, e.q, e.w);
  CHECK(h.verification.ok());
  CHECK(invariants(h).empty());
  CHECK(hom_rep(e.rq, e.rw).empty());

  BEModule id3{3, Field{}, {Matrix::identity(3), Matrix::identity(3)}};
  BEModule id2{2, Field{}, {Matrix::identity(2), Matrix::identity(2)}};
  CHECK(hom_BE(id3, id2).size() == 6);
  BEModule short_halo{2, Field{}, {Matrix::identity(2)}};
  CHECK_THROWS(hom_BE(id3, short_halo));
}

TEST_CASE("G-action on Hom and its invariants") {
  Digroup d = Digroup::trivial_action(FiniteGroup::cyclic(3), 2);
  Representation t = Representation::identity(d, 2);
  SemilinearObject so = to_semilinear(t);
  HomSpaceWithAction h = g_action_on_hom(hom_BE(so.underlying(), so.underlying()), so, so);
  CHECK(h.verification.ok());
  for (const auto& g : h.g_action) CHECK(g.is_identity());
  CHECK(invariants(h).size() == 4);

  Digroup triv = Digroup::trivial_action(FiniteGroup::trivial(), 2);
  Rng rng(4);
  SemilinearObject a = random_semilinear(rng, triv, 2), b = random_semilinear(rng, triv, 3);
  HomSpaceWithAction hb = g_action_on_hom(hom_BE(a.underlying(), b.underlying()), a, b);
  CHECK(invariants(hb).size() == hb.basis.size());
}

TEST_CASE("G-action laws under the swap action") {
  Digroup d = swap_digroup();
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    SemilinearObject q = random_semilinear(rng, d, std::uniform_int_distribution<std::size_t>(1, 3)(rng));
    SemilinearObject w = random_semilinear(rng, d, std::uniform_int_distribution<std::size_t>(1, 3)(rng));
    HomSpaceWithAction h = g_action_on_hom(hom_BE(q.underlying(), w.underlying()), q, w);
    CHECK(h.verification.ok());
    CHECK(h.g_action[0].is_identity());
    CHECK((h.g_action[1] * h.g_action[1]).is_identity());
    CHECK(invariants(h).size() == hom_rep(from_semilinear(q), from_semilinear(w)).size());
  }
}

TEST_CASE("Ext^1 over B_E") {
  Example e = example();
  BEExtResult r = ext1_BE(e.q, e.w);
  CHECK(r.dim_z == 2);
  CHECK(r.dim_b == 1);
  CHECK(r.dim_ext == 1);
  CHECK(r.invariant_dim == 1);
  CHECK(r.verification.ok());
  REQUIRE(r.g_action_on_classes.size() == 2);
  for (const auto& g : r.g_action_on_classes) CHECK(g.is_identity());

  Digroup d = Digroup::trivial_action(FiniteGroup::cyclic(2), 2);
  SemilinearObject id2 = to_semilinear(Representation::identity(d, 2));
  SemilinearObject id3 = to_semilinear(Representation::identity(d, 3));
  BEExtResult idr = ext1_BE(id2, id3);
  CHECK(idr.dim_z == 0);
  CHECK(idr.dim_ext == 0);
  CHECK(ext1_BE(e.q, to_semilinear(Representation::zero(d))).dim_ext == 0);
}

TEST_CASE("collapse on the worked example and the trivial digroup") {
  Example e = example();
  CollapseReport c = verify_collapse(e.rq, e.rw);
  CHECK(c.collapse_ok);
  CHECK(c.report.ok());
  CHECK(c.ext1_be_invariant_dim == 1);
  CHECK(c.ext1_rep_dim == 1);
  CHECK(c.hom_be_dim == 0);
  Digroup tiny = Digroup::trivial_action(FiniteGroup::trivial(), 1);
  Representation t = Representation::identity(tiny, 1);
  CollapseReport ct = verify_collapse(t, t);
  CHECK(ct.collapse_ok);
  CHECK(ct.ext1_rep_dim == 0);
  CHECK(ct.ext1_be_invariant_dim == 0);
  CHECK_THROWS_AS(verify_collapse(nonsplit_example(Field::prime(2)), nonsplit_example(Field::prime(2))),
                  HypothesisViolation);
}

TEST_CASE("collapse and invariant Hom on random instances") {
  for (std::uint64_t seed = 500; seed < 620; ++seed) {
    inst::Pair p = inst::random_pair(seed);
    CollapseReport c = verify_collapse(p.q, p.w);
    CHECK_MESSAGE(c.collapse_ok, "seed " << seed);
    CHECK(c.hom_be_invariant_dim == c.hom_rep_dim);
    CHECK(c.ext1_be_invariant_dim == c.ext1_rep_dim);
    BEExtResult r = ext1_BE(to_semilinear(p.q), to_semilinear(p.w));
    CHECK(r.verification.ok());
    CHECK(r.dim_ext == r.dim_z - r.dim_b);
  }
}

TEST_CASE("induction functor") {
  Digroup triv = Digroup::trivial_action(FiniteGroup::trivial(), 2);
  BEModule m{2, Field{}, {Matrix::from_ints({{1, 0}, {1, 0}}), Matrix::from_ints({{1, 0}, {0, 0}})}};
  REQUIRE(m.check().ok());
  SemilinearObject l1 = induction_L(m, triv);
  CHECK(l1.underlying() == m);
  CHECK(l1.t[0].is_identity());

  Example e = example();
  Digroup d = Digroup::trivial_action(FiniteGroup::cyclic(2), 2);
  SemilinearObject lw = induction_L(e.w.underlying(), d);
  CHECK(lw.dim == 2);
  CHECK(lw.check().ok());
  CHECK(lw.t[1] == Matrix::from_ints({{0, 1}, {1, 0}}));

  // eps0 = 1, eps1 = 0 on a line violates eps0 eps1 = eps0, so the twist is checked on m instead.
  CHECK_THROWS(induction_L(BEModule{1, Field{}, {one(1), one(0)}}, swap_digroup()));
  SemilinearObject lp = induction_L(m, swap_digroup());
  CHECK(lp.check().ok());
  CHECK(lp.epsilon[0] == block_diagonal(m.epsilon[0], m.epsilon[1]));
  CHECK(lp.epsilon[1] == block_diagonal(m.epsilon[1], m.epsilon[0]));
  Matrix swap_blocks(4, 4);
  swap_blocks.set_block(0, 2, Matrix::identity(2));
  swap_blocks.set_block(2, 0, Matrix::identity(2));
  CHECK(lp.t[1] == swap_blocks);

  BEModule bad{1, Field{}, {one(2), one(0)}};
  CHECK_THROWS(induction_L(bad, swap_digroup()));
}

TEST_CASE("induction/forgetful adjunction") {
  Example e = example();
  AdjunctionReport r = verify_adjunction(e.w.underlying(), e.q);
  CHECK(r.report.ok());
  CHECK(r.lhs_dim == r.rhs_dim);
  CHECK(r.rhs_dim == 0);
  AdjunctionReport back = verify_adjunction(e.q.underlying(), e.q);
  CHECK(back.report.ok());
  CHECK(back.lhs_dim == 1);

  Digroup triv = Digroup::trivial_action(FiniteGroup::trivial(), 2);
  Rng rng(8);
  SemilinearObject n = random_semilinear(rng, triv, 3);
  AdjunctionReport same = verify_adjunction(random_semilinear(rng, triv, 2).underlying(), n);
  CHECK(same.report.ok());

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    inst::Pair p = inst::random_pair(seed + 7000);
    Rng r2(seed);
    BEModule m = random_semilinear(r2, p.d, 2).underlying();
    SemilinearObject target = random_semilinear(r2, p.d, 2);
    AdjunctionReport a = verify_adjunction(m, target);
    CHECK_MESSAGE(a.report.ok(), "seed " << seed);
  }
}
