#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgrep/commands.hpp"
#include "dgrep/error.hpp"
#include "dgrep/ext.hpp"
#include "dgrep/generator.hpp"
#include "dgrep/representation.hpp"
#include "instances.hpp"

using namespace dgrep;

namespace {

const Matrix P0 = Matrix::from_ints({{1, 0}, {0, 0}});
const Matrix P1 = Matrix::from_ints({{1, 0}, {1, 0}});
const Matrix I2 = Matrix::identity(2);

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(Scalar(x));
  return v;
}

}  // namespace

TEST_CASE("worked example satisfies the axioms and reduces as expected") {
  Representation v = nonsplit_example();
  CHECK(check_representation(v).ok());
  auto rho = rho_group_form(v);
  REQUIRE(rho.size() == 2);
  CHECK(rho[0] == I2);
  CHECK(rho[1] == Scalar(-1) * I2);
  auto left = lambda_factorization(v);
  CHECK(left[0] == P0);
  CHECK(left[1] == P1);
  CHECK(v.lambda({1, 1}) == Scalar(-1) * P1);
  SemilinearObject so = to_semilinear(v);
  CHECK(so.check().ok());
  CHECK(so.epsilon == std::vector<Matrix>{P0, P1});
  CHECK(so.t[1] == Scalar(-1) * I2);
  CHECK(from_semilinear(so) == v);
}

TEST_CASE("identity operators form a representation") {
  Digroup d(all_actions(FiniteGroup::symmetric(3), 3).back());
  Representation r = Representation::identity(d, 3);
  CHECK(check_representation(r).ok());
  for (const auto& m : rho_group_form(r)) CHECK(m.is_identity());
}

TEST_CASE("fault injection in lambda breaks R1") {
  Representation v = nonsplit_example();
  auto l = v.lambdas();
  const Digroup& d = v.digroup();
  l[d.index({0, 1})](0, 1) += Scalar(1);
  Representation bad(d, 2, l, v.rhos());
  Report r = check_representation(bad);
  REQUIRE(r.find("R1 lambda_{x-|y} = lambda_x lambda_y"));
  CHECK_FALSE(r.find("R1 lambda_{x-|y} = lambda_x lambda_y")->ok);
  CHECK_FALSE(r.find("R1 lambda_{x-|y} = lambda_x lambda_y")->counterexample.empty());
}

TEST_CASE("singular rho is reported") {
  Representation v = nonsplit_example();
  std::vector<Matrix> r(v.rhos().size(), Matrix(2, 2));
  Representation bad(v.digroup(), 2, v.lambdas(), r);
  Report rep = check_representation(bad);
  CHECK_FALSE(rep.find("rho invertible")->ok);
  CHECK_FALSE(rep.find("R3 rho_e = id")->ok);
}

TEST_CASE("stable subspaces of the worked example") {
  Representation v = nonsplit_example();
  CHECK(is_subrepresentation(v, {vec({0, 1})}));
  CHECK_FALSE(is_subrepresentation(v, {vec({1, 1})}));
  CHECK(is_subrepresentation(v, {vec({1, 0}), vec({0, 1})}));
  CHECK_THROWS_AS(sub_quotient(v, {vec({1, 1})}), AxiomFailure);
  CHECK_THROWS(sub_quotient(v, {vec({0, 1}), vec({0, 2})}));
}

TEST_CASE("sub_quotient of the worked example") {
  Representation v = nonsplit_example();
  SubQuotient sq = sub_quotient(v, {vec({0, 1})});
  CHECK(check_representation(sq.sub).ok());
  CHECK(check_representation(sq.quotient).ok());
  for (Element x : v.digroup().elements()) {
    Matrix chi = Matrix::from_ints({{x.g == 0 ? 1 : -1}});
    CHECK(sq.sub.lambda(x).is_zero());
    CHECK(sq.sub.rho(x) == chi);
    CHECK(sq.quotient.lambda(x) == chi);
    CHECK(sq.quotient.rho(x) == chi);
  }
  CHECK((sq.pi * sq.iota).is_zero());
  CHECK(hom_rep(sq.sub, sq.sub).size() == 1);
  CHECK(hom_rep(sq.quotient, sq.sub).empty());

  SubQuotient full = sub_quotient(v, {vec({1, 0}), vec({0, 1})});
  CHECK(full.quotient.dim() == 0);
  SubQuotient none = sub_quotient(v, {});
  CHECK(none.sub.dim() == 0);
  CHECK(none.quotient == v);
}

TEST_CASE("direct sums") {
  Representation v = nonsplit_example();
  SubQuotient sq = sub_quotient(v, {vec({0, 1})});
  Representation s = direct_sum(sq.sub, sq.quotient);
  CHECK(check_representation(s).ok());
  CHECK(s.dim() == 2);
  CHECK_FALSE(s == v);
  CHECK(is_split(ses_from_subspace(s, {vec({1, 0})})).split);
  CHECK(direct_sum(v, Representation::zero(v.digroup())) == v);
  Digroup other = Digroup::trivial_action(FiniteGroup::cyclic(3), 2);
  CHECK_THROWS(direct_sum(v, Representation::identity(other, 1)));
}

TEST_CASE("random representations: reductions and round trips") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    inst::Pair p = inst::random_pair(seed);
    for (const Representation* r : {&p.q, &p.w}) {
      REQUIRE(check_representation(*r).ok());
      const FiniteGroup& g = p.d.group();
      auto rho = rho_group_form(*r);
      auto left = lambda_factorization(*r);
      for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b) CHECK(rho[g.mul(a, b)] == rho[a] * rho[b]);
      for (Element x : p.d.elements()) CHECK(r->lambda(x) == left[x.alpha] * rho[x.g]);
      SemilinearObject so = to_semilinear(*r);
      CHECK(so.check().ok());
      CHECK(from_semilinear(so) == *r);
      for (const auto& f : hom_rep(*r, *r))
        for (Element x : p.d.elements()) CHECK(f * r->lambda(x) == r->lambda(x) * f);
      auto homs = hom_rep(*r, *r);
      Matrix id = Matrix::identity(r->dim());
      std::vector<Vector> flat;
      for (const auto& f : homs) flat.push_back(f.flatten());
      bool has_identity = r->dim() == 0 || contains(span_basis(flat, r->dim() * r->dim()), id.flatten());
      CHECK(has_identity);
    }
  }
}

TEST_CASE("invalid semilinear data is refused") {
  Representation v = nonsplit_example();
  SemilinearObject so = to_semilinear(v);
  so.t[1] = Matrix::from_ints({{0, 1}, {1, 0}});  // breaks C3
  CHECK_FALSE(so.check().ok());
  CHECK_THROWS_AS(from_semilinear(so), AxiomFailure);
  BEModule m{2, Field{}, {I2, Matrix::from_ints({{0, 1}, {0, 0}})}};
  CHECK_FALSE(m.check().ok());
}
