#include "dgrep/representation.hpp"

#include "dgrep/error.hpp"

namespace dgrep {

namespace {

std::string pair_str(Element x, Element y) { return "x=" + to_string(x) + " y=" + to_string(y); }

void check_ops(const std::vector<Matrix>& ops, std::size_t count, std::size_t dim, Field f, const char* what) {
  if (ops.size() != count)
    throw DimensionMismatch(std::string(what) + ": expected " + std::to_string(count) + " operators, got " +
                            std::to_string(ops.size()));
  for (const auto& m : ops) {
    if (m.rows() != dim || m.cols() != dim)
      throw DimensionMismatch(std::string(what) + ": operator is not " + std::to_string(dim) + "x" + std::to_string(dim));
    if (m.field() != f) throw FieldMismatch(std::string(what) + ": operator field mismatch");
  }
}

void check_band(const std::vector<Matrix>& eps, Check& band) {
  for (std::size_t a = 0; a < eps.size(); ++a)
    for (std::size_t b = 0; b < eps.size(); ++b)
      if (!(eps[a] * eps[b] == eps[a])) {
        Report::fail(band, "a=" + std::to_string(a) + " b=" + std::to_string(b));
        return;
      }
}

void require_same_digroup(const Digroup& a, const Digroup& b) {
  if (!(a == b)) throw Error("representations live on different digroups");
}

}  // namespace

Representation::Representation(Digroup d, std::size_t dim, std::vector<Matrix> lambda, std::vector<Matrix> rho, Field f)
    : digroup_(std::move(d)), dim_(dim), field_(f), lambda_(std::move(lambda)), rho_(std::move(rho)) {
  check_ops(lambda_, digroup_.size(), dim_, field_, "lambda");
  check_ops(rho_, digroup_.size(), dim_, field_, "rho");
}

Representation Representation::zero(const Digroup& d, Field f) {
  return identity(d, 0, f);
}

Representation Representation::identity(const Digroup& d, std::size_t dim, Field f) {
  std::vector<Matrix> ops(d.size(), Matrix::identity(dim, f));
  return Representation(d, dim, ops, ops, f);
}

Report check_representation(const Representation& r) {
  const Digroup& d = r.digroup();
  Report rep;
  Check& r1 = rep.add("R1 lambda_{x-|y} = lambda_x lambda_y");
  Check& r2 = rep.add("R2 rho_{x|-y} = rho_x rho_y");
  Check& r3 = rep.add("R3 rho_e = id");
  Check& r4 = rep.add("R4 rho_x lambda_y = lambda_{x|-y}");
  Check& r5 = rep.add("R5 lambda_x rho_y = lambda_{x-|y}");
  Check& inv = rep.add("rho invertible");
  auto els = d.elements();
  for (Element x : els)
    for (Element y : els) {
      if (r1.ok && !(r.lambda(d.dashv(x, y)) == r.lambda(x) * r.lambda(y))) Report::fail(r1, pair_str(x, y));
      if (r2.ok && !(r.rho(d.vdash(x, y)) == r.rho(x) * r.rho(y))) Report::fail(r2, pair_str(x, y));
      if (r4.ok && !(r.rho(x) * r.lambda(y) == r.lambda(d.vdash(x, y)))) Report::fail(r4, pair_str(x, y));
      if (r5.ok && !(r.lambda(x) * r.rho(y) == r.lambda(d.dashv(x, y)))) Report::fail(r5, pair_str(x, y));
    }
  for (Element e : d.halo())
    if (!r.rho(e).is_identity()) Report::fail(r3, "e=" + to_string(e));
  for (Element x : els)
    if (!r.rho(x).inverse()) {
      Report::fail(inv, "x=" + to_string(x));
      break;
    }
  return rep;
}

std::vector<Matrix> rho_group_form(const Representation& r) {
  const Digroup& d = r.digroup();
  std::vector<Matrix> out;
  for (std::size_t g = 0; g < d.group_order(); ++g) {
    const Matrix& base = r.rho({g, 0});
    for (std::size_t a = 1; a < d.halo_size(); ++a)
      if (!(r.rho({g, a}) == base))
        throw AxiomFailure("rho_(g,alpha) depends on alpha at " + to_string({g, a}));
    out.push_back(base);
  }
  const FiniteGroup& G = d.group();
  for (std::size_t g = 0; g < G.order(); ++g)
    for (std::size_t h = 0; h < G.order(); ++h)
      if (!(out[G.mul(g, h)] == out[g] * out[h]))
        throw AxiomFailure("g -> rho_g is not multiplicative at g=" + std::to_string(g) + " h=" + std::to_string(h));
  return out;
}

std::vector<Matrix> lambda_factorization(const Representation& r) {
  const Digroup& d = r.digroup();
  std::size_t one = d.group().identity();
  std::vector<Matrix> left;
  for (std::size_t a = 0; a < d.halo_size(); ++a) left.push_back(r.lambda({one, a}));
  for (Element x : d.elements())
    if (!(r.lambda(x) == left[x.alpha] * r.rho({x.g, 0})))
      throw AxiomFailure("lambda does not factor as L_alpha rho_g at " + to_string(x));
  return left;
}

bool is_subrepresentation(const Representation& r, const std::vector<Vector>& basis) {
  Subspace w = span_basis(basis, r.dim(), r.field());
  for (const auto& v : w.basis) {
    for (const auto& op : r.lambdas())
      if (!contains(w, op.apply(v))) return false;
    for (const auto& op : r.rhos())
      if (!contains(w, op.apply(v))) return false;
  }
  return true;
}

SubQuotient sub_quotient(const Representation& r, const std::vector<Vector>& basis) {
  std::size_t n = r.dim();
  Field f = r.field();
  Subspace w = span_basis(basis, n, f);
  if (w.dim() != basis.size()) throw Error("sub_quotient: basis vectors are linearly dependent");
  if (!is_subrepresentation(r, basis)) throw AxiomFailure("sub_quotient: span is not a subrepresentation");

  Matrix iota = Matrix::from_columns(basis, n, f);
  std::vector<bool> is_pivot(n, false);
  std::vector<std::size_t> pivots;
  for (const auto& row : w.basis)
    for (std::size_t c = 0; c < n; ++c)
      if (!row[c].is_zero()) {
        is_pivot[c] = true;
        pivots.push_back(c);
        break;
      }
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);

  std::size_t q = free.size();
  Matrix pi(q, n, f), section(n, q, f);
  for (std::size_t k = 0; k < q; ++k) {
    pi(k, free[k]) = Scalar(1, f);
    for (std::size_t i = 0; i < pivots.size(); ++i) pi(k, pivots[i]) = -w.basis[i][free[k]];
    section(free[k], k) = Scalar(1, f);
  }

  std::vector<Matrix> wl, wr, ql, qr;
  auto restrict = [&](const Matrix& op) {
    auto x = solve(iota, op * iota);
    if (!x) throw AxiomFailure("sub_quotient: operator does not preserve the subspace");
    return *x;
  };
  for (std::size_t i = 0; i < r.digroup().size(); ++i) {
    wl.push_back(restrict(r.lambdas()[i]));
    wr.push_back(restrict(r.rhos()[i]));
    ql.push_back(pi * r.lambdas()[i] * section);
    qr.push_back(pi * r.rhos()[i] * section);
  }
  return {Representation(r.digroup(), basis.size(), std::move(wl), std::move(wr), f),
          Representation(r.digroup(), q, std::move(ql), std::move(qr), f), std::move(iota), std::move(pi)};
}

Representation direct_sum(const Representation& a, const Representation& b) {
  require_same_digroup(a.digroup(), b.digroup());
  if (a.field() != b.field()) throw FieldMismatch("direct_sum: field mismatch");
  std::vector<Matrix> l, r;
  for (std::size_t i = 0; i < a.digroup().size(); ++i) {
    l.push_back(block_diagonal(a.lambdas()[i], b.lambdas()[i]));
    r.push_back(block_diagonal(a.rhos()[i], b.rhos()[i]));
  }
  return Representation(a.digroup(), a.dim() + b.dim(), std::move(l), std::move(r), a.field());
}

std::vector<Matrix> hom_rep(const Representation& a, const Representation& b) {
  require_same_digroup(a.digroup(), b.digroup());
  if (a.field() != b.field()) throw FieldMismatch("hom_rep: field mismatch");
  std::vector<std::pair<Matrix, Matrix>> pairs;
  for (std::size_t i = 0; i < a.digroup().size(); ++i) {
    pairs.emplace_back(a.lambdas()[i], b.lambdas()[i]);
    pairs.emplace_back(a.rhos()[i], b.rhos()[i]);
  }
  return intertwiner_basis(pairs, b.dim(), a.dim(), a.field());
}

Report BEModule::check() const {
  Report r;
  Check& shape = r.add("shapes");
  for (const auto& e : epsilon)
    if (e.rows() != dim || e.cols() != dim || e.field() != field) Report::fail(shape, "epsilon operator shape");
  Check& band = r.add("eps_a eps_b = eps_a");
  if (shape.ok) check_band(epsilon, band);
  return r;
}

Report SemilinearObject::check() const {
  Report r;
  Check& shape = r.add("shapes");
  if (epsilon.size() != digroup.halo_size() || t.size() != digroup.group_order()) Report::fail(shape, "table sizes");
  for (const auto& m : epsilon)
    if (m.rows() != dim || m.cols() != dim || m.field() != field) Report::fail(shape, "epsilon operator shape");
  for (const auto& m : t)
    if (m.rows() != dim || m.cols() != dim || m.field() != field) Report::fail(shape, "t operator shape");
  if (!shape.ok) return r;

  check_band(epsilon, r.add("eps_a eps_b = eps_a"));

  const FiniteGroup& G = digroup.group();
  Check& inv = r.add("t invertible");
  for (std::size_t g = 0; g < t.size(); ++g)
    if (!t[g].inverse()) Report::fail(inv, "g=" + std::to_string(g));
  Check& c1 = r.add("C1 t_1 = id");
  if (!t[G.identity()].is_identity()) Report::fail(c1, "t_1");
  Check& c2 = r.add("C2 t_g t_h = t_gh");
  for (std::size_t g = 0; g < G.order(); ++g)
    for (std::size_t h = 0; h < G.order(); ++h)
      if (!(t[g] * t[h] == t[G.mul(g, h)])) Report::fail(c2, "g=" + std::to_string(g) + " h=" + std::to_string(h));
  Check& c3 = r.add("C3 t_g eps_a = eps_{g.a} t_g");
  for (std::size_t g = 0; g < G.order(); ++g)
    for (std::size_t a = 0; a < epsilon.size(); ++a)
      if (!(t[g] * epsilon[a] == epsilon[digroup.action().act(g, a)] * t[g]))
        Report::fail(c3, "g=" + std::to_string(g) + " a=" + std::to_string(a));
  return r;
}

SemilinearObject to_semilinear(const Representation& r) {
  const Digroup& d = r.digroup();
  SemilinearObject m{d, r.dim(), r.field(), {}, {}};
  for (std::size_t a = 0; a < d.halo_size(); ++a) m.epsilon.push_back(r.lambda({d.group().identity(), a}));
  for (std::size_t g = 0; g < d.group_order(); ++g) m.t.push_back(r.rho({g, 0}));
  return m;
}

Representation from_semilinear(const SemilinearObject& m) {
  Report r = m.check();
  if (const Check* bad = r.first_failure())
    throw AxiomFailure("semilinear object fails " + bad->name + " at " + bad->counterexample);
  std::vector<Matrix> lambda, rho;
  for (Element x : m.digroup.elements()) {
    rho.push_back(m.t[x.g]);
    lambda.push_back(m.epsilon[x.alpha] * m.t[x.g]);
  }
  return Representation(m.digroup, m.dim, std::move(lambda), std::move(rho), m.field);
}

}  // namespace dgrep
