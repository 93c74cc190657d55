#include "dgrep/algebra.hpp"

#include "dgrep/error.hpp"
#include "dgrep/linalg.hpp"

namespace dgrep {

namespace {

Vector unit_vector(std::size_t n, std::size_t i, Field f) {
  Vector v(n, Scalar(0, f));
  v[i] = Scalar(1, f);
  return v;
}

std::string idx(std::size_t i, std::size_t j) { return std::to_string(i) + "," + std::to_string(j); }

}  // namespace

Vector FDAlgebra::basis_vector(std::size_t i) const {
  if (i >= dim()) throw Error("basis index out of range");
  return unit_vector(dim(), i, field);
}

Vector FDAlgebra::multiply(const Vector& a, const Vector& b) const {
  if (a.size() != dim() || b.size() != dim()) throw DimensionMismatch("algebra product: length mismatch");
  Vector out(dim(), Scalar(0, field));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      const Vector& p = structure[i][j];
      for (std::size_t k = 0; k < dim(); ++k)
        if (!p[k].is_zero()) out[k] += c * p[k];
    }
  }
  return out;
}

Report FDAlgebra::check() const {
  Report r;
  Check& shape = r.add("structure shape");
  if (structure.size() != dim() || unit.size() != dim()) Report::fail(shape, "table size");
  for (const auto& row : structure) {
    if (row.size() != dim()) Report::fail(shape, "row size");
    for (const auto& v : row)
      if (v.size() != dim()) Report::fail(shape, "coefficient vector length");
  }
  if (!shape.ok) return r;

  Check& assoc = r.add("associativity");
  for (std::size_t i = 0; i < dim() && assoc.ok; ++i)
    for (std::size_t j = 0; j < dim() && assoc.ok; ++j)
      for (std::size_t k = 0; k < dim(); ++k) {
        Vector lhs = multiply(structure[i][j], basis_vector(k));
        Vector rhs = multiply(basis_vector(i), structure[j][k]);
        if (lhs != rhs) {
          Report::fail(assoc, idx(i, j) + "," + std::to_string(k));
          break;
        }
      }
  Check& u = r.add("unit");
  for (std::size_t i = 0; i < dim(); ++i) {
    Vector e = basis_vector(i);
    if (multiply(unit, e) != e || multiply(e, unit) != e) {
      Report::fail(u, std::to_string(i));
      break;
    }
  }
  return r;
}

Matrix AlgebraModule::act(const Vector& element) const {
  if (element.size() != action.size()) throw DimensionMismatch("module action: element length mismatch");
  Matrix m(dim, dim, field);
  for (std::size_t k = 0; k < action.size(); ++k)
    if (!element[k].is_zero()) m += element[k] * action[k];
  return m;
}

Report AlgebraModule::check(const FDAlgebra& a) const {
  Report r;
  Check& shape = r.add("module shape");
  if (action.size() != a.dim() || field != a.field) Report::fail(shape, "action table size or field");
  for (const auto& m : action)
    if (m.rows() != dim || m.cols() != dim || m.field() != field) Report::fail(shape, "operator shape");
  if (!shape.ok) return r;

  Check& mult = r.add("structure constants");
  for (std::size_t i = 0; i < a.dim() && mult.ok; ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!(action[i] * action[j] == act(a.structure[i][j]))) {
        Report::fail(mult, idx(i, j));
        break;
      }
  Check& unit = r.add("unit acts as identity");
  if (!act(a.unit).is_identity()) Report::fail(unit, "unit");
  return r;
}

std::size_t envelope_r_index(const Digroup& d, std::size_t g) {
  if (g >= d.group_order()) throw Error("group index out of range");
  return g;
}

std::size_t envelope_m_index(const Digroup& d, std::size_t alpha, std::size_t g) {
  if (g >= d.group_order() || alpha >= d.halo_size()) throw Error("index out of range");
  return d.group_order() * (1 + alpha) + g;
}

FDAlgebra build_enveloping_algebra(const Digroup& d, Field f) {
  const FiniteGroup& G = d.group();
  std::size_t n = G.order(), m = d.halo_size();
  std::size_t dim = n * (1 + m);
  FDAlgebra a;
  a.field = f;
  for (std::size_t g = 0; g < n; ++g) a.basis_labels.push_back("R[" + std::to_string(g) + "]");
  for (std::size_t al = 0; al < m; ++al)
    for (std::size_t g = 0; g < n; ++g)
      a.basis_labels.push_back("M[" + std::to_string(al) + "," + std::to_string(g) + "]");

  // Decode a basis index into (is_M, alpha, g).
  struct Mono {
    bool m;
    std::size_t alpha, g;
  };
  auto decode = [&](std::size_t i) -> Mono {
    if (i < n) return {false, 0, i};
    return {true, i / n - 1, i % n};
  };
  a.structure.assign(dim, std::vector<Vector>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Mono x = decode(i), y = decode(j);
      std::size_t gh = G.mul(x.g, y.g);
      std::size_t k;
      if (!x.m && !y.m) k = envelope_r_index(d, gh);
      else if (!x.m) k = envelope_m_index(d, d.action().act(x.g, y.alpha), gh);
      else k = envelope_m_index(d, x.alpha, gh);
      a.structure[i][j] = unit_vector(dim, k, a.field);
    }
  a.unit = unit_vector(dim, envelope_r_index(d, G.identity()), a.field);
  return a;
}

Report check_relations(const FDAlgebra& a, const Digroup& d) {
  auto ell = [&](Element x) { return a.basis_vector(envelope_m_index(d, x.alpha, x.g)); };
  auto r = [&](Element x) { return a.basis_vector(envelope_r_index(d, x.g)); };
  Report rep;
  Check& up1 = rep.add("UP1 l_{x-|y} = l_x l_y");
  Check& up2 = rep.add("UP2 r_{x|-y} = r_x r_y");
  Check& up3 = rep.add("UP3 r_e = 1");
  Check& up4 = rep.add("UP4 r_x l_y = l_{x|-y}");
  Check& up5 = rep.add("UP5 l_x r_y = l_{x-|y}");
  auto els = d.elements();
  for (Element x : els)
    for (Element y : els) {
      std::string at = to_string(x) + "," + to_string(y);
      if (ell(d.dashv(x, y)) != a.multiply(ell(x), ell(y))) Report::fail(up1, at);
      if (r(d.vdash(x, y)) != a.multiply(r(x), r(y))) Report::fail(up2, at);
      if (a.multiply(r(x), ell(y)) != ell(d.vdash(x, y))) Report::fail(up4, at);
      if (a.multiply(ell(x), r(y)) != ell(d.dashv(x, y))) Report::fail(up5, at);
    }
  for (Element e : d.halo())
    if (r(e) != a.unit) Report::fail(up3, to_string(e));
  return rep;
}

AlgebraModule rep_to_module(const Representation& r) {
  Report rep = check_representation(r);
  if (const Check* bad = rep.first_failure())
    throw AxiomFailure("rep_to_module: representation fails " + bad->name + " at " + bad->counterexample);
  const Digroup& d = r.digroup();
  std::size_t n = d.group_order(), one = d.group().identity();
  AlgebraModule m{r.dim(), r.field(), std::vector<Matrix>(n * (1 + d.halo_size()))};
  for (std::size_t g = 0; g < n; ++g) {
    const Matrix& rho_g = r.rho({g, 0});
    m.action[envelope_r_index(d, g)] = rho_g;
    for (std::size_t a = 0; a < d.halo_size(); ++a) m.action[envelope_m_index(d, a, g)] = r.lambda({one, a}) * rho_g;
  }
  return m;
}

Representation module_to_rep(const AlgebraModule& m, const Digroup& d) {
  FDAlgebra a = build_enveloping_algebra(d, m.field);
  Report rep = m.check(a);
  if (const Check* bad = rep.first_failure())
    throw AxiomFailure("module_to_rep: module fails " + bad->name + " at " + bad->counterexample);
  std::vector<Matrix> lambda, rho;
  for (Element x : d.elements()) {
    lambda.push_back(m.action[envelope_m_index(d, x.alpha, x.g)]);
    rho.push_back(m.action[envelope_r_index(d, x.g)]);
  }
  return Representation(d, m.dim, std::move(lambda), std::move(rho), m.field);
}

FDAlgebra build_halo_algebra(std::size_t halo_size, Field f) {
  if (halo_size == 0) throw Error("halo algebra needs a nonempty halo");
  std::size_t dim = 1 + halo_size;
  FDAlgebra a;
  a.field = f;
  a.basis_labels.push_back("1");
  for (std::size_t al = 0; al < halo_size; ++al) a.basis_labels.push_back("eps[" + std::to_string(al) + "]");
  a.structure.assign(dim, std::vector<Vector>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      // 1 * x = x, x * 1 = x, eps_a eps_b = eps_a.
      std::size_t k = (i == 0) ? j : i;
      a.structure[i][j] = unit_vector(dim, k, f);
    }
  a.unit = unit_vector(dim, 0, f);
  return a;
}

Matrix tau_automorphism(std::size_t g, const GAction& action, Field f) {
  std::size_t dim = 1 + action.set_size();
  Matrix t(dim, dim, f);
  t(0, 0) = Scalar(1, f);
  for (std::size_t a = 0; a < action.set_size(); ++a) t(1 + action.act(g, a), 1 + a) = Scalar(1, f);
  return t;
}

bool is_algebra_automorphism(const FDAlgebra& a, const Matrix& t) {
  if (t.rows() != a.dim() || t.cols() != a.dim() || !t.inverse()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (t.apply(a.structure[i][j]) != a.multiply(t.column(i), t.column(j))) return false;
  return t.apply(a.unit) == a.unit;
}

DerivationExt derivation_ext1(const FDAlgebra& a, const AlgebraModule& q, const AlgebraModule& w) {
  if (q.action.size() != a.dim() || w.action.size() != a.dim())
    throw Error("derivation_ext1: modules are not over the given algebra");
  if (q.field != a.field || w.field != a.field) throw FieldMismatch("derivation_ext1: field mismatch");
  std::size_t n = a.dim(), dw = w.dim, dq = q.dim, block = dw * dq;
  Field f = a.field;
  auto col = [&](std::size_t k, std::size_t r, std::size_t s) { return k * block + r * dq + s; };

  // c(e_i e_j) - w(e_i) c(e_j) - c(e_i) q(e_j) = 0, entrywise.
  EchelonBuilder eqs(n * block, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& p = a.structure[i][j];
      const Matrix& wi = w.action[i];
      const Matrix& qj = q.action[j];
      for (std::size_t r = 0; r < dw; ++r)
        for (std::size_t s = 0; s < dq; ++s) {
          SparseRow row;
          for (std::size_t k = 0; k < n; ++k)
            if (!p[k].is_zero()) row.emplace_back(col(k, r, s), p[k]);
          for (std::size_t l = 0; l < dw; ++l)
            if (!wi(r, l).is_zero()) row.emplace_back(col(j, l, s), -wi(r, l));
          for (std::size_t l = 0; l < dq; ++l)
            if (!qj(l, s).is_zero()) row.emplace_back(col(i, r, l), -qj(l, s));
          eqs.add(row);
        }
    }
  for (std::size_t r = 0; r < dw; ++r)
    for (std::size_t s = 0; s < dq; ++s) {
      SparseRow row;
      for (std::size_t k = 0; k < n; ++k)
        if (!a.unit[k].is_zero()) row.emplace_back(col(k, r, s), a.unit[k]);
      eqs.add(row);
    }
  auto derivations = eqs.kernel_basis();

  // Inner derivations c_t(e_i) = w(e_i) t - t q(e_i) over elementary t.
  EchelonBuilder inner(n * block, f);
  for (std::size_t r = 0; r < dw; ++r)
    for (std::size_t s = 0; s < dq; ++s) {
      Matrix t(dw, dq, f);
      t(r, s) = Scalar(1, f);
      Vector v;
      v.reserve(n * block);
      for (std::size_t i = 0; i < n; ++i) {
        Matrix ci = w.action[i] * t - t * q.action[i];
        v.insert(v.end(), ci.flatten().begin(), ci.flatten().end());
      }
      inner.add(v);
    }

  DerivationExt out;
  out.derivation_dim = derivations.size();
  out.inner_dim = inner.rank();
  EchelonBuilder span = inner;
  for (const auto& d : derivations)
    if (span.add(d)) {
      std::vector<Matrix> rep;
      for (std::size_t k = 0; k < n; ++k)
        rep.push_back(Matrix::unflatten(Vector(d.begin() + static_cast<std::ptrdiff_t>(k * block),
                                               d.begin() + static_cast<std::ptrdiff_t>((k + 1) * block)),
                                        dw, dq, f));
      out.representatives.push_back(std::move(rep));
    }
  out.dim = out.representatives.size();
  if (out.dim != out.derivation_dim - out.inner_dim)
    throw Error("derivation_ext1: inner derivations are not contained in the derivation space");
  return out;
}

}  // namespace dgrep
