#include "dgrep/ext.hpp"

#include "dgrep/error.hpp"
#include "dgrep/linalg.hpp"

namespace dgrep {

namespace {

void require_compatible(const Representation& q, const Representation& w) {
  if (!(q.digroup() == w.digroup())) throw Error("representations live on different digroups");
  if (q.field() != w.field()) throw FieldMismatch("representations over different fields");
}

std::string at2(Element x, Element y) { return "x=" + to_string(x) + " y=" + to_string(y); }

bool intertwines(const Matrix& m, const std::vector<Matrix>& src, const std::vector<Matrix>& tgt) {
  for (std::size_t i = 0; i < src.size(); ++i)
    if (!(m * src[i] == tgt[i] * m)) return false;
  return true;
}

bool in_hom_rho(const Matrix& t, const Representation& q, const Representation& w) {
  return intertwines(t, q.rhos(), w.rhos());
}

// Columns are the flattened coboundaries of the hom_rho basis.
Matrix coboundary_matrix(const std::vector<Matrix>& basis, const Representation& q, const Representation& w) {
  std::size_t n = q.digroup().size() * w.dim() * q.dim();
  std::vector<Vector> cols;
  for (const auto& t : basis) cols.push_back(flatten_family(coboundary(t, q, w)));
  return Matrix::from_columns(cols, n, q.field());
}

}  // namespace

Report check_ses(const ShortExactSeq& s) {
  Report r;
  Check& shape = r.add("shapes");
  std::size_t dw = s.w.dim(), dv = s.v.dim(), dq = s.q.dim();
  if (s.iota.rows() != dv || s.iota.cols() != dw || s.pi.rows() != dq || s.pi.cols() != dv)
    Report::fail(shape, "iota or pi has the wrong shape");
  if (!(s.w.digroup() == s.v.digroup()) || !(s.q.digroup() == s.v.digroup())) Report::fail(shape, "digroup mismatch");
  if (!shape.ok) return r;

  Check& inj = r.add("iota injective");
  if (rank(s.iota) != dw) Report::fail(inj, "rank " + std::to_string(rank(s.iota)));
  Check& surj = r.add("pi surjective");
  if (rank(s.pi) != dq) Report::fail(surj, "rank " + std::to_string(rank(s.pi)));
  Check& comp = r.add("pi iota = 0");
  if (!(s.pi * s.iota).is_zero()) Report::fail(comp, "nonzero composite");
  Check& exact = r.add("im iota = ker pi");
  if (dw + dq != dv) Report::fail(exact, "dim W + dim Q != dim V");
  Check& mi = r.add("iota intertwines");
  if (!intertwines(s.iota, s.w.lambdas(), s.v.lambdas()) || !intertwines(s.iota, s.w.rhos(), s.v.rhos()))
    Report::fail(mi, "iota");
  Check& mp = r.add("pi intertwines");
  if (!intertwines(s.pi, s.v.lambdas(), s.q.lambdas()) || !intertwines(s.pi, s.v.rhos(), s.q.rhos()))
    Report::fail(mp, "pi");
  return r;
}

ShortExactSeq ses_from_subspace(const Representation& v, const std::vector<Vector>& w_basis) {
  SubQuotient sq = sub_quotient(v, w_basis);
  return {std::move(sq.sub), v, std::move(sq.quotient), std::move(sq.iota), std::move(sq.pi)};
}

CocycleFamily zero_family(const Representation& q, const Representation& w) {
  return {std::vector<Matrix>(q.digroup().size(), Matrix(w.dim(), q.dim(), q.field()))};
}

Vector flatten_family(const CocycleFamily& c) {
  Vector v;
  for (const auto& m : c.theta) v.insert(v.end(), m.flatten().begin(), m.flatten().end());
  return v;
}

CocycleFamily unflatten_family(const Vector& v, const Representation& q, const Representation& w) {
  std::size_t block = w.dim() * q.dim(), n = q.digroup().size();
  if (v.size() != n * block) throw DimensionMismatch("unflatten_family: length mismatch");
  CocycleFamily c;
  for (std::size_t x = 0; x < n; ++x)
    c.theta.push_back(Matrix::unflatten(Vector(v.begin() + static_cast<std::ptrdiff_t>(x * block),
                                               v.begin() + static_cast<std::ptrdiff_t>((x + 1) * block)),
                                        w.dim(), q.dim(), q.field()));
  return c;
}

CocycleFamily operator+(const CocycleFamily& a, const CocycleFamily& b) {
  if (a.theta.size() != b.theta.size()) throw DimensionMismatch("cocycle families of different sizes");
  CocycleFamily c = a;
  for (std::size_t i = 0; i < c.theta.size(); ++i) c.theta[i] += b.theta[i];
  return c;
}

CocycleFamily operator-(const CocycleFamily& a, const CocycleFamily& b) {
  if (a.theta.size() != b.theta.size()) throw DimensionMismatch("cocycle families of different sizes");
  CocycleFamily c = a;
  for (std::size_t i = 0; i < c.theta.size(); ++i) c.theta[i] -= b.theta[i];
  return c;
}

void require_maschke(const Digroup& d, Field f) {
  if (!f.inverts(d.group_order()))
    throw HypothesisViolation("p divides |G|: characteristic " + std::to_string(f.p) + " divides the group order " +
                              std::to_string(d.group_order()));
}

Matrix average_section(const ShortExactSeq& s, const std::optional<Matrix>& seed) {
  const Digroup& d = s.v.digroup();
  Field f = s.v.field();
  require_maschke(d, f);
  std::size_t dq = s.q.dim();
  Matrix s0;
  if (seed) {
    if (!(s.pi * *seed).is_identity() || seed->rows() != s.v.dim()) throw Error("average_section: seed is not a section of pi");
    s0 = *seed;
  } else {
    auto sol = solve(s.pi, Matrix::identity(dq, f));
    if (!sol) throw Error("average_section: pi has no linear section (not surjective)");
    s0 = *sol;
  }
  auto rv = rho_group_form(s.v);
  auto rq = rho_group_form(s.q);
  Matrix sum(s.v.dim(), dq, f);
  for (std::size_t g = 0; g < d.group_order(); ++g) sum += rv[g] * s0 * *rq[g].inverse();
  Matrix sec = sum * (Scalar(1, f) / Scalar(static_cast<long>(d.group_order()), f));
  if (!(s.pi * sec).is_identity()) throw Error("average_section: result is not a section");
  for (std::size_t g = 0; g < d.group_order(); ++g)
    if (!(rv[g] * sec == sec * rq[g])) throw Error("average_section: result is not rho-equivariant");
  return sec;
}

BlockDecomposition block_decompose(const ShortExactSeq& s, const Matrix& sec) {
  const Digroup& d = s.v.digroup();
  std::size_t dw = s.w.dim(), dq = s.q.dim();
  Matrix basis = hstack(s.iota, sec);
  auto inv = basis.inverse();
  if (!inv) throw Error("block_decompose: (iota | sec) is not a basis");
  BlockDecomposition out;
  Check& rd = out.report.add("rho block diagonal");
  Check& rw = out.report.add("rho diagonal blocks");
  Check& lt = out.report.add("lambda upper triangular");
  Check& lw = out.report.add("lambda diagonal blocks");
  for (Element x : d.elements()) {
    Matrix r = *inv * s.v.rho(x) * basis;
    Matrix l = *inv * s.v.lambda(x) * basis;
    if (!r.block(0, dw, dw, dq).is_zero() || !r.block(dw, 0, dq, dw).is_zero()) Report::fail(rd, to_string(x));
    if (!(r.block(0, 0, dw, dw) == s.w.rho(x)) || !(r.block(dw, dw, dq, dq) == s.q.rho(x))) Report::fail(rw, to_string(x));
    if (!l.block(dw, 0, dq, dw).is_zero()) Report::fail(lt, to_string(x));
    if (!(l.block(0, 0, dw, dw) == s.w.lambda(x)) || !(l.block(dw, dw, dq, dq) == s.q.lambda(x)))
      Report::fail(lw, to_string(x));
    out.theta.theta.push_back(l.block(0, dw, dw, dq));
  }
  if (!rd.ok) throw AxiomFailure("block_decompose: section is not rho-equivariant at " + rd.counterexample);
  out.report.append(is_cocycle(out.theta, s.q, s.w));
  return out;
}

Report is_cocycle(const CocycleFamily& c, const Representation& q, const Representation& w) {
  require_compatible(q, w);
  const Digroup& d = q.digroup();
  Report r;
  Check& a = r.add("Z1a theta_{x-|y} = lambda^W_x theta_y + theta_x lambda^Q_y");
  Check& b = r.add("Z1b theta_{x|-y} = rho^W_x theta_y");
  Check& cc = r.add("Z1c theta_{x-|y} = theta_x rho^Q_y");
  if (c.theta.size() != d.size()) {
    Report::fail(a, "family has the wrong size");
    return r;
  }
  for (Element x : d.elements())
    for (Element y : d.elements()) {
      const Matrix& tx = c.at(d, x);
      const Matrix& ty = c.at(d, y);
      const Matrix& txy = c.at(d, d.dashv(x, y));
      if (a.ok && !(txy == w.lambda(x) * ty + tx * q.lambda(y))) Report::fail(a, at2(x, y));
      if (b.ok && !(c.at(d, d.vdash(x, y)) == w.rho(x) * ty)) Report::fail(b, at2(x, y));
      if (cc.ok && !(txy == tx * q.rho(y))) Report::fail(cc, at2(x, y));
    }
  return r;
}

std::vector<CocycleFamily> cocycle_space(const Representation& q, const Representation& w) {
  require_compatible(q, w);
  const Digroup& d = q.digroup();
  std::size_t dw = w.dim(), dq = q.dim(), block = dw * dq;
  Field f = q.field();
  auto col = [&](Element x, std::size_t r, std::size_t s) { return d.index(x) * block + r * dq + s; };
  EchelonBuilder eb(d.size() * block, f);
  for (Element x : d.elements())
    for (Element y : d.elements()) {
      Element xl = d.dashv(x, y), xr = d.vdash(x, y);
      const Matrix &lw = w.lambda(x), &lq = q.lambda(y), &rw = w.rho(x), &rq = q.rho(y);
      for (std::size_t r = 0; r < dw; ++r)
        for (std::size_t s = 0; s < dq; ++s) {
          SparseRow za{{col(xl, r, s), Scalar(1, f)}};
          for (std::size_t l = 0; l < dw; ++l)
            if (!lw(r, l).is_zero()) za.emplace_back(col(y, l, s), -lw(r, l));
          for (std::size_t l = 0; l < dq; ++l)
            if (!lq(l, s).is_zero()) za.emplace_back(col(x, r, l), -lq(l, s));
          eb.add(za);

          SparseRow zb{{col(xr, r, s), Scalar(1, f)}};
          for (std::size_t l = 0; l < dw; ++l)
            if (!rw(r, l).is_zero()) zb.emplace_back(col(y, l, s), -rw(r, l));
          eb.add(zb);

          SparseRow zc{{col(xl, r, s), Scalar(1, f)}};
          for (std::size_t l = 0; l < dq; ++l)
            if (!rq(l, s).is_zero()) zc.emplace_back(col(x, r, l), -rq(l, s));
          eb.add(zc);
        }
    }
  std::vector<CocycleFamily> out;
  for (const auto& v : eb.kernel_basis()) out.push_back(unflatten_family(v, q, w));
  return out;
}

std::vector<Matrix> hom_rho(const Representation& q, const Representation& w) {
  require_compatible(q, w);
  auto rq = rho_group_form(q);
  auto rw = rho_group_form(w);
  std::vector<std::pair<Matrix, Matrix>> pairs;
  for (std::size_t g = 0; g < rq.size(); ++g) pairs.emplace_back(rq[g], rw[g]);
  return intertwiner_basis(pairs, w.dim(), q.dim(), q.field());
}

CocycleFamily coboundary(const Matrix& t, const Representation& q, const Representation& w) {
  require_compatible(q, w);
  if (t.rows() != w.dim() || t.cols() != q.dim()) throw DimensionMismatch("coboundary: t must be dim W x dim Q");
  if (!in_hom_rho(t, q, w)) throw AxiomFailure("coboundary: t does not intertwine rho");
  CocycleFamily c;
  for (std::size_t i = 0; i < q.digroup().size(); ++i) c.theta.push_back(w.lambdas()[i] * t - t * q.lambdas()[i]);
  return c;
}

std::optional<Matrix> solve_coboundary(const CocycleFamily& c, const Representation& q, const Representation& w) {
  auto basis = hom_rho(q, w);
  Vector target = flatten_family(c);
  if (basis.empty()) {
    for (const auto& s : target)
      if (!s.is_zero()) return std::nullopt;
    return Matrix(w.dim(), q.dim(), q.field());
  }
  Matrix a = coboundary_matrix(basis, q, w);
  auto coeffs = solve(a, Matrix::from_columns({target}, target.size(), q.field()));
  if (!coeffs) return std::nullopt;
  Matrix t(w.dim(), q.dim(), q.field());
  for (std::size_t k = 0; k < basis.size(); ++k) t += (*coeffs)(k, 0) * basis[k];
  return t;
}

Ext1Result ext1_dim(const Representation& q, const Representation& w) {
  require_compatible(q, w);
  require_maschke(q.digroup(), q.field());
  Ext1Result out;
  auto z = cocycle_space(q, w);
  out.dim_z = z.size();
  std::size_t n = q.digroup().size() * w.dim() * q.dim();
  EchelonBuilder span(n, q.field());
  for (const auto& t : hom_rho(q, w)) span.add(flatten_family(coboundary(t, q, w)));
  out.dim_b = span.rank();
  for (const auto& c : z)
    if (span.add(flatten_family(c))) out.class_basis.push_back(c);
  if (span.rank() != out.dim_z) throw Error("ext1_dim: coboundaries are not contained in the cocycle space");
  out.dim_ext = out.class_basis.size();
  return out;
}

ShortExactSeq extension_from_cocycle(const CocycleFamily& c, const Representation& q, const Representation& w) {
  Report rep = is_cocycle(c, q, w);
  if (const Check* bad = rep.first_failure())
    throw AxiomFailure("extension_from_cocycle: theta fails " + bad->name + " at " + bad->counterexample);
  std::size_t dw = w.dim(), dq = q.dim(), dv = dw + dq;
  Field f = q.field();
  std::vector<Matrix> lambda, rho;
  for (std::size_t i = 0; i < q.digroup().size(); ++i) {
    Matrix l = block_diagonal(w.lambdas()[i], q.lambdas()[i]);
    l.set_block(0, dw, c.theta[i]);
    lambda.push_back(std::move(l));
    rho.push_back(block_diagonal(w.rhos()[i], q.rhos()[i]));
  }
  Matrix iota(dv, dw, f), pi(dq, dv, f);
  iota.set_block(0, 0, Matrix::identity(dw, f));
  pi.set_block(0, dw, Matrix::identity(dq, f));
  return {w, Representation(q.digroup(), dv, std::move(lambda), std::move(rho), f), q, std::move(iota), std::move(pi)};
}

SplitResult is_split(const ShortExactSeq& s) {
  require_maschke(s.v.digroup(), s.v.field());
  SplitResult out;
  out.certificate = zero_family(s.q, s.w);
  if (s.q.dim() == 0) {
    out.split = true;
    out.witness = Matrix(s.v.dim(), 0, s.v.field());
    return out;
  }
  if (s.w.dim() == 0) {
    // pi is an isomorphism; its inverse is the (unique) section.
    out.split = true;
    out.witness = s.pi.inverse();
    return out;
  }
  Matrix sec = average_section(s);
  out.certificate = block_decompose(s, sec).theta;
  auto t = solve_coboundary(out.certificate, s.q, s.w);
  if (!t) return out;
  Matrix witness = sec - s.iota * *t;
  if (!intertwines(witness, s.q.lambdas(), s.v.lambdas()) || !intertwines(witness, s.q.rhos(), s.v.rhos()) ||
      !(s.pi * witness).is_identity())
    throw Error("is_split: corrected section fails to be a morphism");
  out.split = true;
  out.witness = std::move(witness);
  return out;
}

bool change_of_splitting_check(const ShortExactSeq& s, const Matrix& t) {
  if (!in_hom_rho(t, s.q, s.w)) throw AxiomFailure("change_of_splitting_check: t does not intertwine rho");
  Matrix sec = average_section(s);
  CocycleFamily theta = block_decompose(s, sec).theta;
  CocycleFamily moved = block_decompose(s, sec + s.iota * t).theta;
  return moved == theta + coboundary(t, s.q, s.w);
}

std::vector<ProbeCertificate> semisimplicity_probe(const std::vector<Representation>& reps) {
  std::vector<ProbeCertificate> out;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) {
      Ext1Result e = ext1_dim(reps[i], reps[j]);
      if (e.dim_ext > 0) out.push_back({i, j, e.dim_ext, e.class_basis.front()});
    }
  return out;
}

}  // namespace dgrep
