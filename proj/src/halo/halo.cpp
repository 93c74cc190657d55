#include "dgrep/halo.hpp"

#include "dgrep/error.hpp"
#include "dgrep/ext.hpp"
#include "dgrep/linalg.hpp"

namespace dgrep {

namespace {

std::string g_str(std::size_t g) { return "g=" + std::to_string(g); }

// Coordinates of v in the given independent vectors, or nullopt outside their span.
std::optional<Vector> coordinates(const std::vector<Vector>& basis, const Vector& v, Field f) {
  if (basis.empty()) {
    for (const auto& s : v)
      if (!s.is_zero()) return std::nullopt;
    return Vector{};
  }
  auto x = solve(Matrix::from_columns(basis, v.size(), f), Matrix::from_columns({v}, v.size(), f));
  if (!x) return std::nullopt;
  return x->column(0);
}

// Common fixed space of a family of square matrices, as coordinate vectors.
std::vector<Vector> fixed_space(const std::vector<Matrix>& action, std::size_t n, Field f) {
  EchelonBuilder eb(n, f);
  for (const auto& a : action) {
    Matrix d = a - Matrix::identity(n, f);
    for (std::size_t i = 0; i < n; ++i) eb.add(d.row(i));
  }
  return eb.kernel_basis();
}

// C1 and C2 for a table of matrices indexed by group elements.
void check_action_laws(const FiniteGroup& G, const std::vector<Matrix>& act, Report& r, const std::string& what) {
  Check& unit = r.add(what + ": identity acts trivially");
  if (!act[G.identity()].is_identity()) Report::fail(unit, g_str(G.identity()));
  Check& mult = r.add(what + ": (gh).x = g.(h.x)");
  for (std::size_t g = 0; g < G.order() && mult.ok; ++g)
    for (std::size_t h = 0; h < G.order(); ++h)
      if (!(act[g] * act[h] == act[G.mul(g, h)])) {
        Report::fail(mult, g_str(g) + " h=" + std::to_string(h));
        break;
      }
}

void require_same_halo(const BEModule& q, const BEModule& w) {
  if (q.epsilon.size() != w.epsilon.size()) throw DimensionMismatch("B_E modules have different halo sizes");
  if (q.field != w.field) throw FieldMismatch("B_E modules over different fields");
}

void require_valid(const SemilinearObject& m, const char* what) {
  Report r = m.check();
  if (const Check* bad = r.first_failure())
    throw AxiomFailure(std::string(what) + " fails " + bad->name + " at " + bad->counterexample);
}

}  // namespace

std::vector<Matrix> hom_BE(const BEModule& q, const BEModule& w) {
  require_same_halo(q, w);
  std::vector<std::pair<Matrix, Matrix>> pairs;
  for (std::size_t a = 0; a < q.epsilon.size(); ++a) pairs.emplace_back(q.epsilon[a], w.epsilon[a]);
  if (pairs.empty()) {
    std::vector<Matrix> all;
    for (std::size_t i = 0; i < w.dim * q.dim; ++i) {
      Vector v(w.dim * q.dim, Scalar(0, q.field));
      v[i] = Scalar(1, q.field);
      all.push_back(Matrix::unflatten(v, w.dim, q.dim, q.field));
    }
    return all;
  }
  return intertwiner_basis(pairs, w.dim, q.dim, q.field);
}

HomSpaceWithAction g_action_on_hom(const std::vector<Matrix>& basis, const SemilinearObject& q,
                                   const SemilinearObject& w) {
  require_valid(q, "Q");
  require_valid(w, "W");
  if (!(q.digroup == w.digroup)) throw Error("semilinear objects over different digroups");
  const FiniteGroup& G = q.digroup.group();
  HomSpaceWithAction out{basis, {}, {}};
  auto flat = flatten_all(basis);
  std::size_t n = basis.size();
  Check& closed = out.verification.add("g.f is B_E-linear");
  for (std::size_t g = 0; g < G.order(); ++g) {
    Matrix tq_inv = *q.t[g].inverse();
    Matrix a(n, n, q.field);
    for (std::size_t k = 0; k < n; ++k) {
      Matrix gf = w.t[g] * basis[k] * tq_inv;
      for (std::size_t al = 0; al < q.epsilon.size(); ++al)
        if (!(gf * q.epsilon[al] == w.epsilon[al] * gf)) Report::fail(closed, g_str(g) + " k=" + std::to_string(k));
      auto c = coordinates(flat, gf.flatten(), q.field);
      if (!c) throw AxiomFailure("g_action_on_hom: g.f leaves the span at " + g_str(g));
      for (std::size_t i = 0; i < n; ++i) a(i, k) = (*c)[i];
    }
    out.g_action.push_back(std::move(a));
  }
  check_action_laws(G, out.g_action, out.verification, "action on Hom");
  return out;
}

std::vector<Matrix> invariants(const HomSpaceWithAction& space) {
  std::size_t n = space.basis.size();
  if (n == 0) return {};
  Field f = space.basis.front().field();
  std::vector<Matrix> out;
  for (const auto& c : fixed_space(space.g_action, n, f)) {
    Matrix m(space.basis.front().rows(), space.basis.front().cols(), f);
    for (std::size_t k = 0; k < n; ++k)
      if (!c[k].is_zero()) m += c[k] * space.basis[k];
    out.push_back(std::move(m));
  }
  return out;
}

BEExtResult ext1_BE(const SemilinearObject& q, const SemilinearObject& w) {
  require_same_halo(q.underlying(), w.underlying());
  require_valid(q, "Q");
  require_valid(w, "W");
  if (!(q.digroup == w.digroup)) throw Error("semilinear objects over different digroups");
  const Digroup& d = q.digroup;
  const FiniteGroup& G = d.group();
  std::size_t m = q.epsilon.size(), dw = w.dim, dq = q.dim, block = dw * dq, n = m * block;
  Field f = q.field;
  auto col = [&](std::size_t a, std::size_t r, std::size_t s) { return a * block + r * dq + s; };
  auto to_family = [&](const Vector& v) {
    std::vector<Matrix> eta;
    for (std::size_t a = 0; a < m; ++a)
      eta.push_back(Matrix::unflatten(Vector(v.begin() + static_cast<std::ptrdiff_t>(a * block),
                                             v.begin() + static_cast<std::ptrdiff_t>((a + 1) * block)),
                                      dw, dq, f));
    return eta;
  };

  // eps^W_a eta_b + eta_a eps^Q_b - eta_a = 0.
  EchelonBuilder z(n, f);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Matrix &ew = w.epsilon[a], &eq = q.epsilon[b];
      for (std::size_t r = 0; r < dw; ++r)
        for (std::size_t s = 0; s < dq; ++s) {
          SparseRow row{{col(a, r, s), Scalar(-1, f)}};
          for (std::size_t l = 0; l < dw; ++l)
            if (!ew(r, l).is_zero()) row.emplace_back(col(b, l, s), ew(r, l));
          for (std::size_t l = 0; l < dq; ++l)
            if (!eq(l, s).is_zero()) row.emplace_back(col(a, r, l), eq(l, s));
          z.add(row);
        }
    }
  auto z_basis = z.kernel_basis();

  auto is_cocycle = [&](const std::vector<Matrix>& eta) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (!(w.epsilon[a] * eta[b] + eta[a] * q.epsilon[b] == eta[a])) return false;
    return true;
  };

  EchelonBuilder span(n, f);
  std::vector<Vector> b_basis;
  for (std::size_t r = 0; r < dw; ++r)
    for (std::size_t s = 0; s < dq; ++s) {
      Matrix t(dw, dq, f);
      t(r, s) = Scalar(1, f);
      std::vector<Matrix> eta;
      for (std::size_t a = 0; a < m; ++a) eta.push_back(w.epsilon[a] * t - t * q.epsilon[a]);
      Vector v;
      for (const auto& e : eta) v.insert(v.end(), e.flatten().begin(), e.flatten().end());
      if (span.add(v)) b_basis.push_back(std::move(v));
    }

  BEExtResult out;
  out.dim_z = z_basis.size();
  out.dim_b = b_basis.size();
  std::vector<Vector> class_vectors;
  for (const auto& v : z_basis)
    if (span.add(v)) {
      class_vectors.push_back(v);
      out.eta_basis.push_back(to_family(v));
    }
  if (span.rank() != out.dim_z) throw Error("ext1_BE: coboundaries are not contained in the cocycle space");
  out.dim_ext = class_vectors.size();

  // Z in the adapted basis (B first, then class representatives).
  std::vector<Vector> adapted = b_basis;
  adapted.insert(adapted.end(), class_vectors.begin(), class_vectors.end());

  auto act = [&](std::size_t g, const Vector& v) {
    auto eta = to_family(v);
    std::size_t gi = G.inv(g);
    Matrix tq_inv = *q.t[g].inverse();
    Vector outv;
    for (std::size_t a = 0; a < m; ++a) {
      Matrix e = w.t[g] * eta[d.action().act(gi, a)] * tq_inv;
      outv.insert(outv.end(), e.flatten().begin(), e.flatten().end());
    }
    return outv;
  };

  Check& pz = out.verification.add("G-action preserves Z");
  Check& pb = out.verification.add("G-action preserves B");
  for (std::size_t g = 0; g < G.order(); ++g) {
    for (const auto& v : z_basis)
      if (!is_cocycle(to_family(act(g, v)))) Report::fail(pz, g_str(g));
    for (const auto& v : b_basis)
      if (!coordinates(b_basis, act(g, v), f)) Report::fail(pb, g_str(g));
    Matrix c(out.dim_ext, out.dim_ext, f);
    for (std::size_t k = 0; k < out.dim_ext; ++k) {
      auto coords = coordinates(adapted, act(g, class_vectors[k]), f);
      if (!coords) {
        Report::fail(pz, g_str(g) + " class " + std::to_string(k));
        continue;
      }
      for (std::size_t i = 0; i < out.dim_ext; ++i) c(i, k) = (*coords)[out.dim_b + i];
    }
    out.g_action_on_classes.push_back(std::move(c));
  }
  check_action_laws(G, out.g_action_on_classes, out.verification, "action on Ext classes");
  out.invariant_dim = out.dim_ext == 0 ? 0 : fixed_space(out.g_action_on_classes, out.dim_ext, f).size();
  return out;
}

CollapseReport verify_collapse(const Representation& q, const Representation& w) {
  if (!(q.digroup() == w.digroup())) throw Error("representations live on different digroups");
  require_maschke(q.digroup(), q.field());
  CollapseReport out;
  SemilinearObject sq = to_semilinear(q), sw = to_semilinear(w);

  auto hom = hom_BE(sq.underlying(), sw.underlying());
  auto space = g_action_on_hom(hom, sq, sw);
  out.hom_be_dim = hom.size();
  out.hom_be_invariant_dim = invariants(space).size();
  out.hom_rep_dim = hom_rep(q, w).size();
  out.report.append(space.verification);

  BEExtResult be = ext1_BE(sq, sw);
  out.ext1_be_dim = be.dim_ext;
  out.ext1_be_invariant_dim = be.invariant_dim;
  out.report.append(be.verification);

  Ext1Result rep = ext1_dim(q, w);
  out.ext1_rep_dim = rep.dim_ext;

  Check& h0 = out.report.add("invariant Hom_{B_E} = Hom_Rep");
  if (out.hom_be_invariant_dim != out.hom_rep_dim)
    Report::fail(h0, std::to_string(out.hom_be_invariant_dim) + " != " + std::to_string(out.hom_rep_dim));
  Check& e1 = out.report.add("invariant Ext^1_{B_E} = Ext^1_Rep");
  if (out.ext1_be_invariant_dim != out.ext1_rep_dim)
    Report::fail(e1, std::to_string(out.ext1_be_invariant_dim) + " != " + std::to_string(out.ext1_rep_dim));
  if (out.ext1_be_invariant_dim == 0) {
    Check& sp = out.report.add("vanishing invariant Ext forces splitting");
    auto z = cocycle_space(q, w);
    for (std::size_t k = 0; k < z.size(); ++k)
      if (!is_split(extension_from_cocycle(z[k], q, w)).split) Report::fail(sp, "cocycle " + std::to_string(k));
  }
  out.collapse_ok = out.report.ok();
  return out;
}

SemilinearObject induction_L(const BEModule& m, const Digroup& d) {
  Report r = m.check();
  if (const Check* bad = r.first_failure())
    throw AxiomFailure("induction_L: module fails " + bad->name + " at " + bad->counterexample);
  if (m.epsilon.size() != d.halo_size()) throw DimensionMismatch("induction_L: halo size mismatch");
  const FiniteGroup& G = d.group();
  std::size_t n = G.order(), dm = m.dim;
  Field f = m.field;
  SemilinearObject out{d, n * dm, f, {}, {}};
  for (std::size_t a = 0; a < d.halo_size(); ++a) {
    Matrix e(n * dm, n * dm, f);
    for (std::size_t g = 0; g < n; ++g) e.set_block(g * dm, g * dm, m.epsilon[d.action().act(G.inv(g), a)]);
    out.epsilon.push_back(std::move(e));
  }
  Matrix id = Matrix::identity(dm, f);
  for (std::size_t h = 0; h < n; ++h) {
    Matrix t(n * dm, n * dm, f);
    for (std::size_t g = 0; g < n; ++g) t.set_block(G.mul(h, g) * dm, g * dm, id);
    out.t.push_back(std::move(t));
  }
  return out;
}

AdjunctionReport verify_adjunction(const BEModule& m, const SemilinearObject& n) {
  require_valid(n, "N");
  SemilinearObject l = induction_L(m, n.digroup);
  const FiniteGroup& G = n.digroup.group();
  std::size_t dm = m.dim, one = G.identity();
  Field f = m.field;

  std::vector<std::pair<Matrix, Matrix>> pairs;
  for (std::size_t a = 0; a < l.epsilon.size(); ++a) pairs.emplace_back(l.epsilon[a], n.epsilon[a]);
  for (std::size_t g = 0; g < G.order(); ++g) pairs.emplace_back(l.t[g], n.t[g]);
  auto lhs = intertwiner_basis(pairs, n.dim, l.dim, f);
  auto rhs = hom_BE(m, n.underlying());

  AdjunctionReport out;
  out.lhs_dim = lhs.size();
  out.rhs_dim = rhs.size();
  Check& dims = out.report.add("dim Hom(L(M), N) = dim Hom_{B_E}(M, N)");
  if (out.lhs_dim != out.rhs_dim) Report::fail(dims, std::to_string(out.lhs_dim) + " != " + std::to_string(out.rhs_dim));

  auto restrict = [&](const Matrix& phi) { return phi.block(0, one * dm, n.dim, dm); };
  auto extend = [&](const Matrix& fm) {
    Matrix phi(n.dim, l.dim, f);
    for (std::size_t g = 0; g < G.order(); ++g) phi.set_block(0, g * dm, n.t[g] * fm);
    return phi;
  };
  auto is_lhs = [&](const Matrix& phi) {
    for (const auto& [src, tgt] : pairs)
      if (!(phi * src == tgt * phi)) return false;
    return true;
  };
  auto is_rhs = [&](const Matrix& fm) {
    for (std::size_t a = 0; a < m.epsilon.size(); ++a)
      if (!(fm * m.epsilon[a] == n.epsilon[a] * fm)) return false;
    return true;
  };

  Check& unit = out.report.add("Phi -> f_Phi -> Phi");
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    Matrix fm = restrict(lhs[k]);
    if (!is_rhs(fm) || !(extend(fm) == lhs[k])) Report::fail(unit, "basis " + std::to_string(k));
  }
  Check& counit = out.report.add("f -> f~ -> f");
  for (std::size_t k = 0; k < rhs.size(); ++k) {
    Matrix phi = extend(rhs[k]);
    if (!is_lhs(phi) || !(restrict(phi) == rhs[k])) Report::fail(counit, "basis " + std::to_string(k));
  }
  return out;
}

}  // namespace dgrep
