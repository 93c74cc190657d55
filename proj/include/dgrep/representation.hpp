#pragma once

#include <cstddef>
#include <vector>

#include "dgrep/digroup.hpp"
#include "dgrep/linalg.hpp"
#include "dgrep/matrix.hpp"
#include "dgrep/report.hpp"

namespace dgrep {

/// A representation (V, lambda, rho) of a product-model digroup. Operators are
/// stored per element (g, alpha), indexed by Digroup::index, so the reductions
/// "rho depends only on g" and "lambda = L_alpha rho_g" remain checkable facts.
class Representation {
public:
  Representation() = default;
  /// Checks shapes and fields only; use check_representation for the axioms.
  Representation(Digroup d, std::size_t dim, std::vector<Matrix> lambda, std::vector<Matrix> rho, Field f = {});

  static Representation zero(const Digroup& d, Field f = {});
  /// lambda and rho all equal to the identity on K^dim.
  static Representation identity(const Digroup& d, std::size_t dim, Field f = {});

  const Digroup& digroup() const { return digroup_; }
  std::size_t dim() const { return dim_; }
  Field field() const { return field_; }

  const Matrix& lambda(Element x) const { return lambda_[digroup_.index(x)]; }
  const Matrix& rho(Element x) const { return rho_[digroup_.index(x)]; }
  const std::vector<Matrix>& lambdas() const { return lambda_; }
  const std::vector<Matrix>& rhos() const { return rho_; }

  friend bool operator==(const Representation&, const Representation&) = default;

private:
  Digroup digroup_;
  std::size_t dim_ = 0;
  Field field_;
  std::vector<Matrix> lambda_;
  std::vector<Matrix> rho_;
};

/// R1-R5 over all of D x D and invertibility of every rho_x.
Report check_representation(const Representation& r);

/// g -> rho_g after checking rho_(g,a) is independent of a and multiplicative.
/// Throws AxiomFailure on corrupted input.
std::vector<Matrix> rho_group_form(const Representation& r);

/// alpha -> L_alpha := lambda_(1,alpha), after checking lambda_(g,a) == L_a rho_g.
std::vector<Matrix> lambda_factorization(const Representation& r);

bool is_subrepresentation(const Representation& r, const std::vector<Vector>& basis);

struct SubQuotient {
  Representation sub;       // W, in the coordinates of the given basis
  Representation quotient;  // Q, on the non-pivot coordinates of W's echelon basis
  Matrix iota;              // dim V x dim W
  Matrix pi;                // dim Q x dim V
};

/// Throws AxiomFailure if the span is not stable, Error if the basis is dependent.
SubQuotient sub_quotient(const Representation& r, const std::vector<Vector>& basis);

Representation direct_sum(const Representation& a, const Representation& b);

/// Canonical basis of Hom_Rep(a, b) as dim b x dim a matrices.
std::vector<Matrix> hom_rep(const Representation& a, const Representation& b);

/// A plain left B_E-module: one matrix per generator eps_alpha.
struct BEModule {
  std::size_t dim = 0;
  Field field;
  std::vector<Matrix> epsilon;

  /// eps_a eps_b == eps_a for all a, b, and shapes.
  Report check() const;
  friend bool operator==(const BEModule&, const BEModule&) = default;
};

/// An object (M, t) of the semilinear category: a B_E-module with a G-family
/// t_g that twists the module structure by tau_g.
struct SemilinearObject {
  Digroup digroup;
  std::size_t dim = 0;
  Field field;
  std::vector<Matrix> epsilon;  // indexed by alpha
  std::vector<Matrix> t;        // indexed by g

  /// Band relation for eps, invertibility of t, and C1-C3.
  Report check() const;
  BEModule underlying() const { return {dim, field, epsilon}; }
  friend bool operator==(const SemilinearObject&, const SemilinearObject&) = default;
};

SemilinearObject to_semilinear(const Representation& r);
/// rho_(g,a) := t_g, lambda_(g,a) := eps_a t_g. Throws AxiomFailure on invalid input.
Representation from_semilinear(const SemilinearObject& m);

}  // namespace dgrep
