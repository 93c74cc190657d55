#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dgrep/digroup.hpp"
#include "dgrep/matrix.hpp"
#include "dgrep/report.hpp"
#include "dgrep/representation.hpp"

namespace dgrep {

/// A finite-dimensional unital associative algebra given by structure
/// constants: structure[i][j] is the coefficient vector of e_i * e_j.
struct FDAlgebra {
  std::vector<std::string> basis_labels;
  std::vector<std::vector<Vector>> structure;
  Vector unit;
  Field field;

  std::size_t dim() const { return basis_labels.size(); }
  Vector basis_vector(std::size_t i) const;
  Vector multiply(const Vector& a, const Vector& b) const;

  /// Exhaustive associativity on basis triples and two-sided unit.
  Report check() const;
};

/// A left module: one matrix per basis element of the algebra.
struct AlgebraModule {
  std::size_t dim = 0;
  Field field;
  std::vector<Matrix> action;

  /// action(e_i) action(e_j) = sum_k c_ij^k action(e_k), and action(unit) = id.
  Report check(const FDAlgebra& a) const;
  /// The operator of an arbitrary algebra element.
  Matrix act(const Vector& element) const;
};

// Enveloping algebra A_D. Basis: R_g (g in G), then M_{alpha,g} = L_(1,alpha) R_g,
// with R_g R_h = R_gh, R_g M_{a,h} = M_{g.a,gh}, M_{a,g} R_h = M_{a,gh},
// M_{a,g} M_{b,h} = M_{a,gh}; R_1 is the unit.
std::size_t envelope_r_index(const Digroup& d, std::size_t g);
std::size_t envelope_m_index(const Digroup& d, std::size_t alpha, std::size_t g);

FDAlgebra build_enveloping_algebra(const Digroup& d, Field f = {});

/// Universal-property relations UP1-UP5 for l_(g,a) = M_{a,g} and r_(g,a) = R_g.
Report check_relations(const FDAlgebra& a, const Digroup& d);

/// Throws AxiomFailure if r is not a representation.
AlgebraModule rep_to_module(const Representation& r);
/// Throws AxiomFailure if m is not an A_D-module.
Representation module_to_rep(const AlgebraModule& m, const Digroup& d);

/// Halo algebra B_E: basis 1, eps_0, ..., eps_{m-1} with eps_a eps_b = eps_a.
FDAlgebra build_halo_algebra(std::size_t halo_size, Field f = {});

/// Permutation matrix of tau_g on B_E coefficient vectors (1 fixed, eps_a -> eps_{g.a}).
Matrix tau_automorphism(std::size_t g, const GAction& action, Field f = {});
/// T(e_i e_j) == T(e_i) T(e_j) on all basis pairs, and T invertible.
bool is_algebra_automorphism(const FDAlgebra& a, const Matrix& t);

struct DerivationExt {
  std::size_t dim = 0;  // derivations minus inner derivations
  std::size_t derivation_dim = 0;
  std::size_t inner_dim = 0;
  /// One representative derivation per class, as c(e_k) for each basis element.
  std::vector<std::vector<Matrix>> representatives;
};

/// Ext^1_A(q, w) as derivations A -> Hom(q, w) modulo inner derivations.
DerivationExt derivation_ext1(const FDAlgebra& a, const AlgebraModule& q, const AlgebraModule& w);

}  // namespace dgrep
