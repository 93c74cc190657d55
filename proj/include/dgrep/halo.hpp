#pragma once

#include <cstddef>
#include <vector>

#include "dgrep/matrix.hpp"
#include "dgrep/report.hpp"
#include "dgrep/representation.hpp"

namespace dgrep {

/// Canonical basis of { f : f eps^Q_a = eps^W_a f for all a }, as dim W x dim Q matrices.
std::vector<Matrix> hom_BE(const BEModule& q, const BEModule& w);

struct HomSpaceWithAction {
  std::vector<Matrix> basis;
  /// g_action[g] acts on coordinates with respect to `basis`.
  std::vector<Matrix> g_action;
  Report verification;
};

/// g.f = t^W_g f (t^Q_g)^-1 on a basis of Hom_{B_E}(Q, W). Throws AxiomFailure when g.f
/// leaves the span.
HomSpaceWithAction g_action_on_hom(const std::vector<Matrix>& basis, const SemilinearObject& q,
                                   const SemilinearObject& w);

/// Basis of the maps fixed by every g.
std::vector<Matrix> invariants(const HomSpaceWithAction& space);

struct BEExtResult {
  std::size_t dim_z = 0;
  std::size_t dim_b = 0;
  std::size_t dim_ext = 0;
  /// One family eta (indexed by alpha) per class.
  std::vector<std::vector<Matrix>> eta_basis;
  /// Action of g on class coordinates with respect to eta_basis.
  std::vector<Matrix> g_action_on_classes;
  std::size_t invariant_dim = 0;
  Report verification;
};

/// Ext^1 over B_E by extension cocycles eps^W_a eta_b + eta_a eps^Q_b = eta_a, modulo
/// eta_a = eps^W_a t - t eps^Q_a, with (g.eta)_a = t^W_g eta_{g^-1.a} (t^Q_g)^-1.
BEExtResult ext1_BE(const SemilinearObject& q, const SemilinearObject& w);

struct CollapseReport {
  std::size_t hom_be_dim = 0;
  std::size_t hom_be_invariant_dim = 0;
  std::size_t hom_rep_dim = 0;
  std::size_t ext1_be_dim = 0;
  std::size_t ext1_be_invariant_dim = 0;
  std::size_t ext1_rep_dim = 0;
  bool collapse_ok = false;
  Report report;
};

/// Invariant Ext^1 over B_E against Ext^1 of representations, and invariant Hom over B_E
/// against Hom of representations. When the invariant Ext vanishes, every extension built
/// from a cocycle must split.
CollapseReport verify_collapse(const Representation& q, const Representation& w);

/// L(M) = sum over g of copies M_g; eps_a acts on M_g as eps^M_{g^-1.a}, t_h sends M_g to M_hg.
SemilinearObject induction_L(const BEModule& m, const Digroup& d);

struct AdjunctionReport {
  std::size_t lhs_dim = 0;  // Hom(L(M), N) in the semilinear category
  std::size_t rhs_dim = 0;  // Hom_{B_E}(M, N)
  Report report;
};

/// Compares both Hom spaces and checks that Phi -> Phi|_{M_1} and f -> (t_g f)_g are
/// mutually inverse on basis elements.
AdjunctionReport verify_adjunction(const BEModule& m, const SemilinearObject& n);

}  // namespace dgrep
