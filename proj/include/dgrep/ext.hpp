#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dgrep/matrix.hpp"
#include "dgrep/report.hpp"
#include "dgrep/representation.hpp"

namespace dgrep {

/// 0 -> W --iota--> V --pi--> Q -> 0.
struct ShortExactSeq {
  Representation w, v, q;
  Matrix iota;  // dim V x dim W
  Matrix pi;    // dim Q x dim V
};

/// Exactness, shapes, and that iota and pi intertwine lambda and rho.
Report check_ses(const ShortExactSeq& s);

/// The sequence cut out by a stable subspace of v (W = span, Q = v / W).
ShortExactSeq ses_from_subspace(const Representation& v, const std::vector<Vector>& w_basis);

/// A family theta_x in Hom(Q, W), indexed by Digroup::index.
struct CocycleFamily {
  std::vector<Matrix> theta;

  const Matrix& at(const Digroup& d, Element x) const { return theta[d.index(x)]; }
  friend bool operator==(const CocycleFamily&, const CocycleFamily&) = default;
};

CocycleFamily zero_family(const Representation& q, const Representation& w);
Vector flatten_family(const CocycleFamily& c);
CocycleFamily unflatten_family(const Vector& v, const Representation& q, const Representation& w);
CocycleFamily operator+(const CocycleFamily& a, const CocycleFamily& b);
CocycleFamily operator-(const CocycleFamily& a, const CocycleFamily& b);

/// Throws HypothesisViolation when char K divides |G|.
void require_maschke(const Digroup& d, Field f);

/// rho-equivariant section of pi by averaging a linear section over G.
/// With `seed`, that linear section is used as s0 (it must satisfy pi s0 = id).
Matrix average_section(const ShortExactSeq& s, const std::optional<Matrix>& seed = std::nullopt);

struct BlockDecomposition {
  CocycleFamily theta;
  Report report;
};

/// Off-diagonal lambda blocks in the coordinates (iota | sec). Throws AxiomFailure
/// when sec is not rho-equivariant.
BlockDecomposition block_decompose(const ShortExactSeq& s, const Matrix& sec);

/// The three cocycle identities over all of D x D.
Report is_cocycle(const CocycleFamily& c, const Representation& q, const Representation& w);

/// Canonical basis of Z^1(Q, W).
std::vector<CocycleFamily> cocycle_space(const Representation& q, const Representation& w);

/// Canonical basis of { t : rho^W_g t = t rho^Q_g }, as dim W x dim Q matrices.
std::vector<Matrix> hom_rho(const Representation& q, const Representation& w);

/// (delta t)_x = lambda^W_x t - t lambda^Q_x. Throws AxiomFailure if t is not in hom_rho.
CocycleFamily coboundary(const Matrix& t, const Representation& q, const Representation& w);

/// Some t in hom_rho with delta t == c, if the class of c is zero.
std::optional<Matrix> solve_coboundary(const CocycleFamily& c, const Representation& q, const Representation& w);

struct Ext1Result {
  std::size_t dim_z = 0;
  std::size_t dim_b = 0;
  std::size_t dim_ext = 0;
  std::vector<CocycleFamily> class_basis;
};

Ext1Result ext1_dim(const Representation& q, const Representation& w);

/// V_theta = W + Q with lambda = [[lambda^W, theta], [0, lambda^Q]]. Throws AxiomFailure
/// when theta is not a cocycle.
ShortExactSeq extension_from_cocycle(const CocycleFamily& c, const Representation& q, const Representation& w);

struct SplitResult {
  bool split = false;
  /// Fully equivariant section when split.
  std::optional<Matrix> witness;
  /// Cocycle of the averaged section; a nonzero class when not split.
  CocycleFamily certificate;
};

SplitResult is_split(const ShortExactSeq& s);

/// block_decompose(s, sec + iota t).theta == theta + delta t for the averaged sec.
bool change_of_splitting_check(const ShortExactSeq& s, const Matrix& t);

struct ProbeCertificate {
  std::size_t q_index = 0;
  std::size_t w_index = 0;
  std::size_t dim_ext = 0;
  CocycleFamily cocycle;
};

/// Nonzero Ext^1 over all ordered pairs of the given representations.
std::vector<ProbeCertificate> semisimplicity_probe(const std::vector<Representation>& reps);

}  // namespace dgrep
