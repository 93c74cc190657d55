#pragma once

#include <cstddef>
#include <random>

#include "dgrep/digroup.hpp"
#include "dgrep/matrix.hpp"
#include "dgrep/representation.hpp"

namespace dgrep {

using Rng = std::mt19937_64;

/// A group of the given order (1..6); orders 4 and 6 pick one of the two isomorphism types.
FiniteGroup random_group(Rng& rng, std::size_t order);

/// Uniform over all actions of `group` on a set of size halo_size.
Digroup random_digroup(Rng& rng, const FiniteGroup& group, std::size_t halo_size);

/// Integer matrix with integer inverse (product of unitriangular factors with entries in {-1,0,1}).
Matrix random_unimodular(Rng& rng, std::size_t n, Field f = {});

Matrix random_small(Rng& rng, std::size_t rows, std::size_t cols, Field f = {});

/// Valid by construction: t is a conjugated signed permutation representation on C + K,
/// eps_a = [[I, 0], [A_a, 0]] with A transported along orbits, then all conjugated.
SemilinearObject random_semilinear(Rng& rng, const Digroup& d, std::size_t dim, Field f = {});

Representation random_representation(Rng& rng, const Digroup& d, std::size_t dim, Field f = {});

}  // namespace dgrep
