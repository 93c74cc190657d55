#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dgrep/report.hpp"

namespace dgrep {

using Table = std::vector<std::vector<std::size_t>>;

/// A finite group given by its Cayley table; elements are 0..order-1.
class FiniteGroup {
public:
  /// Validates the table and derives identity and inverses. Throws AxiomFailure.
  static FiniteGroup from_table(Table mul);
  /// No validation; identity and inverses are best-effort. For fault injection.
  static FiniteGroup from_table_unchecked(Table mul);

  static FiniteGroup trivial() { return cyclic(1); }
  static FiniteGroup cyclic(std::size_t n);
  /// Permutations of {0..n-1} in lexicographic order, composed right to left; n <= 4.
  static FiniteGroup symmetric(std::size_t n);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  std::size_t order() const { return mul_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_.at(a).at(b); }
  std::size_t identity() const { return identity_; }
  std::size_t inv(std::size_t a) const { return inv_.at(a); }
  const Table& table() const { return mul_; }

  /// Associativity, two-sided identity and inverses, checked exhaustively.
  Report check() const;
  /// A small generating set, chosen greedily in index order.
  std::vector<std::size_t> generators() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.mul_ == b.mul_; }

private:
  Table mul_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inv_;
};

/// A left action of a finite group on {0..set_size-1}.
class GAction {
public:
  /// act[g][alpha] = g . alpha. Validates the action laws; throws AxiomFailure.
  static GAction from_table(FiniteGroup group, Table act);
  static GAction from_table_unchecked(FiniteGroup group, Table act);
  static GAction trivial(FiniteGroup group, std::size_t set_size);

  const FiniteGroup& group() const { return group_; }
  std::size_t set_size() const { return set_size_; }
  std::size_t act(std::size_t g, std::size_t alpha) const { return act_.at(g).at(alpha); }
  const Table& table() const { return act_; }
  bool is_trivial() const;

  Report check() const;

  friend bool operator==(const GAction&, const GAction&) = default;

private:
  FiniteGroup group_;
  std::size_t set_size_ = 0;
  Table act_;
};

/// Every action of `group` on a set of the given size (all homomorphisms into
/// Sym(set_size)), in a deterministic order. Intended for set_size <= 4.
std::vector<GAction> all_actions(const FiniteGroup& group, std::size_t set_size);

}  // namespace dgrep
