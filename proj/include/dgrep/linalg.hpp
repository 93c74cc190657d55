#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dgrep/matrix.hpp"

namespace dgrep {

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Canonical basis of the right null space: one vector per free column,
/// with a 1 in that column, in increasing column order.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Some x with a * x == b, or nullopt when the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// A subspace of K^ambient held by its reduced row echelon basis, so two
/// spanning sets of the same subspace compare equal.
struct Subspace {
  std::size_t ambient = 0;
  Field field;
  std::vector<Vector> basis;

  std::size_t dim() const { return basis.size(); }
  friend bool operator==(const Subspace&, const Subspace&) = default;
};

Subspace span_basis(const std::vector<Vector>& vectors, std::size_t ambient, Field f = {});
Subspace intersect(const Subspace& u, const Subspace& v);
bool contains(const Subspace& u, const Vector& v);
std::size_t quotient_dim(std::size_t ambient, const Subspace& u);

using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

/// Incremental row reduction. Rows are fed one at a time and the row space is
/// kept in reduced echelon form, so large, highly redundant constraint systems
/// never have to be materialized as a dense matrix.
class EchelonBuilder {
public:
  EchelonBuilder(std::size_t cols, Field f = {});

  /// Adds a row; returns true when the rank grew.
  bool add(const SparseRow& row);
  bool add(const Vector& row);

  bool in_row_space(const Vector& v) const;
  /// Remainder of v after elimination against the current rows.
  Vector reduce(const Vector& v) const;

  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }
  std::size_t rank() const { return rows_.size(); }
  std::vector<std::size_t> pivots() const;

  /// Canonical reduced rows, ordered by pivot column.
  std::vector<Vector> basis() const;
  /// Canonical null space basis of the accumulated system.
  std::vector<Vector> kernel_basis() const;

private:
  struct Row {
    std::size_t pivot;
    SparseRow entries;  // sorted by column; pivot entry is 1
  };

  static void axpy(SparseRow& target, const Scalar& factor, const SparseRow& source);

  std::size_t cols_;
  Field field_;
  std::vector<Row> rows_;
  std::vector<long> row_of_pivot_;
};

/// Canonical basis of { f : rows x cols | f * source_k == target_k * f for all k }.
std::vector<Matrix> intertwiner_basis(const std::vector<std::pair<Matrix, Matrix>>& pairs,
                                      std::size_t rows, std::size_t cols, Field f = {});

/// Coordinates of the vectorized matrices as rows, via flatten().
std::vector<Vector> flatten_all(const std::vector<Matrix>& ms);

}  // namespace dgrep
