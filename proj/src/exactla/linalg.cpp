#include "dgrep/linalg.hpp"

#include <algorithm>

#include "dgrep/error.hpp"

namespace dgrep {

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    Scalar d = a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) /= d;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j).sub_mul(f, a(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols(), Scalar(0, m.field()));
    v[f] = Scalar(1, m.field());
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: a and b must have the same row count");
  auto [red, pivots] = rref(hstack(a, b));
  Matrix x(a.cols(), b.cols(), a.field());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = red(i, a.cols() + j);
  }
  return x;
}

Subspace span_basis(const std::vector<Vector>& vectors, std::size_t ambient, Field f) {
  EchelonBuilder eb(ambient, f);
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw DimensionMismatch("span_basis: vector length differs from ambient dimension");
    eb.add(v);
  }
  return {ambient, f, eb.basis()};
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient != v.ambient) throw DimensionMismatch("intersect: ambient dimensions differ");
  std::vector<Vector> cols = u.basis;
  for (const auto& b : v.basis) {
    Vector neg = b;
    for (auto& s : neg) s = -s;
    cols.push_back(std::move(neg));
  }
  Matrix m = Matrix::from_columns(cols, u.ambient, u.field);
  std::vector<Vector> common;
  for (const auto& k : kernel_basis(m)) {
    Vector w(u.ambient, Scalar(0, u.field));
    for (std::size_t i = 0; i < u.dim(); ++i)
      for (std::size_t c = 0; c < u.ambient; ++c) w[c] += k[i] * u.basis[i][c];
    common.push_back(std::move(w));
  }
  return span_basis(common, u.ambient, u.field);
}

bool contains(const Subspace& u, const Vector& v) {
  if (v.size() != u.ambient) throw DimensionMismatch("contains: vector length differs from ambient dimension");
  EchelonBuilder eb(u.ambient, u.field);
  for (const auto& b : u.basis) eb.add(b);
  return eb.in_row_space(v);
}

std::size_t quotient_dim(std::size_t ambient, const Subspace& u) {
  if (u.ambient != ambient) throw DimensionMismatch("quotient_dim: ambient dimensions differ");
  return ambient - u.dim();
}

EchelonBuilder::EchelonBuilder(std::size_t cols, Field f)
    : cols_(cols), field_(f), row_of_pivot_(cols, -1) {}

void EchelonBuilder::axpy(SparseRow& target, const Scalar& factor, const SparseRow& source) {
  SparseRow out;
  out.reserve(target.size() + source.size());
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < source.size()) {
    if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
      out.push_back(std::move(target[i++]));
    } else if (i == target.size() || source[j].first < target[i].first) {
      out.emplace_back(source[j].first, factor * source[j].second);
      ++j;
    } else {
      Scalar s = std::move(target[i].second);
      s += factor * source[j].second;
      if (!s.is_zero()) out.emplace_back(target[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  target = std::move(out);
}

namespace {

SparseRow normalize_sparse(const SparseRow& row, std::size_t cols, Field f) {
  SparseRow s;
  s.reserve(row.size());
  for (const auto& [c, v] : row) {
    if (c >= cols) throw DimensionMismatch("EchelonBuilder: column index out of range");
    if (v.field() != f) throw FieldMismatch("EchelonBuilder: scalar field mismatch");
    if (!v.is_zero()) s.emplace_back(c, v);
  }
  std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow merged;
  for (auto& e : s) {
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
      if (merged.back().second.is_zero()) merged.pop_back();
    } else {
      merged.push_back(std::move(e));
    }
  }
  return merged;
}

SparseRow to_sparse(const Vector& v) {
  SparseRow s;
  for (std::size_t c = 0; c < v.size(); ++c)
    if (!v[c].is_zero()) s.emplace_back(c, v[c]);
  return s;
}

}  // namespace

bool EchelonBuilder::add(const SparseRow& input) {
  SparseRow w;
  std::vector<std::pair<long, Scalar>> hits;
  for (auto& e : normalize_sparse(input, cols_, field_)) {
    long r = row_of_pivot_[e.first];
    if (r >= 0) hits.emplace_back(r, std::move(e.second));
    else w.push_back(std::move(e));
  }
  for (const auto& [r, f] : hits) {
    // Pivot rows vanish on every other pivot column, so only free columns change.
    const SparseRow& src = rows_[static_cast<std::size_t>(r)].entries;
    SparseRow tail;
    tail.reserve(src.size());
    for (const auto& e : src)
      if (e.first != rows_[static_cast<std::size_t>(r)].pivot) tail.push_back(e);
    axpy(w, -f, tail);
  }
  if (w.empty()) return false;

  Scalar lead = w.front().second;
  for (auto& e : w) e.second /= lead;
  std::size_t pivot = w.front().first;
  for (auto& row : rows_) {
    auto it = std::lower_bound(row.entries.begin(), row.entries.end(), pivot,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    if (it == row.entries.end() || it->first != pivot) continue;
    Scalar f = -it->second;
    axpy(row.entries, f, w);
  }
  row_of_pivot_[pivot] = static_cast<long>(rows_.size());
  rows_.push_back({pivot, std::move(w)});
  return true;
}

bool EchelonBuilder::add(const Vector& row) {
  if (row.size() != cols_) throw DimensionMismatch("EchelonBuilder: row length mismatch");
  return add(to_sparse(row));
}

Vector EchelonBuilder::reduce(const Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("EchelonBuilder: vector length mismatch");
  Vector out = v;
  for (const auto& row : rows_) {
    if (out[row.pivot].is_zero()) continue;
    Scalar f = out[row.pivot];
    for (const auto& [c, s] : row.entries) out[c].sub_mul(f, s);
  }
  return out;
}

bool EchelonBuilder::in_row_space(const Vector& v) const {
  for (const auto& s : reduce(v))
    if (!s.is_zero()) return false;
  return true;
}

std::vector<std::size_t> EchelonBuilder::pivots() const {
  std::vector<std::size_t> p;
  for (const auto& r : rows_) p.push_back(r.pivot);
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<Vector> EchelonBuilder::basis() const {
  std::vector<Vector> out;
  for (std::size_t p : pivots()) {
    const Row& row = rows_[static_cast<std::size_t>(row_of_pivot_[p])];
    Vector v(cols_, Scalar(0, field_));
    for (const auto& [c, s] : row.entries) v[c] = s;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vector> EchelonBuilder::kernel_basis() const {
  std::vector<Vector> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (row_of_pivot_[f] >= 0) continue;
    Vector v(cols_, Scalar(0, field_));
    v[f] = Scalar(1, field_);
    for (const auto& row : rows_) {
      auto it = std::lower_bound(row.entries.begin(), row.entries.end(), f,
                                 [](const auto& e, std::size_t c) { return e.first < c; });
      if (it != row.entries.end() && it->first == f) v[row.pivot] = -it->second;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Matrix> intertwiner_basis(const std::vector<std::pair<Matrix, Matrix>>& pairs,
                                      std::size_t rows, std::size_t cols, Field f) {
  // Unknown f(i,l) sits at column i * cols + l.
  EchelonBuilder eb(rows * cols, f);
  for (const auto& [src, tgt] : pairs) {
    if (src.rows() != cols || src.cols() != cols || tgt.rows() != rows || tgt.cols() != rows)
      throw DimensionMismatch("intertwiner_basis: operator shapes do not match the unknown");
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        SparseRow row;
        for (std::size_t l = 0; l < cols; ++l)
          if (!src(l, j).is_zero()) row.emplace_back(i * cols + l, src(l, j));
        for (std::size_t l = 0; l < rows; ++l)
          if (!tgt(i, l).is_zero()) row.emplace_back(l * cols + j, -tgt(i, l));
        eb.add(row);
      }
  }
  std::vector<Matrix> out;
  for (const auto& v : eb.kernel_basis()) out.push_back(Matrix::unflatten(v, rows, cols, f));
  return out;
}

std::vector<Vector> flatten_all(const std::vector<Matrix>& ms) {
  std::vector<Vector> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(m.flatten());
  return out;
}

}  // namespace dgrep
