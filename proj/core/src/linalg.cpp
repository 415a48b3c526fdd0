#include "sklylab/linalg.hpp"

#include "sklylab/error.hpp"

namespace sklylab {

std::vector<std::size_t> rref(Mat& m, const FieldSpec& field) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pr = r;
    while (pr < m.size() && m[pr][c].is_zero()) ++pr;
    if (pr == m.size()) continue;
    std::swap(m[r], m[pr]);
    Scalar inv = m[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
    m[r][c] = field.one();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar f = m[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!m[r][k].is_zero()) m[i][k] -= f * m[r][k];
      m[i][c] = field.zero();
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

std::size_t rank(Mat m, const FieldSpec& field) { return rref(m, field).size(); }

std::vector<Vec> kernel(Mat m, std::size_t cols, const FieldSpec& field) {
  for (const auto& row : m)
    if (row.size() != cols) throw Error(Errc::ShapeMismatch, "kernel: ragged matrix");
  auto pivots = rref(m, field);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, field.zero());
    v[f] = field.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(Mat m, const Vec& b, const FieldSpec& field) {
  if (m.size() != b.size()) throw Error(Errc::ShapeMismatch, "solve: rhs length");
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
  auto pivots = rref(m, field);
  Vec x(cols, field.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == cols) return std::nullopt;
    x[pivots[i]] = m[i][cols];
  }
  return x;
}

RowSpace::RowSpace(std::size_t dim, FieldSpec field) : dim_(dim), field_(std::move(field)) {}

Vec RowSpace::reduce(Vec v) const {
  if (v.size() != dim_) throw Error(Errc::ShapeMismatch, "RowSpace::reduce: length");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (v[p].is_zero()) continue;
    Scalar f = v[p];
    const Vec& row = rows_[i];
    for (std::size_t k = p; k < dim_; ++k)
      if (!row[k].is_zero()) v[k] -= f * row[k];
    v[p] = field_.zero();
  }
  return v;
}

bool RowSpace::contains(const Vec& v) const {
  Vec r = reduce(v);
  for (const auto& x : r)
    if (!x.is_zero()) return false;
  return true;
}

bool RowSpace::insert(Vec v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < dim_ && v[p].is_zero()) ++p;
  if (p == dim_) return false;
  Scalar inv = v[p].inverse();
  for (std::size_t k = p; k < dim_; ++k) v[k] *= inv;
  v[p] = field_.one();
  // Keep the space fully reduced so reduce() is a single pass.
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    Scalar f = row[p];
    for (std::size_t k = p; k < dim_; ++k)
      if (!v[k].is_zero()) row[k] -= f * v[k];
    row[p] = field_.zero();
  }
  // Rows are kept sorted by pivot so reduce() sweeps left to right.
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  return true;
}

}  // namespace sklylab
