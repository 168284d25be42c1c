#include "semiloop/linalg.hpp"

#include <algorithm>

#include "semiloop/numtheory.hpp"

namespace semiloop::linalg {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(nt::powmod(a, p - 2, p));
}

// row -= factor * pivot_row
void axpy(Row& row, const Row& pivot_row, std::uint64_t factor, std::uint32_t p) {
  if (factor == 0) return;
  const std::uint64_t neg = p - factor;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (pivot_row[j] != 0) row[j] = static_cast<std::uint32_t>((row[j] + neg * pivot_row[j]) % p);
  }
}

}  // namespace

Row Echelon::reduce(Row v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) axpy(v, rows_[i], v[pivots_[i]], p_);
  return v;
}

bool Echelon::in_span(const Row& v) const {
  const Row r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
}

bool Echelon::add(Row row) {
  row = reduce(std::move(row));
  std::size_t pc = 0;
  while (pc < cols_ && row[pc] == 0) ++pc;
  if (pc == cols_) return false;
  const std::uint64_t s = inv_mod(row[pc], p_);
  for (auto& x : row) x = static_cast<std::uint32_t>(x * s % p_);
  for (auto& other : rows_) axpy(other, row, other[pc], p_);
  // Keep rows ordered by pivot column.
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pc) - pivots_.begin();
  rows_.insert(rows_.begin() + pos, std::move(row));
  pivots_.insert(pivots_.begin() + pos, pc);
  return true;
}

std::vector<Row> Echelon::nullspace() const {
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots_) is_pivot[c] = true;
  std::vector<Row> out;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Row v(cols_, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::uint32_t c = rows_[i][free];
      if (c != 0) v[pivots_[i]] = p_ - c;
    }
    out.push_back(std::move(v));
  }
  return out;
}

Subspace::Subspace(std::size_t dim, std::uint32_t p, const std::vector<Row>& spanning) : dim_(dim), p_(p) {
  Echelon e(dim, p);
  for (const auto& v : spanning) e.add(v);
  basis_ = e.rows();
}

bool Subspace::contains(const Row& v) const {
  Row r = v;
  for (const auto& b : basis_) {
    std::size_t pc = 0;
    while (b[pc] == 0) ++pc;
    axpy(r, b, r[pc], p_);
  }
  return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
}

std::optional<Row> solve_columns(const std::vector<Row>& columns, const Row& b, std::uint32_t p) {
  const std::size_t n = columns.size();
  const std::size_t m = b.size();
  // Augmented rows [A | b].
  std::vector<Row> a(m, Row(n + 1, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) a[i][j] = columns[j][i];
  }
  for (std::size_t i = 0; i < m; ++i) a[i][n] = b[i];

  std::size_t r = 0;
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t k = r;
    while (k < m && a[k][c] == 0) ++k;
    if (k == m) continue;
    std::swap(a[k], a[r]);
    const std::uint64_t s = inv_mod(a[r][c], p);
    for (auto& x : a[r]) x = static_cast<std::uint32_t>(x * s % p);
    for (std::size_t i = 0; i < m; ++i) {
      if (i != r) axpy(a[i], a[r], a[i][c], p);
    }
    piv.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i) {
    if (a[i][n] != 0) return std::nullopt;
  }
  Row x(n, 0);
  for (std::size_t i = 0; i < r; ++i) x[piv[i]] = a[i][n];
  return x;
}

}  // namespace semiloop::linalg
