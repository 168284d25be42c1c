#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace semiloop::linalg {

using Row = std::vector<std::uint32_t>;

/// Incremental Gaussian elimination over Z/p. Rows are kept in reduced echelon
/// form, so at most `cols` of them are ever stored no matter how many
/// equations are fed in.
class Echelon {
 public:
  Echelon(std::size_t cols, std::uint32_t p) : cols_(cols), p_(p) {}

  /// Adds a row; returns true when it was independent of the previous ones.
  bool add(Row row);
  /// Reduces `v` against the stored rows; the zero vector means v is in the span.
  Row reduce(Row v) const;
  bool in_span(const Row& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return p_; }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Basis of {x : row . x = 0 for every stored row}.
  std::vector<Row> nullspace() const;

 private:
  std::size_t cols_;
  std::uint32_t p_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

/// A subspace of (Z/p)^dim given by a basis in reduced echelon form, so equal
/// subspaces compare equal.
class Subspace {
 public:
  Subspace(std::size_t dim, std::uint32_t p, const std::vector<Row>& spanning);

  std::size_t ambient() const { return dim_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Row>& basis() const { return basis_; }
  bool contains(const Row& v) const;
  bool operator==(const Subspace& other) const { return basis_ == other.basis_; }

 private:
  std::size_t dim_;
  std::uint32_t p_;
  std::vector<Row> basis_;
};

/// Solves A x = b where A is given by its columns. Returns nothing when the
/// system is inconsistent.
std::optional<Row> solve_columns(const std::vector<Row>& columns, const Row& b, std::uint32_t p);

}  // namespace semiloop::linalg
