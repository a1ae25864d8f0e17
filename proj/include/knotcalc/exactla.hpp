#pragma once

// Exact sparse linear algebra over Q (GMP rationals).
//
// Rows are stored as sorted (column, value) lists without zeros.  Row
// reduction is Gauss-Jordan with the leftmost available pivot; the reduced
// row echelon form of a row space is unique, so results are reproducible
// bit for bit.

#include <cstddef>
#include <string>
#include <vector>

#include "knotcalc/diagrams.hpp"

namespace knotcalc {

struct SparseEntry {
  std::size_t col;
  Rational value;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

using SparseRow = std::vector<SparseEntry>;

// Builds a sparse row from unsorted entries, summing duplicates and dropping zeros.
SparseRow make_row(std::vector<SparseEntry> entries);
SparseRow dense_to_sparse(const std::vector<Rational>& dense);
std::vector<Rational> sparse_to_dense(const SparseRow& row, std::size_t size);

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix from_dense(const std::vector<std::vector<Rational>>& dense);
  static RationalMatrix identity(std::size_t size);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseRow& row(std::size_t r) const { return data_.at(r); }
  const std::vector<SparseRow>& row_data() const { return data_; }

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);
  void set_row(std::size_t r, SparseRow row);
  // Appends a row; entries must lie in 0..cols-1.
  void append_row(SparseRow row);

  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }
  std::vector<std::vector<Rational>> to_dense() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  void check_row(const SparseRow& row) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseRow> data_;
};

RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs);
SparseRow apply(const RationalMatrix& m, const SparseRow& column_vector);

// A subspace of Q^ambient, held as its reduced row echelon basis.
struct Subspace {
  std::size_t ambient = 0;
  std::vector<SparseRow> basis;
  std::vector<std::size_t> pivots;  // pivots[i] is the leading column of basis[i]

  std::size_t dim() const { return basis.size(); }
  // v minus its component along the basis; the result vanishes on all pivot columns.
  SparseRow reduce(const SparseRow& v) const;
  bool contains(const SparseRow& v) const { return reduce(v).empty(); }

  friend bool operator==(const Subspace&, const Subspace&) = default;
};

struct RrefResult {
  Subspace space;
  std::size_t rank = 0;
};

RrefResult rref(const RationalMatrix& m);
// Row space of the given rows inside Q^ambient.
Subspace row_space(std::size_t ambient, const std::vector<SparseRow>& rows);
std::size_t rank(const RationalMatrix& m);
// Basis of {v : m v = 0}, in reduced row echelon form.
Subspace kernel(const RationalMatrix& m);
// Non-pivot coordinates; they index a basis of Q^ambient / s.
std::vector<std::size_t> quotient_basis(std::size_t ambient, const Subspace& s);

std::string to_string(const Rational& q);  // always "num/den"
Rational parse_rational(const std::string& text);

}  // namespace knotcalc
