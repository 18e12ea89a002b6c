#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "qhh/field.hpp"

namespace qhh {

/* Sparse exact matrix over a fixed field.  Only nonzero entries are
 * stored; writing a zero erases.  Entries iterate in row-major order,
 * which the elimination kernels rely on when slicing rows. */
class Matrix {
 public:
  using EntryMap = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

  Matrix(std::size_t rows, std::size_t cols, FieldSpec field)
      : rows_(rows), cols_(cols), field_(field) {}

  static Matrix identity(std::size_t n, FieldSpec field);
  static Matrix from_columns(std::size_t rows,
                             const std::vector<std::vector<Scalar>>& cols,
                             FieldSpec field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldSpec field() const { return field_; }

  void set(std::size_t r, std::size_t c, const Scalar& v);
  void add_to(std::size_t r, std::size_t c, const Scalar& v);
  Scalar at(std::size_t r, std::size_t c) const;

  std::size_t entry_count() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  const EntryMap& entries() const { return entries_; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  std::vector<Scalar> apply(std::span<const Scalar> v) const;

  // Columns of `o` appended on the right; used for augmented systems
  // and stacked-span rank arguments.
  Matrix augmented(const Matrix& o) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  void check_bounds(std::size_t r, std::size_t c) const;

  std::size_t rows_, cols_;
  FieldSpec field_;
  EntryMap entries_;
};

}  // namespace qhh
