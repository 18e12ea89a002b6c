#include "qhh/matrix.hpp"

#include <stdexcept>

namespace qhh {

Matrix Matrix::identity(std::size_t n, FieldSpec field) {
  Matrix m{n, n, field};
  const Scalar one = Scalar::one(field);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, one);
  return m;
}

Matrix Matrix::from_columns(std::size_t rows,
                            const std::vector<std::vector<Scalar>>& cols,
                            FieldSpec field) {
  Matrix m{rows, cols.size(), field};
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r)
      if (!cols[c][r].is_zero()) m.set(r, c, cols[c][r]);
  }
  return m;
}

void Matrix::check_bounds(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  check_bounds(r, c);
  if (!(v.field() == field_)) throw std::invalid_argument("entry from a different field");
  if (v.is_zero())
    entries_.erase({r, c});
  else
    entries_.insert_or_assign({r, c}, v);
}

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& v) {
  check_bounds(r, c);
  if (!(v.field() == field_)) throw std::invalid_argument("entry from a different field");
  if (v.is_zero()) return;
  auto it = entries_.find({r, c});
  if (it == entries_.end()) {
    entries_.emplace(std::pair{r, c}, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  check_bounds(r, c);
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Scalar::zero(field_) : it->second;
}

Matrix Matrix::transpose() const {
  Matrix t{cols_, rows_, field_};
  for (const auto& [rc, v] : entries_) t.set(rc.second, rc.first, v);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || !(field_ == o.field_))
    throw std::invalid_argument("matrix product shape/field mismatch");
  Matrix p{rows_, o.cols_, field_};
  for (const auto& [rc, v] : entries_) {
    const auto [r, k] = rc;
    auto it = o.entries_.lower_bound({k, 0});
    const auto end = o.entries_.lower_bound({k + 1, 0});
    for (; it != end; ++it) p.add_to(r, it->first.second, v * it->second);
  }
  return p;
}

std::vector<Scalar> Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (const auto& [rc, val] : entries_) {
    if (!v[rc.second].is_zero()) out[rc.first] += val * v[rc.second];
  }
  return out;
}

Matrix Matrix::augmented(const Matrix& o) const {
  if (rows_ != o.rows_ || !(field_ == o.field_))
    throw std::invalid_argument("augmentation shape/field mismatch");
  Matrix m{rows_, cols_ + o.cols_, field_};
  m.entries_ = entries_;
  for (const auto& [rc, v] : o.entries_) m.set(rc.first, cols_ + rc.second, v);
  return m;
}

}  // namespace qhh
