#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qhh/matrix.hpp"

namespace qhh {

/* Which elimination kernel to run.  `serial` is the plain textbook
 * routine kept as a reference; `parallel` is the production kernel with
 * sparsity-guided pivoting and OpenMP row updates.  Both produce the
 * same reduced row echelon form (it is canonical), which the tests
 * exploit as a cross-check. */
enum class Kernel { serial, parallel };

/* Reduced row echelon form.  Row k has its leading 1 at pivot_cols[k];
 * rows are sorted by pivot column and stored sparsely. */
struct Echelon {
  std::size_t rows = 0, cols = 0;
  FieldSpec field;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rref_rows;

  std::size_t rank() const { return pivot_cols.size(); }
};

Echelon reduced_echelon(const Matrix& m, Kernel kernel = Kernel::parallel);

std::size_t rank(const Matrix& m, Kernel kernel = Kernel::parallel);

/* Basis of {v : m v = 0}.  One vector per free column, ascending; the
 * vector for free column f has a 1 at f, zeros at the other free
 * columns, and the negated reduced-echelon coefficients at the pivot
 * columns.  Deterministic and normalized. */
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m,
                                              Kernel kernel = Kernel::parallel);

/* One solution of m x = b, or nullopt if none exists.  Deterministic:
 * free variables are set to zero under the natural column order. */
std::optional<std::vector<Scalar>> solve(const Matrix& m,
                                         std::span<const Scalar> b,
                                         Kernel kernel = Kernel::parallel);

}  // namespace qhh
