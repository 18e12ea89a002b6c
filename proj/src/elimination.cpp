#include "qhh/elimination.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qhh {

namespace {

/* The kernels run on compact per-field element types: mpq_class for the
 * rationals, uint64_t residues for F_p.  An Ops instance supplies the
 * arithmetic so the elimination code is written once. */

struct RationalOps {
  using Elem = mpq_class;
  static Elem zero() { return Elem{0}; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem mul(const Elem& a, const Elem& b) const { return Elem{a * b}; }
  Elem sub_mul(const Elem& a, const Elem& f, const Elem& b) const { return Elem{a - f * b}; }
  Elem inv(const Elem& a) const { return Elem{1 / a}; }
  Elem from_scalar(const Scalar& s) const { return s.rational(); }
  Scalar to_scalar(const Elem& a) const { return Scalar::from_rational(a); }
};

struct PrimeOps {
  std::uint64_t p;
  using Elem = std::uint64_t;
  static Elem zero() { return 0; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem mul(Elem a, Elem b) const { return mod_mul(a, b, p); }
  Elem sub_mul(Elem a, Elem f, Elem b) const { return (a + p - mod_mul(f, b, p)) % p; }
  Elem inv(Elem a) const { return mod_inverse(a, p); }
  Elem from_scalar(const Scalar& s) const { return s.residue(); }
  Scalar to_scalar(Elem a) const { return Scalar::from_residue(a, FieldSpec{p}); }
};

template <class Ops>
using Row = std::vector<std::pair<std::size_t, typename Ops::Elem>>;

template <class Ops>
std::vector<Row<Ops>> to_rows(const Matrix& m, const Ops& ops) {
  std::vector<Row<Ops>> rows(m.rows());
  for (const auto& [rc, v] : m.entries())
    rows[rc.first].emplace_back(rc.second, ops.from_scalar(v));
  return rows;  // entries() is row-major, so each row arrives sorted
}

// r := r - f * p, both sorted by column; exact cancellations are dropped.
template <class Ops>
Row<Ops> combine(const Row<Ops>& r, const typename Ops::Elem& f, const Row<Ops>& p,
                 const Ops& ops) {
  Row<Ops> out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, ops.sub_mul(Ops::zero(), f, p[j].second));
      ++j;
    } else {
      auto v = ops.sub_mul(r[i].second, f, p[j].second);
      if (!ops.is_zero(v)) out.emplace_back(r[i].first, std::move(v));
      ++i, ++j;
    }
  }
  return out;
}

template <class Ops>
void normalize(Row<Ops>& r, const Ops& ops) {
  const auto inv = ops.inv(r.front().second);
  for (auto& [c, v] : r) v = ops.mul(v, inv);
}

template <class Ops>
struct EchelonRows {
  std::vector<std::size_t> pivot_cols;
  std::vector<Row<Ops>> rows;  // one per pivot, sorted by pivot column
};

/* Reference kernel: straight textbook sparse Gaussian elimination.
 * Columns are swept left to right; an active row is a candidate for
 * column c exactly when its leading entry sits at c (rows keep their
 * leading column strictly increasing as elimination proceeds).  The
 * pivot is the first candidate in original row order.  A backward pass
 * then clears the pivot columns above, giving the RREF. */
template <class Ops>
EchelonRows<Ops> eliminate_reference(std::vector<Row<Ops>> rows, std::size_t cols,
                                     const Ops& ops) {
  EchelonRows<Ops> ech;
  std::vector<Row<Ops>> active;
  for (auto& r : rows)
    if (!r.empty()) active.push_back(std::move(r));

  for (std::size_t col = 0; col < cols && !active.empty(); ++col) {
    std::size_t pivot = active.size();
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (active[i].front().first == col) {
        pivot = i;
        break;
      }
    }
    if (pivot == active.size()) continue;

    Row<Ops> prow = std::move(active[pivot]);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot));
    normalize(prow, ops);

    std::vector<Row<Ops>> next;
    next.reserve(active.size());
    for (auto& r : active) {
      if (r.front().first == col) {
        auto updated = combine(r, r.front().second, prow, ops);
        if (!updated.empty()) next.push_back(std::move(updated));
      } else {
        next.push_back(std::move(r));
      }
    }
    active = std::move(next);

    ech.pivot_cols.push_back(col);
    ech.rows.push_back(std::move(prow));
  }

  // Backward pass: clear each pivot column from the earlier rows.
  for (std::size_t k = ech.rows.size(); k-- > 0;) {
    const std::size_t pc = ech.pivot_cols[k];
    for (std::size_t j = 0; j < k; ++j) {
      auto& rj = ech.rows[j];
      auto it = std::lower_bound(rj.begin(), rj.end(), pc,
                                 [](const auto& e, std::size_t c) { return e.first < c; });
      if (it != rj.end() && it->first == pc) rj = combine(rj, it->second, ech.rows[k], ops);
    }
  }
  return ech;
}

/* Production kernel.  Same sweep, two changes: the pivot among the
 * candidates is the shortest row (ties by original order), which keeps
 * fill-in down on the sparse boundary matrices, and the independent row
 * updates of each step run under OpenMP. */
template <class Ops>
EchelonRows<Ops> eliminate_openmp(std::vector<Row<Ops>> rows, std::size_t cols,
                                  const Ops& ops) {
  EchelonRows<Ops> ech;
  std::vector<Row<Ops>> active;
  for (auto& r : rows)
    if (!r.empty()) active.push_back(std::move(r));

  std::vector<std::size_t> cand;
  for (std::size_t col = 0; col < cols && !active.empty(); ++col) {
    cand.clear();
    for (std::size_t i = 0; i < active.size(); ++i)
      if (active[i].front().first == col) cand.push_back(i);
    if (cand.empty()) continue;

    std::size_t pivot = cand.front();
    for (std::size_t i : cand)
      if (active[i].size() < active[pivot].size()) pivot = i;

    Row<Ops> prow = std::move(active[pivot]);
    normalize(prow, ops);

    const auto n = static_cast<std::ptrdiff_t>(cand.size());
#pragma omp parallel for schedule(dynamic) if (n > 16)
    for (std::ptrdiff_t ci = 0; ci < n; ++ci) {
      const std::size_t i = cand[static_cast<std::size_t>(ci)];
      if (i == pivot) continue;
      active[i] = combine(active[i], active[i].front().second, prow, ops);
    }

    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot));
    std::erase_if(active, [](const Row<Ops>& r) { return r.empty(); });

    ech.pivot_cols.push_back(col);
    ech.rows.push_back(std::move(prow));
  }

  for (std::size_t k = ech.rows.size(); k-- > 0;) {
    const std::size_t pc = ech.pivot_cols[k];
    std::vector<std::size_t> hit;
    for (std::size_t j = 0; j < k; ++j) {
      const auto& rj = ech.rows[j];
      auto it = std::lower_bound(rj.begin(), rj.end(), pc,
                                 [](const auto& e, std::size_t c) { return e.first < c; });
      if (it != rj.end() && it->first == pc) hit.push_back(j);
    }
    const auto n = static_cast<std::ptrdiff_t>(hit.size());
#pragma omp parallel for schedule(dynamic) if (n > 16)
    for (std::ptrdiff_t hi = 0; hi < n; ++hi) {
      auto& rj = ech.rows[hit[static_cast<std::size_t>(hi)]];
      auto it = std::lower_bound(rj.begin(), rj.end(), pc,
                                 [](const auto& e, std::size_t c) { return e.first < c; });
      rj = combine(rj, it->second, ech.rows[k], ops);
    }
  }
  return ech;
}

template <class Ops>
Echelon run(const Matrix& m, Kernel kernel, const Ops& ops) {
  auto ech = kernel == Kernel::serial
                 ? eliminate_reference(to_rows<Ops>(m, ops), m.cols(), ops)
                 : eliminate_openmp(to_rows<Ops>(m, ops), m.cols(), ops);
  Echelon out;
  out.rows = m.rows();
  out.cols = m.cols();
  out.field = m.field();
  out.pivot_cols = std::move(ech.pivot_cols);
  out.rref_rows.reserve(ech.rows.size());
  for (const auto& r : ech.rows) {
    std::vector<std::pair<std::size_t, Scalar>> row;
    row.reserve(r.size());
    for (const auto& [c, v] : r) row.emplace_back(c, ops.to_scalar(v));
    out.rref_rows.push_back(std::move(row));
  }
  return out;
}

Scalar echelon_entry(const Echelon& e, std::size_t k, std::size_t col) {
  const auto& r = e.rref_rows[k];
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& ent, std::size_t c) { return ent.first < c; });
  return (it != r.end() && it->first == col) ? it->second : Scalar::zero(e.field);
}

}  // namespace

Echelon reduced_echelon(const Matrix& m, Kernel kernel) {
  if (m.field().is_rational()) return run(m, kernel, RationalOps{});
  return run(m, kernel, PrimeOps{m.field().characteristic()});
}

std::size_t rank(const Matrix& m, Kernel kernel) {
  return reduced_echelon(m, kernel).rank();
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m, Kernel kernel) {
  const Echelon e = reduced_echelon(m, kernel);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(m.cols(), Scalar::zero(m.field()));
    v[f] = Scalar::one(m.field());
    for (std::size_t k = 0; k < e.rank(); ++k)
      v[e.pivot_cols[k]] = -echelon_entry(e, k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, std::span<const Scalar> b,
                                         Kernel kernel) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  Matrix rhs{m.rows(), 1, m.field()};
  for (std::size_t r = 0; r < m.rows(); ++r) rhs.set(r, 0, b[r]);
  const Echelon e = reduced_echelon(m.augmented(rhs), kernel);

  std::vector<Scalar> x(m.cols(), Scalar::zero(m.field()));
  for (std::size_t k = 0; k < e.rank(); ++k) {
    if (e.pivot_cols[k] == m.cols()) return std::nullopt;  // pivot in the b column
    x[e.pivot_cols[k]] = echelon_entry(e, k, m.cols());
  }
  return x;
}

}  // namespace qhh
