#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "qhh/algebra.hpp"
#include "qhh/check.hpp"
#include "qhh/elimination.hpp"
#include "qhh/matrix.hpp"
#include "qhh/resolution.hpp"

namespace qhh {

/* Degree-n cochain: a bimodule map Q^n -> A, stored as its values on
 * the generators.  The value at generator (n,i,j) must lie in the
 * corner space e_i * A * e_{i+n}. */
class Cochain {
 public:
  Cochain(const Algebra& a, std::uint32_t degree) : algebra_(&a), degree_(degree) {}

  const Algebra& algebra() const { return *algebra_; }
  std::uint32_t degree() const { return degree_; }
  AlgebraElement value(const GeneratorIndex& g) const;
  const std::map<GeneratorIndex, AlgebraElement>& values() const { return values_; }

  void add_value(const GeneratorIndex& g, const AlgebraElement& v);
  bool is_zero() const { return values_.empty(); }

  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  Cochain scaled(const Scalar& c) const;
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend bool operator==(const Cochain&, const Cochain&);

 private:
  const Algebra* algebra_;
  std::uint32_t degree_;
  std::map<GeneratorIndex, AlgebraElement> values_;
};

/* Basis of the degree-n cochain space: one cochain per (corner word,
 * generator), sending that generator to the word at its vertex and all
 * others to zero.  Order: corner words in word order (identity, x, y,
 * xy), then vertex-major, then x_count.  This order fixes the
 * coordinates used by every matrix below. */
struct CochainLabel {
  GeneratorIndex gen;
  Word value_word;
  friend auto operator<=>(const CochainLabel&, const CochainLabel&) = default;
};

std::vector<CochainLabel> hom_basis_labels(const Algebra& a, std::uint32_t n);
Cochain basis_cochain(const Algebra& a, const CochainLabel& l);
std::vector<Scalar> coordinates(const Cochain& c);
Cochain cochain_from_coordinates(const Algebra& a, std::uint32_t n,
                                 std::span<const Scalar> coords);

/* f . h for any bimodule map h landing in f's degree, as a cochain of
 * h's source degree.  With h = d(n+1) this is the induced differential;
 * with h a lifting step it is the cup product representative. */
Cochain compose_with_boundary(const Cochain& f, const BimoduleMap& boundary);

struct HhDims {
  std::size_t hom = 0;        // dim of the degree-n cochain space
  std::size_t kernel = 0;     // dim Ker of the outgoing hat map
  std::size_t image_out = 0;  // dim Im of the outgoing hat map
  std::size_t image_in = 0;   // dim Im of the incoming hat map
  std::size_t cohomology = 0; // kernel - image_in
};

/* Cached per-(s, field) computation context: boundary maps, hat
 * matrices (the matrix of f |-> f . d(n+1) in hom-basis coordinates)
 * and their ranks.  Not thread-safe; use one per thread. */
class Workspace {
 public:
  Workspace(std::uint32_t s, FieldSpec field) : algebra_(s, field) {}

  // Cached maps point into the member algebra, so the workspace must
  // stay where it was built.
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  const Algebra& algebra() const { return algebra_; }
  const BimoduleMap& boundary(std::uint32_t n);  // n >= 1
  const Matrix& hat(std::uint32_t n);
  std::size_t hat_rank(std::uint32_t n);
  const std::vector<CochainLabel>& labels(std::uint32_t n);
  std::size_t hom_dimension(std::uint32_t n);
  std::size_t label_index(const CochainLabel& l);

  /* Brute-force dimensions at degree n; also asserts that every image
   * generator of the incoming map is annihilated by the outgoing one. */
  HhDims hh_computed(std::uint32_t n);

 private:
  Algebra algebra_;
  std::map<std::uint32_t, BimoduleMap> boundaries_;
  std::map<std::uint32_t, Matrix> hats_;
  std::map<std::uint32_t, std::size_t> ranks_;
  std::map<std::uint32_t, std::vector<CochainLabel>> labels_;
  std::map<std::uint32_t, std::map<CochainLabel, std::size_t>> label_index_;
  std::map<std::uint32_t, bool> inclusion_checked_;
};

// Standalone builders (uncached), matching the Workspace accessors.
Matrix hat_matrix(const Algebra& a, std::uint32_t n);
HhDims hh_dimension_computed(std::uint32_t s, FieldSpec field, std::uint32_t n);

/* Closed-form dimension of HH^n, defined for s >= 3.  Writing
 * n = m*s + r, the nonzero branches require s even, m even, or
 * characteristic 2. */
std::size_t hh_dimension_closed_form(std::uint64_t n, std::uint32_t s, FieldSpec field);

struct ImKerDims {
  std::size_t image = 0;   // dim Im of the outgoing hat map at degree n
  std::size_t kernel = 0;  // dim Ker of the same map
};
ImKerDims im_ker_closed_form(std::uint64_t n, std::uint32_t s, FieldSpec field);

/* Check the stated image/kernel/cohomology basis families at degree n
 * (s >= 3) against the computed matrices: membership, independence,
 * cardinality, and quotient-independence for the cohomology family.
 * Families with a sign that differs from their printed source form are
 * additionally compared and reported as notes. */
CheckReport verify_stated_bases(Workspace& ws, std::uint32_t n);

/* The stated cohomology basis at degree n as explicit cocycles (empty
 * when HH^n = 0).  Shared with the nilpotence sampling. */
std::vector<Cochain> stated_hh_basis(Workspace& ws, std::uint32_t n);

struct DimensionRow {
  std::uint32_t n = 0;
  std::size_t dim_hom = 0, dim_ker = 0, dim_im = 0, dim_hh_computed = 0;
  std::optional<std::size_t> dim_hh_formula;
  bool agree = true;
};

struct DimensionTable {
  std::uint32_t s = 0;
  std::uint64_t characteristic = 0;
  std::uint32_t max_degree = 0;
  std::vector<DimensionRow> rows;
  bool all_agree = true;
};

DimensionTable dimension_table(Workspace& ws, std::uint32_t max_degree);

}  // namespace qhh
