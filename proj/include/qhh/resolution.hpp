#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qhh/algebra.hpp"
#include "qhh/check.hpp"
#include "qhh/matrix.hpp"

namespace qhh {

/* Degree-n generator of the free bimodule Q^n: one generator per pair
 * (vertex, x_count) with 0 <= x_count <= n.  It corresponds to the sum
 * of all length-n words from `vertex` containing exactly x_count x's. */
struct GeneratorIndex {
  std::uint32_t degree;
  std::uint32_t vertex;
  std::uint32_t x_count;
  friend auto operator<=>(const GeneratorIndex&, const GeneratorIndex&) = default;
};

inline std::size_t generator_count(std::uint32_t s, std::uint32_t degree) {
  return std::size_t{s} * (degree + 1);
}
inline std::size_t generator_ordinal(const GeneratorIndex& g) {
  return std::size_t{g.vertex} * (g.degree + 1) + g.x_count;
}
std::vector<GeneratorIndex> generators(std::uint32_t s, std::uint32_t degree);

/* Explicit expansion of a generator in the free path algebra: a sum of
 * length-n binary words with integer coefficients.  Bit t of a word is
 * 1 when position t (from the left) is an x, 0 for a y.  Materialized
 * only for small degrees; used to validate the generator recursions. */
struct ExpandedGenerator {
  std::uint32_t degree = 0, vertex = 0, x_count = 0;
  std::map<std::uint64_t, std::int64_t> words;
};

/* Expansions built by the append-side recursion (right-multiply the
 * degree-(n-1) expansions by the arrows).  Requires degree <= 12. */
std::vector<ExpandedGenerator> expanded_generators(std::uint32_t degree, std::uint32_t s);

/* True iff `upper` (degree n) equals the prepend-side recursion applied
 * to `lower` (degree n-1): each generator must also arise by
 * left-multiplying the shifted lower generators by the arrows. */
bool left_recursion_holds(std::span<const ExpandedGenerator> lower,
                          std::span<const ExpandedGenerator> upper, std::uint32_t s);
bool left_recursion_holds(std::uint32_t degree, std::uint32_t s);

/* Element of the free bimodule Q^n: a sum of terms c * (l (x) g (x) r)
 * with l a basis element ending at g.vertex and r one starting at the
 * generator's end vertex. */
class BimoduleElement {
 public:
  using Key = std::tuple<GeneratorIndex, BasisElement, BasisElement>;

  BimoduleElement(const Algebra& a, std::uint32_t degree)
      : algebra_(&a), degree_(degree) {}

  const Algebra& algebra() const { return *algebra_; }
  std::uint32_t degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Scalar>& terms() const { return terms_; }

  void add_term(const GeneratorIndex& g, const BasisElement& left,
                const BasisElement& right, const Scalar& c);
  BimoduleElement& operator+=(const BimoduleElement& o);
  BimoduleElement& operator-=(const BimoduleElement& o);

  // c * (l * this * r): multiplies every term's outer factors.
  BimoduleElement sandwiched(const BasisElement& l, const BasisElement& r,
                             const Scalar& c) const;

  friend bool operator==(const BimoduleElement&, const BimoduleElement&);

 private:
  const Algebra* algebra_;
  std::uint32_t degree_;
  std::map<Key, Scalar> terms_;
};

/* Bimodule map Q^source -> Q^target given by the images of the
 * generators; generators without a stored image map to zero. */
class BimoduleMap {
 public:
  BimoduleMap(const Algebra& a, std::uint32_t source_degree, std::uint32_t target_degree)
      : algebra_(&a), source_(source_degree), target_(target_degree),
        empty_(a, target_degree) {}

  const Algebra& algebra() const { return *algebra_; }
  std::uint32_t source_degree() const { return source_; }
  std::uint32_t target_degree() const { return target_; }

  void set_image(const GeneratorIndex& g, BimoduleElement img);
  const BimoduleElement& image(const GeneratorIndex& g) const;
  BimoduleElement apply(const BimoduleElement& e) const;

 private:
  const Algebra* algebra_;
  std::uint32_t source_, target_;
  std::map<GeneratorIndex, BimoduleElement> images_;
  BimoduleElement empty_;  // shared zero image for generators never set
};

/* The degree-n boundary map Q^n -> Q^(n-1) of the bimodule resolution
 * (n >= 1).  Each generator maps to its append-side terms plus
 * (-1)^n times the prepend-side terms. */
BimoduleMap boundary_map(const Algebra& a, std::uint32_t n);

/* The augmentation Q^0 -> A: multiply the two outer factors. */
AlgebraElement contract(const BimoduleElement& e);

/* K-linear matrix of a bimodule map in the canonical tensor coordinates
 * (generator-major, then left factor, then right factor).  Q^n has
 * dimension 16*s*(n+1). */
std::size_t tensor_dimension(std::uint32_t s, std::uint32_t degree);
std::size_t tensor_index(const Algebra& a, const GeneratorIndex& g,
                         std::size_t left_slot, std::size_t right_slot);
Matrix flatten(const BimoduleMap& m);
Matrix flatten_contraction(const Algebra& a);  // 4s x 16s matrix of Q^0 -> A

/* d(n) . d(n+1) = 0 for every composite with source degree <= N, and
 * the multiplication-augmented composite at the bottom.  Composites are
 * labeled by their source degree. */
CheckReport verify_complex(const Algebra& a, std::uint32_t N);
CheckReport verify_complex(const Algebra& a, std::uint32_t N,
                           const std::vector<BimoduleMap>& maps);  // maps[n] = degree-n map

/* Rank bookkeeping: the augmentation is onto, rank d1 = dim Q^0 - 4s,
 * and rank d(n) + rank d(n+1) = dim Q^n for 1 <= n < N; plus
 * minimality: no image term has both outer factors of degree zero. */
CheckReport verify_exact_and_minimal(const Algebra& a, std::uint32_t N);

}  // namespace qhh
