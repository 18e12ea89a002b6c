#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qhh/field.hpp"

namespace qhh {

/* The algebra under study is K Gamma / I for the circular quiver Gamma
 * on s vertices with a doubled arrow i -> i+1 (mod s), written x and y
 * for the two arrow sums, and I generated by x^2, xy + yx, y^2.  Every
 * path of length >= 3 dies in the quotient, and a canonical basis is
 * given by the words below at each vertex (yx rewrites to -xy). */

enum class Word : std::uint8_t { identity = 0, x = 1, y = 2, xy = 3 };

constexpr std::uint32_t word_degree(Word w) {
  switch (w) {
    case Word::identity: return 0;
    case Word::x:
    case Word::y: return 1;
    case Word::xy: return 2;
  }
  return 0;
}

const char* word_name(Word w);

struct WordProduct {
  Word word;
  int sign;  // +1 or -1
};

// Product of two canonical words, nullopt when it vanishes.
std::optional<WordProduct> word_product(Word a, Word b);

/* Basis element e_v * w: the canonical word w starting at vertex v. */
struct BasisElement {
  std::uint32_t vertex;
  Word word;
  friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
};

class Algebra {
 public:
  Algebra(std::uint32_t s, FieldSpec field);  // throws on s == 0

  std::uint32_t vertex_count() const { return s_; }
  FieldSpec field() const { return field_; }
  std::size_t dimension() const { return 4u * s_; }

  const std::vector<BasisElement>& basis() const { return basis_; }
  std::size_t basis_index(const BasisElement& b) const;

  std::uint32_t reduce_vertex(std::int64_t v) const;
  std::uint32_t terminus(const BasisElement& b) const;

  /* Basis of the corner space e_i * A * e_{i+n}, i.e. the canonical
   * basis elements starting at i whose word degree is congruent to n
   * mod s.  The branch structure depends only on s and n mod s. */
  std::vector<BasisElement> corner_basis(std::uint32_t i, std::uint64_t n) const;
  std::vector<Word> corner_words(std::uint64_t n) const;

  // Basis of A * e_v (elements ending at v) and of e_v * A, in word order.
  std::array<BasisElement, 4> basis_ending_at(std::uint32_t v) const;
  std::array<BasisElement, 4> basis_starting_at(std::uint32_t v) const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.s_ == b.s_ && a.field_ == b.field_;
  }

 private:
  std::uint32_t s_;
  FieldSpec field_;
  std::vector<BasisElement> basis_;
};

/* Sparse K-linear combination of canonical basis elements. */
class AlgebraElement {
 public:
  explicit AlgebraElement(const Algebra& a) : algebra_(&a) {}
  static AlgebraElement from_basis(const Algebra& a, const BasisElement& b);
  static AlgebraElement unit(const Algebra& a);        // sum of all idempotents
  static AlgebraElement arrow_sum_x(const Algebra& a); // x as an element
  static AlgebraElement arrow_sum_y(const Algebra& a);

  const Algebra& algebra() const { return *algebra_; }
  const std::map<BasisElement, Scalar>& coefficients() const { return coeffs_; }
  Scalar coefficient(const BasisElement& b) const;
  bool is_zero() const { return coeffs_.empty(); }

  // True when every contributing word has degree >= 1.
  bool in_radical() const;

  void add_term(const BasisElement& b, const Scalar& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement operator-() const;
  AlgebraElement scaled(const Scalar& c) const;
  AlgebraElement operator*(const AlgebraElement& o) const;

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

  std::string str() const;

 private:
  void check_same_algebra(const AlgebraElement& o) const;

  const Algebra* algebra_;
  std::map<BasisElement, Scalar> coeffs_;
};

/* Product of two basis elements: zero unless the vertices chain, else a
 * basis element up to sign (yx = -xy). */
std::optional<std::pair<BasisElement, int>> basis_product(const Algebra& a,
                                                          const BasisElement& u,
                                                          const BasisElement& v);

// l * v * r for basis elements l, r.
AlgebraElement sandwich(const BasisElement& l, const AlgebraElement& v,
                        const BasisElement& r);

}  // namespace qhh
