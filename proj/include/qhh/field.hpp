#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace qhh {

/* Ground field selector.  Characteristic 0 means arbitrary-precision
 * rationals; any other admissible value is a prime p and selects the
 * residue field F_p.  Primes up to 2^31 are accepted so that residue
 * products fit comfortably in 128-bit intermediates. */
class FieldSpec {
 public:
  constexpr FieldSpec() = default;
  explicit FieldSpec(std::uint64_t characteristic);

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec prime_field(std::uint64_t p) { return FieldSpec{p}; }

  std::uint64_t characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint64_t characteristic_ = 0;
};

/* Exact element of the field named by a FieldSpec.  Rational values are
 * kept canonical (lowest terms, positive denominator), residues are kept
 * in [0, p), so operator== is structural equality of field elements.
 * Mixing operands from different fields throws std::invalid_argument. */
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar zero(FieldSpec f);
  static Scalar one(FieldSpec f);
  static Scalar from_int(std::int64_t v, FieldSpec f);
  static Scalar from_rational(const mpq_class& v);
  static Scalar from_residue(std::uint64_t r, FieldSpec f);

  FieldSpec field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  // Accessors for the active representation.
  const mpq_class& rational() const;
  std::uint64_t residue() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar operator-() const;
  Scalar inverse() const;  // throws std::domain_error on zero

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string str() const;

 private:
  explicit Scalar(FieldSpec f) : field_(f) {}
  void check_same_field(const Scalar& o) const;

  FieldSpec field_{};
  mpq_class rat_{0};        // active iff field_.is_rational()
  std::uint64_t res_ = 0;   // active otherwise, in [0, p)
};

// Residue helpers used by the elimination kernels as well.
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

}  // namespace qhh
