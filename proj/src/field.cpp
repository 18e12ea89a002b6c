#include "qhh/field.hpp"

#include <stdexcept>
#include <utility>

namespace qhh {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

FieldSpec::FieldSpec(std::uint64_t characteristic) : characteristic_(characteristic) {
  if (characteristic == 0) return;
  if (characteristic >= (1ull << 31))
    throw std::invalid_argument("field characteristic too large (need p < 2^31)");
  if (!is_prime(characteristic))
    throw std::invalid_argument("field characteristic must be 0 or a prime");
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw std::domain_error("inverse of zero residue");
  // Fermat: a^(p-2) mod p.
  std::uint64_t e = p - 2, acc = 1, base = a % p;
  while (e) {
    if (e & 1) acc = mod_mul(acc, base, p);
    base = mod_mul(base, base, p);
    e >>= 1;
  }
  return acc;
}

Scalar Scalar::zero(FieldSpec f) { return Scalar{f}; }

Scalar Scalar::one(FieldSpec f) { return from_int(1, f); }

Scalar Scalar::from_int(std::int64_t v, FieldSpec f) {
  Scalar s{f};
  if (f.is_rational()) {
    s.rat_ = mpq_class{static_cast<long>(v)};
  } else {
    const auto p = static_cast<std::int64_t>(f.characteristic());
    std::int64_t r = v % p;
    if (r < 0) r += p;
    s.res_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::from_rational(const mpq_class& v) {
  Scalar s{FieldSpec::rationals()};
  // Copy-construct rather than assign: mpq-level assignment assumes a
  // canonical source, but v may arrive with a negative or uncancelled
  // denominator.  The copy constructor transfers numerator and
  // denominator as plain integers, which is safe for any value.
  mpq_class copy{v};
  copy.canonicalize();
  s.rat_ = std::move(copy);
  return s;
}

Scalar Scalar::from_residue(std::uint64_t r, FieldSpec f) {
  if (f.is_rational()) throw std::invalid_argument("residue constructor needs a prime field");
  Scalar s{f};
  s.res_ = r % f.characteristic();
  return s;
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? sgn(rat_) == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? rat_ == 1 : res_ == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw std::logic_error("rational() on a residue scalar");
  return rat_;
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw std::logic_error("residue() on a rational scalar");
  return res_;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_)) throw std::invalid_argument("scalars from different fields");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    rat_ += o.rat_;
  } else {
    res_ += o.res_;
    const auto p = field_.characteristic();
    if (res_ >= p) res_ -= p;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    rat_ -= o.rat_;
  } else {
    const auto p = field_.characteristic();
    res_ = (res_ + p - o.res_) % p;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational())
    rat_ *= o.rat_;
  else
    res_ = mod_mul(res_, o.res_, field_.characteristic());
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar s{field_};
  if (field_.is_rational())
    s.rat_ = -rat_;
  else if (res_ != 0)
    s.res_ = field_.characteristic() - res_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar s{field_};
  if (field_.is_rational())
    s.rat_ = 1 / rat_;
  else
    s.res_ = mod_inverse(res_, field_.characteristic());
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.rat_ == b.rat_ : a.res_ == b.res_;
}

std::string Scalar::str() const {
  return field_.is_rational() ? rat_.get_str() : std::to_string(res_);
}

}  // namespace qhh
