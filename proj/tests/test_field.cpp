#include <doctest.h>

#include <random>
#include <stdexcept>

#include "qhh/field.hpp"

using namespace qhh;

TEST_CASE("field specs accept 0 and primes, reject everything else") {
  CHECK(FieldSpec{0}.is_rational());
  CHECK(FieldSpec{2}.characteristic() == 2);
  CHECK(FieldSpec{3}.characteristic() == 3);
  CHECK(FieldSpec{5}.characteristic() == 5);
  CHECK(FieldSpec{1000003}.characteristic() == 1000003);
  CHECK_THROWS_AS(FieldSpec{1}, std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec{4}, std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec{6}, std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec{91}, std::invalid_argument);  // 7 * 13
  CHECK_THROWS_AS(FieldSpec{std::uint64_t{1} << 40}, std::invalid_argument);
}

TEST_CASE("rational scalars stay canonical") {
  const FieldSpec q = FieldSpec::rationals();
  const Scalar half = Scalar::from_rational(mpq_class{2, 4});
  CHECK(half.rational() == mpq_class{1, 2});
  const Scalar neg = Scalar::from_rational(mpq_class{3, -6});
  CHECK(neg.rational() == mpq_class{-1, 2});
  CHECK((half + neg).is_zero());
  CHECK(Scalar::from_int(-7, q).str() == "-7");
  CHECK((half * Scalar::from_int(2, q)).is_one());
  CHECK_THROWS_AS(Scalar::zero(q).inverse(), std::domain_error);
  CHECK_THROWS_AS(Scalar::one(q).residue(), std::logic_error);
}

TEST_CASE("prime field arithmetic wraps and inverts") {
  const FieldSpec f5{5};
  const Scalar a = Scalar::from_int(7, f5);   // 2 mod 5
  const Scalar b = Scalar::from_int(-1, f5);  // 4 mod 5
  CHECK(a.residue() == 2);
  CHECK(b.residue() == 4);
  CHECK((a * b).residue() == 3);
  CHECK((a + b).residue() == 1);
  CHECK((a - b).residue() == 3);
  CHECK(a.inverse().residue() == 3);  // 2 * 3 = 6 = 1 mod 5
  CHECK((-a).residue() == 3);
  CHECK_THROWS_AS(Scalar::zero(f5).inverse(), std::domain_error);
  CHECK_THROWS_AS(a.rational(), std::logic_error);
}

TEST_CASE("mixing fields is rejected") {
  const Scalar a = Scalar::one(FieldSpec::rationals());
  const Scalar b = Scalar::one(FieldSpec{3});
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("field laws hold for random big rationals") {
  // Numerators and denominators around 256 bits: the arithmetic has to
  // be exact far beyond machine words.
  std::mt19937_64 rng{20240811};
  const auto big = [&rng]() {
    mpz_class z = 1;
    for (int limb = 0; limb < 4; ++limb) {
      z <<= 64;
      z += mpz_class{static_cast<unsigned long>(rng() >> 1)};
    }
    if (rng() & 1) z = -z;
    return z;
  };
  for (int trial = 0; trial < 25; ++trial) {
    mpz_class den1 = big(), den2 = big(), den3 = big();
    if (den1 == 0) den1 = 1;
    if (den2 == 0) den2 = 1;
    if (den3 == 0) den3 = 1;
    const Scalar a = Scalar::from_rational(mpq_class{big(), den1});
    const Scalar b = Scalar::from_rational(mpq_class{big(), den2});
    const Scalar c = Scalar::from_rational(mpq_class{big(), den3});
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a + (b + c) == (a + b) + c);
    CHECK(a * (b * c) == (a * b) * c);
    CHECK(a - a == Scalar::zero(FieldSpec::rationals()));
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
  }
}

TEST_CASE("field laws hold for random prime residues") {
  const FieldSpec f{2147483647};  // largest prime below 2^31
  std::mt19937_64 rng{7};
  for (int trial = 0; trial < 100; ++trial) {
    const Scalar a = Scalar::from_residue(rng() % 2147483647, f);
    const Scalar b = Scalar::from_residue(rng() % 2147483647, f);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a - b) + b == a);
    if (!a.is_zero()) {
      CHECK((a * a.inverse()).is_one());
      CHECK(mod_mul(a.residue(), mod_inverse(a.residue(), 2147483647), 2147483647) == 1);
    }
  }
}
