#include <doctest.h>

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "qhh/elimination.hpp"
#include "qhh/resolution.hpp"

using namespace qhh;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

// Flip the sign of every prepend-side term (the ones whose left outer
// factor is a proper word) in the degree-n boundary map.
BimoduleMap drop_prepend_sign(const Algebra& a, std::uint32_t n) {
  const BimoduleMap good = boundary_map(a, n);
  BimoduleMap bad{a, n, n - 1};
  for (const auto& g : generators(a.vertex_count(), n)) {
    BimoduleElement img{a, n - 1};
    for (const auto& [key, c] : good.image(g).terms()) {
      const auto& [tgt, l, r] = key;
      img.add_term(tgt, l, r, l.word == Word::identity ? c : -c);
    }
    bad.set_image(g, img);
  }
  return bad;
}

std::vector<BimoduleMap> boundary_chain(const Algebra& a, std::uint32_t N) {
  std::vector<BimoduleMap> maps;
  maps.emplace_back(a, 0, 0);  // placeholder under the augmentation
  for (std::uint32_t n = 1; n <= N; ++n) maps.push_back(boundary_map(a, n));
  return maps;
}

}  // namespace

TEST_CASE("generator inventories") {
  CHECK(generator_count(3, 0) == 3);
  CHECK(generator_count(3, 5) == 18);
  CHECK(generators(2, 2).size() == 6);
  CHECK(generator_ordinal(GeneratorIndex{5, 2, 3}) == 15);
  CHECK(tensor_dimension(3, 1) == 96);
  CHECK(tensor_dimension(1, 0) == 16);
}

TEST_CASE("expansions are exactly the words with the prescribed x count") {
  for (std::uint32_t s = 1; s <= 3; ++s)
    for (std::uint32_t n = 0; n <= 8; ++n) {
      const auto gens = expanded_generators(n, s);
      REQUIRE(gens.size() == generator_count(s, n));
      for (const auto& g : gens) {
        std::size_t expected = 0;
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w)
          if (static_cast<std::uint32_t>(std::popcount(w)) == g.x_count) ++expected;
        CHECK(g.words.size() == expected);
        for (const auto& [w, c] : g.words) {
          CHECK(c == 1);
          CHECK(static_cast<std::uint32_t>(std::popcount(w)) == g.x_count);
        }
      }
    }
}

TEST_CASE("degree-2 middle generator is xy + yx") {
  const auto gens = expanded_generators(2, 3);
  // vertex 0, one x: words 01 (x then y) and 10 (y then x), coefficient 1
  const auto& g = gens[1];
  REQUIRE(g.x_count == 1);
  REQUIRE(g.words.size() == 2);
  CHECK(g.words.at(0b01) == 1);
  CHECK(g.words.at(0b10) == 1);
}

TEST_CASE("generators satisfy the left recursion as well") {
  for (std::uint32_t s = 1; s <= 4; ++s)
    for (std::uint32_t n = 1; n <= 8; ++n) CHECK(left_recursion_holds(n, s));
}

TEST_CASE("a corrupted expansion fails the left recursion") {
  const std::uint32_t s = 3, n = 4;
  auto lower = expanded_generators(n - 1, s);
  auto upper = expanded_generators(n, s);
  upper[5].words.begin()->second = 2;
  CHECK(!left_recursion_holds(lower, upper, s));
  auto upper2 = expanded_generators(n, s);
  upper2[5].words.erase(upper2[5].words.begin());
  CHECK(!left_recursion_holds(lower, upper2, s));
}

TEST_CASE("first boundary map sends generators to commutator-like tensors") {
  const Algebra a{3, kQ};
  const BimoduleMap d1 = boundary_map(a, 1);
  const Scalar one = Scalar::one(kQ);

  // (1, 0, 0) corresponds to y: image e_0 (x) g0 (x) y - y (x) g1 (x) e_2...
  BimoduleElement expect_y{a, 0};
  expect_y.add_term({0, 0, 0}, {0, Word::identity}, {0, Word::y}, one);
  expect_y.add_term({0, 1, 0}, {0, Word::y}, {1, Word::identity}, -one);
  CHECK(d1.image({1, 0, 0}) == expect_y);

  BimoduleElement expect_x{a, 0};
  expect_x.add_term({0, 0, 0}, {0, Word::identity}, {0, Word::x}, one);
  expect_x.add_term({0, 1, 0}, {0, Word::x}, {1, Word::identity}, -one);
  CHECK(d1.image({1, 0, 1}) == expect_x);

  // augmented composite: both terms contract to e_0 * y and cancel
  CHECK(contract(d1.image({1, 0, 0})).is_zero());
}

TEST_CASE("mod 2 the boundary signs collapse") {
  const Algebra a{3, FieldSpec{2}};
  const BimoduleMap d1 = boundary_map(a, 1);
  for (const auto& [key, c] : d1.image({1, 0, 0}).terms()) {
    (void)key;
    CHECK(c.is_one());
  }
}

TEST_CASE("flatten shapes and the augmentation rank") {
  const Algebra a{3, kQ};
  const Matrix m = flatten(boundary_map(a, 1));
  CHECK(m.rows() == 48);
  CHECK(m.cols() == 96);
  CHECK(rank(flatten_contraction(a)) == 12);
  const Algebra a5{5, FieldSpec{3}};
  CHECK(rank(flatten_contraction(a5)) == 20);
}

TEST_CASE("the boundary maps square to zero") {
  for (const auto& field : {kQ, FieldSpec{2}, FieldSpec{3}}) {
    for (std::uint32_t s = 1; s <= 5; ++s) {
      const Algebra a{s, field};
      const CheckReport rep = verify_complex(a, 2 * s + 3);
      CHECK(rep.passed);
    }
  }
}

TEST_CASE("negative control: breaking one prepend sign is caught at its degree") {
  const Algebra a{3, kQ};
  auto maps = boundary_chain(a, 4);
  maps[2] = drop_prepend_sign(a, 2);
  const CheckReport rep = verify_complex(a, 4, maps);
  CHECK(!rep.passed);
  REQUIRE(!rep.lines.empty());
  CHECK(rep.lines.front().find("degree 2") != std::string::npos);
}

TEST_CASE("negative control: dropping all prepend signs dies at the augmentation") {
  const Algebra a{3, kQ};
  std::vector<BimoduleMap> maps;
  maps.emplace_back(a, 0, 0);
  for (std::uint32_t n = 1; n <= 3; ++n) maps.push_back(drop_prepend_sign(a, n));
  const CheckReport rep = verify_complex(a, 3, maps);
  CHECK(!rep.passed);
  REQUIRE(!rep.lines.empty());
  CHECK(rep.lines.front().find("degree 1") != std::string::npos);
}

TEST_CASE("exactness and minimality bookkeeping") {
  const Algebra a{3, kQ};
  const CheckReport rep = verify_exact_and_minimal(a, 8);
  CHECK(rep.passed);
  const Algebra a5{5, FieldSpec{2}};
  const CheckReport rep5 = verify_exact_and_minimal(a5, 11);
  CHECK(rep5.passed);
}

TEST_CASE("bimodule element bookkeeping rejects mismatched factors") {
  const Algebra a{3, kQ};
  BimoduleElement e{a, 1};
  const Scalar one = Scalar::one(kQ);
  // left factor must end at the generator's vertex
  CHECK_THROWS_AS(e.add_term({1, 0, 0}, {1, Word::identity}, {1, Word::identity}, one),
                  std::invalid_argument);
  // right factor must start at the generator's end vertex
  CHECK_THROWS_AS(e.add_term({1, 0, 0}, {0, Word::identity}, {2, Word::identity}, one),
                  std::invalid_argument);
  // x_count may not exceed the degree
  CHECK_THROWS_AS(e.add_term({1, 0, 2}, {0, Word::identity}, {1, Word::identity}, one),
                  std::invalid_argument);
}

TEST_CASE("expansion materialization refuses very large degrees") {
  CHECK_THROWS_AS(expanded_generators(13, 2), std::invalid_argument);
}
