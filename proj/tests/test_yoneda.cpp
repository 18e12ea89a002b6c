#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhh/yoneda.hpp"

using namespace qhh;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

Cochain unit_cochain(const Algebra& a) {
  Cochain u{a, 0};
  for (std::uint32_t i = 0; i < a.vertex_count(); ++i)
    u.add_value({0, i, 0}, AlgebraElement::from_basis(a, {i, Word::identity}));
  return u;
}

bool has_note_containing(const CheckReport& rep, const std::string& needle) {
  for (const auto& line : rep.lines)
    if (line.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("generator degree tracks the parity regime") {
  CHECK(ring_generator_degree(Algebra{3, kQ}) == 6);
  CHECK(ring_generator_degree(Algebra{3, FieldSpec{2}}) == 3);
  CHECK(ring_generator_degree(Algebra{4, kQ}) == 4);
  CHECK(ring_generator_degree(Algebra{4, FieldSpec{2}}) == 4);
  CHECK(ring_generator_degree(Algebra{5, FieldSpec{3}}) == 10);
  CHECK(regime_description(Algebra{3, kQ}) ==
        "s odd, characteristic != 2: generators in degree 6");
  CHECK(regime_description(Algebra{3, FieldSpec{2}}) ==
        "characteristic 2: generators in degree 3");
  CHECK(regime_description(Algebra{4, kQ}) == "s even: generators in degree 4");
}

TEST_CASE("ring generators are identity-valued cocycles at one column") {
  const Algebra a{3, kQ};
  Workspace ws{3, kQ};
  const Cochain z2 = ring_generator(a, 2, 6);
  CHECK(z2.degree() == 6);
  CHECK(z2.values().size() == 3);
  for (std::uint32_t i = 0; i < 3; ++i) {
    const AlgebraElement v = z2.value({6, i, 2});
    CHECK(v.coefficient({i, Word::identity}).is_one());
  }
  for (std::uint32_t u = 0; u <= 6; ++u) CHECK(is_cocycle(ws, ring_generator(a, u, 6)));

  CHECK_THROWS_AS(ring_generator(a, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(ring_generator(a, 7, 6), std::invalid_argument);
  CHECK_THROWS_AS(shift_lift(a, 0, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(shift_lift(a, 4, 1, 3), std::invalid_argument);
}

TEST_CASE("the explicit lift shifts the column index and nothing else") {
  const Algebra a{3, kQ};
  const BimoduleMap m = shift_lift(a, 1, 2, 3);
  CHECK(m.source_degree() == 5);
  CHECK(m.target_degree() == 2);
  CHECK(m.image({5, 0, 0}).is_zero());  // column 0 - 1 out of range
  CHECK(m.image({5, 0, 4}).is_zero());  // column 4 - 1 > 2
  const BimoduleElement img = m.image({5, 0, 2});
  REQUIRE(img.terms().size() == 1);
  const auto& [key, c] = *img.terms().begin();
  CHECK(std::get<0>(key) == GeneratorIndex{2, 0, 1});
  CHECK(std::get<1>(key) == BasisElement{0, Word::identity});
  CHECK(std::get<2>(key) == BasisElement{2, Word::identity});
  CHECK(c.is_one());
}

TEST_CASE("explicit lifts contract to the generators and commute with boundaries") {
  Workspace ws{3, kQ};
  for (std::uint32_t u : {0u, 3u, 6u}) CHECK(verify_shift_lift(ws, u, 6, 6).passed);
  Workspace ws2{3, FieldSpec{2}};
  for (std::uint32_t u = 0; u <= 3; ++u) CHECK(verify_shift_lift(ws2, u, 3, 3).passed);
}

TEST_CASE("products of ring generators add their column indices") {
  Workspace ws{3, FieldSpec{2}};
  const Algebra& a = ws.algebra();
  const std::uint32_t D = 3;
  for (const auto& [k, l] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {0, 1}, {1, 2}, {2, 0}, {3, 3}}) {
    const Cochain prod =
        yoneda_product(ws, ring_generator(a, k, D), ring_generator(a, l, D));
    CHECK(cohomologous(ws, prod, ring_generator(a, k + l, 2 * D)));
  }
  // One rational-regime sample (D = 6, solved lift through six steps).
  Workspace wsq{3, kQ};
  const Cochain prod = yoneda_product(wsq, ring_generator(wsq.algebra(), 2, 6),
                                      ring_generator(wsq.algebra(), 3, 6));
  CHECK(cohomologous(wsq, prod, ring_generator(wsq.algebra(), 5, 12)));
}

TEST_CASE("the identity class is a two-sided unit") {
  Workspace ws{3, FieldSpec{2}};
  const Algebra& a = ws.algebra();
  const Cochain u = unit_cochain(a);
  CHECK(is_cocycle(ws, u));
  const Cochain z1 = ring_generator(a, 1, 3);
  // Left unit: composing with step 0 of a lift is exactly the contraction.
  CHECK(yoneda_product(ws, u, z1) == z1);
  CHECK(cohomologous(ws, yoneda_product(ws, z1, u), z1));
}

TEST_CASE("odd classes anticommute up to coboundary") {
  Workspace ws{3, kQ};
  const auto deg1 = stated_hh_basis(ws, 1);
  REQUIRE(deg1.size() == 4);
  for (const auto& [i, j] : std::vector<std::pair<std::size_t, std::size_t>>{
           {0, 1}, {1, 2}, {0, 3}}) {
    const Cochain fg = yoneda_product(ws, deg1[i], deg1[j]);
    const Cochain gf = yoneda_product(ws, deg1[j], deg1[i]);
    CHECK(cohomologous(ws, fg, gf.scaled(-Scalar::one(kQ))));
  }
}

TEST_CASE("products commute and associate in characteristic 2") {
  Workspace ws{3, FieldSpec{2}};
  const auto deg1 = stated_hh_basis(ws, 1);
  const auto deg2 = stated_hh_basis(ws, 2);
  REQUIRE(deg1.size() == 4);
  REQUIRE(deg2.size() == 3);
  CHECK(cohomologous(ws, yoneda_product(ws, deg1[0], deg1[1]),
                     yoneda_product(ws, deg1[1], deg1[0])));
  CHECK(cohomologous(ws, yoneda_product(ws, deg1[2], deg2[0]),
                     yoneda_product(ws, deg2[0], deg1[2])));
  const Cochain left = yoneda_product(ws, yoneda_product(ws, deg1[0], deg1[1]), deg1[2]);
  const Cochain right = yoneda_product(ws, deg1[0], yoneda_product(ws, deg1[1], deg1[2]));
  CHECK(cohomologous(ws, left, right));
}

TEST_CASE("lifting rejects non-cocycles") {
  Workspace ws{3, kQ};
  const Algebra& a = ws.algebra();
  Cochain bad{a, 0};
  bad.add_value({0, 0, 0}, AlgebraElement::from_basis(a, {0, Word::identity}));
  CHECK(!is_cocycle(ws, bad));
  CHECK_THROWS_AS(generic_lift(ws, bad, 1), std::invalid_argument);
  CHECK_THROWS_AS(yoneda_product(ws, bad, bad), std::invalid_argument);
}

TEST_CASE("coboundary and cohomology-class predicates") {
  Workspace ws{3, kQ};
  const Algebra& a = ws.algebra();
  // An image vector of the degree-0 induced map is a coboundary at degree 1.
  std::vector<Scalar> c0(ws.hom_dimension(0), Scalar::zero(kQ));
  c0[0] = Scalar::one(kQ);
  const Cochain boundary =
      cochain_from_coordinates(a, 1, ws.hat(0).apply(c0));
  CHECK(is_cocycle(ws, boundary));
  CHECK(is_coboundary(ws, boundary));
  const auto deg1 = stated_hh_basis(ws, 1);
  CHECK(!is_coboundary(ws, deg1[0]));
  CHECK(cohomologous(ws, deg1[0], deg1[0] - boundary));
  CHECK(!cohomologous(ws, deg1[0], deg1[1]));
  CHECK_THROWS_AS(cohomologous(ws, deg1[0], unit_cochain(a)), std::invalid_argument);
}

TEST_CASE("generator product tables match the column-sum rule") {
  Workspace ws{3, FieldSpec{2}};
  const auto table = generator_product_table(ws);
  REQUIRE(table.size() == 16);
  for (const auto& e : table) {
    CHECK(e.sum == e.k + e.l);
    CHECK(e.matches);
  }
  Workspace small{2, kQ};
  CHECK_THROWS_AS(generator_product_table(small), std::invalid_argument);
}

TEST_CASE("the presentation evidence passes in the cheap regimes") {
  Workspace ws{3, FieldSpec{2}};
  const CheckReport rep = verify_presentation(ws, 3);
  CHECK(rep.passed);
  CHECK(has_note_containing(rep, "characteristic 2"));
  CHECK(has_note_containing(rep, "polynomial part verified"));

  Workspace ws4{4, kQ};
  const CheckReport rep4 = verify_presentation(ws4, 2);
  CHECK(rep4.passed);
  CHECK(has_note_containing(rep4, "s even"));

  CHECK_THROWS_AS(verify_presentation(ws, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_presentation(ws, 4), std::invalid_argument);
  Workspace small{2, kQ};
  CHECK_THROWS_AS(verify_presentation(small, 2), std::invalid_argument);
}

TEST_CASE("solved liftings reproduce the explicit products up to coboundary") {
  Workspace ws{3, FieldSpec{2}};
  const CheckReport rep = verify_lifting_equivalence(ws);
  CHECK(rep.passed);
  CHECK(has_note_containing(rep, "16 ordered generator pairs"));
}

TEST_CASE("sampled classes off the generator degrees square to zero") {
  Workspace ws{3, kQ};
  const std::vector<std::uint32_t> degs{1, 2};
  const CheckReport rep = verify_nilpotence_samples(ws, degs);
  CHECK(rep.passed);
  CHECK(has_note_containing(rep, "vanishes at degree"));
  for (const auto& line : rep.lines) CHECK(line.find("WARN") == std::string::npos);

  Workspace ws4{4, kQ};
  const std::vector<std::uint32_t> one{1};
  CHECK(verify_nilpotence_samples(ws4, one).passed);

  Workspace ws2{3, FieldSpec{2}};
  CHECK(verify_nilpotence_samples(ws2, degs).passed);
}

TEST_CASE("nilpotence sampling rejects out-of-scope degrees") {
  Workspace ws{3, kQ};
  const std::vector<std::uint32_t> bad{3};
  CHECK_THROWS_AS(verify_nilpotence_samples(ws, bad), std::invalid_argument);
  Workspace small{2, kQ};
  const std::vector<std::uint32_t> degs{1};
  CHECK_THROWS_AS(verify_nilpotence_samples(small, degs), std::invalid_argument);
}
