#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qhh/cochain.hpp"

namespace qhh {

/* Degree of the polynomial ring generators z_0, ..., z_D of the
 * cohomology ring modulo nilpotents: D = 2s when s is odd and the
 * characteristic is not 2, else D = s. */
std::uint32_t ring_generator_degree(const Algebra& a);
std::string regime_description(const Algebra& a);

/* The cocycle z_u (0 <= u <= D): sends generator (D, i, u) to e_i for
 * every vertex i and every other generator to zero.  Requires D to be
 * a multiple of s so the identity word lies in the corner. */
Cochain ring_generator(const Algebra& a, std::uint32_t u, std::uint32_t D);

/* Step v of the explicit lifting of z_u along the resolution, for any
 * multiple Dp of s: maps (Dp+v, k, l) to (v, k, l-u) tensored with
 * identity outer factors when 0 <= l-u <= v, else to zero. */
BimoduleMap shift_lift(const Algebra& a, std::uint32_t u, std::uint32_t v,
                       std::uint32_t Dp);

/* Base case (the contraction of step 0 equals z_u) and the commuting
 * squares of shift_lift against the boundary maps, up to step v_max. */
CheckReport verify_shift_lift(Workspace& ws, std::uint32_t u, std::uint32_t Dp,
                              std::uint32_t v_max);

/* Lifting of a cocycle f of degree n through the resolution: maps[v] is
 * a bimodule map Q^(n+v) -> Q^v for 0 <= v <= steps, the contraction of
 * maps[0] equals f, and consecutive maps commute with the boundaries.
 * Built step by step by solving the weight-restricted linear systems;
 * exactness makes every step solvable. */
struct LiftingChain {
  Cochain base;
  std::vector<BimoduleMap> maps;
};
LiftingChain generic_lift(Workspace& ws, const Cochain& f, std::uint32_t steps);

bool is_cocycle(Workspace& ws, const Cochain& c);
bool is_coboundary(Workspace& ws, const Cochain& c);
bool cohomologous(Workspace& ws, const Cochain& a, const Cochain& b);

/* Cup product representative f.g: compose f with step deg(f) of a
 * generic lifting of g.  Both arguments must be cocycles. */
Cochain yoneda_product(Workspace& ws, const Cochain& f, const Cochain& g);

/* Products of the ring generators computed through the explicit
 * lifting; matches records literal cochain equality with the expected
 * degree-2D generator sum at column k + l. */
struct ProductEntry {
  std::uint32_t k = 0, l = 0, sum = 0;
  bool matches = false;
};
std::vector<ProductEntry> generator_product_table(Workspace& ws);

/* The ring presentation evidence, for s >= 3: the z_u are independent
 * classes spanning HH^D, every t-fold product of generators equals the
 * expected generator sum (t <= t_max), distinct column sums are not
 * cohomologous, and the products span the full cohomology in their
 * degree. */
CheckReport verify_presentation(Workspace& ws, std::uint32_t t_max = 3);

/* Products through the explicit lifting agree, up to coboundary, with
 * products through freshly solved generic liftings, for every ordered
 * pair of ring generators. */
CheckReport verify_lifting_equivalence(Workspace& ws);

/* Nilpotence evidence at the sampled degrees (all nonzero mod s): the
 * stated cohomology classes there take radical values, and iterated
 * squaring kills each of them within the degree cap.  A square that
 * survives in a degree divisible by D is a genuine failure; one that is
 * still alive when the cap cuts off iteration is only a warning. */
CheckReport verify_nilpotence_samples(Workspace& ws,
                                      std::span<const std::uint32_t> degrees);

}  // namespace qhh
