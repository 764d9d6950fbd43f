#pragma once

#include "polyadic/algebra.hpp"
#include "polyadic/coalgebra.hpp"
#include "polyadic/hopf.hpp"
#include "polyadic/nary.hpp"

namespace polyadic::corpus {

/// Cyclic group Z_M as a table structure with a k-ary sum-mod op named `name`.
nary::NaryStructure cyclic_sum_structure(int mod, int arity, const std::string& name);

/// The nonunital zeroless (3,3)-field sample {ip/q : p,q odd}, |p| <= bound,
/// |q| <= bound, both signs of p and q (duplicate values keep distinct ids
/// from distinct (p,q) pairs deduplicated by value).
nary::NaryStructure ternary_field_sample(int bound);

/// Pairs (ip/q, ip'/q') with ternary componentwise addition and antidiagonal
/// multiplication; the flagship zeroless nonunital ternary algebra sample.
nary::NaryStructure pair_algebra_sample(int bound);

/// Imaginary-line sample i*(a/b) including zero, with binary addition and
/// ternary multiplication; the nonderived (2,3)-field.
nary::NaryStructure imaginary_field_sample(int bound);

/// Group algebra of Z_M over the scalars, binary multiplication.
algebra::PolyadicAlgebra group_algebra(int mod);

/// Group-like coalgebra on Z_M: Delta(g) = g (x) g, counit 1.
coalgebra::PolyadicCoalgebra group_coalgebra(int mod);

/// Group bialgebra of Z_M (algebra + coalgebra above, unit e_0, counit 1).
hopf::PolyadicBialgebra group_bialgebra(int mod);

/// Binary matrix coalgebra on the matrix units of Mat_N.
coalgebra::PolyadicCoalgebra matrix_coalgebra(int n);

/// Ternary coalgebra Delta(a) = a(x)b(x)a, Delta(b) = b(x)a(x)b.
coalgebra::PolyadicCoalgebra d3_coalgebra();

/// Classical antipode of a cyclic group algebra, from the group inverse.
MultiLinearMap classical_antipode(int mod);

/// Derived ternary bialgebra of Z_M: mu(x,y,z) = xyz, Delta(g) = g(x)g(x)g.
hopf::PolyadicBialgebra derived_ternary_group_bialgebra(int mod);

/// dim-3 ternary coalgebra with two group-likes and a primitive element.
coalgebra::PolyadicCoalgebra primitive_ternary_coalgebra();

}  // namespace polyadic::corpus
