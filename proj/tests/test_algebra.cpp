#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyadic/algebra.hpp"
#include "polyadic/corpus.hpp"

using namespace polyadic;
using namespace polyadic::algebra;

namespace {

Scalar im(long long p, long long q) { return Scalar(Rational(0), make_rational(p, q)); }

PolyadicAlgebra vn3_algebra() {
    MultiLinearMap mult = MultiLinearMap::uniform(3, 1, 2);
    mult.coeff(Word{0}, Word{0, 1, 0}) = Scalar(1);
    mult.coeff(Word{1}, Word{1, 0, 1}) = Scalar(1);
    return PolyadicAlgebra(mult, {"b1", "b2"});
}

PolyadicAlgebra matrix_algebra_2x2() {
    MultiLinearMap mult = MultiLinearMap::uniform(2, 1, 4);
    auto idx = [](int i, int j) { return i * 2 + j; };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    if (j == k) mult.coeff(Word{idx(i, l)}, Word{idx(i, j), idx(k, l)}) = Scalar(1);
    return PolyadicAlgebra(mult, {"e11", "e12", "e21", "e22"});
}

}  // namespace

TEST_CASE("algebra_from_constants") {
    // Z_3 group algebra from its group-table structure constants.
    std::vector<Scalar> chi(27, Scalar());
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) chi[(a * 3 + b) * 3 + (a + b) % 3] = Scalar(1);
    auto z3 = algebra_from_constants(3, 2, chi);
    CHECK(z3.dim() == 3);
    CHECK(z3.product({TensorSum::basis({3}, {1}), TensorSum::basis({3}, {2})}) ==
          TensorSum::basis({3}, {0}));

    // The antidiagonal-pair ternary algebra on the basis (1,0), (0,1).
    std::vector<Scalar> chi3(16, Scalar());
    chi3[MultiLinearMap::index_of({0, 1, 0}, {2, 2, 2}) * 2 + 0] = Scalar(1);
    chi3[MultiLinearMap::index_of({1, 0, 1}, {2, 2, 2}) * 2 + 1] = Scalar(1);
    auto a33 = algebra_from_constants(2, 3, chi3);
    CHECK(a33.arity() == 3);
    CHECK(check_total_associativity_linear(a33.mult()).holds);

    auto zero = algebra_from_constants(2, 3, std::vector<Scalar>(16, Scalar()));
    CHECK(check_total_associativity_linear(zero.mult()).holds);

    CHECK_THROWS_AS(algebra_from_constants(2, 3, std::vector<Scalar>(15, Scalar())),
                    AlgebraError);
}

TEST_CASE("associativity: map level, with fault injection") {
    CHECK(check_total_associativity_linear(vn3_algebra().mult()).holds);
    CHECK(check_total_associativity_linear(corpus::group_algebra(3).mult()).holds);

    MultiLinearMap bad = vn3_algebra().mult();
    bad.coeff(Word{1}, Word{0, 1, 0}) = Scalar(1);  // flip one structure constant
    auto v = check_total_associativity_linear(bad);
    CHECK_FALSE(v.holds);
    CHECK(v.witness.has_value());
}

TEST_CASE("cross-oracle: map-level vs element-level associativity") {
    std::vector<PolyadicAlgebra> corpus_algs{vn3_algebra(), corpus::group_algebra(2),
                                             corpus::group_algebra(3)};
    for (auto& alg : corpus_algs) {
        CHECK(check_total_associativity_linear(alg.mult()).holds ==
              check_associativity_elementwise(alg).holds);
    }
}

TEST_CASE("derived multiplication") {
    auto z2 = corpus::group_algebra(2);
    auto der3 = derived_multiplication(z2, 2);
    CHECK(der3.arity() == 3);
    // [a,b,c] agrees with a*(b*c) on the basis.
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                CHECK(der3.product({TensorSum::basis({2}, {a}), TensorSum::basis({2}, {b}),
                                    TensorSum::basis({2}, {c})}) ==
                      TensorSum::basis({2}, {(a + b + c) % 2}));

    auto der4 = derived_multiplication(z2, 3);
    CHECK(der4.arity() == 4);

    // Derived of derived = directly derived with the product iteration count.
    auto dd = derived_multiplication(der3, 2);  // arity 2*(3-1)+1 = 5
    auto direct = derived_multiplication(z2, 4);
    CHECK(dd.mult() == direct.mult());
}

TEST_CASE("units") {
    auto z3 = corpus::group_algebra(3);
    REQUIRE(z3.unit());
    CHECK(check_unit(z3, *z3.unit()).holds);

    // The regular ternary algebra has no unit at all.
    auto vn = vn3_algebra();
    auto search = find_unit(vn);
    CHECK_FALSE(search.found);

    // Derived ternary unit eta0 (x) eta0 works.
    auto der3 = derived_multiplication(corpus::group_algebra(2), 2);
    REQUIRE(der3.unit());
    CHECK(check_unit(der3, *der3.unit()).holds);
    // And as a neutral unit sequence of separate maps.
    MultiLinearMap eta0(std::vector<int>{}, std::vector<int>{2});
    eta0.coeff(Word{0}, Word{}) = Scalar(1);
    CHECK(check_unit_sequence(der3, {eta0, eta0}).holds);
}

TEST_CASE("quermap on the antidiagonal ternary algebra") {
    std::vector<Scalar> chi3(16, Scalar());
    chi3[MultiLinearMap::index_of({0, 1, 0}, {2, 2, 2}) * 2 + 0] = Scalar(1);
    chi3[MultiLinearMap::index_of({1, 0, 1}, {2, 2, 2}) * 2 + 1] = Scalar(1);
    auto a33 = algebra_from_constants(2, 3, chi3);

    TensorSum x({2});
    x.add_term(im(3, 5), {0});
    x.add_term(im(7, 9), {1});
    auto q = quermap(a33, x);
    REQUIRE(q.exists);
    CHECK(q.nullity == 0);
    TensorSum want({2});
    want.add_term(im(-9, 7), {0});
    want.add_term(im(-5, 3), {1});
    CHECK(q.value == want);

    // Binary group algebra: the n = 2 querelement is the unit.
    auto z3 = corpus::group_algebra(3);
    auto qg = quermap(z3, TensorSum::basis({3}, {1}));
    REQUIRE(qg.exists);
    CHECK(qg.value == TensorSum::basis({3}, {0}));

    // Zero algebra: nothing is querable.
    auto zero = algebra_from_constants(2, 3, std::vector<Scalar>(16, Scalar()));
    auto qz = quermap(zero, TensorSum::basis({2}, {0}));
    CHECK_FALSE(qz.exists);
}

TEST_CASE("mediality") {
    CHECK(check_mediality(corpus::group_algebra(3)).holds);
    CHECK(check_mediality(corpus::group_algebra(2)).holds);
    auto mat = matrix_algebra_2x2();
    auto v = check_mediality(mat);
    CHECK_FALSE(v.holds);
    CHECK(v.witness.has_value());
}

TEST_CASE("opposite algebra and medial commutativity") {
    auto mat = matrix_algebra_2x2();
    auto op = opposite_algebra(mat);
    // Classical opposite: op(a, b) = b a.
    auto idx = [](int i, int j) { return i * 2 + j; };
    CHECK(op.product({TensorSum::basis({4}, {idx(0, 1)}), TensorSum::basis({4}, {idx(1, 1)})}) ==
          TensorSum({4}));
    CHECK(op.product({TensorSum::basis({4}, {idx(1, 1)}), TensorSum::basis({4}, {idx(0, 1)})}) ==
          TensorSum::basis({4}, {idx(0, 1)}));
    CHECK(op.product({TensorSum::basis({4}, {idx(1, 0)}), TensorSum::basis({4}, {idx(0, 1)})}) ==
          TensorSum::basis({4}, {idx(0, 0)}));

    auto mc = check_medially_commutative(corpus::group_algebra(3));
    CHECK(mc.admissible);
    CHECK(mc.holds);
    auto mc2 = check_medially_commutative(mat);
    CHECK(mc2.admissible);
    CHECK_FALSE(mc2.holds);

    // A 4-ary derived algebra admits the 4-place twist from the (2,3) grid.
    auto der4 = derived_multiplication(corpus::group_algebra(2), 3);
    auto op4 = opposite_algebra(der4);
    CHECK(op4.arity() == 4);
    auto op4b = opposite_algebra(der4, std::make_pair(2, 3));
    CHECK(op4.mult() == op4b.mult());

    // No 3-place twist exists.
    CHECK_THROWS_AS(opposite_algebra(vn3_algebra()), AlgebraError);
    auto mc3 = check_medially_commutative(vn3_algebra());
    CHECK_FALSE(mc3.admissible);
}

TEST_CASE("tensor product of algebras") {
    auto z2 = corpus::group_algebra(2);
    auto prod = tensor_product_algebras({z2, z2});
    CHECK(prod.dim() == 4);
    CHECK(prod.arity() == 2);
    // (g^a (x) g^b) * (g^c (x) g^d) = g^(a+c) (x) g^(b+d)
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    CHECK(prod.product({TensorSum::basis({4}, {a * 2 + b}),
                                        TensorSum::basis({4}, {c * 2 + d})}) ==
                          TensorSum::basis({4}, {((a + c) % 2) * 2 + (b + d) % 2}));
    REQUIRE(prod.unit());
    CHECK(check_unit(prod, *prod.unit()).holds);

    // Three copies of the regular ternary algebra: 8-dim, associative by
    // construction (constructor re-verifies).
    auto vn = vn3_algebra();
    auto prod3 = tensor_product_algebras({vn, vn, vn});
    CHECK(prod3.dim() == 8);
    CHECK(prod3.arity() == 3);

    // Unital ternary case: three derived ternary group algebras.
    auto der3 = derived_multiplication(z2, 2);
    auto prod3u = tensor_product_algebras({der3, der3, der3});
    REQUIRE(prod3u.unit());
    CHECK(check_unit(prod3u, *prod3u.unit()).holds);
}

TEST_CASE("heteromorphisms and homomorphisms") {
    auto z3 = corpus::group_algebra(3);
    CHECK(check_homomorphism(MultiLinearMap::identity({3}), z3, z3).holds);

    // g -> g^2 is a group automorphism of Z_3.
    MultiLinearMap square(std::vector<int>{3}, std::vector<int>{3});
    for (int a = 0; a < 3; ++a) square.coeff(Word{(2 * a) % 3}, Word{a}) = Scalar(1);
    CHECK(check_homomorphism(square, z3, z3).holds);

    // g -> g + const fails.
    MultiLinearMap shift(std::vector<int>{3}, std::vector<int>{3});
    for (int a = 0; a < 3; ++a) shift.coeff(Word{(a + 1) % 3}, Word{a}) = Scalar(1);
    CHECK_FALSE(check_homomorphism(shift, z3, z3).holds);

    // Two-place heteromorphism Phi(a,b) = a*b from the derived ternary algebra
    // to its binary base, with one intact element.
    auto z2 = corpus::group_algebra(2);
    auto der3 = derived_multiplication(z2, 2);
    Heteromorphism h{2, 1, z2.mult()};
    CHECK(check_heteromorphism(h, der3, z2).holds);
}
