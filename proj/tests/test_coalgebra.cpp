#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyadic/coalgebra.hpp"
#include "polyadic/corpus.hpp"

using namespace polyadic;
using namespace polyadic::coalgebra;

namespace {

PolyadicCoalgebra derived_matrix_ternary() {
    auto base = corpus::matrix_coalgebra(2);
    PolyadicCoalgebra out(base.coiterate(2), base.labels());
    out.set_counit(tensor(*base.counit(), *base.counit()));
    return out;
}

}  // namespace

TEST_CASE("coassociativity verdicts") {
    CHECK(check_coassociativity(corpus::d3_coalgebra().comult()).holds);
    CHECK(check_coassociativity(derived_matrix_ternary().comult()).holds);

    // Skew-degree-1 ladder comultiplication is never coassociative.
    MultiLinearMap bad = MultiLinearMap::uniform(1, 3, 2);
    bad.coeff(Word{0, 0, 0}, Word{0}) = Scalar(1);
    bad.coeff(Word{0, 1, 1}, Word{1}) = Scalar(1);
    bad.coeff(Word{1, 0, 1}, Word{1}) = Scalar(1);
    bad.coeff(Word{1, 1, 0}, Word{1}) = Scalar(1);
    auto v = check_coassociativity(bad);
    CHECK_FALSE(v.holds);
    CHECK_THROWS_AS((PolyadicCoalgebra{bad}), CoalgebraError);
}

TEST_CASE("cross-oracle: map-level vs element-level coassociativity") {
    for (auto& C : {corpus::d3_coalgebra(), corpus::group_coalgebra(2),
                    corpus::group_coalgebra(3), corpus::matrix_coalgebra(2)}) {
        CHECK(check_coassociativity(C.comult()).holds ==
              check_coassociativity_elementwise(C).holds);
    }
}

TEST_CASE("coiterate") {
    auto d3 = corpus::d3_coalgebra();
    CHECK(d3.coiterate(1) == d3.comult());

    auto z2 = corpus::group_coalgebra(2);
    CHECK(z2.coiterate(2).apply_basis({1}) ==
          TensorSum::basis({2, 2, 2}, {1, 1, 1}));

    CHECK(d3.coiterate(2).apply_basis({0}) ==
          TensorSum::basis({2, 2, 2, 2, 2}, {0, 1, 0, 1, 0}));

    CHECK(coiterate_placement_independent(d3, 2).holds);
    CHECK(coiterate_placement_independent(z2, 3).holds);
}

TEST_CASE("derived comultiplications") {
    auto base = corpus::matrix_coalgebra(2);
    auto der = derived_matrix_ternary();
    CHECK(is_derived_comultiplication(der, base, 2).holds);
    CHECK(is_derived_comultiplication(base, base, 1).holds);

    auto d3 = corpus::d3_coalgebra();
    CHECK_FALSE(is_derived_comultiplication(d3, corpus::group_coalgebra(2), 2).holds);
}

TEST_CASE("derived-base search certifies the flagship verdicts") {
    auto d3 = corpus::d3_coalgebra();
    auto rep = search_derived_binary_base(d3);
    CHECK(rep.verdict == DerivedSearch::nonderived);

    // The derived ternary group coalgebra is recognized with a witness.
    auto z2 = corpus::group_coalgebra(2);
    PolyadicCoalgebra der(z2.coiterate(2), z2.labels());
    auto rep2 = search_derived_binary_base(der);
    CHECK(rep2.verdict == DerivedSearch::derived);
    REQUIRE(rep2.base.has_value());
    PolyadicCoalgebra found(*rep2.base, z2.labels());
    CHECK(is_derived_comultiplication(der, found, 2).holds);
}

TEST_CASE("counits") {
    auto z3 = corpus::group_coalgebra(3);
    REQUIRE(z3.counit());
    CHECK(check_counit(z3, *z3.counit()).holds);

    auto mat = corpus::matrix_coalgebra(2);
    CHECK(check_counit(mat, *mat.counit()).holds);

    auto der = derived_matrix_ternary();
    REQUIRE(der.counit());
    CHECK(check_counit(der, *der.counit()).holds);

    auto d3 = corpus::d3_coalgebra();
    auto search = find_counit(d3);
    CHECK_FALSE(search.found);
}

TEST_CASE("co-commutativity classes") {
    auto z2 = corpus::group_coalgebra(2);
    auto c1 = co_commutativity_class(z2);
    CHECK(c1.totally);
    CHECK(c1.medial_admissible);
    CHECK(c1.medially);

    auto d3 = corpus::d3_coalgebra();
    auto c2 = co_commutativity_class(d3);
    CHECK_FALSE(c2.totally);
    CHECK_FALSE(c2.medial_admissible);  // no 3-place twist exists

    auto mat = corpus::matrix_coalgebra(2);
    auto c3 = co_commutativity_class(mat);
    CHECK_FALSE(c3.totally);
    CHECK(c3.medial_admissible);
    CHECK_FALSE(c3.medially);
}

TEST_CASE("co-mediality") {
    CHECK(check_comediality(corpus::group_coalgebra(2)).holds);
    // Computed verdicts: the ladder coalgebra is co-medial (its expansion grid
    // is symmetric), the matrix coalgebra is not.
    CHECK(check_comediality(corpus::d3_coalgebra()).holds);
    CHECK_FALSE(check_comediality(corpus::matrix_coalgebra(2)).holds);
}

TEST_CASE("group-like and primitive elements") {
    auto z3 = corpus::group_coalgebra(3);
    CHECK(find_grouplike_and_primitive(z3).grouplike == std::vector<int>{0, 1, 2});

    auto d3 = corpus::d3_coalgebra();
    CHECK(find_grouplike_and_primitive(d3).grouplike.empty());

    auto prim = corpus::primitive_ternary_coalgebra();
    auto rep = find_grouplike_and_primitive(prim);
    CHECK(rep.grouplike == std::vector<int>{0, 1});
    // (0,1) carries the genuine primitive x plus the classical difference of
    // group-likes; (1,0) only the difference.
    bool found_x = false;
    for (auto& [g1, g2, x] : rep.primitives) {
        if (g1 == 0 && g2 == 1 && x == TensorSum::basis({3}, {2})) found_x = true;
        // Every reported solution satisfies the ladder equation; re-verify.
        TensorSum lhs = prim.comult().apply(x);
        TensorSum rhs({3, 3, 3});
        for (int j = 0; j < 3; ++j) {
            TensorSum term = TensorSum::scalar(Scalar(1));
            for (int k = 0; k < 3; ++k) {
                if (k == 2 - j)
                    term = tensor(term, x);
                else
                    term = tensor(term, TensorSum::basis({3}, {k < 2 - j ? g1 : g2}));
            }
            rhs = rhs + term;
        }
        CHECK(lhs == rhs);
    }
    CHECK(found_x);
}

TEST_CASE("dual algebras") {
    auto mat = corpus::matrix_coalgebra(2);
    auto dual = dual_algebra(mat, 1, 1);
    auto idx = [](int i, int j) { return i * 2 + j; };
    CHECK(dual.product({TensorSum::basis({4}, {idx(0, 1)}), TensorSum::basis({4}, {idx(1, 0)})}) ==
          TensorSum::basis({4}, {idx(0, 0)}));
    CHECK(dual.product({TensorSum::basis({4}, {idx(0, 1)}), TensorSum::basis({4}, {idx(0, 1)})}) ==
          TensorSum({4}));

    auto z2 = corpus::group_coalgebra(2);
    auto fn = dual_algebra(z2, 1, 1);
    for (int g = 0; g < 2; ++g)
        for (int h = 0; h < 2; ++h)
            CHECK(fn.product({TensorSum::basis({2}, {g}), TensorSum::basis({2}, {h})}) ==
                  (g == h ? TensorSum::basis({2}, {g}) : TensorSum({2})));

    auto d3 = corpus::d3_coalgebra();
    auto tern = dual_algebra(d3, 1, 2);
    CHECK(tern.arity() == 3);
    CHECK(tern.product({TensorSum::basis({2}, {0}), TensorSum::basis({2}, {1}),
                        TensorSum::basis({2}, {0})}) == TensorSum::basis({2}, {0}));

    CHECK_THROWS_AS(dual_algebra(d3, 1, 1), CoalgebraError);
}

TEST_CASE("coalgebra homomorphisms") {
    auto d3 = corpus::d3_coalgebra();
    CHECK(check_coalgebra_homomorphism(MultiLinearMap::identity({2}), d3, d3).holds);

    MultiLinearMap swap(std::vector<int>{2}, std::vector<int>{2});
    swap.coeff(Word{1}, Word{0}) = Scalar(1);
    swap.coeff(Word{0}, Word{1}) = Scalar(1);
    CHECK(check_coalgebra_homomorphism(swap, d3, d3).holds);

    MultiLinearMap collapse(std::vector<int>{2}, std::vector<int>{2});
    collapse.coeff(Word{0}, Word{0}) = Scalar(1);
    collapse.coeff(Word{0}, Word{1}) = Scalar(1);
    CHECK_FALSE(check_coalgebra_homomorphism(collapse, d3, d3).holds);

    // Group-likes map to group-likes under homomorphisms.
    auto z2 = corpus::group_coalgebra(2);
    auto gl = find_grouplike_and_primitive(z2).grouplike;
    MultiLinearMap flip(std::vector<int>{2}, std::vector<int>{2});
    flip.coeff(Word{1}, Word{0}) = Scalar(1);
    flip.coeff(Word{0}, Word{1}) = Scalar(1);
    REQUIRE(check_coalgebra_homomorphism(flip, z2, z2).holds);
    for (int g : gl) {
        TensorSum image = flip.apply_basis({g});
        REQUIRE(image.terms().size() == 1);
        int h = image.terms()[0].second[0];
        CHECK(z2.expansion(h) == TensorSum::basis({2, 2}, {h, h}));
    }
}

TEST_CASE("tensor product of coalgebras") {
    auto z2 = corpus::group_coalgebra(2);
    auto prod = tensor_product_coalgebras({z2, z2});
    CHECK(prod.dim() == 4);
    for (int w = 0; w < 4; ++w)
        CHECK(prod.expansion(w) == TensorSum::basis({4, 4}, {w, w}));
    REQUIRE(prod.counit());

    auto d3 = corpus::d3_coalgebra();
    auto prod3 = tensor_product_coalgebras({d3, d3, d3});
    CHECK(prod3.dim() == 8);
    CHECK(prod3.arity() == 3);
    CHECK_FALSE(prod3.counit());
}

TEST_CASE("Sweedler summand quantization validator") {
    auto d3 = corpus::d3_coalgebra();
    CHECK(validate_summand_counts(d3, 2).holds);
    CHECK(validate_summand_counts(d3, 3).holds);
    auto mat = corpus::matrix_coalgebra(2);
    CHECK(validate_summand_counts(mat, 2).holds);
    CHECK_FALSE(validate_summand_counts(mat, 3).holds);
}
