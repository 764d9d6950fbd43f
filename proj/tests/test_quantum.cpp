#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyadic/corpus.hpp"
#include "polyadic/quantum.hpp"

#include <random>

using namespace polyadic;
using namespace polyadic::quantum;

namespace {

/// The nontrivial triangular structure on the order-2 group bialgebra:
/// (1/2)(1(x)1 + 1(x)g + g(x)1 - g(x)g).
TensorSum z2_rmatrix() {
    TensorSum r({2, 2});
    r.add_term(Scalar(1, 2), {0, 0});
    r.add_term(Scalar(1, 2), {0, 1});
    r.add_term(Scalar(1, 2), {1, 0});
    r.add_term(Scalar(-1, 2), {1, 1});
    return r;
}

TensorSum trivial_r(int dim, int factors) {
    return TensorSum::basis(std::vector<int>(factors, dim), Word(factors, 0));
}

}  // namespace

TEST_CASE("extended matrices") {
    auto B = corpus::group_bialgebra(2);
    TensorSum R = z2_rmatrix();
    TensorSum r12 = extend_matrix(B.alg(), R, {0, 1}, 3);
    TensorSum want12({2, 2, 2});
    for (auto& t : R.terms()) want12.add_term(t.first, {t.second[0], t.second[1], 0});
    CHECK(r12 == want12);

    TensorSum r13 = extend_matrix(B.alg(), R, {0, 2}, 3);
    TensorSum want13({2, 2, 2});
    for (auto& t : R.terms()) want13.add_term(t.first, {t.second[0], 0, t.second[1]});
    CHECK(r13 == want13);

    // M embedded at the first four of seven slots is M (x) e (x) e (x) e.
    TensorSum M = tensor_power(R, 2);
    TensorSum m1234 = extend_matrix(B.alg(), M, {0, 1, 2, 3}, 7);
    TensorSum wantm({2, 2, 2, 2, 2, 2, 2});
    for (auto& t : M.terms())
        wantm.add_term(t.first, {t.second[0], t.second[1], t.second[2], t.second[3], 0, 0, 0});
    CHECK(m1234 == wantm);
}

TEST_CASE("almost co-commutativity") {
    auto B = corpus::group_bialgebra(2);
    auto flip = SlotPermutation{{1, 0}};
    CHECK(check_almost_cocommutativity(B, trivial_r(2, 2), flip).holds);
    CHECK(check_almost_cocommutativity(B, z2_rmatrix(), flip).holds);

    // Non-cocommutative ternary instance: a random R fails with a witness.
    auto vn3 = hopf::von_neumann_regular_bialgebra(3);
    TensorSum bad({2, 2, 2});
    bad.add_term(Scalar(1), {0, 1, 1});
    auto v = check_almost_cocommutativity(vn3, bad, SlotPermutation::reversal(3));
    CHECK_FALSE(v.holds);
    CHECK(v.witness.has_value());

    // Sequenced variant on the binary instance.
    CHECK(check_sequenced_almost_cocommutativity(B, {z2_rmatrix()}, flip).holds);
}

TEST_CASE("Yang-Baxter and quasitriangularity") {
    auto B = corpus::group_bialgebra(2);
    CHECK(check_yang_baxter(B, trivial_r(2, 2)).holds);
    CHECK(check_yang_baxter(B, z2_rmatrix()).holds);
    // Componentwise products in an abelian group algebra always balance.
    TensorSum og({2, 2});
    og.add_term(Scalar(1), {0, 1});
    CHECK(check_yang_baxter(B, og).holds);

    auto rep = check_quasitriangular(B, z2_rmatrix());
    CHECK(rep.eq1.holds);
    CHECK(rep.eq2.holds);
    auto rep0 = check_quasitriangular(B, trivial_r(2, 2));
    CHECK(rep0.eq1.holds);
    CHECK(rep0.eq2.holds);
    // 1 (x) g is a Yang-Baxter solution but not quasitriangular.
    auto repog = check_quasitriangular(B, og);
    CHECK_FALSE(repog.eq1.holds);
    CHECK_FALSE(repog.eq1.difference.is_zero());
}

TEST_CASE("quasipolyangularity: binary specialization cross-checks quasitriangularity") {
    auto B = corpus::group_bialgebra(2);
    auto flip = SlotPermutation{{1, 0}};
    std::mt19937_64 rng(733);
    std::uniform_int_distribution<int> num(-2, 2);
    std::vector<TensorSum> candidates{z2_rmatrix(), trivial_r(2, 2)};
    for (int t = 0; t < 6; ++t) {
        TensorSum r({2, 2});
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                Scalar c(num(rng));
                if (!c.is_zero()) r.add_term(c, {a, b});
            }
        candidates.push_back(r);
    }
    for (auto& r : candidates) {
        auto qp = check_quasipolyangular(B, r, 1, flip);
        auto qt = check_quasitriangular(B, r);
        REQUIRE(qp.size() == 2);
        CHECK(qp[0].holds == qt.eq1.holds);
        CHECK(qp[1].holds == qt.eq2.holds);
    }

    // Unit-padded R on the totally co-commutative ternary instance passes all
    // three relations.
    auto B3 = corpus::derived_ternary_group_bialgebra(2);
    auto qp3 = check_quasipolyangular(B3, trivial_r(2, 3), 1, SlotPermutation::reversal(3));
    REQUIRE(qp3.size() == 3);
    for (auto& v : qp3) CHECK(v.holds);

    // Recorded (deterministic) verdict on the regular ternary bialgebra.
    auto vn3 = hopf::von_neumann_regular_bialgebra(3);
    TensorSum cand({2, 2, 2});
    cand.add_term(Scalar(1), {0, 1, 0});
    auto qpv = check_quasipolyangular(vn3, cand, 1, SlotPermutation::reversal(3));
    auto qpv2 = check_quasipolyangular(vn3, cand, 1, SlotPermutation::reversal(3));
    for (std::size_t k = 0; k < qpv.size(); ++k) CHECK(qpv[k].holds == qpv2[k].holds);
}

TEST_CASE("braid equation") {
    auto B = corpus::group_bialgebra(2);
    // The trivial R-matrix braids by the flip.
    MultiLinearMap c = braiding_from_r(B, trivial_r(2, 2));
    CHECK(c == MultiLinearMap::from_permutation(SlotPermutation{{1, 0}}, {2, 2}));
    CHECK(check_braid_equation(B, trivial_r(2, 2)).holds);
    CHECK(check_braid_equation(B, z2_rmatrix()).holds);

    // Ternary braid equation for the unit-padded R on the derived instance.
    auto B3 = corpus::derived_ternary_group_bialgebra(2);
    CHECK(check_braid_equation(B3, trivial_r(2, 3)).holds);
    auto compat = check_ternary_braid_compatibilities(B3, trivial_r(2, 3));
    CHECK(compat.first.holds);
    CHECK(compat.second.holds);
    CHECK(check_ternary_extended_braid(B3, trivial_r(2, 3)).holds);

    // Recorded verdict for a candidate on the regular ternary bialgebra.
    auto vn3 = hopf::von_neumann_regular_bialgebra(3);
    TensorSum cand({2, 2, 2});
    cand.add_term(Scalar(1), {0, 1, 0});
    cand.add_term(Scalar(1), {1, 0, 1});
    auto v1 = check_braid_equation(vn3, cand);
    auto v2 = check_braid_equation(vn3, cand);
    CHECK(v1.holds == v2.holds);
}

TEST_CASE("m_from_r and the composed twist") {
    auto [m, tau] = m_from_r(z2_rmatrix(), 2);
    CHECK(m == tensor_power(z2_rmatrix(), 2));
    CHECK(tau.image() == std::vector<int>{1, 0, 3, 2});
    CHECK(SlotPermutation::transpose_groups(2, 2).image() == std::vector<int>{0, 2, 1, 3});

    auto [m0, tau0] = m_from_r(trivial_r(2, 2), 2);
    CHECK(m0 == trivial_r(2, 4));
    (void)tau0;
}

TEST_CASE("almost co-mediality") {
    auto B = corpus::group_bialgebra(2);
    CHECK(check_almost_comediality(B, trivial_r(2, 4)).holds);

    // The R-derived M-matrix satisfies the composed-twist form.
    auto [mr, tau_r] = m_from_r(z2_rmatrix(), 2);
    CHECK(check_almost_comediality_tau(B, mr, tau_r).holds);

    TensorSum bad({2, 2, 2, 2});
    bad.add_term(Scalar(1), {0, 1, 1, 0});
    bad.add_term(Scalar(1), {1, 0, 0, 0});
    auto v = check_almost_comediality(B, bad);
    CHECK_FALSE(v.holds);
}

TEST_CASE("medial braid index lists match the published equations") {
    auto eq1 = medial_braid_indices(1);
    auto as_displayed = [](std::vector<std::vector<int>> tuples) {
        std::reverse(tuples.begin(), tuples.end());
        return tuples;
    };
    std::vector<std::vector<int>> m1_lhs{{1, 5, 4, 6}, {5, 6, 4, 3}, {6, 3, 4, 2}, {3, 2, 4, 7},
                                         {1, 6, 5, 3}, {6, 3, 5, 2}, {3, 2, 5, 4}, {2, 4, 5, 7},
                                         {1, 3, 6, 2}, {3, 2, 6, 4}, {2, 4, 6, 5}, {4, 5, 6, 7},
                                         {1, 2, 3, 4}};
    std::vector<std::vector<int>> m1_rhs{{6, 2, 3, 7}, {1, 5, 4, 6}, {5, 6, 4, 2}, {6, 2, 4, 3},
                                         {2, 3, 4, 7}, {1, 6, 5, 2}, {6, 2, 5, 3}, {2, 3, 5, 4},
                                         {3, 4, 5, 7}, {1, 2, 6, 3}, {2, 3, 6, 4}, {3, 4, 6, 5},
                                         {4, 5, 6, 7}};
    CHECK(as_displayed(eq1.lhs) == m1_lhs);
    CHECK(as_displayed(eq1.rhs) == m1_rhs);

    auto eq2 = medial_braid_indices(2);
    std::vector<std::vector<int>> m2_lhs{{5, 2, 4, 3}, {2, 3, 4, 7}, {1, 5, 6, 2},
                                         {5, 2, 6, 3}, {2, 3, 6, 4}, {3, 4, 6, 7},
                                         {1, 2, 5, 3}, {2, 3, 5, 4}, {3, 4, 5, 6}};
    std::vector<std::vector<int>> m2_rhs{{6, 4, 5, 2}, {4, 2, 5, 3}, {2, 3, 5, 7},
                                         {1, 4, 6, 2}, {4, 2, 6, 3}, {2, 3, 6, 5},
                                         {3, 5, 6, 7}, {1, 2, 4, 3}, {2, 3, 4, 5}};
    CHECK(as_displayed(eq2.lhs) == m2_lhs);
    CHECK(as_displayed(eq2.rhs) == m2_rhs);
}

TEST_CASE("medial braid equations") {
    auto B = corpus::group_bialgebra(2);
    auto rep = check_medial_braid(B, trivial_r(2, 4));
    CHECK(rep.m1.holds);
    CHECK(rep.m2.holds);
    CHECK(rep.ccb.holds);
    CHECK(rep.ccbb.holds);
    CHECK(rep.cross_consistent);

    auto [mr, tau_r] = m_from_r(z2_rmatrix(), 2);
    auto repr = check_medial_braid(B, mr);
    CHECK(repr.cross_consistent);

    TensorSum bad({2, 2, 2, 2});
    bad.add_term(Scalar(1), {0, 1, 1, 0});
    bad.add_term(Scalar(2), {1, 0, 0, 0});
    auto repb = check_medial_braid(B, bad);
    CHECK_FALSE(repb.m1.holds);
    CHECK(repb.cross_consistent);

    CHECK(check_generic_medial_braid(B, trivial_r(2, 4)).holds);
}

TEST_CASE("medial quasipolyangularity") {
    auto B = corpus::group_bialgebra(2);
    auto rep = check_medial_quasipolyangular(B, trivial_r(2, 4), 3);
    REQUIRE(rep.relations.size() == 4);
    for (auto& v : rep.relations) CHECK(v.holds);
    CHECK(rep.ddd1.holds);
    CHECK(rep.ddd2.holds);
    CHECK(rep.mm1.holds);
    CHECK(rep.mm2.holds);

    auto [mr, tau_r] = m_from_r(z2_rmatrix(), 2);
    auto repr = check_medial_quasipolyangular(B, mr, 3);
    auto repr2 = check_medial_quasipolyangular(B, mr, 3);
    for (std::size_t k = 0; k < repr.relations.size(); ++k)
        CHECK(repr.relations[k].holds == repr2.relations[k].holds);

    TensorSum bad = trivial_r(2, 4);
    bad.add_term(Scalar(1), {1, 0, 1, 0});
    auto repb = check_medial_quasipolyangular(B, bad, 3);
    bool any_fail = false;
    for (auto& v : repb.relations) any_fail = any_fail || !v.holds;
    CHECK(any_fail);
}

TEST_CASE("solution search") {
    auto B = corpus::group_bialgebra(2);
    std::vector<Scalar> grid{Scalar(0), Scalar(1, 2), Scalar(-1, 2)};
    auto found = search_solutions(B, SearchTarget::ybe, grid, 2);
    bool has_triangular = false;
    for (auto& r : found)
        if (r == z2_rmatrix()) has_triangular = true;
    CHECK(has_triangular);

    CHECK(search_solutions(B, SearchTarget::ybe, {}, 2).empty());
}
