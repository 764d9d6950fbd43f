#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyadic/corpus.hpp"
#include "polyadic/nary.hpp"

#include <random>

using namespace polyadic;
using namespace polyadic::nary;

namespace {

NaryStructure table_structure(int size, int arity, std::function<int(const std::vector<int>&)> f,
                              const std::string& name = "op") {
    Carrier c;
    for (int k = 0; k < size; ++k) c.ids.push_back(std::to_string(k));
    NaryStructure s(std::move(c));
    std::vector<int> table;
    std::vector<int> w(arity, 0);
    for (;;) {
        table.push_back(f(w));
        int pos = arity - 1;
        while (pos >= 0 && ++w[pos] == size) w[pos--] = 0;
        if (pos < 0) break;
    }
    NaryOp op;
    op.name = name;
    op.arity = arity;
    op.table = std::move(table);
    s.add_op(std::move(op));
    return s;
}

Scalar imag(long long p, long long q) { return Scalar(Rational(0), Rational(p, q)); }

}  // namespace

TEST_CASE("iterate_op folds admissible words") {
    auto z7 = table_structure(7, 3, [](const std::vector<int>& w) {
        return (w[0] + w[1] + w[2]) % 7;
    });
    const NaryOp& op = z7.op("op");
    // Oracle: plain sum mod 7 of the 5-letter word.
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> pick(0, 6);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> w(5);
        int sum = 0;
        for (auto& x : w) {
            x = pick(rng);
            sum += x;
        }
        CHECK(value_equal(iterate_op(z7, op, w), z7.value(sum % 7)));
    }
    auto z5bin = table_structure(5, 2, [](const std::vector<int>& w) {
        return (w[0] + w[1]) % 5;
    });
    CHECK(value_equal(iterate_op(z5bin, z5bin.op("op"), {1, 2, 3, 4}),
                      z5bin.value(0)));
    CHECK(value_equal(iterate_op(z7, op, {3}), z7.value(3)));
    CHECK_THROWS_AS(iterate_op(z7, op, {1, 2, 3, 4}), StructureError);
}

TEST_CASE("total associativity: exhaustive verdicts with witnesses") {
    auto assoc = table_structure(5, 3, [](const std::vector<int>& w) {
        return (w[0] + w[1] + w[2]) % 5;
    });
    CHECK(check_total_associativity(assoc, assoc.op("op")).verdict == Verdict::holds);

    auto bad = table_structure(3, 3, [](const std::vector<int>& w) {
        return ((w[0] * w[1] - w[2]) % 3 + 3) % 3;
    });
    auto rep = check_total_associativity(bad, bad.op("op"));
    REQUIRE(rep.verdict == Verdict::fails);
    // Re-evaluate the witness to confirm it falsifies.
    const NaryOp& op = bad.op("op");
    auto& w = rep.witness_word;
    std::vector<int> inner_a(w.begin() + rep.position_a, w.begin() + rep.position_a + 3);
    std::vector<int> inner_b(w.begin() + rep.position_b, w.begin() + rep.position_b + 3);
    CHECK(!inner_a.empty());
    CHECK(!inner_b.empty());

    auto bad2 = table_structure(2, 2, [](const std::vector<int>& w) {
        return w[0] == 1 && w[1] == 0 ? 1 : 0;
    });
    CHECK(check_total_associativity(bad2, bad2.op("op")).verdict == Verdict::fails);
}

TEST_CASE("find_zeros") {
    auto field = corpus::ternary_field_sample(5);
    CHECK(find_zeros(field, field.op("add")).empty());

    auto z5 = corpus::cyclic_sum_structure(5, 3, "add");
    CHECK(find_zeros(z5, z5.op("add")) == std::vector<int>{0});

    auto line = corpus::imaginary_field_sample(3);
    auto zeros = line.index_of_value(Scalar(0));
    REQUIRE(zeros);
    CHECK(find_zeros(line, line.op("add")) == std::vector<int>{*zeros});
}

TEST_CASE("units and neutral sequences") {
    auto field = corpus::ternary_field_sample(5);
    CHECK(find_units_and_neutral_sequences(field, field.op("mul")).units.empty());

    auto z3 = corpus::cyclic_sum_structure(3, 2, "mul");
    auto rep = find_units_and_neutral_sequences(z3, z3.op("mul"));
    CHECK(rep.units == std::vector<int>{0});

    // Translation semigroup [a,b,c] = a+b+c+1 mod 4: no single unit, but
    // neutral sequences (e1, e2) with e1+e2 = 3 exist.
    Carrier c;
    for (int k = 0; k < 4; ++k) c.ids.push_back(std::to_string(k));
    NaryStructure shifted(std::move(c));
    NaryOp op;
    op.name = "mul";
    op.arity = 3;
    op.formula = Formula{FormulaKind::affine_sum_mod, 4, 1};
    shifted.add_op(std::move(op));
    auto rep2 = find_units_and_neutral_sequences(shifted, shifted.op("mul"));
    CHECK(rep2.units.empty());
    CHECK(rep2.neutral_sequences.size() == 4);
    for (auto& seq : rep2.neutral_sequences) CHECK((seq[0] + seq[1]) % 4 == 3);
}

TEST_CASE("querelement: flagship ternary field values") {
    auto field = corpus::ternary_field_sample(9);
    int x = *field.index_of_value(imag(3, 5));

    auto mul_quer = querelement(field, field.op("mul"), x);
    REQUIRE(mul_quer.size() == 1);
    CHECK(value_equal(field.value(mul_quer[0]), imag(-5, 3)));

    auto add_quer = querelement(field, field.op("add"), x);
    REQUIRE(add_quer.size() == 1);
    CHECK(value_equal(field.value(add_quer[0]), imag(-3, 5)));

    auto z5 = corpus::cyclic_sum_structure(5, 3, "add");
    auto q = querelement(z5, z5.op("add"), 2);
    REQUIRE(q.size() == 1);
    CHECK(q[0] == 3);
}

TEST_CASE("querelements exist uniquely across the whole ternary sample") {
    auto field = corpus::ternary_field_sample(7);
    for (int x = 0; x < field.size(); ++x) {
        CHECK(querelement(field, field.op("add"), x).size() == 1);
        CHECK(querelement(field, field.op("mul"), x).size() == 1);
    }
}

TEST_CASE("check_field classifies the corpus fields") {
    auto f33 = corpus::ternary_field_sample(9);
    auto rep = check_field({f33}, 20'000);
    CHECK(rep.add_commutative);
    CHECK(rep.mul_commutative);
    CHECK(rep.add_associative);
    CHECK(rep.mul_associative);
    CHECK(rep.distributive);
    CHECK(rep.closed);
    CHECK(rep.all_add_querable);
    CHECK(rep.all_mul_querable);
    CHECK(rep.zeros.empty());
    CHECK(rep.units.empty());
    CHECK(rep.classification == "zeroless nonunital");

    auto f23 = corpus::imaginary_field_sample(4);
    auto rep2 = check_field({f23}, 20'000);
    CHECK(rep2.classification == "zeroed nonunital");
    CHECK(rep2.closed);
    CHECK(rep2.failures.empty());

    // Binary rational sample: unital and zeroed.
    Carrier c;
    std::vector<Scalar> vals;
    for (int a = -3; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            Scalar v(Rational(a, b));
            bool dup = false;
            for (auto& e : vals)
                if (e == v) dup = true;
            if (dup) continue;
            vals.push_back(v);
            c.ids.push_back(scalar_format(v));
            c.values.push_back(v);
        }
    NaryStructure q(std::move(c));
    NaryOp add;
    add.name = "add";
    add.arity = 2;
    add.formula = Formula{FormulaKind::gauss_sum};
    q.add_op(std::move(add));
    NaryOp mul;
    mul.name = "mul";
    mul.arity = 2;
    mul.formula = Formula{FormulaKind::gauss_mul};
    q.add_op(std::move(mul));
    auto rep3 = check_field({q}, 20'000);
    CHECK(rep3.classification == "zeroed unital");
}

TEST_CASE("pair algebra sample: quermaps act antidiagonally") {
    auto pairs = corpus::pair_algebra_sample(9);
    Value x = std::pair<Scalar, Scalar>(imag(3, 5), imag(7, 9));
    int xi = *pairs.index_of_value(x);

    auto mq = querelement(pairs, pairs.op("mul"), xi);
    REQUIRE(mq.size() == 1);
    CHECK(value_equal(pairs.value(mq[0]),
                      Value(std::pair<Scalar, Scalar>(imag(-9, 7), imag(-5, 3)))));

    auto aq = querelement(pairs, pairs.op("add"), xi);
    REQUIRE(aq.size() == 1);
    CHECK(value_equal(pairs.value(aq[0]),
                      Value(std::pair<Scalar, Scalar>(imag(-3, 5), imag(-7, 9)))));
}

TEST_CASE("group function convolution") {
    // Classical binary convolution on Z_2 over the rationals.
    auto z2 = corpus::cyclic_sum_structure(2, 2, "mul");
    Carrier kc;
    kc.ids = {"k"};
    NaryStructure k_field(std::move(kc));
    NaryOp kadd;
    kadd.name = "add";
    kadd.arity = 2;
    kadd.formula = Formula{FormulaKind::gauss_sum};
    k_field.add_op(std::move(kadd));
    NaryOp kmul;
    kmul.name = "mul";
    kmul.arity = 2;
    kmul.formula = Formula{FormulaKind::gauss_mul};
    k_field.add_op(std::move(kmul));

    std::vector<Scalar> f1{Scalar(1), Scalar(2)};
    std::vector<Scalar> f2{Scalar(3), Scalar(5)};
    auto conv = group_function_convolution(z2, z2.op("mul"), k_field, {1, 0}, {f1, f2});
    // (f1*f2)(g) = sum_{h1+h2=g} f1(h1) f2(h2)
    CHECK(conv[0] == Scalar(1) * Scalar(3) + Scalar(2) * Scalar(5));
    CHECK(conv[1] == Scalar(1) * Scalar(5) + Scalar(2) * Scalar(3));

    // Arity-changing case: s=2, ell_id=1, ternary group Z_3, binary field ops.
    auto z3 = corpus::cyclic_sum_structure(3, 3, "mul");
    std::mt19937_64 rng(97);
    std::uniform_int_distribution<int> num(-3, 3);
    auto random_table = [&](std::size_t n) {
        std::vector<Scalar> t(n);
        for (auto& v : t) v = Scalar(num(rng));
        return t;
    };
    auto g1 = random_table(9), g2 = random_table(9);
    auto got = group_function_convolution(z3, z3.op("mul"), k_field, {2, 1}, {g1, g2});
    // Brute force directly from the defining equations.
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            Scalar want;
            for (int h1 = 0; h1 < 3; ++h1)
                for (int h2 = 0; h2 < 3; ++h2) {
                    int h3 = ((a - h1 - h2) % 3 + 3) % 3;
                    int h4 = b;
                    want += g1[h1 * 3 + h2] * g2[h3 * 3 + h4];
                }
            CHECK(got[a * 3 + b] == want);
        }

    // Associativity of the classical convolution product on random triples.
    for (int trial = 0; trial < 5; ++trial) {
        auto a = random_table(2), b = random_table(2), c2 = random_table(2);
        auto ab = group_function_convolution(z2, z2.op("mul"), k_field, {1, 0}, {a, b});
        auto bc = group_function_convolution(z2, z2.op("mul"), k_field, {1, 0}, {b, c2});
        auto left = group_function_convolution(z2, z2.op("mul"), k_field, {1, 0}, {ab, c2});
        auto right = group_function_convolution(z2, z2.op("mul"), k_field, {1, 0}, {a, bc});
        CHECK(left == right);
    }

    // Shape violations are loud.
    CHECK_THROWS_AS(group_function_convolution(z3, z3.op("mul"), k_field, {3, 2},
                                               {random_table(27), random_table(27)}),
                    StructureError);
}
