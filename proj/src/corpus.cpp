#include "polyadic/corpus.hpp"

namespace polyadic::corpus {

using nary::Carrier;
using nary::Domain;
using nary::Formula;
using nary::FormulaKind;
using nary::NaryOp;
using nary::NaryStructure;
using nary::Value;

nary::NaryStructure cyclic_sum_structure(int mod, int arity, const std::string& name) {
    Carrier c;
    for (int k = 0; k < mod; ++k) {
        c.ids.push_back(std::to_string(k));
        c.values.emplace_back(Scalar(static_cast<long long>(k)));
    }
    NaryStructure s(std::move(c));
    NaryOp op;
    op.name = name;
    op.arity = arity;
    op.formula = Formula{FormulaKind::sum_mod, mod, 0};
    s.add_op(std::move(op));
    return s;
}

nary::NaryStructure ternary_field_sample(int bound) {
    Carrier c;
    for (int p = -bound; p <= bound; ++p) {
        if (p % 2 == 0) continue;
        for (int q = -bound; q <= bound; ++q) {
            if (q % 2 == 0) continue;
            Value v = Scalar(Rational(0), make_rational(p, q));
            std::string id = nary::value_key(v);
            bool dup = false;
            for (auto& existing : c.ids)
                if (existing == id) dup = true;
            if (dup) continue;
            c.ids.push_back(id);
            c.values.push_back(v);
        }
    }
    NaryStructure s(std::move(c), Domain::odd_imaginary);
    NaryOp add;
    add.name = "add";
    add.arity = 3;
    add.formula = Formula{FormulaKind::gauss_sum};
    s.add_op(std::move(add));
    NaryOp mul;
    mul.name = "mul";
    mul.arity = 3;
    mul.formula = Formula{FormulaKind::gauss_mul};
    s.add_op(std::move(mul));
    return s;
}

nary::NaryStructure pair_algebra_sample(int bound) {
    std::vector<Scalar> line;
    for (int p = -bound; p <= bound; ++p) {
        if (p % 2 == 0) continue;
        for (int q = 1; q <= bound; ++q) {
            if (q % 2 == 0) continue;
            Scalar v(Rational(0), Rational(p, q));
            bool dup = false;
            for (auto& e : line)
                if (e == v) dup = true;
            if (!dup) line.push_back(v);
        }
    }
    Carrier c;
    for (auto& a : line)
        for (auto& b : line) {
            Value v = std::pair<Scalar, Scalar>(a, b);
            c.ids.push_back(nary::value_key(v));
            c.values.push_back(v);
        }
    NaryStructure s(std::move(c), Domain::odd_imaginary);
    NaryOp add;
    add.name = "add";
    add.arity = 3;
    add.formula = Formula{FormulaKind::gauss_sum};
    s.add_op(std::move(add));
    NaryOp mul;
    mul.name = "mul";
    mul.arity = 3;
    mul.formula = Formula{FormulaKind::pair_antidiag};
    s.add_op(std::move(mul));
    return s;
}

nary::NaryStructure imaginary_field_sample(int bound) {
    Carrier c;
    for (int p = -bound; p <= bound; ++p)
        for (int q = 1; q <= bound; ++q) {
            Value v = Scalar(Rational(0), Rational(p, q));
            std::string id = nary::value_key(v);
            bool dup = false;
            for (auto& existing : c.ids)
                if (existing == id) dup = true;
            if (dup) continue;
            c.ids.push_back(id);
            c.values.push_back(v);
        }
    NaryStructure s(std::move(c), Domain::imaginary);
    NaryOp add;
    add.name = "add";
    add.arity = 2;
    add.formula = Formula{FormulaKind::gauss_sum};
    s.add_op(std::move(add));
    NaryOp mul;
    mul.name = "mul";
    mul.arity = 3;
    mul.formula = Formula{FormulaKind::gauss_mul};
    s.add_op(std::move(mul));
    return s;
}

algebra::PolyadicAlgebra group_algebra(int mod) {
    MultiLinearMap mult = MultiLinearMap::uniform(2, 1, mod);
    for (int a = 0; a < mod; ++a)
        for (int b = 0; b < mod; ++b) mult.coeff(Word{(a + b) % mod}, Word{a, b}) = Scalar(1);
    std::vector<std::string> labels;
    for (int k = 0; k < mod; ++k) labels.push_back("g" + std::to_string(k));
    algebra::PolyadicAlgebra alg(mult, labels);
    MultiLinearMap eta(std::vector<int>{}, std::vector<int>{mod});
    eta.coeff(Word{0}, Word{}) = Scalar(1);
    alg.set_unit(eta);
    return alg;
}

coalgebra::PolyadicCoalgebra group_coalgebra(int mod) {
    MultiLinearMap comult = MultiLinearMap::uniform(1, 2, mod);
    for (int a = 0; a < mod; ++a) comult.coeff(Word{a, a}, Word{a}) = Scalar(1);
    std::vector<std::string> labels;
    for (int k = 0; k < mod; ++k) labels.push_back("g" + std::to_string(k));
    coalgebra::PolyadicCoalgebra c(comult, labels);
    MultiLinearMap eps = MultiLinearMap::functional({mod}, std::vector<Scalar>(mod, Scalar(1)));
    c.set_counit(eps);
    return c;
}

hopf::PolyadicBialgebra group_bialgebra(int mod) {
    return hopf::PolyadicBialgebra(group_algebra(mod), group_coalgebra(mod));
}

coalgebra::PolyadicCoalgebra matrix_coalgebra(int n) {
    int dim = n * n;
    auto idx = [n](int i, int j) { return i * n + j; };
    MultiLinearMap comult = MultiLinearMap::uniform(1, 2, dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                comult.coeff(Word{idx(i, k), idx(k, j)}, Word{idx(i, j)}) = Scalar(1);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    coalgebra::PolyadicCoalgebra c(comult, labels);
    std::vector<Scalar> eps_values(dim, Scalar());
    for (int i = 0; i < n; ++i) eps_values[idx(i, i)] = Scalar(1);
    c.set_counit(MultiLinearMap::functional({dim}, eps_values));
    return c;
}

coalgebra::PolyadicCoalgebra d3_coalgebra() {
    MultiLinearMap comult = MultiLinearMap::uniform(1, 3, 2);
    comult.coeff(Word{0, 1, 0}, Word{0}) = Scalar(1);
    comult.coeff(Word{1, 0, 1}, Word{1}) = Scalar(1);
    return coalgebra::PolyadicCoalgebra(comult, {"a", "b"});
}

MultiLinearMap classical_antipode(int mod) {
    MultiLinearMap s(std::vector<int>{mod}, std::vector<int>{mod});
    for (int a = 0; a < mod; ++a) s.coeff(Word{(mod - a) % mod}, Word{a}) = Scalar(1);
    return s;
}

hopf::PolyadicBialgebra derived_ternary_group_bialgebra(int mod) {
    algebra::PolyadicAlgebra alg = algebra::derived_multiplication(group_algebra(mod), 2);
    coalgebra::PolyadicCoalgebra base = group_coalgebra(mod);
    coalgebra::PolyadicCoalgebra coalg(base.coiterate(2), base.labels());
    MultiLinearMap eps = tensor(*base.counit(), *base.counit());
    coalg.set_counit(eps);
    return hopf::PolyadicBialgebra(std::move(alg), std::move(coalg));
}

coalgebra::PolyadicCoalgebra primitive_ternary_coalgebra() {
    // Basis g1, g2, x: both g group-like, Delta(x) the three-summand ladder.
    MultiLinearMap comult = MultiLinearMap::uniform(1, 3, 3);
    comult.coeff(Word{0, 0, 0}, Word{0}) = Scalar(1);
    comult.coeff(Word{1, 1, 1}, Word{1}) = Scalar(1);
    comult.coeff(Word{0, 0, 2}, Word{2}) = Scalar(1);
    comult.coeff(Word{0, 2, 1}, Word{2}) = Scalar(1);
    comult.coeff(Word{2, 1, 1}, Word{2}) = Scalar(1);
    return coalgebra::PolyadicCoalgebra(comult, {"g1", "g2", "x"});
}

}  // namespace polyadic::corpus
