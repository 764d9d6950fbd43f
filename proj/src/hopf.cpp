#include "polyadic/hopf.hpp"

#include <algorithm>
#include <numeric>

namespace polyadic::hopf {

namespace {

MultiLinearMap id_n(int factors, int dim) {
    return MultiLinearMap::identity(std::vector<int>(factors, dim));
}

MultiLinearMap transpose_map(int groups, int per_group, int dim) {
    return MultiLinearMap::from_permutation(
        SlotPermutation::transpose_groups(groups, per_group),
        std::vector<int>(static_cast<std::size_t>(groups) * per_group, dim));
}

}  // namespace

LinearVerdict check_compatibility(const MultiLinearMap& mult, const MultiLinearMap& comult) {
    int n = mult.in_factors();
    int np = comult.out_factors();
    int dim = mult.out_dims()[0];
    LinearVerdict v;
    double dense = 1;
    for (int k = 0; k < n + n * np; ++k) dense *= dim;
    if (dense <= static_cast<double>(TensorLimits::max_coefficients())) {
        MultiLinearMap lhs = comult.compose(mult);
        MultiLinearMap rhs = tensor_power(mult, np)
                                 .compose(transpose_map(n, np, dim))
                                 .compose(tensor_power(comult, n));
        if (auto diff = MultiLinearMap::first_difference(lhs, rhs)) {
            v.holds = false;
            v.witness = diff;
            v.note = "Delta o mu differs from the medially regrouped (Delta tensor power)";
        }
        return v;
    }
    // Expansion-driven comparison on basis words.
    std::vector<int> in_dims(n, dim);
    std::size_t words = MultiLinearMap::total(in_dims);
    for (std::size_t w = 0; w < words; ++w) {
        Word word = MultiLinearMap::word_of(w, in_dims);
        TensorSum lhs = comult.apply(mult.apply_basis(word));
        std::vector<TensorSum> expansions;
        for (int i = 0; i < n; ++i) expansions.push_back(comult.apply_basis({word[i]}));
        TensorSum rhs(std::vector<int>(np, dim));
        std::vector<std::size_t> pick(n, 0);
        for (;;) {
            Scalar coeff(1);
            bool zero = false;
            for (int i = 0; i < n && !zero; ++i) {
                if (expansions[i].terms().empty()) zero = true;
                else coeff *= expansions[i].terms()[pick[i]].first;
            }
            if (zero) break;
            TensorSum term = TensorSum::scalar(coeff);
            for (int j = 0; j < np; ++j) {
                std::vector<TensorSum> col;
                for (int i = 0; i < n; ++i)
                    col.push_back(TensorSum::basis({dim},
                                                   {expansions[i].terms()[pick[i]].second[j]}));
                TensorSum joined = col[0];
                for (int i = 1; i < n; ++i) joined = tensor(joined, col[i]);
                term = tensor(term, mult.apply(joined));
            }
            rhs = rhs + term;
            int pos = n - 1;
            while (pos >= 0 && ++pick[pos] == expansions[pos].terms().size()) pick[pos--] = 0;
            if (pos < 0) break;
        }
        if (!(lhs == rhs)) {
            v.holds = false;
            v.witness = std::make_pair(Word{}, word);
            v.note = "compatibility fails on a basis word";
            return v;
        }
    }
    return v;
}

PolyadicBialgebra::PolyadicBialgebra(algebra::PolyadicAlgebra alg, coalgebra::PolyadicCoalgebra coalg)
    : alg_(std::move(alg)), coalg_(std::move(coalg)) {
    if (alg_.dim() != coalg_.dim()) throw HopfError("algebra and coalgebra dimensions differ");
    auto v = check_compatibility(alg_.mult(), coalg_.comult());
    if (!v.holds) throw HopfError("bialgebra compatibility fails: " + v.note);
}

BialgebraReport check_bialgebra(const PolyadicBialgebra& B) {
    BialgebraReport rep;
    rep.compatibility = check_compatibility(B.alg().mult(), B.coalg().comult());
    rep.compatible = rep.compatibility.holds;
    int n = B.mult_arity(), np = B.comult_arity(), dim = B.dim();
    rep.unital = B.alg().unit().has_value();
    rep.counital = B.coalg().counit().has_value();
    if (rep.unital) {
        // (Delta^(x)(n-1)) o eta = eta^(x)n' up to the medial regrouping.
        const MultiLinearMap& eta = *B.alg().unit();
        MultiLinearMap lhs = tensor_power(B.coalg().comult(), n - 1).compose(eta);
        MultiLinearMap rhs = transpose_map(np, n - 1, dim).compose(tensor_power(eta, np));
        if (auto diff = MultiLinearMap::first_difference(lhs, rhs)) {
            rep.unit_axiom.holds = false;
            rep.unit_axiom.witness = diff;
            rep.unit_axiom.note = "unit is not a coalgebra morphism";
        }
    }
    if (rep.counital) {
        const MultiLinearMap& eps = *B.coalg().counit();
        MultiLinearMap lhs = eps.compose(tensor_power(B.alg().mult(), np - 1));
        MultiLinearMap rhs = tensor_power(eps, n).compose(transpose_map(np - 1, n, dim));
        if (auto diff = MultiLinearMap::first_difference(lhs, rhs)) {
            rep.counit_axiom.holds = false;
            rep.counit_axiom.witness = diff;
            rep.counit_axiom.note = "counit is not an algebra morphism";
        }
    }
    if (rep.unital && rep.counital) {
        const MultiLinearMap& eta = *B.alg().unit();
        const MultiLinearMap& eps = *B.coalg().counit();
        MultiLinearMap got = tensor_power(eps, n - 1)
                                 .compose(transpose_map(np - 1, n - 1, dim))
                                 .compose(tensor_power(eta, np - 1));
        MultiLinearMap one = MultiLinearMap::constant(TensorSum::scalar(Scalar(1)));
        if (auto diff = MultiLinearMap::first_difference(got, one)) {
            rep.unit_counit.holds = false;
            rep.unit_counit.witness = diff;
            rep.unit_counit.note = "unit/counit compatibility fails";
        }
    }
    rep.kind = std::string(rep.unital ? "unital" : "nonunital") + "-" +
               (rep.counital ? "counital" : "noncounital");
    return rep;
}

PolyadicBialgebra von_neumann_regular_bialgebra(int n) {
    if (n < 3) throw HopfError("regular bialgebra needs n >= 3");
    int dim = n - 1;
    MultiLinearMap mult = MultiLinearMap::uniform(n, 1, dim);
    MultiLinearMap comult = MultiLinearMap::uniform(1, n, dim);
    std::vector<std::string> labels;
    for (int i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i + 1));
    for (int i = 0; i < dim; ++i) {
        Word w;
        w.push_back(i);
        for (int k = 1; k <= n - 2; ++k) w.push_back((i + k) % dim);
        w.push_back(i);
        mult.coeff(Word{i}, w) = Scalar(1);
        comult.coeff(w, Word{i}) = Scalar(1);
    }
    algebra::PolyadicAlgebra alg(mult, labels);
    coalgebra::PolyadicCoalgebra coalg(comult, labels);
    return PolyadicBialgebra(std::move(alg), std::move(coalg));
}

CocommBialgReport cocommutativity_class_bialgebra(const PolyadicBialgebra& B) {
    CocommBialgReport rep;
    int n = B.mult_arity(), np = B.comult_arity(), dim = B.dim();
    rep.totally_commutative = true;
    {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            auto p = MultiLinearMap::from_permutation(SlotPermutation(perm),
                                                      std::vector<int>(n, dim));
            if (!(B.alg().mult().compose(p) == B.alg().mult())) {
                rep.totally_commutative = false;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    auto co = coalgebra::co_commutativity_class(B.coalg());
    rep.totally_cocommutative = co.totally;
    rep.witness = co.witness;
    rep.medial_cocomm_admissible = co.medial_admissible;
    rep.medially_cocommutative = co.medially;
    auto mc = algebra::check_medially_commutative(B.alg());
    rep.medial_comm_admissible = mc.admissible;
    rep.medially_commutative = mc.holds;
    return rep;
}

conv::ConvolutionContext symmetric_context(const PolyadicBialgebra& B, int ell) {
    if (B.mult_arity() != B.comult_arity())
        throw HopfError("symmetric convolution needs n = n'");
    return conv::ConvolutionContext(B.alg(), B.coalg(), ell, ell);
}

QuerantipodeResult solve_symmetric_querantipode(const PolyadicBialgebra& B, int ell) {
    auto ctx = symmetric_context(B, ell);
    QuerantipodeResult out;
    conv::ConvMap idm = ctx.identity_map();
    if (ctx.n_star() == 2) {
        auto inv = coquerelement(ctx, idm);
        out.exists = inv.exists;
        out.nullity = inv.nullity;
        out.note = inv.note;
        if (inv.exists) out.map = inv.value;
        return out;
    }
    auto sol = coquerelement(ctx, idm);
    out.exists = sol.exists;
    out.nullity = sol.nullity;
    out.note = sol.note;
    if (sol.exists) out.map = sol.value;
    return out;
}

LinearVerdict verify_singular_querantipode(const PolyadicBialgebra& B,
                                           const std::vector<TensorSum>& q0, int ell) {
    LinearVerdict v;
    if (B.comult_arity() != 2) throw HopfError("singular case needs a binary comultiplication");
    int n = B.mult_arity(), dim = B.dim();
    if (static_cast<int>(q0.size()) != dim)
        throw HopfError("pointwise operator must list one value per basis element");
    std::vector<int> out_dims(n - 1, dim);
    for (auto& t : q0)
        if (t.dims() != out_dims) throw HopfError("Q0 values must live in B^{(x)(n-1)}");
    int n_star = ell * (n - 1) + 1;
    if (n_star == 2) {
        // Classical antipode law mu o (id (x) S) o Delta = eta o eps.
        if (!B.alg().unit() || !B.coalg().counit())
            throw HopfError("binary delegation needs a unit and a counit");
        MultiLinearMap S(std::vector<int>{dim}, std::vector<int>{dim});
        for (int b = 0; b < dim; ++b)
            for (auto& t : q0[b].terms()) S.coeff(t.second, Word{b}) = t.first;
        MultiLinearMap target = B.alg().unit()->compose(*B.coalg().counit());
        for (int pos = 0; pos < 2; ++pos) {
            MultiLinearMap side = pos == 0 ? tensor(id_n(1, dim), S) : tensor(S, id_n(1, dim));
            MultiLinearMap got = B.alg().mult().compose(side).compose(B.coalg().comult());
            if (auto diff = MultiLinearMap::first_difference(got, target)) {
                v.holds = false;
                v.witness = diff;
                v.note = "classical antipode law fails at slot " + std::to_string(pos);
                return v;
            }
        }
        return v;
    }

    MultiLinearMap expand = B.coalg().coiterate(n_star - 1);
    MultiLinearMap collapse = tensor_power(B.alg().iterated_mult(ell), n - 1);
    auto regroup = SlotPermutation::transpose_groups(n_star, n - 1);
    for (int b = 0; b < dim; ++b) {
        TensorSum want = tensor_power(TensorSum::basis({dim}, {b}), n - 1);
        TensorSum sweedler = expand.apply_basis({b});
        for (int pos = 0; pos < n_star; ++pos) {
            TensorSum acc(std::vector<int>(static_cast<std::size_t>(n - 1), dim));
            for (auto& t : sweedler.terms()) {
                TensorSum big = TensorSum::scalar(t.first);
                for (int slot = 0; slot < n_star; ++slot) {
                    if (slot == pos)
                        big = tensor(big, q0[t.second[slot]]);
                    else
                        big = tensor(big, tensor_power(TensorSum::basis({dim}, {t.second[slot]}),
                                                       n - 1));
                }
                acc = acc + collapse.apply(big.permuted(regroup));
            }
            if (!(acc == want)) {
                v.holds = false;
                v.witness = std::make_pair(Word{}, Word{b});
                v.note = "singular querantipode law fails for " + B.alg().labels()[b] +
                         " at slot " + std::to_string(pos);
                return v;
            }
        }
    }
    return v;
}

QuerantipodeProps check_querantipode_properties(const PolyadicBialgebra& B,
                                                const MultiLinearMap& Q, int ell,
                                                std::optional<std::pair<int, int>> grid) {
    QuerantipodeProps rep;
    if (B.mult_arity() != B.comult_arity()) throw HopfError("properties need n = n'");
    int n = B.mult_arity(), dim = B.dim();
    int n_star = ell * (n - 1) + 1;
    int l_tau = (n - 1) * n_star;
    SlotPermutation tw;
    if (grid) {
        tw = polyadic_twist(grid->second, grid->first);
        if (tw.size() != l_tau) throw HopfError("grid twist size mismatch");
        rep.twist_admissible = true;
    } else {
        // Prefer the square grid: its twist is the involution acting block-wise
        // on the n* x (n-1) Sweedler layout.
        std::optional<SlotPermutation> t;
        for (int k = 2; k * (k - 1) <= l_tau; ++k)
            if (k * (k - 1) == l_tau) t = polyadic_twist(k, k);
        if (!t) t = canonical_twist(l_tau);
        if (!t) {
            rep.antimultiplicative.holds = false;
            rep.antimultiplicative.note = "no allowed twist with " + std::to_string(l_tau) +
                                          " places";
            return rep;
        }
        tw = *t;
        rep.twist_admissible = true;
    }
    MultiLinearMap tau_op =
        MultiLinearMap::from_permutation(tw, std::vector<int>(l_tau, dim));
    MultiLinearMap collapse = tensor_power(B.alg().iterated_mult(ell), n - 1);
    MultiLinearMap spread = tensor_power(B.coalg().coiterate(ell), n - 1);

    {
        MultiLinearMap lhs = Q.compose(collapse);
        MultiLinearMap rhs = collapse.compose(tau_op)
                                 .compose(tensor_power(Q, n_star))
                                 .compose(transpose_map(n - 1, n_star, dim));
        if (auto diff = MultiLinearMap::first_difference(lhs, rhs)) {
            rep.antimultiplicative.holds = false;
            rep.antimultiplicative.witness = diff;
            rep.antimultiplicative.note = "antimultiplicativity fails";
        }
    }
    {
        MultiLinearMap lhs = spread.compose(Q);
        MultiLinearMap rhs = tau_op.compose(tensor_power(Q, n_star))
                                 .compose(transpose_map(n - 1, n_star, dim))
                                 .compose(spread);
        if (auto diff = MultiLinearMap::first_difference(lhs, rhs)) {
            rep.anticomultiplicative.holds = false;
            rep.anticomultiplicative.witness = diff;
            rep.anticomultiplicative.note = "anticomultiplicativity fails";
        }
    }
    // Twist-invariance premise of the involutivity analog: total
    // (co)commutativity, or invariance under an allowed n-place twist.
    {
        auto co = cocommutativity_class_bialgebra(B);
        rep.twist_invariant_input = co.totally_commutative || co.totally_cocommutative ||
                                    (co.medial_comm_admissible && co.medially_commutative) ||
                                    (co.medial_cocomm_admissible && co.medially_cocommutative);
    }
    if (rep.twist_invariant_input) {
        auto ctx = symmetric_context(B, ell);
        MultiLinearMap qq = Q.compose(Q);
        std::optional<std::pair<Word, Word>> bad;
        if (n_star >= 3) {
            for (int pos = 0; pos < n_star && !bad; ++pos) {
                std::vector<conv::ConvMap> args(static_cast<std::size_t>(n_star), Q);
                args[pos] = qq;
                bad = MultiLinearMap::first_difference(convolve(ctx, args), Q);
            }
        }
        if (!bad) {
            auto coq = coquerelement(ctx, Q);
            if (!coq.exists)
                bad = std::make_pair(Word{}, Word{});
            else
                bad = MultiLinearMap::first_difference(coq.value, qq);
        }
        if (bad) {
            rep.quer_power.holds = false;
            rep.quer_power.witness = bad;
            rep.quer_power.note = "q*(Q) != Q o Q";
        }
    }
    return rep;
}

}  // namespace polyadic::hopf
