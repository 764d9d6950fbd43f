#include "polyadic/algebra.hpp"

#include "polyadic/arity.hpp"

#include <algorithm>

namespace polyadic::algebra {

namespace {

MultiLinearMap id_n(int factors, int dim) {
    return MultiLinearMap::identity(std::vector<int>(factors, dim));
}

/// mu applied at `pos` inside a word of 2n-1 factors: id^(n-1-pos) (x) mu (x) id^pos
/// keeps the paper's placement index (pos counts identities on the right).
MultiLinearMap inner_placement(const MultiLinearMap& mult, int pos) {
    int n = mult.in_factors();
    int dim = mult.in_dims()[0];
    return embed_uniform(mult, n - 1 - pos, pos, dim);
}

}  // namespace

PolyadicAlgebra::PolyadicAlgebra(MultiLinearMap mult, std::vector<std::string> labels,
                                 bool trust_associativity)
    : mult_(std::move(mult)), labels_(std::move(labels)) {
    if (mult_.out_factors() != 1) throw AlgebraError("multiplication must have one output factor");
    arity_ = mult_.in_factors();
    if (arity_ < 2) throw AlgebraError("multiplication arity must be >= 2");
    dim_ = mult_.out_dims()[0];
    for (int d : mult_.in_dims())
        if (d != dim_) throw AlgebraError("multiplication must be uniform-dimensional");
    if (labels_.empty())
        for (int k = 0; k < dim_; ++k) labels_.push_back("e" + std::to_string(k));
    if (!trust_associativity) {
        auto v = check_total_associativity_linear(mult_);
        if (!v.holds) throw AlgebraError("multiplication is not totally associative: " + v.note);
    }
}

void PolyadicAlgebra::set_unit(MultiLinearMap eta) {
    if (eta.in_factors() != 0 || eta.out_factors() != arity_ - 1 ||
        eta.out_dims() != std::vector<int>(arity_ - 1, dim_))
        throw AlgebraError("unit must be a 0 -> (n-1) map over the algebra space");
    auto v = check_unit(*this, eta);
    if (!v.holds) throw AlgebraError("candidate unit fails the unit axiom: " + v.note);
    unit_ = std::move(eta);
}

std::optional<TensorSum> PolyadicAlgebra::unit_element() const {
    if (!unit_) return std::nullopt;
    return unit_->apply(TensorSum::scalar(Scalar(1)));
}

MultiLinearMap PolyadicAlgebra::iterated_mult(int ell) const {
    if (ell < 0) throw AlgebraError("iteration count must be >= 0");
    if (ell == 0) return id_n(1, dim_);
    MultiLinearMap acc = mult_;
    for (int k = 1; k < ell; ++k)
        acc = acc.compose(tensor(mult_, id_n(acc.in_factors() - 1, dim_)));
    return acc;
}

TensorSum PolyadicAlgebra::product(const std::vector<TensorSum>& args) const {
    long long len = static_cast<long long>(args.size());
    if ((len - 1) % (arity_ - 1) != 0)
        throw AlgebraError("inadmissible word length " + std::to_string(len));
    int ell = static_cast<int>((len - 1) / (arity_ - 1));
    TensorSum joined = args[0];
    for (std::size_t k = 1; k < args.size(); ++k) joined = tensor(joined, args[k]);
    return iterated_mult(ell).apply(joined);
}

PolyadicAlgebra algebra_from_constants(int dim, int arity, const std::vector<Scalar>& constants,
                                       std::vector<std::string> labels) {
    MultiLinearMap mult = MultiLinearMap::uniform(arity, 1, dim);
    if (constants.size() != mult.in_total() * static_cast<std::size_t>(dim))
        throw AlgebraError("expected " + std::to_string(mult.in_total() * dim) +
                           " structure constants, got " + std::to_string(constants.size()));
    for (std::size_t in = 0; in < mult.in_total(); ++in)
        for (int j = 0; j < dim; ++j) mult.coeff(j, in) = constants[in * dim + j];
    return PolyadicAlgebra(std::move(mult), std::move(labels));
}

LinearVerdict check_total_associativity_linear(const MultiLinearMap& mult) {
    int n = mult.in_factors();
    int dim = mult.in_dims()[0];
    LinearVerdict v;
    std::vector<int> word_dims(2 * n - 1, dim);
    std::size_t words = MultiLinearMap::total(word_dims);
    bool dense_fits = words * mult.out_total() * mult.in_total() / dim <=
                      TensorLimits::max_coefficients();
    if (dense_fits) {
        MultiLinearMap ref = mult.compose(inner_placement(mult, 0));
        for (int pos = 1; pos < n; ++pos) {
            MultiLinearMap other = mult.compose(inner_placement(mult, pos));
            if (auto diff = MultiLinearMap::first_difference(ref, other)) {
                v.holds = false;
                v.witness = diff;
                v.note = "placements 0 and " + std::to_string(pos) + " differ";
                return v;
            }
        }
        return v;
    }
    // Column-driven comparison: equivalent on the basis by multilinearity, and
    // avoids the dense identity-padded intermediates.
    for (std::size_t w = 0; w < words; ++w) {
        Word word = MultiLinearMap::word_of(w, word_dims);
        std::optional<TensorSum> ref;
        for (int i = 0; i < n; ++i) {
            int pos = n - 1 - i;  // placement i puts mu after pos leading factors
            Word inner_w(word.begin() + pos, word.begin() + pos + n);
            TensorSum inner = mult.apply_basis(inner_w);
            TensorSum outer(std::vector<int>{});
            outer = TensorSum::scalar(Scalar(1));
            for (int k = 0; k < pos; ++k)
                outer = tensor(outer, TensorSum::basis({dim}, {word[k]}));
            outer = tensor(outer, inner);
            for (int k = pos + n; k < 2 * n - 1; ++k)
                outer = tensor(outer, TensorSum::basis({dim}, {word[k]}));
            TensorSum res = mult.apply(outer);
            if (!ref) {
                ref = res;
            } else if (!(*ref == res)) {
                v.holds = false;
                v.witness = std::make_pair(Word{}, word);
                v.note = "placements differ on a basis word";
                return v;
            }
        }
    }
    return v;
}

LinearVerdict check_associativity_elementwise(const PolyadicAlgebra& alg) {
    int n = alg.arity(), dim = alg.dim();
    int len = 2 * n - 1;
    LinearVerdict v;
    std::vector<int> dims(len, dim);
    std::size_t total = MultiLinearMap::total(dims);
    for (std::size_t w = 0; w < total; ++w) {
        Word word = MultiLinearMap::word_of(w, dims);
        std::optional<TensorSum> ref;
        for (int pos = 0; pos < n; ++pos) {
            std::vector<TensorSum> inner_args;
            for (int k = 0; k < n; ++k)
                inner_args.push_back(TensorSum::basis({dim}, {word[pos + k]}));
            TensorSum mid = alg.product(inner_args);
            std::vector<TensorSum> outer;
            for (int k = 0; k < pos; ++k) outer.push_back(TensorSum::basis({dim}, {word[k]}));
            outer.push_back(mid);
            for (int k = pos + n; k < len; ++k)
                outer.push_back(TensorSum::basis({dim}, {word[k]}));
            TensorSum res = alg.product(outer);
            if (!ref) {
                ref = res;
            } else if (!(*ref == res)) {
                v.holds = false;
                v.witness = std::make_pair(Word{}, word);
                v.note = "basis word disagrees at placement " + std::to_string(pos);
                return v;
            }
        }
    }
    return v;
}

PolyadicAlgebra derived_multiplication(const PolyadicAlgebra& base, int ell) {
    if (ell < 2) throw AlgebraError("derived multiplication needs ell >= 2");
    PolyadicAlgebra out(base.iterated_mult(ell), base.labels());
    if (base.unit()) {
        MultiLinearMap eta = *base.unit();
        for (int k = 1; k < ell; ++k) eta = tensor(eta, *base.unit());
        out.set_unit(std::move(eta));
    }
    return out;
}

namespace {

/// mu o (insert the lone id factor of (eta (x) id) at slot `pos`).
MultiLinearMap unit_side(const PolyadicAlgebra& alg, const MultiLinearMap& eta, int pos) {
    int n = alg.arity(), dim = alg.dim();
    std::vector<int> img(n);
    // Factors of eta (x) id: eta's n-1 outputs then the id slot; send the id
    // slot to `pos` and keep eta's outputs in order around it.
    for (int k = 0; k < n - 1; ++k) img[k] = k < pos ? k : k + 1;
    img[n - 1] = pos;
    auto perm = SlotPermutation(img);
    auto spread = tensor(eta, id_n(1, dim));
    return alg.mult().compose(MultiLinearMap::from_permutation(perm, spread.out_dims()).compose(spread));
}

}  // namespace

LinearVerdict check_unit(const PolyadicAlgebra& alg, const MultiLinearMap& eta) {
    LinearVerdict v;
    MultiLinearMap id1 = id_n(1, alg.dim());
    for (int pos = 0; pos < alg.arity(); ++pos) {
        MultiLinearMap got = unit_side(alg, eta, pos);
        if (auto diff = MultiLinearMap::first_difference(got, id1)) {
            v.holds = false;
            v.witness = diff;
            v.note = "unit law fails with id at slot " + std::to_string(pos);
            return v;
        }
    }
    return v;
}

LinearVerdict check_unit_sequence(const PolyadicAlgebra& alg,
                                  const std::vector<MultiLinearMap>& etas) {
    if (static_cast<int>(etas.size()) != alg.arity() - 1)
        throw AlgebraError("neutral unit sequence needs n-1 maps");
    MultiLinearMap eta = etas[0];
    for (std::size_t k = 1; k < etas.size(); ++k) eta = tensor(eta, etas[k]);
    return check_unit(alg, eta);
}

UnitSearch find_unit(const PolyadicAlgebra& alg) {
    int n = alg.arity(), dim = alg.dim();
    std::vector<std::function<MultiLinearMap(const MultiLinearMap&)>> pipelines;
    std::vector<MultiLinearMap> rhs;
    for (int pos = 0; pos < n; ++pos) {
        pipelines.push_back([&alg, pos](const MultiLinearMap& eta) {
            return unit_side(alg, eta, pos);
        });
        rhs.push_back(id_n(1, dim));
    }
    auto sol = solve_map_equations({}, std::vector<int>(n - 1, dim), pipelines, rhs);
    UnitSearch out;
    out.found = sol.consistent;
    out.nullity = sol.nullity;
    if (sol.consistent) out.eta = sol.map;
    return out;
}

QuermapResult quermap(const PolyadicAlgebra& alg, const TensorSum& x) {
    int n = alg.arity(), dim = alg.dim();
    if (x.dims() != std::vector<int>{dim}) throw AlgebraError("quermap needs a 1-factor element");
    QuermapResult out;
    // mu[x^(n-1), q] = x is linear in q.
    MultiLinearMap xmap = MultiLinearMap::constant(x);
    MultiLinearMap left = xmap;
    for (int k = 1; k < n - 1; ++k) left = tensor(left, xmap);
    auto sol = solve_map_equations(
        {}, {dim},
        {[&](const MultiLinearMap& q) { return alg.mult().compose(tensor(left, q)); }},
        {xmap});
    if (!sol.consistent) {
        out.note = "no querelement: linear system inconsistent";
        return out;
    }
    TensorSum q = sol.map.apply(TensorSum::scalar(Scalar(1)));
    // Verify every placement of q.
    for (int pos = 0; pos < n; ++pos) {
        std::vector<TensorSum> args(static_cast<std::size_t>(n), x);
        args[pos] = q;
        if (!(alg.product(args) == x)) {
            out.note = "solution fails at slot " + std::to_string(pos);
            return out;
        }
    }
    out.exists = true;
    out.value = q;
    out.nullity = sol.nullity;
    if (sol.nullity > 0) out.note = "ambiguous: solution space has dimension " +
                                    std::to_string(sol.nullity);
    return out;
}

LinearVerdict check_mediality(const PolyadicAlgebra& alg) {
    int n = alg.arity(), dim = alg.dim();
    MultiLinearMap grid = tensor_power(alg.mult(), n);  // n groups of n -> n
    MultiLinearMap lhs = alg.mult().compose(grid);
    auto medial = SlotPermutation::transpose_groups(n, n);
    MultiLinearMap rhs = lhs.compose(
        MultiLinearMap::from_permutation(medial, std::vector<int>(n * n, dim)));
    LinearVerdict v;
    if (auto diff = MultiLinearMap::first_difference(lhs, rhs)) {
        v.holds = false;
        v.witness = diff;
        v.note = "mediality fails";
    }
    return v;
}

MediallyCommutative check_medially_commutative(const PolyadicAlgebra& alg) {
    MediallyCommutative out;
    auto tw = canonical_twist(alg.arity());
    if (!tw) {
        out.note = "no grid realizes a " + std::to_string(alg.arity()) + "-place twist";
        return out;
    }
    out.admissible = true;
    MultiLinearMap op = alg.mult().compose(MultiLinearMap::from_permutation(
        *tw, std::vector<int>(alg.arity(), alg.dim())));
    out.holds = op == alg.mult();
    return out;
}

PolyadicAlgebra opposite_algebra(const PolyadicAlgebra& alg,
                                 std::optional<std::pair<int, int>> grid) {
    int n = alg.arity();
    SlotPermutation tw;
    if (grid) {
        tw = polyadic_twist(grid->second, grid->first);
        if (tw.size() != n)
            throw AlgebraError("grid (" + std::to_string(grid->first) + "," +
                               std::to_string(grid->second) + ") has " +
                               std::to_string(tw.size()) + " twist places, need " +
                               std::to_string(n));
    } else {
        auto t = canonical_twist(n);
        if (!t)
            throw AlgebraError("no allowed twist with " + std::to_string(n) +
                               " places in the twist-place table");
        tw = *t;
    }
    MultiLinearMap op = alg.mult().compose(
        MultiLinearMap::from_permutation(tw, std::vector<int>(n, alg.dim())));
    return PolyadicAlgebra(std::move(op), alg.labels());
}

PolyadicAlgebra tensor_product_algebras(const std::vector<PolyadicAlgebra>& algs) {
    if (algs.empty()) throw AlgebraError("empty tensor product");
    int n = algs[0].arity();
    if (static_cast<int>(algs.size()) != n)
        throw AlgebraError("tensor product needs exactly n = " + std::to_string(n) + " algebras");
    for (auto& a : algs)
        if (a.arity() != n) throw AlgebraError("arity mismatch in tensor product");

    // Input: n copies of W = A_1 (x) ... (x) A_n; regroup the n x n grid of
    // slots and feed each algebra its row.
    std::vector<int> slot_dims;
    for (int copy = 0; copy < n; ++copy)
        for (auto& a : algs) slot_dims.push_back(a.dim());
    auto medial = SlotPermutation::transpose_groups(n, n);
    MultiLinearMap perm = MultiLinearMap::from_permutation(medial, slot_dims);
    std::vector<MultiLinearMap> mults;
    for (auto& a : algs) mults.push_back(a.mult());
    MultiLinearMap mu = tensor_all(mults).compose(perm);

    MultiLinearMap grouped = mu.regroup_in(std::vector<int>(n, n)).regroup_out({n});
    PolyadicAlgebra out(grouped, {});
    bool all_unital = std::all_of(algs.begin(), algs.end(),
                                  [](const PolyadicAlgebra& a) { return a.unit().has_value(); });
    if (all_unital) {
        MultiLinearMap etas = *algs[0].unit();
        for (int k = 1; k < n; ++k) etas = tensor(etas, *algs[k].unit());
        // Layout: n groups of (n-1) factors; transpose to (n-1) copies of W.
        std::vector<int> eta_dims;
        for (auto& a : algs)
            for (int k = 0; k < n - 1; ++k) eta_dims.push_back(a.dim());
        auto regroup = SlotPermutation::transpose_groups(n, n - 1);
        MultiLinearMap eta = MultiLinearMap::from_permutation(regroup, eta_dims).compose(etas);
        out.set_unit(eta.regroup_out(std::vector<int>(n - 1, n)));
    }
    return out;
}

LinearVerdict check_heteromorphism(const Heteromorphism& h, const PolyadicAlgebra& src,
                                   const PolyadicAlgebra& dst) {
    using polyadic::arity::heteromorphism_arity;
    int s = h.places, lid = h.ell_id;
    auto shape = heteromorphism_arity(s, src.arity(), lid);
    if (!shape.admissible || shape.value != dst.arity())
        throw AlgebraError("arity shape violated: " + shape.note);
    int n2 = dst.arity();
    MultiLinearMap lhs_inner = src.mult();
    for (int k = 1; k < s - lid; ++k) lhs_inner = tensor(lhs_inner, src.mult());
    if (lid > 0) lhs_inner = tensor(lhs_inner, id_n(lid, src.dim()));
    MultiLinearMap lhs = h.map.compose(lhs_inner);
    MultiLinearMap rhs = dst.mult().compose(tensor_power(h.map, n2));
    LinearVerdict v;
    if (auto diff = MultiLinearMap::first_difference(lhs, rhs)) {
        v.holds = false;
        v.witness = diff;
        v.note = "heteromorphism equation fails";
    }
    return v;
}

LinearVerdict check_homomorphism(const MultiLinearMap& phi, const PolyadicAlgebra& src,
                                 const PolyadicAlgebra& dst) {
    if (src.arity() != dst.arity()) throw AlgebraError("homomorphism needs equiary algebras");
    Heteromorphism h{1, 0, phi};
    return check_heteromorphism(h, src, dst);
}

}  // namespace polyadic::algebra
