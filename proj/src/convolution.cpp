#include "polyadic/convolution.hpp"

namespace polyadic::conv {

ConvolutionContext::ConvolutionContext(algebra::PolyadicAlgebra A, coalgebra::PolyadicCoalgebra C,
                                       int ell, int ell_prime)
    : A_(std::move(A)), C_(std::move(C)), ell_(ell), ell_prime_(ell_prime) {
    if (ell_ < 1 || ell_prime_ < 1) throw ConvolutionError("iteration counts must be >= 1");
    long long lhs = static_cast<long long>(ell_) * (A_.arity() - 1);
    long long rhs = static_cast<long long>(ell_prime_) * (C_.arity() - 1);
    if (lhs != rhs)
        throw ConvolutionError("n*-consistency fails: ell*(n-1) = " + std::to_string(lhs) +
                               " but ell'*(n'-1) = " + std::to_string(rhs));
    n_star_ = static_cast<int>(lhs) + 1;
}

std::vector<int> ConvolutionContext::map_in_dims() const {
    return std::vector<int>(C_.arity() - 1, C_.dim());
}

std::vector<int> ConvolutionContext::map_out_dims() const {
    return std::vector<int>(A_.arity() - 1, A_.dim());
}

ConvMap ConvolutionContext::zero_map() const { return ConvMap(map_in_dims(), map_out_dims()); }

ConvMap ConvolutionContext::identity_map() const {
    if (map_in_dims() != map_out_dims())
        throw ConvolutionError("identity map needs the symmetric case n = n', A = C");
    return MultiLinearMap::identity(map_in_dims());
}

namespace {

void check_shape(const ConvolutionContext& ctx, const ConvMap& f) {
    if (f.in_dims() != ctx.map_in_dims() || f.out_dims() != ctx.map_out_dims())
        throw ConvolutionError("map shape does not match the convolution context");
}

}  // namespace

ConvMap convolve(const ConvolutionContext& ctx, const std::vector<ConvMap>& fs) {
    int n_star = ctx.n_star();
    if (static_cast<int>(fs.size()) != n_star)
        throw ConvolutionError("convolution arity is " + std::to_string(n_star) + ", got " +
                               std::to_string(fs.size()) + " maps");
    for (auto& f : fs) check_shape(ctx, f);
    int cn = ctx.C().arity(), an = ctx.A().arity();
    int c_in = cn - 1, a_out = an - 1;

    MultiLinearMap spread = tensor_power(ctx.C().coiterate(ctx.ell_prime()), c_in);
    auto p1 = SlotPermutation::transpose_groups(c_in, n_star);
    MultiLinearMap perm1 = MultiLinearMap::from_permutation(
        p1, std::vector<int>(static_cast<std::size_t>(c_in) * n_star, ctx.C().dim()));
    MultiLinearMap factors = tensor_all(fs);
    auto p2 = SlotPermutation::transpose_groups(n_star, a_out);
    MultiLinearMap perm2 = MultiLinearMap::from_permutation(
        p2, std::vector<int>(static_cast<std::size_t>(a_out) * n_star, ctx.A().dim()));
    MultiLinearMap collapse = tensor_power(ctx.A().iterated_mult(ctx.ell()), a_out);
    return collapse.compose(perm2.compose(factors.compose(perm1.compose(spread))));
}

ConvolutionUnit convolution_unit(const ConvolutionContext& ctx) {
    if (!ctx.A().unit()) throw ConvolutionError("algebra has no unit");
    if (!ctx.C().counit()) throw ConvolutionError("coalgebra has no counit");
    ConvolutionUnit out{ctx.A().unit()->compose(*ctx.C().counit()), false};
    // Polyadic unit law on the whole space: mu*[e*^(n*-1), f] = f at each slot,
    // checked on the basis maps of Hom(C^{(x)(n'-1)}, A^{(x)(n-1)}).
    ConvMap zero = ctx.zero_map();
    out.verified = true;
    for (std::size_t u = 0; u < zero.out_total() * zero.in_total() && out.verified; ++u) {
        ConvMap basis = zero;
        basis.coeff(u / zero.in_total(), u % zero.in_total()) = Scalar(1);
        for (int pos = 0; pos < ctx.n_star() && out.verified; ++pos) {
            std::vector<ConvMap> args(static_cast<std::size_t>(ctx.n_star()), out.map);
            args[pos] = basis;
            if (!(convolve(ctx, args) == basis)) out.verified = false;
        }
    }
    return out;
}

LinearVerdict check_convolution_associativity(const ConvolutionContext& ctx,
                                              const std::vector<ConvMap>& fs) {
    int n_star = ctx.n_star();
    if (static_cast<int>(fs.size()) != 2 * n_star - 1)
        throw ConvolutionError("associativity check needs 2n*-1 maps");
    LinearVerdict v;
    std::optional<ConvMap> ref;
    for (int pos = 0; pos < n_star; ++pos) {
        std::vector<ConvMap> inner(fs.begin() + pos, fs.begin() + pos + n_star);
        ConvMap mid = convolve(ctx, inner);
        std::vector<ConvMap> outer(fs.begin(), fs.begin() + pos);
        outer.push_back(mid);
        outer.insert(outer.end(), fs.begin() + pos + n_star, fs.end());
        ConvMap res = convolve(ctx, outer);
        if (!ref) {
            ref = res;
        } else if (auto diff = MultiLinearMap::first_difference(*ref, res)) {
            v.holds = false;
            v.witness = diff;
            v.note = "placements 0 and " + std::to_string(pos) + " differ";
            return v;
        }
    }
    return v;
}

CoquerResult coquerelement(const ConvolutionContext& ctx, const ConvMap& f) {
    check_shape(ctx, f);
    CoquerResult out;
    int n_star = ctx.n_star();
    if (n_star == 2) {
        // Classical convolution inverse relative to e*.
        ConvolutionUnit unit = convolution_unit(ctx);
        auto sol = solve_map_equations(
            ctx.map_in_dims(), ctx.map_out_dims(),
            {[&](const ConvMap& q) { return convolve(ctx, {f, q}); }}, {unit.map});
        if (!sol.consistent) {
            out.note = "not convolution-invertible";
            return out;
        }
        if (!(convolve(ctx, {sol.map, f}) == unit.map)) {
            out.note = "right inverse is not a left inverse";
            return out;
        }
        out.exists = true;
        out.value = sol.map;
        out.nullity = sol.nullity;
        return out;
    }
    auto sol = solve_map_equations(
        ctx.map_in_dims(), ctx.map_out_dims(),
        {[&](const ConvMap& q) {
            std::vector<ConvMap> args(static_cast<std::size_t>(n_star - 1), f);
            args.push_back(q);
            return convolve(ctx, args);
        }},
        {f});
    if (!sol.consistent) {
        out.note = "no coquerelement: linear system inconsistent";
        return out;
    }
    for (int pos = 0; pos < n_star; ++pos) {
        std::vector<ConvMap> args(static_cast<std::size_t>(n_star), f);
        args[pos] = sol.map;
        if (!(convolve(ctx, args) == f)) {
            out.note = "solution fails at slot " + std::to_string(pos);
            return out;
        }
    }
    out.exists = true;
    out.value = sol.map;
    out.nullity = sol.nullity;
    if (sol.nullity > 0)
        out.note = "solution space has dimension " + std::to_string(sol.nullity);
    return out;
}

ConvMap convolution_power(const ConvolutionContext& ctx, const ConvMap& f, int ell_star) {
    if (ell_star < 0) throw ConvolutionError("use convolution_power_negative for negative powers");
    check_shape(ctx, f);
    if (ell_star == 0) return f;
    int n_star = ctx.n_star();
    std::vector<ConvMap> word(static_cast<std::size_t>(ell_star) * (n_star - 1) + 1, f);
    while (word.size() > 1) {
        std::vector<ConvMap> head(word.begin(), word.begin() + n_star);
        ConvMap r = convolve(ctx, head);
        word.erase(word.begin(), word.begin() + n_star);
        word.insert(word.begin(), r);
    }
    return word[0];
}

CoquerResult convolution_power_negative(const ConvolutionContext& ctx, const ConvMap& f,
                                        int ell_star) {
    if (ell_star < 1) throw ConvolutionError("negative power needs ell_star >= 1");
    check_shape(ctx, f);
    int n_star = ctx.n_star();
    auto fold_with_unknown = [&](const ConvMap& x) {
        std::vector<ConvMap> word(static_cast<std::size_t>(ell_star) * (n_star - 1), f);
        word.push_back(x);
        while (word.size() > 1) {
            std::vector<ConvMap> head(word.begin(), word.begin() + n_star);
            ConvMap r = convolve(ctx, head);
            word.erase(word.begin(), word.begin() + n_star);
            word.insert(word.begin(), r);
        }
        return word[0];
    };
    auto sol = solve_map_equations(ctx.map_in_dims(), ctx.map_out_dims(),
                                   {fold_with_unknown}, {f});
    CoquerResult out;
    if (!sol.consistent) {
        out.note = "negative power does not exist";
        return out;
    }
    out.exists = true;
    out.value = sol.map;
    out.nullity = sol.nullity;
    return out;
}

}  // namespace polyadic::conv
