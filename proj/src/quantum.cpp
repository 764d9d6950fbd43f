#include "polyadic/quantum.hpp"

#include <algorithm>

namespace polyadic::quantum {

namespace {

MultiLinearMap id_n(int factors, int dim) {
    return MultiLinearMap::identity(std::vector<int>(factors, dim));
}

TensorSum basis1(int dim, int k) { return TensorSum::basis({dim}, {k}); }

/// Left multiplication v -> mu^{o ell}[words..., v] by a fixed basis word.
MultiLinearMap left_mult(const algebra::PolyadicAlgebra& A, const Word& by) {
    int n = A.arity(), dim = A.dim();
    if (by.size() % static_cast<std::size_t>(n - 1) != 0)
        throw QuantumError("left multiplication needs a multiple of n-1 factors");
    int ell = static_cast<int>(by.size()) / (n - 1);
    MultiLinearMap out(std::vector<int>{dim}, std::vector<int>{dim});
    for (int v = 0; v < dim; ++v) {
        std::vector<TensorSum> args;
        for (int b : by) args.push_back(basis1(dim, b));
        args.push_back(basis1(dim, v));
        TensorSum img = A.product(args);
        for (auto& t : img.terms()) out.coeff(t.second, Word{v}) += t.first;
    }
    (void)ell;
    return out;
}

void require_factors(const TensorSum& x, int factors, int dim, const std::string& what) {
    if (x.dims() != std::vector<int>(factors, dim))
        throw QuantumError(what + " must have " + std::to_string(factors) +
                           " factors over the bialgebra basis");
}

TensorVerdict compare_sums(const TensorSum& lhs, const TensorSum& rhs, const std::string& what) {
    TensorVerdict v;
    if (!(lhs == rhs)) {
        v.holds = false;
        v.difference = lhs - rhs;
        v.note = what;
    }
    return v;
}

/// Window offsets (application order) of the generic braid diagram with k
/// braided slots on 2k-1 factors: written [0, 1, ..., k-1, 0] and
/// [k-1, 0, 1, ..., k-2, k-1], applied right to left.
std::vector<int> braid_windows_lhs(int k) {
    std::vector<int> written{0};
    for (int j = 1; j < k; ++j) written.push_back(j);
    written.push_back(0);
    std::reverse(written.begin(), written.end());
    return written;
}

std::vector<int> braid_windows_rhs(int k) {
    std::vector<int> written{k - 1};
    for (int j = 0; j < k - 1; ++j) written.push_back(j);
    written.push_back(k - 1);
    std::reverse(written.begin(), written.end());
    return written;
}

MultiLinearMap compose_windows(const MultiLinearMap& c, const std::vector<int>& windows, int total,
                               int dim) {
    int k = c.in_factors();
    MultiLinearMap acc = id_n(total, dim);
    for (int w : windows)
        acc = embed_uniform(c, w, total - k - w, dim).compose(acc);
    return acc;
}

}  // namespace

TensorSum elementwise_product(const algebra::PolyadicAlgebra& A, const std::vector<TensorSum>& xs) {
    if (xs.empty()) throw QuantumError("empty product");
    int n = A.arity();
    long long m = static_cast<long long>(xs.size());
    if ((m - 1) % (n - 1) != 0)
        throw QuantumError("product of " + std::to_string(m) + " tensors is not an admissible " +
                           std::to_string(n) + "-ary word");
    int k = xs[0].factors();
    for (auto& x : xs)
        if (x.factors() != k) throw QuantumError("factor count mismatch in product");
    // Fold n at a time; per-slot values are algebra products of basis words.
    std::vector<TensorSum> word = xs;
    while (word.size() > 1) {
        std::vector<TensorSum> head(word.begin(), word.begin() + n);
        TensorSum result(xs[0].dims());
        std::vector<std::size_t> pick(n, 0);
        bool any = true;
        for (auto& h : head)
            if (h.terms().empty()) any = false;
        while (any) {
            Scalar coeff(1);
            for (int i = 0; i < n; ++i) coeff *= head[i].terms()[pick[i]].first;
            TensorSum term = TensorSum::scalar(coeff);
            for (int j = 0; j < k; ++j) {
                std::vector<TensorSum> slot;
                for (int i = 0; i < n; ++i)
                    slot.push_back(basis1(xs[0].dims()[j], head[i].terms()[pick[i]].second[j]));
                term = tensor(term, A.product(slot));
            }
            result = result + term;
            int pos = n - 1;
            while (pos >= 0 && ++pick[pos] == head[pos].terms().size()) pick[pos--] = 0;
            if (pos < 0) break;
        }
        word.erase(word.begin(), word.begin() + n);
        word.insert(word.begin(), result);
    }
    return word[0];
}

TensorSum extend_matrix(const algebra::PolyadicAlgebra& A, const TensorSum& body,
                        const std::vector<int>& slots, int total) {
    auto unit = A.unit_element();
    if (!unit) throw QuantumError("extended matrices need an algebra unit");
    if (static_cast<int>(slots.size()) != body.factors())
        throw QuantumError("slot list must match the body's factor count");
    std::vector<int> place(total, -1);
    for (std::size_t j = 0; j < slots.size(); ++j) {
        if (slots[j] < 0 || slots[j] >= total || place[slots[j]] >= 0)
            throw QuantumError("bad slot list");
        place[slots[j]] = static_cast<int>(j);
    }
    TensorSum out(std::vector<int>(total, A.dim()));
    for (auto& t : body.terms()) {
        TensorSum term = TensorSum::scalar(t.first);
        for (int s = 0; s < total; ++s)
            term = tensor(term, place[s] >= 0 ? basis1(A.dim(), t.second[place[s]]) : *unit);
        out = out + term;
    }
    return out;
}

LinearVerdict check_almost_cocommutativity(const PolyadicBialgebra& B, const TensorSum& R,
                                           const SlotPermutation& tau) {
    return check_sequenced_almost_cocommutativity(
        B, std::vector<TensorSum>(static_cast<std::size_t>(B.mult_arity() - 1), R), tau);
}

LinearVerdict check_sequenced_almost_cocommutativity(const PolyadicBialgebra& B,
                                                     const std::vector<TensorSum>& Rs,
                                                     const SlotPermutation& tau) {
    int n = B.mult_arity(), np = B.comult_arity(), dim = B.dim();
    if (static_cast<int>(Rs.size()) != n - 1)
        throw QuantumError("need n-1 matrices in the sequence");
    for (auto& R : Rs) require_factors(R, np, dim, "R-matrix");
    if (tau.size() != np) throw QuantumError("twist must act on n' slots");
    LinearVerdict v;
    for (int b = 0; b < dim; ++b) {
        TensorSum delta = B.coalg().expansion(b);
        TensorSum delta_cop = delta.permuted(tau);
        std::optional<TensorSum> ref;
        for (int pos = 0; pos <= n - 1; ++pos) {
            std::vector<TensorSum> args;
            for (int i = 0; i < pos; ++i) args.push_back(Rs[i]);
            args.push_back(pos == 0 ? delta_cop : delta);
            for (int i = pos; i < n - 1; ++i) args.push_back(Rs[i]);
            TensorSum res = elementwise_product(B.alg(), args);
            if (!ref) {
                ref = res;
            } else if (!(*ref == res)) {
                v.holds = false;
                v.witness = std::make_pair(Word{}, Word{b});
                v.note = "almost co-commutativity fails on " + B.alg().labels()[b] +
                         " between placements 0 and " + std::to_string(pos);
                return v;
            }
        }
    }
    return v;
}

TensorVerdict check_yang_baxter(const PolyadicBialgebra& B, const TensorSum& R) {
    if (B.mult_arity() != 2 || B.comult_arity() != 2)
        throw QuantumError("the Yang-Baxter check is the binary instance");
    require_factors(R, 2, B.dim(), "R-matrix");
    TensorSum r12 = extend_matrix(B.alg(), R, {0, 1}, 3);
    TensorSum r13 = extend_matrix(B.alg(), R, {0, 2}, 3);
    TensorSum r23 = extend_matrix(B.alg(), R, {1, 2}, 3);
    TensorSum lhs = elementwise_product(B.alg(), {r12, r13, r23});
    TensorSum rhs = elementwise_product(B.alg(), {r23, r13, r12});
    return compare_sums(lhs, rhs, "Yang-Baxter equation fails");
}

QuasitriangularReport check_quasitriangular(const PolyadicBialgebra& B, const TensorSum& R) {
    if (B.mult_arity() != 2 || B.comult_arity() != 2)
        throw QuantumError("quasitriangularity is the binary instance");
    require_factors(R, 2, B.dim(), "R-matrix");
    int dim = B.dim();
    TensorSum r12 = extend_matrix(B.alg(), R, {0, 1}, 3);
    TensorSum r13 = extend_matrix(B.alg(), R, {0, 2}, 3);
    TensorSum r23 = extend_matrix(B.alg(), R, {1, 2}, 3);
    QuasitriangularReport rep;
    TensorSum lhs1 = tensor(B.coalg().comult(), id_n(1, dim)).apply(R);
    rep.eq1 = compare_sums(lhs1, elementwise_product(B.alg(), {r13, r23}),
                           "(Delta (x) id)(R) != R13 R23");
    TensorSum lhs2 = tensor(id_n(1, dim), B.coalg().comult()).apply(R);
    rep.eq2 = compare_sums(lhs2, elementwise_product(B.alg(), {r13, r12}),
                           "(id (x) Delta)(R) != R13 R12");
    return rep;
}

std::vector<TensorVerdict> check_quasipolyangular(const PolyadicBialgebra& B, const TensorSum& R,
                                                  int ell, const SlotPermutation& tau) {
    int n = B.mult_arity(), np = B.comult_arity(), dim = B.dim();
    require_factors(R, np, dim, "R-matrix");
    if (np != ell * (n - 1) + 1)
        throw QuantumError("quasipolyangular shape needs n' = ell*(n-1)+1");
    if (tau.size() != np) throw QuantumError("twist must act on n' slots");
    std::vector<TensorVerdict> out;
    const auto& terms = R.terms();
    for (int k = 0; k < np; ++k) {
        // LHS: Delta applied to component k of R.
        MultiLinearMap expand = embed_uniform(B.coalg().comult(), k, np - 1 - k, dim);
        TensorSum lhs = expand.apply(R);
        // RHS: n' copies of R; component j < k twisted product, j = k spread,
        // j > k plain product.
        TensorSum rhs(std::vector<int>(2 * np - 1, dim));
        std::vector<std::size_t> pick(np, 0);
        if (!terms.empty()) {
            for (;;) {
                Scalar coeff(1);
                for (int i = 0; i < np; ++i) coeff *= terms[pick[i]].first;
                TensorSum term = TensorSum::scalar(coeff);
                for (int j = 0; j < np; ++j) {
                    Word seq(np);
                    for (int i = 0; i < np; ++i) seq[i] = terms[pick[i]].second[j];
                    if (j == k) {
                        for (int i = 0; i < np; ++i) term = tensor(term, basis1(dim, seq[i]));
                    } else {
                        Word use = j < k ? tau.apply(seq) : seq;
                        std::vector<TensorSum> args;
                        for (int i = 0; i < np; ++i) args.push_back(basis1(dim, use[i]));
                        term = tensor(term, B.alg().product(args));
                    }
                }
                rhs = rhs + term;
                int pos = np - 1;
                while (pos >= 0 && ++pick[pos] == terms.size()) pick[pos--] = 0;
                if (pos < 0) break;
            }
        }
        out.push_back(compare_sums(lhs, rhs,
                                   "quasipolyangularity relation " + std::to_string(k + 1)));
    }
    return out;
}

MultiLinearMap braiding_from_r(const PolyadicBialgebra& B, const TensorSum& R) {
    int n = B.mult_arity(), np = B.comult_arity(), dim = B.dim();
    require_factors(R, np, dim, "R-matrix");
    // sum over n-1 term choices: (x)_i L(r^(i) words), then the reversal.
    MultiLinearMap acc(std::vector<int>(np, dim), std::vector<int>(np, dim));
    const auto& terms = R.terms();
    if (!terms.empty()) {
        std::vector<std::size_t> pick(n - 1, 0);
        for (;;) {
            Scalar coeff(1);
            for (int i = 0; i < n - 1; ++i) coeff *= terms[pick[i]].first;
            std::vector<MultiLinearMap> slot_maps;
            for (int j = 0; j < np; ++j) {
                Word by(n - 1);
                for (int i = 0; i < n - 1; ++i) by[i] = terms[pick[i]].second[j];
                slot_maps.push_back(left_mult(B.alg(), by));
            }
            acc = acc + tensor_all(slot_maps).scaled(coeff);
            int pos = n - 2;
            while (pos >= 0 && ++pick[pos] == terms.size()) pick[pos--] = 0;
            if (pos < 0) break;
        }
    }
    MultiLinearMap rev = MultiLinearMap::from_permutation(SlotPermutation::reversal(np),
                                                          std::vector<int>(np, dim));
    return rev.compose(acc);
}

LinearVerdict check_braid_equation(const PolyadicBialgebra& B, const TensorSum& R) {
    int np = B.comult_arity(), dim = B.dim();
    MultiLinearMap c = braiding_from_r(B, R);
    int total = 2 * np - 1;
    MultiLinearMap lhs = compose_windows(c, braid_windows_lhs(np), total, dim);
    MultiLinearMap rhs = compose_windows(c, braid_windows_rhs(np), total, dim);
    LinearVerdict v;
    if (auto diff = MultiLinearMap::first_difference(lhs, rhs)) {
        v.holds = false;
        v.witness = diff;
        v.note = "braid equation fails";
    }
    return v;
}

TernaryCompatReport check_ternary_braid_compatibilities(const PolyadicBialgebra& B,
                                                        const TensorSum& R) {
    if (B.comult_arity() != 3) throw QuantumError("compatibilities are the ternary instance");
    int dim = B.dim();
    MultiLinearMap c = braiding_from_r(B, R);
    // Tensor-product module action through Delta: the braiding with the
    // triple module W = V (x) V (x) V in one slot.
    const auto& terms = R.terms();
    int n = B.mult_arity();
    auto block_braiding = [&](bool w_first) {
        MultiLinearMap acc(std::vector<int>(5, dim), std::vector<int>(5, dim));
        if (!terms.empty()) {
            std::vector<std::size_t> pick(n - 1, 0);
            for (;;) {
                Scalar coeff(1);
                for (int i = 0; i < n - 1; ++i) coeff *= terms[pick[i]].first;
                // Component words per R slot.
                std::vector<Word> by(3, Word(n - 1));
                for (int j = 0; j < 3; ++j)
                    for (int i = 0; i < n - 1; ++i) by[j][i] = terms[pick[i]].second[j];
                // The W slot acts through the (n-1)-fold comultiplied word.
                int wslot = w_first ? 0 : 2;
                std::vector<TensorSum> expanded;
                for (int i = 0; i < n - 1; ++i)
                    expanded.push_back(B.coalg().expansion(by[wslot][i]));
                std::vector<std::size_t> sub(n - 1, 0);
                for (;;) {
                    Scalar c2 = coeff;
                    for (int i = 0; i < n - 1; ++i) c2 *= expanded[i].terms()[sub[i]].first;
                    std::vector<MultiLinearMap> mats;
                    auto push_simple = [&](int j) {
                        mats.push_back(left_mult(B.alg(), by[j]));
                    };
                    auto push_block = [&]() {
                        for (int f = 0; f < 3; ++f) {
                            Word w(n - 1);
                            for (int i = 0; i < n - 1; ++i)
                                w[i] = expanded[i].terms()[sub[i]].second[f];
                            mats.push_back(left_mult(B.alg(), w));
                        }
                    };
                    if (w_first) {
                        push_block();
                        push_simple(1);
                        push_simple(2);
                    } else {
                        push_simple(0);
                        push_simple(1);
                        push_block();
                    }
                    acc = acc + tensor_all(mats).scaled(c2);
                    int pos = n - 2;
                    while (pos >= 0 && ++sub[pos] == expanded[pos].terms().size()) sub[pos--] = 0;
                    if (pos < 0) break;
                }
                int pos = n - 2;
                while (pos >= 0 && ++pick[pos] == terms.size()) pick[pos--] = 0;
                if (pos < 0) break;
            }
        }
        SlotPermutation tau = w_first ? SlotPermutation({2, 3, 4, 1, 0})
                                      : SlotPermutation({4, 3, 0, 1, 2});
        return MultiLinearMap::from_permutation(tau, std::vector<int>(5, dim)).compose(acc);
    };
    TernaryCompatReport rep;
    {
        // (c (x) id id) o (id (x) c (x) id) o (id id (x) c) = c_{W,V,V}
        MultiLinearMap lhs = compose_windows(c, {2, 1, 0}, 5, dim);
        MultiLinearMap rhs = block_braiding(true);
        if (auto diff = MultiLinearMap::first_difference(lhs, rhs)) {
            rep.first.holds = false;
            rep.first.witness = diff;
            rep.first.note = "first compatibility fails";
        }
    }
    {
        // (id (x) c (x) id) o (id id (x) c) o (c (x) id id) = c_{V,V,W}
        MultiLinearMap lhs = compose_windows(c, {0, 2, 1}, 5, dim);
        MultiLinearMap rhs = block_braiding(false);
        if (auto diff = MultiLinearMap::first_difference(lhs, rhs)) {
            rep.second.holds = false;
            rep.second.witness = diff;
            rep.second.note = "second compatibility fails";
        }
    }
    return rep;
}

namespace {

/// Label tracking through a window sequence with the braided content reorder
/// rule w -> perm(w); emits the braided label tuples in application order.
std::vector<std::vector<int>> label_tuples(const std::vector<int>& windows, int block,
                                           const SlotPermutation& reorder, int total) {
    std::vector<int> labels(total);
    for (int i = 0; i < total; ++i) labels[i] = i + 1;
    std::vector<std::vector<int>> out;
    for (int w : windows) {
        std::vector<int> tuple(labels.begin() + w, labels.begin() + w + block);
        out.push_back(tuple);
        Word moved = reorder.apply(Word(tuple.begin(), tuple.end()));
        for (int i = 0; i < block; ++i) labels[w + i] = moved[i];
    }
    return out;
}

std::vector<int> repeat_pattern(const std::vector<int>& pattern, int times,
                                std::optional<int> tail) {
    std::vector<int> out;
    for (int t = 0; t < times; ++t) out.insert(out.end(), pattern.begin(), pattern.end());
    if (tail) out.push_back(*tail);
    return out;
}

}  // namespace

MedialBraidIndices medial_braid_indices(int equation) {
    // Windows in application order of the 13- and 9-bracket binary medial
    // braid diagrams; the braided block reorders (a,b,c,d) -> (a,c,b,d).
    SlotPermutation medial4{{0, 2, 1, 3}};
    MedialBraidIndices out;
    if (equation == 1) {
        out.lhs = label_tuples(repeat_pattern({0, 3, 2, 1}, 3, 0), 4, medial4, 7);
        out.rhs = label_tuples(repeat_pattern({3, 2, 1, 0}, 3, 3), 4, medial4, 7);
    } else if (equation == 2) {
        out.lhs = label_tuples({2, 1, 0, 3, 2, 1, 0, 3, 2}, 4, medial4, 7);
        out.rhs = label_tuples({1, 0, 3, 2, 1, 0, 3, 2, 1}, 4, medial4, 7);
    } else {
        throw QuantumError("equation must be 1 or 2");
    }
    return out;
}

LinearVerdict check_almost_comediality(const PolyadicBialgebra& B, const TensorSum& M) {
    int np = B.comult_arity();
    return check_almost_comediality_tau(B, M, SlotPermutation::transpose_groups(np, np));
}

LinearVerdict check_almost_comediality_tau(const PolyadicBialgebra& B, const TensorSum& M,
                                           const SlotPermutation& tau) {
    int n = B.mult_arity(), np = B.comult_arity(), dim = B.dim();
    require_factors(M, np * np, dim, "M-matrix");
    if (tau.size() != np * np) throw QuantumError("permutation must act on n'^2 slots");
    MultiLinearMap expand = tensor_power(B.coalg().comult(), np).compose(B.coalg().comult());
    LinearVerdict v;
    for (int b = 0; b < dim; ++b) {
        TensorSum d2 = expand.apply_basis({b});
        std::vector<TensorSum> lhs_args{d2.permuted(tau)};
        std::vector<TensorSum> rhs_args;
        for (int i = 0; i < n - 1; ++i) {
            lhs_args.push_back(M);
            rhs_args.push_back(M);
        }
        rhs_args.push_back(d2);
        TensorSum lhs = elementwise_product(B.alg(), lhs_args);
        TensorSum rhs = elementwise_product(B.alg(), rhs_args);
        if (!(lhs == rhs)) {
            v.holds = false;
            v.witness = std::make_pair(Word{}, Word{b});
            v.note = "almost co-mediality fails on " + B.alg().labels()[b];
            return v;
        }
    }
    return v;
}

std::pair<TensorSum, SlotPermutation> m_from_r(const TensorSum& R, int n_prime) {
    if (R.factors() != n_prime) throw QuantumError("R must have n' factors");
    TensorSum m = tensor_power(R, n_prime);
    auto tw = canonical_twist(n_prime);
    if (!tw) throw QuantumError("no allowed twist with n' places");
    std::vector<int> img(static_cast<std::size_t>(n_prime) * n_prime);
    for (int b = 0; b < n_prime; ++b)
        for (int s = 0; s < n_prime; ++s) img[b * n_prime + s] = b * n_prime + (*tw)[s];
    return {m, SlotPermutation(img)};
}

namespace {

/// Braiding of the binary medial layer: c(v1..v4) = tau_medial o
/// componentwise left multiplication by the M components.
MultiLinearMap medial_braiding(const PolyadicBialgebra& B, const TensorSum& M) {
    int dim = B.dim();
    MultiLinearMap acc(std::vector<int>(4, dim), std::vector<int>(4, dim));
    for (auto& t : M.terms()) {
        std::vector<MultiLinearMap> mats;
        for (int j = 0; j < 4; ++j) mats.push_back(left_mult(B.alg(), {t.second[j]}));
        acc = acc + tensor_all(mats).scaled(t.first);
    }
    MultiLinearMap tau = MultiLinearMap::from_permutation(SlotPermutation{{0, 2, 1, 3}},
                                                          std::vector<int>(4, dim));
    return tau.compose(acc);
}

TensorSum fold_products(const algebra::PolyadicAlgebra& A, const std::vector<TensorSum>& xs) {
    TensorSum acc = xs[0];
    for (std::size_t k = 1; k < xs.size(); ++k)
        acc = elementwise_product(A, {acc, xs[k]});
    return acc;
}

MultiLinearMap compose_windows4(const MultiLinearMap& c, const std::vector<int>& windows,
                                int dim) {
    MultiLinearMap acc = MultiLinearMap::identity(std::vector<int>(7, dim));
    for (int w : windows)
        acc = embed_uniform(c, w, 7 - 4 - w, dim).compose(acc);
    return acc;
}

}  // namespace

MedialBraidReport check_medial_braid(const PolyadicBialgebra& B, const TensorSum& M) {
    if (B.mult_arity() != 2 || B.comult_arity() != 2)
        throw QuantumError("the medial braid equations are the binary instance");
    int dim = B.dim();
    require_factors(M, 4, dim, "M-matrix");
    MedialBraidReport rep;

    auto run_products = [&](int equation) {
        auto idx = medial_braid_indices(equation);
        auto side = [&](const std::vector<std::vector<int>>& tuples) {
            // Application order to product order: last applied leftmost.
            std::vector<TensorSum> factors;
            for (auto it = tuples.rbegin(); it != tuples.rend(); ++it) {
                std::vector<int> slots;
                for (int v : *it) slots.push_back(v - 1);
                factors.push_back(extend_matrix(B.alg(), M, slots, 7));
            }
            return fold_products(B.alg(), factors);
        };
        return compare_sums(side(idx.lhs), side(idx.rhs),
                            "medial braid equation " + std::to_string(equation));
    };
    rep.m1 = run_products(1);
    rep.m2 = run_products(2);

    MultiLinearMap c = medial_braiding(B, M);
    auto run_modules = [&](int equation) {
        std::vector<int> lw = equation == 1 ? repeat_pattern({0, 3, 2, 1}, 3, 0)
                                            : std::vector<int>{2, 1, 0, 3, 2, 1, 0, 3, 2};
        std::vector<int> rw = equation == 1 ? repeat_pattern({3, 2, 1, 0}, 3, 3)
                                            : std::vector<int>{1, 0, 3, 2, 1, 0, 3, 2, 1};
        LinearVerdict v;
        MultiLinearMap lhs = compose_windows4(c, lw, dim);
        MultiLinearMap rhs = compose_windows4(c, rw, dim);
        if (auto diff = MultiLinearMap::first_difference(lhs, rhs)) {
            v.holds = false;
            v.witness = diff;
            v.note = "module-level medial braid equation " + std::to_string(equation);
        }
        return v;
    };
    rep.ccb = run_modules(1);
    rep.ccbb = run_modules(2);
    rep.cross_consistent = (rep.m1.holds == rep.ccb.holds) && (rep.m2.holds == rep.ccbb.holds);
    return rep;
}

LinearVerdict check_generic_medial_braid(const PolyadicBialgebra& B, const TensorSum& M) {
    int np = B.comult_arity(), dim = B.dim();
    require_factors(M, np * np, dim, "M-matrix");
    int k = np * np;
    MultiLinearMap acc(std::vector<int>(k, dim), std::vector<int>(k, dim));
    int n = B.mult_arity();
    const auto& terms = M.terms();
    if (!terms.empty()) {
        std::vector<std::size_t> pick(n - 1, 0);
        for (;;) {
            Scalar coeff(1);
            for (int i = 0; i < n - 1; ++i) coeff *= terms[pick[i]].first;
            std::vector<MultiLinearMap> mats;
            for (int j = 0; j < k; ++j) {
                Word by(n - 1);
                for (int i = 0; i < n - 1; ++i) by[i] = terms[pick[i]].second[j];
                mats.push_back(left_mult(B.alg(), by));
            }
            acc = acc + tensor_all(mats).scaled(coeff);
            int pos = n - 2;
            while (pos >= 0 && ++pick[pos] == terms.size()) pick[pos--] = 0;
            if (pos < 0) break;
        }
    }
    MultiLinearMap c = MultiLinearMap::from_permutation(
                           SlotPermutation::transpose_groups(np, np), std::vector<int>(k, dim))
                           .compose(acc);
    int total = 2 * k - 1;
    MultiLinearMap lhs = compose_windows(c, braid_windows_lhs(k), total, dim);
    MultiLinearMap rhs = compose_windows(c, braid_windows_rhs(k), total, dim);
    LinearVerdict v;
    if (auto diff = MultiLinearMap::first_difference(lhs, rhs)) {
        v.holds = false;
        v.witness = diff;
        v.note = "generic medial braid equation fails";
    }
    return v;
}

LinearVerdict check_ternary_extended_braid(const PolyadicBialgebra& B, const TensorSum& R) {
    if (B.comult_arity() != 3) throw QuantumError("the extended identity is the ternary instance");
    int dim = B.dim();
    require_factors(R, 3, dim, "R-matrix");
    // Label triples of the ternary braid diagram (reversal reorder).
    auto tuples_lhs = label_tuples({0, 2, 1, 0}, 3, SlotPermutation::reversal(3), 5);
    auto tuples_rhs = label_tuples({2, 1, 0, 2}, 3, SlotPermutation::reversal(3), 5);
    // Each side is the composition of left-multiplication operators by the
    // extended matrices, compared as maps on B^(x)5.
    auto side = [&](const std::vector<std::vector<int>>& tuples) {
        MultiLinearMap acc = MultiLinearMap::identity(std::vector<int>(5, dim));
        for (auto& tuple : tuples) {
            std::vector<int> slots;
            for (int v : tuple) slots.push_back(v - 1);
            TensorSum ext = extend_matrix(B.alg(), R, slots, 5);
            MultiLinearMap step(std::vector<int>(5, dim), std::vector<int>(5, dim));
            for (auto& t : ext.terms()) {
                std::vector<MultiLinearMap> mats;
                for (int j = 0; j < 5; ++j) mats.push_back(left_mult(B.alg(), {t.second[j]}));
                step = step + tensor_all(mats).scaled(t.first);
            }
            acc = step.compose(acc);
        }
        return acc;
    };
    LinearVerdict v;
    if (auto diff = MultiLinearMap::first_difference(side(tuples_lhs), side(tuples_rhs))) {
        v.holds = false;
        v.witness = diff;
        v.note = "ternary extended-matrix identity fails";
    }
    return v;
}

MedialQuasipolyangularReport check_medial_quasipolyangular(const PolyadicBialgebra& B,
                                                           const TensorSum& M, int ell) {
    int n = B.mult_arity(), np = B.comult_arity(), dim = B.dim();
    int k2 = np * np;
    require_factors(M, k2, dim, "M-matrix");
    if (k2 != ell * (n - 1) + 1)
        throw QuantumError("medial quasipolyangular shape needs n'^2 = ell*(n-1)+1");
    MedialQuasipolyangularReport rep;
    MultiLinearMap expand2 = tensor_power(B.coalg().comult(), np).compose(B.coalg().comult());
    auto medial_seq = SlotPermutation::transpose_groups(np, np);
    const auto& terms = M.terms();
    for (int k = 0; k < k2; ++k) {
        MultiLinearMap expand = embed_uniform(expand2, k, k2 - 1 - k, dim);
        TensorSum lhs = expand.apply(M);
        TensorSum rhs(std::vector<int>(2 * k2 - 1, dim));
        if (!terms.empty()) {
            std::vector<std::size_t> pick(k2, 0);
            for (;;) {
                Scalar coeff(1);
                for (int i = 0; i < k2; ++i) coeff *= terms[pick[i]].first;
                TensorSum term = TensorSum::scalar(coeff);
                for (int j = 0; j < k2; ++j) {
                    Word seq(k2);
                    for (int i = 0; i < k2; ++i) seq[i] = terms[pick[i]].second[j];
                    if (j == k) {
                        for (int i = 0; i < k2; ++i) term = tensor(term, basis1(dim, seq[i]));
                    } else {
                        Word use = j < k ? medial_seq.apply(seq) : seq;
                        std::vector<TensorSum> args;
                        for (int i = 0; i < k2; ++i) args.push_back(basis1(dim, use[i]));
                        term = tensor(term, elementwise_product(B.alg(), args));
                    }
                }
                rhs = rhs + term;
                int pos = k2 - 1;
                while (pos >= 0 && ++pick[pos] == terms.size()) pick[pos--] = 0;
                if (pos < 0) break;
            }
        }
        rep.relations.push_back(
            compare_sums(lhs, rhs, "medial quasipolyangularity relation " + std::to_string(k + 1)));
    }
    if (B.alg().unit()) {
        int total = 2 * k2 - 1;
        auto ext = [&](std::vector<int> slots) {
            for (auto& s : slots) --s;
            return extend_matrix(B.alg(), M, slots, total);
        };
        TensorSum lhs1 = embed_uniform(expand2, 0, k2 - 1, dim).apply(M);
        rep.ddd1 = compare_sums(lhs1,
                                fold_products(B.alg(), {ext({1, 5, 6, 7}), ext({2, 5, 6, 7}),
                                                        ext({3, 5, 6, 7}), ext({4, 5, 6, 7})}),
                                "extended first relation");
        TensorSum lhs2 = embed_uniform(expand2, k2 - 1, 0, dim).apply(M);
        rep.ddd2 = compare_sums(lhs2,
                                fold_products(B.alg(), {ext({1, 2, 3, 4}), ext({1, 2, 3, 6}),
                                                        ext({1, 2, 3, 5}), ext({1, 2, 3, 7})}),
                                "extended last relation");
        rep.mm1 = compare_sums(
            fold_products(B.alg(), {ext({1, 2, 3, 4}), ext({1, 5, 6, 7}), ext({2, 5, 6, 7}),
                                    ext({3, 5, 6, 7}), ext({4, 5, 6, 7})}),
            fold_products(B.alg(), {ext({1, 5, 6, 7}), ext({3, 5, 6, 7}), ext({2, 5, 6, 7}),
                                    ext({4, 5, 6, 7}), ext({1, 2, 3, 4})}),
            "first compatibility");
        rep.mm2 = compare_sums(
            fold_products(B.alg(), {ext({4, 5, 6, 7}), ext({1, 2, 3, 4}), ext({1, 2, 3, 6}),
                                    ext({1, 2, 3, 5}), ext({1, 2, 3, 7})}),
            fold_products(B.alg(), {ext({1, 2, 3, 4}), ext({1, 2, 3, 5}), ext({1, 2, 3, 6}),
                                    ext({1, 2, 3, 7}), ext({4, 5, 6, 7})}),
            "second compatibility");
    } else {
        rep.ddd1.holds = rep.ddd2.holds = rep.mm1.holds = rep.mm2.holds = false;
        rep.ddd1.note = rep.ddd2.note = rep.mm1.note = rep.mm2.note = "no unit";
    }
    return rep;
}

std::vector<TensorSum> search_solutions(const PolyadicBialgebra& B, SearchTarget target,
                                        const std::vector<Scalar>& grid, int factors,
                                        long long budget) {
    int dim = B.dim();
    std::size_t coeffs = 1;
    for (int k = 0; k < factors; ++k) coeffs *= dim;
    double combos = 1;
    for (std::size_t k = 0; k < coeffs; ++k) combos *= static_cast<double>(grid.size());
    if (combos > static_cast<double>(budget))
        throw QuantumError("coefficient grid of about " + std::to_string(combos) +
                           " points exceeds the search budget");
    std::vector<TensorSum> found;
    if (grid.empty()) return found;
    std::vector<std::size_t> pick(coeffs, 0);
    std::vector<int> dims(factors, dim);
    bool more = true;
    while (more) {
        TensorSum body(dims);
        for (std::size_t c = 0; c < coeffs; ++c) {
            const Scalar& v = grid[pick[c]];
            if (!v.is_zero()) body.add_term(v, MultiLinearMap::word_of(c, dims));
        }
        bool ok = false;
        switch (target) {
            case SearchTarget::ybe:
                ok = check_yang_baxter(B, body).holds;
                break;
            case SearchTarget::comedial:
                ok = check_almost_comediality(B, body).holds;
                break;
            case SearchTarget::medial_braid: {
                auto rep = check_medial_braid(B, body);
                ok = rep.m1.holds && rep.m2.holds;
                break;
            }
        }
        if (ok) found.push_back(body);
        more = false;
        for (std::size_t pos = coeffs; pos-- > 0;) {
            if (++pick[pos] < grid.size()) {
                more = true;
                break;
            }
            pick[pos] = 0;
        }
    }
    return found;
}

}  // namespace polyadic::quantum
