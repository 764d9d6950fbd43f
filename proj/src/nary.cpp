#include "polyadic/nary.hpp"

#include "polyadic/arity.hpp"

#include <algorithm>
#include <random>

namespace polyadic::nary {

namespace {

BigInt pow_ll(long long base, int exp) {
    BigInt p = 1;
    for (int k = 0; k < exp; ++k) p *= base;
    return p;
}

bool next_word(std::vector<int>& w, int radix) {
    for (std::size_t s = w.size(); s-- > 0;) {
        if (++w[s] < radix) return true;
        w[s] = 0;
    }
    return false;
}

bool odd_rational(const Rational& r) {
    return numerator(r) % 2 != 0 && denominator(r) % 2 != 0;
}

}  // namespace

std::string value_key(const Value& v) {
    if (std::holds_alternative<std::monostate>(v)) return "-";
    if (auto* s = std::get_if<Scalar>(&v)) return scalar_format(*s);
    auto& p = std::get<std::pair<Scalar, Scalar>>(v);
    return "(" + scalar_format(p.first) + "," + scalar_format(p.second) + ")";
}

bool value_equal(const Value& a, const Value& b) { return value_key(a) == value_key(b); }

std::optional<FormulaKind> formula_by_name(const std::string& name) {
    if (name == "sum_mod") return FormulaKind::sum_mod;
    if (name == "affine_sum_mod") return FormulaKind::affine_sum_mod;
    if (name == "gauss_mul") return FormulaKind::gauss_mul;
    if (name == "gauss_sum") return FormulaKind::gauss_sum;
    if (name == "pair_antidiag") return FormulaKind::pair_antidiag;
    return std::nullopt;
}

std::string formula_name(FormulaKind kind) {
    switch (kind) {
        case FormulaKind::sum_mod: return "sum_mod";
        case FormulaKind::affine_sum_mod: return "affine_sum_mod";
        case FormulaKind::gauss_mul: return "gauss_mul";
        case FormulaKind::gauss_sum: return "gauss_sum";
        case FormulaKind::pair_antidiag: return "pair_antidiag";
    }
    return "?";
}

NaryStructure::NaryStructure(Carrier carrier, Domain domain)
    : carrier_(std::move(carrier)), domain_(domain) {
    if (carrier_.values.empty()) {
        for (std::size_t k = 0; k < carrier_.ids.size(); ++k)
            carrier_.values.emplace_back(Scalar(static_cast<long long>(k)));
    }
    if (carrier_.values.size() != carrier_.ids.size())
        throw StructureError("carrier values/ids size mismatch");
    for (std::size_t k = 0; k < carrier_.ids.size(); ++k) {
        if (!by_id_.emplace(carrier_.ids[k], static_cast<int>(k)).second)
            throw StructureError("duplicate carrier id " + carrier_.ids[k]);
        by_value_.emplace(value_key(carrier_.values[k]), static_cast<int>(k));
    }
}

std::optional<int> NaryStructure::index_of_value(const Value& v) const {
    auto it = by_value_.find(value_key(v));
    if (it == by_value_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> NaryStructure::index_of_id(const std::string& id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) return std::nullopt;
    return it->second;
}

void NaryStructure::add_op(NaryOp op) {
    if (op.arity < 2) throw StructureError("op arity must be >= 2");
    if (op.table) {
        if (static_cast<BigInt>(op.table->size()) != pow_ll(size(), op.arity))
            throw StructureError("op table size must be |X|^arity");
        for (int v : *op.table)
            if (v < 0 || v >= size()) throw StructureError("table entry out of carrier");
    } else if (!op.formula) {
        throw StructureError("op needs a table or a formula");
    }
    std::string name = op.name;
    ops_[name] = std::move(op);
}

const NaryOp& NaryStructure::op(const std::string& name) const {
    auto it = ops_.find(name);
    if (it == ops_.end()) throw StructureError("no op named " + name);
    return it->second;
}

bool NaryStructure::has_op(const std::string& name) const { return ops_.count(name) > 0; }

Value NaryStructure::eval(const NaryOp& op, const std::vector<Value>& args) const {
    if (static_cast<int>(args.size()) != op.arity) throw StructureError("arity mismatch");
    if (op.table) {
        std::size_t idx = 0;
        for (auto& a : args) {
            auto i = index_of_value(a);
            if (!i) throw StructureError("table op applied to value outside the carrier");
            idx = idx * size() + static_cast<std::size_t>(*i);
        }
        return carrier_.values[(*op.table)[idx]];
    }
    const Formula& f = *op.formula;
    switch (f.kind) {
        case FormulaKind::sum_mod:
        case FormulaKind::affine_sum_mod: {
            BigInt acc = f.kind == FormulaKind::affine_sum_mod ? f.shift : 0;
            for (auto& a : args) acc += numerator(std::get<Scalar>(a).re());
            BigInt m = f.mod;
            BigInt r = acc % m;
            if (r < 0) r += m;
            return Scalar(Rational(r), Rational(0));
        }
        case FormulaKind::gauss_sum: {
            if (std::holds_alternative<std::pair<Scalar, Scalar>>(args[0])) {
                std::pair<Scalar, Scalar> acc{Scalar(0), Scalar(0)};
                for (auto& a : args) {
                    auto& p = std::get<std::pair<Scalar, Scalar>>(a);
                    acc.first += p.first;
                    acc.second += p.second;
                }
                return acc;
            }
            Scalar acc;
            for (auto& a : args) acc += std::get<Scalar>(a);
            return acc;
        }
        case FormulaKind::gauss_mul: {
            Scalar acc(1);
            for (auto& a : args) acc *= std::get<Scalar>(a);
            return acc;
        }
        case FormulaKind::pair_antidiag: {
            if (op.arity != 3) throw StructureError("pair_antidiag is ternary");
            auto& a = std::get<std::pair<Scalar, Scalar>>(args[0]);
            auto& b = std::get<std::pair<Scalar, Scalar>>(args[1]);
            auto& c = std::get<std::pair<Scalar, Scalar>>(args[2]);
            return std::pair<Scalar, Scalar>{a.first * b.second * c.first,
                                             a.second * b.first * c.second};
        }
    }
    throw StructureError("bad formula");
}

Value NaryStructure::eval_indices(const NaryOp& op, const std::vector<int>& args) const {
    std::vector<Value> vals;
    vals.reserve(args.size());
    for (int a : args) vals.push_back(carrier_.values[a]);
    return eval(op, vals);
}

bool NaryStructure::value_in_domain(const Value& v) const {
    auto scalar_ok = [&](const Scalar& s) {
        switch (domain_) {
            case Domain::any: return true;
            case Domain::imaginary: return s.re() == 0;
            case Domain::odd_imaginary:
                return s.re() == 0 && odd_rational(s.im());
        }
        return true;
    };
    if (auto* s = std::get_if<Scalar>(&v)) {
        if (domain_ == Domain::any) return index_of_value(v).has_value() || true;
        return scalar_ok(*s);
    }
    if (auto* p = std::get_if<std::pair<Scalar, Scalar>>(&v))
        return scalar_ok(p->first) && scalar_ok(p->second);
    return false;
}

Value iterate_op_values(const NaryStructure& s, const NaryOp& op, std::vector<Value> args) {
    int k = op.arity;
    if (args.empty() || (args.size() - 1) % (k - 1) != 0)
        throw StructureError("inadmissible word length " + std::to_string(args.size()) +
                             " for arity " + std::to_string(k) +
                             "; admissible lengths are ell*(arity-1)+1");
    while (args.size() > 1) {
        std::vector<Value> head(args.begin(), args.begin() + k);
        Value r = s.eval(op, head);
        args.erase(args.begin(), args.begin() + k);
        args.insert(args.begin(), r);
    }
    return args[0];
}

Value iterate_op(const NaryStructure& s, const NaryOp& op, const std::vector<int>& args) {
    std::vector<Value> vals;
    vals.reserve(args.size());
    for (int a : args) vals.push_back(s.value(a));
    return iterate_op_values(s, op, std::move(vals));
}

AssocReport check_total_associativity(const NaryStructure& s, const NaryOp& op, long long budget) {
    AssocReport rep;
    int k = op.arity;
    int len = 2 * k - 1;
    BigInt space = pow_ll(s.size(), len);
    auto test_word = [&](const std::vector<int>& w) -> bool {
        std::vector<Value> vals;
        for (int a : w) vals.push_back(s.value(a));
        Value ref;
        for (int pos = 0; pos <= k - 1; ++pos) {
            std::vector<Value> inner(vals.begin() + pos, vals.begin() + pos + k);
            Value mid = s.eval(op, inner);
            std::vector<Value> outer(vals.begin(), vals.begin() + pos);
            outer.push_back(mid);
            outer.insert(outer.end(), vals.begin() + pos + k, vals.end());
            Value res = s.eval(op, outer);
            if (pos == 0) {
                ref = res;
            } else if (!value_equal(ref, res)) {
                rep.verdict = Verdict::fails;
                rep.witness_word = w;
                rep.position_a = 0;
                rep.position_b = pos;
                return false;
            }
        }
        return true;
    };
    if (space <= budget) {
        std::vector<int> w(len, 0);
        do {
            ++rep.checked;
            if (!test_word(w)) return rep;
        } while (next_word(w, s.size()));
        return rep;
    }
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> pick(0, s.size() - 1);
    for (long long t = 0; t < budget; ++t) {
        std::vector<int> w(len);
        for (auto& x : w) x = pick(rng);
        ++rep.checked;
        if (!test_word(w)) return rep;
    }
    rep.verdict = Verdict::budget_exhausted;
    return rep;
}

CommReport check_commutativity(const NaryStructure& s, const NaryOp& op, long long budget) {
    CommReport rep;
    int k = op.arity;
    BigInt space = pow_ll(s.size(), k);
    auto test_word = [&](std::vector<int> w) -> bool {
        Value ref = s.eval_indices(op, w);
        std::vector<int> sorted = w;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> perm = sorted;
        do {
            if (!value_equal(ref, s.eval_indices(op, perm))) {
                rep.verdict = Verdict::fails;
                rep.witness_word = w;
                return false;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return true;
    };
    if (space <= budget) {
        std::vector<int> w(k, 0);
        do {
            if (!test_word(w)) return rep;
        } while (next_word(w, s.size()));
        return rep;
    }
    std::mt19937_64 rng(0xabcdef12345ULL);
    std::uniform_int_distribution<int> pick(0, s.size() - 1);
    for (long long t = 0; t < budget; ++t) {
        std::vector<int> w(k);
        for (auto& x : w) x = pick(rng);
        if (!test_word(w)) return rep;
    }
    rep.verdict = Verdict::budget_exhausted;
    return rep;
}

std::vector<int> find_zeros(const NaryStructure& s, const NaryOp& add, long long budget) {
    // The zero is the additive neutral element: add[z^(m-1), x] = x for every
    // x at every placement, exactly the unit equation for the addition-like op.
    (void)budget;
    int m = add.arity;
    std::vector<int> zeros;
    for (int z = 0; z < s.size(); ++z) {
        bool is_zero = true;
        for (int x = 0; x < s.size() && is_zero; ++x)
            for (int pos = 0; pos < m && is_zero; ++pos) {
                std::vector<int> args(m - 1, z);
                args.insert(args.begin() + pos, x);
                if (!value_equal(s.eval_indices(add, args), s.value(x))) is_zero = false;
            }
        if (is_zero) zeros.push_back(z);
    }
    return zeros;
}

UnitsReport find_units_and_neutral_sequences(const NaryStructure& s, const NaryOp& op,
                                             long long max_seq) {
    UnitsReport rep;
    int n = op.arity;
    for (int e = 0; e < s.size(); ++e) {
        bool is_unit = true;
        for (int x = 0; x < s.size() && is_unit; ++x)
            for (int pos = 0; pos < n && is_unit; ++pos) {
                std::vector<int> args(n - 1, e);
                args.insert(args.begin() + pos, x);
                if (!value_equal(s.eval_indices(op, args), s.value(x))) is_unit = false;
            }
        if (is_unit) rep.units.push_back(e);
    }
    BigInt space = pow_ll(s.size(), n - 1);
    if (space > max_seq) {
        rep.sequences_exhaustive = false;
        return rep;
    }
    std::vector<int> seq(n - 1, 0);
    do {
        bool neutral = true;
        for (int x = 0; x < s.size() && neutral; ++x) {
            std::vector<int> args = seq;
            args.push_back(x);
            if (!value_equal(s.eval_indices(op, args), s.value(x))) neutral = false;
        }
        if (neutral) rep.neutral_sequences.push_back(seq);
    } while (next_word(seq, s.size()));
    return rep;
}

std::vector<int> querelement(const NaryStructure& s, const NaryOp& op, int x) {
    int n = op.arity;
    std::vector<int> found;
    std::vector<std::string> seen;
    for (int y = 0; y < s.size(); ++y) {
        bool ok = true;
        for (int pos = 0; pos < n && ok; ++pos) {
            std::vector<int> args(n - 1, x);
            args.insert(args.begin() + pos, y);
            if (!value_equal(s.eval_indices(op, args), s.value(x))) ok = false;
        }
        if (ok) {
            std::string key = value_key(s.value(y));
            if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
                seen.push_back(key);
                found.push_back(y);
            }
        }
    }
    return found;
}

Verdict check_distributivity(const NaryStructure& s, const NaryOp& add, const NaryOp& mul,
                             long long budget) {
    int m = add.arity, n = mul.arity;
    // mul[head, add[a_1..a_m], tail] = add[mul[head, a_j, tail] : j] for every
    // insertion position of the added block.
    BigInt space = pow_ll(s.size(), n - 1 + m);
    bool sampled = space > budget;
    std::mt19937_64 rng(0xd15712ULL);
    std::uniform_int_distribution<int> pick(0, s.size() - 1);
    auto test = [&](const std::vector<int>& word) -> bool {
        std::vector<int> ctx(word.begin(), word.begin() + (n - 1));
        std::vector<int> block(word.begin() + (n - 1), word.end());
        for (int pos = 0; pos < n; ++pos) {
            Value inner = s.eval_indices(add, block);
            std::vector<Value> args;
            for (int j = 0; j < pos; ++j) args.push_back(s.value(ctx[j]));
            args.push_back(inner);
            for (int j = pos; j < n - 1; ++j) args.push_back(s.value(ctx[j]));
            Value lhs = s.eval(mul, args);
            std::vector<Value> sums;
            for (int j = 0; j < m; ++j) {
                std::vector<Value> margs;
                for (int t = 0; t < pos; ++t) margs.push_back(s.value(ctx[t]));
                margs.push_back(s.value(block[j]));
                for (int t = pos; t < n - 1; ++t) margs.push_back(s.value(ctx[t]));
                sums.push_back(s.eval(mul, margs));
            }
            Value rhs = s.eval(add, sums);
            if (!value_equal(lhs, rhs)) return false;
        }
        return true;
    };
    if (!sampled) {
        std::vector<int> w(n - 1 + m, 0);
        do {
            if (!test(w)) return Verdict::fails;
        } while (next_word(w, s.size()));
        return Verdict::holds;
    }
    for (long long t = 0; t < budget; ++t) {
        std::vector<int> w(n - 1 + m);
        for (auto& x : w) x = pick(rng);
        if (!test(w)) return Verdict::fails;
    }
    return Verdict::budget_exhausted;
}

FieldReport check_field(const PolyadicFieldDesc& desc, long long budget) {
    const NaryStructure& s = desc.structure;
    const NaryOp& add = s.op("add");
    const NaryOp& mul = s.op("mul");
    FieldReport rep;

    rep.add_commutative = check_commutativity(s, add, budget).verdict != Verdict::fails;
    rep.mul_commutative = check_commutativity(s, mul, budget).verdict != Verdict::fails;
    rep.add_associative = check_total_associativity(s, add, budget).verdict != Verdict::fails;
    rep.mul_associative = check_total_associativity(s, mul, budget).verdict != Verdict::fails;
    rep.distributive = check_distributivity(s, add, mul, budget) != Verdict::fails;

    // Closure of one application against the domain predicate (sampled sets
    // from infinite carriers stay inside the carrier set, not the sample).
    if (s.domain() != Domain::any) {
        std::mt19937_64 rng(0xc105edULL);
        std::uniform_int_distribution<int> pick(0, s.size() - 1);
        for (long long t = 0; t < std::min<long long>(budget, 2000) && rep.closed; ++t) {
            std::vector<int> wa(add.arity), wm(mul.arity);
            for (auto& x : wa) x = pick(rng);
            for (auto& x : wm) x = pick(rng);
            if (!s.value_in_domain(s.eval_indices(add, wa))) rep.closed = false;
            if (!s.value_in_domain(s.eval_indices(mul, wm))) rep.closed = false;
        }
    }

    rep.zeros = find_zeros(s, add, budget);
    auto units = find_units_and_neutral_sequences(s, mul, 1);
    rep.units = units.units;

    for (int x = 0; x < s.size() && rep.all_add_querable; ++x)
        if (querelement(s, add, x).empty()) rep.all_add_querable = false;
    for (int x = 0; x < s.size() && rep.all_mul_querable; ++x) {
        bool is_zero = std::find(rep.zeros.begin(), rep.zeros.end(), x) != rep.zeros.end();
        if (is_zero) continue;
        if (querelement(s, mul, x).empty()) rep.all_mul_querable = false;
    }

    rep.classification = std::string(rep.zeros.empty() ? "zeroless" : "zeroed") + " " +
                         (rep.units.empty() ? "nonunital" : "unital");
    if (!rep.add_commutative) rep.failures.push_back("addition not commutative");
    if (!rep.mul_commutative) rep.failures.push_back("multiplication not commutative");
    if (!rep.add_associative) rep.failures.push_back("addition not associative");
    if (!rep.mul_associative) rep.failures.push_back("multiplication not associative");
    if (!rep.distributive) rep.failures.push_back("distributivity fails");
    if (!rep.closed) rep.failures.push_back("closure fails");
    if (!rep.all_add_querable) rep.failures.push_back("additively unquerable element");
    if (!rep.all_mul_querable) rep.failures.push_back("multiplicatively unquerable element");
    return rep;
}

std::vector<Scalar> group_function_convolution(const NaryStructure& group, const NaryOp& group_op,
                                               const NaryStructure& field, const ConvolutionSpec& spec,
                                               const std::vector<std::vector<Scalar>>& fs) {
    using polyadic::arity::group_function_arity;
    int s = spec.s, ell_id = spec.ell_id;
    int n_g = group_op.arity;
    auto shape = group_function_arity(s, n_g, ell_id);
    if (!shape.admissible) throw StructureError("inadmissible shape: " + shape.note);
    int n_k = static_cast<int>(shape.value);
    if (static_cast<int>(fs.size()) != n_k)
        throw StructureError("expected " + std::to_string(n_k) + " functions");
    const NaryOp& field_add = field.op("add");
    const NaryOp& field_mul = field.op("mul");
    int m_k = field_add.arity;
    std::size_t table = 1;
    for (int i = 0; i < s; ++i) table *= group.size();
    for (auto& f : fs)
        if (f.size() != table) throw StructureError("function table size must be |G|^s");

    // Free h's: the first n_g-1 entries of each of the (s-ell_id) product
    // blocks; the block's last entry is solved from the group equation.
    int blocks = s - ell_id;
    long long free_count = static_cast<long long>(blocks) * (n_g - 1);
    BigInt n_summands = pow_ll(group.size(), static_cast<int>(free_count));
    if (m_k > 2) {
        if ((n_summands - 1) % (m_k - 1) != 0)
            throw StructureError("summand count " + n_summands.str() +
                                 " is not an admissible " + std::to_string(m_k) +
                                 "-ary word length");
    }

    std::vector<Scalar> out(table, Scalar());
    std::vector<int> gword(s, 0);
    std::size_t gindex = 0;
    do {
        std::vector<Value> summands;
        std::vector<int> free_vars(free_count, 0);
        bool any = free_count == 0;
        do {
            // Assemble h_1..h_{s*n_k}: product blocks then intact entries.
            std::vector<int> h;
            bool feasible = true;
            for (int b = 0; b < blocks && feasible; ++b) {
                std::vector<int> head(free_vars.begin() + b * (n_g - 1),
                                      free_vars.begin() + (b + 1) * (n_g - 1));
                int solved = -1;
                for (int z = 0; z < group.size(); ++z) {
                    std::vector<int> args = head;
                    args.push_back(z);
                    if (value_equal(group.eval_indices(group_op, args), group.value(gword[b]))) {
                        solved = z;
                        break;
                    }
                }
                if (solved < 0) {
                    feasible = false;
                    break;
                }
                h.insert(h.end(), head.begin(), head.end());
                h.push_back(solved);
            }
            if (feasible) {
                for (int j = 0; j < ell_id; ++j) h.push_back(gword[blocks + j]);
                std::vector<Value> factors;
                for (int i = 0; i < n_k; ++i) {
                    std::vector<int> args(h.begin() + i * s, h.begin() + (i + 1) * s);
                    std::size_t fidx = 0;
                    for (int a : args) fidx = fidx * group.size() + a;
                    factors.emplace_back(fs[i][fidx]);
                }
                summands.push_back(iterate_op_values(field, field_mul, factors));
            }
            any = true;
        } while (free_count > 0 && next_word(free_vars, group.size()));
        (void)any;
        if (summands.empty())
            throw StructureError("empty convolution support: sum inadmissible in a zeroless field");
        Value total = summands.size() == 1 ? summands[0]
                                           : iterate_op_values(field, field_add, summands);
        out[gindex] = std::get<Scalar>(total);
        ++gindex;
    } while (next_word(gword, group.size()));
    return out;
}

}  // namespace polyadic::nary
