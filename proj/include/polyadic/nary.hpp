#pragma once

#include "polyadic/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace polyadic::nary {

using Value = std::variant<std::monostate, Scalar, std::pair<Scalar, Scalar>>;

std::string value_key(const Value& v);
bool value_equal(const Value& a, const Value& b);

enum class FormulaKind { sum_mod, affine_sum_mod, gauss_mul, gauss_sum, pair_antidiag };

std::optional<FormulaKind> formula_by_name(const std::string& name);
std::string formula_name(FormulaKind kind);

struct Formula {
    FormulaKind kind;
    long long mod = 0;
    long long shift = 0;
};

struct NaryOp {
    std::string name;
    int arity = 2;
    std::optional<std::vector<int>> table;  // dense, size |X|^arity
    std::optional<Formula> formula;
};

/// Carrier membership predicate for formula structures sampled from an
/// infinite set; closure is checked against the predicate, not the sample.
enum class Domain { any, imaginary, odd_imaginary };

struct Carrier {
    std::vector<std::string> ids;
    std::vector<Value> values;  // same size as ids, or empty (indices as values)
};

struct StructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class NaryStructure {
public:
    NaryStructure() = default;
    NaryStructure(Carrier carrier, Domain domain = Domain::any);

    int size() const { return static_cast<int>(carrier_.ids.size()); }
    const Carrier& carrier() const { return carrier_; }
    Domain domain() const { return domain_; }
    const Value& value(int index) const { return carrier_.values[index]; }
    std::optional<int> index_of_value(const Value& v) const;
    std::optional<int> index_of_id(const std::string& id) const;

    void add_op(NaryOp op);
    const NaryOp& op(const std::string& name) const;
    bool has_op(const std::string& name) const;
    const std::map<std::string, NaryOp>& ops() const { return ops_; }

    /// Exact value of op on the given argument values (formula ops) or the
    /// table lookup result (table ops).
    Value eval(const NaryOp& op, const std::vector<Value>& args) const;
    Value eval_indices(const NaryOp& op, const std::vector<int>& args) const;

    bool value_in_domain(const Value& v) const;

private:
    Carrier carrier_;
    Domain domain_ = Domain::any;
    std::map<std::string, NaryOp> ops_;
    std::map<std::string, int> by_value_;
    std::map<std::string, int> by_id_;
};

/// Left-nested fold of an admissible word; word length must be ell*(k-1)+1.
Value iterate_op(const NaryStructure& s, const NaryOp& op, const std::vector<int>& args);
Value iterate_op_values(const NaryStructure& s, const NaryOp& op, std::vector<Value> args);

enum class Verdict { holds, fails, budget_exhausted };

struct AssocReport {
    Verdict verdict = Verdict::holds;
    std::vector<int> witness_word;
    int position_a = -1, position_b = -1;
    long long checked = 0;
};

/// Position-independence of the inner application on words of length 2k-1;
/// exhaustive when |X|^(2k-1) fits the budget, deterministic sampling after.
AssocReport check_total_associativity(const NaryStructure& s, const NaryOp& op,
                                      long long budget = 2'000'000);

struct CommReport {
    Verdict verdict = Verdict::holds;
    std::vector<int> witness_word;
};

CommReport check_commutativity(const NaryStructure& s, const NaryOp& op,
                               long long budget = 2'000'000);

/// All z with op[polyad, z] = z for every polyad and every placement of z.
std::vector<int> find_zeros(const NaryStructure& s, const NaryOp& add,
                            long long budget = 2'000'000);

struct UnitsReport {
    std::vector<int> units;
    std::vector<std::vector<int>> neutral_sequences;
    bool sequences_exhaustive = true;
};

UnitsReport find_units_and_neutral_sequences(const NaryStructure& s, const NaryOp& op,
                                             long long max_seq = 100'000);

/// Solutions y of op[x^(n-1), y] = x, verified with y at every slot; distinct
/// solutions by value, ascending index order.
std::vector<int> querelement(const NaryStructure& s, const NaryOp& op, int x);

struct FieldReport {
    bool add_commutative = true, mul_commutative = true;
    bool add_associative = true, mul_associative = true;
    bool distributive = true;
    bool closed = true;
    std::vector<int> zeros;
    std::vector<int> units;
    bool all_add_querable = true;
    bool all_mul_querable = true;  // nonzero elements when a zero exists
    std::string classification;    // zeroed/zeroless x unital/nonunital
    std::vector<std::string> failures;
};

struct PolyadicFieldDesc {
    NaryStructure structure;  // ops "add" and "mul"
};

FieldReport check_field(const PolyadicFieldDesc& desc, long long budget = 200'000);

/// Distributivity of mul over add on enumerated or sampled tuples.
Verdict check_distributivity(const NaryStructure& s, const NaryOp& add, const NaryOp& mul,
                             long long budget = 200'000);

struct ConvolutionSpec {
    int s = 1;
    int ell_id = 0;
};

/// Polyadic convolution of s-place K-valued functions on a finite n_g-ary
/// group. Functions are dense tables G^s -> K; K's ops act on Scalars.
/// Returns the convolved table.
std::vector<Scalar> group_function_convolution(const NaryStructure& group, const NaryOp& group_op,
                                               const NaryStructure& field, const ConvolutionSpec& spec,
                                               const std::vector<std::vector<Scalar>>& fs);

}  // namespace polyadic::nary
