#pragma once

#include "polyadic/scalar.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace polyadic {

using Word = std::vector<int>;

struct TensorBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bijection of tensor slots; image[s] is the slot the factor at s moves to.
class SlotPermutation {
public:
    SlotPermutation() = default;
    explicit SlotPermutation(std::vector<int> image);

    static SlotPermutation identity(int size);
    /// Transpose of a row-major grid of `groups` groups with `per_group` slots
    /// each; the result has per_group groups of `groups` slots.
    static SlotPermutation transpose_groups(int groups, int per_group);
    /// Grid-transposition permutation on m*n slots, the medial map of an
    /// m-row, n-column layout. Equals transpose_groups(m, n).
    static SlotPermutation medial(int n_cols, int m_rows);
    static SlotPermutation reversal(int size);

    int size() const { return static_cast<int>(image_.size()); }
    int operator[](int s) const { return image_[s]; }
    const std::vector<int>& image() const { return image_; }

    std::vector<int> fixed_points() const;
    std::vector<int> moved_points() const;

    /// (a.then(b))[s] == b[a[s]]: apply a first.
    SlotPermutation then(const SlotPermutation& next) const;
    SlotPermutation inverse() const;
    bool is_identity() const;

    Word apply(const Word& w) const;   // result[image[s]] = w[s]
    friend bool operator==(const SlotPermutation& a, const SlotPermutation& b) {
        return a.image_ == b.image_;
    }

private:
    std::vector<int> image_;
};

/// Polyadic twist: the medial permutation of the m x n grid restricted to its
/// moved slots, relabeled 0..l_tau-1 in ascending original-slot order.
SlotPermutation polyadic_twist(int n_cols, int m_rows);

/// Grids (m,n), m,n >= 2, whose twist has exactly ell moved slots, in
/// lexicographic (m,n) order.
std::vector<std::pair<int, int>> twist_grids(int ell, int max_side = 32);

/// First admissible grid's twist for the given place count, if any.
std::optional<SlotPermutation> canonical_twist(int ell);

/// K-linear combination of basis tensor words; factor s ranges over dims[s]
/// basis indices. Canonical form: words sorted, like terms merged, zeros
/// dropped.
class TensorSum {
public:
    TensorSum() = default;
    explicit TensorSum(std::vector<int> dims) : dims_(std::move(dims)) {}
    TensorSum(std::vector<int> dims, std::vector<std::pair<Scalar, Word>> terms);

    static TensorSum basis(std::vector<int> dims, Word w);
    static TensorSum scalar(Scalar value);  // zero factors

    const std::vector<int>& dims() const { return dims_; }
    int factors() const { return static_cast<int>(dims_.size()); }
    const std::vector<std::pair<Scalar, Word>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Scalar& c, const Word& w);
    void canonicalize();

    friend TensorSum operator+(const TensorSum& a, const TensorSum& b);
    friend TensorSum operator-(const TensorSum& a, const TensorSum& b);
    TensorSum scaled(const Scalar& c) const;
    friend bool operator==(const TensorSum& a, const TensorSum& b);

    /// Tensor concatenation (factor lists append).
    friend TensorSum tensor(const TensorSum& a, const TensorSum& b);

    TensorSum permuted(const SlotPermutation& p) const;

    std::string str(const std::vector<std::string>& labels = {}) const;

private:
    std::vector<int> dims_;
    std::vector<std::pair<Scalar, Word>> terms_;
};

/// Exact linear map between tensor products of finite-dimensional spaces.
/// Dense coefficients indexed by (out multi-index, in multi-index), row-major,
/// first factor most significant.
class MultiLinearMap {
public:
    MultiLinearMap() = default;
    MultiLinearMap(std::vector<int> in_dims, std::vector<int> out_dims);

    /// Uniform-dimension map: p in-factors, q out-factors, dim N each.
    static MultiLinearMap uniform(int in_factors, int out_factors, int dim);
    static MultiLinearMap identity(std::vector<int> dims);
    static MultiLinearMap from_permutation(const SlotPermutation& p, const std::vector<int>& in_dims);
    /// 0-input map whose image is the given tensor.
    static MultiLinearMap constant(const TensorSum& value);
    /// all-output-contracted functional given by its value on each basis word.
    static MultiLinearMap functional(std::vector<int> in_dims, std::vector<Scalar> values);

    const std::vector<int>& in_dims() const { return in_dims_; }
    const std::vector<int>& out_dims() const { return out_dims_; }
    int in_factors() const { return static_cast<int>(in_dims_.size()); }
    int out_factors() const { return static_cast<int>(out_dims_.size()); }
    std::size_t in_total() const { return in_total_; }
    std::size_t out_total() const { return out_total_; }

    const Scalar& coeff(std::size_t out_index, std::size_t in_index) const {
        return coef_[out_index * in_total_ + in_index];
    }
    Scalar& coeff(std::size_t out_index, std::size_t in_index) {
        return coef_[out_index * in_total_ + in_index];
    }
    const Scalar& coeff(const Word& out_w, const Word& in_w) const {
        return coef_[index_of(out_w, out_dims_) * in_total_ + index_of(in_w, in_dims_)];
    }
    Scalar& coeff(const Word& out_w, const Word& in_w) {
        return coef_[index_of(out_w, out_dims_) * in_total_ + index_of(in_w, in_dims_)];
    }

    bool is_zero() const;
    friend bool operator==(const MultiLinearMap& a, const MultiLinearMap& b);
    friend MultiLinearMap operator+(const MultiLinearMap& a, const MultiLinearMap& b);
    friend MultiLinearMap operator-(const MultiLinearMap& a, const MultiLinearMap& b);
    MultiLinearMap scaled(const Scalar& c) const;

    /// this after g: (*this) o g.
    MultiLinearMap compose(const MultiLinearMap& g) const;
    friend MultiLinearMap tensor(const MultiLinearMap& f, const MultiLinearMap& g);

    TensorSum apply(const TensorSum& x) const;
    TensorSum apply_basis(const Word& in_w) const;

    /// Merge consecutive factor groups into single factors (row-major layout
    /// makes this a relabeling of the same coefficients).
    MultiLinearMap regroup_in(const std::vector<int>& group_sizes) const;
    MultiLinearMap regroup_out(const std::vector<int>& group_sizes) const;

    /// First (out_word, in_word) where the two maps differ.
    static std::optional<std::pair<Word, Word>> first_difference(const MultiLinearMap& a,
                                                                 const MultiLinearMap& b);

    static std::size_t index_of(const Word& w, const std::vector<int>& dims);
    static Word word_of(std::size_t index, const std::vector<int>& dims);

    static std::size_t total(const std::vector<int>& dims);

private:
    std::vector<int> in_dims_, out_dims_;
    std::size_t in_total_ = 1, out_total_ = 1;
    std::vector<Scalar> coef_;
};

MultiLinearMap tensor_power(const MultiLinearMap& f, int k);
TensorSum tensor_power(const TensorSum& x, int k);

/// Tensor product of a list of maps (left to right).
MultiLinearMap tensor_all(const std::vector<MultiLinearMap>& fs);

/// id^{a} (x) f (x) id^{b} with identity factors of dimension `dim`.
MultiLinearMap embed_uniform(const MultiLinearMap& f, int before, int after, int dim);

/// Conjugate f (acting on `slots.size()` factors) into the listed slots of a
/// `total`-factor space, all of dimension `dim`. slots[k] is where f's k-th
/// factor lives; remaining slots are untouched.
MultiLinearMap embed_at_slots(const MultiLinearMap& f, const std::vector<int>& slots, int total, int dim);

struct LinearSolution {
    bool consistent = false;
    std::vector<Scalar> values;   // canonical solution, free variables zero
    long long nullity = 0;
    long long witness_row = -1;   // inconsistent row, if any
};

/// Exact Gaussian elimination for A x = b over the Gaussian rationals.
/// rows[i] is a dense coefficient row; rhs[i] the corresponding constant.
LinearSolution linear_solve(std::vector<std::vector<Scalar>> rows, std::vector<Scalar> rhs);

/// Basis of the solution space of A x = 0.
std::vector<std::vector<Scalar>> linear_nullspace(std::vector<std::vector<Scalar>> rows);

/// Square root in Q(i), if one exists.
std::optional<Scalar> gaussian_sqrt(const Scalar& z);

struct MapSolution {
    bool consistent = false;
    MultiLinearMap map;
    long long nullity = 0;
    long long witness_row = -1;
};

/// Solve pipeline_k(U) = rhs_k, k = 1..K, for the unknown map U of the given
/// shape; every pipeline must be linear in U.
MapSolution solve_map_equations(
    const std::vector<int>& in_dims, const std::vector<int>& out_dims,
    const std::vector<std::function<MultiLinearMap(const MultiLinearMap&)>>& pipelines,
    const std::vector<MultiLinearMap>& rhs);

/// Global knobs for the desk-scale kernel.
struct TensorLimits {
    static std::size_t max_coefficients();  // per map, overridable via POLYADIC_BUDGET
    static int threads;                     // parallel rows in compose
};

}  // namespace polyadic
