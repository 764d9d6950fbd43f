#pragma once

#include "polyadic/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyadic::algebra {

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LinearVerdict {
    bool holds = true;
    std::optional<std::pair<Word, Word>> witness;  // (out word, in word)
    std::string note;
};

/// n-ary associative algebra on a finite basis with exact structure constants.
class PolyadicAlgebra {
public:
    PolyadicAlgebra() = default;
    /// mult must be an n -> 1 map of uniform dimension. Associativity is
    /// checked unless `trust_associativity`.
    PolyadicAlgebra(MultiLinearMap mult, std::vector<std::string> labels = {},
                    bool trust_associativity = false);

    int dim() const { return dim_; }
    int arity() const { return arity_; }
    const MultiLinearMap& mult() const { return mult_; }
    const std::vector<std::string>& labels() const { return labels_; }

    const std::optional<MultiLinearMap>& unit() const { return unit_; }
    void set_unit(MultiLinearMap eta);
    /// Unit element for binary algebras (the 0 -> 1 unit map's image).
    std::optional<TensorSum> unit_element() const;

    std::optional<long long> addition_arity;  // declared m for dimension checks

    /// mu^{ol}: B^{(x) l(n-1)+1} -> B, left-nested.
    MultiLinearMap iterated_mult(int ell) const;

    TensorSum product(const std::vector<TensorSum>& args) const;

private:
    int dim_ = 0;
    int arity_ = 0;
    MultiLinearMap mult_;
    std::optional<MultiLinearMap> unit_;
    std::vector<std::string> labels_;
};

/// Structure constants chi[j][(i_1..i_n)]: table[in_index*dim + j].
PolyadicAlgebra algebra_from_constants(int dim, int arity, const std::vector<Scalar>& constants,
                                       std::vector<std::string> labels = {});

/// Map-level total associativity: all placements of the inner mu agree.
LinearVerdict check_total_associativity_linear(const MultiLinearMap& mult);

/// Element-level oracle: expands every basis word of length 2n-1 through
/// TensorSum evaluation at every inner position; agrees with the map-level
/// check by multilinearity.
LinearVerdict check_associativity_elementwise(const PolyadicAlgebra& alg);

/// ell-iterated multiplication of the base, arity ell*(n0-1)+1.
PolyadicAlgebra derived_multiplication(const PolyadicAlgebra& base, int ell);

/// Positional unit check: mu o (insert id into eta's factors) = id at every
/// insertion slot. eta is a 0 -> (n-1) constant map.
LinearVerdict check_unit(const PolyadicAlgebra& alg, const MultiLinearMap& eta);

/// Neutral-unit-sequence variant: eta given as n-1 separate 0 -> 1 maps.
LinearVerdict check_unit_sequence(const PolyadicAlgebra& alg,
                                  const std::vector<MultiLinearMap>& etas);

struct UnitSearch {
    bool found = false;
    MultiLinearMap eta;
    long long nullity = 0;
};

/// Solve the positional unit equations for eta (all insertion slots stacked).
UnitSearch find_unit(const PolyadicAlgebra& alg);

struct QuermapResult {
    bool exists = false;
    TensorSum value;      // canonical solution
    long long nullity = 0;
    std::string note;
};

/// Multiplicative quermap at a fixed element x: solve mu[x,...,x,q] = x with
/// q verified at every slot.
QuermapResult quermap(const PolyadicAlgebra& alg, const TensorSum& x);

/// mu o (mu^(x)n) = mu o (mu^(x)n) o tau_medial as exact maps.
LinearVerdict check_mediality(const PolyadicAlgebra& alg);

/// mu o tau_op = mu for the canonical n-place twist (when admissible).
struct MediallyCommutative {
    bool admissible = false;
    bool holds = false;
    std::string note;
};
MediallyCommutative check_medially_commutative(const PolyadicAlgebra& alg);

/// Opposite algebra mu o tau_op^(n); inadmissible when no grid realizes an
/// n-place twist. An explicit grid (m_rows, n_cols) may be supplied.
PolyadicAlgebra opposite_algebra(const PolyadicAlgebra& alg,
                                 std::optional<std::pair<int, int>> grid = std::nullopt);

/// Tensor product of n equiary algebras, multiplication composed through the
/// medial regrouping; associativity re-verified.
PolyadicAlgebra tensor_product_algebras(const std::vector<PolyadicAlgebra>& algs);

struct Heteromorphism {
    int places = 1;
    int ell_id = 0;
    MultiLinearMap map;  // s -> 1 between the two algebras' spaces
};

/// Phi o (mu1^(x)(s-ell_id) (x) id^(x)ell_id) = mu2 o Phi^(x)n2.
LinearVerdict check_heteromorphism(const Heteromorphism& h, const PolyadicAlgebra& src,
                                   const PolyadicAlgebra& dst);

LinearVerdict check_homomorphism(const MultiLinearMap& phi, const PolyadicAlgebra& src,
                                 const PolyadicAlgebra& dst);

}  // namespace polyadic::algebra
