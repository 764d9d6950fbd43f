#pragma once

#include "polyadic/algebra.hpp"
#include "polyadic/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyadic::coalgebra {

using algebra::LinearVerdict;

struct CoalgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class PolyadicCoalgebra {
public:
    PolyadicCoalgebra() = default;
    PolyadicCoalgebra(MultiLinearMap comult, std::vector<std::string> labels = {},
                      bool trust_coassociativity = false);

    int dim() const { return dim_; }
    int arity() const { return arity_; }  // n'
    const MultiLinearMap& comult() const { return comult_; }
    const std::vector<std::string>& labels() const { return labels_; }

    const std::optional<MultiLinearMap>& counit() const { return counit_; }
    void set_counit(MultiLinearMap eps);

    std::optional<long long> addition_arity;  // declared m for Sweedler checks

    /// Delta^{ol'}: C -> C^{(x) l'(n'-1)+1}, comultiplying the last factor.
    MultiLinearMap coiterate(int ell_prime) const;

    /// Explicit Sweedler expansion of a basis element.
    TensorSum expansion(int basis_index) const;

private:
    int dim_ = 0;
    int arity_ = 0;
    MultiLinearMap comult_;
    std::optional<MultiLinearMap> counit_;
    std::vector<std::string> labels_;
};

LinearVerdict check_coassociativity(const MultiLinearMap& comult);

/// Element-level oracle via explicit TensorSum expansion of every basis
/// element at every placement.
LinearVerdict check_coassociativity_elementwise(const PolyadicCoalgebra& C);

/// Placement-independence of the coiteration (all placements compared).
LinearVerdict coiterate_placement_independent(const PolyadicCoalgebra& C, int ell_prime);

/// Map equality of C's comultiplication with base's ell_d-fold coiteration.
LinearVerdict is_derived_comultiplication(const PolyadicCoalgebra& C, const PolyadicCoalgebra& base,
                                          int ell_d);

enum class DerivedSearch { derived, nonderived, undecided };

struct DerivedSearchReport {
    DerivedSearch verdict = DerivedSearch::undecided;
    std::string note;
    std::optional<MultiLinearMap> base;  // witness when derived
};

/// Decides whether a ternary comultiplication is the coiteration of some
/// coassociative binary one. Complete for the desk corpus: a rank certificate
/// rules out large unfoldings; otherwise the quadratic system is relaxed to a
/// linear one in coefficient monomials whose rank-one consistency is checked.
DerivedSearchReport search_derived_binary_base(const PolyadicCoalgebra& C);

LinearVerdict check_counit(const PolyadicCoalgebra& C, const MultiLinearMap& eps);

struct CounitSearch {
    bool found = false;
    MultiLinearMap eps;
    long long nullity = 0;
};

CounitSearch find_counit(const PolyadicCoalgebra& C);

struct CocommClass {
    bool totally = false;
    bool medial_admissible = false;
    bool medially = false;
    std::string witness;
};

CocommClass co_commutativity_class(const PolyadicCoalgebra& C);

LinearVerdict check_comediality(const PolyadicCoalgebra& C);

struct GrouplikeReport {
    std::vector<int> grouplike;  // basis indices with Delta(g) = g^(x)n'
    /// Primitive solutions for each ordered pair of group-likes (g1, g2):
    /// x with Delta(x) = sum_j g1^(n'-1-j) (x) x (x) g2^j, x not proportional
    /// to a group-like contribution; empty if none.
    std::vector<std::tuple<int, int, TensorSum>> primitives;
    bool low_skew_admissible = false;  // k_p < n'-1 never coassociative
};

GrouplikeReport find_grouplike_and_primitive(const PolyadicCoalgebra& C);

/// One-way dual algebra on the dual basis; multiplication is the transpose of
/// the ell'-coiterated comultiplication. Scalar field is binary, so the dual
/// arity n* = ell_k + 1 must equal ell'(n'-1)+1.
algebra::PolyadicAlgebra dual_algebra(const PolyadicCoalgebra& C, int ell_prime, int ell_k);

LinearVerdict check_coalgebra_homomorphism(const MultiLinearMap& psi, const PolyadicCoalgebra& C1,
                                           const PolyadicCoalgebra& C2);

PolyadicCoalgebra tensor_product_coalgebras(const std::vector<PolyadicCoalgebra>& Cs);

/// Validator: every Sweedler expansion's summand count is an admissible
/// m-ary word length for the declared addition arity.
LinearVerdict validate_summand_counts(const PolyadicCoalgebra& C, long long m);

}  // namespace polyadic::coalgebra
