#pragma once

#include "polyadic/convolution.hpp"

namespace polyadic::hopf {

using algebra::LinearVerdict;

struct HopfError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Compatibility (the comultiplication is an algebra map):
/// Delta o mu = (mu^(x)n') o tau_medial o (Delta^(x)n).
LinearVerdict check_compatibility(const MultiLinearMap& mult, const MultiLinearMap& comult);

class PolyadicBialgebra {
public:
    PolyadicBialgebra() = default;
    /// Compatibility is constructor-enforced.
    PolyadicBialgebra(algebra::PolyadicAlgebra alg, coalgebra::PolyadicCoalgebra coalg);

    const algebra::PolyadicAlgebra& alg() const { return alg_; }
    const coalgebra::PolyadicCoalgebra& coalg() const { return coalg_; }
    algebra::PolyadicAlgebra& alg() { return alg_; }
    coalgebra::PolyadicCoalgebra& coalg() { return coalg_; }
    int dim() const { return alg_.dim(); }
    int mult_arity() const { return alg_.arity(); }
    int comult_arity() const { return coalg_.arity(); }

private:
    algebra::PolyadicAlgebra alg_;
    coalgebra::PolyadicCoalgebra coalg_;
};

struct BialgebraReport {
    bool compatible = false;
    bool unital = false, counital = false;
    LinearVerdict compatibility;
    LinearVerdict unit_axiom;        // when unital
    LinearVerdict counit_axiom;      // when counital
    LinearVerdict unit_counit;       // (en), when both
    std::string kind;                // one of the four bialgebra kinds
};

BialgebraReport check_bialgebra(const PolyadicBialgebra& B);

/// The n-regular bialgebra on n-1 generators with cyclic relations; words
/// outside the listed patterns multiply to zero.
PolyadicBialgebra von_neumann_regular_bialgebra(int n);

struct CocommBialgReport {
    bool totally_commutative = false;
    bool totally_cocommutative = false;
    bool medial_comm_admissible = false, medially_commutative = false;
    bool medial_cocomm_admissible = false, medially_cocommutative = false;
    std::string witness;
};

CocommBialgReport cocommutativity_class_bialgebra(const PolyadicBialgebra& B);

/// Symmetric convolution context End(B^{(x)(n-1)}) for n = n'.
conv::ConvolutionContext symmetric_context(const PolyadicBialgebra& B, int ell);

struct QuerantipodeResult {
    bool exists = false;
    MultiLinearMap map;  // (n-1) -> (n-1)
    long long nullity = 0;
    std::string note;
};

/// Coquerelement of the symmetric identity in the n*-ary convolution algebra;
/// the binary case n* = 2 is the classical antipode equation id * S = eta eps.
QuerantipodeResult solve_symmetric_querantipode(const PolyadicBialgebra& B, int ell);

/// Singular case (binary comultiplication): Q0 given pointwise on the basis,
/// b -> Q0[b] in B^{(x)(n-1)}; the diagonal identity is checked per basis
/// element at every slot. n* = 2 delegates to the classical antipode law.
LinearVerdict verify_singular_querantipode(const PolyadicBialgebra& B,
                                           const std::vector<TensorSum>& q0, int ell);

struct QuerantipodeProps {
    bool twist_admissible = false;
    LinearVerdict antimultiplicative;    // (anti algebra map)
    LinearVerdict anticomultiplicative;  // (anti coalgebra map)
    bool twist_invariant_input = false;  // mu or Delta invariant under tau_op
    LinearVerdict quer_power;            // q*(Q) = Q o Q and the mu*-identity
};

QuerantipodeProps check_querantipode_properties(const PolyadicBialgebra& B,
                                                const MultiLinearMap& Q, int ell,
                                                std::optional<std::pair<int, int>> grid = std::nullopt);

}  // namespace polyadic::hopf
