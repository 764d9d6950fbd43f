#pragma once

#include "polyadic/hopf.hpp"

namespace polyadic::quantum {

using algebra::LinearVerdict;
using hopf::PolyadicBialgebra;

struct QuantumError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TensorVerdict {
    bool holds = true;
    TensorSum difference;  // lhs - rhs when it fails
    std::string note;
};

/// Componentwise product of k-factor tensors through the algebra's iterated
/// multiplication; the argument count must be an admissible word length.
TensorSum elementwise_product(const algebra::PolyadicAlgebra& A, const std::vector<TensorSum>& xs);

/// Unit-padded embedding: body's factors land at the listed slots (order
/// carries the component order), every other slot holds the algebra unit.
TensorSum extend_matrix(const algebra::PolyadicAlgebra& A, const TensorSum& body,
                        const std::vector<int>& slots, int total);

/// mu[Delta_cop(b), R, ..., R] = mu[R, ..., R, Delta(b)] on every basis b,
/// with Delta_cop = tau o Delta for the supplied twist.
LinearVerdict check_almost_cocommutativity(const PolyadicBialgebra& B, const TensorSum& R,
                                           const SlotPermutation& tau);

/// Sequenced variant with n-1 distinct matrices and all intermediate
/// placements of Delta(b).
LinearVerdict check_sequenced_almost_cocommutativity(const PolyadicBialgebra& B,
                                                     const std::vector<TensorSum>& Rs,
                                                     const SlotPermutation& tau);

/// Binary quantum Yang-Baxter equation R12 R13 R23 = R23 R13 R12.
TensorVerdict check_yang_baxter(const PolyadicBialgebra& B, const TensorSum& R);

struct QuasitriangularReport {
    TensorVerdict eq1;  // (Delta (x) id)(R) = R13 R23
    TensorVerdict eq2;  // (id (x) Delta)(R) = R13 R12
};

QuasitriangularReport check_quasitriangular(const PolyadicBialgebra& B, const TensorSum& R);

/// The n' quasipolyangularity relations; components before the spread slot
/// are twisted by tau_op, later ones multiply in plain order.
std::vector<TensorVerdict> check_quasipolyangular(const PolyadicBialgebra& B, const TensorSum& R,
                                                  int ell, const SlotPermutation& tau);

/// Braiding on V = B with the regular (n-1)-place action and the reversal
/// module twist.
MultiLinearMap braiding_from_r(const PolyadicBialgebra& B, const TensorSum& R);

/// Generic n'-ary braid equation (n'+1 brackets of embedded braidings per
/// side) for the braiding built from R.
LinearVerdict check_braid_equation(const PolyadicBialgebra& B, const TensorSum& R);

/// Ternary compatibility equations for the braiding (n' = 3 only).
struct TernaryCompatReport {
    LinearVerdict first;
    LinearVerdict second;
};
TernaryCompatReport check_ternary_braid_compatibilities(const PolyadicBialgebra& B,
                                                        const TensorSum& R);

/// The informal ternary extended-matrix identity compared as composed
/// left-multiplication operators on B^{(x)5}.
LinearVerdict check_ternary_extended_braid(const PolyadicBialgebra& B, const TensorSum& R);

/// mu[tau_medial o (Delta^(x)n') o Delta(b), M^(n-1)] =
/// mu[M^(n-1), (Delta^(x)n') o Delta(b)].
LinearVerdict check_almost_comediality(const PolyadicBialgebra& B, const TensorSum& M);

/// Variant with an explicit permutation in place of the medial map (used for
/// the composed twist of an R-derived M-matrix).
LinearVerdict check_almost_comediality_tau(const PolyadicBialgebra& B, const TensorSum& M,
                                           const SlotPermutation& tau);

/// M_R = R^(x)n' and the blockwise twist tau_R = tau_op^(x)n'.
std::pair<TensorSum, SlotPermutation> m_from_r(const TensorSum& R, int n_prime);

struct MedialBraidReport {
    TensorVerdict m1, m2;        // extended-matrix products in B^(x)7
    LinearVerdict ccb, ccbb;     // module-level braid composites
    bool cross_consistent = true;  // product verdicts match module verdicts
};

/// The two binary medial braid equations (13- and 9-bracket diagrams).
MedialBraidReport check_medial_braid(const PolyadicBialgebra& B, const TensorSum& M);

/// Generic (n'^2+1)-bracket medial braid shape at the module level.
LinearVerdict check_generic_medial_braid(const PolyadicBialgebra& B, const TensorSum& M);

struct MedialQuasipolyangularReport {
    std::vector<TensorVerdict> relations;  // n'^2 componentwise relations
    TensorVerdict ddd1, ddd2;              // extended forms of the first/last
    TensorVerdict mm1, mm2;                // compatibility products
};

MedialQuasipolyangularReport check_medial_quasipolyangular(const PolyadicBialgebra& B,
                                                           const TensorSum& M, int ell);

/// Extended-matrix index quadruples of the two binary medial braid equations,
/// in application order; generated from the window patterns of the diagrams.
struct MedialBraidIndices {
    std::vector<std::vector<int>> lhs, rhs;  // 1-indexed quadruples
};
MedialBraidIndices medial_braid_indices(int equation);  // equation = 1 or 2

enum class SearchTarget { ybe, comedial, medial_braid };

/// Exhaustive grid scan over coefficient assignments of a factor-count body;
/// returns all passing tensors in deterministic enumeration order.
std::vector<TensorSum> search_solutions(const PolyadicBialgebra& B, SearchTarget target,
                                        const std::vector<Scalar>& grid, int factors,
                                        long long budget = 2'000'000);

}  // namespace polyadic::quantum
