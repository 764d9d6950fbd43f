#pragma once

#include "polyadic/algebra.hpp"
#include "polyadic/coalgebra.hpp"

namespace polyadic::conv {

using algebra::LinearVerdict;

struct ConvolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Maps C^{(x)(n'-1)} -> A^{(x)(n-1)} under the n*-ary convolution product.
using ConvMap = MultiLinearMap;

class ConvolutionContext {
public:
    ConvolutionContext(algebra::PolyadicAlgebra A, coalgebra::PolyadicCoalgebra C, int ell,
                       int ell_prime);

    const algebra::PolyadicAlgebra& A() const { return A_; }
    const coalgebra::PolyadicCoalgebra& C() const { return C_; }
    int ell() const { return ell_; }
    int ell_prime() const { return ell_prime_; }
    int n_star() const { return n_star_; }

    std::vector<int> map_in_dims() const;
    std::vector<int> map_out_dims() const;
    ConvMap zero_map() const;
    /// Identity map; requires matching source and target shapes (the
    /// symmetric case A = C, n = n').
    ConvMap identity_map() const;

private:
    algebra::PolyadicAlgebra A_;
    coalgebra::PolyadicCoalgebra C_;
    int ell_, ell_prime_, n_star_;
};

/// The n*-ary convolution product: iterated comultiplications, medial
/// regrouping, the factor maps, medial regrouping back, iterated products.
ConvMap convolve(const ConvolutionContext& ctx, const std::vector<ConvMap>& fs);

/// e* = eta o eps; verified to act as the polyadic unit at every slot.
struct ConvolutionUnit {
    ConvMap map;
    bool verified = false;
};
ConvolutionUnit convolution_unit(const ConvolutionContext& ctx);

/// All inner placements of convolve over 2n*-1 factors agree.
LinearVerdict check_convolution_associativity(const ConvolutionContext& ctx,
                                              const std::vector<ConvMap>& fs);

struct CoquerResult {
    bool exists = false;
    ConvMap value;
    long long nullity = 0;
    std::string note;
};

/// Querelement of f in the convolution algebra; for n* = 2 this is the
/// classical convolution inverse (f * q = e*).
CoquerResult coquerelement(const ConvolutionContext& ctx, const ConvMap& f);

/// f^<l> = (mu*)^{o l}(f^{(x) l(n*-1)+1}); l = 0 returns f.
ConvMap convolution_power(const ConvolutionContext& ctx, const ConvMap& f, int ell_star);

/// f^<-l> solving (mu*)^{o l}[f^{(x) l(n*-1)}, x] = f.
CoquerResult convolution_power_negative(const ConvolutionContext& ctx, const ConvMap& f,
                                        int ell_star);

}  // namespace polyadic::conv
