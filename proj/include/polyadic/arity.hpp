#pragma once

#include "polyadic/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyadic::arity {

struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Admissible word length of an n-ary operation iterated ell times.
long long word_length(long long n, long long ell);

/// Dimensions {ell*(m-1)+1 : 0 <= ell <= max_ell} admitted by m-ary addition.
std::vector<long long> admissible_dimensions(long long m, long long max_ell);

/// r * N^(n+1) structure constants of an r-place N-dimensional n-ary algebra.
BigInt structure_constant_count(long long r, long long N, long long n);

enum class TwistMode { paper, exact };

/// Number of places of the twist obtained from the m x n grid transposition.
/// paper mode: mn-2 off the diagonal, n(n-1) on it. exact mode subtracts the
/// true fixed-point count gcd(m-1,n-1)+1 of the transposition.
long long twist_places(long long m, long long n, TwistMode mode);

/// Arity of the convolution product; requires ell*(n-1) == ell_prime*(n_prime-1).
long long convolution_arity(long long n, long long ell, long long n_prime, long long ell_prime);

struct SolvedArity {
    bool admissible = false;
    long long value = 0;
    std::string note;
};

/// Target arity n2 of an s-place heteromorphism with ell_id intact places:
/// s*n2 = n1*(s-ell_id) + ell_id. Also reports the unital constraint
/// s*(n2-1) = n1-1 (which forces ell_id = s-1).
SolvedArity heteromorphism_arity(long long s, long long n1, long long ell_id);

/// Field arity n_k of the s-place group-function convolution:
/// s*n_k = (s-ell_id)*n_g + ell_id; the multiaction has r_f = n_k-1 places.
SolvedArity group_function_arity(long long s, long long n_g, long long ell_id);

/// Heine number [[l]]_q = (q^l - 1)/(q - 1), with [[l]]_1 = l.
BigInt heine_number(long long l, const BigInt& q);

/// Iteration count ell with n_prime = ell*(n-1)+1 (plain) or
/// n_prime^2 = ell*(n-1)+1 (medial variant).
SolvedArity quasipolyangular_shape(long long n, long long n_prime, bool medial);

/// ell-arity shape solver for (c1a)-type constraints:
/// ell*(k-1) = r*(a-1) with ell <= r <= ell*(k-1).
SolvedArity ell_shape(long long k, long long a, long long r);

}  // namespace polyadic::arity
