#include "polyadic/arity.hpp"

#include <numeric>

namespace polyadic::arity {

long long word_length(long long n, long long ell) {
    if (n < 2) throw ShapeError("arity must be >= 2");
    if (ell < 0) throw ShapeError("iteration count must be >= 0");
    return ell * (n - 1) + 1;
}

std::vector<long long> admissible_dimensions(long long m, long long max_ell) {
    if (m < 2) throw ShapeError("addition arity must be >= 2");
    std::vector<long long> out;
    for (long long ell = 0; ell <= max_ell; ++ell) out.push_back(ell * (m - 1) + 1);
    return out;
}

BigInt structure_constant_count(long long r, long long N, long long n) {
    if (r < 1 || N < 1 || n < 2) throw ShapeError("need r >= 1, N >= 1, n >= 2");
    BigInt p = 1;
    for (long long k = 0; k < n + 1; ++k) p *= N;
    return BigInt(r) * p;
}

long long twist_places(long long m, long long n, TwistMode mode) {
    if (m < 2 || n < 2) throw ShapeError("grid sides must be >= 2");
    if (mode == TwistMode::paper) return m == n ? n * (n - 1) : m * n - 2;
    long long fixed = std::gcd(m - 1, n - 1) + 1;
    return m * n - fixed;
}

long long convolution_arity(long long n, long long ell, long long n_prime, long long ell_prime) {
    if (n < 2 || n_prime < 2 || ell < 1 || ell_prime < 1)
        throw ShapeError("need arities >= 2 and iteration counts >= 1");
    if (ell * (n - 1) != ell_prime * (n_prime - 1))
        throw ShapeError("inconsistent: ell*(n-1) = " + std::to_string(ell * (n - 1)) +
                         " but ell'*(n'-1) = " + std::to_string(ell_prime * (n_prime - 1)));
    return ell * (n - 1) + 1;
}

SolvedArity heteromorphism_arity(long long s, long long n1, long long ell_id) {
    if (s < 1 || n1 < 2 || ell_id < 0 || ell_id > s - 1)
        throw ShapeError("need s >= 1, n1 >= 2, 0 <= ell_id <= s-1");
    long long rhs = n1 * (s - ell_id) + ell_id;
    SolvedArity out;
    if (rhs % s != 0) {
        out.note = "s*n2 = " + std::to_string(rhs) + " has no integer solution";
        return out;
    }
    out.admissible = true;
    out.value = rhs / s;
    if (ell_id == s - 1 && s * (out.value - 1) == n1 - 1)
        out.note = "unital constraint s*(n2-1) = n1-1 holds";
    return out;
}

SolvedArity group_function_arity(long long s, long long n_g, long long ell_id) {
    if (s < 1 || n_g < 2 || ell_id < 0 || ell_id > s)
        throw ShapeError("need s >= 1, n_g >= 2, 0 <= ell_id <= s");
    long long rhs = (s - ell_id) * n_g + ell_id;
    SolvedArity out;
    if (rhs % s != 0) {
        out.note = "s*n_k = " + std::to_string(rhs) + " has no integer solution";
        return out;
    }
    out.admissible = true;
    out.value = rhs / s;
    out.note = "r_f = " + std::to_string(out.value - 1);
    return out;
}

BigInt heine_number(long long l, const BigInt& q) {
    if (l < 0) throw ShapeError("Heine number needs l >= 0");
    if (q == 1) return l;
    BigInt num = 1;
    for (long long k = 0; k < l; ++k) num *= q;
    return (num - 1) / (q - 1);
}

SolvedArity quasipolyangular_shape(long long n, long long n_prime, bool medial) {
    if (n < 2 || n_prime < 2) throw ShapeError("arities must be >= 2");
    long long target = medial ? n_prime * n_prime : n_prime;
    SolvedArity out;
    if ((target - 1) % (n - 1) != 0) {
        out.note = std::string(medial ? "n'^2" : "n'") + "-1 not divisible by n-1";
        return out;
    }
    out.admissible = true;
    out.value = (target - 1) / (n - 1);
    return out;
}

SolvedArity ell_shape(long long k, long long a, long long r) {
    if (k < 2 || a < 2 || r < 1) throw ShapeError("need arities >= 2 and r >= 1");
    SolvedArity out;
    long long rhs = r * (a - 1);
    if (rhs % (k - 1) != 0) {
        out.note = "ell*(k-1) = r*(a-1) has no integer solution";
        return out;
    }
    long long ell = rhs / (k - 1);
    if (!(ell <= r && r <= ell * (k - 1))) {
        out.note = "ell = " + std::to_string(ell) + " violates ell <= r <= ell*(k-1)";
        return out;
    }
    out.admissible = true;
    out.value = ell;
    return out;
}

}  // namespace polyadic::arity
