#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "skolem/bigint.hpp"
#include "skolem/numkernel.hpp"

namespace skolem {

// Integer linear recurrence u[n+d] = coeffs[d-1]*u[n+d-1] + ... + coeffs[0]*u[n],
// determined by the coefficient vector (constant coefficient first) and the
// first d terms.
struct Lrs {
    std::vector<Int> coeffs;   // a_0, ..., a_{d-1}
    std::vector<Int> initial;  // u_0, ..., u_{d-1}

    std::size_t order() const { return coeffs.size(); }
    // Throws std::invalid_argument unless coeffs and initial are nonempty and equal length.
    void validate() const;
};

// Result of peeling leading zero coefficients: the original sequence equals
// prefix[n] for n < shift and tail term (n - shift) for n >= shift.
// tail.coeffs[0] != 0 always holds.
struct NormalizedLrs {
    std::vector<Int> prefix;
    Lrs tail;
    std::size_t shift = 0;
};

// First d discrete differences at 0 of a subsequence transform, as residues mod p^nu.
struct DeltaVector {
    std::vector<Int> values;
};

NormalizedLrs normalize(const Lrs& raw);

// Description size: sum over all coefficients and initial values of
// (bit length of |y|) + 1, with the zero integer costing 1.
std::uint64_t size_of(const Lrs& u);

// d x d matrix with top row (a_{d-1}, ..., a_0) and ones on the subdiagonal,
// reduced mod modulus.
ResidueMatrix companion_matrix(const Lrs& u, const Int& modulus);

inline constexpr std::uint64_t kDefaultExactCap = 1'000'000;

// Exact term by direct iteration. Throws cap_exceeded beyond the cap
// (term bit size grows linearly in n; use term_mod for large indices).
Int term_exact(const Lrs& u, std::uint64_t n, std::uint64_t cap = kDefaultExactCap);

// The first `count` terms, exactly.
std::vector<Int> exact_terms(const Lrs& u, std::uint64_t count, std::uint64_t cap = kDefaultExactCap);

// Flags[i] == true iff u_i == 0, for i < count. Constant working memory.
std::vector<bool> zero_flags(const Lrs& u, std::uint64_t count);

// u_n mod modulus via companion-matrix powering; n arbitrary precision.
// Requires u normalized (coeffs[0] != 0) for the interpolation contracts,
// though the identity u_n = alpha A^n beta holds for any coefficients.
Int term_mod(const Lrs& u, const Int& n, const Int& modulus);

// Entry k (0 <= k < d) is sum_{n=0}^{k} (-1)^{k-n} C(k,n) u_{M(p^r n + z) + ell},
// reduced mod p^nu. The d subsequence terms are evaluated once and shared.
DeltaVector delta_vector(const Lrs& u, std::uint64_t M, std::uint64_t ell, const Int& z, int r,
                         std::uint64_t p, std::int64_t nu);

}  // namespace skolem
