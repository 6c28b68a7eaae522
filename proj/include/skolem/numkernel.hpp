#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "skolem/bigint.hpp"

namespace skolem {

// Dense square matrix of canonical residues in [0, modulus).
struct ResidueMatrix {
    std::size_t dim = 0;
    Int modulus;
    std::vector<Int> entries;  // row-major, dim*dim, fully reduced

    static ResidueMatrix identity(std::size_t dim, const Int& modulus);
    // Reduces raw entries mod modulus. Throws std::invalid_argument on bad shape.
    static ResidueMatrix from_entries(std::size_t dim, const Int& modulus, std::vector<Int> raw);

    const Int& at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
    Int& at(std::size_t i, std::size_t j) { return entries[i * dim + j]; }

    bool operator==(const ResidueMatrix& other) const = default;
    bool is_identity() const;
};

// p-adic valuation measured only up to a cap; value == cap means "at least cap".
struct CappedValuation {
    std::int64_t value = 0;
    std::int64_t cap = 0;

    bool saturated() const { return value == cap; }
    bool operator==(const CappedValuation&) const = default;
};

// Deterministic for all 64-bit inputs (fixed Miller-Rabin witness set).
bool is_prime(std::uint64_t n);

// Least prime p with p >= d+2 and p not dividing a0. Throws on a0 == 0.
std::uint64_t smallest_admissible_prime(std::size_t order, const Int& a0);

ResidueMatrix mat_mul_mod(const ResidueMatrix& a, const ResidueMatrix& b);

// a^e mod modulus by binary exponentiation; e >= 0 arbitrary precision.
ResidueMatrix mat_pow_mod(const ResidueMatrix& a, const Int& e);

// min{v_p(x), cap} for a residue 0 <= x < p^cap; x == 0 saturates.
CappedValuation capped_valuation(const Int& x, std::uint64_t p, std::int64_t cap);

// Uniformly samples odd integers whose bit length is uniform in [lo_bits, hi_bits]
// and returns the first probable prime (error < 2^-80 per accepted sample).
// Requires hi_bits >= lo_bits >= 8; throws prime_sampling_exhausted after 4096 attempts.
Int sample_prime(int lo_bits, int hi_bits, std::mt19937_64& rng);

}  // namespace skolem
