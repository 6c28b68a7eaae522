#pragma once

#include <gmpxx.h>

#include <bit>
#include <cstdint>
#include <string>

namespace skolem {

using Int = mpz_class;

// Number of bits of |x|, with bit_size(0) == 0.
inline std::uint64_t bit_size(const Int& x) {
    if (x == 0) return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

// Canonical residue of x modulo m (in [0, m) for m > 0).
inline Int mod_reduce(const Int& x, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int pow_ui(std::uint64_t base, std::uint64_t exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

// ceil(log2 x) for x >= 1.
inline std::uint64_t ceil_log2(const Int& x) {
    if (x <= 1) return 0;
    return bit_size(x - 1);
}

inline std::uint64_t ceil_log2_u64(std::uint64_t x) {
    if (x <= 1) return 0;
    return std::bit_width(x - 1);
}

inline std::string to_decimal(const Int& x) { return x.get_str(); }

}  // namespace skolem
