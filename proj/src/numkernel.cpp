#include "skolem/numkernel.hpp"

#include <stdexcept>

#include "skolem/errors.hpp"

namespace skolem {

namespace {

std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod_u64(result, base, m);
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    // n odd, > 37: deterministic Miller-Rabin, witness set valid for all 64-bit n.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t smallest_admissible_prime(std::size_t order, const Int& a0) {
    if (a0 == 0) throw std::invalid_argument("smallest_admissible_prime: constant coefficient is zero");
    std::uint64_t c = order + 2;
    if (c < 2) c = 2;
    for (;; ++c) {
        if (!is_prime(c)) continue;
        if (!mpz_divisible_ui_p(a0.get_mpz_t(), c)) return c;
    }
}

ResidueMatrix ResidueMatrix::identity(std::size_t dim, const Int& modulus) {
    ResidueMatrix m;
    m.dim = dim;
    m.modulus = modulus;
    m.entries.assign(dim * dim, Int(0));
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = mod_reduce(Int(1), modulus);
    return m;
}

ResidueMatrix ResidueMatrix::from_entries(std::size_t dim, const Int& modulus, std::vector<Int> raw) {
    if (dim == 0) throw std::invalid_argument("ResidueMatrix: dim must be >= 1");
    if (modulus < 2) throw std::invalid_argument("ResidueMatrix: modulus must be >= 2");
    if (raw.size() != dim * dim) throw std::invalid_argument("ResidueMatrix: entry count != dim*dim");
    ResidueMatrix m;
    m.dim = dim;
    m.modulus = modulus;
    m.entries = std::move(raw);
    for (Int& e : m.entries) e = mod_reduce(e, modulus);
    return m;
}

bool ResidueMatrix::is_identity() const {
    return *this == identity(dim, modulus);
}

ResidueMatrix mat_mul_mod(const ResidueMatrix& a, const ResidueMatrix& b) {
    if (a.dim != b.dim) throw std::invalid_argument("mat_mul_mod: dimension mismatch");
    if (a.modulus != b.modulus) throw std::invalid_argument("mat_mul_mod: modulus mismatch");
    ResidueMatrix c;
    c.dim = a.dim;
    c.modulus = a.modulus;
    c.entries.assign(a.dim * a.dim, Int(0));
    Int acc;
    for (std::size_t i = 0; i < a.dim; ++i) {
        for (std::size_t j = 0; j < a.dim; ++j) {
            acc = 0;
            for (std::size_t k = 0; k < a.dim; ++k) {
                mpz_addmul(acc.get_mpz_t(), a.at(i, k).get_mpz_t(), b.at(k, j).get_mpz_t());
            }
            c.at(i, j) = mod_reduce(acc, a.modulus);
        }
    }
    return c;
}

ResidueMatrix mat_pow_mod(const ResidueMatrix& a, const Int& e) {
    if (e < 0) throw std::invalid_argument("mat_pow_mod: negative exponent");
    ResidueMatrix result = ResidueMatrix::identity(a.dim, a.modulus);
    if (e == 0) return result;
    ResidueMatrix base = a;
    std::size_t nbits = bit_size(e);
    for (std::size_t i = 0; i < nbits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mat_mul_mod(result, base);
        if (i + 1 < nbits) base = mat_mul_mod(base, base);
    }
    return result;
}

CappedValuation capped_valuation(const Int& x, std::uint64_t p, std::int64_t cap) {
    if (x == 0) return {cap, cap};
    Int rest;
    Int prime(static_cast<unsigned long>(p));
    mp_bitcnt_t removed = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t());
    std::int64_t v = static_cast<std::int64_t>(removed);
    if (v > cap) v = cap;
    return {v, cap};
}

Int sample_prime(int lo_bits, int hi_bits, std::mt19937_64& rng) {
    if (lo_bits < 8 || hi_bits < lo_bits) throw std::invalid_argument("sample_prime: bad bit range");
    constexpr int kBudget = 4096;
    for (int attempt = 0; attempt < kBudget; ++attempt) {
        std::uint64_t span = static_cast<std::uint64_t>(hi_bits - lo_bits) + 1;
        int bits = lo_bits + static_cast<int>(rng() % span);
        int words = (bits + 63) / 64;
        std::vector<std::uint64_t> buf(words);
        for (auto& w : buf) w = rng();
        Int n;
        mpz_import(n.get_mpz_t(), buf.size(), -1, sizeof(std::uint64_t), 0, 0, buf.data());
        // Trim to exactly `bits` bits, force top bit and oddness.
        Int mask = (Int(1) << bits) - 1;
        n &= mask;
        mpz_setbit(n.get_mpz_t(), bits - 1);
        mpz_setbit(n.get_mpz_t(), 0);
        if (mpz_probab_prime_p(n.get_mpz_t(), 50) > 0) return n;
    }
    throw prime_sampling_exhausted("sample_prime: no prime found within retry budget");
}

}  // namespace skolem
