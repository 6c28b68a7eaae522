#include "skolem/lrs.hpp"

#include <stdexcept>
#include <utility>

#include "skolem/errors.hpp"

namespace skolem {

void Lrs::validate() const {
    if (coeffs.empty()) throw std::invalid_argument("Lrs: order must be >= 1");
    if (coeffs.size() != initial.size())
        throw std::invalid_argument("Lrs: coeffs and initial must have equal length");
}

NormalizedLrs normalize(const Lrs& raw) {
    raw.validate();
    std::size_t d = raw.order();
    std::size_t k = 0;
    while (k < d && raw.coeffs[k] == 0) ++k;

    NormalizedLrs out;
    if (k == d) {
        // All coefficients zero: u_n = 0 for n >= d. Identically-zero tail.
        out.prefix.assign(raw.initial.begin(), raw.initial.end());
        out.tail.coeffs = {Int(1)};
        out.tail.initial = {Int(0)};
        out.shift = d;
        return out;
    }
    out.prefix.assign(raw.initial.begin(), raw.initial.begin() + k);
    out.tail.coeffs.assign(raw.coeffs.begin() + k, raw.coeffs.end());
    out.tail.initial.assign(raw.initial.begin() + k, raw.initial.end());
    out.shift = k;
    return out;
}

std::uint64_t size_of(const Lrs& u) {
    u.validate();
    std::uint64_t total = 0;
    for (const Int& a : u.coeffs) total += bit_size(a) + 1;
    for (const Int& v : u.initial) total += bit_size(v) + 1;
    return total;
}

ResidueMatrix companion_matrix(const Lrs& u, const Int& modulus) {
    u.validate();
    std::size_t d = u.order();
    std::vector<Int> raw(d * d, Int(0));
    for (std::size_t j = 0; j < d; ++j) raw[j] = u.coeffs[d - 1 - j];
    for (std::size_t i = 1; i < d; ++i) raw[i * d + (i - 1)] = 1;
    return ResidueMatrix::from_entries(d, modulus, std::move(raw));
}

namespace {

// One recurrence step on a window (u_n, ..., u_{n+d-1}) -> appendable next term.
Int next_term(const Lrs& u, const std::vector<Int>& window, std::size_t start) {
    Int acc(0);
    std::size_t d = u.order();
    for (std::size_t i = 0; i < d; ++i) {
        mpz_addmul(acc.get_mpz_t(), u.coeffs[i].get_mpz_t(), window[(start + i) % d].get_mpz_t());
    }
    return acc;
}

}  // namespace

Int term_exact(const Lrs& u, std::uint64_t n, std::uint64_t cap) {
    u.validate();
    if (n > cap) throw cap_exceeded("term_exact: index beyond exact-evaluation cap");
    std::size_t d = u.order();
    if (n < d) return u.initial[n];
    std::vector<Int> window(u.initial);
    std::size_t head = 0;  // window[head..] cyclically holds u_m, ..., u_{m+d-1}
    for (std::uint64_t m = d; m <= n; ++m) {
        Int next = next_term(u, window, head);
        window[head] = std::move(next);
        head = (head + 1) % d;
    }
    // After the loop the newest term u_n sits just before head.
    return window[(head + d - 1) % d];
}

std::vector<Int> exact_terms(const Lrs& u, std::uint64_t count, std::uint64_t cap) {
    u.validate();
    if (count > cap + 1) throw cap_exceeded("exact_terms: count beyond exact-evaluation cap");
    std::vector<Int> out;
    out.reserve(count);
    std::size_t d = u.order();
    for (std::uint64_t i = 0; i < count && i < d; ++i) out.push_back(u.initial[i]);
    std::vector<Int> window(u.initial);
    std::size_t head = 0;
    for (std::uint64_t m = d; m < count; ++m) {
        Int next = next_term(u, window, head);
        out.push_back(next);
        window[head] = std::move(next);
        head = (head + 1) % d;
    }
    return out;
}

std::vector<bool> zero_flags(const Lrs& u, std::uint64_t count) {
    u.validate();
    std::vector<bool> flags;
    flags.reserve(count);
    std::size_t d = u.order();
    for (std::uint64_t i = 0; i < count && i < d; ++i) flags.push_back(u.initial[i] == 0);
    std::vector<Int> window(u.initial);
    std::size_t head = 0;
    for (std::uint64_t m = d; m < count; ++m) {
        Int next = next_term(u, window, head);
        flags.push_back(next == 0);
        window[head] = std::move(next);
        head = (head + 1) % d;
    }
    return flags;
}

Int term_mod(const Lrs& u, const Int& n, const Int& modulus) {
    u.validate();
    if (n < 0) throw std::invalid_argument("term_mod: negative index");
    if (modulus < 2) throw std::invalid_argument("term_mod: modulus must be >= 2");
    std::size_t d = u.order();
    ResidueMatrix power = mat_pow_mod(companion_matrix(u, modulus), n);
    // u_n = (bottom row of A^n) . (u_{d-1}, ..., u_0)
    Int acc(0);
    for (std::size_t j = 0; j < d; ++j) {
        mpz_addmul(acc.get_mpz_t(), power.at(d - 1, j).get_mpz_t(), u.initial[d - 1 - j].get_mpz_t());
    }
    return mod_reduce(acc, modulus);
}

DeltaVector delta_vector(const Lrs& u, std::uint64_t M, std::uint64_t ell, const Int& z, int r,
                         std::uint64_t p, std::int64_t nu) {
    if (nu < 1) throw std::invalid_argument("delta_vector: nu must be >= 1");
    if (ell >= M) throw std::invalid_argument("delta_vector: ell must be < M");
    std::size_t d = u.order();
    Int modulus = pow_ui(p, static_cast<std::uint64_t>(nu));
    Int stride = pow_ui(p, static_cast<std::uint64_t>(r));

    std::vector<Int> terms(d);
    for (std::size_t n = 0; n < d; ++n) {
        Int index = Int(M) * (stride * static_cast<unsigned long>(n) + z) + ell;
        terms[n] = term_mod(u, index, modulus);
    }

    DeltaVector dv;
    dv.values.resize(d);
    Int binom, acc;
    for (std::size_t k = 0; k < d; ++k) {
        acc = 0;
        for (std::size_t n = 0; n <= k; ++n) {
            mpz_bin_uiui(binom.get_mpz_t(), k, n);
            if ((k - n) % 2 == 1) binom = -binom;
            mpz_addmul(acc.get_mpz_t(), binom.get_mpz_t(), terms[n].get_mpz_t());
        }
        dv.values[k] = mod_reduce(acc, modulus);
    }
    return dv;
}

}  // namespace skolem
