#pragma once

#include <stdexcept>
#include <string>

namespace skolem {

// All d difference valuations saturated the working precision cap.
// Cannot happen with the derived precision bound; reachable only when the
// caller overrides nu with a value that is too small.
struct precision_exhausted : std::runtime_error {
    explicit precision_exhausted(const std::string& what) : std::runtime_error(what) {}
};

// Exact evaluation was asked for an index beyond the configured cap.
struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// The seeded generator failed to produce a prime within the retry budget.
struct prime_sampling_exhausted : std::runtime_error {
    explicit prime_sampling_exhausted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace skolem
