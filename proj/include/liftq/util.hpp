#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace liftq {

/// Encoded element of some finite lattice (index or packed code).
using Elt = std::uint64_t;

/// A concrete counterexample to a universally quantified law.
struct Violation {
    std::string law;
    std::string witness;
};

struct CheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeMismatch : CheckError {
    using CheckError::CheckError;
};

struct CarrierTooLarge : CheckError {
    using CheckError::CheckError;
};

/// Thrown when a structure fails its construction-time laws.
struct ValidationError : CheckError {
    Violation violation;
    explicit ValidationError(Violation v)
        : CheckError(v.law + ": " + v.witness), violation(std::move(v)) {}
};

/// Thrown when a checked statement that is a theorem fails; indicates an
/// implementation bug, never bad input.
struct InternalLawViolation : CheckError {
    using CheckError::CheckError;
};

/// Runs fn(i) for i in [0, n). With threads > 1 the range is split into
/// contiguous chunks; fn must be safe to call concurrently.
inline void parallel_for(std::size_t n, unsigned threads,
                         const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    unsigned k = std::min<std::size_t>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(k);
    for (unsigned t = 0; t < k; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += k) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

/// FNV-1a, used for deterministic input digests in reports.
inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace liftq
