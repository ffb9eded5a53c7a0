#pragma once

#include <cstdint>
#include <random>

#include "incalg/ring.hpp"

namespace incalg {

/// Seeded deterministic RNG.  Thin wrapper over std::mt19937_64 with
/// hand-rolled range helpers: the standard distributions are not required to
/// produce identical streams across platforms, and reports must be
/// byte-stable given a seed.
class rng {
public:
    explicit rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform-ish value in [0, n); n > 0.  Modulo bias is irrelevant here
    /// (fuzzing, not statistics) and determinism is what matters.
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

    int index(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

    /// A small scalar: integer in [-9, 9] (reduced for modular rings).
    scalar small_scalar(const ring& r) {
        return r.from_int(static_cast<long long>(below(19)) - 9);
    }

    /// A small nonzero scalar.
    scalar small_nonzero_scalar(const ring& r) {
        for (;;) {
            scalar s = small_scalar(r);
            if (!s.is_zero()) return s;
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace incalg
