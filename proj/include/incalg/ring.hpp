#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "incalg/error.hpp"

namespace incalg {

class scalar;

/// A commutative coefficient ring: the rationals Q, the integers Z, or the
/// residue ring Z/n (n >= 2, canonical residues in [0, n)).
class ring {
public:
    enum class kind { rationals, integers, modular };

    static ring rationals() { return ring(kind::rationals, 0); }
    static ring integers() { return ring(kind::integers, 0); }
    static ring modular(std::uint64_t n); // throws for n < 2 or n >= 2^63

    /// Parse "Q", "Z", or "Z/<n>".
    static ring parse(std::string_view text);

    kind k() const { return kind_; }
    std::uint64_t modulus() const { return modulus_; } // 0 unless modular

    bool operator==(const ring&) const = default;

    /// 2x = 0 implies x = 0.  Q and Z always; Z/n exactly when n is odd.
    bool is_two_torsion_free() const;

    /// Q, or Z/p with p prime.
    bool is_field() const;

    /// Field the solvers accept: Q or Z/p with p an odd prime; `exploratory`
    /// additionally admits p = 2.  Composite moduli and Z are never accepted.
    bool is_solver_field(bool exploratory = false) const;

    std::string name() const; // "Q", "Z", "Z/7"

    scalar zero() const;
    scalar one() const;
    scalar from_int(long long v) const;

    /// Exact scalar from its string form: "a/b" or "a" over Q, a decimal
    /// integer over Z, any decimal integer (reduced) over Z/n.
    scalar parse_scalar(std::string_view text) const;

private:
    ring(kind k, std::uint64_t n) : kind_(k), modulus_(n) {}

    kind kind_;
    std::uint64_t modulus_;
};

/// An exact element of a `ring`.  Value type; all arithmetic is exact and the
/// string form round-trips.
class scalar {
public:
    scalar() : ring_(ring::integers()), rep_(mpz_class(0)) {}

    const ring& in() const { return ring_; }

    bool is_zero() const;
    bool is_one() const;

    scalar operator+(const scalar& rhs) const;
    scalar operator-(const scalar& rhs) const;
    scalar operator-() const;
    scalar operator*(const scalar& rhs) const;
    scalar& operator+=(const scalar& rhs) { return *this = *this + rhs; }
    scalar& operator-=(const scalar& rhs) { return *this = *this - rhs; }
    scalar& operator*=(const scalar& rhs) { return *this = *this * rhs; }

    bool operator==(const scalar& rhs) const;
    bool operator!=(const scalar& rhs) const { return !(*this == rhs); }

    /// Multiplicative inverse if the element is a unit, nullopt otherwise.
    std::optional<scalar> inverse() const;

    /// Canonical string: "a/b" (b > 1) or "a" over Q; decimal over Z;
    /// the residue in [0, n) over Z/n.
    std::string str() const;

private:
    friend class ring;
    using rep = std::variant<mpq_class, mpz_class, std::uint64_t>;

    scalar(ring r, rep v) : ring_(r), rep_(std::move(v)) {}

    void check_same_ring(const scalar& rhs) const;

    ring ring_;
    rep rep_;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

} // namespace incalg
