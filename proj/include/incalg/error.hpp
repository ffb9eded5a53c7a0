#pragma once

#include <stdexcept>
#include <string>

namespace incalg {

// Coarse error classes; the C API maps these onto status codes.
enum class errc {
    parse,            // malformed JSON / scalar / ring string
    invalid_argument, // bad label, index, or value for an otherwise fine call
    ring_mismatch,    // operands live over different rings
    not_comparable,   // (x, y) with x <= y required
    unsupported,      // operation undefined here (non-field solve, disconnected
                      // closed form, mobius on a non-poset, 2-torsion ring, ...)
    precondition,     // mathematical precondition violated (not a Lie derivation)
    out_of_range,
};

class error : public std::runtime_error {
public:
    error(errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace incalg
