#include "incalg/ring.hpp"

#include <cctype>
#include <charconv>

namespace incalg {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
    std::uint64_t acc = 1 % n;
    base %= n;
    while (exp > 0) {
        if (exp & 1) acc = mulmod(acc, base, n);
        base = mulmod(base, base, n);
        exp >>= 1;
    }
    return acc;
}

// Extended Euclid, returns x with a*x = gcd(a, n) mod n.
std::uint64_t invmod(std::uint64_t a, std::uint64_t n, std::uint64_t& gcd_out) {
    std::int64_t t = 0, new_t = 1;
    std::uint64_t r = n, new_r = a % n;
    while (new_r != 0) {
        std::uint64_t q = r / new_r;
        std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * new_t;
        t = new_t;
        new_t = tmp_t;
        std::uint64_t tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    gcd_out = r;
    if (t < 0) t += static_cast<std::int64_t>(n);
    return static_cast<std::uint64_t>(t) % n;
}

bool parse_u64(std::string_view s, std::uint64_t& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This witness set decides primality for every n < 3.3e24, covering uint64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

ring ring::modular(std::uint64_t n) {
    if (n < 2)
        throw error(errc::invalid_argument, "modulus must be at least 2");
    if (n >= (1ull << 63))
        throw error(errc::invalid_argument, "modulus must be below 2^63");
    return ring(kind::modular, n);
}

ring ring::parse(std::string_view text) {
    if (text == "Q") return rationals();
    if (text == "Z") return integers();
    if (text.size() > 2 && text.substr(0, 2) == "Z/") {
        std::uint64_t n = 0;
        if (!parse_u64(text.substr(2), n))
            throw error(errc::parse,
                        "bad ring string '" + std::string(text) +
                            "': expected Z/<n> with a decimal n");
        if (n < 2)
            throw error(errc::parse, "bad ring string '" + std::string(text) +
                                         "': modulus must be at least 2");
        return modular(n);
    }
    throw error(errc::parse, "bad ring string '" + std::string(text) +
                                 "': expected Q, Z, or Z/<n>");
}

bool ring::is_two_torsion_free() const {
    switch (kind_) {
    case kind::rationals:
    case kind::integers:
        return true;
    case kind::modular:
        return modulus_ % 2 == 1;
    }
    return false;
}

bool ring::is_field() const {
    switch (kind_) {
    case kind::rationals:
        return true;
    case kind::integers:
        return false;
    case kind::modular:
        return is_prime_u64(modulus_);
    }
    return false;
}

bool ring::is_solver_field(bool exploratory) const {
    if (!is_field()) return false;
    if (kind_ == kind::modular && modulus_ == 2) return exploratory;
    return true;
}

std::string ring::name() const {
    switch (kind_) {
    case kind::rationals:
        return "Q";
    case kind::integers:
        return "Z";
    case kind::modular:
        return "Z/" + std::to_string(modulus_);
    }
    return {};
}

scalar ring::zero() const { return from_int(0); }
scalar ring::one() const { return from_int(1); }

scalar ring::from_int(long long v) const {
    switch (kind_) {
    case kind::rationals:
        return scalar(*this, mpq_class(static_cast<long>(v)));
    case kind::integers:
        return scalar(*this, mpz_class(static_cast<long>(v)));
    case kind::modular: {
        std::int64_t m = static_cast<std::int64_t>(modulus_);
        std::int64_t r = v % m;
        if (r < 0) r += m;
        return scalar(*this, static_cast<std::uint64_t>(r));
    }
    }
    throw error(errc::invalid_argument, "bad ring kind");
}

scalar ring::parse_scalar(std::string_view text) const {
    std::string s(text);
    switch (kind_) {
    case kind::rationals: {
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            if (!is_integer_literal(s))
                throw error(errc::parse, "bad rational '" + s + "'");
            return scalar(*this, mpq_class(mpz_class(s)));
        }
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!is_integer_literal(num) || !is_integer_literal(den))
            throw error(errc::parse, "bad rational '" + s + "'");
        mpz_class d(den);
        if (d == 0)
            throw error(errc::parse, "bad rational '" + s + "': zero denominator");
        mpq_class q(mpz_class(num), d);
        q.canonicalize();
        return scalar(*this, q);
    }
    case kind::integers:
        if (!is_integer_literal(s))
            throw error(errc::parse, "bad integer '" + s + "'");
        return scalar(*this, mpz_class(s));
    case kind::modular: {
        if (!is_integer_literal(s))
            throw error(errc::parse, "bad residue '" + s + "'");
        mpz_class z(s), m(static_cast<unsigned long>(modulus_));
        mpz_class r = z % m;
        if (r < 0) r += m;
        return scalar(*this, static_cast<std::uint64_t>(r.get_ui()));
    }
    }
    throw error(errc::invalid_argument, "bad ring kind");
}

void scalar::check_same_ring(const scalar& rhs) const {
    if (!(ring_ == rhs.ring_))
        throw error(errc::ring_mismatch, "scalars over " + ring_.name() +
                                             " and " + rhs.ring_.name());
}

bool scalar::is_zero() const {
    switch (ring_.k()) {
    case ring::kind::rationals:
        return std::get<mpq_class>(rep_) == 0;
    case ring::kind::integers:
        return std::get<mpz_class>(rep_) == 0;
    case ring::kind::modular:
        return std::get<std::uint64_t>(rep_) == 0;
    }
    return false;
}

bool scalar::is_one() const {
    switch (ring_.k()) {
    case ring::kind::rationals:
        return std::get<mpq_class>(rep_) == 1;
    case ring::kind::integers:
        return std::get<mpz_class>(rep_) == 1;
    case ring::kind::modular:
        return std::get<std::uint64_t>(rep_) == 1 % ring_.modulus();
    }
    return false;
}

scalar scalar::operator+(const scalar& rhs) const {
    check_same_ring(rhs);
    switch (ring_.k()) {
    case ring::kind::rationals:
        return scalar(ring_, mpq_class(std::get<mpq_class>(rep_) +
                                       std::get<mpq_class>(rhs.rep_)));
    case ring::kind::integers:
        return scalar(ring_, mpz_class(std::get<mpz_class>(rep_) +
                                       std::get<mpz_class>(rhs.rep_)));
    case ring::kind::modular: {
        std::uint64_t n = ring_.modulus();
        std::uint64_t a = std::get<std::uint64_t>(rep_);
        std::uint64_t b = std::get<std::uint64_t>(rhs.rep_);
        std::uint64_t s = a + b; // n < 2^63, no overflow
        if (s >= n) s -= n;
        return scalar(ring_, s);
    }
    }
    throw error(errc::invalid_argument, "bad ring kind");
}

scalar scalar::operator-() const {
    switch (ring_.k()) {
    case ring::kind::rationals:
        return scalar(ring_, mpq_class(-std::get<mpq_class>(rep_)));
    case ring::kind::integers:
        return scalar(ring_, mpz_class(-std::get<mpz_class>(rep_)));
    case ring::kind::modular: {
        std::uint64_t a = std::get<std::uint64_t>(rep_);
        return scalar(ring_, a == 0 ? 0 : ring_.modulus() - a);
    }
    }
    throw error(errc::invalid_argument, "bad ring kind");
}

scalar scalar::operator-(const scalar& rhs) const { return *this + (-rhs); }

scalar scalar::operator*(const scalar& rhs) const {
    check_same_ring(rhs);
    switch (ring_.k()) {
    case ring::kind::rationals:
        return scalar(ring_, mpq_class(std::get<mpq_class>(rep_) *
                                       std::get<mpq_class>(rhs.rep_)));
    case ring::kind::integers:
        return scalar(ring_, mpz_class(std::get<mpz_class>(rep_) *
                                       std::get<mpz_class>(rhs.rep_)));
    case ring::kind::modular:
        return scalar(ring_, mulmod(std::get<std::uint64_t>(rep_),
                                    std::get<std::uint64_t>(rhs.rep_),
                                    ring_.modulus()));
    }
    throw error(errc::invalid_argument, "bad ring kind");
}

bool scalar::operator==(const scalar& rhs) const {
    if (!(ring_ == rhs.ring_)) return false;
    return rep_ == rhs.rep_;
}

std::optional<scalar> scalar::inverse() const {
    switch (ring_.k()) {
    case ring::kind::rationals: {
        const auto& q = std::get<mpq_class>(rep_);
        if (q == 0) return std::nullopt;
        return scalar(ring_, mpq_class(1 / q));
    }
    case ring::kind::integers: {
        const auto& z = std::get<mpz_class>(rep_);
        if (z == 1 || z == -1) return *this;
        return std::nullopt;
    }
    case ring::kind::modular: {
        std::uint64_t a = std::get<std::uint64_t>(rep_);
        if (a == 0) return std::nullopt;
        std::uint64_t g = 0;
        std::uint64_t inv = invmod(a, ring_.modulus(), g);
        if (g != 1) return std::nullopt;
        return scalar(ring_, inv);
    }
    }
    return std::nullopt;
}

std::string scalar::str() const {
    switch (ring_.k()) {
    case ring::kind::rationals:
        return std::get<mpq_class>(rep_).get_str();
    case ring::kind::integers:
        return std::get<mpz_class>(rep_).get_str();
    case ring::kind::modular:
        return std::to_string(std::get<std::uint64_t>(rep_));
    }
    return {};
}

} // namespace incalg
