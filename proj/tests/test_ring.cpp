#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "incalg/error.hpp"
#include "incalg/ring.hpp"

using incalg::errc;
using incalg::error;
using incalg::ring;
using incalg::scalar;

namespace {

errc code_of(const error& e) { return e.code(); }

template <typename Fn>
errc thrown_code(Fn&& fn) {
    try {
        fn();
    } catch (const error& e) {
        return code_of(e);
    }
    FAIL("expected an error");
    return errc::invalid_argument;
}

} // namespace

TEST_CASE("ring parsing and canonical names") {
    CHECK(ring::parse("Q").name() == "Q");
    CHECK(ring::parse("Z").name() == "Z");
    CHECK(ring::parse("Z/7").name() == "Z/7");
    CHECK(ring::parse("Z/2").name() == "Z/2");
    CHECK(ring::parse("Z/360").name() == "Z/360");

    CHECK(thrown_code([] { ring::parse(""); }) == errc::parse);
    CHECK(thrown_code([] { ring::parse("R"); }) == errc::parse);
    CHECK(thrown_code([] { ring::parse("Z/"); }) == errc::parse);
    CHECK(thrown_code([] { ring::parse("Z/x"); }) == errc::parse);
    // String-level defects are parse errors even when the syntax is fine;
    // the direct modular() constructor reports invalid_argument instead.
    CHECK(thrown_code([] { ring::parse("Z/1"); }) == errc::parse);
    CHECK(thrown_code([] { ring::parse("Z/0"); }) == errc::parse);
    CHECK(thrown_code([] { ring::parse("Q/3"); }) == errc::parse);
}

TEST_CASE("ring classification") {
    CHECK(ring::rationals().is_field());
    CHECK(ring::rationals().is_two_torsion_free());
    CHECK(ring::rationals().is_solver_field());

    CHECK_FALSE(ring::integers().is_field());
    CHECK(ring::integers().is_two_torsion_free());
    CHECK_FALSE(ring::integers().is_solver_field());
    CHECK_FALSE(ring::integers().is_solver_field(true));

    CHECK(ring::modular(3).is_field());
    CHECK(ring::modular(3).is_two_torsion_free());
    CHECK(ring::modular(3).is_solver_field());

    CHECK(ring::modular(2).is_field());
    CHECK_FALSE(ring::modular(2).is_two_torsion_free());
    CHECK_FALSE(ring::modular(2).is_solver_field());
    CHECK(ring::modular(2).is_solver_field(true)); // exploratory only

    CHECK_FALSE(ring::modular(6).is_field());
    CHECK_FALSE(ring::modular(6).is_solver_field());
    CHECK_FALSE(ring::modular(6).is_solver_field(true));
    CHECK_FALSE(ring::modular(6).is_two_torsion_free());
    CHECK(ring::modular(9).is_two_torsion_free()); // odd, though not a field
    CHECK_FALSE(ring::modular(9).is_field());

    // Large prime: the primality test must be exact for 64-bit inputs.
    CHECK(ring::modular(2147483647ULL).is_field()); // 2^31 - 1, a Mersenne prime
    CHECK_FALSE(ring::modular(2147483647ULL * 2 + 1).is_field()); // 4294967295 = 3*5*17*257*65537
    CHECK(incalg::is_prime_u64(9223372036854775783ULL)); // largest prime below 2^63
    CHECK_FALSE(incalg::is_prime_u64(9223372036854775807ULL)); // 2^63 - 1 = 7^2 * 73 * ...
}

TEST_CASE("rational scalars") {
    ring q = ring::rationals();
    scalar a = q.parse_scalar("3/4");
    scalar b = q.parse_scalar("1/4");
    CHECK((a + b).str() == "1");
    CHECK((a - b).str() == "1/2");
    CHECK((a * b).str() == "3/16");
    CHECK((-a).str() == "-3/4");
    CHECK(q.parse_scalar("4/6").str() == "2/3"); // canonicalized
    CHECK(q.parse_scalar("-4/6").str() == "-2/3");
    CHECK(q.parse_scalar("8/4").str() == "2");   // integral values print bare
    CHECK(q.parse_scalar("0/5").str() == "0");
    CHECK(q.parse_scalar("7").str() == "7");
    CHECK(q.from_int(-12).str() == "-12");
    CHECK(q.zero().is_zero());
    CHECK(q.one().is_one());

    CHECK(a.inverse().has_value());
    CHECK(a.inverse()->str() == "4/3");
    CHECK_FALSE(q.zero().inverse().has_value());

    CHECK(thrown_code([&] { q.parse_scalar("1/0"); }) == errc::parse);
    CHECK(thrown_code([&] { q.parse_scalar("a/b"); }) == errc::parse);
    CHECK(thrown_code([&] { q.parse_scalar(""); }) == errc::parse);
    CHECK(thrown_code([&] { q.parse_scalar("1.5"); }) == errc::parse);
}

TEST_CASE("integer scalars") {
    ring z = ring::integers();
    CHECK(z.parse_scalar("-42").str() == "-42");
    CHECK((z.from_int(30) * z.from_int(-4)).str() == "-120");
    // Only units invert in Z.
    CHECK(z.from_int(1).inverse().has_value());
    CHECK(z.from_int(-1).inverse().has_value());
    CHECK(z.from_int(-1).inverse()->str() == "-1");
    CHECK_FALSE(z.from_int(2).inverse().has_value());
    CHECK(thrown_code([&] { z.parse_scalar("1/2"); }) == errc::parse);
    // Exactness beyond 64 bits.
    scalar big = z.parse_scalar("123456789012345678901234567890");
    CHECK((big * z.from_int(10)).str() == "1234567890123456789012345678900");
}

TEST_CASE("modular scalars") {
    ring f7 = ring::modular(7);
    CHECK(f7.parse_scalar("10").str() == "3");
    CHECK(f7.parse_scalar("-1").str() == "6"); // canonical residue in [0, n)
    CHECK(f7.parse_scalar("-15").str() == "6");
    CHECK((f7.from_int(3) + f7.from_int(5)).str() == "1");
    CHECK((f7.from_int(3) * f7.from_int(5)).str() == "1");
    CHECK((-f7.from_int(3)).str() == "4");
    CHECK(f7.from_int(3).inverse()->str() == "5");
    CHECK_FALSE(f7.zero().inverse().has_value());

    ring z6 = ring::modular(6);
    CHECK_FALSE(z6.from_int(2).inverse().has_value()); // zero divisor
    CHECK(z6.from_int(5).inverse()->str() == "5");

    // Modular arithmetic near the 63-bit limit must not overflow.
    ring big = ring::modular(9223372036854775783ULL);
    scalar x = big.parse_scalar("9223372036854775782"); // -1
    CHECK((x * x).str() == "1");
    CHECK((x + big.one()).is_zero());
}

TEST_CASE("scalars refuse mixed-ring arithmetic") {
    scalar a = ring::rationals().one();
    scalar b = ring::integers().one();
    CHECK(thrown_code([&] { (void)(a + b); }) == errc::ring_mismatch);
    scalar c = ring::modular(5).one();
    scalar d = ring::modular(7).one();
    CHECK(thrown_code([&] { (void)(c * d); }) == errc::ring_mismatch);
}

TEST_CASE("scalar string forms round-trip") {
    ring q = ring::rationals();
    for (const char* text : {"0", "1", "-1", "22/7", "-22/7", "1000000000000/7"}) {
        CHECK(q.parse_scalar(text).str() == text);
        CHECK(q.parse_scalar(q.parse_scalar(text).str()) == q.parse_scalar(text));
    }
    ring f11 = ring::modular(11);
    for (int v = 0; v < 11; ++v) {
        scalar s = f11.from_int(v);
        CHECK(f11.parse_scalar(s.str()) == s);
    }
}
