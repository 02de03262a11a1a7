#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "qadic/errors.hpp"
#include "qadic/families.hpp"
#include "qadic/numtheory.hpp"
#include "qadic/sequence.hpp"

using qadic::BinarySequence;
using qadic::LegendreVariant;

namespace {

std::vector<std::uint8_t> v(std::initializer_list<int> bits) {
    return std::vector<std::uint8_t>(bits.begin(), bits.end());
}

std::size_t weight(const BinarySequence& s) {
    return std::accumulate(s.bits().begin(), s.bits().end(), std::size_t{0});
}

} // namespace

TEST_CASE("BinarySequence validation") {
    CHECK_NOTHROW(BinarySequence(v({0, 0, 1})));
    CHECK_THROWS_AS(BinarySequence(v({0, 1})), qadic::ParameterError);      // even
    CHECK_THROWS_AS(BinarySequence(v({1})), qadic::ParameterError);         // too short
    CHECK_THROWS_AS(BinarySequence(v({0, 2, 1})), qadic::ParameterError);   // bad digit
    CHECK_THROWS_AS(BinarySequence({}), qadic::ParameterError);
    BinarySequence s(v({0, 0, 1}), "x");
    CHECK(s.period() == 3);
    CHECK(s.bit(2) == 1);
    CHECK(s.bit(5) == 1); // periodic extension
    CHECK(s.tag() == "x");
}

TEST_CASE("transform examples") {
    BinarySequence s(v({0, 0, 1}));
    CHECK(s.complement().bits() == v({1, 1, 0}));
    CHECK(s.shift(1).bits() == v({0, 1, 0}));
    CHECK(s.sample(2).bits() == v({0, 1, 0}));
    CHECK(s.shift(0) == s);
    CHECK(s.shift(3) == s);
    CHECK(s.shift(-1) == s.shift(2));
    CHECK(s.sample(1) == s);
    CHECK(s.sample(-1) == s.sample(2));
    CHECK_THROWS_AS(s.sample(0), qadic::ParameterError);
    BinarySequence nine(v({0, 0, 1, 0, 1, 1, 0, 1, 0}));
    CHECK_THROWS_AS(nine.sample(3), qadic::ParameterError); // gcd(3, 9) = 3
    CHECK_NOTHROW(nine.sample(2));
}

TEST_CASE("transform tags") {
    auto s = qadic::legendre_sequence(7, LegendreVariant::ell);
    CHECK(s.tag() == "legendre:p=7,variant=ell");
    CHECK(s.shift(2).tag() == "legendre:p=7,variant=ell+L^2");
    CHECK(s.shift(-1).tag() == "legendre:p=7,variant=ell+L^6");
    CHECK(s.complement().tag() == "legendre:p=7,variant=ell+C");
    CHECK(s.sample(3).shift(1).tag() == "legendre:p=7,variant=ell+M^3+L^1");
}

TEST_CASE("m-sequences") {
    auto m2 = qadic::m_sequence(2);
    CHECK(m2.bits() == v({0, 1, 1}));
    CHECK(m2.tag() == "m:k=2,poly=0x7");

    auto m3 = qadic::m_sequence(3);
    CHECK(m3.bits() == v({1, 0, 0, 1, 0, 1, 1}));
    CHECK(weight(m3) == 4);
    CHECK(m3.tag() == "m:k=3,poly=0xb");

    auto m4 = qadic::m_sequence(4);
    CHECK(m4.period() == 15);
    CHECK(weight(m4) == 8);
    CHECK(m4.tag() == "m:k=4,poly=0x13");

    // m_0 = Tr(1) = k mod 2
    for (unsigned k = 2; k <= 8; ++k)
        CHECK(qadic::m_sequence(k).bit(0) == k % 2);

    // weight of an m-sequence is 2^(k-1)
    for (unsigned k = 2; k <= 8; ++k)
        CHECK(weight(qadic::m_sequence(k)) == (1u << (k - 1)));

    // alternate primitive polynomial gives a different but valid m-sequence
    auto m4b = qadic::m_sequence(qadic::GF2kField::with_modulus(4, 0x19));
    CHECK(m4b.tag() == "m:k=4,poly=0x19");
    CHECK(m4b.period() == 15);
    CHECK_FALSE(m4b == m4);
    CHECK(qadic::is_ideal(m4b));

    CHECK_THROWS_AS(qadic::m_sequence(1), qadic::ParameterError);
}

TEST_CASE("Legendre sequences") {
    auto l3 = qadic::legendre_sequence(3, LegendreVariant::ell);
    CHECK(l3.bits() == v({0, 0, 1}));
    auto l3p = qadic::legendre_sequence(3, LegendreVariant::ell_prime);
    CHECK(l3p.bits() == v({1, 0, 1}));
    auto l7 = qadic::legendre_sequence(7, LegendreVariant::ell);
    CHECK(l7.bits() == v({0, 0, 0, 1, 0, 1, 1}));

    // ell and ell' differ exactly in position 0
    for (std::uint64_t p : {3ull, 7ull, 11ull, 19ull}) {
        auto a = qadic::legendre_sequence(p, LegendreVariant::ell);
        auto b = qadic::legendre_sequence(p, LegendreVariant::ell_prime);
        CHECK(a.bit(0) == 0);
        CHECK(b.bit(0) == 1);
        for (std::uint64_t i = 1; i < p; ++i) CHECK(a.bit(i) == b.bit(i));
        CHECK(weight(a) == (p - 1) / 2); // the non-residues
    }

    CHECK_THROWS_AS(qadic::legendre_sequence(5, LegendreVariant::ell),
                    qadic::ParameterError); // 5 = 1 (mod 4)
    CHECK_THROWS_AS(qadic::legendre_sequence(9, LegendreVariant::ell),
                    qadic::ParameterError); // composite
}

TEST_CASE("twin-prime sequences") {
    auto t3 = qadic::twin_prime_sequence(3);
    CHECK(t3.bits() == v({0, 0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 1}));
    CHECK(weight(t3) == 8);
    CHECK(t3.bit(5) == 0);  // multiples of q = 5 carry 0
    CHECK(t3.bit(10) == 0);
    CHECK(t3.bit(3) == 1);  // multiples of p = 3 carry 1
    CHECK(t3.bit(12) == 1);
    CHECK(t3.tag() == "twin:p=3");

    auto t5 = qadic::twin_prime_sequence(5);
    CHECK(t5.period() == 35);
    CHECK(weight(t5) == 18); // (n + 1) / 2

    // period-15 twin sequence coincides with the period-15 m-sequence
    CHECK(t3 == qadic::m_sequence(4));

    CHECK_THROWS_AS(qadic::twin_prime_sequence(7), qadic::ParameterError);  // 9 composite
    CHECK_THROWS_AS(qadic::twin_prime_sequence(13), qadic::ParameterError); // 15 composite
    CHECK_THROWS_AS(qadic::twin_prime_sequence(4), qadic::ParameterError);
}

TEST_CASE("Hall sequences") {
    auto h31 = qadic::hall_sequence(31);
    CHECK(h31.tag() == "hall:p=31,g=3");
    CHECK(weight(h31) == 15);
    CHECK(h31.bit(1) == 1); // 1 lies in D_0
    std::vector<std::uint8_t> head(h31.bits().begin(), h31.bits().begin() + 12);
    CHECK(head == v({0, 1, 1, 1, 1, 0, 1, 0, 1, 0, 0, 0}));

    auto h43 = qadic::hall_sequence(43); // 43 = 4 * 4 + 27
    CHECK(weight(h43) == 21);

    CHECK(qadic::hall_sequence(31, 3) == h31);

    CHECK_THROWS_AS(qadic::hall_sequence(37), qadic::ParameterError);  // prime, wrong shape
    CHECK_THROWS_AS(qadic::hall_sequence(59), qadic::ParameterError);  // 59 - 27 = 32
    CHECK_THROWS_AS(qadic::hall_sequence(55), qadic::ParameterError);  // composite, 4*7+27
    CHECK_THROWS_AS(qadic::hall_sequence(31, 5), qadic::ParameterError); // 5 not primitive
}

TEST_CASE("every family member has ideal autocorrelation") {
    for (unsigned k = 2; k <= 8; ++k) CHECK(qadic::is_ideal(qadic::m_sequence(k)));
    for (std::uint64_t p : {3ull, 7ull, 11ull, 19ull, 23ull, 31ull}) {
        CHECK(qadic::is_ideal(qadic::legendre_sequence(p, LegendreVariant::ell)));
        CHECK(qadic::is_ideal(qadic::legendre_sequence(p, LegendreVariant::ell_prime)));
    }
    for (std::uint64_t p : {3ull, 5ull, 11ull, 17ull, 29ull})
        CHECK(qadic::is_ideal(qadic::twin_prime_sequence(p)));
    for (std::uint64_t p : {31ull, 43ull, 223ull})
        CHECK(qadic::is_ideal(qadic::hall_sequence(p)));
}

TEST_CASE("ideal autocorrelation is preserved by the transform group") {
    auto l7 = qadic::legendre_sequence(7, LegendreVariant::ell);
    CHECK(qadic::is_ideal(l7.complement()));
    for (std::int64_t e : {1, 2, 3}) CHECK(qadic::is_ideal(l7.shift(e)));
    for (std::int64_t r : {2, 3, -1}) CHECK(qadic::is_ideal(l7.sample(r)));
    CHECK(qadic::is_ideal(l7.sample(3).shift(2).complement()));
}

TEST_CASE("sampling a Legendre sequence lands on ell or its reversal") {
    for (std::uint64_t p : {7ull, 11ull, 19ull}) {
        auto l = qadic::legendre_sequence(p, LegendreVariant::ell);
        auto rev = l.sample(-1);
        for (std::uint64_t r = 1; r < p; ++r) {
            auto sampled = l.sample(static_cast<std::int64_t>(r));
            if (qadic::legendre_symbol(static_cast<std::int64_t>(r), p) == 1)
                CHECK(sampled == l);
            else
                CHECK(sampled == rev);
        }
    }
}

TEST_CASE("sampling a twin-prime sequence splits by the product character") {
    for (std::uint64_t p : {3ull, 5ull}) {
        std::uint64_t q = p + 2, n = p * q;
        auto t = qadic::twin_prime_sequence(p);
        auto rev = t.sample(-1);
        for (std::uint64_t l = 1; l < n; ++l) {
            if (std::gcd(l, n) != 1) continue;
            int chi = qadic::legendre_symbol(static_cast<std::int64_t>(l % p), p) *
                      qadic::legendre_symbol(static_cast<std::int64_t>(l % q), q);
            auto sampled = t.sample(static_cast<std::int64_t>(l));
            if (chi == 1)
                CHECK(sampled == t);
            else
                CHECK(sampled == rev);
        }
    }
}

TEST_CASE("sampling Hall by any element of D_3 equals sampling by -1") {
    auto h = qadic::hall_sequence(31);
    auto rev = h.sample(-1);
    for (std::int64_t r : {15, 23, 27, 29, 30}) // D_3 for g = 3; -1 = 30 is a member
        CHECK(h.sample(r) == rev);
}

TEST_CASE("autocorrelation basics") {
    auto l7 = qadic::legendre_sequence(7, LegendreVariant::ell);
    CHECK(qadic::autocorr_binary(l7, 0) == 7);
    for (std::size_t tau = 1; tau < 7; ++tau) CHECK(qadic::autocorr_binary(l7, tau) == -1);
    CHECK_THROWS_AS(qadic::autocorr_binary(l7, 7), qadic::ParameterError);

    BinarySequence ones(v({1, 1, 1}));
    CHECK(qadic::autocorr_binary(ones, 1) == 3);
    CHECK_FALSE(qadic::is_ideal(ones));

    BinarySequence five(v({0, 0, 0, 0, 1}));
    CHECK_FALSE(qadic::is_ideal(five)); // period 5 = 1 (mod 4)
}

TEST_CASE("autocorrelation of any sequence is n mod 4") {
    std::mt19937_64 rng(20240814);
    for (std::size_t n : {5, 9, 11, 15, 21}) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::uint8_t> bits(n);
            for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
            BinarySequence s(std::move(bits));
            for (std::size_t tau = 0; tau < n; ++tau) {
                long a = qadic::autocorr_binary(s, tau);
                long r = ((a % 4) + 4) % 4;
                CHECK(r == static_cast<long>(n % 4));
            }
        }
    }
}

TEST_CASE("transform group laws") {
    std::mt19937_64 rng(0x7a5);
    for (std::size_t n : {7, 9, 15}) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<std::uint8_t> bits(n);
            for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
            BinarySequence s(std::move(bits));
            CHECK(s.complement().complement() == s);
            CHECK(s.shift(2).shift(3) == s.shift(5));
            CHECK(s.shift(1).complement() == s.complement().shift(1));
            for (std::int64_t r : {2, 4}) {
                if (std::gcd(r, static_cast<std::int64_t>(n)) != 1) continue;
                CHECK(s.sample(r).complement() == s.complement().sample(r));
                // sample then shift by e = shift by r*e then sample
                for (std::int64_t e : {1, 3})
                    CHECK(s.sample(r).shift(e) == s.shift(r * e).sample(r));
                CHECK(s.sample(r).sample(r) == s.sample(r * r));
            }
        }
    }
}

TEST_CASE("parse_sequence_spec") {
    CHECK(qadic::parse_sequence_spec("m:k=3") == qadic::m_sequence(3));
    CHECK(qadic::parse_sequence_spec("m:k=4,poly=0x19") ==
          qadic::m_sequence(qadic::GF2kField::with_modulus(4, 0x19)));
    CHECK(qadic::parse_sequence_spec("legendre:p=7,variant=ell") ==
          qadic::legendre_sequence(7, LegendreVariant::ell));
    CHECK(qadic::parse_sequence_spec("legendre:p=7") ==
          qadic::legendre_sequence(7, LegendreVariant::ell)); // default variant
    CHECK(qadic::parse_sequence_spec("legendre:p=7,variant=ell_prime") ==
          qadic::legendre_sequence(7, LegendreVariant::ell_prime));
    CHECK(qadic::parse_sequence_spec("twin:p=3") == qadic::twin_prime_sequence(3));
    CHECK(qadic::parse_sequence_spec("hall:p=31") == qadic::hall_sequence(31));
    CHECK(qadic::parse_sequence_spec("hall:p=31,g=3") == qadic::hall_sequence(31, 3));

    auto l7 = qadic::legendre_sequence(7, LegendreVariant::ell);
    CHECK(qadic::parse_sequence_spec("legendre:p=7,variant=ell+C") == l7.complement());
    CHECK(qadic::parse_sequence_spec("legendre:p=7,variant=ell+L^2") == l7.shift(2));
    CHECK(qadic::parse_sequence_spec("legendre:p=7,variant=ell+M^3") == l7.sample(3));
    CHECK(qadic::parse_sequence_spec("legendre:p=7,variant=ell+L^1+C+M^2") ==
          l7.shift(1).complement().sample(2));

    // tags of transformed sequences parse back to the same sequence
    auto twisted = qadic::hall_sequence(31).sample(3).shift(4).complement();
    CHECK(qadic::parse_sequence_spec(twisted.tag()) == twisted);
    auto m4s = qadic::m_sequence(4).shift(7);
    CHECK(qadic::parse_sequence_spec(m4s.tag()) == m4s);

    CHECK_THROWS_AS(qadic::parse_sequence_spec("m"), qadic::ParameterError);
    CHECK_THROWS_AS(qadic::parse_sequence_spec("bogus:p=3"), qadic::ParameterError);
    CHECK_THROWS_AS(qadic::parse_sequence_spec("m:"), qadic::ParameterError);
    CHECK_THROWS_AS(qadic::parse_sequence_spec("m:k=x"), qadic::ParameterError);
    CHECK_THROWS_AS(qadic::parse_sequence_spec("m:q=3"), qadic::ParameterError);
    CHECK_THROWS_AS(qadic::parse_sequence_spec("legendre:p=7,variant=weird"),
                    qadic::ParameterError);
    CHECK_THROWS_AS(qadic::parse_sequence_spec("m:k=3+X"), qadic::ParameterError);
    CHECK_THROWS_AS(qadic::parse_sequence_spec("m:k=3+L^x"), qadic::ParameterError);
    CHECK_THROWS_AS(qadic::parse_sequence_spec("m:k=4+M^3"), qadic::ParameterError); // gcd(3, 15)
}
