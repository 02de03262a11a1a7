#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "qadic/gf2k.hpp"
#include "qadic/sequence.hpp"

namespace qadic {

// m-sequence of period 2^k - 1: m_i = Tr(theta^i) over GF(2^k). With no
// explicit field the smallest primitive polynomial is used.
BinarySequence m_sequence(unsigned k);
BinarySequence m_sequence(const GF2kField& field);

enum class LegendreVariant { ell, ell_prime };

// Legendre sequence mod p, p = 3 (mod 4): bit i = (1 - (i/p)) / 2 for i != 0,
// i.e. 1 exactly on the non-residues; ell has bit 0 = 0, ell_prime bit 0 = 1.
BinarySequence legendre_sequence(std::uint64_t p, LegendreVariant variant);

// Twin-prime sequence of period p(p+2) for twin primes p, p + 2.
BinarySequence twin_prime_sequence(std::uint64_t p);

// Hall sextic-residue sequence for p = 4x^2 + 27: support is the union of
// sextic classes D_0, D_1, D_3 for a primitive root g (smallest by default).
BinarySequence hall_sequence(std::uint64_t p);
BinarySequence hall_sequence(std::uint64_t p, std::uint64_t g);

// Textual form "family:key=value,...", optionally followed by transform
// suffixes "+C", "+L^e", "+M^r". Families: m (k, optional poly as 0x-hex),
// legendre (p, variant=ell|ell_prime), twin (p), hall (p, optional g).
// Examples: "m:k=4", "m:k=4,poly=0x19", "legendre:p=7,variant=ell+L^2+C".
BinarySequence parse_sequence_spec(std::string_view spec);

} // namespace qadic
