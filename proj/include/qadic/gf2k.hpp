#pragma once

#include <cstdint>

namespace qadic {

// GF(2^k) with elements as k-bit polynomial masks (bit i = coefficient of x^i)
// reduced by a primitive degree-k modulus. The residue of x is the fixed
// primitive element theta used throughout.
class GF2kField {
public:
    // Lexicographically smallest primitive polynomial of degree k, 2 <= k <= 24.
    static GF2kField smallest(unsigned k);
    // Caller-chosen modulus (mask includes the x^k term, e.g. 0x13 for
    // x^4 + x + 1); rejected unless primitive of degree k.
    static GF2kField with_modulus(unsigned k, std::uint32_t poly);

    unsigned degree() const { return k_; }
    std::uint32_t modulus() const { return poly_; }
    std::uint64_t order() const { return (std::uint64_t{1} << k_) - 1; } // |GF(2^k)^*|
    std::uint32_t theta() const { return 2; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    // Absolute trace GF(2^k) -> GF(2).
    int trace(std::uint32_t a) const;

private:
    GF2kField(unsigned k, std::uint32_t poly) : k_(k), poly_(poly) {}

    unsigned k_;
    std::uint32_t poly_;
};

// Irreducibility over GF(2) of the degree-k polynomial given as a mask.
bool gf2_poly_irreducible(unsigned k, std::uint32_t poly);

} // namespace qadic
