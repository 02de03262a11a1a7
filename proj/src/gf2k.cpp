#include "qadic/gf2k.hpp"

#include <bit>
#include <string>

#include "qadic/errors.hpp"
#include "qadic/numtheory.hpp"

namespace qadic {

namespace {

// Remainder of f divided by m over GF(2), m of degree dm >= 1.
std::uint64_t gf2_poly_mod(std::uint64_t f, std::uint64_t m, unsigned dm) {
    while (std::bit_width(f) > dm) {
        f ^= m << (std::bit_width(f) - 1 - dm);
    }
    return f;
}

} // namespace

bool gf2_poly_irreducible(unsigned k, std::uint32_t poly) {
    if (std::bit_width(poly) != k + 1) return false;
    if (k == 1) return true; // x and x + 1
    if ((poly & 1) == 0) return false; // divisible by x
    for (unsigned d = 1; 2 * d <= k; ++d) {
        // Divisors with zero constant term are multiples of x, already excluded.
        for (std::uint32_t low = 1; low < (1u << d); low += 2) {
            std::uint32_t m = (1u << d) | low;
            if (gf2_poly_mod(poly, m, d) == 0) return false;
        }
    }
    return true;
}

std::uint32_t GF2kField::mul(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t prod = 0;
    std::uint64_t acc = a;
    while (b) {
        if (b & 1) prod ^= acc;
        acc <<= 1;
        b >>= 1;
    }
    return static_cast<std::uint32_t>(gf2_poly_mod(prod, poly_, k_));
}

std::uint32_t GF2kField::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = 1;
    while (e) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

int GF2kField::trace(std::uint32_t a) const {
    std::uint32_t t = 0;
    std::uint32_t x = a;
    for (unsigned i = 0; i < k_; ++i) {
        t ^= x;
        x = mul(x, x);
    }
    // The trace lands in the prime field, so t is 0 or 1 here.
    return static_cast<int>(t & 1);
}

namespace {

bool x_is_primitive(const GF2kField& field) {
    std::uint64_t n = field.order();
    for (std::uint64_t q : prime_factors(n)) {
        if (field.pow(field.theta(), n / q) == 1) return false;
    }
    return true;
}

} // namespace

GF2kField GF2kField::smallest(unsigned k) {
    if (k < 2 || k > 24)
        throw ParameterError("GF(2^k): k = " + std::to_string(k) + " outside [2, 24]");
    for (std::uint32_t poly = (1u << k) | 1u; poly < (2u << k); poly += 2) {
        if (!gf2_poly_irreducible(k, poly)) continue;
        GF2kField field(k, poly);
        if (x_is_primitive(field)) return field;
    }
    throw ParameterError("GF(2^k): no primitive polynomial found (unreachable)");
}

GF2kField GF2kField::with_modulus(unsigned k, std::uint32_t poly) {
    if (k < 2 || k > 24)
        throw ParameterError("GF(2^k): k = " + std::to_string(k) + " outside [2, 24]");
    if (std::bit_width(poly) != k + 1)
        throw ParameterError("GF(2^k): modulus does not have degree " + std::to_string(k));
    if (!gf2_poly_irreducible(k, poly))
        throw ParameterError("GF(2^k): modulus is reducible");
    GF2kField field(k, poly);
    if (!x_is_primitive(field))
        throw ParameterError("GF(2^k): modulus is irreducible but not primitive");
    return field;
}

} // namespace qadic
