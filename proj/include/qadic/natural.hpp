#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qadic {

// Arbitrary-precision nonnegative integer.
//
// Limbs are little-endian base 2^32 with no trailing zeros; zero is the empty
// limb vector. Division is Knuth's Algorithm D, gcd is plain Euclid. That is
// plenty for the sizes this project touches (a few tens of kilobits).
class Natural {
public:
    Natural() = default;
    Natural(std::uint64_t value);

    static Natural from_decimal(std::string_view text);
    static Natural pow2(std::size_t exponent);

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }

    // Number of bits in the binary representation; 0 for zero.
    std::size_t bit_length() const;
    bool bit(std::size_t index) const;
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const; // throws ParameterError if > 2^64 - 1

    std::string to_decimal() const;

    // Base-2 logarithm from the leading 64 bits; exact enough for display.
    // Requires a nonzero value.
    double log2() const;

    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b);
    friend bool operator==(const Natural& a, const Natural& b) = default;

    Natural& operator+=(const Natural& other);
    Natural& operator-=(const Natural& other); // throws ParameterError on underflow
    friend Natural operator+(Natural a, const Natural& b) { return a += b; }
    friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
    friend Natural operator*(const Natural& a, const Natural& b);

    Natural& operator<<=(std::size_t bits);
    Natural& operator>>=(std::size_t bits);
    friend Natural operator<<(Natural a, std::size_t bits) { return a <<= bits; }
    friend Natural operator>>(Natural a, std::size_t bits) { return a >>= bits; }

    // Quotient and remainder; throws ParameterError on division by zero.
    static std::pair<Natural, Natural> divmod(const Natural& num, const Natural& den);
    friend Natural operator/(const Natural& a, const Natural& b) { return divmod(a, b).first; }
    friend Natural operator%(const Natural& a, const Natural& b) { return divmod(a, b).second; }

    // In-place division by a single limb; returns the remainder.
    std::uint32_t divmod_small(std::uint32_t den);

    static Natural gcd(Natural a, Natural b);
    static Natural mulmod(const Natural& a, const Natural& b, const Natural& m);
    static Natural powmod(const Natural& base, const Natural& exponent, const Natural& m);

private:
    std::vector<std::uint32_t> limbs_;

    void trim();
};

// (pos - neg) reduced into [0, m); the inputs need not be reduced.
Natural mod_diff(const Natural& pos, const Natural& neg, const Natural& m);

} // namespace qadic
