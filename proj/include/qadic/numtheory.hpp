#pragma once

#include <cstdint>
#include <vector>

#include "qadic/natural.hpp"

namespace qadic {

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(std::uint64_t n);
// Convenience overload; the operand must fit in 64 bits.
bool is_prime(const Natural& n);

// Legendre symbol (a/p) in {-1, 0, 1} via Euler's criterion.
// p must be an odd prime.
int legendre_symbol(std::int64_t a, std::uint64_t p);

// Smallest primitive root modulo the odd prime p.
std::uint64_t primitive_root(std::uint64_t p);

// Order of g in (Z/p)^*; g must be nonzero mod the prime p.
std::uint64_t multiplicative_order(std::uint64_t g, std::uint64_t p);

// Distinct prime factors, ascending (trial division; fine for this scale).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

Natural pow4_minus1(std::size_t n); // 4^n - 1
Natural pow4_plus1(std::size_t n);  // 4^n + 1

} // namespace qadic
