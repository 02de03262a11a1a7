#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qadic/natural.hpp"

namespace qadic {

// Cyclotomic classes C_l = { g^(m*t + l) : t } of order m modulo the prime p,
// for a primitive root g. class_of[v] is the class index of v (and -1 for 0).
struct CyclotomicClasses {
    std::uint64_t p = 0;
    unsigned order = 0;
    std::uint64_t generator = 0;
    std::vector<int> class_of;
    std::vector<std::vector<std::uint32_t>> members; // each sorted ascending
};

CyclotomicClasses cyclotomic_classes(std::uint64_t p, unsigned order, std::uint64_t g);

// Order-3 cyclotomic numbers (i, j) = |(C_i + 1) meet C_j| together with the
// unique c, d with 4p = c^2 + 27 d^2, c = 1 (mod 3), and the sign of d fixed
// by matching the census:
//   9A = p - 8 + c, 18B = 2p - 4 - c - 9d, 18C = 2p - 4 - c + 9d, 9D = p + 1 + c
// where (0,0)=A, (1,2)=D, {(0,1),(1,0),(2,2)}=B, {(0,2),(2,0),(1,1)}=C.
struct CyclotomicTable3 {
    std::uint64_t p = 0;
    std::uint64_t generator = 0;
    std::int64_t c = 0;
    std::int64_t d = 0;
    std::array<std::array<std::uint64_t, 3>, 3> counts{};
};

CyclotomicTable3 cyclotomic_numbers_order3(std::uint64_t p, std::uint64_t g);

// The same 3x3 table rebuilt from (c, d) alone, for cross-checking the census.
std::array<std::array<std::uint64_t, 3>, 3> table3_from_cd(std::uint64_t p, std::int64_t c, std::int64_t d);

// Gauss period eta_l = sum over i in C_l of 4^(2i), reduced mod `modulus`.
Natural gauss_period(const CyclotomicClasses& classes, unsigned class_index, const Natural& modulus);

} // namespace qadic
