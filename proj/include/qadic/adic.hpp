#pragma once

#include <cstdint>
#include <utility>

#include "qadic/interleave.hpp"
#include "qadic/natural.hpp"
#include "qadic/sequence.hpp"

namespace qadic {

// Exact 4-adic complexity log4((4^N - 1) / d) of a period-N sequence.
// Equality of complexities is decided on (period, divisor) only; the float
// is for display.
struct ExactComplexity {
    std::size_t period = 0;
    Natural divisor;  // d = gcd(S(4), 4^N - 1)
    Natural ratio;    // (4^N - 1) / d
    double log4_value = 0.0;
};

// Same complexity iff same period and same exact divisor.
bool same_complexity(const ExactComplexity& a, const ExactComplexity& b);

struct GaussianInteger {
    std::int64_t re = 0;
    std::int64_t im = 0;
    friend bool operator==(const GaussianInteger&, const GaussianInteger&) = default;
};

// A congruence check: both sides reduced into [0, modulus).
struct ResidueReport {
    Natural modulus;
    Natural lhs;
    Natural rhs;
    bool equal = false;
};

// S(4) = sum of w_i * 4^i over one period, as an exact integer.
Natural s4_value(const QuaternarySequence& q);

ExactComplexity four_adic_complexity(const QuaternarySequence& q);

// d_plus = gcd(S(4), 4^n + 1), d_minus = gcd(S(4), 4^n - 1) for period 2n,
// n odd. Their product is the full divisor d.
struct DSplit {
    Natural d_plus;
    Natural d_minus;
};
DSplit d_split(const QuaternarySequence& q);

// W(4) of w(a, b) against the closed residue forms, with s = (-1)^a, t = (-1)^b:
//   mod 4^n + 1:  -sum s_l t_l 4^(2l)
//   mod 4^n - 1:  -2 sum s_l 4^(2l)
std::pair<ResidueReport, ResidueReport> cor2_residues(const BinarySequence& a,
                                                      const BinarySequence& b);

// W(4) of w(a, b) against the full expansion mod 4^(2n) - 1:
//   2(4^n - 1) sum a_l b_l 4^(2l) + (4^n + 3) sum a_l 4^(2l)
//   + (1 - 4^n) sum b_l 4^(2l) + 4 (4^(2n) - 1)/15
ResidueReport lemma1_residues(const BinarySequence& a, const BinarySequence& b);

// sum over one period of s_l t_l 4^(2l) with s = (-1)^a, t = (-1)^b,
// reduced mod m. This is the quantity whose gcd with 4^n + 1 gives d_plus.
Natural signed_pair_sum_mod(const BinarySequence& a, const BinarySequence& b, const Natural& m);

// Exact Gaussian-integer autocorrelation at shift tau, 0 <= tau < N.
GaussianInteger autocorr_quaternary(const QuaternarySequence& q, std::size_t tau);

// All out-of-phase values in {0, -2} (the optimum for period 2 mod 4).
bool has_optimal_autocorr(const QuaternarySequence& q);

// FC against the two published resistance thresholds (N-16)/4 and (N-16)/6.
// Pass/fail is decided by exact integer comparison of ratio^4 (resp. ratio^6)
// with 4^(N-16), never through the float.
struct SecurityMargin {
    std::size_t period = 0;
    ExactComplexity complexity;
    double threshold_quarter = 0.0;
    double threshold_sixth = 0.0;
    bool pass_quarter = false;
    bool pass_sixth = false;
};
SecurityMargin security_margin(const QuaternarySequence& q);

} // namespace qadic
