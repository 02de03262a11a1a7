#include "qadic/adic.hpp"

#include <array>

#include "qadic/errors.hpp"
#include "qadic/numtheory.hpp"

namespace qadic {

bool same_complexity(const ExactComplexity& a, const ExactComplexity& b) {
    return a.period == b.period && a.divisor == b.divisor;
}

Natural s4_value(const QuaternarySequence& q) {
    Natural s;
    for (std::size_t i = q.period(); i-- > 0;) {
        s <<= 2;
        s += Natural(q.digit(i));
    }
    return s;
}

ExactComplexity four_adic_complexity(const QuaternarySequence& q) {
    ExactComplexity out;
    out.period = q.period();
    Natural modulus = pow4_minus1(q.period());
    out.divisor = Natural::gcd(s4_value(q), modulus);
    auto [ratio, rem] = Natural::divmod(modulus, out.divisor);
    if (!rem.is_zero()) throw std::logic_error("four_adic_complexity: gcd does not divide");
    out.ratio = std::move(ratio);
    out.log4_value = out.ratio.log2() / 2.0;
    return out;
}

DSplit d_split(const QuaternarySequence& q) {
    if (q.period() % 2 != 0 || (q.period() / 2) % 2 != 1)
        throw ParameterError("d_split: period must be 2n with n odd");
    std::size_t n = q.period() / 2;
    Natural s = s4_value(q);
    return {Natural::gcd(s, pow4_plus1(n)), Natural::gcd(s, pow4_minus1(n))};
}

namespace {

// Split a signed sum  sum_l coeff_l * 4^(2l)  into (positive part, negative
// part), where coeff_l is +1 or -1 selected by pick(l).
struct SignedPowerSum {
    Natural pos;
    Natural neg;
};

template <typename Pick>
SignedPowerSum signed_power_sum(std::size_t n, Pick pick) {
    SignedPowerSum out;
    Natural power{1};
    for (std::size_t l = 0; l < n; ++l) {
        if (pick(l) >= 0) out.pos += power;
        else out.neg += power;
        if (l + 1 < n) power <<= 4; // 4^(2(l+1)) = 16 * 4^(2l)
    }
    return out;
}

} // namespace

std::pair<ResidueReport, ResidueReport> cor2_residues(const BinarySequence& a,
                                                      const BinarySequence& b) {
    if (a.period() != b.period())
        throw ParameterError("cor2_residues: period mismatch");
    const std::size_t n = a.period();
    const Natural w4 = s4_value(interleave(a, b));

    // sum s_l t_l 4^(2l) with s_l t_l = +1 iff a_l == b_l
    auto st = signed_power_sum(n, [&](std::size_t l) { return a.bit(l) == b.bit(l) ? 1 : -1; });
    // sum s_l 4^(2l)
    auto s = signed_power_sum(n, [&](std::size_t l) { return a.bit(l) == 0 ? 1 : -1; });

    ResidueReport plus;
    plus.modulus = pow4_plus1(n);
    plus.lhs = w4 % plus.modulus;
    plus.rhs = mod_diff(st.neg, st.pos, plus.modulus); // -(pos - neg)
    plus.equal = plus.lhs == plus.rhs;

    ResidueReport minus;
    minus.modulus = pow4_minus1(n);
    minus.lhs = w4 % minus.modulus;
    Natural two{2};
    minus.rhs = mod_diff(two * s.neg, two * s.pos, minus.modulus); // -2(pos - neg)
    minus.equal = minus.lhs == minus.rhs;

    return {std::move(plus), std::move(minus)};
}

ResidueReport lemma1_residues(const BinarySequence& a, const BinarySequence& b) {
    if (a.period() != b.period())
        throw ParameterError("lemma1_residues: period mismatch");
    const std::size_t n = a.period();
    ResidueReport out;
    out.modulus = pow4_minus1(2 * n);
    out.lhs = s4_value(interleave(a, b)) % out.modulus;

    // Exact bit sums sum a_l b_l 4^(2l), sum a_l 4^(2l), sum b_l 4^(2l).
    Natural t_ab, t_a, t_b;
    Natural power{1};
    for (std::size_t l = 0; l < n; ++l) {
        if (a.bit(l) && b.bit(l)) t_ab += power;
        if (a.bit(l)) t_a += power;
        if (b.bit(l)) t_b += power;
        power <<= 4;
    }

    const Natural p4n = Natural::pow2(2 * n); // 4^n
    // 1 - 4^n is negative; fold it as (4^(2n) - 1) + 1 - 4^n = 4^n (4^n - 1)
    // which is already reduced mod 4^(2n) - 1.
    Natural coeff_b = p4n * (p4n - Natural(1));
    Natural constant = out.modulus;
    constant.divmod_small(15); // (4^(2n) - 1) / 15, exact for n odd... and even
    Natural rhs = (p4n - Natural(1)) * Natural(2) * t_ab + (p4n + Natural(3)) * t_a +
                  coeff_b * t_b + Natural(4) * constant;
    out.rhs = rhs % out.modulus;
    out.equal = out.lhs == out.rhs;
    return out;
}

Natural signed_pair_sum_mod(const BinarySequence& a, const BinarySequence& b, const Natural& m) {
    if (a.period() != b.period())
        throw ParameterError("signed_pair_sum_mod: period mismatch");
    auto st = signed_power_sum(a.period(),
                               [&](std::size_t l) { return a.bit(l) == b.bit(l) ? 1 : -1; });
    return mod_diff(st.pos, st.neg, m);
}

GaussianInteger autocorr_quaternary(const QuaternarySequence& q, std::size_t tau) {
    const std::size_t n = q.period();
    if (tau >= n) throw ParameterError("autocorr_quaternary: tau must be < period");
    // omega^k for k = 0..3: (1,0), (0,1), (-1,0), (0,-1)
    static constexpr std::array<std::pair<int, int>, 4> omega = {
        {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
    GaussianInteger acc;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = i + tau;
        if (j >= n) j -= n;
        unsigned k = (q.digit(j) + 4u - q.digit(i)) % 4u;
        acc.re += omega[k].first;
        acc.im += omega[k].second;
    }
    return acc;
}

bool has_optimal_autocorr(const QuaternarySequence& q) {
    for (std::size_t tau = 1; tau < q.period(); ++tau) {
        GaussianInteger v = autocorr_quaternary(q, tau);
        if (!(v == GaussianInteger{0, 0} || v == GaussianInteger{-2, 0})) return false;
    }
    return true;
}

SecurityMargin security_margin(const QuaternarySequence& q) {
    SecurityMargin out;
    out.period = q.period();
    out.complexity = four_adic_complexity(q);
    const double N = static_cast<double>(q.period());
    out.threshold_quarter = (N - 16.0) / 4.0;
    out.threshold_sixth = (N - 16.0) / 6.0;

    // FC > (N-16)/k  <=>  ratio^k > 4^(N-16); for N <= 16 the right side is
    // <= 1 <= ratio^k with equality only possible when ratio = 1 and N = 16.
    auto exceeds = [&](unsigned k) {
        const Natural& r = out.complexity.ratio;
        if (q.period() < 16) return true;
        Natural rk{1};
        for (unsigned i = 0; i < k; ++i) rk = rk * r;
        return rk > Natural::pow2(2 * (q.period() - 16));
    };
    out.pass_quarter = exceeds(4);
    out.pass_sixth = exceeds(6);
    return out;
}

} // namespace qadic
