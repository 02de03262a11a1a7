#include "qadic/cyclotomy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qadic/errors.hpp"
#include "qadic/numtheory.hpp"

namespace qadic {

CyclotomicClasses cyclotomic_classes(std::uint64_t p, unsigned order, std::uint64_t g) {
    if (!is_prime(p)) throw ParameterError("cyclotomic_classes: p must be prime");
    if (order == 0 || (p - 1) % order != 0)
        throw ParameterError("cyclotomic_classes: order must divide p - 1");
    if (multiplicative_order(g, p) != p - 1)
        throw ParameterError("cyclotomic_classes: g = " + std::to_string(g) +
                             " is not a primitive root mod " + std::to_string(p));

    CyclotomicClasses result;
    result.p = p;
    result.order = order;
    result.generator = g % p;
    result.class_of.assign(p, -1);
    result.members.assign(order, {});

    std::uint64_t value = 1;
    for (std::uint64_t e = 0; e < p - 1; ++e) {
        unsigned cls = static_cast<unsigned>(e % order);
        result.class_of[value] = static_cast<int>(cls);
        result.members[cls].push_back(static_cast<std::uint32_t>(value));
        value = mulmod_u64(value, result.generator, p);
    }
    for (auto& m : result.members) std::sort(m.begin(), m.end());
    return result;
}

std::array<std::array<std::uint64_t, 3>, 3> table3_from_cd(std::uint64_t p, std::int64_t c,
                                                           std::int64_t d) {
    std::int64_t sp = static_cast<std::int64_t>(p);
    std::int64_t a9 = sp - 8 + c;
    std::int64_t b18 = 2 * sp - 4 - c - 9 * d;
    std::int64_t c18 = 2 * sp - 4 - c + 9 * d;
    std::int64_t d9 = sp + 1 + c;
    if (a9 < 0 || b18 < 0 || c18 < 0 || d9 < 0 || a9 % 9 || b18 % 18 || c18 % 18 || d9 % 9)
        throw ParameterError("table3_from_cd: (c, d) inconsistent with p");
    std::uint64_t A = static_cast<std::uint64_t>(a9 / 9);
    std::uint64_t B = static_cast<std::uint64_t>(b18 / 18);
    std::uint64_t C = static_cast<std::uint64_t>(c18 / 18);
    std::uint64_t D = static_cast<std::uint64_t>(d9 / 9);
    return {{{A, B, C}, {B, C, D}, {C, D, B}}};
}

CyclotomicTable3 cyclotomic_numbers_order3(std::uint64_t p, std::uint64_t g) {
    if (!is_prime(p) || p % 3 != 1)
        throw ParameterError("cyclotomic_numbers_order3: need a prime p = 1 (mod 3)");
    auto classes = cyclotomic_classes(p, 3, g);

    CyclotomicTable3 result;
    result.p = p;
    result.generator = g % p;
    for (std::uint64_t v = 1; v < p; ++v) {
        std::uint64_t w = (v + 1) % p;
        if (w == 0) continue;
        int i = classes.class_of[v];
        int j = classes.class_of[w];
        ++result.counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    // 4p = c^2 + 27 d^2 with c = 1 (mod 3); |d| is unique, the sign of d is
    // whichever reproduces the census.
    bool found = false;
    for (std::int64_t dd = 1; 27 * dd * dd <= static_cast<std::int64_t>(4 * p); ++dd) {
        std::int64_t rest = static_cast<std::int64_t>(4 * p) - 27 * dd * dd;
        std::int64_t cc = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rest)));
        while (cc * cc < rest) ++cc;
        while (cc * cc > rest) --cc;
        if (cc * cc != rest || cc == 0) continue;
        for (std::int64_t sc : {cc, -cc}) {
            if (((sc % 3) + 3) % 3 != 1) continue;
            for (std::int64_t sd : {dd, -dd}) {
                if (table3_from_cd(p, sc, sd) == result.counts) {
                    result.c = sc;
                    result.d = sd;
                    found = true;
                }
            }
        }
    }
    if (!found)
        throw std::logic_error("cyclotomic_numbers_order3: no (c, d) matches the census");
    return result;
}

Natural gauss_period(const CyclotomicClasses& classes, unsigned class_index,
                     const Natural& modulus) {
    if (class_index >= classes.order)
        throw ParameterError("gauss_period: class index out of range");
    if (modulus.is_zero()) throw ParameterError("gauss_period: zero modulus");

    // Walk i = 0 .. p-2 keeping 16^i mod modulus incrementally; 4^(2i) = 16^i.
    Natural sum;
    Natural power{1};
    power = power % modulus;
    const Natural sixteen{16};
    for (std::uint64_t i = 0; i < classes.p; ++i) {
        if (i > 0 && classes.class_of[i] == static_cast<int>(class_index)) {
            sum += power;
            if (sum >= modulus) sum -= modulus;
        }
        if (i + 1 < classes.p) power = Natural::mulmod(power, sixteen, modulus);
    }
    return sum;
}

} // namespace qadic
