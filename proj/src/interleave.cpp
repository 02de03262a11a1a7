#include "qadic/interleave.hpp"

#include <string>

#include "qadic/errors.hpp"

namespace qadic {

QuaternarySequence::QuaternarySequence(std::vector<std::uint8_t> digits, std::string tag)
    : digits_(std::move(digits)), tag_(std::move(tag)) {
    if (digits_.empty()) throw ParameterError("QuaternarySequence: empty period");
    for (auto d : digits_) {
        if (d > 3) throw ParameterError("QuaternarySequence: digits must be in {0,1,2,3}");
    }
}

std::uint8_t gray(unsigned c_bit, unsigned d_bit) {
    if (c_bit > 1 || d_bit > 1) throw ParameterError("gray: arguments must be bits");
    static constexpr std::uint8_t table[2][2] = {{0, 1}, {3, 2}};
    return table[c_bit][d_bit];
}

std::size_t crt_index(std::size_t n, unsigned mu, std::size_t lambda) {
    if (n < 3 || n % 2 == 0) throw ParameterError("crt_index: n must be odd and >= 3");
    if (mu > 1 || lambda >= n) throw ParameterError("crt_index: (mu, lambda) out of range");
    // (n*mu + (1-n)*lambda) mod 2n, with 1-n < 0 folded into the modulus.
    std::size_t two_n = 2 * n;
    std::size_t neg = ((n - 1) % two_n) * (lambda % two_n) % two_n;
    return (n * mu % two_n + two_n - neg) % two_n;
}

std::vector<std::uint8_t> build_c(const BinarySequence& a) {
    const std::size_t n = a.period();
    const std::size_t half = (n + 1) / 2;
    std::vector<std::uint8_t> c(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        c[2 * j] = a.bit(j);
        c[2 * j + 1] = a.bit(half + j);
    }
    return c;
}

std::vector<std::uint8_t> build_d(const BinarySequence& b) {
    const std::size_t n = b.period();
    const std::size_t half = (n + 1) / 2;
    std::vector<std::uint8_t> d(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        d[2 * j] = b.bit(j);
        d[2 * j + 1] = b.bit(half + j) ^ 1u;
    }
    return d;
}

QuaternarySequence interleave(const BinarySequence& a, const BinarySequence& b) {
    if (a.period() != b.period())
        throw ParameterError("interleave: period mismatch (" + std::to_string(a.period()) +
                             " vs " + std::to_string(b.period()) + ")");
    auto c = build_c(a);
    auto d = build_d(b);
    std::vector<std::uint8_t> w(c.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = gray(c[i], d[i]);
    std::string tag = "w(" + a.tag() + "," + b.tag() + ")";
    return QuaternarySequence(std::move(w), std::move(tag));
}

} // namespace qadic
