#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qadic {

// One period of a binary sequence over {0, 1}. The period must be odd and at
// least 3 (every construction here lives on odd periods). The tag records how
// the sequence was built, e.g. "legendre:p=7,variant=ell+L^2"; it is carried
// along by transforms and ignored by comparisons.
class BinarySequence {
public:
    BinarySequence(std::vector<std::uint8_t> bits, std::string tag = {});

    std::size_t period() const { return bits_.size(); }
    std::uint8_t bit(std::size_t i) const { return bits_[i % bits_.size()]; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }
    const std::string& tag() const { return tag_; }

    BinarySequence complement() const;            // C: flip every bit
    BinarySequence shift(std::int64_t e) const;   // L^e: i -> i + e
    BinarySequence sample(std::int64_t r) const;  // M_r: i -> r * i, gcd(r, n) = 1

    friend bool operator==(const BinarySequence& a, const BinarySequence& b) {
        return a.bits_ == b.bits_;
    }

private:
    std::vector<std::uint8_t> bits_;
    std::string tag_;
};

// Periodic autocorrelation A_s(tau) = sum_i (-1)^(s_{i+tau} - s_i), 0 <= tau < n.
long autocorr_binary(const BinarySequence& s, std::size_t tau);

// Ideal two-level autocorrelation: n = 3 (mod 4) and A_s(tau) = -1 for all
// tau != 0.
bool is_ideal(const BinarySequence& s);

} // namespace qadic
