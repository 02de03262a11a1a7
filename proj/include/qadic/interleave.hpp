#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qadic/sequence.hpp"

namespace qadic {

// One period of a quaternary sequence over {0, 1, 2, 3}.
class QuaternarySequence {
public:
    QuaternarySequence(std::vector<std::uint8_t> digits, std::string tag = {});

    std::size_t period() const { return digits_.size(); }
    std::uint8_t digit(std::size_t i) const { return digits_[i % digits_.size()]; }
    const std::vector<std::uint8_t>& digits() const { return digits_; }
    const std::string& tag() const { return tag_; }

    friend bool operator==(const QuaternarySequence& a, const QuaternarySequence& b) {
        return a.digits_ == b.digits_;
    }

private:
    std::vector<std::uint8_t> digits_;
    std::string tag_;
};

// Gray map: (0,0) -> 0, (0,1) -> 1, (1,1) -> 2, (1,0) -> 3.
std::uint8_t gray(unsigned c_bit, unsigned d_bit);

// Inverse of i -> (i mod 2, i mod n): index (n*mu + (1-n)*lambda) mod 2n.
std::size_t crt_index(std::size_t n, unsigned mu, std::size_t lambda);

// Row-major read of the n x 2 matrix whose columns are a and its
// (n+1)/2-shift: (a_0, a_{(n+1)/2}, a_1, a_{(n+1)/2+1}, ...). This is the
// first Gray component of the interleaved sequence.
std::vector<std::uint8_t> build_c(const BinarySequence& a);

// Same read for b but with the shifted column complemented:
// (b_0, 1 - b_{(n+1)/2}, b_1, ...). Second Gray component.
std::vector<std::uint8_t> build_d(const BinarySequence& b);

// The interleaved quaternary sequence w(a, b) of period 2n:
// w_i = gray(c_i, d_i). Periods must match (and be odd).
QuaternarySequence interleave(const BinarySequence& a, const BinarySequence& b);

} // namespace qadic
