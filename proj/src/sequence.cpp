#include "qadic/sequence.hpp"

#include <numeric>
#include <string>

#include "qadic/errors.hpp"

namespace qadic {

BinarySequence::BinarySequence(std::vector<std::uint8_t> bits, std::string tag)
    : bits_(std::move(bits)), tag_(std::move(tag)) {
    if (bits_.size() < 3 || bits_.size() % 2 == 0)
        throw ParameterError("BinarySequence: period must be odd and >= 3, got " +
                             std::to_string(bits_.size()));
    for (auto b : bits_) {
        if (b > 1) throw ParameterError("BinarySequence: entries must be 0 or 1");
    }
}

BinarySequence BinarySequence::complement() const {
    std::vector<std::uint8_t> out(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = bits_[i] ^ 1u;
    return BinarySequence(std::move(out), tag_ + "+C");
}

BinarySequence BinarySequence::shift(std::int64_t e) const {
    auto n = static_cast<std::int64_t>(bits_.size());
    std::int64_t off = ((e % n) + n) % n;
    std::vector<std::uint8_t> out(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i)
        out[i] = bits_[(i + static_cast<std::size_t>(off)) % bits_.size()];
    return BinarySequence(std::move(out), tag_ + "+L^" + std::to_string(off));
}

BinarySequence BinarySequence::sample(std::int64_t r) const {
    auto n = static_cast<std::int64_t>(bits_.size());
    std::int64_t rr = ((r % n) + n) % n;
    if (std::gcd(rr, n) != 1)
        throw ParameterError("sample: gcd(r, n) must be 1, got r = " + std::to_string(rr) +
                             ", n = " + std::to_string(n));
    std::vector<std::uint8_t> out(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i)
        out[i] = bits_[(i * static_cast<std::size_t>(rr)) % bits_.size()];
    return BinarySequence(std::move(out), tag_ + "+M^" + std::to_string(rr));
}

long autocorr_binary(const BinarySequence& s, std::size_t tau) {
    const auto& bits = s.bits();
    const std::size_t n = bits.size();
    if (tau >= n) throw ParameterError("autocorr_binary: tau must be < period");
    long acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = i + tau;
        if (j >= n) j -= n;
        acc += (bits[j] == bits[i]) ? 1 : -1;
    }
    return acc;
}

bool is_ideal(const BinarySequence& s) {
    if (s.period() % 4 != 3) return false;
    for (std::size_t tau = 1; tau < s.period(); ++tau) {
        if (autocorr_binary(s, tau) != -1) return false;
    }
    return true;
}

} // namespace qadic
