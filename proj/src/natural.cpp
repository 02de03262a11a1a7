#include "qadic/natural.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>

#include "qadic/errors.hpp"

namespace qadic {

namespace {
constexpr std::uint64_t kBase = std::uint64_t{1} << 32;
}

Natural::Natural(std::uint64_t value) {
    if (value != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(value));
        if (value >> 32) limbs_.push_back(static_cast<std::uint32_t>(value >> 32));
    }
}

void Natural::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

Natural Natural::from_decimal(std::string_view text) {
    if (text.empty()) throw ParameterError("empty decimal literal");
    Natural result;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t chunk_len = std::min<std::size_t>(9, text.size() - pos);
        std::uint32_t chunk = 0;
        std::uint32_t scale = 1;
        for (std::size_t i = 0; i < chunk_len; ++i) {
            char ch = text[pos + i];
            if (ch < '0' || ch > '9')
                throw ParameterError("invalid decimal digit in \"" + std::string(text) + "\"");
            chunk = chunk * 10 + static_cast<std::uint32_t>(ch - '0');
            scale *= 10;
        }
        result = result * Natural(scale) + Natural(chunk);
        pos += chunk_len;
    }
    return result;
}

Natural Natural::pow2(std::size_t exponent) {
    Natural result;
    result.limbs_.assign(exponent / 32 + 1, 0);
    result.limbs_.back() = std::uint32_t{1} << (exponent % 32);
    return result;
}

std::size_t Natural::bit_length() const {
    if (limbs_.empty()) return 0;
    return (limbs_.size() - 1) * 32 + (32 - std::countl_zero(limbs_.back()));
}

bool Natural::bit(std::size_t index) const {
    std::size_t limb = index / 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (index % 32)) & 1u;
}

std::uint64_t Natural::to_u64() const {
    if (!fits_u64()) throw ParameterError("value does not fit in 64 bits");
    std::uint64_t value = 0;
    if (limbs_.size() > 1) value = std::uint64_t{limbs_[1]} << 32;
    if (!limbs_.empty()) value |= limbs_[0];
    return value;
}

std::string Natural::to_decimal() const {
    if (is_zero()) return "0";
    Natural work = *this;
    std::string digits;
    while (!work.is_zero()) {
        std::uint32_t rem = work.divmod_small(1'000'000'000u);
        bool last = work.is_zero();
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
            if (last && rem == 0) break;
        }
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

double Natural::log2() const {
    if (is_zero()) throw ParameterError("log2 of zero");
    std::size_t bl = bit_length();
    if (bl <= 64) return std::log2(static_cast<double>(to_u64()));
    Natural top = *this >> (bl - 64);
    return std::log2(static_cast<double>(top.to_u64())) + static_cast<double>(bl - 64);
}

std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    }
    return std::strong_ordering::equal;
}

Natural& Natural::operator+=(const Natural& other) {
    if (limbs_.size() < other.limbs_.size()) limbs_.resize(other.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t sum = carry + limbs_[i];
        if (i < other.limbs_.size()) sum += other.limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
        if (carry == 0 && i >= other.limbs_.size()) break;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

Natural& Natural::operator-=(const Natural& other) {
    if (*this < other) throw ParameterError("Natural subtraction underflow");
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(limbs_[i]) - borrow;
        if (i < other.limbs_.size()) diff -= other.limbs_[i];
        borrow = 0;
        if (diff < 0) {
            diff += static_cast<std::int64_t>(kBase);
            borrow = 1;
        }
        limbs_[i] = static_cast<std::uint32_t>(diff);
        if (borrow == 0 && i >= other.limbs_.size()) break;
    }
    trim();
    return *this;
}

Natural operator*(const Natural& a, const Natural& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Natural result;
    result.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a.limbs_[i];
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t t = ai * b.limbs_[j] + result.limbs_[i + j] + carry;
            result.limbs_[i + j] = static_cast<std::uint32_t>(t);
            carry = t >> 32;
        }
        result.limbs_[i + b.limbs_.size()] = static_cast<std::uint32_t>(carry);
    }
    result.trim();
    return result;
}

Natural& Natural::operator<<=(std::size_t bits) {
    if (is_zero() || bits == 0) return *this;
    std::size_t limb_shift = bits / 32;
    unsigned bit_shift = bits % 32;
    std::vector<std::uint32_t> out(limbs_.size() + limb_shift + 1, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t v = std::uint64_t{limbs_[i]} << bit_shift;
        out[i + limb_shift] |= static_cast<std::uint32_t>(v);
        out[i + limb_shift + 1] |= static_cast<std::uint32_t>(v >> 32);
    }
    limbs_ = std::move(out);
    trim();
    return *this;
}

Natural& Natural::operator>>=(std::size_t bits) {
    if (is_zero() || bits == 0) return *this;
    std::size_t limb_shift = bits / 32;
    unsigned bit_shift = bits % 32;
    if (limb_shift >= limbs_.size()) {
        limbs_.clear();
        return *this;
    }
    std::size_t new_size = limbs_.size() - limb_shift;
    for (std::size_t i = 0; i < new_size; ++i) {
        std::uint64_t v = std::uint64_t{limbs_[i + limb_shift]} >> bit_shift;
        if (bit_shift && i + limb_shift + 1 < limbs_.size())
            v |= std::uint64_t{limbs_[i + limb_shift + 1]} << (32 - bit_shift);
        limbs_[i] = static_cast<std::uint32_t>(v);
    }
    limbs_.resize(new_size);
    trim();
    return *this;
}

std::uint32_t Natural::divmod_small(std::uint32_t den) {
    if (den == 0) throw ParameterError("division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / den);
        rem = cur % den;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

std::pair<Natural, Natural> Natural::divmod(const Natural& num, const Natural& den) {
    if (den.is_zero()) throw ParameterError("division by zero");
    if (num < den) return {Natural{}, num};
    if (den.limbs_.size() == 1) {
        Natural q = num;
        std::uint32_t r = q.divmod_small(den.limbs_[0]);
        return {std::move(q), Natural(r)};
    }

    // Knuth TAOCP vol 2, Algorithm D, base 2^32.
    unsigned shift = static_cast<unsigned>(std::countl_zero(den.limbs_.back()));
    Natural u = num << shift;
    Natural v = den << shift;
    const std::size_t n = v.limbs_.size();
    const std::size_t qlen = u.limbs_.size() - n + 1;
    u.limbs_.push_back(0);

    Natural q;
    q.limbs_.assign(qlen, 0);
    const std::uint64_t vtop = v.limbs_[n - 1];
    const std::uint64_t vnext = v.limbs_[n - 2];

    for (std::size_t j = qlen; j-- > 0;) {
        std::uint64_t numer = (std::uint64_t{u.limbs_[j + n]} << 32) | u.limbs_[j + n - 1];
        std::uint64_t qhat = numer / vtop;
        std::uint64_t rhat = numer % vtop;
        while (qhat >= kBase || qhat * vnext > ((rhat << 32) | u.limbs_[j + n - 2])) {
            --qhat;
            rhat += vtop;
            if (rhat >= kBase) break;
        }

        // u[j .. j+n] -= qhat * v
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t prod = qhat * v.limbs_[i] + carry;
            carry = prod >> 32;
            std::int64_t diff = static_cast<std::int64_t>(u.limbs_[i + j]) -
                                static_cast<std::int64_t>(prod & 0xffffffffu) - borrow;
            borrow = 0;
            if (diff < 0) {
                diff += static_cast<std::int64_t>(kBase);
                borrow = 1;
            }
            u.limbs_[i + j] = static_cast<std::uint32_t>(diff);
        }
        std::int64_t top = static_cast<std::int64_t>(u.limbs_[j + n]) -
                           static_cast<std::int64_t>(carry) - borrow;
        if (top < 0) {
            // qhat was one too large; add v back.
            top += static_cast<std::int64_t>(kBase);
            --qhat;
            std::uint64_t c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t sum = std::uint64_t{u.limbs_[i + j]} + v.limbs_[i] + c2;
                u.limbs_[i + j] = static_cast<std::uint32_t>(sum);
                c2 = sum >> 32;
            }
            top += static_cast<std::int64_t>(c2);
            top &= static_cast<std::int64_t>(kBase) - 1;
        }
        u.limbs_[j + n] = static_cast<std::uint32_t>(top);
        q.limbs_[j] = static_cast<std::uint32_t>(qhat);
    }

    q.trim();
    u.limbs_.resize(n);
    u.trim();
    u >>= shift;
    return {std::move(q), std::move(u)};
}

Natural Natural::gcd(Natural a, Natural b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Natural Natural::mulmod(const Natural& a, const Natural& b, const Natural& m) {
    return (a * b) % m;
}

Natural Natural::powmod(const Natural& base, const Natural& exponent, const Natural& m) {
    if (m.is_zero()) throw ParameterError("powmod modulus is zero");
    if (m.is_one()) return {};
    Natural result{1};
    Natural acc = base % m;
    std::size_t bits = exponent.bit_length();
    for (std::size_t i = 0; i < bits; ++i) {
        if (exponent.bit(i)) result = mulmod(result, acc, m);
        if (i + 1 < bits) acc = mulmod(acc, acc, m);
    }
    return result;
}

Natural mod_diff(const Natural& pos, const Natural& neg, const Natural& m) {
    Natural p = pos % m;
    Natural n = neg % m;
    if (p >= n) return p - n;
    return p + m - n;
}

} // namespace qadic
