#include "qadic/families.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "qadic/cyclotomy.hpp"
#include "qadic/errors.hpp"
#include "qadic/numtheory.hpp"

namespace qadic {

namespace {

std::string hex_tag(std::uint32_t poly) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", poly);
    return buf;
}

} // namespace

BinarySequence m_sequence(const GF2kField& field) {
    std::uint64_t n = field.order();
    std::vector<std::uint8_t> bits(n);
    std::uint32_t power = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        bits[i] = static_cast<std::uint8_t>(field.trace(power));
        power = field.mul(power, field.theta());
    }
    return BinarySequence(std::move(bits), "m:k=" + std::to_string(field.degree()) +
                                               ",poly=" + hex_tag(field.modulus()));
}

BinarySequence m_sequence(unsigned k) {
    return m_sequence(GF2kField::smallest(k));
}

BinarySequence legendre_sequence(std::uint64_t p, LegendreVariant variant) {
    if (!is_prime(p) || p % 4 != 3)
        throw ParameterError("legendre_sequence: p = " + std::to_string(p) +
                             " is not a prime = 3 (mod 4)");
    std::vector<std::uint8_t> bits(p);
    bits[0] = variant == LegendreVariant::ell ? 0 : 1;
    for (std::uint64_t i = 1; i < p; ++i)
        bits[i] = legendre_symbol(static_cast<std::int64_t>(i), p) == 1 ? 0 : 1;
    return BinarySequence(std::move(bits),
                          "legendre:p=" + std::to_string(p) + ",variant=" +
                              (variant == LegendreVariant::ell ? "ell" : "ell_prime"));
}

BinarySequence twin_prime_sequence(std::uint64_t p) {
    std::uint64_t q = p + 2;
    if (!is_prime(p) || !is_prime(q))
        throw ParameterError("twin_prime_sequence: " + std::to_string(p) + ", " +
                             std::to_string(q) + " are not twin primes");
    std::uint64_t n = p * q;
    std::vector<std::uint8_t> bits(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        if (i == 0) {
            bits[i] = 0;
        } else if (i % q == 0) { // i in Q, the nonzero multiples of q
            bits[i] = 0;
        } else if (i % p == 0) { // i in P
            bits[i] = 1;
        } else {
            int prod = legendre_symbol(static_cast<std::int64_t>(i % p), p) *
                       legendre_symbol(static_cast<std::int64_t>(i % q), q);
            bits[i] = prod == 1 ? 0 : 1;
        }
    }
    return BinarySequence(std::move(bits), "twin:p=" + std::to_string(p));
}

BinarySequence hall_sequence(std::uint64_t p, std::uint64_t g) {
    bool shape_ok = false;
    if (is_prime(p) && p > 27 && (p - 27) % 4 == 0) {
        std::uint64_t x2 = (p - 27) / 4;
        std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x2)));
        while (r * r < x2) ++r;
        while (r > 0 && r * r > x2) --r;
        shape_ok = r * r == x2;
    }
    if (!shape_ok)
        throw ParameterError("hall_sequence: p = " + std::to_string(p) +
                             " is not a prime of the form 4x^2 + 27");
    auto classes = cyclotomic_classes(p, 6, g);
    std::vector<std::uint8_t> bits(p, 0);
    for (std::uint64_t i = 1; i < p; ++i) {
        int cls = classes.class_of[i];
        bits[i] = (cls == 0 || cls == 1 || cls == 3) ? 1 : 0;
    }
    return BinarySequence(std::move(bits),
                          "hall:p=" + std::to_string(p) + ",g=" + std::to_string(g));
}

BinarySequence hall_sequence(std::uint64_t p) {
    if (!is_prime(p))
        throw ParameterError("hall_sequence: p = " + std::to_string(p) + " is not prime");
    return hall_sequence(p, primitive_root(p));
}

namespace {

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParameterError("sequence spec: bad " + std::string(what) + " \"" +
                             std::string(text) + "\"");
    return value;
}

std::int64_t parse_i64(std::string_view text, std::string_view what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParameterError("sequence spec: bad " + std::string(what) + " \"" +
                             std::string(text) + "\"");
    return value;
}

std::uint32_t parse_hex_poly(std::string_view text) {
    std::string_view digits = text;
    if (digits.starts_with("0x") || digits.starts_with("0X")) digits.remove_prefix(2);
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value, 16);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
        throw ParameterError("sequence spec: bad polynomial \"" + std::string(text) + "\"");
    return value;
}

} // namespace

BinarySequence parse_sequence_spec(std::string_view spec) {
    // Split off "+..." transform suffixes first.
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= spec.size(); ++i) {
        if (i == spec.size() || spec[i] == '+') {
            parts.push_back(spec.substr(start, i - start));
            start = i + 1;
        }
    }
    std::string_view head = parts[0];

    auto colon = head.find(':');
    if (colon == std::string_view::npos)
        throw ParameterError("sequence spec: missing ':' in \"" + std::string(spec) + "\"");
    std::string_view family = head.substr(0, colon);

    // key=value pairs separated by commas
    std::uint64_t k = 0, p = 0, g = 0;
    std::optional<std::uint32_t> poly;
    std::string variant;
    std::string_view rest = head.substr(colon + 1);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw ParameterError("sequence spec: expected key=value, got \"" +
                                 std::string(item) + "\"");
        std::string_view key = item.substr(0, eq);
        std::string_view value = item.substr(eq + 1);
        if (key == "k") k = parse_u64(value, "k");
        else if (key == "p") p = parse_u64(value, "p");
        else if (key == "g") g = parse_u64(value, "g");
        else if (key == "poly") poly = parse_hex_poly(value);
        else if (key == "variant") variant = std::string(value);
        else throw ParameterError("sequence spec: unknown key \"" + std::string(key) + "\"");
    }

    BinarySequence seq = [&] {
        if (family == "m") {
            if (k == 0) throw ParameterError("sequence spec: m requires k");
            if (poly) return m_sequence(GF2kField::with_modulus(static_cast<unsigned>(k), *poly));
            return m_sequence(static_cast<unsigned>(k));
        }
        if (family == "legendre") {
            if (p == 0) throw ParameterError("sequence spec: legendre requires p");
            if (variant.empty() || variant == "ell")
                return legendre_sequence(p, LegendreVariant::ell);
            if (variant == "ell_prime") return legendre_sequence(p, LegendreVariant::ell_prime);
            throw ParameterError("sequence spec: unknown variant \"" + variant + "\"");
        }
        if (family == "twin") {
            if (p == 0) throw ParameterError("sequence spec: twin requires p");
            return twin_prime_sequence(p);
        }
        if (family == "hall") {
            if (p == 0) throw ParameterError("sequence spec: hall requires p");
            if (g != 0) return hall_sequence(p, g);
            return hall_sequence(p);
        }
        throw ParameterError("sequence spec: unknown family \"" + std::string(family) + "\"");
    }();

    for (std::size_t i = 1; i < parts.size(); ++i) {
        std::string_view t = parts[i];
        if (t == "C") {
            seq = seq.complement();
        } else if (t.starts_with("L^")) {
            seq = seq.shift(parse_i64(t.substr(2), "shift"));
        } else if (t.starts_with("M^")) {
            seq = seq.sample(parse_i64(t.substr(2), "sample"));
        } else {
            throw ParameterError("sequence spec: unknown transform \"" + std::string(t) + "\"");
        }
    }
    return seq;
}

} // namespace qadic
