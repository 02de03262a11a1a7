#include "qadic/numtheory.hpp"

#include <string>

#include "qadic/errors.hpp"

namespace qadic {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 0) throw ParameterError("powmod modulus is zero");
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This witness set is deterministic below 3.3 * 10^24, so for all of u64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(const Natural& n) {
    if (!n.fits_u64()) throw ParameterError("primality test limited to 64-bit values");
    return is_prime(n.to_u64());
}

int legendre_symbol(std::int64_t a, std::uint64_t p) {
    if (p < 3 || !is_prime(p))
        throw ParameterError("legendre_symbol: p = " + std::to_string(p) + " is not an odd prime");
    std::int64_t sp = static_cast<std::int64_t>(p);
    std::uint64_t r = static_cast<std::uint64_t>(((a % sp) + sp) % sp);
    if (r == 0) return 0;
    std::uint64_t e = powmod_u64(r, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> factors;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            factors.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

std::uint64_t multiplicative_order(std::uint64_t g, std::uint64_t p) {
    if (!is_prime(p)) throw ParameterError("multiplicative_order: modulus must be prime");
    g %= p;
    if (g == 0) throw ParameterError("multiplicative_order: g divisible by p");
    std::uint64_t order = p - 1;
    for (std::uint64_t q : prime_factors(p - 1)) {
        while (order % q == 0 && powmod_u64(g, order / q, p) == 1) order /= q;
    }
    return order;
}

std::uint64_t primitive_root(std::uint64_t p) {
    if (p < 3 || !is_prime(p))
        throw ParameterError("primitive_root: p = " + std::to_string(p) + " is not an odd prime");
    auto factors = prime_factors(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool primitive = true;
        for (std::uint64_t q : factors) {
            if (powmod_u64(g, (p - 1) / q, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    throw ParameterError("primitive_root: none found (unreachable for prime p)");
}

Natural pow4_minus1(std::size_t n) {
    return Natural::pow2(2 * n) - Natural(1);
}

Natural pow4_plus1(std::size_t n) {
    return Natural::pow2(2 * n) + Natural(1);
}

} // namespace qadic
