// primes.hpp
//
// Prime generation (segmented sieve of Eratosthenes) and the elementary
// multiplicative functions used across the library.

#ifndef EUPROD_PRIMES_HPP
#define EUPROD_PRIMES_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace euprod {

/// All primes <= limit, ascending.  limit < 2 yields an empty list.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;

    // base primes up to sqrt(limit)
    std::uint64_t root = 1;
    while ((root + 1) * (root + 1) <= limit) ++root;
    std::vector<bool> small(root + 1, true);
    std::vector<std::uint64_t> base;
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (std::uint64_t j = i * i; j <= root; j += i) small[j] = false;
    }

    const std::uint64_t seg_len = 1u << 20;
    std::vector<bool> seg;
    for (std::uint64_t lo = 2; lo <= limit; lo += seg_len) {
        std::uint64_t hi = std::min(limit, lo + seg_len - 1);
        seg.assign(hi - lo + 1, true);
        for (std::uint64_t p : base) {
            if (p * p > hi) break;
            std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
            for (std::uint64_t j = start; j <= hi; j += p) seg[j - lo] = false;
        }
        for (std::uint64_t i = lo; i <= hi; ++i)
            if (seg[i - lo] && i >= 2) out.push_back(i);
    }
    return out;
}

/// Prime factorization by trial division, (prime, exponent) pairs ascending.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    if (n == 0) throw std::domain_error("factorize: n must be >= 1");
    std::vector<std::pair<std::uint64_t, unsigned>> f;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

/// Moebius function.
inline int mobius(long long n) {
    if (n <= 0) throw std::domain_error("mobius: n must be >= 1");
    int sign = 1;
    for (auto [p, e] : factorize(static_cast<std::uint64_t>(n))) {
        (void)p;
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

/// Number of positive divisors.
inline long long divisor_count(long long n) {
    if (n <= 0) throw std::domain_error("divisor_count: n must be >= 1");
    long long d = 1;
    for (auto [p, e] : factorize(static_cast<std::uint64_t>(n))) {
        (void)p;
        d *= e + 1;
    }
    return d;
}

/// Sorted list of all positive divisors.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0) throw std::domain_error("divisors: n must be >= 1");
    std::vector<std::uint64_t> out{1};
    for (auto [p, e] : factorize(n)) {
        std::size_t sz = out.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Euler totient.
inline std::uint64_t totient(std::uint64_t n) {
    if (n == 0) throw std::domain_error("totient: n must be >= 1");
    std::uint64_t r = n;
    for (auto [p, e] : factorize(n)) {
        (void)e;
        r -= r / p;
    }
    return r;
}

/// gcd on 64-bit unsigned values.
inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

/// a^e mod m without overflow for m < 2^32.
inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = r * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return r;
}

}  // namespace euprod

#endif  // EUPROD_PRIMES_HPP
