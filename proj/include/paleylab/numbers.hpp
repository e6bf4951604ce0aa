#ifndef PALEYLAB_NUMBERS_HPP
#define PALEYLAB_NUMBERS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace paleylab {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

bool is_prime(u64 n);

// Prime factorization by trial division, (prime, exponent) pairs in
// ascending prime order. Intended for desk-scale inputs (n below ~2^40).
std::vector<std::pair<u64, u32>> factorize(u64 n);

std::vector<u64> divisors(u64 n);

u64 euler_phi(u64 n);

// Exact integer square root: the largest r with r*r <= n.
u64 isqrt(u64 n);

inline bool is_square(u64 n) {
    u64 r = isqrt(n);
    return r * r == n;
}

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);

u64 pow_u64(u64 base, u32 exp); // unchecked; caller keeps results in range
u64 pow_mod(u64 base, u64 exp, u64 mod);

// Multiplicative order of a modulo n; requires gcd(a, n) = 1.
u64 mult_order(u64 a, u64 n);

// Smallest t >= 1 with a^t = -1 (mod n), searched within the
// multiplicative order of a; empty when no power hits -1.
std::optional<u64> first_power_hitting_minus_one(u64 a, u64 n);

// binom(m, k) mod p for prime p via the base-p digit product. Returns the
// residue, so "nonzero mod p" is just a != 0 check.
u64 binom_mod_p_lucas(u64 m, u64 k, u64 p);

} // namespace paleylab

#endif
