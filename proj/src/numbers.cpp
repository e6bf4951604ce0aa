#include "paleylab/numbers.hpp"

#include <algorithm>

namespace paleylab {

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (u64 f = 5; f * f <= n; f += 6) {
        if (n % f == 0 || n % (f + 2) == 0) return false;
    }
    return true;
}

std::vector<std::pair<u64, u32>> factorize(u64 n) {
    std::vector<std::pair<u64, u32>> out;
    for (u64 f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
        if (n % f) continue;
        u32 e = 0;
        while (n % f == 0) { n /= f; ++e; }
        out.emplace_back(f, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<u64> divisors(u64 n) {
    std::vector<u64> out{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        u64 pk = 1;
        for (u32 i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

u64 euler_phi(u64 n) {
    u64 r = n;
    for (auto [p, e] : factorize(n)) {
        (void)e;
        r -= r / p;
    }
    return r;
}

u64 isqrt(u64 n) {
    if (n == 0) return 0;
    u64 r = n;
    u64 x = (n >> 1) + 1;
    while (x < r) { // Newton iteration, monotone decreasing to the floor
        r = x;
        x = (x + n / x) >> 1;
    }
    return r;
}

u64 gcd(u64 a, u64 b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

u64 lcm(u64 a, u64 b) { return a / gcd(a, b) * b; }

u64 pow_u64(u64 base, u32 exp) {
    u64 r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

u64 pow_mod(u64 base, u64 exp, u64 mod) {
    unsigned __int128 r = 1, b = base % mod;
    while (exp) {
        if (exp & 1) r = r * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<u64>(r);
}

u64 mult_order(u64 a, u64 n) {
    u64 ord = euler_phi(n);
    for (auto [p, e] : factorize(ord)) {
        (void)e;
        while (ord % p == 0 && pow_mod(a, ord / p, n) == 1) ord /= p;
    }
    return ord;
}

std::optional<u64> first_power_hitting_minus_one(u64 a, u64 n) {
    if (n <= 2) return 1; // -1 = 1 (mod 1 or 2), a^1 hits it
    const u64 target = n - 1;
    const u64 ord = mult_order(a, n);
    u64 x = 1;
    for (u64 t = 1; t <= ord; ++t) {
        x = x * (a % n) % n;
        if (x == target) return t;
    }
    return std::nullopt;
}

u64 binom_mod_p_lucas(u64 m, u64 k, u64 p) {
    if (k > m) return 0;
    u64 r = 1;
    while (m || k) {
        const u64 md = m % p, kd = k % p;
        if (kd > md) return 0;
        // binom(md, kd) mod p with md, kd < p
        u64 num = 1, den = 1;
        for (u64 i = 0; i < kd; ++i) {
            num = num * ((md - i) % p) % p;
            den = den * ((i + 1) % p) % p;
        }
        r = r * num % p * pow_mod(den, p - 2, p) % p;
        m /= p;
        k /= p;
    }
    return r;
}

} // namespace paleylab
