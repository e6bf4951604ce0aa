#include "paleylab/field.hpp"

#include <algorithm>
#include <sstream>

#include "paleylab/errors.hpp"

namespace paleylab {

namespace {

// Dense polynomial helpers over F_p used only during construction (before
// the log tables exist). Coefficients constant-first, not necessarily
// normalized in length.

using PolyP = std::vector<u32>;

void trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP poly_mul_mod(const PolyP& a, const PolyP& b, const PolyP& mod, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + u64(a[i]) * b[j]) % p;
    }
    // reduce by the monic modulus
    const std::size_t dm = mod.size() - 1;
    for (std::size_t i = acc.size(); i-- > dm;) {
        const u64 c = acc[i];
        if (!c) continue;
        acc[i] = 0;
        for (std::size_t j = 0; j < dm; ++j) acc[i - dm + j] = (acc[i - dm + j] + (p - mod[j] % p) * c) % p;
    }
    PolyP out(acc.begin(), acc.begin() + std::min(acc.size(), dm));
    trim(out);
    return out;
}

PolyP poly_pow_mod(PolyP base, u64 e, const PolyP& mod, u64 p) {
    PolyP r{1};
    while (e) {
        if (e & 1) r = poly_mul_mod(r, base, mod, p);
        base = poly_mul_mod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

PolyP poly_mod(PolyP a, const PolyP& mod, u64 p) {
    const std::size_t dm = mod.size() - 1;
    for (std::size_t i = a.size(); i-- > dm;) {
        const u64 c = a[i];
        if (!c) continue;
        a[i] = 0;
        for (std::size_t j = 0; j < dm; ++j) a[i - dm + j] = static_cast<u32>((a[i - dm + j] + (p - mod[j] % p) * c) % p);
    }
    a.resize(std::min(a.size(), dm));
    trim(a);
    return a;
}

PolyP poly_gcd(PolyP a, PolyP b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b with b made monic on the fly
        const u64 lead = b.back();
        u64 linv = pow_mod(lead, p - 2, p);
        PolyP bm = b;
        for (auto& c : bm) c = static_cast<u32>(u64(c) * linv % p);
        PolyP mod = bm;
        a = poly_mod(std::move(a), mod, p);
        std::swap(a, b);
    }
    return a;
}

// Monic f of degree s irreducible over F_p iff x^(p^s) = x (mod f) and
// gcd(x^(p^(s/t)) - x, f) = 1 for every prime t | s.
bool is_irreducible(const PolyP& f, u64 p, u32 s) {
    if (s == 1) return true;
    const PolyP x{0, 1};
    // x^(p^s) computed by repeated p-th powering
    PolyP xp = x;
    for (u32 i = 0; i < s; ++i) xp = poly_pow_mod(xp, p, f, p);
    if (xp != x) return false;
    for (auto [t, e] : factorize(s)) {
        (void)e;
        PolyP g = x;
        for (u32 i = 0; i < s / t; ++i) g = poly_pow_mod(g, p, f, p);
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = static_cast<u32>((g[1] + p - 1) % p);
        trim(g);
        PolyP d = poly_gcd(g, f, p);
        if (!(d.size() == 1)) return false; // gcd must be a nonzero constant
    }
    return true;
}

} // namespace

FiniteField FiniteField::make(u64 p, u32 s, u64 size_cap) {
    if (!is_prime(p)) raise(Errc::not_prime, std::to_string(p) + " is not prime");
    if (p == 2) raise(Errc::even_characteristic, "characteristic 2 is out of scope (p must be odd)");
    if (s < 1) raise(Errc::case_not_applicable, "extension degree must be positive");
    u64 q = 1;
    for (u32 i = 0; i < s; ++i) {
        q *= p;
        if (q > size_cap) raise(Errc::size_cap_exceeded, "field size exceeds cap " + std::to_string(size_cap));
    }

    FiniteField F;
    F.p_ = p;
    F.s_ = s;
    F.q_ = q;

    // Smallest monic irreducible modulus: candidates x^s + c(x) ordered by
    // the canonical index of c.
    for (u64 c = 0;; ++c) {
        if (c >= q) raise(Errc::internal, "no irreducible modulus found");
        PolyP f(s + 1, 0);
        u64 t = c;
        for (u32 i = 0; i < s; ++i) {
            f[i] = static_cast<u32>(t % p);
            t /= p;
        }
        f[s] = 1;
        if (is_irreducible(f, p, s)) {
            F.modulus_ = std::move(f);
            break;
        }
    }

    // Smallest-index generator: order exactly q-1, checked against the
    // maximal proper divisors of q-1.
    const auto qm1_primes = factorize(q - 1);
    auto elem_poly = [&](Elem a) {
        PolyP v;
        u64 t = a;
        while (t) {
            v.push_back(static_cast<u32>(t % p));
            t /= p;
        }
        return v;
    };
    auto poly_elem = [&](const PolyP& v) {
        u64 idx = 0;
        for (std::size_t i = v.size(); i-- > 0;) idx = idx * p + v[i];
        return static_cast<Elem>(idx);
    };
    for (Elem g = 1;; ++g) {
        if (g >= q) raise(Errc::internal, "no generator found");
        bool full_order = true;
        for (auto [r, e] : qm1_primes) {
            (void)e;
            PolyP pw = poly_pow_mod(elem_poly(g), (q - 1) / r, F.modulus_, p);
            if (pw == PolyP{1}) {
                full_order = false;
                break;
            }
        }
        if (full_order) {
            F.gen_ = g;
            break;
        }
    }

    F.exp_.resize(q - 1);
    F.log_.assign(q, 0);
    PolyP cur{1};
    const PolyP gp = elem_poly(F.gen_);
    for (u64 k = 0; k < q - 1; ++k) {
        const Elem e = poly_elem(cur);
        F.exp_[k] = e;
        F.log_[e] = static_cast<u32>(k);
        cur = poly_mul_mod(cur, gp, F.modulus_, p);
    }
    if (cur != PolyP{1}) raise(Errc::internal, "generator order check failed");
    // bijection check: every nonzero index must have been hit
    {
        std::vector<bool> seen(q, false);
        for (Elem e : F.exp_) {
            if (e == 0 || seen[e]) raise(Errc::internal, "log table is not a bijection");
            seen[e] = true;
        }
    }

    F.trace_.resize(q);
    for (Elem a = 0; a < q; ++a) F.trace_[a] = static_cast<u32>(F.rel_trace(1, a));

    return F;
}

Elem FiniteField::add(Elem a, Elem b) const {
    u64 r = 0, mult = 1;
    for (u32 i = 0; i < s_; ++i) {
        r += (a % p_ + b % p_) % p_ * mult;
        a = static_cast<Elem>(a / p_);
        b = static_cast<Elem>(b / p_);
        mult *= p_;
    }
    return static_cast<Elem>(r);
}

Elem FiniteField::neg(Elem a) const {
    u64 r = 0, mult = 1;
    for (u32 i = 0; i < s_; ++i) {
        r += (p_ - a % p_) % p_ * mult;
        a = static_cast<Elem>(a / p_);
        mult *= p_;
    }
    return static_cast<Elem>(r);
}

Elem FiniteField::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(u64(log_[a]) + log_[b]) % (q_ - 1)];
}

Elem FiniteField::inv(Elem a) const {
    if (a == 0) raise(Errc::division_by_zero, "inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem FiniteField::pow(Elem a, u64 e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    return exp_[u64(log_[a]) % (q_ - 1) * (e % (q_ - 1)) % (q_ - 1)];
}

u64 FiniteField::dlog(Elem a) const {
    if (a == 0) raise(Errc::zero_element, "discrete log of zero");
    return log_[a];
}

std::vector<u32> FiniteField::coeffs_of(Elem a) const {
    std::vector<u32> c(s_);
    for (u32 i = 0; i < s_; ++i) {
        c[i] = static_cast<u32>(a % p_);
        a = static_cast<Elem>(a / p_);
    }
    return c;
}

Elem FiniteField::elem_from_coeffs(const std::vector<u32>& coeffs) const {
    u64 idx = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= p_) raise(Errc::case_not_applicable, "coefficient out of range");
        idx = idx * p_ + coeffs[i];
    }
    if (idx >= q_) raise(Errc::case_not_applicable, "coefficient vector too long");
    return static_cast<Elem>(idx);
}

Elem FiniteField::rel_trace(u32 k, Elem a) const { return rel_trace_between(s_, k, a); }

Elem FiniteField::rel_trace_between(u32 m, u32 k, Elem a) const {
    if (m == 0 || k == 0 || s_ % m != 0 || m % k != 0)
        raise(Errc::degree_not_dividing, "trace requires a tower of subfield degrees");
    Elem acc = 0;
    Elem t = a;
    const u32 steps = m / k;
    for (u32 i = 0; i < steps; ++i) {
        acc = add(acc, t);
        if (i + 1 < steps) {
            // t <- t^(p^k)
            u64 e = pow_mod(p_, k, q_ - 1);
            t = pow(t, e);
        }
    }
    return acc;
}

bool FiniteField::in_subfield(u32 k, Elem a) const {
    if (k == 0 || s_ % k != 0) raise(Errc::degree_not_dividing, "subfield degree must divide the field degree");
    const u64 e = pow_mod(p_, k, q_ - 1);
    return pow(a, e) == a;
}

std::vector<Elem> FiniteField::subfield_elements(u32 k) const {
    if (k == 0 || s_ % k != 0) raise(Errc::degree_not_dividing, "subfield degree must divide the field degree");
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(pow_u64(static_cast<u64>(p_), k)));
    const u64 e = pow_mod(p_, k, q_ - 1);
    for (Elem a = 0; a < q_; ++a)
        if (pow(a, e) == a) out.push_back(a);
    return out;
}

std::vector<Elem> FiniteField::trace_kernel_image(u32 r) const {
    if (r == 0 || s_ % r != 0) raise(Errc::degree_not_dividing, "subfield degree must divide the field degree");
    std::vector<bool> seen(q_, false);
    const u64 e = pow_mod(p_, r, q_ - 1);
    for (Elem x = 0; x < q_; ++x) seen[sub(pow(x, e), x)] = true;
    std::vector<Elem> out;
    for (Elem a = 0; a < q_; ++a)
        if (seen[a]) out.push_back(a);
    return out;
}

std::string FiniteField::descriptor() const {
    std::ostringstream os;
    os << p_ << '^' << s_ << '/';
    for (u32 i = 0; i <= s_; ++i) {
        if (i) os << ',';
        os << modulus_[i];
    }
    os << '/' << gen_;
    return os.str();
}

} // namespace paleylab
