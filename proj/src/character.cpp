#include "paleylab/character.hpp"

#include <sstream>

#include "paleylab/errors.hpp"

namespace paleylab {

Character make_character(const FiniteField& F, u32 d, u32 j) {
    if (d < 2 || (F.q() - 1) % d != 0)
        raise(Errc::order_not_dividing, "character order must exceed 1 and divide q-1");
    return Character{&F, d, j % d, CyclotomicRing::make(d)};
}

CyclotomicInt Character::eval(Elem a) const {
    if (a == 0) return ring.zero();
    return ring.zeta_pow(static_cast<i64>(exponent(a)));
}

u64 Character::exponent(Elem a) const { return u64(j) * field->dlog(a) % d; }

GaussSumValue gauss_sum(const Character& chi, Elem shift) {
    const FiniteField& F = *chi.field;
    const u64 q = F.q();
    const u32 m = static_cast<u32>(lcm(F.p(), chi.d));
    CyclotomicRing R = CyclotomicRing::make(m);

    // chi(c) psi(shift*c) is the monomial zeta_m^e; aggregate a histogram of
    // exponents and reduce once.
    std::vector<i64> counts(m, 0);
    const u64 chi_scale = m / chi.d, psi_scale = m / F.p();
    for (Elem c = 1; c < q; ++c) {
        const u64 e = (chi.exponent(c) * chi_scale + F.abs_trace(F.mul(shift, c)) * psi_scale) % m;
        counts[static_cast<std::size_t>(e)] += 1;
    }
    CyclotomicInt value = R.from_exponent_counts(counts);

    std::optional<int> sign;
    if (is_square(q)) {
        const mpz_class root = static_cast<unsigned long>(isqrt(q));
        if (auto r = value.as_rational()) {
            if (*r == root) sign = 1;
            else if (*r == -root) sign = -1;
        }
    }
    return GaussSumValue{std::move(value), q, sign};
}

PurityVerdict is_pure(const Character& chi) {
    if (chi.is_trivial()) raise(Errc::trivial_character, "purity test requires a nontrivial character");
    const FiniteField& F = *chi.field;
    const u64 q = F.q();
    const GaussSumValue G = gauss_sum(chi);
    const CyclotomicRing& R = G.value.ring();
    const u32 m = R.conductor();

    const CyclotomicInt G2 = G.value * G.value;
    const mpz_class qz = static_cast<unsigned long>(q);
    for (u32 k = 0; k < m; ++k) {
        const CyclotomicInt cand = R.zeta_pow(k).scalar_mul(qz);
        int unit_sign = 0;
        if (G2 == cand) unit_sign = 1;
        else if (G2 == -cand) unit_sign = -1;
        if (!unit_sign) continue;

        if (G.value == G.value.conj()) return {true, 1};
        // G^2 = unit_sign * zeta^k * q; find the least t with
        // (unit_sign * zeta^k)^t = +-1, then 2t witnesses purity.
        for (u64 t = 1; t <= 2 * u64(m); ++t) {
            const u64 e = t * k % m;
            const bool zeta_real = (e == 0) || (m % 2 == 0 && e == m / 2);
            if (zeta_real) return {true, 2 * t};
        }
        raise(Errc::internal, "no real power located for a pure Gauss sum");
    }
    return {false, 0};
}

std::optional<u64> is_supersingular(u64 p, u64 d) {
    if (d < 2) raise(Errc::case_not_applicable, "supersingularity requires d > 1");
    if (gcd(p, d) != 1) raise(Errc::not_coprime, "p and d must be coprime");
    return first_power_hitting_minus_one(p, d);
}

mpz_class ClosedFormGauss::rational_value() const {
    if (!rational()) raise(Errc::case_not_applicable, "value is not rational");
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), v / 2);
    return sign < 0 ? mpz_class(-r) : r;
}

mpz_class ClosedFormGauss::square() const {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), v);
    return i_factor ? mpz_class(-r) : r;
}

std::string ClosedFormGauss::str() const {
    std::ostringstream os;
    os << (sign < 0 ? '-' : '+');
    if (rational()) {
        mpz_class r;
        mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), v / 2);
        os << r.get_str();
    } else {
        mpz_class qz;
        mpz_ui_pow_ui(qz.get_mpz_t(), static_cast<unsigned long>(p), v);
        if (i_factor) os << "i*";
        os << "sqrt(" << qz.get_str() << ")";
    }
    return os.str();
}

ClosedFormGauss formula_quadratic(u64 p, u32 s) {
    if (p < 3 || !is_prime(p) || p % 2 == 0) raise(Errc::case_not_applicable, "quadratic case needs an odd prime");
    if (s < 1) raise(Errc::case_not_applicable, "quadratic case needs s >= 1");
    int sign = (s % 2 == 1) ? 1 : -1; // (-1)^(s-1)
    bool i_factor = false;
    if (p % 4 == 3) {
        // multiply by i^s
        switch (s % 4) {
            case 0: break;
            case 1: i_factor = true; break;
            case 2: sign = -sign; break;
            case 3: sign = -sign; i_factor = true; break;
        }
    }
    return ClosedFormGauss{sign, i_factor, p, s};
}

ClosedFormGauss formula_stickelberger(u64 q, u64 d) {
    if (!is_square(q)) raise(Errc::case_not_applicable, "stickelberger case needs a square q");
    const u64 root = isqrt(q);
    if (d < 2 || (root + 1) % d != 0) raise(Errc::case_not_applicable, "stickelberger case needs 1 < d | sqrt(q)+1");
    auto fac = factorize(q);
    if (fac.size() != 1) raise(Errc::case_not_applicable, "q must be a prime power");
    const u64 p = fac[0].first;
    const u32 v = fac[0].second;
    if (p == 2) raise(Errc::case_not_applicable, "characteristic must be odd");
    const u64 cofactor = (root + 1) / d;
    const int sign = (d % 2 == 1 || cofactor % 2 == 0) ? 1 : -1;
    return ClosedFormGauss{sign, false, p, v};
}

ClosedFormGauss formula_semiprimitive(u64 p, u64 d, u32 v) {
    if (d <= 2) raise(Errc::case_not_applicable, "semiprimitive case needs d > 2");
    if (!is_prime(p) || p % 2 == 0) raise(Errc::case_not_applicable, "semiprimitive case needs an odd prime");
    auto t = is_supersingular(p, d);
    if (!t) raise(Errc::case_not_applicable, "no power of p is -1 mod d");
    if (v % (2 * *t) != 0) raise(Errc::case_not_applicable, "field degree must be a multiple of 2t");
    const u64 s = v / (2 * *t);
    mpz_class pt;
    mpz_ui_pow_ui(pt.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(*t));
    const mpz_class expo = (s - 1) + (pt + 1) / static_cast<unsigned long>(d) * static_cast<unsigned long>(s);
    const int sign = mpz_even_p(expo.get_mpz_t()) ? 1 : -1;
    return ClosedFormGauss{sign, false, p, v};
}

ClosedFormGauss formula_peisert_quartic(u64 p, u32 s) {
    if (!is_prime(p) || p % 4 != 3) raise(Errc::case_not_applicable, "peisert quartic case needs p = 3 mod 4");
    const int sign = (p % 8 == 7 && s % 2 == 1) ? 1 : -1;
    return ClosedFormGauss{sign, false, p, 2 * s};
}

CyclotomicInt exp_sum(const FiniteField& F, const std::vector<Elem>& A, Elem c) {
    CyclotomicRing R = CyclotomicRing::make(static_cast<u32>(F.p()));
    std::vector<i64> counts(F.p(), 0);
    for (Elem a : A) counts[F.abs_trace(F.mul(a, c))] += 1;
    return R.from_exponent_counts(counts);
}

mpz_class parseval_sum(const FiniteField& F, const std::vector<Elem>& A) {
    CyclotomicRing R = CyclotomicRing::make(static_cast<u32>(F.p()));
    CyclotomicInt total = R.zero();
    for (Elem c = 1; c < F.q(); ++c) {
        const CyclotomicInt s = exp_sum(F, A, c);
        total = total + s.norm_squared();
    }
    const mpz_class expected = mpz_class(static_cast<unsigned long>(F.q())) * A.size() - mpz_class(A.size()) * A.size();
    auto got = total.as_rational();
    if (!got || *got != expected)
        raise(Errc::parseval_violation, "sum_{c!=0} |S(c)|^2 != q|A| - |A|^2 for field " + F.descriptor());
    return expected;
}

CharSumBound double_char_sum_bound(const FiniteField& F, const std::vector<Elem>& A,
                                   const std::vector<Elem>& B, const Character& chi) {
    if (chi.is_trivial()) raise(Errc::trivial_character, "bound requires a nontrivial character");
    const u64 q = F.q();

    std::vector<i64> counts(chi.d, 0);
    for (Elem a : A)
        for (Elem b : B) {
            const Elem sum = F.add(a, b);
            if (sum != 0) counts[chi.exponent(sum)] += 1; // chi(0) = 0 drops the term
        }
    CyclotomicInt sum = chi.ring.from_exponent_counts(counts);

    // |sum|^2 <= q|A||B| (1-|A|/q)(1-|B|/q), cleared of denominators:
    // q * |sum|^2 <= |A||B|(q-|A|)(q-|B|).
    const mpz_class rhs = mpz_class(A.size()) * B.size() * (mpz_class(static_cast<unsigned long>(q)) - A.size()) *
                          (mpz_class(static_cast<unsigned long>(q)) - B.size());
    const CyclotomicInt t = sum.norm_squared();
    const auto t_rat = t.as_rational();
    bool holds;
    if (t_rat) {
        holds = mpz_class(static_cast<unsigned long>(q)) * *t_rat <= rhs;
    } else {
        const CyclotomicInt slack = chi.ring.integer(rhs) - t.scalar_mul(static_cast<unsigned long>(q));
        holds = totally_nonnegative(slack);
    }
    return CharSumBound{std::move(sum), t_rat, holds};
}

} // namespace paleylab
