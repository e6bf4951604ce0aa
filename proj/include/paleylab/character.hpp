#ifndef PALEYLAB_CHARACTER_HPP
#define PALEYLAB_CHARACTER_HPP

#include <optional>
#include <string>
#include <vector>

#include "paleylab/cyclotomic.hpp"
#include "paleylab/field.hpp"

namespace paleylab {

// Multiplicative character of F_q, pinned to the field's canonical
// generator g: chi(g^k) = zeta_d^(j k), extended by chi(0) = 0. The actual
// order of chi is d / gcd(d, j); j = 0 gives the trivial character. The
// field must outlive the character.
struct Character {
    const FiniteField* field;
    u32 d; // modulus of the exponent lattice, d | q-1, d > 1
    u32 j;
    CyclotomicRing ring; // conductor d

    bool is_trivial() const { return j % d == 0; }
    u32 order() const { return d / static_cast<u32>(gcd(d, j % d == 0 ? d : j % d)); }

    CyclotomicInt eval(Elem a) const; // 0 if a = 0, else zeta_d^(j log a)
    u64 exponent(Elem a) const;       // j * log(a) mod d; requires a != 0
};

Character make_character(const FiniteField& F, u32 d, u32 j);

struct GaussSumValue {
    CyclotomicInt value; // in Z[zeta_lcm(p,d)]
    u64 q;
    std::optional<int> normalized_sign; // +-1 when q is a square and value = +-sqrt(q)
};

// The defining sum  sum_c chi(c) zeta_p^Tr(shift * c),  evaluated exactly.
GaussSumValue gauss_sum(const Character& chi, Elem shift = 1);

// Purity: some nonzero integral power of G(chi) is real. Decided exactly:
// the roots of unity of Q(zeta_m) are +-zeta_m^k, so G is pure iff
// G^2 = +-q zeta_m^k for some k, which also pins G^(2 lcm(p,d)) = q^lcm(p,d).
struct PurityVerdict {
    bool pure;
    u64 witness_exponent; // an exponent n with G^n real (1, or 2t)
};
PurityVerdict is_pure(const Character& chi);

// Smallest t >= 1 with p^t = -1 (mod d), if any power of p hits -1.
std::optional<u64> is_supersingular(u64 p, u64 d);

// Closed forms: sign * i^(i_factor) * sqrt(p^v). For even v this is the
// rational integer sign * p^(v/2); for odd v the square root stays symbolic
// and only the sign/i tags plus the exact square are exposed.
struct ClosedFormGauss {
    int sign;      // +1 or -1
    bool i_factor; // multiply by the imaginary unit
    u64 p;
    u32 v; // G relates to the field F_{p^v}

    bool rational() const { return v % 2 == 0 && !i_factor; }
    mpz_class rational_value() const; // requires rational()
    mpz_class square() const;         // (-1)^(i_factor) * p^v, always exact
    std::string str() const;
};

ClosedFormGauss formula_quadratic(u64 p, u32 s);
ClosedFormGauss formula_stickelberger(u64 q, u64 d);
ClosedFormGauss formula_semiprimitive(u64 p, u64 d, u32 v);
ClosedFormGauss formula_peisert_quartic(u64 p, u32 s); // order-4 chi over F_{p^2s}, p = 3 mod 4

// S(q, A; c) = sum_{a in A} zeta_p^Tr(ac), exact in Z[zeta_p].
CyclotomicInt exp_sum(const FiniteField& F, const std::vector<Elem>& A, Elem c);

// sum_{c != 0} |S(q,A;c)|^2, which must equal q|A| - |A|^2; computes the
// left side exactly and throws ParsevalViolation if the identity fails
// (it can only fail on an arithmetic bug). Returns the common value.
mpz_class parseval_sum(const FiniteField& F, const std::vector<Elem>& A);

struct CharSumBound {
    CyclotomicInt sum;                    // sum_{a,b} chi(a+b) in Z[zeta_d]
    std::optional<mpz_class> abs_squared; // |sum|^2 when it is rational
    bool holds; // |sum|^2 <= q|A||B|(1-|A|/q)(1-|B|/q), decided exactly
};

// The double character sum and its square-root bound. When |sum|^2 is
// irrational the bound is certified through all Galois conjugates at once
// (totally_nonnegative), which is stronger than the single embedding.
CharSumBound double_char_sum_bound(const FiniteField& F, const std::vector<Elem>& A,
                                   const std::vector<Elem>& B, const Character& chi);

} // namespace paleylab

#endif
