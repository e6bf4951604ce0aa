#ifndef PALEYLAB_CYCLOTOMIC_HPP
#define PALEYLAB_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "paleylab/numbers.hpp"

namespace paleylab {

// Arithmetic in Z[zeta_m], the ring of integers spanned by the m-th roots of
// unity, represented on the power basis 1, zeta, ..., zeta^(phi(m)-1) modulo
// the m-th cyclotomic polynomial. Every value the toolkit ever compares --
// character values, exponential sums, Gauss sums -- lives here, so equality
// is coefficient-vector equality and no verdict touches floating point.
//
// Rings are immutable and shared; two rings with the same conductor are
// interchangeable.

class CyclotomicInt;

class CyclotomicRing {
  public:
    static constexpr u32 kDefaultConductorCap = 10000;

    // Cached constructor; computes Phi_m by exact division of x^m - 1 by the
    // cyclotomic polynomials of the proper divisors of m.
    static CyclotomicRing make(u32 m, u32 cap = kDefaultConductorCap);

    u32 conductor() const;
    u32 degree() const; // phi(m) = deg Phi_m
    const std::vector<mpz_class>& cyclo_poly() const; // constant term first, monic

    CyclotomicInt zero() const;
    CyclotomicInt one() const;
    CyclotomicInt integer(const mpz_class& n) const;
    CyclotomicInt zeta_pow(i64 k) const; // zeta_m^k, reduced

    // sum_e counts[e] * zeta^e for an exponent histogram of length m.
    // This is how the character-sum code aggregates q-term sums cheaply.
    CyclotomicInt from_exponent_counts(const std::vector<i64>& counts) const;

    bool operator==(const CyclotomicRing& o) const { return conductor() == o.conductor(); }

    struct Data;

  private:
    explicit CyclotomicRing(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
    friend class CyclotomicInt;
};

class CyclotomicInt {
  public:
    CyclotomicInt(CyclotomicRing ring, std::vector<mpz_class> reduced_coeffs);

    const CyclotomicRing& ring() const { return ring_; }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    CyclotomicInt operator+(const CyclotomicInt& o) const;
    CyclotomicInt operator-(const CyclotomicInt& o) const;
    CyclotomicInt operator*(const CyclotomicInt& o) const;
    CyclotomicInt operator-() const;
    CyclotomicInt scalar_mul(const mpz_class& n) const;
    CyclotomicInt pow(u64 e) const;

    // Galois substitution zeta -> zeta^k for gcd(k, m) = 1. Complex
    // conjugation is the case k = m - 1.
    CyclotomicInt galois(u64 k) const;
    CyclotomicInt conj() const;

    // |x|^2 = x * conj(x); real, and rational for every Gauss-sum value the
    // toolkit checks against Lemma-level identities.
    CyclotomicInt norm_squared() const { return *this * conj(); }

    bool is_zero() const;
    bool operator==(const CyclotomicInt& o) const;
    bool operator!=(const CyclotomicInt& o) const { return !(*this == o); }

    // The integer n when this element equals n * 1 in reduced form.
    std::optional<mpz_class> as_rational() const;

    // "m:[c0,c1,...]" -- the wire form used in JSON reports.
    std::string serialize() const;

    // Re-expresses this element in a ring whose conductor is a multiple of
    // ours, via zeta_m = zeta_M^(M/m). Never a numerical approximation.
    CyclotomicInt embed_into(const CyclotomicRing& bigger) const;

  private:
    CyclotomicRing ring_;
    std::vector<mpz_class> c_;
};

// True when every Galois conjugate of the (totally real) element x is >= 0.
// Decided exactly: the product of (t - sigma(x)) over all conjugates has
// rational coefficients, and a monic real-rooted integer polynomial has all
// roots >= 0 iff its coefficients alternate in sign. Used to certify
// character-sum inequalities whose |sum|^2 is irrational.
bool totally_nonnegative(const CyclotomicInt& x);

} // namespace paleylab

#endif
