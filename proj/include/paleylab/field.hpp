#ifndef PALEYLAB_FIELD_HPP
#define PALEYLAB_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "paleylab/numbers.hpp"

namespace paleylab {

// An element of F_{p^s} is identified by its canonical index: the base-p
// value of its coefficient vector (constant term first) with respect to the
// chosen modulus polynomial. Index 0 is the field zero and the elements of
// the prime subfield are the indices 0..p-1.
using Elem = u32;

// F_{p^s} with a deterministic presentation:
//   - modulus: the lexicographically smallest monic irreducible polynomial
//     of degree s over F_p (candidates ordered by the canonical index of
//     their non-leading coefficient vector);
//   - generator: the element of smallest canonical index whose
//     multiplicative order is exactly q - 1.
// Both choices are recorded in the descriptor so every report is replayable.
//
// The full discrete-log and exponential tables are built at construction,
// which caps q (default 2^20). Instances are immutable afterwards and safe
// to share across threads.
class FiniteField {
  public:
    static constexpr u64 kDefaultSizeCap = u64(1) << 20;

    static FiniteField make(u64 p, u32 s, u64 size_cap = kDefaultSizeCap);

    u64 p() const { return p_; }
    u32 s() const { return s_; }
    u64 q() const { return q_; }
    Elem generator() const { return gen_; }
    const std::vector<u32>& modulus() const { return modulus_; } // s+1 coeffs, constant first

    // --- element arithmetic ------------------------------------------------
    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const; // DivisionByZero on 0
    Elem pow(Elem a, u64 e) const;

    u64 dlog(Elem a) const;      // ZeroElement on 0; generator^result = a
    Elem exp(u64 k) const { return exp_[k % (q_ - 1)]; } // generator^k

    std::vector<u32> coeffs_of(Elem a) const;
    Elem elem_from_coeffs(const std::vector<u32>& coeffs) const;

    // --- traces and subfields ----------------------------------------------
    // Relative trace to the subfield of degree k (k | s): sum of the
    // Frobenius orbit a^(p^k)^i for i < s/k. k = 1 is the absolute trace.
    Elem rel_trace(u32 k, Elem a) const;

    // Trace from the degree-m subfield image down to degree k (k | m | s);
    // the argument must lie in the degree-m subfield.
    Elem rel_trace_between(u32 m, u32 k, Elem a) const;

    // Absolute trace as an integer in [0, p); table-backed, O(1).
    u64 abs_trace(Elem a) const { return trace_[a]; }

    // The p^k fixed points of x -> x^(p^k), ascending canonical index.
    std::vector<Elem> subfield_elements(u32 k) const;

    // {x^(p^r) - x : x in F_q} = kernel of the relative trace to degree r;
    // ascending canonical index, size q / p^r.
    std::vector<Elem> trace_kernel_image(u32 r) const;

    bool in_subfield(u32 k, Elem a) const; // fixed by Frobenius^k

    // "p^s/modulus-coeffs/generator-index", the cache / report key.
    std::string descriptor() const;

  private:
    FiniteField() = default;

    u64 p_ = 0;
    u64 q_ = 0;
    u32 s_ = 0;
    std::vector<u32> modulus_;
    Elem gen_ = 0;
    std::vector<u32> log_;   // size q; log_[0] unused
    std::vector<Elem> exp_;  // size q-1
    std::vector<u32> trace_; // absolute trace values, size q
};

} // namespace paleylab

#endif
