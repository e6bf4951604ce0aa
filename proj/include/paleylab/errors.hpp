#ifndef PALEYLAB_ERRORS_HPP
#define PALEYLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace paleylab {

// Every failure mode of the toolkit carries one of these codes, so callers
// (in particular the CLI) can map failures to exit codes without string
// matching.
enum class Errc {
    not_prime,
    even_characteristic,
    size_cap_exceeded,
    division_by_zero,
    zero_element,
    degree_not_dividing,
    conductor_cap_exceeded,
    ring_mismatch,
    order_not_dividing,
    trivial_character,
    not_coprime,
    case_not_applicable,
    parseval_violation,
    congruence_violation,
    not_square,
    not_peisert_field,
    degree_mismatch,
    solver_cap_exceeded,
    anchors_not_adjacent,
    enumeration_cap_exceeded,
    wrong_size,
    not_a_clique,
    brute_force_cap_exceeded,
    io_failure,
    internal,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

    // Cap violations get their own exit code (3) in the CLI.
    bool is_cap() const {
        return code_ == Errc::size_cap_exceeded || code_ == Errc::conductor_cap_exceeded ||
               code_ == Errc::solver_cap_exceeded || code_ == Errc::enumeration_cap_exceeded ||
               code_ == Errc::brute_force_cap_exceeded;
    }

  private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace paleylab

#endif
