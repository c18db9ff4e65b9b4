#ifndef BERGBALL_ERRORS_HPP
#define BERGBALL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bergball {

/** Base class for every error raised by the library. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define BERGBALL_DEFINE_ERROR(NAME)                       \
    class NAME : public Error {                           \
    public:                                               \
        explicit NAME(const std::string& msg)             \
            : Error(std::string(#NAME ": ") + msg) {}     \
    }

BERGBALL_DEFINE_ERROR(DimensionMismatch);
BERGBALL_DEFINE_ERROR(ParseError);
BERGBALL_DEFINE_ERROR(DivisionByZero);
BERGBALL_DEFINE_ERROR(NotHolomorphic);
BERGBALL_DEFINE_ERROR(NotPluriharmonic);
BERGBALL_DEFINE_ERROR(DivisionFailure);
BERGBALL_DEFINE_ERROR(DegreeTooLarge);
BERGBALL_DEFINE_ERROR(PoleAtPoint);
BERGBALL_DEFINE_ERROR(UnknownKernel);
BERGBALL_DEFINE_ERROR(NonIntegrable);
BERGBALL_DEFINE_ERROR(GuardBandViolation);
BERGBALL_DEFINE_ERROR(UnsupportedPoles);
BERGBALL_DEFINE_ERROR(ImproperFunction);
BERGBALL_DEFINE_ERROR(PreconditionViolation);
BERGBALL_DEFINE_ERROR(UsageError);

#undef BERGBALL_DEFINE_ERROR

/**
 * Raised when a polynomial is provably outside the admissible range of the
 * transform (or of the finite product calculus).  Carries the witnessing
 * derivative pair and its total degree so callers can surface it.
 */
class NotRepresentable : public Error {
public:
    NotRepresentable(const std::string& msg, int j, int l, int degree, int bound)
        : Error("NotRepresentable: " + msg),
          deriv_j(j), deriv_l(l), witness_degree(degree), degree_bound(bound) {}

    int deriv_j;          // d/dz_j of the witness derivative pair (1-based)
    int deriv_l;          // d/dzbar_l of the witness derivative pair (1-based)
    int witness_degree;   // total degree of that mixed derivative
    int degree_bound;     // the admissible bound it exceeds
};

} // namespace bergball

#endif
