#ifndef PLCS_ERRORS_HPP
#define PLCS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace plcs {

/* Exit-code mapping used by the CLI: input errors -> 2, invariant violations -> 3,
   everything else that makes a run fail -> 1. */

struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

struct TruncationTooShort : InputError {
    explicit TruncationTooShort(const std::string& msg) : InputError(msg) {}
};

struct IndistinguishableAtTruncation : TruncationTooShort {
    explicit IndistinguishableAtTruncation(const std::string& msg) : TruncationTooShort(msg) {}
};

struct LNotSmooth : InputError {
    explicit LNotSmooth(const std::string& msg) : InputError(msg) {}
};

struct BranchNotSmooth : InputError {
    explicit BranchNotSmooth(const std::string& msg) : InputError(msg) {}
};

struct MNotAdmissible : InputError {
    explicit MNotAdmissible(const std::string& msg) : InputError(msg) {}
};

struct QIsCentre : InputError {
    explicit QIsCentre(const std::string& msg) : InputError(msg) {}
};

struct QNotOnL : InputError {
    explicit QNotOnL(const std::string& msg) : InputError(msg) {}
};

/* An inequality or identity that the underlying proofs guarantee failed at runtime.
   This always signals an implementation bug, never a property of the input. */
struct PaperInvariantViolation : std::logic_error {
    explicit PaperInvariantViolation(const std::string& msg) : std::logic_error(msg) {}
};

/* Cannot happen for valid input; kept as an assertion type. */
struct DisconnectedTree : PaperInvariantViolation {
    explicit DisconnectedTree(const std::string& msg) : PaperInvariantViolation(msg) {}
};

struct ReplayMismatch : std::runtime_error {
    explicit ReplayMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

inline void invariant(bool ok, const std::string& msg) {
    if (!ok) throw PaperInvariantViolation(msg);
}

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw InputError(msg);
}

} // namespace plcs

#endif
