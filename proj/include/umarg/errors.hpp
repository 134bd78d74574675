#pragma once

#include <stdexcept>
#include <string>

namespace umarg {

// Base class for all library errors. kind() is a stable machine-readable
// tag (also used for the CLI's JSON error objects), exit_code() the CLI
// process exit code: 2 usage/parse, 3 domain/precondition, 4 budget,
// 5 numerical convergence.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what, int exit_code)
        : std::runtime_error(what), kind_(std::move(kind)), exit_code_(exit_code) {}
    const std::string& kind() const noexcept { return kind_; }
    int exit_code() const noexcept { return exit_code_; }

private:
    std::string kind_;
    int exit_code_;
};

#define UMARG_DEFINE_ERROR(NAME, CODE)                      \
    class NAME : public Error {                             \
    public:                                                 \
        explicit NAME(const std::string& what)              \
            : Error(#NAME, what, CODE) {}                   \
    }

UMARG_DEFINE_ERROR(ParseError, 2);
UMARG_DEFINE_ERROR(DomainError, 3);
UMARG_DEFINE_ERROR(SizeMismatch, 3);
UMARG_DEFINE_ERROR(EmptyPartition, 3);
UMARG_DEFINE_ERROR(ContainmentViolation, 3);
UMARG_DEFINE_ERROR(NotRectangular, 3);
UMARG_DEFINE_ERROR(NotHermitian, 3);
UMARG_DEFINE_ERROR(IndexOutOfRange, 3);
UMARG_DEFINE_ERROR(DivisibilityError, 3);
UMARG_DEFINE_ERROR(RankOutOfRange, 3);
UMARG_DEFINE_ERROR(WeightConstraintViolation, 3);
UMARG_DEFINE_ERROR(OverflowError, 3);
UMARG_DEFINE_ERROR(BudgetExceeded, 4);
UMARG_DEFINE_ERROR(ConvergenceFailure, 5);

#undef UMARG_DEFINE_ERROR

} // namespace umarg
