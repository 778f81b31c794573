#pragma once

#include <stdexcept>
#include <string>

namespace arcsing {

// Mathematical-domain failures: surfaced with exit code 2 by the CLI.
class MathDomainError : public std::runtime_error {
public:
    MathDomainError(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

struct ArcNotOnVariety : MathDomainError {
    explicit ArcNotOnVariety(const std::string& what)
        : MathDomainError("ArcNotOnVariety", what) {}
};

struct ArcInMaxMult : MathDomainError {
    explicit ArcInMaxMult(const std::string& what)
        : MathDomainError("ArcInMaxMult", what) {}
};

struct ElimNotSeparated : MathDomainError {
    explicit ElimNotSeparated(const std::string& what)
        : MathDomainError("ElimNotSeparated", what) {}
};

struct PrecisionExhausted : MathDomainError {
    explicit PrecisionExhausted(const std::string& what)
        : MathDomainError("PrecisionExhausted", what) {}
};

struct DivisionByNonUnit : MathDomainError {
    explicit DivisionByNonUnit(const std::string& what)
        : MathDomainError("DivisionByNonUnit", what) {}
};

struct NoMonomialSolution : MathDomainError {
    explicit NoMonomialSolution(const std::string& what)
        : MathDomainError("NoMonomialSolution", what) {}
};

struct WitnessRejected : MathDomainError {
    explicit WitnessRejected(const std::string& what)
        : MathDomainError("WitnessRejected", what) {}
};

struct MaxStepsExceeded : MathDomainError {
    explicit MaxStepsExceeded(const std::string& what)
        : MathDomainError("MaxStepsExceeded", what) {}
};

// Internal consistency failure; must not occur on valid inputs.
struct NonExactStrictTransform : std::logic_error {
    explicit NonExactStrictTransform(const std::string& what)
        : std::logic_error(what) {}
};

}  // namespace arcsing
