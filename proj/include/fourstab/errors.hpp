#pragma once

#include <stdexcept>
#include <string>

namespace fourstab {

// Base class for all domain errors raised by the library. Input-syntax
// problems (expression grammar, JSON form files) throw ParseError instead,
// so front ends can distinguish usage errors from domain errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Exact arithmetic exceeded the 64-bit working range. Results are never
// silently wrapped; callers see this instead of a wrong answer.
struct ArithmeticOverflow : Error {
    explicit ArithmeticOverflow(const std::string& what) : Error(what) {}
};

struct NonSymmetric : Error {
    explicit NonSymmetric(const std::string& what) : Error(what) {}
};

struct Degenerate : Error {
    explicit Degenerate(const std::string& what) : Error(what) {}
};

struct NotUnimodular : Error {
    explicit NotUnimodular(const std::string& what) : Error(what) {}
};

// Even unimodular forms of signature congruent to 8 mod 16 (such as the E8
// form itself) have no smooth simply-connected representative.
struct EvenSignatureNotDivisibleBy16 : Error {
    explicit EvenSignatureNotDivisibleBy16(const std::string& what) : Error(what) {}
};

struct RokhlinViolation : Error {
    explicit RokhlinViolation(const std::string& what) : Error(what) {}
};

struct NotSpin : Error {
    explicit NotSpin(const std::string& what) : Error(what) {}
};

struct NotCharacteristic : Error {
    explicit NotCharacteristic(const std::string& what) : Error(what) {}
};

// Internal consistency assertion surfaced as an exception instead of UB.
struct InternalDivisibility : Error {
    explicit InternalDivisibility(const std::string& what) : Error(what) {}
};

struct StageTooSmall : Error {
    explicit StageTooSmall(const std::string& what) : Error(what) {}
};

struct UnknownGeneratorInvariant : Error {
    explicit UnknownGeneratorInvariant(const std::string& what) : Error(what) {}
};

struct MixedDenominators : Error {
    explicit MixedDenominators(const std::string& what) : Error(what) {}
};

}  // namespace fourstab
