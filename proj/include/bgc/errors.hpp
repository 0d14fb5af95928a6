#pragma once

#include <stdexcept>
#include <string>

namespace bgc {

// Base class for everything this library throws.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- input errors: the caller handed us something unusable -----------------

struct InvalidDimensions : Error {
    explicit InvalidDimensions(const std::string& msg) : Error("InvalidDimensions: " + msg) {}
};

struct MalformedComplex : Error {
    explicit MalformedComplex(const std::string& msg) : Error("MalformedComplex: " + msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("ParseError: " + msg) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error("ValidationError: " + msg) {}
};

struct NotACocycle : Error {
    explicit NotACocycle(const std::string& msg) : Error("NotACocycle: " + msg) {}
};

struct NotInA : Error {
    explicit NotInA(const std::string& msg) : Error("NotInA: " + msg) {}
};

struct NotInJ : Error {
    explicit NotInJ(const std::string& msg) : Error("NotInJ: " + msg) {}
};

struct NotPoisson : Error {
    explicit NotPoisson(const std::string& msg) : Error("NotPoisson: " + msg) {}
};

struct NonVanishingConstantTerm : Error {
    explicit NonVanishingConstantTerm(const std::string& msg)
        : Error("NonVanishingConstantTerm: " + msg) {}
};

struct WrongSpecialization : Error {
    explicit WrongSpecialization(const std::string& msg) : Error("WrongSpecialization: " + msg) {}
};

struct GenerationExhausted : Error {
    explicit GenerationExhausted(const std::string& msg) : Error("GenerationExhausted: " + msg) {}
};

// --- engine bugs: a cross-check that can never fail on valid input did -----

struct EngineBug : Error {
    explicit EngineBug(const std::string& kind, const std::string& msg)
        : Error(kind + " (engine bug): " + msg) {}
};

struct ClosureFailure : EngineBug {
    explicit ClosureFailure(const std::string& msg) : EngineBug("ClosureFailure", msg) {}
};

struct PrecocycleMismatch : EngineBug {
    explicit PrecocycleMismatch(const std::string& msg) : EngineBug("PrecocycleMismatch", msg) {}
};

struct MismatchAtInfinity : EngineBug {
    explicit MismatchAtInfinity(const std::string& msg) : EngineBug("MismatchAtInfinity", msg) {}
};

struct ExactnessFailure : EngineBug {
    explicit ExactnessFailure(const std::string& msg) : EngineBug("ExactnessFailure", msg) {}
};

struct CrossCheckFailure : EngineBug {
    explicit CrossCheckFailure(const std::string& msg) : EngineBug("CrossCheckFailure", msg) {}
};

struct DivisionFailure : EngineBug {
    explicit DivisionFailure(const std::string& msg) : EngineBug("DivisionFailure", msg) {}
};

}  // namespace bgc
