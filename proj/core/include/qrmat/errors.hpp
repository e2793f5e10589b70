#pragma once

#include <stdexcept>
#include <string>

namespace qrmat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct InexactDivision : Error {
    explicit InexactDivision(const std::string& what) : Error("inexact division: " + what) {}
};

struct PoleAtPoint : Error {
    explicit PoleAtPoint(const std::string& what) : Error("pole at evaluation point: " + what) {}
};

struct BadInstance : Error {
    using Error::Error;
};

struct SuperDataMismatch : Error {
    SuperDataMismatch() : Error("operands built over different super data") {}
};

struct UnknownGenerator : Error {
    explicit UnknownGenerator(const std::string& what) : Error("unknown generator: " + what) {}
};

struct NotLyndon : Error {
    explicit NotLyndon(const std::string& what) : Error("not a Lyndon word: " + what) {}
};

struct SimpleRoot : Error {
    SimpleRoot() : Error("simple root has no costandard split") {}
};

struct TooLong : Error {
    explicit TooLong(const std::string& what) : Error("word too long: " + what) {}
};

struct IsotropicPower : Error {
    IsotropicPower() : Error("power >= 2 of an isotropic odd root vector vanishes") {}
};

struct ClosedFormMismatch : Error {
    explicit ClosedFormMismatch(const std::string& what) : Error("closed-form mismatch: " + what) {}
};

struct FactorizationMismatch : Error {
    explicit FactorizationMismatch(const std::string& what) : Error("factorization mismatch: " + what) {}
};

struct AnnihilationFailure : Error {
    explicit AnnihilationFailure(const std::string& what) : Error("annihilation check failed: " + what) {}
};

struct NotEigenvector : Error {
    explicit NotEigenvector(const std::string& what) : Error("not an eigenvector: " + what) {}
};

struct RelationFailure : Error {
    explicit RelationFailure(const std::string& what) : Error("defining relation violated: " + what) {}
};

struct EigenvalueMismatch : Error {
    explicit EigenvalueMismatch(const std::string& what) : Error("eigenvalue mismatch: " + what) {}
};

}  // namespace qrmat
