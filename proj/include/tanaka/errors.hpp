#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tanaka {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Incompatible sizes of vectors, matrices or subspaces.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A constructed bracket fails the Jacobi identity; `witness` names the triple.
class JacobiViolation : public Error {
public:
    JacobiViolation(std::string witness)
        : Error("Jacobi identity fails on " + witness), witness_(std::move(witness)) {}
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

/// A cocycle or bracket term does not respect the grading.
class DegreeViolation : public Error {
public:
    using Error::Error;
};

/// The vector passed as a rank-one witness does not have rank ad y = 1.
class WitnessInvalid : public Error {
public:
    using Error::Error;
};

/// Buchberger produced an S-polynomial above the configured degree cap.
class CapExceeded : public Error {
public:
    explicit CapExceeded(unsigned degree)
        : Error("Groebner basis computation exceeded degree cap at degree " +
                std::to_string(degree)),
          degree_(degree) {}
    unsigned degree() const noexcept { return degree_; }

private:
    unsigned degree_;
};

/// Lower prolongation layers are missing or belong to another algebra.
class LayerMismatch : public Error {
public:
    using Error::Error;
};

/// A metabelian algebra request whose forms do not span the degree -2 layer.
class NotGenerated : public Error {
public:
    using Error::Error;
};

/// A matrix required to be skew-symmetric is not.
class NotSkew : public Error {
public:
    using Error::Error;
};

/// Failure while reading the algebra text format.
class ParseError : public Error {
public:
    enum class Kind { Syntax, UnknownLabel, DuplicateBracket, GradingViolation };

    ParseError(Kind kind, std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + kind_name(kind) + ": " + what),
          kind_(kind), line_(line) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }

    static std::string kind_name(Kind k) {
        switch (k) {
        case Kind::Syntax: return "SyntaxError";
        case Kind::UnknownLabel: return "UnknownLabel";
        case Kind::DuplicateBracket: return "DuplicateBracket";
        case Kind::GradingViolation: return "GradingViolation";
        }
        return "ParseError";
    }

private:
    Kind kind_;
    std::size_t line_;
};

} // namespace tanaka
