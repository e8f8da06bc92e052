#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace multisign {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries a 0-based byte offset into the input.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t position)
        : Error(message + " (at byte " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Well-formed input that violates a domain rule (sign range, shape, ...).
class SemanticError : public Error {
public:
    using Error::Error;
};

/// A difference would leave the nonnegative magnitude space.
class UnderflowError : public SemanticError {
public:
    using SemanticError::SemanticError;
};

/// Multiplicative inverse requested for zero.
class ZeroInverseError : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class SignOutOfRange : public SemanticError {
public:
    using SemanticError::SemanticError;
};

/// Sign 0 is reserved for the additive identity and cannot carry a
/// nonzero magnitude.
class ZeroSignNonzeroMagnitude : public SemanticError {
public:
    using SemanticError::SemanticError;
};

/// Operands come from carriers with different sign counts.
class SignCountMismatch : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class ZeroCoefficient : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class ShapeMismatch : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class NotTwoSigns : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class WrongSignCount : public SemanticError {
public:
    using SemanticError::SemanticError;
};

/// An addition chain too long for full grouping enumeration.
class ChainTooLong : public SemanticError {
public:
    using SemanticError::SemanticError;
};

/// A tuple with zero slots cannot be inverted; records which slots.
class NonInvertibleTuple : public SemanticError {
public:
    NonInvertibleTuple(const std::string& message, std::vector<std::size_t> slots)
        : SemanticError(message), slots_(std::move(slots)) {}

    const std::vector<std::size_t>& slots() const noexcept { return slots_; }

private:
    std::vector<std::size_t> slots_;
};

/// A law sweep would exceed the configured case budget.
class DomainTooLarge : public Error {
public:
    using Error::Error;
};

}  // namespace multisign
