#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wigner {

// Error kinds a caller can act on. ShapeViolation is special: it signals an
// internal inconsistency (a bug, or a non-null momentum that slipped past a
// loosened tolerance), never a recoverable input condition.
enum class ErrorKind {
    NotNull,
    DegenerateMomentum,
    NotHermitian,
    BadAxis,
    SuperluminalVelocity,
    SouthPoleSingularity,
    ShapeViolation,
    DegenerateBranch,
    ZeroState,
    BadPhase,
    BadDeterminant,
};

const char* to_string(ErrorKind kind);

class DomainError : public std::runtime_error {
  public:
    DomainError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

// Raised by the pipeline DSL parser; token_position is 1-based.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t token_position, const std::string& what)
        : std::runtime_error("parse error at token " + std::to_string(token_position) + ": " + what),
          token_position_(token_position) {}

    std::size_t token_position() const { return token_position_; }

  private:
    std::size_t token_position_;
};

}  // namespace wigner
