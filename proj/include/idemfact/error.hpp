#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idemfact {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! An algebra descriptor with unsupported parameters (rank < 2, p not a
  //! small prime, universe above the cap).
  class InvalidAlgebra : public Error {
   public:
    using Error::Error;
  };

  //! An element code outside the universe of the algebra.
  class InvalidElement : public Error {
   public:
    using Error::Error;
  };

  //! Two values built over different algebras were combined.
  class AlgebraMismatch : public Error {
   public:
    using Error::Error;
  };

  //! A documented precondition of an operation does not hold.
  class PreconditionViolation : public Error {
   public:
    using Error::Error;
  };

  //! A partial endomorphism was applied outside its domain.
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  //! The endomorphism handed to the factorizer is an automorphism.
  class NotSingular : public Error {
   public:
    using Error::Error;
  };

  //! A partial endomorphism with empty image cannot be totalized.
  class DegenerateRank : public Error {
   public:
    using Error::Error;
  };

  //! An enumeration or search would exceed its configured budget.
  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  //! Text that does not denote an endomorphism of the given algebra.
  class MalformedInput : public Error {
   public:
    MalformedInput(std::size_t position, std::string const& reason)
        : Error("malformed input at position " + std::to_string(position)
                + ": " + reason),
          _position(position),
          _reason(reason) {}

    [[nodiscard]] std::size_t position() const noexcept {
      return _position;
    }
    [[nodiscard]] std::string const& reason() const noexcept {
      return _reason;
    }

   private:
    std::size_t _position;
    std::string _reason;
  };

  //! A runtime check inside the factorization pipeline failed. By the
  //! Fountain-Lewin theorem this indicates a bug; stage() names the pipeline
  //! step that produced the bad value.
  class InvariantViolation : public Error {
   public:
    InvariantViolation(std::string stage, std::string const& what)
        : Error("invariant violated in stage '" + stage + "': " + what),
          _stage(std::move(stage)) {}

    [[nodiscard]] std::string const& stage() const noexcept {
      return _stage;
    }

   private:
    std::string _stage;
  };

}  // namespace idemfact
