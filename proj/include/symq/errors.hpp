#ifndef SYMQ_ERRORS_HPP
#define SYMQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symq {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A file or JSON document does not match the expected schema.
/// Distinct from axiom violations: the data never reached validation.
struct FormatError : Error {
  using Error::Error;
};

/// Presentation text could not be tokenized or parsed.
struct ParseError : Error {
  int line = 0;
  int column = 0;
  ParseError(int line_, int column_, const std::string& message)
      : Error("parse error at " + std::to_string(line_) + ":" +
              std::to_string(column_) + ": " + message),
        line(line_),
        column(column_) {}
};

/// A relator token names a generator that was never declared.
struct UnknownGeneratorError : ParseError {
  std::string name;
  UnknownGeneratorError(int line_, int column_, const std::string& name_)
      : ParseError(line_, column_, "unknown generator '" + name_ + "'"),
        name(name_) {}
};

/// A well-formed table that fails one of the three quandle axioms.
struct AxiomError : Error {
  using Error::Error;
};

/// A well-formed permutation that is not a good involution of its quandle.
struct InvolutionError : Error {
  using Error::Error;
};

/// Conjugation leaves the requested subset.
struct NotClosedError : Error {
  int x, y;
  NotClosedError(int x_, int y_)
      : Error("subset not closed under conjugation: witness pair (" +
              std::to_string(x_) + ", " + std::to_string(y_) + ")"),
        x(x_),
        y(y_) {}
};

/// The symmetric conjugation closure would contain the group identity.
struct ContainsIdentityError : Error {
  ContainsIdentityError()
      : Error("generating set meets the identity; the closure cannot avoid "
              "it") {}
};

struct NotConnectedError : Error {
  NotConnectedError() : Error("quandle is not connected") {}
};

struct NotTwistedWirtingerError : Error {
  NotTwistedWirtingerError()
      : Error("presentation is not twisted Wirtinger") {}
};

/// coset_group_table needs a table enumerated over the trivial subgroup.
struct NotRegularError : Error {
  NotRegularError()
      : Error("coset table was not enumerated over the trivial subgroup") {}
};

struct LimitExceededError : Error {
  using Error::Error;
};

struct SizeLimitError : Error {
  using Error::Error;
};

}  // namespace symq

#endif  // SYMQ_ERRORS_HPP
