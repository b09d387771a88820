#pragma once

#include <stdexcept>
#include <string>

namespace l0 {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different probability spaces.
class SpaceMismatch : public Error {
 public:
  explicit SpaceMismatch(const std::string& what) : Error("space mismatch: " + what) {}
};

/// Vector or matrix dimensions do not agree.
class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

/// An argument violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Order comparison requested on a value with a nonzero imaginary part.
class ComplexComparison : public Error {
 public:
  explicit ComplexComparison(const std::string& op)
      : Error(op + ": order comparison of complex-valued random variables") {}
};

/// The hereditarily disjoint stratum of a point and a submodule would be null.
class NoDisjointStratum : public Error {
 public:
  NoDisjointStratum() : Error("no hereditarily disjoint stratum: the point lies in the submodule a.s.") {}
};

/// Helly operation requested on an instance with the wrong verdict.
class VerdictMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; carries file, line and (when known) atom id.
class ParseError : public Error {
 public:
  ParseError(const std::string& file, std::size_t line, const std::string& message,
             const std::string& atom = {})
      : Error(compose(file, line, message, atom)), file_(file), line_(line), atom_(atom) {}

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }
  const std::string& atom() const { return atom_; }

 private:
  static std::string compose(const std::string& file, std::size_t line, const std::string& message,
                             const std::string& atom) {
    std::string s = file;
    if (line > 0) s += ":" + std::to_string(line);
    s += ": " + message;
    if (!atom.empty()) s += " (atom " + atom + ")";
    return s;
  }

  std::string file_;
  std::size_t line_;
  std::string atom_;
};

}  // namespace l0
