#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hermia {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LoopRejected : public Error {
 public:
  using Error::Error;
};

/// The same vertex pair received contradictory edge kinds.
class Conflict : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

/// An exact computation produced a value that its invariants forbid
/// (non-real characteristic coefficient, inexact division).
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// A diagonal switching matrix produced an entry outside {0, 1, i, -i}.
class NotAppropriate : public Error {
 public:
  using Error::Error;
};

class NotEquitable : public Error {
 public:
  NotEquitable(std::size_t row_block, std::size_t col_block, std::size_t row_a,
               std::size_t row_b);

  std::size_t row_block() const { return row_block_; }
  std::size_t col_block() const { return col_block_; }
  std::size_t row_a() const { return row_a_; }
  std::size_t row_b() const { return row_b_; }

 private:
  std::size_t row_block_, col_block_, row_a_, row_b_;
};

class PatternMismatch : public Error {
 public:
  using Error::Error;
};

/// A bounded search exhausted its node budget before deciding.
class Timeout : public Error {
 public:
  Timeout(std::string what, std::size_t nodes_visited)
      : Error(std::move(what)), nodes_visited_(nodes_visited) {}

  std::size_t nodes_visited() const { return nodes_visited_; }

 private:
  std::size_t nodes_visited_;
};

/// Malformed text input; carries the source name, 1-based line and token.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, std::string token,
             const std::string& message);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  const std::string& token() const { return token_; }

 private:
  std::string source_;
  std::size_t line_;
  std::string token_;
};

}  // namespace hermia
