#pragma once

#include <exception>
#include <string>
#include <vector>

namespace lpa {

// Machine-readable failure categories. The CLI maps capacity errors to exit
// status 3 and every other error to exit status 2.
enum class ErrorKind {
  unknown_vertex,
  unknown_edge,
  duplicate_name,
  not_hereditary,
  not_saturated,
  not_breaking_subset,
  invalid_cycle,
  invalid_presentation,
  invalid_polynomial,
  graph_mismatch,
  not_annihilator_ideal,
  unnamed_edge,
  parse,
  capacity,
  contract,
};

const char* to_string(ErrorKind kind);

// Errors carry the offending vertex/edge names as data, so callers can emit
// structured diagnostics instead of scraping message strings.
class Error : public std::exception {
 public:
  Error(ErrorKind kind, std::string message, std::vector<std::string> vertices = {},
        std::vector<std::string> edges = {})
      : kind_(kind),
        message_(std::move(message)),
        vertices_(std::move(vertices)),
        edges_(std::move(edges)) {}

  const char* what() const noexcept override { return message_.c_str(); }
  ErrorKind kind() const { return kind_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::string>& edges() const { return edges_; }

 private:
  ErrorKind kind_;
  std::string message_;
  std::vector<std::string> vertices_;
  std::vector<std::string> edges_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

// Raised when an input exceeds a hard implementation bound (vertex cap,
// enumeration cap, product-grid cap).
class CapacityError : public Error {
 public:
  explicit CapacityError(std::string message)
      : Error(ErrorKind::capacity, std::move(message)) {}
};

// A violated internal guarantee. Seeing one of these means a bug in this
// library, not bad user input.
class ContractViolation : public Error {
 public:
  explicit ContractViolation(std::string message)
      : Error(ErrorKind::contract, std::move(message)) {}
};

// Lexical/syntactic/semantic failure while reading the workspace DSL,
// with a 1-based source position.
class ParseError : public ValidationError {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column)
      : ValidationError(ErrorKind::parse, std::move(message)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lpa
