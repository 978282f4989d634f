#pragma once

#include <stdexcept>
#include <string>

namespace fuzzitop {

// Operands built over different carriers, unknown labels, malformed inputs.
struct StructuralError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An enumeration-heavy operation was asked to run above its cost cap.
struct CapExceeded : std::length_error {
  using std::length_error::length_error;
};

// A declared operation precondition failed (reported apart from the degree).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Formula text rejected by the parser; carries source position.
struct FormulaError : std::runtime_error {
  FormulaError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " at " + std::to_string(line) + ":" +
                           std::to_string(col)),
        line(line),
        col(col) {}
  int line;
  int col;
};

}  // namespace fuzzitop
