#pragma once

#include <stdexcept>
#include <string>

namespace filtralab {

// Bad arguments: ring mismatch, wrong vector length, malformed indices.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Mathematically undefined request: colength of a non-m-primary ideal,
// colon by the zero ideal.
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Out of the artifact's supported territory (integral closure over a
// quotient ambient, dimension-2-only tables elsewhere).
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// No stable polynomial fit within the configured base advance bound, or a
// verified fit with non-integer coefficients.
struct fit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ratliff-Rush colon chain did not stabilize within k_max. Carries the
// lengths of the partial chain for diagnosis.
struct unstable_error : std::runtime_error {
  unstable_error(const std::string& what, std::vector<std::string> chain)
      : std::runtime_error(what), partial_chain(std::move(chain)) {}
  std::vector<std::string> partial_chain;
};

struct parse_error : std::runtime_error {
  parse_error(const std::string& what, int line, int col)
      : std::runtime_error(what), line(line), col(col) {}
  int line;
  int col;
};

} // namespace filtralab
