#pragma once

#include <stdexcept>
#include <string>

namespace spinfold {

// Error conditions surfaced by the library. The CLI maps these to exit code 2.
enum class Errc {
  parse_error,
  not_strict,
  part_contains_one,
  not_contained,
  size_mismatch,
  too_few_variables,
  extraction_residue,
  non_divisor,
  unsupported_n,
  invalid_label,
  overflow,
  internal,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace spinfold
