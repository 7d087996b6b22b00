#pragma once

#include <stdexcept>
#include <string>

namespace ppclab {

// Error categories; the CLI maps them onto process exit codes.
enum class errc {
  domain_error,            // bad argument / precondition violated
  io_error,                // missing file, unwritable path
  parse_error,             // malformed row or token
  column_not_increasing,   // sequence invariant violated
  validation_error,        // experiment config rejected
  task_error,              // experiment task failed
  quadrature_error,        // numerical estimate failed to settle
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace ppclab
