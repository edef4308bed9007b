#ifndef NUMU_ERROR_HPP
#define NUMU_ERROR_HPP

#include <stdexcept>
#include <string>

namespace numu {

enum class Errc {
  NotFresh,
  DuplicateConstructor,
  EmptyName,
  UndefinedName,
  Unguarded,
  ArityMismatch,
  UnknownConstructor,
  HoleInTerm,
  UnboundedSupport,
  ParseError,
  FreshnessViolation,  // internal: a freshening pass failed to run
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string msg, int line = 0, int col = 0)
      : std::runtime_error(std::move(msg)), code_(code), line_(line), col_(col) {}

  Errc code() const { return code_; }
  int line() const { return line_; }
  int col() const { return col_; }

  // Errors that signal a library bug rather than bad input.
  bool internal() const {
    return code_ == Errc::FreshnessViolation || code_ == Errc::Internal;
  }

 private:
  Errc code_;
  int line_;
  int col_;
};

[[noreturn]] inline void fail(Errc code, std::string msg) {
  throw Error(code, std::move(msg));
}

}  // namespace numu

#endif
