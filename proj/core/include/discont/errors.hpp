#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace discont {

enum class Errc {
  empty_input,
  duplicate_point,
  empty_window,
  duplicate_abscissa,
  not_strictly_monotone,
  point_not_in_domain,
  target_out_of_range,
  target_out_of_open_range,
  not_digitally_continuous,
  precondition_violated,
  empty_set,
  invalid_interval,
  nonfinite_value,
  parse_error,
  unknown_command,
};

/// Stable snake_case identifier for an error code, as emitted in reports.
const char* errc_label(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// A named solver/operation precondition failed; which() identifies it.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string which, const std::string& message)
      : Error(Errc::precondition_violated, message), which_(std::move(which)) {}

  const std::string& which() const noexcept { return which_; }

 private:
  std::string which_;
};

/// Dataset parsing failure. line is 1-based; 0 means the input is not
/// line-oriented (JSON) or the location is unknown. underlying keeps the
/// constructor error code when a constructor rejected parsed data.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason,
             Errc underlying = Errc::parse_error)
      : Error(underlying, reason), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace discont
