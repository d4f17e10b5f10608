#include "discont/errors.hpp"

namespace discont {

const char* errc_label(Errc code) noexcept {
  switch (code) {
    case Errc::empty_input: return "empty_input";
    case Errc::duplicate_point: return "duplicate_point";
    case Errc::empty_window: return "empty_window";
    case Errc::duplicate_abscissa: return "duplicate_abscissa";
    case Errc::not_strictly_monotone: return "not_strictly_monotone";
    case Errc::point_not_in_domain: return "point_not_in_domain";
    case Errc::target_out_of_range: return "target_out_of_range";
    case Errc::target_out_of_open_range: return "target_out_of_open_range";
    case Errc::not_digitally_continuous: return "not_digitally_continuous";
    case Errc::precondition_violated: return "precondition_violated";
    case Errc::empty_set: return "empty_set";
    case Errc::invalid_interval: return "invalid_interval";
    case Errc::nonfinite_value: return "nonfinite_value";
    case Errc::parse_error: return "parse_error";
    case Errc::unknown_command: return "unknown_command";
  }
  return "unknown_error";
}

}  // namespace discont
