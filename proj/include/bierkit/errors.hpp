#pragma once

#include <stdexcept>
#include <string>

namespace bierkit {

// Failure classes carried by every thrown Error.  The CLI maps these onto its
// exit-code contract: caps -> 3, malformed input -> 2, violated properties -> 1.
enum class errc {
  not_graded,
  no_unique_bottom,
  no_unique_top,
  disconnected_from_bottom,
  redundant_cover,
  not_comparable,
  not_bounded,
  too_large,
  too_many,
  degree_too_high,
  bad_parameters,
  not_lower_eulerian,
  definition_mismatch,
  face_count_mismatch,
  not_downward_closed,
  not_proper,
  not_maximal,
  would_empty,
  eulerian_violation,
  rank_out_of_range,
  closed_form_mismatch,
  witness_mismatch,
  pattern_ambiguous,
  unlabeled_cover,
  parse_error,
  io_error,
  internal_check,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool ok, errc code, const std::string& message) {
  if (!ok) fail(code, message);
}

}  // namespace bierkit
