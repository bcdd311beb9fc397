#pragma once

#include <stdexcept>
#include <string>

namespace ykm {

enum class errc {
  unsupported_rank,
  not_dominant,
  resource_limit,
  bad_params,
  validation_failure,
  unknown,
  multiplicity_failure,
  inconsistent_labels,
  non_dominant_projection,
  label_absent,
  pole,
  path_inconsistent,
  not_in_catalogue,
  parse_error,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::unsupported_rank: return "UnsupportedRank";
    case errc::not_dominant: return "NotDominant";
    case errc::resource_limit: return "ResourceLimit";
    case errc::bad_params: return "BadParams";
    case errc::validation_failure: return "ValidationFailure";
    case errc::unknown: return "Unknown";
    case errc::multiplicity_failure: return "MultiplicityFailure";
    case errc::inconsistent_labels: return "InconsistentLabels";
    case errc::non_dominant_projection: return "NonDominantProjection";
    case errc::label_absent: return "LabelAbsent";
    case errc::pole: return "Pole";
    case errc::path_inconsistent: return "PathInconsistent";
    case errc::not_in_catalogue: return "NotInCatalogue";
    case errc::parse_error: return "ParseError";
  }
  return "Error";
}

}  // namespace ykm
