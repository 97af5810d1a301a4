#ifndef GDS_EVIDENCE_IO_HPP
#define GDS_EVIDENCE_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "gds/mass.hpp"

namespace gds {

/// One named body of evidence from a file. Bodies whose masses are all
/// exactly real are additionally held to the classical constraints
/// (non-negative masses) during validation.
struct EvidenceBody {
  std::string name;
  Cbba cbba;
  bool real = false;
};

/// Parsed evidence file: a frame and one or more named bodies.
///
/// JSON schema (UTF-8):
///   {
///     "frame": ["A", "B"],
///     "bodies": [
///       { "name": "m1",
///         "masses": {
///           "A":   {"rect": {"re": 0.1, "im": 0.2}},
///           "A,B": {"polar": {"magnitude": 0.5, "phase_radians": 0.7}}
///         } }
///     ]
///   }
///
/// Proposition keys are comma-joined element labels; every label must be a
/// member of the frame.
struct EvidenceFile {
  Frame frame;
  std::vector<EvidenceBody> bodies;
};

/// Parses and validates an evidence stream. Polar masses are converted via
/// from_polar. Throws ParseError on malformed input (with field context)
/// and propagates validation errors prefixed with the offending body name.
EvidenceFile parse_evidence(std::istream& in,
                            double normalization_tol = kNormalizationTol);

/// Convenience overload; throws ParseError when the file cannot be opened.
EvidenceFile parse_evidence_file(const std::string& path,
                                 double normalization_tol = kNormalizationTol);

/// Serializes back to the JSON schema (rectangular form, full precision).
/// parse_evidence(serialize_evidence(f)) reproduces the same values.
std::string serialize_evidence(const EvidenceFile& file);

}  // namespace gds

#endif  // GDS_EVIDENCE_IO_HPP
