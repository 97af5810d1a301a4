#ifndef GDS_MASS_HPP
#define GDS_MASS_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gds/complex.hpp"
#include "gds/frame.hpp"

namespace gds {

/// Tolerance for the normalization check (sum of masses = 1) when
/// assignments are constructed programmatically. File ingestion may pass a
/// looser value for hand-rounded inputs.
inline constexpr double kNormalizationTol = 1e-9;

/// Slack on the magnitude constraint |M(A)| <= 1.
inline constexpr double kMagnitudeTol = 1e-9;

/// Magnitudes at or below this are not focal.
inline constexpr double kFocalThreshold = 1e-12;

class Bba;

/// Complex basic belief assignment: a map from propositions to complex
/// masses with M(empty) = 0, per-proposition magnitude within [0, 1] and
/// complex sum equal to 1. Immutable after validation.
class Cbba {
 public:
  const Frame& frame() const { return frame_; }

  /// Mass of a proposition; propositions never assigned get 0.
  /// Throws FrameMismatch if p belongs to a different frame.
  Complex mass(const Proposition& p) const;

  /// Stored masses keyed by subset bitmask, ascending.
  const std::map<std::uint32_t, Complex>& mass_map() const { return masses_; }

  /// Complex sum of all stored masses.
  Complex total() const;

  /// Set on combination outputs whose magnitudes exceeded 1; such results
  /// are reported rather than rejected.
  bool magnitude_warning() const { return magnitude_warning_; }

 private:
  Cbba(Frame frame, std::map<std::uint32_t, Complex> masses, bool warn)
      : frame_(std::move(frame)), masses_(std::move(masses)), magnitude_warning_(warn) {}

  friend Cbba validate_cbba(const Frame& frame,
                            const std::vector<std::pair<Proposition, Complex>>& raw,
                            double normalization_tol);
  friend Cbba lift(const Bba& b);
  friend Cbba combine(const Cbba& m1, const Cbba& m2, double singularity_tol);

  Frame frame_;
  std::map<std::uint32_t, Complex> masses_;
  bool magnitude_warning_ = false;
};

/// Classical real-valued basic belief assignment (the degeneration target).
class Bba {
 public:
  const Frame& frame() const { return frame_; }
  double mass(const Proposition& p) const;
  const std::map<std::uint32_t, double>& mass_map() const { return masses_; }
  double total() const;

 private:
  Bba(Frame frame, std::map<std::uint32_t, double> masses)
      : frame_(std::move(frame)), masses_(std::move(masses)) {}

  friend Bba validate_bba(const Frame& frame,
                          const std::vector<std::pair<Proposition, double>>& raw,
                          double normalization_tol);
  friend Bba classical_combine(const Bba& b1, const Bba& b2);

  Frame frame_;
  std::map<std::uint32_t, double> masses_;
};

/// Checks the complex mass function conditions and returns the validated
/// assignment. Propositions absent from raw default to zero mass.
///
/// Throws EmptySetMass when the empty set carries nonzero mass,
/// MagnitudeOutOfRange when any |M(A)| > 1 (+ slack), NotNormalized when the
/// complex sum differs from 1 by more than normalization_tol in either
/// component, and FrameMismatch when an entry belongs to another frame.
Cbba validate_cbba(const Frame& frame,
                   const std::vector<std::pair<Proposition, Complex>>& raw,
                   double normalization_tol = kNormalizationTol);

/// Real-valued analogue of validate_cbba; masses must lie in [0, 1].
Bba validate_bba(const Frame& frame,
                 const std::vector<std::pair<Proposition, double>>& raw,
                 double normalization_tol = kNormalizationTol);

/// Embeds a classical assignment: each real mass m becomes m + 0i.
Cbba lift(const Bba& b);

struct FocalElement {
  Proposition prop;
  Complex mass;
};

/// Propositions with strictly positive mass magnitude, ascending bitmask.
using FocalSet = std::vector<FocalElement>;

FocalSet focal_elements(const Cbba& m);

/// Sum of mass magnitudes over all subsets of a (lower bound support).
double complex_belief(const Cbba& m, const Proposition& a);

/// Sum of mass magnitudes over all propositions intersecting a (upper
/// bound support).
double complex_plausibility(const Cbba& m, const Proposition& a);

/// Classical belief: sum of masses of subsets of a.
double belief(const Bba& b, const Proposition& a);

/// Classical plausibility: sum of masses of propositions intersecting a.
double plausibility(const Bba& b, const Proposition& a);

}  // namespace gds

#endif  // GDS_MASS_HPP
