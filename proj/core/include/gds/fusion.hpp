#ifndef GDS_FUSION_HPP
#define GDS_FUSION_HPP

#include <span>

#include "gds/mass.hpp"

namespace gds {

/// Combination is rejected when |1 - K| falls below this threshold. The
/// theory only excludes K = 1 exactly, but near-singular denominators
/// amplify rounding explosively.
inline constexpr double kSingularityTol = 1e-9;

/// Conflict between two bodies of evidence: the total (complex) product
/// mass landing on disjoint proposition pairs.
struct ConflictReport {
  Complex k;
  double k_magnitude = 0.0;
  bool singular = false;  // |1 - k| below the singularity threshold
};

/// K = sum over all pairs (A, B) with empty intersection of M1(A)*M2(B).
/// Throws FrameMismatch when the assignments live on different frames.
ConflictReport conflict(const Cbba& m1, const Cbba& m2,
                        double singularity_tol = kSingularityTol);

/// Generalized combination (orthogonal sum): for each non-empty C,
///
///   M(C) = 1/(1 - K) * sum over A intersect B = C of M1(A)*M2(B)
///
/// with complex K, so the result exists for any K != 1, including |K| > 1.
/// The output's complex masses again sum to 1. Magnitudes above 1 are
/// flagged on the result (magnitude_warning), not rejected.
///
/// Throws FrameMismatch on frame disagreement and ConflictSingularity when
/// |1 - K| < singularity_tol.
Cbba combine(const Cbba& m1, const Cbba& m2,
             double singularity_tol = kSingularityTol);

/// Left-associated fold m1 (+) m2 (+) ... (+) mn. Needs at least one
/// assignment; a singular intermediate fusion reports the offending step.
Cbba combine_all(std::span<const Cbba> ms,
                 double singularity_tol = kSingularityTol);

/// Classical Dempster rule on real-valued assignments; feasible only for
/// conflict K < 1. Throws TotalConflict when 1 - K < 1e-9.
Bba classical_combine(const Bba& b1, const Bba& b2);

/// Classical conflict coefficient K between two real-valued assignments.
double classical_conflict(const Bba& b1, const Bba& b2);

}  // namespace gds

#endif  // GDS_FUSION_HPP
