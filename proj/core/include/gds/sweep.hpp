#ifndef GDS_SWEEP_HPP
#define GDS_SWEEP_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "gds/fusion.hpp"
#include "gds/mass.hpp"

namespace gds {

/// The fixed reference body the conflict surface is computed against:
/// first singleton 0.5+0.5i, second singleton 0.5-0.5i. Needs a
/// two-element frame.
Cbba reference_cbba(const Frame& frame);

/// True when both swept mass magnitudes stay within the unit disk:
/// sqrt(x^2+y^2) <= 1 and sqrt((1-x)^2+y^2) <= 1 (+1e-12 slack).
bool feasible_parameters(double x, double y);

/// Member of the swept two-parameter family on a two-element frame:
/// mass x+yi on the first singleton and (1-x)-yi on the second, so the
/// complex sum is 1 by construction. Built in rectangular form, which is
/// total in x (no angle extraction anywhere, so x = 0 is fine) and gives
/// zero-magnitude masses the canonical phase 0.
///
/// Throws InfeasibleParameters when either magnitude exceeds 1.
Cbba swept_cbba(double x, double y, const Frame& frame);

/// Grid description for the conflict-surface study. x covers [0, 1] and
/// y covers [-1, 1], inclusive, with the given node counts (>= 2 each).
struct SweepSpec {
  std::size_t x_steps = 201;
  std::size_t y_steps = 401;
  /// Fixed second body; defaults to reference_cbba on the frame {A, B}.
  std::optional<Cbba> reference;
};

struct SweepCell {
  double x = 0.0;
  double y = 0.0;
  bool feasible = false;
  std::optional<double> k_magnitude;  // set only when feasible
};

/// Row-major grid (y fastest) of conflict magnitudes |K| between the swept
/// family and the reference body. Infeasible cells are kept and flagged so
/// consumers can render the feasibility region.
std::vector<SweepCell> sweep(const SweepSpec& spec);

/// CSV emission: header `x,y,feasible,k_magnitude`, six decimal places,
/// feasible as 1/0, k_magnitude empty for infeasible cells.
void write_sweep_csv(std::ostream& os, std::span<const SweepCell> cells);

}  // namespace gds

#endif  // GDS_SWEEP_HPP
