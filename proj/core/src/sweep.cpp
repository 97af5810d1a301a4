#include "gds/sweep.hpp"

#include <cmath>
#include <cstdio>

namespace gds {

namespace {

constexpr double kFeasibilitySlack = 1e-12;

void require_binary_frame(const Frame& frame, const char* op) {
  if (frame.size() != 2) {
    throw Error(std::string(op) + ": needs a two-element frame");
  }
}

}  // namespace

Cbba reference_cbba(const Frame& frame) {
  require_binary_frame(frame, "reference_cbba");
  return validate_cbba(frame, {{frame.singleton(0), Complex{0.5, 0.5}},
                               {frame.singleton(1), Complex{0.5, -0.5}}});
}

bool feasible_parameters(double x, double y) {
  return std::hypot(x, y) <= 1.0 + kFeasibilitySlack &&
         std::hypot(1.0 - x, y) <= 1.0 + kFeasibilitySlack;
}

Cbba swept_cbba(double x, double y, const Frame& frame) {
  require_binary_frame(frame, "swept_cbba");
  if (!feasible_parameters(x, y)) {
    throw InfeasibleParameters("swept_cbba: (" + std::to_string(x) + ", " +
                               std::to_string(y) +
                               ") puts a mass magnitude above 1");
  }
  return validate_cbba(frame, {{frame.singleton(0), Complex{x, y}},
                               {frame.singleton(1), Complex{1.0 - x, -y}}});
}

std::vector<SweepCell> sweep(const SweepSpec& spec) {
  if (spec.x_steps < 2 || spec.y_steps < 2) {
    throw Error("sweep: step counts must be at least 2");
  }
  const Frame frame = spec.reference ? spec.reference->frame()
                                     : Frame({"A", "B"});
  require_binary_frame(frame, "sweep");
  const Cbba m2 = spec.reference ? *spec.reference : reference_cbba(frame);

  std::vector<SweepCell> cells;
  cells.reserve(spec.x_steps * spec.y_steps);
  for (std::size_t i = 0; i < spec.x_steps; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(spec.x_steps - 1);
    for (std::size_t j = 0; j < spec.y_steps; ++j) {
      const double y =
          -1.0 + 2.0 * (static_cast<double>(j) / static_cast<double>(spec.y_steps - 1));
      SweepCell cell;
      cell.x = x;
      cell.y = y;
      cell.feasible = feasible_parameters(x, y);
      if (cell.feasible) {
        cell.k_magnitude = conflict(swept_cbba(x, y, frame), m2).k_magnitude;
      }
      cells.push_back(cell);
    }
  }
  return cells;
}

void write_sweep_csv(std::ostream& os, std::span<const SweepCell> cells) {
  os << "x,y,feasible,k_magnitude\n";
  char line[128];
  for (const auto& cell : cells) {
    if (cell.feasible) {
      std::snprintf(line, sizeof(line), "%.6f,%.6f,1,%.6f\n", cell.x, cell.y,
                    *cell.k_magnitude);
    } else {
      std::snprintf(line, sizeof(line), "%.6f,%.6f,0,\n", cell.x, cell.y);
    }
    os << line;
  }
}

}  // namespace gds
