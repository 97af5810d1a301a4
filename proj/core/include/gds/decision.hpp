#ifndef GDS_DECISION_HPP
#define GDS_DECISION_HPP

#include <utility>
#include <vector>

#include "gds/mass.hpp"

namespace gds {

/// Outcome of the max-belief decision rule over singletons.
struct DecisionResult {
  Proposition winner;
  std::vector<std::pair<Proposition, double>> scores;  // ascending bitmask
  bool tie = false;  // top two scores closer than 1e-9
};

/// Picks the singleton with the largest complex belief. Ties break toward
/// the lexicographically smallest label; the tie flag is set when the top
/// two scores are within 1e-9 of each other.
DecisionResult decide(const Cbba& m);

}  // namespace gds

#endif  // GDS_DECISION_HPP
