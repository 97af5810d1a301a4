#include "gds/decision.hpp"

namespace gds {

DecisionResult decide(const Cbba& m) {
  const Frame& frame = m.frame();
  std::vector<std::pair<Proposition, double>> scores;
  scores.reserve(frame.size());
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const Proposition s = frame.singleton(i);
    scores.emplace_back(s, complex_belief(m, s));
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    const bool higher = scores[i].second > scores[best].second;
    const bool equal_but_smaller_label =
        scores[i].second == scores[best].second &&
        scores[i].first.label() < scores[best].first.label();
    if (higher || equal_but_smaller_label) {
      best = i;
    }
  }

  bool tie = false;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (i != best && scores[best].second - scores[i].second < 1e-9) {
      tie = true;
    }
  }
  return {scores[best].first, std::move(scores), tie};
}

}  // namespace gds
