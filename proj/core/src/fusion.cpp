#include "gds/fusion.hpp"

#include <cmath>
#include <string>

namespace gds {

namespace {

void require_same_frame(const Frame& a, const Frame& b, const char* op) {
  if (a != b) {
    throw FrameMismatch(std::string(op) + ": assignments on different frames");
  }
}

}  // namespace

ConflictReport conflict(const Cbba& m1, const Cbba& m2, double singularity_tol) {
  require_same_frame(m1.frame(), m2.frame(), "conflict");
  Complex k;
  for (const auto& [bits1, z1] : m1.mass_map()) {
    for (const auto& [bits2, z2] : m2.mass_map()) {
      if ((bits1 & bits2) == 0) {
        k += z1 * z2;
      }
    }
  }
  ConflictReport report;
  report.k = k;
  report.k_magnitude = modulus(k);
  report.singular = modulus(Complex{1.0, 0.0} - k) < singularity_tol;
  return report;
}

Cbba combine(const Cbba& m1, const Cbba& m2, double singularity_tol) {
  require_same_frame(m1.frame(), m2.frame(), "combine");
  Complex k;
  std::map<std::uint32_t, Complex> numerators;
  for (const auto& [bits1, z1] : m1.mass_map()) {
    for (const auto& [bits2, z2] : m2.mass_map()) {
      const std::uint32_t c = bits1 & bits2;
      const Complex prod = z1 * z2;
      if (c == 0) {
        k += prod;
      } else {
        numerators[c] += prod;
      }
    }
  }
  const Complex denom = Complex{1.0, 0.0} - k;
  if (modulus(denom) < singularity_tol) {
    throw ConflictSingularity("combine: conflict coefficient K = 1 (|1-K| < " +
                              std::to_string(singularity_tol) + ")");
  }
  bool warn = false;
  std::map<std::uint32_t, Complex> masses;
  for (const auto& [bits, num] : numerators) {
    const Complex m = num / denom;
    if (modulus(m) > 1.0 + kMagnitudeTol) {
      warn = true;
    }
    masses.emplace(bits, m);
  }
  return {m1.frame(), std::move(masses), warn};
}

Cbba combine_all(std::span<const Cbba> ms, double singularity_tol) {
  if (ms.empty()) {
    throw Error("combine_all: needs at least one assignment");
  }
  Cbba acc = ms[0];
  for (std::size_t i = 1; i < ms.size(); ++i) {
    try {
      acc = combine(acc, ms[i], singularity_tol);
    } catch (const ConflictSingularity& e) {
      throw ConflictSingularity("fusion step " + std::to_string(i) + " of " +
                                std::to_string(ms.size() - 1) + ": " + e.what());
    }
  }
  return acc;
}

double classical_conflict(const Bba& b1, const Bba& b2) {
  require_same_frame(b1.frame(), b2.frame(), "classical_conflict");
  double k = 0.0;
  for (const auto& [bits1, m1] : b1.mass_map()) {
    for (const auto& [bits2, m2] : b2.mass_map()) {
      if ((bits1 & bits2) == 0) {
        k += m1 * m2;
      }
    }
  }
  return k;
}

Bba classical_combine(const Bba& b1, const Bba& b2) {
  require_same_frame(b1.frame(), b2.frame(), "classical_combine");
  double k = 0.0;
  std::map<std::uint32_t, double> numerators;
  for (const auto& [bits1, m1] : b1.mass_map()) {
    for (const auto& [bits2, m2] : b2.mass_map()) {
      const std::uint32_t c = bits1 & bits2;
      const double prod = m1 * m2;
      if (c == 0) {
        k += prod;
      } else {
        numerators[c] += prod;
      }
    }
  }
  const double denom = 1.0 - k;
  if (denom < 1e-9) {
    throw TotalConflict("classical_combine: total conflict (K = " +
                        std::to_string(k) + ")");
  }
  std::map<std::uint32_t, double> masses;
  for (const auto& [bits, num] : numerators) {
    masses.emplace(bits, num / denom);
  }
  return {b1.frame(), std::move(masses)};
}

}  // namespace gds
