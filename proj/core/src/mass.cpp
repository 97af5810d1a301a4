#include "gds/mass.hpp"

#include <cmath>
#include <sstream>

namespace gds {

namespace {

std::string format_sum(const Complex& z) {
  std::ostringstream os;
  os << z;
  return os.str();
}

}  // namespace

Complex Cbba::mass(const Proposition& p) const {
  if (p.frame() != frame_) {
    throw FrameMismatch("Cbba::mass: proposition from a different frame");
  }
  const auto it = masses_.find(p.bits());
  return it == masses_.end() ? Complex{} : it->second;
}

Complex Cbba::total() const {
  Complex sum;
  for (const auto& [bits, z] : masses_) {
    sum += z;
  }
  return sum;
}

double Bba::mass(const Proposition& p) const {
  if (p.frame() != frame_) {
    throw FrameMismatch("Bba::mass: proposition from a different frame");
  }
  const auto it = masses_.find(p.bits());
  return it == masses_.end() ? 0.0 : it->second;
}

double Bba::total() const {
  double sum = 0.0;
  for (const auto& [bits, m] : masses_) {
    sum += m;
  }
  return sum;
}

Cbba validate_cbba(const Frame& frame,
                   const std::vector<std::pair<Proposition, Complex>>& raw,
                   double normalization_tol) {
  std::map<std::uint32_t, Complex> masses;
  for (const auto& [prop, z] : raw) {
    if (prop.frame() != frame) {
      throw FrameMismatch("validate_cbba: proposition '" + prop.label() +
                          "' belongs to a different frame");
    }
    if (prop.is_empty()) {
      if (z != Complex{}) {
        throw EmptySetMass("validate_cbba: empty set carries nonzero mass");
      }
      continue;
    }
    if (!masses.emplace(prop.bits(), z).second) {
      throw Error("validate_cbba: duplicate proposition '" + prop.label() + "'");
    }
    const double mag = modulus(z);
    if (mag > 1.0 + kMagnitudeTol) {
      throw MagnitudeOutOfRange("validate_cbba: |M(" + prop.label() + ")| = " +
                                std::to_string(mag) + " exceeds 1");
    }
  }
  Complex sum;
  for (const auto& [bits, z] : masses) {
    sum += z;
  }
  if (std::abs(sum.re() - 1.0) > normalization_tol ||
      std::abs(sum.im()) > normalization_tol) {
    throw NotNormalized("validate_cbba: masses sum to " + format_sum(sum) +
                        ", expected 1+0i");
  }
  return {frame, std::move(masses), false};
}

Bba validate_bba(const Frame& frame,
                 const std::vector<std::pair<Proposition, double>>& raw,
                 double normalization_tol) {
  std::map<std::uint32_t, double> masses;
  for (const auto& [prop, m] : raw) {
    if (prop.frame() != frame) {
      throw FrameMismatch("validate_bba: proposition '" + prop.label() +
                          "' belongs to a different frame");
    }
    if (!std::isfinite(m)) {
      throw Error("validate_bba: masses must be finite");
    }
    if (prop.is_empty()) {
      if (m != 0.0) {
        throw EmptySetMass("validate_bba: empty set carries nonzero mass");
      }
      continue;
    }
    if (!masses.emplace(prop.bits(), m).second) {
      throw Error("validate_bba: duplicate proposition '" + prop.label() + "'");
    }
    if (m < 0.0 || m > 1.0 + kMagnitudeTol) {
      throw MagnitudeOutOfRange("validate_bba: m(" + prop.label() + ") = " +
                                std::to_string(m) + " outside [0, 1]");
    }
  }
  double sum = 0.0;
  for (const auto& [bits, m] : masses) {
    sum += m;
  }
  if (std::abs(sum - 1.0) > normalization_tol) {
    throw NotNormalized("validate_bba: masses sum to " + std::to_string(sum) +
                        ", expected 1");
  }
  return {frame, std::move(masses)};
}

Cbba lift(const Bba& b) {
  std::map<std::uint32_t, Complex> masses;
  for (const auto& [bits, m] : b.mass_map()) {
    masses.emplace(bits, Complex{m, 0.0});
  }
  return {b.frame(), std::move(masses), false};
}

FocalSet focal_elements(const Cbba& m) {
  FocalSet out;
  for (const auto& [bits, z] : m.mass_map()) {
    if (modulus(z) > kFocalThreshold) {
      out.push_back({m.frame().subset(bits), z});
    }
  }
  return out;
}

double complex_belief(const Cbba& m, const Proposition& a) {
  if (a.frame() != m.frame()) {
    throw FrameMismatch("complex_belief: proposition from a different frame");
  }
  double sum = 0.0;
  for (const auto& [bits, z] : m.mass_map()) {
    if (bits != 0 && (bits & ~a.bits()) == 0) {
      sum += modulus(z);
    }
  }
  return sum;
}

double complex_plausibility(const Cbba& m, const Proposition& a) {
  if (a.frame() != m.frame()) {
    throw FrameMismatch("complex_plausibility: proposition from a different frame");
  }
  double sum = 0.0;
  for (const auto& [bits, z] : m.mass_map()) {
    if ((bits & a.bits()) != 0) {
      sum += modulus(z);
    }
  }
  return sum;
}

double belief(const Bba& b, const Proposition& a) {
  if (a.frame() != b.frame()) {
    throw FrameMismatch("belief: proposition from a different frame");
  }
  double sum = 0.0;
  for (const auto& [bits, m] : b.mass_map()) {
    if (bits != 0 && (bits & ~a.bits()) == 0) {
      sum += m;
    }
  }
  return sum;
}

double plausibility(const Bba& b, const Proposition& a) {
  if (a.frame() != b.frame()) {
    throw FrameMismatch("plausibility: proposition from a different frame");
  }
  double sum = 0.0;
  for (const auto& [bits, m] : b.mass_map()) {
    if ((bits & a.bits()) != 0) {
      sum += m;
    }
  }
  return sum;
}

}  // namespace gds
