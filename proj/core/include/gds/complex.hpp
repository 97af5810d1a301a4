#ifndef GDS_COMPLEX_HPP
#define GDS_COMPLEX_HPP

#include <cmath>
#include <numbers>
#include <ostream>

#include "gds/errors.hpp"

namespace gds {

/// Complex scalar in rectangular form. Components are always finite;
/// constructing one from NaN or infinity throws.
class Complex {
 public:
  constexpr Complex() : re_(0.0), im_(0.0) {}

  Complex(double re, double im) : re_(re), im_(im) {
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw Error("Complex: components must be finite");
    }
  }

  double re() const { return re_; }
  double im() const { return im_; }

  Complex operator+(const Complex& o) const { return {re_ + o.re_, im_ + o.im_}; }
  Complex operator-(const Complex& o) const { return {re_ - o.re_, im_ - o.im_}; }
  Complex operator-() const { return {-re_, -im_}; }

  Complex operator*(const Complex& o) const {
    return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + o.re_ * im_};
  }

  Complex operator/(const Complex& o) const {
    const double den = o.re_ * o.re_ + o.im_ * o.im_;
    if (den == 0.0) {
      throw DivisionByZero("Complex: division by zero");
    }
    return {(re_ * o.re_ + im_ * o.im_) / den, (o.re_ * im_ - re_ * o.im_) / den};
  }

  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  Complex& operator/=(const Complex& o) { return *this = *this / o; }

  bool operator==(const Complex& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const Complex& o) const { return !(*this == o); }

 private:
  double re_;
  double im_;
};

inline Complex conjugate(const Complex& z) { return {z.re(), -z.im()}; }

inline double modulus(const Complex& z) { return std::hypot(z.re(), z.im()); }

/// |z|^2 = z * conj(z), taken as a real number.
inline double modulus_sq(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }

/// Polar form (magnitude, phase). Canonical representation: magnitude >= 0,
/// phase in (-pi, pi], and a zero magnitude forces phase 0 so that equal
/// values have equal representations.
class Polar {
 public:
  Polar() : magnitude_(0.0), phase_(0.0) {}

  /// Any finite phase is accepted and wrapped into (-pi, pi].
  Polar(double magnitude, double phase) : magnitude_(magnitude), phase_(phase) {
    if (!std::isfinite(magnitude) || !std::isfinite(phase)) {
      throw Error("Polar: components must be finite");
    }
    if (magnitude < 0.0) {
      throw Error("Polar: magnitude must be non-negative");
    }
    if (magnitude_ == 0.0) {
      magnitude_ = 0.0;  // collapse -0.0
      phase_ = 0.0;
      return;
    }
    phase_ = std::remainder(phase_, 2.0 * std::numbers::pi);
    if (phase_ == -std::numbers::pi) {
      phase_ = std::numbers::pi;
    }
    if (phase_ == 0.0) {
      phase_ = 0.0;  // collapse -0.0
    }
  }

  double magnitude() const { return magnitude_; }
  double phase() const { return phase_; }

  bool operator==(const Polar& o) const {
    return magnitude_ == o.magnitude_ && phase_ == o.phase_;
  }
  bool operator!=(const Polar& o) const { return !(*this == o); }

 private:
  double magnitude_;
  double phase_;
};

/// r * e^{i*theta} = r*cos(theta) + i*r*sin(theta).
inline Complex from_polar(const Polar& p) {
  return {p.magnitude() * std::cos(p.phase()), p.magnitude() * std::sin(p.phase())};
}

/// Full-plane angle extraction (two-argument arctangent), so values with a
/// negative real part land on the correct branch. z = 0 yields (0, 0).
inline Polar to_polar(const Complex& z) {
  const double mag = modulus(z);
  if (mag == 0.0) {
    return {};
  }
  return {mag, std::atan2(z.im(), z.re())};
}

inline std::ostream& operator<<(std::ostream& os, const Complex& z) {
  return os << z.re() << (z.im() < 0.0 ? "" : "+") << z.im() << "i";
}

}  // namespace gds

#endif  // GDS_COMPLEX_HPP
