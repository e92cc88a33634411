#pragma once

#include <cmath>
#include <compare>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dyck/errors.hpp"

namespace dyck {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kDefaultTol = 1e-9;

/// An element of R/pi, stored as its representative in [0, pi).
class AngleModPi {
public:
  constexpr AngleModPi() noexcept = default;

  /// Reduces x modulo pi. Throws DomainError for non-finite x.
  static AngleModPi reduce(double x);

  [[nodiscard]] constexpr double value() const noexcept { return value_; }

  /// Representative in (-pi/2, pi/2], convenient for unwrapping sequences.
  [[nodiscard]] double centered() const noexcept;

  AngleModPi operator+(AngleModPi rhs) const { return reduce(value_ + rhs.value_); }
  AngleModPi operator-(AngleModPi rhs) const { return reduce(value_ - rhs.value_); }
  AngleModPi operator-() const { return reduce(-value_); }
  AngleModPi& operator+=(AngleModPi rhs) { return *this = *this + rhs; }
  AngleModPi& operator-=(AngleModPi rhs) { return *this = *this - rhs; }

  // Exact representative comparison; use angle_dist for tolerant equality.
  constexpr bool operator==(const AngleModPi&) const noexcept = default;
  constexpr auto operator<=>(const AngleModPi&) const noexcept = default;

private:
  constexpr explicit AngleModPi(double v) noexcept : value_{v} {}
  double value_ = 0.0;
};

inline AngleModPi reduce_mod_pi(double x) { return AngleModPi::reduce(x); }

/// Wraparound distance on R/pi, in [0, pi/2].
double angle_dist(AngleModPi a, AngleModPi b) noexcept;

/// Representative of `a` closest to `reference` on the real line.
double unwrap_near(AngleModPi a, double reference) noexcept;

/// A point [x, y] of the real projective line.
///
/// Stored canonically: scaled so that max(|x|, |y|) = 1 with the first nonzero
/// coordinate positive, so projective equality is coordinate-wise equality.
class ProjPoint1R {
public:
  ProjPoint1R(double x, double y);

  [[nodiscard]] double x() const noexcept { return x_; }
  [[nodiscard]] double y() const noexcept { return y_; }

  bool operator==(const ProjPoint1R&) const noexcept = default;

private:
  double x_;
  double y_;
};

/// The isomorphism P^1(R) -> R/pi, [x, y] -> Arg(x + iy) mod pi.
AngleModPi rho(const ProjPoint1R& p);

/// Inverse of rho: xi -> [cos xi, sin xi].
ProjPoint1R lift(AngleModPi xi);

/// Shortest round-trip decimal for a double (at most 17 significant digits).
std::string format_real(double x);

} // namespace dyck
