#include "dyck/angles.hpp"

#include <algorithm>
#include <array>
#include <charconv>

namespace dyck {

AngleModPi AngleModPi::reduce(double x) {
  if (!std::isfinite(x))
    throw DomainError("reduce_mod_pi: non-finite angle");
  double r = std::fmod(x, kPi);
  if (r < 0.0)
    r += kPi;
  // r + kPi can round up to kPi; and -0.0 must not leak into output.
  if (r >= kPi || r == 0.0)
    r = 0.0;
  return AngleModPi{r};
}

double AngleModPi::centered() const noexcept {
  return value_ > kPi / 2 ? value_ - kPi : value_;
}

double angle_dist(AngleModPi a, AngleModPi b) noexcept {
  const double d = std::abs(a.value() - b.value());
  return std::min(d, kPi - d);
}

double unwrap_near(AngleModPi a, double reference) noexcept {
  return a.value() + kPi * std::round((reference - a.value()) / kPi);
}

ProjPoint1R::ProjPoint1R(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y))
    throw DomainError("ProjPoint1R: non-finite coordinate");
  const double m = std::max(std::abs(x), std::abs(y));
  if (m == 0.0)
    throw DomainError("ProjPoint1R: [0, 0] is not a projective point");
  x /= m;
  y /= m;
  if (x < 0.0 || (x == 0.0 && y < 0.0)) {
    x = -x;
    y = -y;
  }
  x_ = x + 0.0;
  y_ = y + 0.0;
}

AngleModPi rho(const ProjPoint1R& p) {
  return reduce_mod_pi(std::atan2(p.y(), p.x()));
}

ProjPoint1R lift(AngleModPi xi) {
  return ProjPoint1R{std::cos(xi.value()), std::sin(xi.value())};
}

std::string format_real(double x) {
  if (x == 0.0)
    x = 0.0; // drop the sign of -0
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc{})
    throw std::runtime_error("format_real: conversion failed");
  return std::string(buf.data(), end);
}

} // namespace dyck
