#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dyck/angles.hpp"

namespace dyck {

enum class Figure { PonceletLevels, SphereAtlas, TorusAtlas };

std::optional<Figure> figure_from_name(std::string_view name);
std::string to_string(Figure f);

struct FigureOptions {
  std::vector<double> levels{0.1, 0.3, 0.5}; // r/R values, each in (0, 1/2]
  std::size_t grid = 64;                      // alpha positions per level curve
  std::size_t samples = 500;                  // atlas size
  std::uint64_t seed = 1;
  double tol = kDefaultTol;
  bool parallel = true;
};

/// CSV with a header row. Throws std::invalid_argument on bad options.
void emit_figure(Figure f, const FigureOptions& opts, std::ostream& out);
std::string emit_figure(Figure f, const FigureOptions& opts);

} // namespace dyck
