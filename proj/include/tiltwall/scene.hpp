#pragma once

#include "tiltwall/walls.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace tiltwall {

/// alpha = a2 beta^2 + a1 beta + a0 over beta in [beta_lo, beta_hi].
struct ParabolaArc {
  Rational a2, a1, a0;
  Surd beta_lo, beta_hi;

  Surd alpha_at(const Surd& beta) const;
};

struct SceneCurve {
  enum class Kind { Boundary, CurveCE, Wall };
  Kind kind = Kind::Boundary;
  std::string label;
  std::optional<ParabolaArc> arc;
  /// Straight pieces (walls, rank-zero C_E) clipped to the region.
  std::optional<std::pair<PlanePoint, PlanePoint>> segment;
  std::optional<Wall> wall;
};

struct ScenePoint {
  std::string label;
  PlanePoint at;
};

struct SceneDescription {
  NumClass v;
  Region region;
  std::vector<SceneCurve> curves;
  std::vector<ScenePoint> points;
};

/// Boundary of U, the curve C_E of v, the walls clipped to the region and
/// Pi(v); elements that miss the region are dropped.
SceneDescription plot_scene(const NumClass& v, const Region& region,
                            const std::vector<Wall>& walls);

/// {"schema": "tiltwall.scene/1", "class", "region", "curves", "points"}
/// with every number as an exact string (surds as "a+b*sqrt(D)").
nlohmann::ordered_json scene_to_json(const SceneDescription& scene);

/// SVG 1.1 document; precision is the number of decimals in coordinates.
std::string scene_to_svg(const SceneDescription& scene, int precision = 3);

}  // namespace tiltwall
