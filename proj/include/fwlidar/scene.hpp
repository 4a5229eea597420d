#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fwlidar/beam.hpp"

namespace fwlidar {

/// Region descriptor on the footprint plane. `half_plane` keeps points with
/// p . n <= offset for edge normal n = (cos angle, sin angle); `strip` keeps
/// offset <= p . n < offset2; `arc` keeps one side of a circle; `full`
/// claims everything left over.
struct Boundary {
  enum class Kind { full, half_plane, strip, arc };

  Kind kind = Kind::full;
  double offset = 0.0;
  double offset2 = 0.0;
  double angle = 0.0;
  PlanarPoint center{};
  double radius = 0.0;
  bool arc_inside = true;

  bool contains(PlanarPoint p) const;

  static Boundary full();
  static Boundary half_plane(double offset, double angle = 0.0);
  static Boundary strip(double offset_low, double offset_high, double angle = 0.0);
  static Boundary arc(PlanarPoint center, double radius, bool inside = true);
};

/// One homogeneous surface piece under the footprint.
struct MaterialPatch {
  std::string label;
  double reflectance = 0.0;   ///< in [0, 1]
  double range_offset = 0.0;  ///< distance behind the first target (m)
  double tilt = 0.0;          ///< surface normal vs beam (rad), tilt axis = x
  Boundary boundary;

  void validate() const;
};

/// Ordered front-to-back patch set covering the footprint.
struct SceneLayout {
  std::vector<MaterialPatch> patches;
  double base_range = 50.0;      ///< range of the first target (m)
  double incidence_angle = 0.0;  ///< first surface's incidence (rad)

  void validate() const;
};

enum class EdgeShape { straight, arc };

/// Controlled two- or three-target layout: the front patch covers one lobe
/// of the footprint (straight edge or arc), later patches are staggered by
/// `interval` along range, and the last patch absorbs the rest. Edge offsets
/// scale with `sigma`, the footprint width the layout is meant for. All
/// patches share the incidence tilt (parallel boards).
SceneLayout controlled_layout(const std::vector<std::pair<std::string, double>>& materials,
                              int count, double interval, double incidence,
                              EdgeShape edge_shape, double sigma,
                              double base_range = 50.0, double arc_radius = 0.0);

/// Pixel-to-patch assignment plus per-pixel range. Regions index
/// layout.patches; rows are one-hot by construction.
struct SegmentResult {
  std::vector<std::int32_t> region_of_pixel;
  int region_count = 0;
  std::vector<double> pixel_range;
};

/// Assign every pixel to the front-most patch containing it and compute the
/// per-pixel range including the tilt-induced path difference x * tan(tilt).
SegmentResult segment_footprint(const FootprintGrid& grid, const SceneLayout& layout);

/// Patch reflectances in segmentation column order.
std::vector<double> reflectance_vector(const SceneLayout& layout);

SceneLayout scene_layout_from_json(const std::string& text);
std::string scene_layout_to_json(const SceneLayout& layout);

}  // namespace fwlidar
