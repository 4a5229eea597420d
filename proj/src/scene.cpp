#include "fwlidar/scene.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace fwlidar {

bool Boundary::contains(PlanarPoint p) const {
  switch (kind) {
    case Kind::full:
      return true;
    case Kind::half_plane:
      return p.x * std::cos(angle) + p.y * std::sin(angle) <= offset;
    case Kind::strip: {
      const double s = p.x * std::cos(angle) + p.y * std::sin(angle);
      return s >= offset && s < offset2;
    }
    case Kind::arc: {
      const double dx = p.x - center.x;
      const double dy = p.y - center.y;
      const bool inside = dx * dx + dy * dy <= radius * radius;
      return arc_inside ? inside : !inside;
    }
  }
  return false;
}

Boundary Boundary::full() { return {}; }

Boundary Boundary::half_plane(double offset, double angle) {
  Boundary b;
  b.kind = Kind::half_plane;
  b.offset = offset;
  b.angle = angle;
  return b;
}

Boundary Boundary::strip(double offset_low, double offset_high, double angle) {
  Boundary b;
  b.kind = Kind::strip;
  b.offset = offset_low;
  b.offset2 = offset_high;
  b.angle = angle;
  return b;
}

Boundary Boundary::arc(PlanarPoint center, double radius, bool inside) {
  Boundary b;
  b.kind = Kind::arc;
  b.center = center;
  b.radius = radius;
  b.arc_inside = inside;
  return b;
}

void MaterialPatch::validate() const {
  if (reflectance < 0.0 || reflectance > 1.0)
    throw std::domain_error("patch reflectance must lie in [0, 1]");
  if (range_offset < 0.0) throw std::domain_error("patch range offset must be non-negative");
  if (tilt < 0.0 || tilt >= std::numbers::pi / 2)
    throw std::domain_error("patch tilt must lie in [0, pi/2)");
  if (boundary.kind == Boundary::Kind::arc && boundary.radius <= 0.0)
    throw std::domain_error("arc boundary needs a positive radius");
}

void SceneLayout::validate() const {
  if (patches.empty()) throw std::domain_error("layout needs at least one patch");
  if (base_range <= 0.0) throw std::domain_error("base range must be positive");
  for (const auto& patch : patches) patch.validate();
}

SceneLayout controlled_layout(const std::vector<std::pair<std::string, double>>& materials,
                              int count, double interval, double incidence,
                              EdgeShape edge_shape, double sigma,
                              double base_range, double arc_radius) {
  if (count != 2 && count != 3)
    throw std::invalid_argument("controlled layouts support 2 or 3 targets");
  if (static_cast<int>(materials.size()) != count)
    throw std::invalid_argument("materials list must match the target count");
  if (interval <= 0.0) throw std::invalid_argument("target interval must be positive");
  if (sigma <= 0.0) throw std::invalid_argument("footprint sigma must be positive");

  const double radius = arc_radius > 0.0 ? arc_radius : 3.0 * sigma;
  const auto edge = [&](double offset) {
    if (edge_shape == EdgeShape::straight) return Boundary::half_plane(offset);
    // Circle through (offset, 0) bulging toward -x; the lobe x <= offset
    // with a curved edge of the given radius.
    return Boundary::arc({offset - radius, 0.0}, radius);
  };

  SceneLayout layout;
  layout.base_range = base_range;
  layout.incidence_angle = incidence;

  auto add = [&](int idx, Boundary boundary, double offset) {
    MaterialPatch patch;
    patch.label = materials[idx].first;
    patch.reflectance = materials[idx].second;
    patch.range_offset = offset;
    patch.tilt = incidence;
    patch.boundary = boundary;
    layout.patches.push_back(std::move(patch));
  };

  if (count == 2) {
    add(0, edge(0.0), 0.0);
    add(1, Boundary::full(), interval);
  } else {
    add(0, edge(-0.5 * sigma), 0.0);
    add(1, edge(+0.5 * sigma), interval);
    add(2, Boundary::full(), 2.0 * interval);
  }
  layout.validate();
  return layout;
}

SegmentResult segment_footprint(const FootprintGrid& grid, const SceneLayout& layout) {
  layout.validate();
  const int n = static_cast<int>(layout.patches.size());

  SegmentResult result;
  result.region_count = n;
  result.region_of_pixel.resize(grid.pixel_count());
  result.pixel_range.resize(grid.pixel_count());

  std::vector<double> tan_tilt(n);
  for (int k = 0; k < n; ++k) tan_tilt[k] = std::tan(layout.patches[k].tilt);

  for (int j = 0; j < grid.pixel_count(); ++j) {
    const PlanarPoint p = grid.pixel_centers[j];
    int chosen = -1;
    double best_offset = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
      if (layout.patches[k].range_offset < best_offset && layout.patches[k].boundary.contains(p)) {
        chosen = k;
        best_offset = layout.patches[k].range_offset;
      }
    }
    if (chosen < 0)
      throw std::invalid_argument("pixel claimed by no patch: partition violated");
    result.region_of_pixel[j] = chosen;
    result.pixel_range[j] =
        layout.base_range + layout.patches[chosen].range_offset + p.x * tan_tilt[chosen];
  }
  return result;
}

std::vector<double> reflectance_vector(const SceneLayout& layout) {
  layout.validate();
  std::vector<double> m;
  m.reserve(layout.patches.size());
  for (const auto& patch : layout.patches) m.push_back(patch.reflectance);
  return m;
}

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

nlohmann::json boundary_to_json(const Boundary& b) {
  nlohmann::json j;
  switch (b.kind) {
    case Boundary::Kind::full:
      j["type"] = "full";
      break;
    case Boundary::Kind::half_plane:
      j["type"] = "half_plane";
      j["offset_m"] = b.offset;
      j["angle_deg"] = b.angle / kDegToRad;
      break;
    case Boundary::Kind::strip:
      j["type"] = "strip";
      j["offset_m"] = b.offset;
      j["offset2_m"] = b.offset2;
      j["angle_deg"] = b.angle / kDegToRad;
      break;
    case Boundary::Kind::arc:
      j["type"] = "arc";
      j["center_m"] = {b.center.x, b.center.y};
      j["radius_m"] = b.radius;
      j["side"] = b.arc_inside ? "inside" : "outside";
      break;
  }
  return j;
}

Boundary boundary_from_json(const nlohmann::json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "full") return Boundary::full();
  if (type == "half_plane")
    return Boundary::half_plane(j.at("offset_m").get<double>(),
                                j.value("angle_deg", 0.0) * kDegToRad);
  if (type == "strip")
    return Boundary::strip(j.at("offset_m").get<double>(), j.at("offset2_m").get<double>(),
                           j.value("angle_deg", 0.0) * kDegToRad);
  if (type == "arc") {
    const auto& c = j.at("center_m");
    return Boundary::arc({c.at(0).get<double>(), c.at(1).get<double>()},
                         j.at("radius_m").get<double>(),
                         j.value("side", std::string("inside")) == "inside");
  }
  throw std::invalid_argument("unknown boundary type: " + type);
}

}  // namespace

SceneLayout scene_layout_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  SceneLayout layout;
  layout.base_range = j.at("base_range_m").get<double>();
  layout.incidence_angle = j.at("incidence_deg").get<double>() * kDegToRad;
  for (const auto& pj : j.at("patches")) {
    MaterialPatch patch;
    patch.label = pj.at("label").get<std::string>();
    patch.reflectance = pj.at("reflectance").get<double>();
    patch.range_offset = pj.at("range_offset_m").get<double>();
    patch.tilt = pj.value("tilt_deg", 0.0) * kDegToRad;
    patch.boundary = boundary_from_json(pj.at("boundary"));
    layout.patches.push_back(std::move(patch));
  }
  layout.validate();
  return layout;
}

std::string scene_layout_to_json(const SceneLayout& layout) {
  nlohmann::json j;
  j["base_range_m"] = layout.base_range;
  j["incidence_deg"] = layout.incidence_angle / kDegToRad;
  j["patches"] = nlohmann::json::array();
  for (const auto& patch : layout.patches) {
    nlohmann::json pj;
    pj["label"] = patch.label;
    pj["reflectance"] = patch.reflectance;
    pj["range_offset_m"] = patch.range_offset;
    pj["tilt_deg"] = patch.tilt / kDegToRad;
    pj["boundary"] = boundary_to_json(patch.boundary);
    j["patches"].push_back(std::move(pj));
  }
  return j.dump(2);
}

}  // namespace fwlidar
