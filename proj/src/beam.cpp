#include "fwlidar/beam.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace fwlidar {

namespace {

constexpr double kFwhmToSigma = 2.3548200450309493;  // 2*sqrt(2 ln 2)

}  // namespace

void BeamSpec::validate() const {
  if (divergence_rad <= 0.0) throw std::domain_error("beam divergence must be positive");
  if (pulse_fwhm_s <= 0.0) throw std::domain_error("pulse FWHM must be positive");
  if (sampling_rate_hz <= 0.0) throw std::domain_error("sampling rate must be positive");
  if (peak_irradiance <= 0.0) throw std::domain_error("peak irradiance must be positive");
}

BeamSpec beam_spec_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  BeamSpec spec;
  spec.divergence_rad = j.at("divergence_mrad").get<double>() * 1e-3;
  spec.pulse_fwhm_s = j.at("pulse_fwhm_ns").get<double>() * 1e-9;
  spec.sampling_rate_hz = j.at("sampling_rate_hz").get<double>();
  spec.peak_irradiance = j.value("peak_irradiance", 1.0);
  spec.validate();
  return spec;
}

std::string beam_spec_to_json(const BeamSpec& spec) {
  nlohmann::json j;
  j["divergence_mrad"] = spec.divergence_rad * 1e3;
  j["pulse_fwhm_ns"] = spec.pulse_fwhm_s * 1e9;
  j["sampling_rate_hz"] = spec.sampling_rate_hz;
  j["peak_irradiance"] = spec.peak_irradiance;
  return j.dump(2);
}

void EllipticalProfile::validate() const {
  if (!(sigma_minor > 0.0) || !(sigma_major >= sigma_minor))
    throw std::domain_error("elliptical profile requires sigma_major >= sigma_minor > 0");
}

double FootprintGrid::total_energy() const {
  double sum = 0.0;
  for (double v : irradiance) sum += v;
  return sum * pixel_size * pixel_size;
}

double sigma_at_range(const BeamSpec& beam, double range_m) {
  beam.validate();
  if (range_m <= 0.0) throw std::domain_error("range must be positive");
  return beam.divergence_rad * range_m / kFwhmToSigma;
}

double irradiance_circular(PlanarPoint p, double sigma, double peak) {
  if (sigma <= 0.0) throw std::domain_error("sigma must be positive");
  const double r2 = p.x * p.x + p.y * p.y;
  return peak * std::exp(-r2 / (2.0 * sigma * sigma));
}

double irradiance_elliptical(PlanarPoint p, const EllipticalProfile& profile, double peak) {
  profile.validate();
  // Rotate into footprint axes, then evaluate the axis-aligned quadratic form.
  const double c = std::cos(profile.orientation);
  const double s = std::sin(profile.orientation);
  const double u = c * p.x + s * p.y;
  const double v = -s * p.x + c * p.y;
  const double q = u * u / (profile.sigma_major * profile.sigma_major) +
                   v * v / (profile.sigma_minor * profile.sigma_minor);
  return peak * std::exp(-0.5 * q);
}

namespace {

FootprintGrid build_grid(double pixel_size, int half_count,
                         double analytic_energy, double energy_tolerance,
                         const auto& irradiance_at) {
  FootprintGrid grid;
  grid.pixel_size = pixel_size;
  grid.side = 2 * half_count;
  grid.half_extent = half_count * pixel_size;
  grid.energy_tolerance = energy_tolerance;
  grid.irradiance.resize(static_cast<std::size_t>(grid.side) * grid.side);
  grid.pixel_centers.resize(grid.irradiance.size());

  std::size_t j = 0;
  for (int iy = 0; iy < grid.side; ++iy) {
    const double y = (iy - half_count + 0.5) * pixel_size;
    for (int ix = 0; ix < grid.side; ++ix, ++j) {
      const double x = (ix - half_count + 0.5) * pixel_size;
      grid.pixel_centers[j] = {x, y};
      grid.irradiance[j] = irradiance_at(PlanarPoint{x, y});
    }
  }

  const double total = grid.total_energy();
  if (std::abs(total - analytic_energy) > energy_tolerance * analytic_energy)
    throw std::invalid_argument("discretized footprint energy outside declared tolerance");
  return grid;
}

int grid_half_count(int pixels_per_sigma, double extent_sigmas) {
  if (pixels_per_sigma < 4)
    throw std::invalid_argument("pixels_per_sigma must be at least 4");
  if (extent_sigmas < 2.0)
    throw std::invalid_argument("extent_sigmas must be at least 2");
  // Guard against FP noise pushing an integral product over the next ceil step.
  return static_cast<int>(std::ceil(extent_sigmas * pixels_per_sigma - 1e-9));
}

}  // namespace

FootprintGrid discretize_footprint(const BeamSpec& beam, double range_m,
                                   int pixels_per_sigma, double extent_sigmas,
                                   double energy_tolerance) {
  const double sigma = sigma_at_range(beam, range_m);
  const int half_count = grid_half_count(pixels_per_sigma, extent_sigmas);
  const double analytic = 2.0 * std::numbers::pi * sigma * sigma * beam.peak_irradiance;
  return build_grid(sigma / pixels_per_sigma, half_count, analytic, energy_tolerance,
                    [&](PlanarPoint p) { return irradiance_circular(p, sigma, beam.peak_irradiance); });
}

FootprintGrid discretize_footprint_elliptical(const EllipticalProfile& profile, double peak,
                                              int pixels_per_sigma, double extent_sigmas,
                                              double energy_tolerance) {
  profile.validate();
  const int per_major = static_cast<int>(
      std::ceil(pixels_per_sigma * profile.sigma_major / profile.sigma_minor));
  const int half_count = grid_half_count(per_major, extent_sigmas);
  const double analytic =
      2.0 * std::numbers::pi * profile.sigma_major * profile.sigma_minor * peak;
  return build_grid(profile.sigma_minor / pixels_per_sigma, half_count, analytic,
                    energy_tolerance,
                    [&](PlanarPoint p) { return irradiance_elliptical(p, profile, peak); });
}

double RingBasis::total_energy() const {
  double sum = 0.0;
  for (std::size_t k = 0; k < densities.size(); ++k) sum += densities[k] * ring_areas[k];
  return sum;
}

RingBasis ring_energy_basis(double sigma, double ring_width, int ring_count, double peak) {
  if (sigma <= 0.0) throw std::domain_error("sigma must be positive");
  if (ring_width <= 0.0) throw std::domain_error("ring width must be positive");
  if (ring_count < 1) throw std::domain_error("ring count must be at least 1");

  RingBasis basis;
  basis.ring_width = ring_width;
  basis.area_unit = std::numbers::pi * ring_width * ring_width;
  basis.densities.resize(ring_count);
  basis.ring_areas.resize(ring_count);

  const double two_sigma2 = 2.0 * sigma * sigma;
  for (int k = 1; k <= ring_count; ++k) {
    const double r0 = (k - 1) * ring_width;
    const double r1 = k * ring_width;
    const double area = basis.area_unit * (2 * k - 1);
    // Mean density over the annulus; the exact integral of the Gaussian
    // between the two radii divided by the annulus area.
    const double mass = std::numbers::pi * two_sigma2 * peak *
                        (std::exp(-r0 * r0 / two_sigma2) - std::exp(-r1 * r1 / two_sigma2));
    basis.densities[k - 1] = mass / area;
    basis.ring_areas[k - 1] = area;
  }
  return basis;
}

std::vector<double> region_energy_weights(const FootprintGrid& grid,
                                          std::span<const std::int32_t> region_of_pixel,
                                          int region_count) {
  if (static_cast<std::size_t>(grid.pixel_count()) != region_of_pixel.size())
    throw std::invalid_argument("segmentation size does not match grid");
  if (region_count < 1) throw std::invalid_argument("region count must be at least 1");

  std::vector<double> weights(region_count, 0.0);
  for (std::size_t j = 0; j < region_of_pixel.size(); ++j) {
    const std::int32_t n = region_of_pixel[j];
    if (n < 0 || n >= region_count)
      throw std::invalid_argument("pixel claimed by no region: partition violated");
    weights[n] += grid.irradiance[j];
  }
  const double px2 = grid.pixel_size * grid.pixel_size;
  for (double& w : weights) w *= px2;
  return weights;
}

}  // namespace fwlidar
