#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fwlidar {

/// Point on the footprint plane, beam axis at the origin, meters.
struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;
};

/// Instrument-level laser parameters.
///
/// The divergence is the full angle at the 1/e^2 power level; together with
/// the range it fixes the Gaussian width of the footprint.
struct BeamSpec {
  double divergence_rad = 0.3e-3;   ///< full divergence angle (rad)
  double pulse_fwhm_s = 4e-9;       ///< transmit pulse width, FWHM (s)
  double sampling_rate_hz = 5e9;    ///< receiver sampling rate (Hz)
  double peak_irradiance = 1.0;     ///< on-axis irradiance, normalized units

  void validate() const;
  double sample_dt() const { return 1.0 / sampling_rate_hz; }
};

BeamSpec beam_spec_from_json(const std::string& text);
std::string beam_spec_to_json(const BeamSpec& spec);

/// Elliptical Gaussian profile, e.g. a footprint projected onto a tilted
/// surface. Orientation rotates the major axis within the footprint plane.
struct EllipticalProfile {
  double sigma_major = 0.0;  ///< std deviation along major axis (m)
  double sigma_minor = 0.0;  ///< std deviation along minor axis (m)
  double orientation = 0.0;  ///< major-axis angle in the plane (rad)

  void validate() const;
};

/// Square pixel grid sampling the footprint irradiance on the plane normal
/// to the beam axis (or on a tilted surface plane for elliptical profiles).
///
/// The grid is centered on the beam axis with an even number of pixels per
/// side, so pixel centers straddle the axis symmetrically. Construction
/// checks that the discretized energy matches the analytic beam energy to
/// within `energy_tolerance`.
struct FootprintGrid {
  double pixel_size = 0.0;        ///< pixel edge length (m)
  double half_extent = 0.0;       ///< grid half width (m), whole pixels
  int side = 0;                   ///< pixels per side (even)
  std::vector<double> irradiance; ///< per-pixel irradiance, size side*side
  std::vector<PlanarPoint> pixel_centers;
  double energy_tolerance = 0.0;  ///< declared at construction

  int pixel_count() const { return side * side; }
  /// Total discretized beam energy: sum(irradiance) * pixel_size^2.
  double total_energy() const;
};

/// Gaussian footprint width at the given range: divergence * range / (2*sqrt(2 ln 2)).
double sigma_at_range(const BeamSpec& beam, double range_m);

/// Circular Gaussian irradiance at a point on the beam-normal plane.
double irradiance_circular(PlanarPoint p, double sigma, double peak);

/// Elliptical Gaussian irradiance; reduces to the circular profile when the
/// two sigmas coincide.
double irradiance_elliptical(PlanarPoint p, const EllipticalProfile& profile, double peak);

/// Sample the circular footprint onto a pixel grid.
///
/// pixel_size = sigma / pixels_per_sigma, half extent = extent_sigmas * sigma
/// rounded up to whole pixels. Requires pixels_per_sigma >= 4 and
/// extent_sigmas >= 2 so the energy check below can hold.
FootprintGrid discretize_footprint(const BeamSpec& beam, double range_m,
                                   int pixels_per_sigma, double extent_sigmas,
                                   double energy_tolerance = 0.01);

/// Same sampling for an elliptical profile. The grid is square with the
/// half extent taken from the major axis.
FootprintGrid discretize_footprint_elliptical(const EllipticalProfile& profile, double peak,
                                              int pixels_per_sigma, double extent_sigmas,
                                              double energy_tolerance = 0.01);

/// Radial energy-density description of the footprint: equal-width annuli
/// around the beam axis, one mean density per ring.
struct RingBasis {
  std::vector<double> densities;  ///< mean irradiance per annulus, decreasing
  std::vector<double> ring_areas; ///< pi * w^2 * (2k - 1)
  double ring_width = 0.0;
  double area_unit = 0.0;         ///< pi * w^2, the per-ring area budget unit

  int ring_count() const { return static_cast<int>(densities.size()); }
  /// Sum of density * area over all rings; the annular beam energy.
  double total_energy() const;
};

/// Build the annular basis for a circular Gaussian of width sigma.
/// Ring k covers radii [(k-1)*w, k*w); its area is pi*w^2*(2k-1).
RingBasis ring_energy_basis(double sigma, double ring_width, int ring_count,
                            double peak = 1.0);

/// Energy weight per region for a pixel grid partitioned by `region_of_pixel`
/// (values in [0, region_count)). Weights are sums of irradiance * pixel area,
/// so they add up to the grid's total energy.
std::vector<double> region_energy_weights(const FootprintGrid& grid,
                                          std::span<const std::int32_t> region_of_pixel,
                                          int region_count);

}  // namespace fwlidar
