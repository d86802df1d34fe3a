#pragma once

#include <cstddef>
#include <vector>

namespace rhs {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

/// Beam direction: theta is the elevation from broadside (+z), signed;
/// phi is the azimuth from +x in the surface plane. Radians.
struct Direction {
    double theta_rad = 0.0;
    double phi_rad = 0.0;

    static Direction from_degrees(double theta_deg, double phi_deg) {
        return {deg_to_rad(theta_deg), deg_to_rad(phi_deg)};
    }
};

struct FeedPosition {
    Vec2 position;
};

/// Row-major element lattice in the z = 0 plane, element (i,j) at
/// (j*spacing_x, i*spacing_y). Element 0 sits at the origin.
struct ElementGrid {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Vec2> positions;

    std::size_t size() const { return positions.size(); }
};

/// Full physical description of one RHS board.
///
/// amp_on is the element radiation amplitude with the diodes in the OFF
/// (radiating) state; amp_off with the diodes ON (suppressed).
/// leakage_alpha is the reference-wave amplitude decay along the surface
/// in nepers/m; it scales element excitation by exp(-alpha * |r_n^k|).
struct RhsConfig {
    double frequency_hz = 0.0;
    double surface_index = 1.6;
    std::size_t rows = 0;
    std::size_t cols = 0;
    double spacing_x_m = 0.0;
    double spacing_y_m = 0.0;
    std::vector<FeedPosition> feeds;
    double amp_on = 1.0;
    double amp_off = 0.0;
    double leakage_alpha = 0.0;

    std::size_t element_count() const { return rows * cols; }

    /// Throws std::invalid_argument if any invariant is violated.
    void validate() const;
};

double wavelength(double frequency_hz);

ElementGrid build_grid(std::size_t rows, std::size_t cols,
                       double spacing_x_m, double spacing_y_m);

ElementGrid build_grid(const RhsConfig& config);

/// Near/far-field boundary 2*D^2/lambda for an aperture of maximum
/// dimension D.
double rayleigh_distance(double max_dimension_m, double wavelength_m);

} // namespace rhs
