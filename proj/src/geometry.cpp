#include "rhs/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rhs {

void RhsConfig::validate() const {
    if (!(frequency_hz > 0.0))
        throw std::invalid_argument("RhsConfig: frequency_hz must be positive");
    if (!(surface_index >= 1.0))
        throw std::invalid_argument("RhsConfig: surface_index must be >= 1");
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("RhsConfig: rows and cols must be >= 1");
    if (!(spacing_x_m > 0.0) || !(spacing_y_m > 0.0))
        throw std::invalid_argument("RhsConfig: spacings must be positive");
    if (feeds.empty())
        throw std::invalid_argument("RhsConfig: at least one feed is required");
    for (const auto& f : feeds) {
        if (!std::isfinite(f.position.x) || !std::isfinite(f.position.y))
            throw std::invalid_argument("RhsConfig: feed coordinates must be finite");
    }
    if (amp_on < 0.0 || amp_on > 1.0 || amp_off < 0.0 || amp_off > 1.0)
        throw std::invalid_argument("RhsConfig: amp_on/amp_off must lie in [0,1]");
    if (amp_off > amp_on)
        throw std::invalid_argument("RhsConfig: amp_off must not exceed amp_on");
    if (leakage_alpha < 0.0 || !std::isfinite(leakage_alpha))
        throw std::invalid_argument("RhsConfig: leakage_alpha must be finite and >= 0");
}

double wavelength(double frequency_hz) {
    if (!(frequency_hz > 0.0))
        throw std::invalid_argument("wavelength: frequency must be positive");
    return kSpeedOfLight / frequency_hz;
}

ElementGrid build_grid(std::size_t rows, std::size_t cols,
                       double spacing_x_m, double spacing_y_m) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("build_grid: rows and cols must be >= 1");
    if (!(spacing_x_m > 0.0) || !(spacing_y_m > 0.0))
        throw std::invalid_argument("build_grid: spacings must be positive");

    ElementGrid grid;
    grid.rows = rows;
    grid.cols = cols;
    grid.positions.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            grid.positions.push_back({static_cast<double>(j) * spacing_x_m,
                                      static_cast<double>(i) * spacing_y_m});
    return grid;
}

ElementGrid build_grid(const RhsConfig& config) {
    return build_grid(config.rows, config.cols, config.spacing_x_m, config.spacing_y_m);
}

double rayleigh_distance(double max_dimension_m, double wavelength_m) {
    if (!(max_dimension_m > 0.0) || !(wavelength_m > 0.0))
        throw std::invalid_argument("rayleigh_distance: arguments must be positive");
    return 2.0 * max_dimension_m * max_dimension_m / wavelength_m;
}

} // namespace rhs
