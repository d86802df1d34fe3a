#include "rhs/holography.hpp"

#include <cmath>
#include <stdexcept>

namespace rhs {

double reference_phase(const FeedPosition& feed, const Vec2& element_position,
                       double surface_index, double wavelength_m) {
    if (!(wavelength_m > 0.0))
        throw std::invalid_argument("reference_phase: wavelength must be positive");
    if (!(surface_index >= 1.0))
        throw std::invalid_argument("reference_phase: surface_index must be >= 1");
    const double dx = element_position.x - feed.position.x;
    const double dy = element_position.y - feed.position.y;
    const double distance = std::hypot(dx, dy);
    const double k_s = 2.0 * kPi * surface_index / wavelength_m;
    return k_s * distance;
}

double object_phase(const Vec2& element_position, const Direction& direction,
                    double wavelength_m) {
    if (!(wavelength_m > 0.0))
        throw std::invalid_argument("object_phase: wavelength must be positive");
    const double k = 2.0 * kPi / wavelength_m;
    const double st = std::sin(direction.theta_rad);
    return k * (element_position.x * st * std::cos(direction.phi_rad) +
                element_position.y * st * std::sin(direction.phi_rad));
}

HolographicPattern pattern_single_feed(const RhsConfig& config, const ElementGrid& grid,
                                       std::size_t feed_index, const Direction& direction) {
    if (feed_index >= config.feeds.size())
        throw std::out_of_range("pattern_single_feed: feed index out of range");
    const double lambda = wavelength(config.frequency_hz);
    const FeedPosition& feed = config.feeds[feed_index];

    HolographicPattern pattern;
    pattern.amplitudes.reserve(grid.size());
    for (const Vec2& pos : grid.positions) {
        const double delta = object_phase(pos, direction, lambda) -
                             reference_phase(feed, pos, config.surface_index, lambda);
        pattern.amplitudes.push_back((std::cos(delta) + 1.0) / 2.0);
    }
    return pattern;
}

HolographicPattern pattern_multi_feed(const RhsConfig& config, const ElementGrid& grid,
                                      const Direction& direction) {
    if (config.feeds.empty())
        throw std::invalid_argument("pattern_multi_feed: feed list is empty");
    const double lambda = wavelength(config.frequency_hz);
    const double k_count = static_cast<double>(config.feeds.size());

    HolographicPattern pattern;
    pattern.amplitudes.assign(grid.size(), 0.0);
    for (const FeedPosition& feed : config.feeds) {
        for (std::size_t n = 0; n < grid.size(); ++n) {
            const double delta = object_phase(grid.positions[n], direction, lambda) -
                                 reference_phase(feed, grid.positions[n],
                                                 config.surface_index, lambda);
            pattern.amplitudes[n] += (std::cos(delta) + 1.0) / (2.0 * k_count);
        }
    }
    return pattern;
}

PinStateMap quantize_pattern(const HolographicPattern& pattern, double threshold) {
    if (!(threshold >= 0.0 && threshold <= 1.0))
        throw std::invalid_argument("quantize_pattern: threshold must lie in [0,1]");
    PinStateMap map;
    map.threshold_used = threshold;
    map.states.reserve(pattern.size());
    for (double a : pattern.amplitudes)
        map.states.push_back(a < threshold ? PinState::On : PinState::Off);
    return map;
}

HolographicPattern pin_map_to_amplitudes(const PinStateMap& map, const RhsConfig& config) {
    if (map.size() != config.element_count())
        throw std::invalid_argument("pin_map_to_amplitudes: map length does not match grid");
    HolographicPattern pattern;
    pattern.amplitudes.reserve(map.size());
    for (PinState s : map.states)
        pattern.amplitudes.push_back(s == PinState::Off ? config.amp_on : config.amp_off);
    return pattern;
}

HolographicPattern suppress_sidelobe(const HolographicPattern& pattern,
                                     const RhsConfig& config, const ElementGrid& grid,
                                     const Direction& sidelobe_direction, double weight) {
    if (weight < 0.0)
        throw std::invalid_argument("suppress_sidelobe: weight must be >= 0");
    if (weight == 0.0)
        return pattern;

    const HolographicPattern aux = pattern_multi_feed(config, grid, sidelobe_direction);
    HolographicPattern out;
    out.amplitudes.reserve(pattern.size());
    for (std::size_t n = 0; n < pattern.size(); ++n) {
        const double v = pattern.amplitudes[n] - weight * aux.amplitudes[n];
        out.amplitudes.push_back(v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v));
    }
    return out;
}

} // namespace rhs
