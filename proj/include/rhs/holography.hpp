#pragma once

#include "rhs/geometry.hpp"

#include <cstdint>
#include <vector>

namespace rhs {

/// Per-element real radiation amplitude in [0,1], index-aligned with the
/// element grid.
struct HolographicPattern {
    std::vector<double> amplitudes;

    std::size_t size() const { return amplitudes.size(); }
};

/// Diode state per element. Off = radiating, On = suppressed.
enum class PinState : std::uint8_t { Off = 0, On = 1 };

struct PinStateMap {
    std::vector<PinState> states;
    double threshold_used = 0.5;

    std::size_t size() const { return states.size(); }
};

/// Phase accumulated by the guided reference wave from the feed to an
/// element: k_s * |r| with k_s = 2*pi*surface_index/lambda. Unwrapped.
double reference_phase(const FeedPosition& feed, const Vec2& element_position,
                       double surface_index, double wavelength_m);

/// In-plane plane-wave phase of the object wave at an element:
/// (2*pi/lambda) * (x sin(theta) cos(phi) + y sin(theta) sin(phi)).
double object_phase(const Vec2& element_position, const Direction& direction,
                    double wavelength_m);

HolographicPattern pattern_single_feed(const RhsConfig& config, const ElementGrid& grid,
                                       std::size_t feed_index, const Direction& direction);

/// Multi-feed amplitude: per-element average of the single-feed patterns
/// over all feeds. Identical to pattern_single_feed when there is one feed.
HolographicPattern pattern_multi_feed(const RhsConfig& config, const ElementGrid& grid,
                                      const Direction& direction);

/// amplitude < threshold -> On (suppressed); amplitude >= threshold -> Off.
PinStateMap quantize_pattern(const HolographicPattern& pattern, double threshold);

HolographicPattern pin_map_to_amplitudes(const PinStateMap& map, const RhsConfig& config);

/// Subtracts weight times the pattern aimed at sidelobe_direction, clamped
/// to [0,1] per element. Weight 0 returns the input unchanged.
HolographicPattern suppress_sidelobe(const HolographicPattern& pattern,
                                     const RhsConfig& config, const ElementGrid& grid,
                                     const Direction& sidelobe_direction, double weight);

} // namespace rhs
