#pragma once

#include "rhs/geometry.hpp"
#include "rhs/holography.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace rhs {

/// Sampled complex far field over an (elevation, azimuth) grid.
/// field is row-major: field[i * phi_samples.size() + j] belongs to
/// (theta_samples[i], phi_samples[j]).
struct FarFieldPattern {
    std::vector<double> theta_rad;
    std::vector<double> phi_rad;
    std::vector<std::complex<double>> field;
    double frequency_hz = 0.0;

    std::complex<double> at(std::size_t i, std::size_t j) const {
        return field[i * phi_rad.size() + j];
    }
};

struct BeamMetrics {
    Direction main_lobe;
    double peak_directivity_dbi = 0.0;
    double hpbw_deg = 0.0;
    // Relative to the main lobe; -inf when the cut has no sidelobe.
    double peak_sidelobe_level_db = 0.0;
};

enum class CutPlane { Horizontal, Vertical }; // phi = 0 / phi = 90 deg

/// Normalization domain for directivity. The array factor of a planar
/// source is mirror-symmetric about z = 0, so FullSphere integrates to
/// exactly twice the sampled upper-hemisphere power.
enum class IntegrationDomain { UpperHemisphere, FullSphere };

struct FieldOptions {
    bool cosine_element_factor = false;
};

/// Transmit far field at one direction: every element re-radiates the
/// reference wave's accumulated phase, weighted by its amplitude and the
/// leakage decay; feeds combine coherently with a 1/sqrt(K) power split.
std::complex<double> radiated_field(const RhsConfig& config, const ElementGrid& grid,
                                    const HolographicPattern& amplitudes,
                                    const Direction& direction,
                                    const FieldOptions& options = {});

FarFieldPattern full_pattern(const RhsConfig& config, const ElementGrid& grid,
                             const HolographicPattern& amplitudes,
                             const std::vector<double>& theta_grid_rad,
                             const std::vector<double>& phi_grid_rad,
                             const FieldOptions& options = {});

/// Reception modeled independently of the transmit path: an incident
/// plane wave from (theta, phi) induces per-element signals which are
/// weighted, delayed along the surface toward each feed, and coherently
/// summed. By reciprocity |receive_pattern| equals |full_pattern|
/// pointwise.
FarFieldPattern receive_pattern(const RhsConfig& config, const ElementGrid& grid,
                                const HolographicPattern& amplitudes,
                                const std::vector<double>& theta_grid_rad,
                                const std::vector<double>& phi_grid_rad,
                                const FieldOptions& options = {});

/// Default sampling: theta -90..90 deg, phi 0..180 deg.
std::vector<double> default_theta_grid(double step_deg = 1.0);
std::vector<double> default_phi_grid(double step_deg = 2.0);

/// Total radiated power of a sampled pattern: trapezoidal quadrature of
/// |E|^2 |sin(theta)| over the sampled domain, doubled for FullSphere.
double radiated_power(const FarFieldPattern& pattern,
                      IntegrationDomain domain = IntegrationDomain::UpperHemisphere);

/// D = 4*pi*|E(theta,phi)|^2 / total radiated power, in dBi. |E|^2 at the
/// requested direction is bilinearly interpolated from the samples.
double directivity(const FarFieldPattern& pattern, const Direction& direction,
                   IntegrationDomain domain = IntegrationDomain::UpperHemisphere);

/// Main lobe, HPBW and peak sidelobe level within the selected cut plane
/// (signed-theta profile at the phi column nearest 0 or 90 deg).
BeamMetrics beam_metrics(const FarFieldPattern& pattern, CutPlane cut,
                         IntegrationDomain domain = IntegrationDomain::UpperHemisphere);

struct SweepRow {
    Direction target;
    std::optional<BeamMetrics> metrics;
    std::string error; // non-empty when this row failed
};

struct SweepOptions {
    bool quantized = false;
    double threshold = 0.5;
    double theta_step_deg = 1.0;
    double phi_step_deg = 2.0;
    FieldOptions field;
    IntegrationDomain domain = IntegrationDomain::UpperHemisphere;
};

/// Synthesize (Eq.-2 style multi-feed pattern), optionally quantize,
/// evaluate, and record metrics per target. Per-row failures are captured
/// in the row instead of aborting the sweep.
std::vector<SweepRow> steering_sweep(const RhsConfig& config, const ElementGrid& grid,
                                     const std::vector<Direction>& targets,
                                     const SweepOptions& options = {});

} // namespace rhs
