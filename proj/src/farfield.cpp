#include "rhs/farfield.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rhs {

namespace {

void check_grid(const std::vector<double>& grid, const char* what) {
    if (grid.empty())
        throw std::invalid_argument(std::string(what) + ": sample grid is empty");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument(std::string(what) +
                                        ": sample grid must be strictly increasing");
}

void check_amplitudes(const ElementGrid& grid, const HolographicPattern& amplitudes,
                      const char* what) {
    if (amplitudes.size() != grid.size())
        throw std::invalid_argument(std::string(what) +
                                    ": amplitude count does not match grid");
}

// Per-element excitation summed over feeds: m_n * sum_k exp(-alpha r_nk) *
// exp(-j k_s r_nk). The direction-dependent factor is per element only.
std::vector<std::complex<double>> transmit_excitation(const RhsConfig& config,
                                                      const ElementGrid& grid,
                                                      const HolographicPattern& amplitudes) {
    const double lambda = wavelength(config.frequency_hz);
    const double k_s = 2.0 * kPi * config.surface_index / lambda;
    std::vector<std::complex<double>> excitation(grid.size(), {0.0, 0.0});
    for (const FeedPosition& feed : config.feeds) {
        for (std::size_t n = 0; n < grid.size(); ++n) {
            const double r = std::hypot(grid.positions[n].x - feed.position.x,
                                        grid.positions[n].y - feed.position.y);
            const double mag = amplitudes.amplitudes[n] * std::exp(-config.leakage_alpha * r);
            excitation[n] += std::polar(mag, -k_s * r);
        }
    }
    return excitation;
}

// Trapezoidal weights for an arbitrary strictly increasing grid.
std::vector<double> trapezoid_weights(const std::vector<double>& grid) {
    std::vector<double> w(grid.size(), 0.0);
    if (grid.size() < 2)
        return w;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double h = grid[i + 1] - grid[i];
        w[i] += h / 2.0;
        w[i + 1] += h / 2.0;
    }
    return w;
}

std::size_t nearest_index(const std::vector<double>& grid, double value) {
    std::size_t best = 0;
    double best_d = std::abs(grid[0] - value);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double d = std::abs(grid[i] - value);
        if (d < best_d) {
            best = i;
            best_d = d;
        }
    }
    return best;
}

} // namespace

std::complex<double> radiated_field(const RhsConfig& config, const ElementGrid& grid,
                                    const HolographicPattern& amplitudes,
                                    const Direction& direction, const FieldOptions& options) {
    check_amplitudes(grid, amplitudes, "radiated_field");
    const double lambda = wavelength(config.frequency_hz);
    const double k = 2.0 * kPi / lambda;
    const double st = std::sin(direction.theta_rad);
    const double ux = st * std::cos(direction.phi_rad);
    const double uy = st * std::sin(direction.phi_rad);

    const auto excitation = transmit_excitation(config, grid, amplitudes);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t n = 0; n < grid.size(); ++n)
        acc += excitation[n] *
               std::polar(1.0, k * (grid.positions[n].x * ux + grid.positions[n].y * uy));
    acc /= std::sqrt(static_cast<double>(config.feeds.size()));
    if (options.cosine_element_factor)
        acc *= std::cos(direction.theta_rad);
    return acc;
}

FarFieldPattern full_pattern(const RhsConfig& config, const ElementGrid& grid,
                             const HolographicPattern& amplitudes,
                             const std::vector<double>& theta_grid_rad,
                             const std::vector<double>& phi_grid_rad,
                             const FieldOptions& options) {
    check_grid(theta_grid_rad, "full_pattern(theta)");
    check_grid(phi_grid_rad, "full_pattern(phi)");
    check_amplitudes(grid, amplitudes, "full_pattern");

    const double lambda = wavelength(config.frequency_hz);
    const double k = 2.0 * kPi / lambda;
    const double norm = std::sqrt(static_cast<double>(config.feeds.size()));
    const auto excitation = transmit_excitation(config, grid, amplitudes);

    FarFieldPattern pattern;
    pattern.theta_rad = theta_grid_rad;
    pattern.phi_rad = phi_grid_rad;
    pattern.frequency_hz = config.frequency_hz;
    pattern.field.resize(theta_grid_rad.size() * phi_grid_rad.size());

    for (std::size_t i = 0; i < theta_grid_rad.size(); ++i) {
        const double st = std::sin(theta_grid_rad[i]);
        const double ef = options.cosine_element_factor ? std::cos(theta_grid_rad[i]) : 1.0;
        for (std::size_t j = 0; j < phi_grid_rad.size(); ++j) {
            const double ux = st * std::cos(phi_grid_rad[j]);
            const double uy = st * std::sin(phi_grid_rad[j]);
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t n = 0; n < grid.size(); ++n)
                acc += excitation[n] * std::polar(1.0, k * (grid.positions[n].x * ux +
                                                            grid.positions[n].y * uy));
            pattern.field[i * phi_grid_rad.size() + j] = acc * ef / norm;
        }
    }
    return pattern;
}

FarFieldPattern receive_pattern(const RhsConfig& config, const ElementGrid& grid,
                                const HolographicPattern& amplitudes,
                                const std::vector<double>& theta_grid_rad,
                                const std::vector<double>& phi_grid_rad,
                                const FieldOptions& options) {
    check_grid(theta_grid_rad, "receive_pattern(theta)");
    check_grid(phi_grid_rad, "receive_pattern(phi)");
    check_amplitudes(grid, amplitudes, "receive_pattern");

    const double lambda = wavelength(config.frequency_hz);
    const double k = 2.0 * kPi / lambda;
    const double k_s = 2.0 * kPi * config.surface_index / lambda;
    const double norm = std::sqrt(static_cast<double>(config.feeds.size()));

    // Signal collected per element on the way to the feeds. The receive
    // chain is evaluated under the e^{-j omega t} convention, where a delay
    // multiplies by exp(+j phase); the incident wave from (theta, phi)
    // induces exp(-j k u.x_n) at element n.
    std::vector<std::complex<double>> collected(grid.size(), {0.0, 0.0});
    for (const FeedPosition& feed : config.feeds) {
        for (std::size_t n = 0; n < grid.size(); ++n) {
            const double r = std::hypot(grid.positions[n].x - feed.position.x,
                                        grid.positions[n].y - feed.position.y);
            const double mag = amplitudes.amplitudes[n] * std::exp(-config.leakage_alpha * r);
            collected[n] += std::polar(mag, k_s * r);
        }
    }

    FarFieldPattern pattern;
    pattern.theta_rad = theta_grid_rad;
    pattern.phi_rad = phi_grid_rad;
    pattern.frequency_hz = config.frequency_hz;
    pattern.field.resize(theta_grid_rad.size() * phi_grid_rad.size());

    for (std::size_t i = 0; i < theta_grid_rad.size(); ++i) {
        const double st = std::sin(theta_grid_rad[i]);
        const double ef = options.cosine_element_factor ? std::cos(theta_grid_rad[i]) : 1.0;
        for (std::size_t j = 0; j < phi_grid_rad.size(); ++j) {
            const double ux = st * std::cos(phi_grid_rad[j]);
            const double uy = st * std::sin(phi_grid_rad[j]);
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t n = 0; n < grid.size(); ++n)
                acc += collected[n] * std::polar(1.0, -k * (grid.positions[n].x * ux +
                                                            grid.positions[n].y * uy));
            pattern.field[i * phi_grid_rad.size() + j] = acc * ef / norm;
        }
    }
    return pattern;
}

std::vector<double> default_theta_grid(double step_deg) {
    if (!(step_deg > 0.0))
        throw std::invalid_argument("default_theta_grid: step must be positive");
    const int n = static_cast<int>(std::lround(180.0 / step_deg));
    std::vector<double> grid;
    grid.reserve(n + 1);
    for (int i = 0; i <= n; ++i)
        grid.push_back(deg_to_rad(-90.0 + 180.0 * i / n));
    return grid;
}

std::vector<double> default_phi_grid(double step_deg) {
    if (!(step_deg > 0.0))
        throw std::invalid_argument("default_phi_grid: step must be positive");
    const int n = static_cast<int>(std::lround(180.0 / step_deg));
    std::vector<double> grid;
    grid.reserve(n + 1);
    for (int i = 0; i <= n; ++i)
        grid.push_back(deg_to_rad(180.0 * i / n));
    return grid;
}

double radiated_power(const FarFieldPattern& pattern, IntegrationDomain domain) {
    if (pattern.theta_rad.size() < 2 || pattern.phi_rad.size() < 2)
        throw std::invalid_argument("radiated_power: needs at least 2x2 samples");
    const auto wt = trapezoid_weights(pattern.theta_rad);
    const auto wp = trapezoid_weights(pattern.phi_rad);
    double total = 0.0;
    for (std::size_t i = 0; i < pattern.theta_rad.size(); ++i) {
        const double weight_t = wt[i] * std::abs(std::sin(pattern.theta_rad[i]));
        double row = 0.0;
        for (std::size_t j = 0; j < pattern.phi_rad.size(); ++j)
            row += wp[j] * std::norm(pattern.at(i, j));
        total += weight_t * row;
    }
    if (domain == IntegrationDomain::FullSphere)
        total *= 2.0;
    return total;
}

double directivity(const FarFieldPattern& pattern, const Direction& direction,
                   IntegrationDomain domain) {
    const double total = radiated_power(pattern, domain);
    if (!(total > 0.0))
        throw std::domain_error("directivity: zero total radiated power");

    const auto& th = pattern.theta_rad;
    const auto& ph = pattern.phi_rad;
    if (direction.theta_rad < th.front() || direction.theta_rad > th.back() ||
        direction.phi_rad < ph.front() || direction.phi_rad > ph.back())
        throw std::invalid_argument("directivity: direction outside sampled domain");

    auto cell = [](const std::vector<double>& g, double v) {
        std::size_t i = std::upper_bound(g.begin(), g.end(), v) - g.begin();
        if (i > 0) --i;
        if (i + 1 >= g.size()) i = g.size() - 2;
        return i;
    };
    const std::size_t i = cell(th, direction.theta_rad);
    const std::size_t j = cell(ph, direction.phi_rad);
    const double ft = (direction.theta_rad - th[i]) / (th[i + 1] - th[i]);
    const double fp = (direction.phi_rad - ph[j]) / (ph[j + 1] - ph[j]);
    const double p00 = std::norm(pattern.at(i, j));
    const double p10 = std::norm(pattern.at(i + 1, j));
    const double p01 = std::norm(pattern.at(i, j + 1));
    const double p11 = std::norm(pattern.at(i + 1, j + 1));
    const double p = (1 - ft) * ((1 - fp) * p00 + fp * p01) + ft * ((1 - fp) * p10 + fp * p11);

    return 10.0 * std::log10(4.0 * kPi * p / total);
}

BeamMetrics beam_metrics(const FarFieldPattern& pattern, CutPlane cut,
                         IntegrationDomain domain) {
    const double phi_cut = (cut == CutPlane::Horizontal) ? 0.0 : kPi / 2.0;
    const std::size_t jc = nearest_index(pattern.phi_rad, phi_cut);

    std::vector<double> profile(pattern.theta_rad.size());
    for (std::size_t i = 0; i < profile.size(); ++i)
        profile[i] = std::norm(pattern.at(i, jc));

    const auto it_max = std::max_element(profile.begin(), profile.end());
    const std::size_t ipk = static_cast<std::size_t>(it_max - profile.begin());
    const double peak = *it_max;
    const double floor = *std::min_element(profile.begin(), profile.end());
    if (!(peak > 0.0) || peak - floor <= 1e-12 * peak)
        throw std::domain_error("beam_metrics: flat pattern, no main lobe");

    BeamMetrics metrics;
    metrics.main_lobe = Direction{pattern.theta_rad[ipk], pattern.phi_rad[jc]};
    metrics.peak_directivity_dbi =
        directivity(pattern, metrics.main_lobe, domain);

    // -3 dB crossings, linearly interpolated in power.
    const double half = peak / 2.0;
    double theta_left = 0.0, theta_right = 0.0;
    bool found = false;
    for (std::size_t i = ipk; i-- > 0;) {
        if (profile[i] < half) {
            const double f = (profile[i + 1] - half) / (profile[i + 1] - profile[i]);
            theta_left = pattern.theta_rad[i + 1] -
                         f * (pattern.theta_rad[i + 1] - pattern.theta_rad[i]);
            found = true;
            break;
        }
    }
    if (!found)
        throw std::domain_error("beam_metrics: left -3 dB crossing outside sampled cut");
    found = false;
    for (std::size_t i = ipk + 1; i < profile.size(); ++i) {
        if (profile[i] < half) {
            const double f = (profile[i - 1] - half) / (profile[i - 1] - profile[i]);
            theta_right = pattern.theta_rad[i - 1] +
                          f * (pattern.theta_rad[i] - pattern.theta_rad[i - 1]);
            found = true;
            break;
        }
    }
    if (!found)
        throw std::domain_error("beam_metrics: right -3 dB crossing outside sampled cut");
    metrics.hpbw_deg = rad_to_deg(theta_right - theta_left);

    // Null-to-null span around the main lobe, then the largest sample
    // outside it.
    std::size_t null_left = ipk;
    while (null_left > 0 && profile[null_left - 1] < profile[null_left])
        --null_left;
    std::size_t null_right = ipk;
    while (null_right + 1 < profile.size() && profile[null_right + 1] < profile[null_right])
        ++null_right;
    double sidelobe = 0.0;
    for (std::size_t i = 0; i < profile.size(); ++i)
        if (i < null_left || i > null_right)
            sidelobe = std::max(sidelobe, profile[i]);
    metrics.peak_sidelobe_level_db =
        sidelobe > 0.0 ? 10.0 * std::log10(sidelobe / peak)
                       : -std::numeric_limits<double>::infinity();
    return metrics;
}

std::vector<SweepRow> steering_sweep(const RhsConfig& config, const ElementGrid& grid,
                                     const std::vector<Direction>& targets,
                                     const SweepOptions& options) {
    if (targets.empty())
        throw std::invalid_argument("steering_sweep: target list is empty");

    const auto theta_grid = default_theta_grid(options.theta_step_deg);
    const auto phi_grid = default_phi_grid(options.phi_step_deg);

    std::vector<SweepRow> rows;
    rows.reserve(targets.size());
    for (const Direction& target : targets) {
        SweepRow row;
        row.target = target;
        try {
            HolographicPattern amplitudes = pattern_multi_feed(config, grid, target);
            if (options.quantized) {
                const PinStateMap map = quantize_pattern(amplitudes, options.threshold);
                amplitudes = pin_map_to_amplitudes(map, config);
            }
            const FarFieldPattern pattern =
                full_pattern(config, grid, amplitudes, theta_grid, phi_grid, options.field);
            const double dist_h = std::abs(target.phi_rad);
            const double dist_v = std::abs(target.phi_rad - kPi / 2.0);
            const CutPlane cut = dist_v < dist_h ? CutPlane::Vertical : CutPlane::Horizontal;
            row.metrics = beam_metrics(pattern, cut, options.domain);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace rhs
