#pragma once

#include <cstdint>
#include <vector>

namespace rhs {

struct LinkBudget {
    double tx_power_dbm = 0.0;
    double tx_gain_dbi = 0.0;
    double rx_gain_dbi = 0.0;
    double distance_m = 0.0;
    double wavelength_m = 0.0;
    double fspl_db = 0.0;
    double rx_power_dbm = 0.0;
    double noise_power_dbm = 0.0;
    double snr_db = 0.0;
    // Far-field validity against 2D^2/lambda for the given aperture.
    double rayleigh_distance_m = 0.0;
    bool far_field_ok = true;
};

struct StreamResult {
    std::vector<int> sent_bits;
    std::vector<int> received_bits;
    double bit_error_rate = 0.0;
    double snr_db_used = 0.0;
    std::uint64_t seed = 0;
};

/// Free-space path loss 20*log10(4*pi*d/lambda) in dB.
double fspl(double distance_m, double wavelength_m);

/// Friis budget. aperture_dimension_m sets the Rayleigh-distance check;
/// pass 0 to skip it (far_field_ok stays true).
LinkBudget link_budget(double tx_power_dbm, double tx_gain_dbi, double rx_gain_dbi,
                       double distance_m, double frequency_hz, double noise_power_dbm,
                       double aperture_dimension_m = 0.0);

/// Baseband loopback: binary antipodal modulation, AWGN at the given
/// per-bit SNR, hard decisions. Deterministic for a given seed. An
/// infinite snr_db disables the noise.
StreamResult simulate_stream(const std::vector<int>& bits, double snr_db,
                             std::uint64_t seed);

} // namespace rhs
