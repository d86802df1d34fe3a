#include "rhs/link.hpp"

#include "rhs/geometry.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace rhs {

double fspl(double distance_m, double wavelength_m) {
    if (!(distance_m > 0.0) || !(wavelength_m > 0.0))
        throw std::invalid_argument("fspl: arguments must be positive");
    return 20.0 * std::log10(4.0 * kPi * distance_m / wavelength_m);
}

LinkBudget link_budget(double tx_power_dbm, double tx_gain_dbi, double rx_gain_dbi,
                       double distance_m, double frequency_hz, double noise_power_dbm,
                       double aperture_dimension_m) {
    if (!(distance_m > 0.0))
        throw std::invalid_argument("link_budget: distance must be positive");
    if (!(frequency_hz > 0.0))
        throw std::invalid_argument("link_budget: frequency must be positive");

    LinkBudget budget;
    budget.tx_power_dbm = tx_power_dbm;
    budget.tx_gain_dbi = tx_gain_dbi;
    budget.rx_gain_dbi = rx_gain_dbi;
    budget.distance_m = distance_m;
    budget.wavelength_m = wavelength(frequency_hz);
    budget.fspl_db = fspl(distance_m, budget.wavelength_m);
    budget.rx_power_dbm = tx_power_dbm + tx_gain_dbi + rx_gain_dbi - budget.fspl_db;
    budget.noise_power_dbm = noise_power_dbm;
    budget.snr_db = budget.rx_power_dbm - noise_power_dbm;
    if (aperture_dimension_m > 0.0) {
        budget.rayleigh_distance_m = rayleigh_distance(aperture_dimension_m, budget.wavelength_m);
        budget.far_field_ok = distance_m >= budget.rayleigh_distance_m;
    }
    return budget;
}

namespace {

// Seed-stable gaussian source (Box-Muller on mt19937_64), independent of
// the standard library's distribution internals.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

    double next() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * kPi * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    double uniform() {
        // 53-bit mantissa in [0, 1)
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace

StreamResult simulate_stream(const std::vector<int>& bits, double snr_db,
                             std::uint64_t seed) {
    if (bits.empty())
        throw std::invalid_argument("simulate_stream: bit stream is empty");
    for (int b : bits)
        if (b != 0 && b != 1)
            throw std::invalid_argument("simulate_stream: bits must be 0 or 1");

    StreamResult result;
    result.sent_bits = bits;
    result.snr_db_used = snr_db;
    result.seed = seed;
    result.received_bits.reserve(bits.size());

    const bool noiseless = std::isinf(snr_db) && snr_db > 0.0;
    const double snr_linear = noiseless ? 0.0 : std::pow(10.0, snr_db / 10.0);
    const double sigma = noiseless ? 0.0 : std::sqrt(1.0 / (2.0 * snr_linear));

    GaussianSource noise(seed);
    std::size_t mismatches = 0;
    for (int b : bits) {
        const double symbol = b ? 1.0 : -1.0;
        const double observed = noiseless ? symbol : symbol + sigma * noise.next();
        const int decided = observed >= 0.0 ? 1 : 0;
        result.received_bits.push_back(decided);
        if (decided != b)
            ++mismatches;
    }
    result.bit_error_rate =
        static_cast<double>(mismatches) / static_cast<double>(bits.size());
    return result;
}

} // namespace rhs
