#pragma once

#include <cmath>
#include <iosfwd>
#include <string>
#include <vector>

namespace nomcast {

inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
inline double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

/// Linear SINR threshold for a spectral-efficiency target in b/s/Hz.
inline double rate_to_threshold(double rate) { return std::exp2(rate) - 1.0; }

/// Per-tier deployment and propagation parameters.  Path gains c_los/c_nlos
/// are linear values referenced to 1 m; Nakagami shapes must be integers.
struct TierParams {
    double tx_power_dbm = 0.0;
    double density = 0.0;      // base stations per m^2
    double c_los = 1.0;        // reference path gain, LOS
    double c_nlos = 1.0;       // reference path gain, NLOS
    double alpha_los = 2.5;    // path-loss exponent, LOS
    double alpha_nlos = 4.0;   // path-loss exponent, NLOS
    double beta = 0.0;         // blockage rate per meter
    int n_los = 1;             // Nakagami shape, LOS
    int n_nlos = 1;            // Nakagami shape, NLOS
};

struct NetworkConfig {
    TierParams macro;
    TierParams small_cell;
    double bias_b = 1.0;          // cell-extension bias (>= 1)
    double noise_dbm = -95.0;
    double window_radius_m = 5000.0;

    /// Macro-to-small transmit power ratio in linear scale.
    double power_ratio() const {
        return dbm_to_mw(macro.tx_power_dbm - small_cell.tx_power_dbm);
    }
    /// Noise power normalized by the small-cell transmit power.  All SINR
    /// computation uses this normalization (small-cell signal carries no
    /// power factor, macro signals carry power_ratio()).
    double noise_norm() const {
        return dbm_to_mw(noise_dbm - small_cell.tx_power_dbm);
    }
};

enum class MosMode { paper, continuous };
enum class EventBPower { full, p1 };       // serving-power term in the SIC decode test
enum class MosWeighting { verbatim, floor };
enum class PslFormula { verbatim, direct };

struct NomaConfig {
    double alpha_p = 0.9;      // power fraction of the primary layer, (0,1]
    double rate_pl = 0.1;      // b/s/Hz
    double rate_sl = 0.2;      // b/s/Hz
    double mos_theta1 = 0.1;   // MOS lower rate breakpoint
    double mos_theta4 = 10.0;  // MOS upper rate breakpoint
    MosMode mos_mode = MosMode::continuous;
    MosWeighting mos_weighting = MosWeighting::verbatim;
    EventBPower event_b_power = EventBPower::full;
    PslFormula psl_formula = PslFormula::verbatim;
    bool sic_enabled = true;

    double t_pl() const { return rate_to_threshold(rate_pl); }
    double t_sl() const { return rate_to_threshold(rate_sl); }
};

struct Violation {
    std::string field;
    std::string message;
};

/// Default parameter set: two-tier urban deployment, 36/26 dBm powers,
/// bias 15, densities 1e-5 / 1e-4 per m^2, -95 dBm noise.
NetworkConfig default_network();
NomaConfig default_noma();

/// Checks every declared invariant; returns all violations, never throws.
std::vector<Violation> validate(const NetworkConfig& cfg, const NomaConfig& noma);

/// Flat key=value access used by the config-file loader, the C API and the
/// CLI overrides.  Unknown keys are reported as errors.
bool config_set(NetworkConfig& cfg, NomaConfig& noma, const std::string& key,
                const std::string& value, std::string* err = nullptr);
bool config_get(const NetworkConfig& cfg, const NomaConfig& noma,
                const std::string& key, std::string* out);
std::vector<std::string> config_keys();

/// Loads a key=value file ('#' comments, blank lines allowed).  Returns
/// false and sets err on parse failure or unknown key.
bool load_config_file(const std::string& path, NetworkConfig& cfg, NomaConfig& noma,
                      std::string* err);

/// Writes the full parameter set, one documented key per line.
void write_config(std::ostream& os, const NetworkConfig& cfg, const NomaConfig& noma);

}  // namespace nomcast
