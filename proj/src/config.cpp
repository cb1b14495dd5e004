#include "config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

namespace nomcast {

NetworkConfig default_network() {
    NetworkConfig cfg;
    cfg.macro.tx_power_dbm = 36.0;
    cfg.macro.density = 1e-5;
    cfg.macro.c_los = std::pow(10.0, -3.08);
    cfg.macro.c_nlos = std::pow(10.0, -0.27);
    cfg.macro.alpha_los = 2.42;
    cfg.macro.alpha_nlos = 4.28;
    cfg.macro.beta = 0.004;
    cfg.macro.n_los = 3;
    cfg.macro.n_nlos = 2;

    cfg.small_cell.tx_power_dbm = 26.0;
    cfg.small_cell.density = 1e-4;
    cfg.small_cell.c_los = std::pow(10.0, -4.11);
    cfg.small_cell.c_nlos = std::pow(10.0, -3.29);
    cfg.small_cell.alpha_los = 2.09;
    cfg.small_cell.alpha_nlos = 3.75;
    cfg.small_cell.beta = 0.008;
    cfg.small_cell.n_los = 3;
    cfg.small_cell.n_nlos = 2;

    cfg.bias_b = 15.0;
    cfg.noise_dbm = -95.0;
    cfg.window_radius_m = 5000.0;
    return cfg;
}

NomaConfig default_noma() { return NomaConfig{}; }

namespace {

bool finite(double v) { return std::isfinite(v); }

void check_tier(const TierParams& t, const std::string& prefix,
                std::vector<Violation>& out) {
    auto bad = [&](const char* field, const std::string& msg) {
        out.push_back({prefix + "." + field, msg});
    };
    if (!finite(t.tx_power_dbm)) bad("tx_power_dbm", "must be finite");
    // density 0 is the accepted single-tier degenerate deployment
    if (!finite(t.density) || t.density < 0.0) bad("density", "must be >= 0");
    if (!finite(t.c_los) || t.c_los <= 0.0) bad("c_los", "must be > 0");
    if (!finite(t.c_nlos) || t.c_nlos <= 0.0) bad("c_nlos", "must be > 0");
    if (!finite(t.alpha_los) || t.alpha_los <= 2.0)
        bad("alpha_los", "must be > 2 (interference diverges otherwise)");
    if (!finite(t.alpha_nlos) || t.alpha_nlos <= 2.0)
        bad("alpha_nlos", "must be > 2 (interference diverges otherwise)");
    if (!finite(t.beta) || t.beta < 0.0) bad("beta", "must be >= 0");
    if (t.n_los < 1) bad("n_los", "must be a positive integer");
    if (t.n_nlos < 1) bad("n_nlos", "must be a positive integer");
}

}  // namespace

std::vector<Violation> validate(const NetworkConfig& cfg, const NomaConfig& noma) {
    std::vector<Violation> v;
    check_tier(cfg.macro, "macro", v);
    check_tier(cfg.small_cell, "small", v);
    if (!finite(cfg.bias_b) || cfg.bias_b < 1.0)
        v.push_back({"bias_b", "bias_b < 1"});
    if (!finite(cfg.noise_dbm)) v.push_back({"noise_dbm", "must be finite"});
    if (!finite(cfg.window_radius_m) || cfg.window_radius_m <= 0.0)
        v.push_back({"window_radius_m", "must be > 0"});
    if (!(cfg.power_ratio() > 1.0))
        v.push_back({"power_ratio_m", "macro tx power must exceed small-cell tx power"});

    if (!finite(noma.alpha_p) || noma.alpha_p <= 0.0 || noma.alpha_p > 1.0)
        v.push_back({"alpha_p", "alpha_p out of (0,1]"});
    if (!finite(noma.rate_pl) || noma.t_pl() <= 0.0)
        v.push_back({"rate_pl", "primary-layer rate must be > 0"});
    if (!finite(noma.rate_sl) || noma.t_sl() <= 0.0)
        v.push_back({"rate_sl", "secondary-layer rate must be > 0"});
    if (!(noma.mos_theta1 < noma.mos_theta4))
        v.push_back({"mos_theta1", "mos_theta1 must be < mos_theta4"});
    if (!finite(noma.mos_theta1) || noma.mos_theta1 <= 0.0)
        v.push_back({"mos_theta1", "must be > 0"});
    return v;
}

namespace {

struct KeyEntry {
    std::function<std::string(const NetworkConfig&, const NomaConfig&)> get;
    std::function<bool(NetworkConfig&, NomaConfig&, const std::string&)> set;
    const char* doc;
};

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool parse_double(const std::string& s, double* out) {
    try {
        size_t pos = 0;
        double v = std::stod(s, &pos);
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
        if (pos != s.size()) return false;
        *out = v;
        return true;
    } catch (...) {
        return false;
    }
}

bool parse_int(const std::string& s, int* out) {
    double v;
    if (!parse_double(s, &v)) return false;
    if (v != std::floor(v) || std::abs(v) > 1e9) return false;
    *out = static_cast<int>(v);
    return true;
}

const std::map<std::string, KeyEntry>& registry() {
    static const std::map<std::string, KeyEntry> reg = [] {
        std::map<std::string, KeyEntry> r;
        auto add_d = [&](const std::string& key, auto accessor, const char* doc) {
            r[key] = KeyEntry{
                [accessor](const NetworkConfig& c, const NomaConfig& n) {
                    return fmt_double(*accessor(const_cast<NetworkConfig&>(c),
                                                const_cast<NomaConfig&>(n)));
                },
                [accessor](NetworkConfig& c, NomaConfig& n, const std::string& s) {
                    double v;
                    if (!parse_double(s, &v)) return false;
                    *accessor(c, n) = v;
                    return true;
                },
                doc};
        };
        auto add_i = [&](const std::string& key, auto accessor, const char* doc) {
            r[key] = KeyEntry{
                [accessor](const NetworkConfig& c, const NomaConfig& n) {
                    return std::to_string(*accessor(const_cast<NetworkConfig&>(c),
                                                    const_cast<NomaConfig&>(n)));
                },
                [accessor](NetworkConfig& c, NomaConfig& n, const std::string& s) {
                    int v;
                    if (!parse_int(s, &v)) return false;
                    *accessor(c, n) = v;
                    return true;
                },
                doc};
        };

        auto tier_keys = [&](const std::string& prefix, auto tier_of) {
            add_d(prefix + ".tx_power_dbm",
                  [tier_of](NetworkConfig& c, NomaConfig&) { return &tier_of(c)->tx_power_dbm; },
                  "transmit power, dBm");
            add_d(prefix + ".density",
                  [tier_of](NetworkConfig& c, NomaConfig&) { return &tier_of(c)->density; },
                  "base-station density, 1/m^2");
            add_d(prefix + ".c_los",
                  [tier_of](NetworkConfig& c, NomaConfig&) { return &tier_of(c)->c_los; },
                  "LOS reference path gain at 1 m (linear)");
            add_d(prefix + ".c_nlos",
                  [tier_of](NetworkConfig& c, NomaConfig&) { return &tier_of(c)->c_nlos; },
                  "NLOS reference path gain at 1 m (linear)");
            add_d(prefix + ".alpha_los",
                  [tier_of](NetworkConfig& c, NomaConfig&) { return &tier_of(c)->alpha_los; },
                  "LOS path-loss exponent (> 2)");
            add_d(prefix + ".alpha_nlos",
                  [tier_of](NetworkConfig& c, NomaConfig&) { return &tier_of(c)->alpha_nlos; },
                  "NLOS path-loss exponent (> 2)");
            add_d(prefix + ".beta",
                  [tier_of](NetworkConfig& c, NomaConfig&) { return &tier_of(c)->beta; },
                  "blockage rate, 1/m; LOS probability is exp(-beta*d)");
            add_i(prefix + ".n_los",
                  [tier_of](NetworkConfig& c, NomaConfig&) { return &tier_of(c)->n_los; },
                  "Nakagami shape of LOS links (positive integer)");
            add_i(prefix + ".n_nlos",
                  [tier_of](NetworkConfig& c, NomaConfig&) { return &tier_of(c)->n_nlos; },
                  "Nakagami shape of NLOS links (positive integer)");
        };
        tier_keys("macro", [](NetworkConfig& c) { return &c.macro; });
        tier_keys("small", [](NetworkConfig& c) { return &c.small_cell; });

        add_d("bias_b", [](NetworkConfig& c, NomaConfig&) { return &c.bias_b; },
              "small-cell association bias (>= 1)");
        add_d("noise_dbm", [](NetworkConfig& c, NomaConfig&) { return &c.noise_dbm; },
              "thermal noise power, dBm");
        add_d("window_radius_m",
              [](NetworkConfig& c, NomaConfig&) { return &c.window_radius_m; },
              "simulation window radius, m");
        add_d("alpha_p", [](NetworkConfig&, NomaConfig& n) { return &n.alpha_p; },
              "power fraction of the primary layer, (0,1]");
        add_d("rate_pl", [](NetworkConfig&, NomaConfig& n) { return &n.rate_pl; },
              "primary-layer rate target, b/s/Hz");
        add_d("rate_sl", [](NetworkConfig&, NomaConfig& n) { return &n.rate_sl; },
              "secondary-layer rate target, b/s/Hz");
        add_d("mos_theta1", [](NetworkConfig&, NomaConfig& n) { return &n.mos_theta1; },
              "MOS lower rate breakpoint, b/s/Hz");
        add_d("mos_theta4", [](NetworkConfig&, NomaConfig& n) { return &n.mos_theta4; },
              "MOS upper rate breakpoint, b/s/Hz");

        r["mos_mode"] = KeyEntry{
            [](const NetworkConfig&, const NomaConfig& n) {
                return std::string(n.mos_mode == MosMode::paper ? "paper" : "continuous");
            },
            [](NetworkConfig&, NomaConfig& n, const std::string& s) {
                if (s == "paper") n.mos_mode = MosMode::paper;
                else if (s == "continuous") n.mos_mode = MosMode::continuous;
                else return false;
                return true;
            },
            "MOS coefficient mode: paper | continuous"};
        r["mos_weighting"] = KeyEntry{
            [](const NetworkConfig&, const NomaConfig& n) {
                return std::string(n.mos_weighting == MosWeighting::verbatim ? "verbatim"
                                                                             : "floor");
            },
            [](NetworkConfig&, NomaConfig& n, const std::string& s) {
                if (s == "verbatim") n.mos_weighting = MosWeighting::verbatim;
                else if (s == "floor") n.mos_weighting = MosWeighting::floor;
                else return false;
                return true;
            },
            "average-MOS convention for uncovered users: verbatim (weight 0) | floor (MOS 1)"};
        r["event_b_power"] = KeyEntry{
            [](const NetworkConfig&, const NomaConfig& n) {
                return std::string(n.event_b_power == EventBPower::full ? "full" : "p1");
            },
            [](NetworkConfig&, NomaConfig& n, const std::string& s) {
                if (s == "full") n.event_b_power = EventBPower::full;
                else if (s == "p1") n.event_b_power = EventBPower::p1;
                else return false;
                return true;
            },
            "serving-power term in the interferer-decode denominator: full | p1"};
        r["psl_formula"] = KeyEntry{
            [](const NetworkConfig&, const NomaConfig& n) {
                return std::string(n.psl_formula == PslFormula::verbatim ? "verbatim"
                                                                         : "direct");
            },
            [](NetworkConfig&, NomaConfig& n, const std::string& s) {
                if (s == "verbatim") n.psl_formula = PslFormula::verbatim;
                else if (s == "direct") n.psl_formula = PslFormula::direct;
                else return false;
                return true;
            },
            "analytic both-layer case-3 combination: verbatim | direct"};
        r["sic_enabled"] = KeyEntry{
            [](const NetworkConfig&, const NomaConfig& n) {
                return std::string(n.sic_enabled ? "true" : "false");
            },
            [](NetworkConfig&, NomaConfig& n, const std::string& s) {
                if (s == "true" || s == "1") n.sic_enabled = true;
                else if (s == "false" || s == "0") n.sic_enabled = false;
                else return false;
                return true;
            },
            "attempt interference cancellation in the cell-extension case: true | false"};
        return r;
    }();
    return reg;
}

}  // namespace

bool config_set(NetworkConfig& cfg, NomaConfig& noma, const std::string& key,
                const std::string& value, std::string* err) {
    auto it = registry().find(key);
    if (it == registry().end()) {
        if (err) *err = "unknown key '" + key + "'";
        return false;
    }
    if (!it->second.set(cfg, noma, value)) {
        if (err) *err = "invalid value '" + value + "' for key '" + key + "'";
        return false;
    }
    return true;
}

bool config_get(const NetworkConfig& cfg, const NomaConfig& noma,
                const std::string& key, std::string* out) {
    auto it = registry().find(key);
    if (it == registry().end()) return false;
    if (out) *out = it->second.get(cfg, noma);
    return true;
}

std::vector<std::string> config_keys() {
    std::vector<std::string> keys;
    for (const auto& [k, _] : registry()) keys.push_back(k);
    return keys;
}

bool load_config_file(const std::string& path, NetworkConfig& cfg, NomaConfig& noma,
                      std::string* err) {
    std::ifstream in(path);
    if (!in) {
        if (err) *err = "cannot open '" + path + "'";
        return false;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto is_space = [](unsigned char c) { return std::isspace(c); };
        while (!line.empty() && is_space(line.back())) line.pop_back();
        size_t start = 0;
        while (start < line.size() && is_space(line[start])) start++;
        if (start >= line.size()) continue;
        auto eq = line.find('=', start);
        if (eq == std::string::npos) {
            if (err) *err = path + ":" + std::to_string(lineno) + ": expected key=value";
            return false;
        }
        std::string key = line.substr(start, eq - start);
        std::string value = line.substr(eq + 1);
        auto trim = [&](std::string& s) {
            while (!s.empty() && is_space(s.back())) s.pop_back();
            size_t b = 0;
            while (b < s.size() && is_space(s[b])) b++;
            s.erase(0, b);
        };
        trim(key);
        trim(value);
        std::string serr;
        if (!config_set(cfg, noma, key, value, &serr)) {
            if (err) *err = path + ":" + std::to_string(lineno) + ": " + serr;
            return false;
        }
    }
    return true;
}

void write_config(std::ostream& os, const NetworkConfig& cfg, const NomaConfig& noma) {
    os << "# nomcast configuration (key = value, '#' starts a comment)\n";
    for (const auto& key : config_keys()) {
        std::string value;
        config_get(cfg, noma, key, &value);
        os << key << " = " << value << "   # " << registry().at(key).doc << "\n";
    }
}

}  // namespace nomcast
