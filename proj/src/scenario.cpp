#include "gpmix/scenario.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "gpmix/cavity_modes.hpp"
#include "gpmix/constants.hpp"
#include "gpmix/version.hpp"

namespace gpmix::io {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Key/value store with strict consumption: every provided key must be read
// exactly once, and anything left over is an unknown-key error.
class KeyValues {
  public:
    KeyValues(const std::string& text, const std::string& origin) : origin_(origin) {
        std::istringstream stream(text);
        std::string line;
        int line_no = 0;
        while (std::getline(stream, line)) {
            ++line_no;
            const std::size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            line = trim(line);
            if (line.empty()) continue;
            const std::size_t eq = line.find('=');
            if (eq == std::string::npos) {
                fail("line " + std::to_string(line_no) + ": expected `key = value`");
            }
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key.empty()) fail("line " + std::to_string(line_no) + ": empty key");
            if (value.empty()) fail("line " + std::to_string(line_no) + ": empty value for " + key);
            if (!values_.emplace(key, value).second) {
                fail("duplicate key " + key);
            }
        }
    }

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    std::string take(const std::string& key) {
        const auto it = values_.find(key);
        if (it == values_.end()) fail("missing required key " + key);
        std::string value = it->second;
        values_.erase(it);
        return value;
    }

    double take_double(const std::string& key) {
        const std::string raw = take(key);
        char* end = nullptr;
        const double v = std::strtod(raw.c_str(), &end);
        if (end != raw.c_str() + raw.size()) fail("key " + key + ": malformed number `" + raw + "`");
        return v;
    }

    std::int64_t take_int(const std::string& key) {
        const double v = take_double(key);
        if (std::floor(v) != v || std::fabs(v) > 9e15) {
            fail("key " + key + ": expected an integer");
        }
        return static_cast<std::int64_t>(v);
    }

    bool take_bool(const std::string& key) {
        const std::string raw = take(key);
        if (raw == "true") return true;
        if (raw == "false") return false;
        fail("key " + key + ": expected true or false");
        return false;
    }

    std::vector<std::int64_t> take_int_list(const std::string& key) {
        const std::string raw = take(key);
        std::istringstream stream(raw);
        std::vector<std::int64_t> out;
        double v = 0.0;
        while (stream >> v) {
            if (std::floor(v) != v) fail("key " + key + ": expected integers");
            out.push_back(static_cast<std::int64_t>(v));
        }
        if (!stream.eof() || out.empty()) fail("key " + key + ": malformed integer list");
        return out;
    }

    modes::ModeIndex take_triple(const std::string& key) {
        const auto list = take_int_list(key);
        if (list.size() != 3) fail("key " + key + ": expected exactly three indices");
        return {static_cast<int>(list[0]), static_cast<int>(list[1]), static_cast<int>(list[2])};
    }

    void finish() const {
        if (values_.empty()) return;
        std::string names;
        for (const auto& [key, value] : values_) {
            if (!names.empty()) names += ", ";
            names += key;
        }
        fail("unknown key(s): " + names);
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ConfigError("scenario " + origin_ + ": " + message);
    }

  private:
    std::string origin_;
    std::map<std::string, std::string> values_;
};

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& origin) {
    KeyValues kv(text, origin);
    Scenario sc;

    if (kv.take_int("schema.version") != 1) kv.fail("schema.version must be 1");

    const bool cubic = kv.has("cavity.cubic_resonant_f_ghz");
    const bool explicit_box = kv.has("cavity.lx_m") || kv.has("cavity.ly_m") || kv.has("cavity.lz_m");
    if (cubic == explicit_box) {
        kv.fail("specify either cavity.cubic_resonant_f_ghz or all of cavity.{lx,ly,lz}_m");
    }
    if (cubic) {
        sc.geom = modes::cubic_geometry_for_sum_frequency(kv.take_double("cavity.cubic_resonant_f_ghz") * 1e9);
    } else {
        sc.geom.lx = kv.take_double("cavity.lx_m");
        sc.geom.ly = kv.take_double("cavity.ly_m");
        sc.geom.lz = kv.take_double("cavity.lz_m");
        modes::validate(sc.geom);
    }

    const double f_ghz = kv.take_double("gw.frequency_ghz");
    if (!(f_ghz > 0.0)) kv.fail("gw.frequency_ghz must be positive");
    sc.omega_gw = 2.0 * kPi * f_ghz * 1e9;
    sc.theta = (kv.has("gw.theta_pi") ? kv.take_double("gw.theta_pi") : 0.5) * kPi;
    sc.phi = (kv.has("gw.phi_pi") ? kv.take_double("gw.phi_pi") : 0.0) * kPi;
    if (kv.has("gw.polarization")) {
        const std::string pol = kv.take("gw.polarization");
        if (pol == "plus") {
            sc.polarization = gw::Polarization::plus;
        } else if (pol == "cross") {
            sc.polarization = gw::Polarization::cross;
        } else {
            kv.fail("gw.polarization must be plus or cross");
        }
    }
    if (kv.has("gw.strain_hplus")) {
        sc.h_plus = kv.take_double("gw.strain_hplus");
        if (!(sc.h_plus > 0.0)) kv.fail("gw.strain_hplus must be positive");
    }

    if (kv.has("modes.auto_resonant")) sc.auto_resonant = kv.take_bool("modes.auto_resonant");
    if (sc.auto_resonant) {
        if (kv.has("modes.alpha") || kv.has("modes.beta")) {
            kv.fail("modes.alpha/modes.beta require modes.auto_resonant = false");
        }
    } else {
        sc.alpha = kv.take_triple("modes.alpha");
        sc.beta = kv.take_triple("modes.beta");
    }
    if (kv.has("modes.index_cap")) {
        sc.index_cap = static_cast<int>(kv.take_int("modes.index_cap"));
        if (sc.index_cap < 1) kv.fail("modes.index_cap must be >= 1");
    }
    if (kv.has("modes.resonance_tol_rel")) {
        sc.resonance_tol_rel = kv.take_double("modes.resonance_tol_rel");
        if (!(sc.resonance_tol_rel >= 0.0)) kv.fail("modes.resonance_tol_rel must be >= 0");
    }

    if (kv.has("state.graviton_kind")) {
        const std::string kind = kv.take("state.graviton_kind");
        if (kind == "vacuum") {
            sc.graviton_kind = GravitonKind::vacuum;
        } else if (kind == "fock") {
            sc.graviton_kind = GravitonKind::fock;
        } else if (kind == "coherent") {
            sc.graviton_kind = GravitonKind::coherent;
        } else {
            kv.fail("state.graviton_kind must be vacuum, fock, or coherent");
        }
    }
    if (sc.graviton_kind == GravitonKind::vacuum) {
        if (kv.has("state.graviton_n")) kv.fail("state.graviton_n not allowed for vacuum pump");
        sc.graviton_n = 0.0;
    } else if (kv.has("state.graviton_n")) {
        sc.graviton_n = kv.take_double("state.graviton_n");
        if (!(sc.graviton_n >= 0.0)) kv.fail("state.graviton_n must be >= 0");
        if (sc.graviton_kind == GravitonKind::fock &&
            std::floor(sc.graviton_n) != sc.graviton_n) {
            kv.fail("state.graviton_n must be an integer for a Fock pump");
        }
    }
    if (kv.has("state.coherent_cutoff")) {
        if (sc.graviton_kind != GravitonKind::coherent) {
            kv.fail("state.coherent_cutoff requires state.graviton_kind = coherent");
        }
        sc.coherent_cutoff = kv.take_int("state.coherent_cutoff");
    }
    if (kv.has("state.alpha_fock")) {
        sc.alpha_fock = kv.take_int("state.alpha_fock");
        if (sc.alpha_fock < 0) kv.fail("state.alpha_fock must be >= 0");
    }
    if (kv.has("state.c_fock")) {
        sc.c_fock = kv.take_int("state.c_fock");
        if (sc.c_fock < 0) kv.fail("state.c_fock must be >= 0");
    }

    if (kv.has("time.tau_max")) {
        sc.tau_max = kv.take_double("time.tau_max");
        if (!(sc.tau_max > 0.0)) kv.fail("time.tau_max must be positive");
    }
    if (kv.has("time.points")) {
        sc.time_points = static_cast<int>(kv.take_int("time.points"));
        if (sc.time_points < 1) kv.fail("time.points must be >= 1");
    }

    if (kv.has("quad.order")) {
        sc.quad.order = static_cast<int>(kv.take_int("quad.order"));
        if (sc.quad.order < 2) kv.fail("quad.order must be >= 2");
    }
    if (kv.has("quad.rtol")) {
        sc.quad.rtol = kv.take_double("quad.rtol");
        if (!(sc.quad.rtol > 0.0)) kv.fail("quad.rtol must be positive");
    }
    if (kv.has("quad.max_doublings")) {
        sc.quad.max_doublings = static_cast<int>(kv.take_int("quad.max_doublings"));
        if (sc.quad.max_doublings < 0) kv.fail("quad.max_doublings must be >= 0");
    }

    if (kv.has("limits.sector_dim_cap")) {
        sc.sector_dim_cap = kv.take_int("limits.sector_dim_cap");
        if (sc.sector_dim_cap < 1) kv.fail("limits.sector_dim_cap must be >= 1");
    }

    if (kv.has("sweep.alpha_fock_values")) {
        sc.sweep_alpha_fock = kv.take_int_list("sweep.alpha_fock_values");
        for (const auto v : sc.sweep_alpha_fock) {
            if (v < 0) kv.fail("sweep.alpha_fock_values must be >= 0");
        }
    }

    kv.finish();
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open scenario file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    Scenario sc = parse_scenario(text, path);
    sc.source_path = path;
    sc.file_hash = fnv1a64(text);
    return sc;
}

}  // namespace gpmix::io
