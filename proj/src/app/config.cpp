#include "polybounce/app/config.hpp"

#include "polybounce/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace polybounce::app {

namespace {

using nlohmann::json;

double number(const json& v, const std::string& key) {
    if (!v.is_number()) throw ConfigError("'" + key + "' must be a number");
    return v.get<double>();
}

int integer(const json& v, const std::string& key) {
    if (!v.is_number_integer()) throw ConfigError("'" + key + "' must be an integer");
    return v.get<int>();
}

std::vector<double> number_list(const json& v, const std::string& key) {
    if (v.is_number()) return {v.get<double>()};
    if (!v.is_array()) throw ConfigError("'" + key + "' must be a number or an array of numbers");
    std::vector<double> out;
    for (const auto& e : v) out.push_back(number(e, key));
    return out;
}

void require_positive(double v, const char* key) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(std::string("'") + key + "' must be positive");
}

void require_min(int v, int lo, const char* key) {
    if (v < lo) throw ConfigError(std::string("'") + key + "' must be >= " + std::to_string(lo));
}

} // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    if (name == "table") return OutputFormat::table;
    throw ConfigError("unknown format '" + name + "'");
}

const char* format_name(OutputFormat f) {
    switch (f) {
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
    case OutputFormat::table: return "table";
    }
    return "csv";
}

PhysicalContext RunConfig::context() const {
    try {
        return PhysicalContext(mass, gravity, hbar, planck_mass, speed_of_light);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
}

void RunConfig::validate() const {
    require_positive(mass, "mass");
    require_positive(gravity, "gravity");
    require_positive(hbar, "hbar");
    require_positive(planck_mass, "planck_mass");
    require_positive(speed_of_light, "speed_of_light");
    if (s.empty()) throw ConfigError("'s' must not be empty");
    for (double v : s)
        if (!(v >= 1.0) || !std::isfinite(v)) throw ConfigError("every 's' entry must be >= 1");
    require_min(n_max, 1, "n_max");
    require_min(level, 1, "level");
    require_min(profile_resolution, 2, "profile_resolution");
    if (!(s_a >= 0.0) || !std::isfinite(s_a)) throw ConfigError("'s_a' must be nonnegative");
    require_positive(t_n, "t_n");
    require_positive(delta_t_exp, "delta_t_exp");
    require_min(omega_terms, level + 1, "omega_terms");
    require_positive(delta_e1_pev, "delta_e1_pev");
    require_positive(delta_e2_pev, "delta_e2_pev");
    if (!(g_factor >= 1.0) || !std::isfinite(g_factor)) throw ConfigError("'g_factor' must be >= 1");
    if (rate_s.size() < 3) throw ConfigError("'rate_s' needs at least three entries");
    for (double v : rate_s)
        if (!(v >= 1.0) || !std::isfinite(v)) throw ConfigError("every 'rate_s' entry must be >= 1");
    require_min(L, 10, "L");
}

void apply_json(RunConfig& cfg, const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    if (!doc.is_object()) throw ConfigError(origin + ": top level must be an object");
    for (const auto& [key, v] : doc.items()) {
        if (key == "mass") cfg.mass = number(v, key);
        else if (key == "gravity") cfg.gravity = number(v, key);
        else if (key == "hbar") cfg.hbar = number(v, key);
        else if (key == "planck_mass") cfg.planck_mass = number(v, key);
        else if (key == "speed_of_light") cfg.speed_of_light = number(v, key);
        else if (key == "s") cfg.s = number_list(v, key);
        else if (key == "n_max") cfg.n_max = integer(v, key);
        else if (key == "level") cfg.level = integer(v, key);
        else if (key == "profile_resolution") cfg.profile_resolution = integer(v, key);
        else if (key == "s_a") cfg.s_a = number(v, key);
        else if (key == "t_n") cfg.t_n = number(v, key);
        else if (key == "delta_t_exp") cfg.delta_t_exp = number(v, key);
        else if (key == "omega_terms") cfg.omega_terms = integer(v, key);
        else if (key == "delta_e1_pev") cfg.delta_e1_pev = number(v, key);
        else if (key == "delta_e2_pev") cfg.delta_e2_pev = number(v, key);
        else if (key == "g_factor") cfg.g_factor = number(v, key);
        else if (key == "rate_s") cfg.rate_s = number_list(v, key);
        else if (key == "L") cfg.L = integer(v, key);
        else if (key == "format") {
            if (!v.is_string()) throw ConfigError("'format' must be a string");
            cfg.format = parse_format(v.get<std::string>());
        } else if (key == "out") {
            if (!v.is_string()) throw ConfigError("'out' must be a string");
            cfg.out = v.get<std::string>();
        } else {
            throw ConfigError(origin + ": unknown key '" + key + "'");
        }
    }
}

void apply_json_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    apply_json(cfg, buf.str(), path);
}

} // namespace polybounce::app
