#ifndef POLYBOUNCE_APP_CONFIG_HPP
#define POLYBOUNCE_APP_CONFIG_HPP

#include "polybounce/physical.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace polybounce::app {

constexpr const char* kConfigEnvVar = "POLYBOUNCE_CONFIG";

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error("config: " + what) {}
};

enum class OutputFormat { csv, json, table };

OutputFormat parse_format(const std::string& name);
const char* format_name(OutputFormat f);

// Flat configuration; every field is also a JSON key of the same name.
struct RunConfig {
    double mass = 1.674927e-27;
    double gravity = 9.806;
    double hbar = 1.054571817e-34;
    double planck_mass = 2.176434e-8;
    double speed_of_light = 2.99792458e8;

    std::vector<double> s = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    int n_max = 10;
    int level = 1;
    int profile_resolution = 400;

    double s_a = 1e-10;
    double t_n = 1e5;
    double delta_t_exp = 1.0;
    int omega_terms = 20;

    double delta_e1_pev = 0.102;
    double delta_e2_pev = 0.051;
    double g_factor = 1e7;

    std::vector<double> rate_s = {10, 14, 20};
    int L = 30;

    OutputFormat format = OutputFormat::csv;
    std::string out;

    PhysicalContext context() const;
    void validate() const;
};

// Applies the keys of a JSON object on top of cfg; unknown keys and wrong types are rejected.
void apply_json(RunConfig& cfg, const std::string& text, const std::string& origin = "<json>");
void apply_json_file(RunConfig& cfg, const std::string& path);

} // namespace polybounce::app

#endif
