#include "polybounce/app/commands.hpp"

#include "polybounce/errors.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>

namespace polybounce::app {

namespace {

constexpr double kDefaultProfileS = 10.0;

struct Flags {
    std::string config;
    std::string format;
    std::string out;
    std::vector<double> s;
    int nmax = 0;
    double g_factor = 0.0;
    int L = 0;
    int n = 0;
};

void add_common(CLI::App* sub, Flags& f) {
    sub->add_option("--config", f.config, "JSON config file (default: $POLYBOUNCE_CONFIG)");
    sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json", "table"}));
    sub->add_option("--out", f.out, "Write output to this path instead of stdout");
    sub->add_option("--s", f.s, "Comma-separated list of s = l0 / lambda")->delimiter(',');
    sub->add_option("--nmax", f.nmax, "Highest level in the spectrum grid");
    sub->add_option("--g-factor", f.g_factor, "Gravity multiplier for the centrifugal scenario");
    sub->add_option("--L", f.L, "Perturbation-sum cutoff");
    sub->add_option("--n", f.n, "Level for profile and lifetime");
}

RunConfig build_config(CLI::App* sub, const Flags& f) {
    RunConfig cfg;
    std::string path = f.config;
    if (path.empty()) {
        if (const char* env = std::getenv(kConfigEnvVar)) path = env;
    }
    if (!path.empty()) apply_json_file(cfg, path);
    if (sub->count("--format")) cfg.format = parse_format(f.format);
    if (sub->count("--out")) cfg.out = f.out;
    if (sub->count("--s")) cfg.s = f.s;
    if (sub->count("--nmax")) cfg.n_max = f.nmax;
    if (sub->count("--g-factor")) cfg.g_factor = f.g_factor;
    if (sub->count("--L")) cfg.L = f.L;
    if (sub->count("--n")) cfg.level = f.n;
    cfg.validate();
    return cfg;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polymer bouncer: spectra, density profiles, length bounds, lifetimes and emission rates"};
    app.name("polybounce");
    app.require_subcommand(1, 1);

    Flags flags;
    CLI::App* spectrum = app.add_subcommand("spectrum", "Energy levels for every (s, n) by both solver routes");
    CLI::App* profile = app.add_subcommand("profile", "Lattice and continuum densities for one (s, n)");
    CLI::App* bound = app.add_subcommand("bound", "Upper bounds on lambda from the energy resolution");
    CLI::App* lifetime = app.add_subcommand("lifetime", "Vibration-induced lifetimes and the resulting lambda bound");
    CLI::App* rate = app.add_subcommand("rate", "Quadrupole emission rate and its polymer ratio for 2 -> 1");
    for (CLI::App* sub : {spectrum, profile, bound, lifetime, rate}) add_common(sub, flags);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    CLI::App* sub = app.get_subcommands().front();
    try {
        const RunConfig cfg = build_config(sub, flags);
        CommandResult result;
        if (sub == spectrum) {
            result = cmd_spectrum(cfg);
        } else if (sub == profile) {
            double s = kDefaultProfileS;
            if (sub->count("--s")) {
                if (flags.s.size() != 1) throw ConfigError("profile takes a single --s value");
                s = flags.s.front();
            } else if (cfg.s.size() == 1) {
                s = cfg.s.front();
            }
            result = cmd_profile(cfg, s, cfg.level);
        } else if (sub == bound) {
            result = cmd_bound(cfg);
        } else if (sub == lifetime) {
            result = cmd_lifetime(cfg);
        } else {
            result = cmd_rate(cfg);
        }

        const std::string text = render(result.table, cfg.format);
        if (cfg.out.empty()) {
            out << text;
        } else {
            std::ofstream file(cfg.out, std::ios::binary);
            if (!file) throw ConfigError("cannot write '" + cfg.out + "'");
            file << text;
        }
        return result.exit_code;
    } catch (const ConfigError& e) {
        err << "polybounce: " << e.what() << "\n";
        return kExitConfig;
    } catch (const DomainError& e) {
        err << "polybounce: invalid input: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "polybounce: numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
}

} // namespace polybounce::app
