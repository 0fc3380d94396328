#include "polybounce/app/commands.hpp"

#include "polybounce/errors.hpp"
#include "polybounce/experiment.hpp"
#include "polybounce/radiative.hpp"
#include "polybounce/spectrum.hpp"
#include "polybounce/transitions.hpp"

#include <cmath>

namespace polybounce::app {

namespace {

Cell opt(const std::optional<double>& v) {
    if (v) return *v;
    return std::monostate{};
}

Cell integer(long long v) { return v; }

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += "; ";
        out += p;
    }
    return out;
}

} // namespace

CommandResult cmd_spectrum(const RunConfig& cfg) {
    const auto tab = spectrum_table(cfg.s, cfg.n_max);
    CommandResult r;
    Table& t = r.table;
    t.command = "spectrum";
    t.columns = {{"s", "input", ""},
                 {"n", "input", ""},
                 {"epsilon", "lattice_sturm", ""},
                 {"epsilon", "bessel_watson", ""},
                 {"epsilon", "continuum_airy", ""},
                 {"epsilon", "continuum_plus_shift", ""},
                 {"epsilon", "published_table", ""},
                 {"route_diff", "abs_lattice_bessel", ""},
                 {"suspect_reference", "flag", ""},
                 {"extrapolated", "flag", ""},
                 {"status", "solver", ""}};
    for (const auto& c : tab.cells) {
        t.add_row({c.s, integer(c.n), opt(c.lattice), opt(c.bessel), c.continuum, opt(c.perturbative), opt(c.reference),
                   opt(c.route_agreement()), integer(c.suspect_reference), integer(c.extrapolated),
                   c.errors.empty() ? std::string("ok") : join(c.errors)});
    }
    const int failed = tab.failed_cells();
    t.meta = {{"cells", integer(static_cast<long long>(tab.cells.size()))},
              {"failed_cells", integer(failed)},
              {"incomplete_cells", integer(tab.incomplete_cells())}};
    if (failed == static_cast<int>(tab.cells.size())) r.exit_code = kExitNumerical;
    else if (failed > 0) r.exit_code = kExitPartial;
    return r;
}

CommandResult cmd_profile(const RunConfig& cfg, double s, int n) {
    const auto ctx = cfg.context();
    const auto params = DimensionlessParams::from_s(s);
    const auto state = lattice_states(params, n)[n - 1];
    const auto prof = density_profile(state, ctx, cfg.profile_resolution);
    CommandResult r;
    Table& t = r.table;
    t.command = "profile";
    t.columns = {{"series", "label", ""}, {"z", "grid", "m"}, {"density", "series", "1/m"}};
    double total = 0.0;
    for (const auto& [z, rho] : prof.lattice) {
        t.add_row({std::string("lattice_sturm"), z, rho});
        total += rho * prof.lambda;
    }
    for (const auto& [z, rho] : prof.continuum) t.add_row({std::string("continuum_airy"), z, rho});
    t.meta = {{"s", s},
              {"n", integer(n)},
              {"lambda_m", prof.lambda},
              {"lattice_norm", total},
              {"sup_deviation", prof.sup_deviation}};
    return r;
}

CommandResult cmd_bound(const RunConfig& cfg) {
    const auto ctx = cfg.context();
    CommandResult r;
    Table& t = r.table;
    t.command = "bound";
    t.columns = {{"scenario", "label", ""},
                 {"n", "input", ""},
                 {"g_factor", "input", ""},
                 {"delta_e_exp", "input", "peV"},
                 {"l0", "rescaled_gravity", "m"},
                 {"lambda_max", "energy_resolution_bound", "m"},
                 {"lambda_max_angstrom", "energy_resolution_bound", "angstrom"}};
    const double de[2] = {cfg.delta_e1_pev, cfg.delta_e2_pev};
    for (const auto& [label, gf] : {std::pair<const char*, double>{"free_fall", 1.0}, {"centrifugal", cfg.g_factor}}) {
        for (int n = 1; n <= 2; ++n) {
            const auto b = granit_bound_lambda(n, de[n - 1] * units::kPeV, ctx, gf);
            t.add_row({std::string(label), integer(n), gf, de[n - 1], b.l0_effective, b.lambda_max,
                       b.lambda_max / units::kAngstrom});
        }
    }
    const auto h = granit_heights(ctx);
    t.meta = {{"h1_um", h[0].micrometers},
              {"h2_um", h[1].micrometers},
              {"note", std::string("upper bounds; the physical reading is lambda much smaller than the bound")}};
    return r;
}

CommandResult cmd_lifetime(const RunConfig& cfg) {
    const auto ctx = cfg.context();
    const auto model = VibrationSpectrumModel::constant_average(cfg.s_a);
    const auto omega = omega_n_factor(cfg.level, model, ctx, cfg.omega_terms);
    const auto bound = vibration_bound_lambda(cfg.delta_t_exp, cfg.t_n, omega.omega, ctx);
    CommandResult r;
    Table& t = r.table;
    t.command = "lifetime";
    t.columns = {{"s", "input", ""},
                 {"n", "input", ""},
                 {"omega_n", "alternating_sum", "1/s"},
                 {"tau", "lifetime_formula", "s"},
                 {"delta_t", "tau_minus_t", "s"}};
    for (double s : cfg.s) {
        const auto lt = lifetime_with_omega(cfg.t_n, omega.omega, DimensionlessParams::from_s(s));
        t.add_row({s, integer(cfg.level), omega.omega, lt.tau, lt.delta_t});
    }
    t.meta = {{"omega_n", omega.omega},
              {"omega_last_term", omega.last_term},
              {"omega_terms", integer(omega.n_max)},
              {"s_a", cfg.s_a},
              {"t_n", cfg.t_n},
              {"delta_t_exp", cfg.delta_t_exp},
              {"bounded", integer(bound.bounded)},
              {"lambda_max_m", bound.lambda_max}};
    return r;
}

CommandResult cmd_rate(const RunConfig& cfg) {
    const auto ctx = cfg.context();
    const int k = 2, n = 1;
    CommandResult r;
    Table& t = r.table;
    t.command = "rate";
    t.columns = {{"quantity", "label", ""}, {"model", "label", ""}, {"s", "input", ""}, {"L", "input", ""},
                 {"value", "model", ""}};
    const std::monostate none;
    const double g = quad_rate_qm(k, n, ctx);
    t.add_row({std::string("gamma_qm_per_s"), std::string("continuum_closed_form"), none, none, g});
    t.add_row({std::string("log10_gamma_qm"), std::string("continuum_closed_form"), none, none, std::log10(g)});

    const QuadrupoleModel models[] = {QuadrupoleModel::printed_cubic, QuadrupoleModel::printed_quadratic,
                                      QuadrupoleModel::derived};
    for (auto m : models) {
        const std::string name = model_name(m);
        for (double s : cfg.rate_s) {
            const auto p = DimensionlessParams::from_s(s);
            const double f = m == QuadrupoleModel::derived ? polymer_frequency_from_levels(k, n, p)
                                                           : polymer_frequency(k, n, p);
            const auto q = polymer_quadrupole(k, n, p, cfg.L, m);
            t.add_row({std::string("frequency_ratio"), name, s, integer(cfg.L), f});
            t.add_row({std::string("quadrupole_ratio"), name, s, integer(cfg.L), q.ratio});
            t.add_row({std::string("rate_ratio"), name, s, integer(cfg.L), polymer_rate_ratio(k, n, p, cfg.L, m)});
        }
        for (int L : {cfg.L, 2 * cfg.L}) {
            const auto fit = fit_rate_coefficient(k, n, cfg.rate_s, L, m);
            t.add_row({std::string("coefficient_s^-2"), name, none, integer(L), fit.leading()});
        }
    }
    for (double s : cfg.rate_s) {
        const auto p = DimensionlessParams::from_s(s);
        t.add_row({std::string("quadrupole_ratio"), std::string("lattice_eigenpairs"), s, none,
                   lattice_quadrupole_ratio(k, n, p)});
        t.add_row({std::string("rate_ratio"), std::string("lattice_eigenpairs"), s, none, lattice_rate_ratio(k, n, p)});
    }
    t.add_row({std::string("coefficient_s^-2"), std::string("lattice_eigenpairs"), none, none,
               fit_lattice_rate_coefficient(k, n, cfg.rate_s).leading()});
    t.meta = {{"transition", std::string("2->1")}, {"fit_basis", std::string("s^-2, s^-3, s^-4")}};
    return r;
}

} // namespace polybounce::app
