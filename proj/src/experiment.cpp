#include "polybounce/experiment.hpp"

#include "polybounce/errors.hpp"
#include "polybounce/specfun.hpp"
#include "polybounce/spectrum.hpp"

#include <cmath>

namespace polybounce {

std::vector<CriticalHeight> granit_heights(const PhysicalContext& ctx, int count) {
    if (count < 1) throw DomainError("granit_heights: count must be >= 1");
    std::vector<CriticalHeight> out;
    const auto zeros = specfun::airy_zeros(count);
    for (int n = 1; n <= count; ++n) {
        const double h = -zeros[n - 1] * ctx.l0();
        out.push_back({n, h, h / units::kMicrometer});
    }
    return out;
}

double ExperimentalHeight::quadrature_error() const { return std::hypot(systematic_um, statistical_um); }

double ExperimentalHeight::linear_error() const { return systematic_um + statistical_um; }

bool ExperimentalHeight::contains_quadrature(double h_um) const {
    return std::fabs(h_um - value_um) <= quadrature_error();
}

bool ExperimentalHeight::contains_linear(double h_um) const { return std::fabs(h_um - value_um) <= linear_error(); }

const std::array<ExperimentalHeight, 2>& granit_measured_heights() {
    static const std::array<ExperimentalHeight, 2> heights{{{1, 12.2, 1.8, 0.7}, {2, 21.6, 2.2, 0.7}}};
    return heights;
}

BoundReport granit_bound_lambda(int n, double delta_e_exp_joules, const PhysicalContext& ctx, double g_factor) {
    if (n < 1) throw DomainError("granit_bound_lambda: n must be >= 1");
    if (!(delta_e_exp_joules > 0.0)) throw DomainError("granit_bound_lambda: energy resolution must be positive");
    if (!(g_factor >= 1.0)) throw DomainError("granit_bound_lambda: g_factor must be >= 1");
    const auto eff = ctx.with_gravity_factor(g_factor);
    const double a = specfun::airy_zero(n);
    BoundReport r;
    r.level = n;
    r.delta_e_exp = Energy::from_joules(delta_e_exp_joules);
    r.g_factor = g_factor;
    r.l0_effective = eff.l0();
    r.lambda_max = std::sqrt(60.0 * eff.l0() * delta_e_exp_joules / (eff.mass() * eff.gravity() * a * a));
    return r;
}

Energy shift_energy_physical(const DimensionlessParams& params, int n, const PhysicalContext& ctx) {
    const double lambda = ctx.l0() / params.s;
    return Energy::from_joules(perturbative_shift(params, n) * ctx.hbar() * ctx.hbar() / (ctx.mass() * lambda * lambda));
}

Energy shift_energy_at_length(double lambda, int n, const PhysicalContext& ctx) {
    if (!(lambda > 0.0)) throw DomainError("shift_energy_at_length: lambda must be positive");
    if (n < 1) throw DomainError("shift_energy_at_length: n must be >= 1");
    const double s = ctx.l0() / lambda;
    const double a = specfun::airy_zero(n);
    const double shift = -a * a / (120.0 * s * s * s * s);
    return Energy::from_joules(shift * ctx.hbar() * ctx.hbar() / (ctx.mass() * lambda * lambda));
}

} // namespace polybounce
