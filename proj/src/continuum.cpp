#include "polybounce/continuum.hpp"

#include "polybounce/errors.hpp"
#include "polybounce/quadrature.hpp"
#include "polybounce/specfun.hpp"

#include <algorithm>
#include <cmath>

namespace polybounce {

using specfun::airy_ai;
using specfun::airy_ai_prime;
using specfun::airy_zero;

double ContinuumState::psi(double z) const {
    if (z < 0.0) return 0.0;
    return norm * airy_ai(airy_zero + z / context.l0());
}

ContinuumState qb_state(int n, const PhysicalContext& ctx) {
    if (n < 1) throw DomainError("qb_state: n must be >= 1");
    const double a = airy_zero(n);
    return ContinuumState{n, a, 1.0 / (std::sqrt(ctx.l0()) * std::fabs(airy_ai_prime(a))), ctx};
}

Energy qb_energy(int n, const PhysicalContext& ctx) {
    if (n < 1) throw DomainError("qb_energy: n must be >= 1");
    return Energy::from_joules(-ctx.energy_scale() * airy_zero(n));
}

double qb_wavefunction(int n, const PhysicalContext& ctx, double z) {
    if (z < 0.0) return 0.0;
    return qb_state(n, ctx).psi(z);
}

namespace {

double parity(int e) { return (e % 2 == 0) ? 1.0 : -1.0; }

} // namespace

double qb_z_closed(int k, int n, double a_k, double a_n) {
    // With N_n > 0 direct integration gives <1|z|2> > 0: exponent n - k + 1.
    const double d = a_k - a_n;
    return 2.0 * parity(n - k + 1) / (d * d);
}

double qb_z2_closed(int k, int n, double a_k, double a_n) {
    const double d = a_k - a_n;
    return 24.0 * parity(k - n - 1) / (d * d * d * d);
}

double qb_moment_quadrature(int k, int n, int power) {
    if (k < 1 || n < 1) throw DomainError("qb_moment_quadrature: levels must be >= 1");
    const double ak = airy_zero(k);
    const double an = airy_zero(n);
    const double nk = 1.0 / std::fabs(airy_ai_prime(ak));
    const double nn = 1.0 / std::fabs(airy_ai_prime(an));
    const double cut = std::max(std::fabs(ak), std::fabs(an)) + 15.0;
    auto f = [&](double zeta) { return std::pow(zeta, power) * airy_ai(ak + zeta) * airy_ai(an + zeta); };
    return nk * nn * integrate_adaptive(f, 0.0, cut, 1e-10 / (nk * nn)).value;
}

double qb_matrix_z(int k, int n, const PhysicalContext& ctx) {
    if (k == n) return ctx.l0() * qb_moment_quadrature(k, n, 1);
    return ctx.l0() * qb_z_closed(k, n, airy_zero(k), airy_zero(n));
}

double qb_matrix_z2(int k, int n, const PhysicalContext& ctx) {
    if (k == n) return ctx.l0() * ctx.l0() * qb_moment_quadrature(k, n, 2);
    return ctx.l0() * ctx.l0() * qb_z2_closed(k, n, airy_zero(k), airy_zero(n));
}

double transition_region_bessel(double order, double x) {
    const double c = std::cbrt(2.0 / x);
    return c * airy_ai(c * (order - x));
}

double continuum_limit_residual(const PolymerState& state, const PhysicalContext& /*ctx*/) {
    // Dimensionless form: psi_mu sqrt(s) against Ai(a_n + mu/s) / |Ai'(a_n)|;
    // the l0 factors cancel.
    const double s = state.params.s;
    const double a = airy_zero(state.level);
    const double aip = airy_ai_prime(a);
    const double sign = aip > 0.0 ? 1.0 : -1.0;
    const double inv = 1.0 / std::fabs(aip);

    double peak = 0.0;
    const double cut = std::fabs(a) + 15.0;
    for (int i = 0; i <= 4000; ++i) peak = std::max(peak, std::fabs(airy_ai(a + cut * i / 4000.0)) * inv);

    double worst = 0.0;
    const double rs = std::sqrt(s);
    for (int mu = 0; mu <= state.dimension(); ++mu) {
        const double cont = sign * airy_ai(a + mu / s) * inv;
        peak = std::max(peak, std::fabs(cont));
        worst = std::max(worst, std::fabs(state.samples[mu] * rs - cont));
    }
    return worst / peak;
}

double continuum_limit_residual(const DimensionlessParams& params, int n, const PhysicalContext& ctx) {
    if (params.s < 2.0) throw DomainError("continuum_limit_residual: s must be >= 2");
    const TridiagonalOperator H = build_hamiltonian(params, n);
    const double eps = eigenvalues_sturm(H, n)[n - 1];
    PolymerState st = eigenvector_inverse_iteration(H, eps);
    st.level = n;
    return continuum_limit_residual(st, ctx);
}

} // namespace polybounce
