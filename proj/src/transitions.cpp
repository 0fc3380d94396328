#include "polybounce/transitions.hpp"

#include "polybounce/continuum.hpp"
#include "polybounce/errors.hpp"
#include "polybounce/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace polybounce {

namespace {

double parity(int e) { return (e % 2 == 0) ? 1.0 : -1.0; }

void check_pair(int n, int m, const char* who) {
    if (n < 1 || m < 1) throw DomainError(std::string(who) + ": levels must be >= 1");
    if (n == m) throw DomainError(std::string(who) + ": levels must differ");
}

std::pair<PolymerState, PolymerState> state_pair(const DimensionlessParams& params, int n, int m) {
    auto states = lattice_states(params, std::max(n, m));
    return {states[n - 1], states[m - 1]};
}

} // namespace

VibrationSpectrumModel VibrationSpectrumModel::constant_average(double s_a) {
    if (!(s_a >= 0.0) || !std::isfinite(s_a)) throw DomainError("VibrationSpectrumModel: S_a must be nonnegative");
    VibrationSpectrumModel m;
    m.kind_ = Kind::constant_average;
    m.constant_ = s_a;
    return m;
}

VibrationSpectrumModel VibrationSpectrumModel::tabulated(std::vector<std::pair<double, double>> samples) {
    if (samples.empty()) throw DomainError("VibrationSpectrumModel: empty table");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!(samples[i].second >= 0.0)) throw DomainError("VibrationSpectrumModel: S_a must be nonnegative");
        if (i > 0 && !(samples[i].first > samples[i - 1].first))
            throw DomainError("VibrationSpectrumModel: frequencies must increase");
    }
    VibrationSpectrumModel m;
    m.kind_ = Kind::tabulated;
    m.samples_ = std::move(samples);
    return m;
}

double VibrationSpectrumModel::operator()(double omega) const {
    if (kind_ == Kind::constant_average) return constant_;
    const double w = std::fabs(omega);
    if (w <= samples_.front().first) return samples_.front().second;
    if (w >= samples_.back().first) return samples_.back().second;
    auto hi = std::upper_bound(samples_.begin(), samples_.end(), w,
                               [](double v, const std::pair<double, double>& p) { return v < p.first; });
    auto lo = hi - 1;
    const double t = (w - lo->first) / (hi->first - lo->first);
    return lo->second + t * (hi->second - lo->second);
}

double matrix_T_direct(const PolymerState& n, const PolymerState& m) {
    const int dim = std::max(n.dimension(), m.dimension());
    double sum = 0.0;
    for (int mu = 1; mu <= dim; ++mu) sum += n.psi(mu) * (m.psi(mu + 1) - m.psi(mu - 1));
    return sum;
}

double matrix_T_direct(const DimensionlessParams& params, int n, int m) {
    if (n < 1 || m < 1) throw DomainError("matrix_T_direct: levels must be >= 1");
    const auto [a, b] = state_pair(params, n, m);
    return matrix_T_direct(a, b);
}

double matrix_T_closed(const PolymerState& n, const PolymerState& m) {
    const double de = n.energy - m.energy;
    if (std::fabs(de) < 1e-13) throw DomainError("matrix_T_closed: degenerate pair");
    const int dim = std::max(n.dimension(), m.dimension());
    double mu_sum = 0.0;
    for (int mu = 1; mu <= dim; ++mu) mu_sum += mu * n.psi(mu) * m.psi(mu);
    const double ups = n.params.upsilon;
    return (2.0 * n.psi(1) * m.psi(1) - mu_sum / (ups * ups)) / (2.0 * de);
}

double matrix_T_closed(const DimensionlessParams& params, int n, int m) {
    check_pair(n, m, "matrix_T_closed");
    const auto [a, b] = state_pair(params, n, m);
    return matrix_T_closed(a, b);
}

double forward_overlap(const PolymerState& n, const PolymerState& m) {
    const int dim = std::max(n.dimension(), m.dimension());
    double sum = 0.0;
    for (int mu = 0; mu <= dim; ++mu) sum += n.psi(mu) * m.psi(mu + 1);
    return sum;
}

double lattice_position_element(const PolymerState& n, const PolymerState& m) {
    const int dim = std::max(n.dimension(), m.dimension());
    double sum = 0.0;
    for (int mu = 1; mu <= dim; ++mu) sum += mu * n.psi(mu) * m.psi(mu);
    return sum / n.params.s;
}

double transition_omega(int n, int m, const PhysicalContext& ctx) {
    return (qb_energy(n, ctx).joules - qb_energy(m, ctx).joules) / ctx.hbar();
}

double TransitionResult::momentum(const PhysicalContext& ctx, const DimensionlessParams& params) const {
    const double lambda = ctx.l0() / params.s;
    return ctx.hbar() / lambda * P_dimensionless;
}

TransitionResult transition(const DimensionlessParams& params, int n, int m, const PhysicalContext& ctx) {
    check_pair(n, m, "transition");
    TransitionResult r;
    r.from = n;
    r.to = m;
    r.T = matrix_T_closed(params, n, m);
    r.P_dimensionless = 0.5 * r.T;
    r.omega = transition_omega(n, m, ctx);
    return r;
}

MomentumElement matrix_P_quantum(int n, int m, const DimensionlessParams& params, const PhysicalContext& ctx) {
    check_pair(n, m, "matrix_P_quantum");
    MomentumElement p;
    p.omega = transition_omega(n, m, ctx);
    const double ratio = 1.0 / params.s; // lambda / l0
    p.correction = parity(n - m) * ctx.gravity() / (2.0 * ctx.l0() * p.omega * p.omega) * ratio * ratio * ratio;
    p.magnitude = ctx.mass() * ctx.gravity() / std::fabs(p.omega) * (1.0 + p.correction);
    return p;
}

RateResult transition_rate(int n, int m, const VibrationSpectrumModel& model, const DimensionlessParams& params,
                           const PhysicalContext& ctx) {
    check_pair(n, m, "transition_rate");
    const double w = transition_omega(n, m, ctx);
    const double s_a = model(w);
    if (s_a < 0.0) throw DomainError("transition_rate: negative S_a");
    const double ratio = 1.0 / params.s;
    const double corr = parity(n - m) * ctx.gravity() / (ctx.l0() * w * w) * ratio * ratio * ratio;
    RateResult r;
    r.bracket = 1.0 + corr;
    if (std::fabs(corr) > 1.0) {
        r.clamped = true;
        r.bracket = std::max(0.0, r.bracket);
    }
    const double k = ctx.mass() * ctx.gravity() / ctx.hbar();
    r.rate = k * k / (w * w * w * w) * r.bracket * s_a;
    return r;
}

OmegaFactor omega_n_factor(int n, const VibrationSpectrumModel& model, const PhysicalContext& ctx, int n_max) {
    if (n < 1) throw DomainError("omega_n_factor: n must be >= 1");
    if (n_max < n + 1) throw DomainError("omega_n_factor: n_max must exceed n");
    OmegaFactor f;
    f.n_max = n_max;
    const double k = ctx.mass() * ctx.gravity() / ctx.hbar();
    const double pre = k * k * ctx.gravity() / ctx.l0();
    const double en = qb_energy(n, ctx).joules;
    for (int m = 1; m <= n_max; ++m) {
        if (m == n) continue;
        const double w = (en - qb_energy(m, ctx).joules) / ctx.hbar();
        const double w2 = w * w;
        const double term = pre * parity(n - m) * model(w) / (w2 * w2 * w2);
        f.terms.push_back(term);
        f.omega += term;
    }
    f.last_term = std::fabs(f.terms.back());
    return f;
}

LifetimeResult lifetime_with_omega(double t_n, double omega_n, const DimensionlessParams& params) {
    if (!(t_n > 0.0)) throw DomainError("lifetime: t_n must be positive");
    LifetimeResult r;
    r.t_n = t_n;
    r.omega_n = omega_n;
    r.tau = t_n / (1.0 + t_n * omega_n / params.upsilon);
    r.delta_t = r.tau - t_n;
    return r;
}

LifetimeResult lifetime(int n, double t_n, const DimensionlessParams& params, const VibrationSpectrumModel& model,
                        const PhysicalContext& ctx, int n_max) {
    return lifetime_with_omega(t_n, omega_n_factor(n, model, ctx, n_max).omega, params);
}

LambdaBound vibration_bound_lambda(double delta_t_exp, double t_n, double omega_n, const PhysicalContext& ctx) {
    if (!(delta_t_exp > 0.0) || !(t_n > 0.0)) throw DomainError("vibration_bound_lambda: times must be positive");
    LambdaBound b;
    if (omega_n == 0.0) {
        b.bounded = false;
        b.lambda_max = std::numeric_limits<double>::infinity();
        return b;
    }
    b.lambda_max = ctx.l0() * std::cbrt(delta_t_exp / (t_n * t_n * std::fabs(omega_n)));
    return b;
}

} // namespace polybounce
