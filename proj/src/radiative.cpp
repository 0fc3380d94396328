#include "polybounce/radiative.hpp"

#include "polybounce/continuum.hpp"
#include "polybounce/errors.hpp"
#include "polybounce/specfun.hpp"
#include "polybounce/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace polybounce {

namespace {

double parity(int e) { return (e % 2 == 0) ? 1.0 : -1.0; }

void check_pair(int k, int n, const char* who) {
    if (k < 1 || n < 1) throw DomainError(std::string(who) + ": levels must be >= 1");
    if (k == n) throw DomainError(std::string(who) + ": levels must differ");
}

double f_from_zeros(double al, double an) {
    const double d = al - an;
    return (an - 6.0 / (d * d)) / (3.0 * d * d * d);
}

double g_from_zeros(double al, double an) {
    const double d = al - an;
    const double d3 = d * d * d;
    return -(al + an) / (6.0 * d3) - 2.0 / (d3 * d * d);
}

// <k|z^2|n> / l0^2 including the diagonal.
double q_element(int k, int n, const std::vector<double>& a) {
    if (k == n) return 8.0 * a[n - 1] * a[n - 1] / 15.0;
    return qb_z2_closed(k, n, a[k - 1], a[n - 1]);
}

// Solves the 3x3 system m x = b by partial pivoting.
std::array<double, 3> solve3(std::array<std::array<double, 3>, 3> m, std::array<double, 3> b) {
    for (int c = 0; c < 3; ++c) {
        int p = c;
        for (int r = c + 1; r < 3; ++r)
            if (std::fabs(m[r][c]) > std::fabs(m[p][c])) p = r;
        if (m[p][c] == 0.0) throw NumericalFailure("fit_rate_coefficient: singular normal equations");
        std::swap(m[c], m[p]);
        std::swap(b[c], b[p]);
        for (int r = c + 1; r < 3; ++r) {
            const double f = m[r][c] / m[c][c];
            for (int j = c; j < 3; ++j) m[r][j] -= f * m[c][j];
            b[r] -= f * b[c];
        }
    }
    std::array<double, 3> x{};
    for (int c = 2; c >= 0; --c) {
        double v = b[c];
        for (int j = c + 1; j < 3; ++j) v -= m[c][j] * x[j];
        x[c] = v / m[c][c];
    }
    return x;
}

template <class Ratio>
RateCoefficientFit fit_ratio(const std::vector<double>& s_values, Ratio ratio) {
    if (s_values.size() < 3) throw DomainError("fit_rate_coefficient: need at least three s values");
    std::array<std::array<double, 3>, 3> m{};
    std::array<double, 3> b{};
    std::vector<std::array<double, 3>> rows;
    std::vector<double> ys;
    for (double s : s_values) {
        const std::array<double, 3> row{std::pow(s, -2), std::pow(s, -3), std::pow(s, -4)};
        const double y = ratio(DimensionlessParams::from_s(s)) - 1.0;
        rows.push_back(row);
        ys.push_back(y);
        for (int i = 0; i < 3; ++i) {
            b[i] += row[i] * y;
            for (int j = 0; j < 3; ++j) m[i][j] += row[i] * row[j];
        }
    }
    RateCoefficientFit fit;
    fit.s_values = s_values;
    fit.coefficients = solve3(m, b);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        double pred = 0.0;
        for (int j = 0; j < 3; ++j) pred += fit.coefficients[j] * rows[i][j];
        fit.max_residual = std::max(fit.max_residual, std::fabs(pred - ys[i]));
    }
    return fit;
}

} // namespace

double quad_rate_qm(int k, int n, const PhysicalContext& ctx) {
    check_pair(k, n, "quad_rate_qm");
    const double w = (qb_energy(k, ctx).joules - qb_energy(n, ctx).joules) / ctx.hbar();
    const double q = ctx.mass() * qb_matrix_z2(k, n, ctx);
    const double mc2 = ctx.planck_mass() * ctx.speed_of_light() * ctx.speed_of_light();
    const double w2 = w * w;
    return 4.0 / 15.0 * std::fabs(w2 * w2 * w) * q * q / (mc2 * mc2);
}

double polymer_frequency(int k, int n, const DimensionlessParams& params) {
    check_pair(k, n, "polymer_frequency");
    const double a = specfun::airy_zero(k) + specfun::airy_zero(n);
    return 1.0 - a / (60.0 * params.s * params.s);
}

double polymer_frequency_from_levels(int k, int n, const DimensionlessParams& params) {
    check_pair(k, n, "polymer_frequency_from_levels");
    const double ek = continuum_energy(params, k), en = continuum_energy(params, n);
    const double dk = perturbative_shift(params, k), dn = perturbative_shift(params, n);
    return ((ek + dk) - (en + dn)) / (ek - en);
}

double f_coupling(int l, int n) {
    check_pair(l, n, "f_coupling");
    return f_from_zeros(specfun::airy_zero(l), specfun::airy_zero(n));
}

double g_coupling(int l, int n) {
    check_pair(l, n, "g_coupling");
    return g_from_zeros(specfun::airy_zero(l), specfun::airy_zero(n));
}

const char* model_name(QuadrupoleModel model) {
    switch (model) {
    case QuadrupoleModel::printed_cubic: return "printed_cubic";
    case QuadrupoleModel::printed_quadratic: return "printed_quadratic";
    case QuadrupoleModel::derived: return "derived";
    }
    return "unknown";
}

PolymerQuadrupole polymer_quadrupole(int k, int n, const DimensionlessParams& params, int cutoff, QuadrupoleModel model) {
    check_pair(k, n, "polymer_quadrupole");
    if (cutoff < 10 || cutoff < std::max(k, n)) throw DomainError("polymer_quadrupole: cutoff must be >= 10 and cover k, n");
    const auto a = specfun::airy_zeros(cutoff);
    const auto coupling = [&](int l, int m) {
        return model == QuadrupoleModel::derived ? g_from_zeros(a[l - 1], a[m - 1]) : f_from_zeros(a[l - 1], a[m - 1]);
    };

    const double qkn = q_element(k, n, a);
    double sum = 0.0, last = 0.0;
    for (int l = 1; l <= cutoff; ++l) {
        double term = 0.0;
        if (l != k) term += parity(l - k) * coupling(l, k) * q_element(l, n, a);
        if (l != n) term += parity(l - n) * coupling(l, n) * q_element(k, l, a);
        sum += term;
        if (l == cutoff) last = term;
    }

    PolymerQuadrupole r;
    r.cutoff = cutoff;
    r.power = model == QuadrupoleModel::printed_cubic ? 3 : 2;
    r.bracket = sum / qkn;
    r.ratio = 1.0 - std::pow(1.0 / params.s, r.power) * r.bracket;
    r.last_term_share = sum != 0.0 ? std::fabs(last / sum) : 0.0;
    return r;
}

double polymer_rate_ratio(int k, int n, const DimensionlessParams& params, int cutoff, QuadrupoleModel model) {
    const double f = model == QuadrupoleModel::derived ? polymer_frequency_from_levels(k, n, params)
                                                       : polymer_frequency(k, n, params);
    const double q = polymer_quadrupole(k, n, params, cutoff, model).ratio;
    return std::pow(f, 5) * q * q;
}

double lattice_quadrupole_ratio(int k, int n, const DimensionlessParams& params) {
    check_pair(k, n, "lattice_quadrupole_ratio");
    const auto states = lattice_states(params, std::max(k, n));
    const auto& sk = states[k - 1];
    const auto& sn = states[n - 1];
    const int dim = std::max(sk.dimension(), sn.dimension());
    double sum = 0.0;
    for (int mu = 1; mu <= dim; ++mu) sum += double(mu) * mu * sk.psi(mu) * sn.psi(mu);
    const double ak = specfun::airy_zero(k), an = specfun::airy_zero(n);
    // Lattice states have psi_1 > 0; continuum states carry sign(Ai'(a_n)).
    return parity(k - n) * sum / (params.s * params.s) / qb_z2_closed(k, n, ak, an);
}

double lattice_rate_ratio(int k, int n, const DimensionlessParams& params) {
    check_pair(k, n, "lattice_rate_ratio");
    const int top = std::max(k, n);
    const auto evs = eigenvalues_sturm(build_hamiltonian(params, top), top);
    const double ak = specfun::airy_zero(k), an = specfun::airy_zero(n);
    const double f = (evs[k - 1] - evs[n - 1]) * 2.0 * params.s * params.s / (an - ak);
    const double q = lattice_quadrupole_ratio(k, n, params);
    return std::pow(f, 5) * q * q;
}

RateCoefficientFit fit_rate_coefficient(int k, int n, const std::vector<double>& s_values, int cutoff,
                                        QuadrupoleModel model) {
    return fit_ratio(s_values, [&](const DimensionlessParams& p) { return polymer_rate_ratio(k, n, p, cutoff, model); });
}

RateCoefficientFit fit_lattice_rate_coefficient(int k, int n, const std::vector<double>& s_values) {
    return fit_ratio(s_values, [&](const DimensionlessParams& p) { return lattice_rate_ratio(k, n, p); });
}

QuadrupoleReport quadrupole_report(int k, int n, const DimensionlessParams& params, const PhysicalContext& ctx, int cutoff,
                                   QuadrupoleModel model) {
    QuadrupoleReport r;
    r.from = k;
    r.to = n;
    r.rate_qm = quad_rate_qm(k, n, ctx);
    r.log10_rate_qm = std::log10(r.rate_qm);
    r.polymer_ratio = polymer_rate_ratio(k, n, params, cutoff, model);
    r.polymer_rate = r.rate_qm * r.polymer_ratio;
    r.cutoff = cutoff;
    r.model = model;
    return r;
}

} // namespace polybounce
