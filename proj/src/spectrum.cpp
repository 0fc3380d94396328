#include "polybounce/spectrum.hpp"

#include "polybounce/errors.hpp"
#include "polybounce/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace polybounce {

namespace {

// rows s = 1..10, columns n = 1..10
constexpr double kReferenceLevels[10][10] = {
    {1.1235, 1.90471, 2.50631, 3.00953, 3.44616, 3.83292, 4.18004, 4.49437, 4.78077, 5.04291},
    {0.289409, 0.501951, 0.673219, 0.822395, 0.956849, 1.1875, 1.3125, 1.4375, 1.5625, 1.625},
    {0.129331, 0.22536, 0.303481, 0.372143, 0.434588, 0.492495, 0.546873, 0.59839, 0.647516, 0.694599},
    {0.0728877, 0.127199, 0.171511, 0.210558, 0.246155, 0.279241, 0.310382, 0.339949, 0.368205, 0.395345},
    {0.0466892, 0.0815348, 0.110001, 0.135113, 0.15803, 0.17935, 0.199436, 0.218523, 0.23678, 0.254331},
    {0.0324385, 0.0566692, 0.0764773, 0.0939613, 0.109926, 0.124785, 0.138791, 0.152107, 0.164849, 0.177103},
    {0.0238393, 0.0416556, 0.056226, 0.0690913, 0.080842, 0.0917831, 0.102098, 0.111907, 0.121296, 0.130328},
    {0.0182553, 0.031903, 0.0430672, 0.052927, 0.0619345, 0.0703228, 0.0782324, 0.0857557, 0.0929579, 0.0998871},
    {0.0144258, 0.025213, 0.0340387, 0.0418346, 0.0489574, 0.0555915, 0.0618477, 0.067799, 0.073497, 0.0789795},
    {0.011686, 0.0204258, 0.0275773, 0.033895, 0.0396679, 0.0450452, 0.0501165, 0.0549412, 0.0595607, 0.064006}};

bool is_tabulated_s(double s) { return s == std::floor(s) && s >= 1.0 && s <= 10.0; }

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

} // namespace

double quantization_function(const DimensionlessParams& params, double epsilon) {
    const double x = 2.0 * params.upsilon;
    return specfun::detail::bessel_j_real(x * (1.0 - epsilon), x);
}

double polymer_energy_bessel(const DimensionlessParams& params, int n, double seed, double max_half_width) {
    double half = std::min(1e-4, max_half_width);
    const double widest = std::min(1e-2, std::max(max_half_width, half));
    for (;;) {
        double lo = seed - half;
        double hi = seed + half;
        double flo = quantization_function(params, lo);
        const double fhi = quantization_function(params, hi);
        if (flo == 0.0) return lo;
        if (fhi == 0.0) return hi;
        if (sign_of(flo) != sign_of(fhi)) {
            while (hi - lo > 2e-12) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                const double fm = quantization_function(params, mid);
                if (fm == 0.0) return mid;
                if (sign_of(fm) == sign_of(flo)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            return 0.5 * (lo + hi);
        }
        if (half >= widest)
            throw NumericalFailure("polymer_energy_bessel: no sign change within +-" + std::to_string(half) +
                                   " of the lattice seed for n = " + std::to_string(n));
        half = std::min(2.0 * half, widest);
    }
}

double polymer_energy_bessel(const DimensionlessParams& params, int n) {
    if (n < 1) throw DomainError("polymer_energy_bessel: n must be >= 1");
    const TridiagonalOperator H = build_hamiltonian(params, n + 1);
    const std::vector<double> evs = eigenvalues_sturm(H, n + 1);
    double gap = evs[n] - evs[n - 1];
    if (n >= 2) gap = std::min(gap, evs[n - 1] - evs[n - 2]);
    return polymer_energy_bessel(params, n, evs[n - 1], 0.4 * gap);
}

WavefunctionReport polymer_wavefunction_report(const DimensionlessParams& params, int n) {
    const double eps = polymer_energy_bessel(params, n);
    const int dim = build_hamiltonian(params, n).dimension;
    const double x = 2.0 * params.upsilon;
    const double nu0 = x * (1.0 - eps);

    // mu = 0..dim+1; the extra sample feeds the closed-form check.
    const std::vector<double> raw = specfun::detail::bessel_j_ladder(nu0, x, dim + 2);
    double sum = 0.0;
    for (int mu = 1; mu <= dim; ++mu) sum += raw[mu] * raw[mu];
    const double norm = std::sqrt(sum);
    const double sign = raw[1] < 0.0 ? -1.0 : 1.0;

    WavefunctionReport rep;
    rep.state.level = n;
    rep.state.params = params;
    rep.state.energy = eps;
    rep.state.samples.resize(dim + 1);
    for (int mu = 0; mu <= dim; ++mu) rep.state.samples[mu] = sign * raw[mu] / norm;
    rep.boundary_value = rep.state.samples[0];

    // sum_mu J_{mu+nu0}^2 = upsilon J_{1+nu0} dJ/dnu at nu0
    const double closed = params.upsilon * raw[1] * specfun::detail::bessel_j_dnu_real(nu0, x);
    rep.normalization_identity_error = std::fabs(closed - sum) / sum;
    return rep;
}

PolymerState polymer_wavefunction(const DimensionlessParams& params, int n) {
    return polymer_wavefunction_report(params, n).state;
}

double perturbative_shift(const DimensionlessParams& params, int n) {
    const double a = specfun::airy_zero(n);
    const double s2 = params.s * params.s;
    return -a * a / (120.0 * s2 * s2);
}

double continuum_energy(const DimensionlessParams& params, int n) {
    return -specfun::airy_zero(n) / (2.0 * params.s * params.s);
}

GupEnergy gup_energy(int n, double alpha_sq, double l_min, const PhysicalContext& ctx) {
    if (l_min < 0.0) throw DomainError("gup_energy: l_min must be nonnegative");
    const double a = specfun::airy_zero(n);
    GupEnergy e;
    e.unperturbed = -ctx.energy_scale() * a;
    e.correction = alpha_sq * l_min * l_min * a * a;
    e.total = e.unperturbed + e.correction;
    return e;
}

double cos_expectation(const PolymerState& state) {
    double sum = 0.0;
    for (int mu = 1; mu <= state.dimension(); ++mu)
        sum += state.psi(mu) * (state.psi(mu + 1) + state.psi(mu - 1));
    return 0.5 * sum;
}

double mean_mu(const PolymerState& state) {
    double sum = 0.0;
    for (int mu = 1; mu <= state.dimension(); ++mu) sum += mu * state.psi(mu) * state.psi(mu);
    return sum;
}

int node_count(const PolymerState& state) {
    double peak = 0.0;
    for (double v : state.samples) peak = std::max(peak, std::fabs(v));
    int nodes = 0;
    int last = 0;
    for (int mu = 1; mu <= state.dimension(); ++mu) {
        const double v = state.psi(mu);
        if (std::fabs(v) < 1e-8 * peak) continue;
        const int sg = sign_of(v);
        if (last != 0 && sg != last) ++nodes;
        last = sg;
    }
    return nodes;
}

std::optional<double> reference_level(double s, int n) {
    if (!is_tabulated_s(s) || n < 1 || n > 10) return std::nullopt;
    return kReferenceLevels[static_cast<int>(s) - 1][n - 1];
}

bool is_suspect_reference(double s, int n) { return s == 2.0 && n >= 6 && n <= 10; }

std::optional<double> SpectrumCell::route_agreement() const {
    if (lattice && bessel) return std::fabs(*lattice - *bessel);
    return std::nullopt;
}

int SpectrumTable::failed_cells() const {
    return static_cast<int>(std::count_if(cells.begin(), cells.end(),
                                          [](const SpectrumCell& c) { return !c.lattice && !c.bessel; }));
}

int SpectrumTable::incomplete_cells() const {
    return static_cast<int>(std::count_if(cells.begin(), cells.end(),
                                          [](const SpectrumCell& c) { return !c.errors.empty(); }));
}

SpectrumTable spectrum_table(const std::vector<double>& s_list, int n_max) {
    if (n_max < 1) throw DomainError("spectrum_table: n_max must be >= 1");
    SpectrumTable table;
    for (double s : s_list) {
        std::vector<SpectrumCell> row(n_max);
        std::vector<double> evs;
        std::string lattice_error;
        DimensionlessParams params;
        try {
            params = DimensionlessParams::from_s(s);
            const TridiagonalOperator H = build_hamiltonian(params, n_max + 1);
            evs = eigenvalues_sturm(H, n_max + 1);
        } catch (const std::exception& e) {
            lattice_error = e.what();
        }
        for (int n = 1; n <= n_max; ++n) {
            SpectrumCell& c = row[n - 1];
            c.s = s;
            c.n = n;
            c.reference = reference_level(s, n);
            c.suspect_reference = is_suspect_reference(s, n);
            c.extrapolated = !c.reference.has_value();
            if (!lattice_error.empty()) {
                c.errors.push_back("lattice: " + lattice_error);
                c.errors.push_back("bessel: no lattice seed");
                continue;
            }
            c.continuum = continuum_energy(params, n);
            c.perturbative = c.continuum + perturbative_shift(params, n);
            c.lattice = evs[n - 1];
            try {
                double gap = evs[n] - evs[n - 1];
                if (n >= 2) gap = std::min(gap, evs[n - 1] - evs[n - 2]);
                c.bessel = polymer_energy_bessel(params, n, evs[n - 1], 0.4 * gap);
            } catch (const std::exception& e) {
                c.errors.push_back(std::string("bessel: ") + e.what());
            }
        }
        for (auto& c : row) table.cells.push_back(std::move(c));
    }
    return table;
}

DensityProfile density_profile(const PolymerState& state, const PhysicalContext& ctx, int resolution) {
    if (resolution < 2) throw DomainError("density_profile: resolution must be >= 2");
    DensityProfile prof;
    const double l0 = ctx.l0();
    prof.lambda = l0 / state.params.s;
    const ContinuumState cs = qb_state(state.level, ctx);

    const int dim = state.dimension();
    prof.lattice.reserve(dim + 1);
    for (int mu = 0; mu <= dim; ++mu)
        prof.lattice.emplace_back(prof.lambda * mu, state.samples[mu] * state.samples[mu] / prof.lambda);

    const double z_max = prof.lambda * dim;
    double peak = 0.0;
    prof.continuum.reserve(resolution);
    for (int i = 0; i < resolution; ++i) {
        const double z = z_max * i / (resolution - 1);
        const double p = cs.psi(z);
        prof.continuum.emplace_back(z, p * p);
        peak = std::max(peak, p * p);
    }
    double worst = 0.0;
    for (const auto& [z, rho] : prof.lattice) {
        const double p = cs.psi(z);
        peak = std::max(peak, p * p);
        worst = std::max(worst, std::fabs(rho - p * p));
    }
    prof.sup_deviation = worst / peak;
    return prof;
}

} // namespace polybounce
