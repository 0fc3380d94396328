#ifndef POLYBOUNCE_SPECTRUM_HPP
#define POLYBOUNCE_SPECTRUM_HPP

#include "polybounce/continuum.hpp"
#include "polybounce/lattice.hpp"
#include "polybounce/physical.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polybounce {

// J_{2 upsilon (1 - eps)}(2 upsilon); its roots in eps are the polymer levels.
double quantization_function(const DimensionlessParams& params, double epsilon);

// n-th root of the quantization condition, seeded by the lattice eigenvalue.
double polymer_energy_bessel(const DimensionlessParams& params, int n);
// Same with an explicit seed; the initial bracket is seed +- min(1e-4, max_half_width).
double polymer_energy_bessel(const DimensionlessParams& params, int n, double seed, double max_half_width);

struct WavefunctionReport {
    PolymerState state;
    double boundary_value = 0.0;                // normalized psi_0
    double normalization_identity_error = 0.0;  // relative, closed form vs direct sum
};

// psi_mu proportional to J_{mu + 2 upsilon (1 - eps_n)}(2 upsilon), normalized by
// direct summation on the lattice truncation for level n.
WavefunctionReport polymer_wavefunction_report(const DimensionlessParams& params, int n);
PolymerState polymer_wavefunction(const DimensionlessParams& params, int n);

// -a_n^2 / (120 s^4)
double perturbative_shift(const DimensionlessParams& params, int n);
// -a_n / (2 s^2)
double continuum_energy(const DimensionlessParams& params, int n);

struct GupEnergy {
    double unperturbed = 0.0; // -m g l0 a_n, J
    double correction = 0.0;  // alpha^2 l_min^2 a_n^2, J
    double total = 0.0;
};

// alpha_sq in J/m^2, l_min in m.
GupEnergy gup_energy(int n, double alpha_sq, double l_min, const PhysicalContext& ctx);

// (1/2) sum_mu psi_mu (psi_{mu+1} + psi_{mu-1})
double cos_expectation(const PolymerState& state);
// sum_mu mu psi_mu^2
double mean_mu(const PolymerState& state);
// Interior sign changes, ignoring the numerically flat tail.
int node_count(const PolymerState& state);

// Published six-digit values for integer s = 1..10, n = 1..10.
std::optional<double> reference_level(double s, int n);
// s = 2, n >= 6 reference cells do not follow the pattern of their neighbours.
bool is_suspect_reference(double s, int n);

struct SpectrumCell {
    double s = 0.0;
    int n = 0;
    double continuum = 0.0;
    std::optional<double> lattice;
    std::optional<double> bessel;
    std::optional<double> perturbative;
    std::optional<double> reference;
    bool suspect_reference = false;
    bool extrapolated = false;
    std::vector<std::string> errors;

    std::optional<double> route_agreement() const;
};

struct SpectrumTable {
    std::vector<SpectrumCell> cells;

    int failed_cells() const;
    int incomplete_cells() const;
};

// Every (s, n) cell through both routes; failures are recorded per cell.
SpectrumTable spectrum_table(const std::vector<double>& s_list, int n_max);

struct DensityProfile {
    double lambda = 0.0; // m
    std::vector<std::pair<double, double>> lattice;   // (z_mu, psi_mu^2 / lambda)
    std::vector<std::pair<double, double>> continuum; // (z, psi_n(z)^2)
    double sup_deviation = 0.0;                       // over lattice points, relative to the continuum peak
};

DensityProfile density_profile(const PolymerState& state, const PhysicalContext& ctx, int resolution);

} // namespace polybounce

#endif
