#ifndef POLYBOUNCE_LATTICE_HPP
#define POLYBOUNCE_LATTICE_HPP

#include <vector>

namespace polybounce {

// s = l0 / lambda and upsilon = s^3.
struct DimensionlessParams {
    double s = 1.0;
    double upsilon = 1.0;

    static DimensionlessParams from_s(double s);
};

// Truncated polymer Hamiltonian on mu = 1..N with psi_0 = 0:
// eps psi_mu = (1 + mu/(2 upsilon)) psi_mu - (psi_{mu+1} + psi_{mu-1}) / 2.
struct TridiagonalOperator {
    DimensionlessParams params;
    int dimension = 0;
    std::vector<double> diagonal; // diagonal[mu - 1] = d_mu
    double off_diagonal = -0.5;

    double d(int mu) const { return diagonal[mu - 1]; }
    double gershgorin_lower() const;
    double gershgorin_upper() const;
    // Number of eigenvalues strictly below sigma.
    int sturm_count(double sigma) const;
};

// Normalized lattice bound state; samples[mu] = psi_mu for mu = 0..N.
struct PolymerState {
    int level = 0;
    DimensionlessParams params;
    double energy = 0.0;
    std::vector<double> samples;

    int dimension() const { return static_cast<int>(samples.size()) - 1; }
    double psi(int mu) const { return (mu >= 0 && mu < static_cast<int>(samples.size())) ? samples[mu] : 0.0; }
};

constexpr double kDefaultDimensionCap = 5e7;

// ceil(2 upsilon eps_est) + ceil(10 (2 upsilon)^(1/3)) + 50, eps_est from the
// continuum level plus the leading polymer shift.
double truncation_estimate(const DimensionlessParams& params, int n_levels);

TridiagonalOperator build_hamiltonian(const DimensionlessParams& params, int n_levels,
                                      double dimension_cap = kDefaultDimensionCap);
TridiagonalOperator build_hamiltonian_with_dimension(const DimensionlessParams& params, int dimension);

// k smallest eigenvalues, ascending, each bisected to width 1e-12.
std::vector<double> eigenvalues_sturm(const TridiagonalOperator& H, int k);

// Two steps of inverse iteration at the shift epsilon; psi_1 > 0, sum psi^2 = 1.
PolymerState eigenvector_inverse_iteration(const TridiagonalOperator& H, double epsilon);

// ||(H - eps) psi||_2 over mu = 1..N.
double eigen_residual(const TridiagonalOperator& H, const PolymerState& state);

// Lowest count states on a common truncation.
std::vector<PolymerState> lattice_states(const DimensionlessParams& params, int count);

} // namespace polybounce

#endif
