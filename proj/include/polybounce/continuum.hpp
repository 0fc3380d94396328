#ifndef POLYBOUNCE_CONTINUUM_HPP
#define POLYBOUNCE_CONTINUUM_HPP

#include "polybounce/lattice.hpp"
#include "polybounce/physical.hpp"

namespace polybounce {

struct Energy {
    double joules = 0.0;
    double pev = 0.0;

    static Energy from_joules(double j) { return {j, j / units::kPeV}; }
};

// psi_n(z) = norm * Ai(a_n + z / l0) for z >= 0, zero below the mirror.
struct ContinuumState {
    int level = 0;
    double airy_zero = 0.0;
    double norm = 0.0; // 1 / (sqrt(l0) |Ai'(a_n)|), m^(-1/2)
    PhysicalContext context;

    double psi(double z) const;
};

ContinuumState qb_state(int n, const PhysicalContext& ctx);
Energy qb_energy(int n, const PhysicalContext& ctx);
double qb_wavefunction(int n, const PhysicalContext& ctx, double z);

// <k|z|n> in m and <k|z^2|n> in m^2. Off-diagonal entries use the closed
// forms; diagonal entries are integrated.
double qb_matrix_z(int k, int n, const PhysicalContext& ctx);
double qb_matrix_z2(int k, int n, const PhysicalContext& ctx);

// Off-diagonal elements in units of l0 and l0^2 from given Airy zeros:
// <k|z|n> = 2 (-1)^(n-k+1) / (a_k - a_n)^2, <k|z^2|n> = 24 (-1)^(k-n-1) / (a_k - a_n)^4.
double qb_z_closed(int k, int n, double a_k, double a_n);
double qb_z2_closed(int k, int n, double a_k, double a_n);

// <k|zeta^power|n> with zeta = z / l0, by adaptive quadrature on
// [0, max(|a_k|, |a_n|) + 15], absolute tolerance 1e-10.
double qb_moment_quadrature(int k, int n, int power);

// (2/x)^(1/3) Ai((2/x)^(1/3) (order - x)).
double transition_region_bessel(double order, double x);

// sup_mu |psi_mu / sqrt(lambda) - psi_n(lambda mu)| / max_z |psi_n(z)|, with the
// continuum sign aligned to psi_1 > 0.
double continuum_limit_residual(const PolymerState& state, const PhysicalContext& ctx);
double continuum_limit_residual(const DimensionlessParams& params, int n, const PhysicalContext& ctx);

} // namespace polybounce

#endif
