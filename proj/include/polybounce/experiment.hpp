#ifndef POLYBOUNCE_EXPERIMENT_HPP
#define POLYBOUNCE_EXPERIMENT_HPP

#include "polybounce/continuum.hpp"
#include "polybounce/lattice.hpp"
#include "polybounce/physical.hpp"

#include <array>
#include <vector>

namespace polybounce {

// Maximal GRANIT energy resolution per level, peV.
constexpr double kDeltaE1ExpPeV = 0.102;
constexpr double kDeltaE2ExpPeV = 0.051;
constexpr double kCentrifugalGFactor = 1e7;

struct CriticalHeight {
    int level = 0;
    double meters = 0.0;
    double micrometers = 0.0;
};

// h_n = -a_n l0 for n = 1..count.
std::vector<CriticalHeight> granit_heights(const PhysicalContext& ctx, int count = 2);

struct ExperimentalHeight {
    int level = 0;
    double value_um = 0.0;
    double systematic_um = 0.0;
    double statistical_um = 0.0;

    double quadrature_error() const;
    double linear_error() const;
    bool contains_quadrature(double h_um) const;
    bool contains_linear(double h_um) const;
};

const std::array<ExperimentalHeight, 2>& granit_measured_heights();

struct BoundReport {
    int level = 0;
    Energy delta_e_exp;
    double g_factor = 1.0;
    double lambda_max = 0.0; // m
    double l0_effective = 0.0;
};

// lambda^2 < 60 l0 dE / (m g a_n^2) with g -> g_factor g.
BoundReport granit_bound_lambda(int n, double delta_e_exp_joules, const PhysicalContext& ctx, double g_factor = 1.0);

// Delta eps_n hbar^2 / (m lambda^2), lambda = l0 / s.
Energy shift_energy_physical(const DimensionlessParams& params, int n, const PhysicalContext& ctx);
// Same perturbative formula at an arbitrary lambda > 0, including lambda > l0.
Energy shift_energy_at_length(double lambda, int n, const PhysicalContext& ctx);

} // namespace polybounce

#endif
