#ifndef POLYBOUNCE_RADIATIVE_HPP
#define POLYBOUNCE_RADIATIVE_HPP

#include "polybounce/lattice.hpp"
#include "polybounce/physical.hpp"

#include <array>
#include <vector>

namespace polybounce {

constexpr int kDefaultPerturbationCutoff = 30;

// Gamma = (4/15) omega^5 Q^2 / (M_pl^2 c^4), Q = m <k|z^2|n>.
double quad_rate_qm(int k, int n, const PhysicalContext& ctx);

// Printed first-order bracket 1 - (a_k + a_n) / (60 s^2).
double polymer_frequency(int k, int n, const DimensionlessParams& params);
// Ratio of continuum-plus-shift level differences to continuum differences.
double polymer_frequency_from_levels(int k, int n, const DimensionlessParams& params);

// [a_n - 6/(a_l - a_n)^2] / [3 (a_l - a_n)^3]
double f_coupling(int l, int n);
// Coupling from lambda^2 p^4 / (24 hbar^2) with p^4 = 4 m^2 (E - m g z)^2:
// -(a_l + a_n) / (6 (a_l - a_n)^3) - 2 / (a_l - a_n)^5
double g_coupling(int l, int n);

enum class QuadrupoleModel {
    printed_cubic,     // F coupling, (lambda/l0)^3, printed frequency bracket
    printed_quadratic, // F coupling, (lambda/l0)^2, printed frequency bracket
    derived            // G coupling, (lambda/l0)^2, frequency from shifted levels
};

const char* model_name(QuadrupoleModel model);

struct PolymerQuadrupole {
    double ratio = 1.0;   // Q^lambda / Q
    double bracket = 0.0; // [sum_l ... + sum_l ...] / Q_kn
    int power = 2;        // power of lambda / l0 multiplying the bracket
    int cutoff = 0;
    double last_term_share = 0.0; // |l = L contributions| / |bracket|
};

PolymerQuadrupole polymer_quadrupole(int k, int n, const DimensionlessParams& params, int cutoff = kDefaultPerturbationCutoff,
                                     QuadrupoleModel model = QuadrupoleModel::printed_cubic);

// (omega^lambda / omega)^5 (Q^lambda / Q)^2
double polymer_rate_ratio(int k, int n, const DimensionlessParams& params, int cutoff = kDefaultPerturbationCutoff,
                          QuadrupoleModel model = QuadrupoleModel::printed_cubic);

// The same ratio from lattice eigenpairs: level spacing and sum mu^2 psi^k psi^n against the continuum.
double lattice_rate_ratio(int k, int n, const DimensionlessParams& params);
double lattice_quadrupole_ratio(int k, int n, const DimensionlessParams& params);

struct RateCoefficientFit {
    std::vector<double> s_values;
    std::array<double, 3> coefficients{}; // of s^-2, s^-3, s^-4
    double leading() const { return coefficients[0]; }
    double max_residual = 0.0;
};

// Least-squares fit of ratio - 1 on {s^-2, s^-3, s^-4}; needs at least three s values.
RateCoefficientFit fit_rate_coefficient(int k, int n, const std::vector<double>& s_values,
                                        int cutoff = kDefaultPerturbationCutoff,
                                        QuadrupoleModel model = QuadrupoleModel::printed_cubic);

// The same fit applied to lattice_rate_ratio.
RateCoefficientFit fit_lattice_rate_coefficient(int k, int n, const std::vector<double>& s_values);

struct QuadrupoleReport {
    int from = 0;
    int to = 0;
    double rate_qm = 0.0;
    double log10_rate_qm = 0.0;
    double polymer_ratio = 1.0;
    double polymer_rate = 0.0;
    int cutoff = 0;
    QuadrupoleModel model = QuadrupoleModel::printed_cubic;
};

QuadrupoleReport quadrupole_report(int k, int n, const DimensionlessParams& params, const PhysicalContext& ctx,
                                   int cutoff = kDefaultPerturbationCutoff,
                                   QuadrupoleModel model = QuadrupoleModel::printed_cubic);

} // namespace polybounce

#endif
