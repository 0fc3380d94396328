#ifndef POLYBOUNCE_TRANSITIONS_HPP
#define POLYBOUNCE_TRANSITIONS_HPP

#include "polybounce/lattice.hpp"
#include "polybounce/physical.hpp"

#include <utility>
#include <vector>

namespace polybounce {

constexpr double kDefaultAccelerationSpectrum = 1e-10; // m^2 Hz^3
constexpr int kDefaultOmegaTruncation = 20;

// Acceleration power spectral density S_a(omega), evaluated at |omega|.
class VibrationSpectrumModel {
public:
    enum class Kind { constant_average, tabulated };

    static VibrationSpectrumModel constant_average(double s_a);
    // (omega, S_a) samples, strictly increasing omega; linear interpolation,
    // clamped to the end values outside the table.
    static VibrationSpectrumModel tabulated(std::vector<std::pair<double, double>> samples);

    Kind kind() const { return kind_; }
    double operator()(double omega) const;

private:
    Kind kind_ = Kind::constant_average;
    double constant_ = 0.0;
    std::vector<std::pair<double, double>> samples_;
};

// T_nm = sum_mu psi^n_mu (psi^m_{mu+1} - psi^m_{mu-1})
double matrix_T_direct(const PolymerState& n, const PolymerState& m);
double matrix_T_direct(const DimensionlessParams& params, int n, int m);

// From the commutator identity
// 2 (eps_n - eps_m) T_nm = 2 psi^n_1 psi^m_1 - upsilon^-2 sum_mu mu psi^n_mu psi^m_mu.
double matrix_T_closed(const PolymerState& n, const PolymerState& m);
double matrix_T_closed(const DimensionlessParams& params, int n, int m);

// sum_mu psi^n_mu psi^m_{mu+1}
double forward_overlap(const PolymerState& n, const PolymerState& m);
// sum_mu (mu / s) psi^n_mu psi^m_mu, the lattice position element in units of l0.
double lattice_position_element(const PolymerState& n, const PolymerState& m);

// (E_n - E_m) / hbar for the quantum bouncer, rad/s.
double transition_omega(int n, int m, const PhysicalContext& ctx);

struct TransitionResult {
    int from = 0;
    int to = 0;
    double T = 0.0;               // dimensionless
    double P_dimensionless = 0.0; // T / 2; times hbar / lambda gives |P_nm|
    double omega = 0.0;           // rad/s

    double momentum(const PhysicalContext& ctx, const DimensionlessParams& params) const;
};

TransitionResult transition(const DimensionlessParams& params, int n, int m, const PhysicalContext& ctx);

struct MomentumElement {
    double magnitude = 0.0;  // kg m/s
    double correction = 0.0; // (-1)^(n-m) g / (2 l0 omega^2) (lambda / l0)^3
    double omega = 0.0;
};

// |P_nm| ~ (m g / omega) [1 + correction]
MomentumElement matrix_P_quantum(int n, int m, const DimensionlessParams& params, const PhysicalContext& ctx);

struct RateResult {
    double rate = 0.0;    // 1/s
    double bracket = 1.0; // polymer factor after clamping
    bool clamped = false; // correction exceeded unity; result outside validity
};

// (m g / hbar)^2 omega^-4 [1 + (-1)^(n-m) g / (l0 omega^2) (lambda/l0)^3] S_a(omega)
RateResult transition_rate(int n, int m, const VibrationSpectrumModel& model, const DimensionlessParams& params,
                           const PhysicalContext& ctx);

struct OmegaFactor {
    double omega = 0.0;     // 1/s
    double last_term = 0.0; // magnitude of the m = n_max contribution
    int n_max = 0;
    std::vector<double> terms; // signed contributions, m = 1..n_max, m != n
};

// (m g / hbar)^2 (g / l0) sum_{m != n} (-1)^(n-m) S_a(omega_nm) / omega_nm^6
OmegaFactor omega_n_factor(int n, const VibrationSpectrumModel& model, const PhysicalContext& ctx,
                           int n_max = kDefaultOmegaTruncation);

struct LifetimeResult {
    double t_n = 0.0;
    double tau = 0.0;     // t_n / (1 + t_n Omega_n / upsilon)
    double delta_t = 0.0; // tau - t_n
    double omega_n = 0.0;
};

LifetimeResult lifetime(int n, double t_n, const DimensionlessParams& params, const VibrationSpectrumModel& model,
                        const PhysicalContext& ctx, int n_max = kDefaultOmegaTruncation);
LifetimeResult lifetime_with_omega(double t_n, double omega_n, const DimensionlessParams& params);

struct LambdaBound {
    bool bounded = true;
    double lambda_max = 0.0; // m
};

// lambda^3 < l0^3 dt_exp / (t_n^2 |Omega_n|)
LambdaBound vibration_bound_lambda(double delta_t_exp, double t_n, double omega_n, const PhysicalContext& ctx);

} // namespace polybounce

#endif
