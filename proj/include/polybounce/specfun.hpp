#ifndef POLYBOUNCE_SPECFUN_HPP
#define POLYBOUNCE_SPECFUN_HPP

#include <vector>

namespace polybounce {
namespace specfun {

// Real number stored as mantissa * 2^exponent with mantissa in [1,2) (or
// exactly zero). Used to run recurrences whose magnitude exceeds double range.
class ScaledFloat {
public:
    ScaledFloat() = default;
    ScaledFloat(double value);
    static ScaledFloat from_parts(double value, long exponent);

    double mantissa() const { return mantissa_; }
    long exponent() const { return exponent_; }
    bool is_zero() const { return mantissa_ == 0.0; }
    int sign() const { return mantissa_ > 0.0 ? 1 : (mantissa_ < 0.0 ? -1 : 0); }

    // Natural log of |value|; -inf for zero.
    double log_abs() const;
    // Plain double; saturates to +-inf or flushes to (signed) zero.
    double to_double() const;

    ScaledFloat operator-() const;
    ScaledFloat& operator+=(const ScaledFloat& rhs);
    ScaledFloat& operator*=(const ScaledFloat& rhs);
    ScaledFloat& operator/=(const ScaledFloat& rhs);

private:
    void normalize();

    double mantissa_ = 0.0;
    long exponent_ = 0;
};

ScaledFloat operator+(ScaledFloat a, const ScaledFloat& b);
ScaledFloat operator-(ScaledFloat a, const ScaledFloat& b);
ScaledFloat operator*(ScaledFloat a, const ScaledFloat& b);
ScaledFloat operator/(ScaledFloat a, const ScaledFloat& b);

// J_{alpha+mu}(x) for mu = 0..mu_max.
struct BesselSequence {
    double base_order = 0.0;
    double argument = 0.0;
    std::vector<double> values;

    int mu_max() const { return static_cast<int>(values.size()) - 1; }
    double order(int mu) const { return base_order + mu; }
};

double log_gamma(double x);

double airy_ai(double x);
double airy_ai_prime(double x);

// n-th zero of Ai (a_1 = -2.338...).
double airy_zero(int n);
// Leading-order WKB estimate -[3pi/2 (n - 1/4)]^(2/3).
double airy_zero_approx(int n);
// a_1..a_count.
std::vector<double> airy_zeros(int count);

double bessel_j(double nu, double x);
BesselSequence bessel_j_sequence(double alpha, double x, int mu_max);
// Central difference in the order, step 1e-6 * max(1, |nu|).
double bessel_j_dnu(double nu, double x);

namespace detail {

struct AiryPair {
    double ai;
    double aip;
};

// Individual evaluation routes, exposed so the switch points can be tested.
AiryPair airy_taylor(double x);
AiryPair airy_integral(double x);
AiryPair airy_oscillatory(double x);

// Ascending series; valid for any nu > -1 (negative non-integer orders included).
double bessel_j_series(double nu, double x);
bool bessel_series_stable(double nu, double x);

// Miller recurrence with the start index pushed up by margin_scale times the
// default transition-region margin. margin_scale = 1 is the production path.
BesselSequence bessel_j_sequence(double alpha, double x, int mu_max, double margin_scale);

// J_{nu0+mu}(x), mu = 0..count-1, for any real nu0. Negative orders are
// reached by continuing the recurrence downward from the anchor at alpha.
std::vector<double> bessel_j_ladder(double nu0, double x, int count);
// J_nu(x) for any real nu (x > 0).
double bessel_j_real(double nu, double x);
// d J_nu / d nu for any real nu (x > 0), same stencil as bessel_j_dnu.
double bessel_j_dnu_real(double nu, double x);

} // namespace detail

} // namespace specfun
} // namespace polybounce

#endif
