#include "polybounce/errors.hpp"
#include "polybounce/specfun.hpp"

#include <cmath>
#include <string>

namespace polybounce {
namespace specfun {

namespace {

constexpr double kMaxArgument = 1e4;
constexpr double kRescaleThreshold = 0x1p512;
constexpr double kRescaleFactor = 0x1p-512;
constexpr long kRescaleExponent = 512;

void check_argument(double x, const char* who) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError(std::string(who) + ": x must be positive and finite");
    if (x > kMaxArgument) throw UnsupportedScale(std::string(who) + ": x = " + std::to_string(x) + " exceeds 1e4");
}

} // namespace

namespace detail {

bool bessel_series_stable(double nu, double x) { return x * x <= 8.0 * (nu + 1.0); }

double bessel_j_series(double nu, double x) {
    if (!(nu > -1.0)) throw DomainError("bessel_j_series: order must exceed -1");
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    const double log_pre = nu * std::log(0.5 * x) - log_gamma(nu + 1.0);
    const double q = -0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 10000; ++k) {
        term *= q / (k * (nu + k));
        sum += term;
        if (std::fabs(term) <= 1e-17 * std::fabs(sum) && k > 0.5 * x) break;
    }
    return std::exp(log_pre) * sum;
}

BesselSequence bessel_j_sequence(double alpha, double x, int mu_max, double margin_scale) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("bessel_j_sequence: alpha must lie in [0,1)");
    if (mu_max < 0) throw DomainError("bessel_j_sequence: mu_max must be nonnegative");
    check_argument(x, "bessel_j_sequence");

    const double margin = 15.0 * std::cbrt(x) + 40.0;
    const int start = mu_max + static_cast<int>(std::ceil(x + margin_scale * margin));

    // Watson weights for index 2j: c_0 = Gamma(1+alpha), c_j = (alpha+2j) g_j with
    // g_j = Gamma(alpha+j)/j!, built upward from g_1 = Gamma(1+alpha).
    const int j_top = start / 2;
    std::vector<double> weight(j_top + 1);
    {
        const long double g1 = std::exp(static_cast<long double>(log_gamma(1.0 + alpha)));
        weight[0] = static_cast<double>(g1);
        long double g = g1;
        for (int j = 1; j <= j_top; ++j) {
            weight[j] = static_cast<double>((alpha + 2.0L * j) * g);
            g *= (alpha + j) / (j + 1.0L);
        }
    }

    // Recurrence state and Watson sum share one power-of-two scale; extended
    // precision keeps the rounding drift over ~1e4 steps well below 1e-11.
    std::vector<ScaledFloat> stored(mu_max + 1);
    long double watson = 0.0L;
    long scale = 0;
    long double f_next = 0.0L;
    long double f = 1.0L;
    auto record = [&](int k) {
        if (k <= mu_max) stored[k] = ScaledFloat::from_parts(static_cast<double>(f), scale);
        if (k % 2 == 0) watson += static_cast<long double>(weight[k / 2]) * f;
    };
    record(start);
    for (int k = start; k >= 1; --k) {
        const long double f_prev = 2.0L * (alpha + k) / x * f - f_next;
        f_next = f;
        f = f_prev;
        if (std::fabs(f) > kRescaleThreshold) {
            f *= kRescaleFactor;
            f_next *= kRescaleFactor;
            watson *= kRescaleFactor;
            scale += kRescaleExponent;
        }
        record(k - 1);
    }

    if (watson == 0.0L) throw NumericalFailure("bessel_j_sequence: vanishing normalization sum");
    const ScaledFloat factor =
        ScaledFloat(std::pow(0.5 * x, alpha)) / ScaledFloat::from_parts(static_cast<double>(watson), scale);

    BesselSequence seq;
    seq.base_order = alpha;
    seq.argument = x;
    seq.values.resize(mu_max + 1);
    for (int mu = 0; mu <= mu_max; ++mu) seq.values[mu] = (stored[mu] * factor).to_double();
    return seq;
}

std::vector<double> bessel_j_ladder(double nu0, double x, int count) {
    if (!std::isfinite(nu0)) throw DomainError("bessel_j_ladder: order must be finite");
    if (count < 1) throw DomainError("bessel_j_ladder: count must be >= 1");
    check_argument(x, "bessel_j_ladder");
    const double fl = std::floor(nu0);
    const long first = static_cast<long>(fl);
    const double alpha = nu0 - fl;
    const long top = first + count - 1;

    const int seq_top = static_cast<int>(std::max<long>(top, 1));
    const BesselSequence seq = bessel_j_sequence(alpha, x, seq_top, 1.0);

    std::vector<double> out(count);
    if (first >= 0) {
        for (int i = 0; i < count; ++i) out[i] = seq.values[first + i];
        return out;
    }
    // Continue J_{v-1} = (2v/x) J_v - J_{v+1} below the anchor; this direction
    // is the dominant one once the order is negative.
    double j_hi = seq.values[1];
    double j_cur = seq.values[0];
    for (long j = 0; j >= first; --j) {
        if (j <= top) out[j - first] = j_cur;
        if (j == first) break;
        const double j_low = 2.0 * (alpha + j) / x * j_cur - j_hi;
        j_hi = j_cur;
        j_cur = j_low;
    }
    for (long j = 1; j <= top; ++j) out[j - first] = seq.values[j];
    return out;
}

double bessel_j_real(double nu, double x) {
    if (nu >= 0.0) return specfun::bessel_j(nu, x);
    return bessel_j_ladder(nu, x, 1)[0];
}

double bessel_j_dnu_real(double nu, double x) {
    const double h = 1e-6 * std::max(1.0, std::fabs(nu));
    return (bessel_j_real(nu + h, x) - bessel_j_real(nu - h, x)) / (2.0 * h);
}

} // namespace detail

double bessel_j(double nu, double x) {
    if (!std::isfinite(nu) || !std::isfinite(x)) throw DomainError("bessel_j: arguments must be finite");
    if (nu < 0.0) throw DomainError("bessel_j: negative order");
    if (x < 0.0) throw DomainError("bessel_j: negative argument");
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    if (detail::bessel_series_stable(nu, x)) return detail::bessel_j_series(nu, x);
    check_argument(x, "bessel_j");
    const double fl = std::floor(nu);
    const int n = static_cast<int>(fl);
    const BesselSequence seq = detail::bessel_j_sequence(nu - fl, x, std::max(n, 1), 1.0);
    return seq.values[n];
}

BesselSequence bessel_j_sequence(double alpha, double x, int mu_max) {
    if (mu_max < 1) throw DomainError("bessel_j_sequence: mu_max must be >= 1");
    return detail::bessel_j_sequence(alpha, x, mu_max, 1.0);
}

double bessel_j_dnu(double nu, double x) {
    if (!std::isfinite(nu) || !std::isfinite(x)) throw DomainError("bessel_j_dnu: arguments must be finite");
    if (nu < 0.0) throw DomainError("bessel_j_dnu: negative order");
    if (x < 0.0) throw DomainError("bessel_j_dnu: negative argument");
    if (x == 0.0) {
        if (nu > 1e-6 * std::max(1.0, nu)) return 0.0;
        throw DomainError("bessel_j_dnu: order derivative undefined at x = 0 for nu = 0");
    }
    return detail::bessel_j_dnu_real(nu, x);
}

} // namespace specfun
} // namespace polybounce
