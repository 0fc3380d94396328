#include "polybounce/errors.hpp"
#include "polybounce/specfun.hpp"

#include <cmath>
#include <string>

namespace polybounce {
namespace specfun {

namespace {

constexpr double kAi0 = 0.355028053887817239;
constexpr double kAip0 = -0.258819403792806798;

constexpr double kOscillatorySwitch = -8.0;
constexpr double kIntegralSwitch = 1.0;

// Advance (y, y') of y'' = x y from x0 to x0 + h by the Taylor series at x0.
void taylor_step(double x0, double h, double& y, double& yp) {
    // t_k = c_k h^k with (k+2)(k+1) c_{k+2} = x0 c_k + c_{k-1}
    double tkm1 = 0.0;
    double tk = y;
    double tk1 = yp * h;
    double sum_y = tk + tk1;
    double sum_yp = tk1;
    const double h2 = h * h;
    const double h3 = h2 * h;
    int quiet = 0;
    for (int k = 0; k < 400; ++k) {
        double tk2 = (x0 * tk * h2 + tkm1 * h3) / ((k + 2.0) * (k + 1.0));
        sum_y += tk2;
        sum_yp += (k + 2.0) * tk2;
        tkm1 = tk;
        tk = tk1;
        tk1 = tk2;
        double scale = std::fabs(sum_y) + std::fabs(sum_yp);
        if (std::fabs(tk2) * (k + 3.0) <= 1e-18 * scale) {
            if (++quiet >= 3) break;
        } else {
            quiet = 0;
        }
    }
    y = sum_y;
    yp = (h != 0.0) ? sum_yp / h : yp;
}

void check_finite(double x, const char* who) {
    if (!std::isfinite(x)) throw DomainError(std::string(who) + ": argument must be finite");
}

} // namespace

namespace detail {

AiryPair airy_taylor(double x) {
    double y = kAi0;
    double yp = kAip0;
    double x0 = 0.0;
    const int steps = std::max(1, static_cast<int>(std::ceil(std::fabs(x) / 0.5)));
    const double h = x / steps;
    for (int i = 0; i < steps; ++i) {
        taylor_step(x0, h, y, yp);
        x0 += h;
    }
    return {y, yp};
}

AiryPair airy_integral(double x) {
    // Ai(x) = sqrt(x/3)/pi K_{1/3}(zeta), Ai'(x) = -x/(pi sqrt 3) K_{2/3}(zeta),
    // K_nu(zeta) = int_0^inf exp(-zeta cosh t) cosh(nu t) dt, trapezoidal rule.
    const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    const double h = std::min(0.1, 0.25 / std::sqrt(zeta));
    double s13 = 0.5;
    double s23 = 0.5;
    for (int j = 1; j < 100000; ++j) {
        const double t = j * h;
        const double e = std::exp(-zeta * (std::cosh(t) - 1.0));
        const double f13 = e * std::cosh(t / 3.0);
        const double f23 = e * std::cosh(2.0 * t / 3.0);
        s13 += f13;
        s23 += f23;
        if (f23 < 1e-19 * s23) break;
    }
    const double decay = std::exp(-zeta);
    const double k13 = h * s13 * decay;
    const double k23 = h * s23 * decay;
    return {std::sqrt(x / 3.0) / M_PI * k13, -x / (M_PI * std::sqrt(3.0)) * k23};
}

AiryPair airy_oscillatory(double x) {
    const double y = -x;
    const double zeta = 2.0 / 3.0 * y * std::sqrt(y);
    // u_k, v_k of the standard expansion; summed up to the smallest term.
    double p_u = 0.0, q_u = 0.0, p_v = 0.0, q_v = 0.0;
    double u = 1.0;
    double zpow = 1.0;
    double prev = INFINITY;
    for (int k = 0; k < 200; ++k) {
        if (k > 0) {
            u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
            zpow /= zeta;
        }
        const double v = (k == 0) ? 1.0 : -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u;
        const double term_u = u * zpow;
        const double term_v = v * zpow;
        const double mag = std::fabs(term_u) + std::fabs(term_v);
        if (mag > prev) break;
        prev = mag;
        const double sgn = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 0) {
            p_u += sgn * term_u;
            p_v += sgn * term_v;
        } else {
            q_u += sgn * term_u;
            q_v += sgn * term_v;
        }
        if (mag < 1e-17) break;
    }
    const double phase = zeta - M_PI / 4.0;
    const double c = std::cos(phase);
    const double s = std::sin(phase);
    const double pre = 1.0 / std::sqrt(M_PI);
    const double y4 = std::pow(y, 0.25);
    return {pre / y4 * (c * p_u + s * q_u), pre * y4 * (s * p_v - c * q_v)};
}

} // namespace detail

namespace {

detail::AiryPair airy_pair(double x, const char* who) {
    check_finite(x, who);
    if (x <= kOscillatorySwitch) return detail::airy_oscillatory(x);
    if (x >= kIntegralSwitch) return detail::airy_integral(x);
    return detail::airy_taylor(x);
}

} // namespace

double airy_ai(double x) { return airy_pair(x, "airy_ai").ai; }

double airy_ai_prime(double x) { return airy_pair(x, "airy_ai_prime").aip; }

double airy_zero_approx(int n) {
    if (n < 1) throw DomainError("airy_zero_approx: n must be >= 1");
    return -std::pow(1.5 * M_PI * (n - 0.25), 2.0 / 3.0);
}

double airy_zero(int n) {
    if (n < 1) throw DomainError("airy_zero: n must be >= 1");
    const double guess = airy_zero_approx(n);
    // The 5% bracket alone holds several zeros once n >= 14; also cap at
    // about a third of the local zero spacing pi/sqrt|a|.
    const double half = std::min(0.05 * std::fabs(guess), 0.3 * M_PI / std::sqrt(std::fabs(guess)));
    double lo = guess - half;
    double hi = guess + half;
    double flo = airy_ai(lo);
    double fhi = airy_ai(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0)) throw NumericalFailure("airy_zero: no sign change in bracket for n = " + std::to_string(n));
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = airy_ai(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    return std::fabs(flo) < std::fabs(fhi) ? lo : hi;
}

std::vector<double> airy_zeros(int count) {
    std::vector<double> out;
    out.reserve(count > 0 ? count : 0);
    for (int n = 1; n <= count; ++n) out.push_back(airy_zero(n));
    return out;
}

} // namespace specfun
} // namespace polybounce
