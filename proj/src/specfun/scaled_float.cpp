#include "polybounce/specfun.hpp"

#include <cmath>
#include <limits>

namespace polybounce {
namespace specfun {

ScaledFloat::ScaledFloat(double value) : mantissa_(value), exponent_(0) { normalize(); }

ScaledFloat ScaledFloat::from_parts(double value, long exponent) {
    ScaledFloat r(value);
    if (!r.is_zero()) r.exponent_ += exponent;
    return r;
}

void ScaledFloat::normalize() {
    if (mantissa_ == 0.0 || !std::isfinite(mantissa_)) {
        if (mantissa_ == 0.0) exponent_ = 0;
        return;
    }
    int e = 0;
    double m = std::frexp(mantissa_, &e); // |m| in [0.5, 1)
    mantissa_ = 2.0 * m;
    exponent_ += e - 1;
}

double ScaledFloat::log_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    return std::log(std::fabs(mantissa_)) + static_cast<double>(exponent_) * std::log(2.0);
}

double ScaledFloat::to_double() const {
    if (is_zero()) return 0.0;
    if (exponent_ > 2000) return mantissa_ > 0 ? std::numeric_limits<double>::infinity()
                                               : -std::numeric_limits<double>::infinity();
    if (exponent_ < -2000) return mantissa_ > 0 ? 0.0 : -0.0;
    return std::ldexp(mantissa_, static_cast<int>(exponent_));
}

ScaledFloat ScaledFloat::operator-() const {
    ScaledFloat r = *this;
    r.mantissa_ = -r.mantissa_;
    return r;
}

ScaledFloat& ScaledFloat::operator+=(const ScaledFloat& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) {
        *this = rhs;
        return *this;
    }
    long d = exponent_ - rhs.exponent_;
    if (d >= 0) {
        if (d < 1100) mantissa_ += std::ldexp(rhs.mantissa_, static_cast<int>(-d));
    } else {
        mantissa_ = (-d < 1100 ? std::ldexp(mantissa_, static_cast<int>(d)) : 0.0) + rhs.mantissa_;
        exponent_ = rhs.exponent_;
    }
    normalize();
    return *this;
}

ScaledFloat& ScaledFloat::operator*=(const ScaledFloat& rhs) {
    mantissa_ *= rhs.mantissa_;
    exponent_ += rhs.exponent_;
    normalize();
    return *this;
}

ScaledFloat& ScaledFloat::operator/=(const ScaledFloat& rhs) {
    mantissa_ /= rhs.mantissa_;
    exponent_ -= rhs.exponent_;
    normalize();
    return *this;
}

ScaledFloat operator+(ScaledFloat a, const ScaledFloat& b) { return a += b; }
ScaledFloat operator-(ScaledFloat a, const ScaledFloat& b) { return a += -b; }
ScaledFloat operator*(ScaledFloat a, const ScaledFloat& b) { return a *= b; }
ScaledFloat operator/(ScaledFloat a, const ScaledFloat& b) { return a /= b; }

} // namespace specfun
} // namespace polybounce
