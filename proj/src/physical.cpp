#include "polybounce/physical.hpp"

#include "polybounce/errors.hpp"

#include <cmath>
#include <string>

namespace polybounce {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string("PhysicalContext: ") + name + " must be positive");
}

} // namespace

PhysicalContext::PhysicalContext(double mass, double gravity, double hbar, double planck_mass,
                                 double speed_of_light)
    : mass_(mass), gravity_(gravity), hbar_(hbar), planck_mass_(planck_mass), c_(speed_of_light) {
    require_positive(mass, "mass");
    require_positive(gravity, "gravity");
    require_positive(hbar, "hbar");
    require_positive(planck_mass, "planck_mass");
    require_positive(speed_of_light, "speed_of_light");
    l0_ = compute_l0(mass_, gravity_, hbar_);
}

double PhysicalContext::compute_l0(double mass, double gravity, double hbar) {
    return std::cbrt(hbar * hbar / (2.0 * mass * mass * gravity));
}

PhysicalContext PhysicalContext::neutron() {
    return PhysicalContext(1.674927e-27, 9.806, 1.054571817e-34, 2.176434e-8, 2.99792458e8);
}

PhysicalContext PhysicalContext::with_gravity_factor(double factor) const {
    require_positive(factor, "gravity factor");
    return PhysicalContext(mass_, gravity_ * factor, hbar_, planck_mass_, c_);
}

} // namespace polybounce
