#ifndef POLYBOUNCE_PHYSICAL_HPP
#define POLYBOUNCE_PHYSICAL_HPP

namespace polybounce {

namespace units {
constexpr double kPeV = 1.602176634e-31; // J
constexpr double kMicrometer = 1e-6;
constexpr double kAngstrom = 1e-10;
} // namespace units

// Particle + field constants in SI, with the derived gravitational length
// l0 = (hbar^2 / (2 m^2 g))^(1/3).
class PhysicalContext {
public:
    PhysicalContext(double mass, double gravity, double hbar, double planck_mass, double speed_of_light);

    // Neutron in the Earth's field, g = 9.806 m/s^2.
    static PhysicalContext neutron();

    // Same particle with g -> factor * g.
    PhysicalContext with_gravity_factor(double factor) const;

    double mass() const { return mass_; }
    double gravity() const { return gravity_; }
    double hbar() const { return hbar_; }
    double planck_mass() const { return planck_mass_; }
    double speed_of_light() const { return c_; }
    double l0() const { return l0_; }
    // m g l0
    double energy_scale() const { return mass_ * gravity_ * l0_; }

    static double compute_l0(double mass, double gravity, double hbar);

private:
    double mass_;
    double gravity_;
    double hbar_;
    double planck_mass_;
    double c_;
    double l0_;
};

} // namespace polybounce

#endif
