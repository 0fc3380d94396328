#include "doctest.h"

#include "polybounce/continuum.hpp"
#include "polybounce/errors.hpp"
#include "polybounce/specfun.hpp"
#include "polybounce/transitions.hpp"

#include <cmath>
#include <random>

using namespace polybounce;

namespace {

DimensionlessParams P(double s) { return DimensionlessParams::from_s(s); }

double parity(int e) { return (e % 2 == 0) ? 1.0 : -1.0; }

double backward_overlap(const PolymerState& n, const PolymerState& m) {
    const int dim = std::max(n.dimension(), m.dimension());
    double sum = 0.0;
    for (int mu = 1; mu <= dim + 1; ++mu) sum += n.psi(mu) * m.psi(mu - 1);
    return sum;
}

} // namespace

TEST_CASE("vibration spectrum model") {
    const auto c = VibrationSpectrumModel::constant_average(2e-10);
    CHECK(c(123.0) == 2e-10);
    CHECK(c(-5.0) == 2e-10);
    CHECK_THROWS_AS(VibrationSpectrumModel::constant_average(-1e-12), DomainError);

    const auto t = VibrationSpectrumModel::tabulated({{100.0, 1.0}, {200.0, 3.0}, {400.0, 0.0}});
    CHECK(t(150.0) == doctest::Approx(2.0));
    CHECK(t(-150.0) == doctest::Approx(2.0));
    CHECK(t(300.0) == doctest::Approx(1.5));
    CHECK(t(10.0) == 1.0);
    CHECK(t(1e4) == 0.0);
    CHECK_THROWS_AS(VibrationSpectrumModel::tabulated({{1.0, -1.0}}), DomainError);
    CHECK_THROWS_AS(VibrationSpectrumModel::tabulated({{2.0, 1.0}, {1.0, 1.0}}), DomainError);
    CHECK_THROWS_AS(VibrationSpectrumModel::tabulated({}), DomainError);
}

TEST_CASE("T matrix: closed form against direct sum") {
    for (double s : {2.0, 5.0, 10.0}) {
        const auto states = lattice_states(P(s), 6);
        for (int n = 1; n <= 6; ++n) {
            CHECK(std::fabs(matrix_T_direct(states[n - 1], states[n - 1])) < 1e-10);
            for (int m = 1; m <= 6; ++m) {
                if (n == m) continue;
                CAPTURE(s);
                CAPTURE(n);
                CAPTURE(m);
                const double d = matrix_T_direct(states[n - 1], states[m - 1]);
                const double c = matrix_T_closed(states[n - 1], states[m - 1]);
                CHECK(std::fabs(d - c) < 1e-9);
                CHECK(std::fabs(d + matrix_T_direct(states[m - 1], states[n - 1])) < 1e-10);
            }
        }
    }
    CHECK(matrix_T_closed(P(5), 3, 1) == doctest::Approx(-matrix_T_closed(P(5), 1, 3)).epsilon(1e-9));
    CHECK_THROWS_AS(matrix_T_closed(P(5), 2, 2), DomainError);
    CHECK_THROWS_AS(matrix_T_closed(lattice_states(P(5), 1)[0], lattice_states(P(5), 1)[0]), DomainError);
}

TEST_CASE("T matrix antisymmetry over random pairs") {
    const auto states = lattice_states(P(7), 12);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, 11);
    for (int i = 0; i < 10; ++i) {
        const int a = pick(rng), b = pick(rng);
        CHECK(std::fabs(matrix_T_direct(states[a], states[b]) + matrix_T_direct(states[b], states[a])) < 1e-10);
    }
}

TEST_CASE("lattice sum identities") {
    for (double s : {2.0, 5.0, 10.0}) {
        const auto states = lattice_states(P(s), 6);
        const double ups = P(s).upsilon;
        for (int n = 0; n < 6; ++n) {
            for (int m = 0; m < 6; ++m) {
                CHECK(std::fabs(forward_overlap(states[n], states[m]) - backward_overlap(states[m], states[n])) < 1e-10);
                if (n == m) continue;
                const double lhs = forward_overlap(states[n], states[m]) + forward_overlap(states[m], states[n]);
                const double rhs = lattice_position_element(states[n], states[m]) * s / ups;
                CHECK(std::fabs(lhs - rhs) < 1e-9);
            }
        }
    }
}

TEST_CASE("continuum limit of the lattice position element") {
    const auto states = lattice_states(P(10), 5);
    for (int n = 1; n <= 5; ++n) {
        for (int m = 1; m <= 5; ++m) {
            if (n == m) continue;
            CAPTURE(n);
            CAPTURE(m);
            const double an = specfun::airy_zero(n), am = specfun::airy_zero(m);
            const double lat = lattice_position_element(states[n - 1], states[m - 1]);
            const double mag = 2.0 / ((an - am) * (an - am));
            CHECK(std::fabs(std::fabs(lat) / mag - 1.0) < 0.01);
            // psi_1 > 0 on the lattice while Ai'(a_n) alternates in sign.
            CHECK(std::fabs(lat - parity(n - m) * qb_z_closed(n, m, an, am)) / mag < 0.01);
        }
    }
}

TEST_CASE("transition frequency and result") {
    const auto ctx = PhysicalContext::neutron();
    const double w = transition_omega(2, 1, ctx);
    CHECK(w == doctest::Approx((qb_energy(2, ctx).joules - qb_energy(1, ctx).joules) / ctx.hbar()).epsilon(1e-10));
    CHECK(w > 0.0);
    CHECK(transition_omega(1, 2, ctx) == -w);

    const auto r = transition(P(10), 2, 1, ctx);
    CHECK(r.P_dimensionless == 0.5 * r.T);
    CHECK(r.T != 0.0);
    CHECK(r.omega == w);
    const auto q = matrix_P_quantum(2, 1, P(10), ctx);
    CHECK(std::fabs(std::fabs(r.momentum(ctx, P(10))) / q.magnitude - 1.0) < 0.02);
}

TEST_CASE("quantum-limit momentum element") {
    const auto ctx = PhysicalContext::neutron();
    const auto far = matrix_P_quantum(3, 1, P(1e6), ctx);
    CHECK(far.magnitude == doctest::Approx(ctx.mass() * ctx.gravity() / std::fabs(far.omega)).epsilon(1e-12));
    for (int m = 2; m <= 6; ++m) {
        const auto p = matrix_P_quantum(1, m, P(10), ctx);
        CHECK((p.correction > 0.0) == ((m - 1) % 2 == 0));
    }
}

TEST_CASE("transition rate") {
    const auto ctx = PhysicalContext::neutron();
    const auto zero = VibrationSpectrumModel::constant_average(0.0);
    CHECK(transition_rate(2, 1, zero, P(10), ctx).rate == 0.0);

    const auto model = VibrationSpectrumModel::constant_average(kDefaultAccelerationSpectrum);
    const auto far = P(1e6);
    const double r21 = transition_rate(2, 1, model, far, ctx).rate;
    const double r31 = transition_rate(3, 1, model, far, ctx).rate;
    const double w21 = transition_omega(2, 1, ctx), w31 = transition_omega(3, 1, ctx);
    CHECK(r31 / r21 == doctest::Approx(std::pow(w21 / w31, 4)).epsilon(1e-9));

    const double k = ctx.mass() * ctx.gravity() / ctx.hbar();
    const double corr = -ctx.gravity() / (ctx.l0() * w21 * w21) * 1e-3;
    const auto r = transition_rate(2, 1, model, P(10), ctx);
    CHECK(r.rate == doctest::Approx(k * k / std::pow(w21, 4) * (1.0 + corr) * 1e-10).epsilon(1e-12));
    CHECK_FALSE(r.clamped);
    MESSAGE("rate 2 -> 1 at S_a = 1e-10: " << r.rate << " /s");

    // A close pair at s = 1 pushes the correction past unity.
    const auto c = transition_rate(4, 3, model, P(1.0), ctx);
    CHECK(c.clamped);
    CHECK(c.rate >= 0.0);
    CHECK_THROWS_AS(transition_rate(1, 1, model, P(10), ctx), DomainError);
}

TEST_CASE("Omega factor") {
    const auto ctx = PhysicalContext::neutron();
    const auto model = VibrationSpectrumModel::constant_average(kDefaultAccelerationSpectrum);
    const auto f = omega_n_factor(1, model, ctx, 20);
    REQUIRE(f.terms.size() == 19);
    for (std::size_t i = 0; i < f.terms.size(); ++i) CHECK((f.terms[i] > 0.0) == (i % 2 == 1));
    CHECK(f.last_term == std::fabs(f.terms.back()));
    CHECK(f.last_term < 1e-3 * std::fabs(f.omega));
    const auto f40 = omega_n_factor(1, model, ctx, 40);
    CHECK(std::fabs(f40.omega / f.omega - 1.0) < 0.05);
    MESSAGE("Omega_1 = " << f.omega << " Hz");

    const auto f3 = omega_n_factor(3, model, ctx, 20);
    CHECK(f3.terms.size() == 19);
    CHECK_THROWS_AS(omega_n_factor(3, model, ctx, 3), DomainError);
}

TEST_CASE("lifetime") {
    const auto ctx = PhysicalContext::neutron();
    const auto model = VibrationSpectrumModel::constant_average(kDefaultAccelerationSpectrum);
    const auto far = lifetime(1, 1e5, P(1e6), model, ctx);
    CHECK(std::fabs(far.tau / 1e5 - 1.0) < 1e-12);

    const auto hand = lifetime_with_omega(1e5, 1e-3, P(10));
    CHECK(hand.tau == doctest::Approx(1e5 / (1.0 + 1e5 * 1e-3 / 1000.0)).epsilon(1e-14));
    CHECK(hand.tau < hand.t_n);
    CHECK(hand.delta_t == doctest::Approx(hand.tau - 1e5));
    CHECK(lifetime_with_omega(1e5, -1e-3, P(10)).tau > 1e5);
    CHECK_THROWS_AS(lifetime_with_omega(0.0, 1e-3, P(10)), DomainError);
}

TEST_CASE("vibration bound on lambda") {
    const auto ctx = PhysicalContext::neutron();
    const auto b = vibration_bound_lambda(1.0, 1e5, 1e-3, ctx);
    CHECK(b.bounded);
    CHECK(b.lambda_max == doctest::Approx(ctx.l0() * std::cbrt(1.0 / (1e10 * 1e-3))).epsilon(1e-14));
    CHECK(vibration_bound_lambda(8.0, 1e5, 1e-3, ctx).lambda_max == doctest::Approx(2.0 * b.lambda_max).epsilon(1e-14));
    CHECK(vibration_bound_lambda(1e-3, 1e5, 1e-3, ctx).lambda_max == doctest::Approx(0.1 * b.lambda_max).epsilon(1e-14));
    CHECK(vibration_bound_lambda(1.0, 1e5, -1e-3, ctx).lambda_max == b.lambda_max);
    const auto u = vibration_bound_lambda(1.0, 1e5, 0.0, ctx);
    CHECK_FALSE(u.bounded);
    CHECK(std::isinf(u.lambda_max));
    CHECK_THROWS_AS(vibration_bound_lambda(-1.0, 1e5, 1e-3, ctx), DomainError);
}
