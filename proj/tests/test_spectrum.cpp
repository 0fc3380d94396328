#include "doctest.h"

#include "polybounce/errors.hpp"
#include "polybounce/specfun.hpp"
#include "polybounce/spectrum.hpp"

#include <cmath>

using namespace polybounce;

namespace {

DimensionlessParams P(double s) { return DimensionlessParams::from_s(s); }

const SpectrumCell& cell(const SpectrumTable& t, double s, int n) {
    for (const auto& c : t.cells)
        if (c.s == s && c.n == n) return c;
    throw std::runtime_error("missing cell");
}

} // namespace

TEST_CASE("Bessel-route energies") {
    CHECK(std::fabs(polymer_energy_bessel(P(10), 1) - 0.011686) < 5e-6);
    CHECK(std::fabs(polymer_energy_bessel(P(5), 1) - 0.0466892) < 5e-6);
    CHECK(std::fabs(polymer_energy_bessel(P(10), 10) - 0.064006) < 5e-6);
    // Root of the quantization function.
    const double e = polymer_energy_bessel(P(6), 3);
    CHECK(std::fabs(quantization_function(P(6), e)) < 1e-9);
    CHECK_THROWS_AS(polymer_energy_bessel(P(6), 0), DomainError);
    // A seed far from any root never brackets one.
    const double e1 = polymer_energy_bessel(P(6), 1);
    const double e2 = polymer_energy_bessel(P(6), 2);
    CHECK_THROWS_AS(polymer_energy_bessel(P(6), 1, 0.5 * (e1 + e2), 1e-3), NumericalFailure);
}

TEST_CASE("Bessel-route wavefunctions") {
    for (double s : {2.0, 5.0, 10.0}) {
        for (int n : {1, 2, 6, 10}) {
            CAPTURE(s);
            CAPTURE(n);
            const auto rep = polymer_wavefunction_report(P(s), n);
            CHECK(std::fabs(rep.boundary_value) < 1e-10);
            CHECK(rep.normalization_identity_error < 1e-4);
            double norm = 0.0;
            for (int mu = 1; mu <= rep.state.dimension(); ++mu) norm += rep.state.samples[mu] * rep.state.samples[mu];
            CHECK(std::fabs(norm - 1.0) < 1e-10);
            CHECK(rep.state.samples[1] > 0.0);
            CHECK(node_count(rep.state) == n - 1);
        }
    }
    CHECK(node_count(polymer_wavefunction(P(5), 2)) == 1);
}

TEST_CASE("orthonormality of Bessel-route states") {
    std::vector<PolymerState> states;
    for (int n = 1; n <= 8; ++n) states.push_back(polymer_wavefunction(P(5), n));
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const int dim = std::max(states[i].dimension(), states[j].dimension());
            double g = 0.0;
            for (int mu = 0; mu <= dim; ++mu) g += states[i].psi(mu) * states[j].psi(mu);
            CHECK(std::fabs(g - (i == j ? 1.0 : 0.0)) < 1e-8);
        }
        if (i > 0) CHECK(states[i].energy > states[i - 1].energy);
    }
}

TEST_CASE("perturbative shift and continuum energy") {
    CHECK(std::fabs(continuum_energy(P(1), 1) + perturbative_shift(P(1), 1) - 1.1235) < 1e-4);
    CHECK(std::fabs(continuum_energy(P(1), 2) + perturbative_shift(P(1), 2) - 1.90471) < 1e-4);
    CHECK(std::fabs(perturbative_shift(P(10), 1) - (-4.556e-6)) < 1e-9);
    CHECK(std::fabs(continuum_energy(P(10), 1) - 0.0116906) < 1e-6);
    CHECK(std::fabs(continuum_energy(P(1), 1) - 1.169054) < 1e-5);
    for (int n = 1; n <= 10; ++n) CHECK(perturbative_shift(P(3), n) < 0.0);
    const double diff = *reference_level(10, 1) - continuum_energy(P(10), 1);
    CHECK(std::fabs(diff / perturbative_shift(P(10), 1) - 1.0) < 0.1);
}

TEST_CASE("GUP comparison") {
    const auto ctx = PhysicalContext::neutron();
    const auto g0 = gup_energy(1, 1.0, 0.0, ctx);
    CHECK(g0.total == doctest::Approx(qb_energy(1, ctx).joules).epsilon(1e-14));
    const auto g = gup_energy(3, 2.5e-20, 1e-7, ctx);
    CHECK(g.correction > 0.0);
    const double a1 = specfun::airy_zero(1);
    const auto unit = gup_energy(1, 1.0, ctx.l0(), ctx);
    CHECK(unit.correction == doctest::Approx(ctx.l0() * ctx.l0() * a1 * a1).epsilon(1e-14));
    CHECK_THROWS_AS(gup_energy(1, 1.0, -1.0, ctx), DomainError);
}

TEST_CASE("cosine expectation") {
    for (double s : {2.0, 5.0, 10.0}) {
        const auto states = lattice_states(P(s), 6);
        for (const auto& st : states) {
            const double c = cos_expectation(st);
            CHECK(std::fabs(c - (1.0 - st.energy + mean_mu(st) / (2.0 * st.params.upsilon))) < 1e-9);
            CHECK(c > 0.0);
            CHECK(c <= 1.0);
        }
    }
    CHECK(cos_expectation(lattice_states(P(10), 1)[0]) < 1.0);
    double prev = 0.0;
    for (double s : {5.0, 10.0, 20.0}) {
        const double c = cos_expectation(lattice_states(P(s), 1)[0]);
        CHECK(c > prev);
        prev = c;
    }
    CHECK(1.0 - prev < 1e-3);
}

TEST_CASE("spectrum table") {
    std::vector<double> sl;
    for (int s = 1; s <= 10; ++s) sl.push_back(s);
    const auto t = spectrum_table(sl, 10);
    REQUIRE(t.cells.size() == 100);
    CHECK(t.failed_cells() == 0);
    CHECK(t.incomplete_cells() == 0);
    CHECK(std::fabs(*cell(t, 9, 1).lattice - 0.0144258) < 5e-6);
    CHECK(std::fabs(*cell(t, 3, 10).bessel - 0.694599) < 5e-6);
    for (int n = 1; n <= 10; ++n) {
        CHECK(cell(t, 2, n).suspect_reference == (n >= 6));
        CHECK(cell(t, 1, n).perturbative.has_value());
    }
    for (const auto& c : t.cells) {
        CHECK_FALSE(c.extrapolated);
        CHECK(*c.lattice < c.continuum);
        if (c.s >= 2) CHECK(*c.route_agreement() < 1e-8);
        if (c.s >= 5) {
            const double shift = perturbative_shift(P(c.s), c.n);
            CHECK(std::fabs(*c.lattice - c.continuum - shift) <= 5.0 * std::fabs(shift) / (c.s * c.s));
        }
    }

    const auto ext = spectrum_table({20.0, 12.5}, 3);
    REQUIRE(ext.cells.size() == 6);
    for (const auto& c : ext.cells) {
        CHECK(c.extrapolated);
        CHECK(c.lattice.has_value());
        CHECK(*c.lattice < c.continuum);
    }
    // 2 upsilon = 16000 lies beyond the Bessel evaluator's domain.
    CHECK_FALSE(cell(ext, 20.0, 1).bessel.has_value());
    CHECK(cell(ext, 20.0, 1).errors.size() == 1);
    CHECK(cell(ext, 12.5, 2).bessel.has_value());

    const auto bad = spectrum_table({0.5}, 2);
    CHECK(bad.failed_cells() == 2);
}

TEST_CASE("density profiles") {
    const auto ctx = PhysicalContext::neutron();
    const auto s5 = density_profile(lattice_states(P(5), 1)[0], ctx, 400);
    double sum = 0.0;
    for (const auto& [z, rho] : s5.lattice) sum += rho * s5.lambda;
    CHECK(std::fabs(sum - 1.0) < 1e-10);
    CHECK(s5.sup_deviation < 0.02);
    CHECK(s5.continuum.size() == 400);
    CHECK(s5.lattice.front().first == 0.0);

    const auto s1 = density_profile(polymer_wavefunction(P(1), 1), ctx, 100);
    MESSAGE("s = 1 density deviation: " << s1.sup_deviation);
    CHECK(s1.sup_deviation > s5.sup_deviation);
}
