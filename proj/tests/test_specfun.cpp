#include "doctest.h"

#include "polybounce/errors.hpp"
#include "polybounce/specfun.hpp"

#include <boost/math/special_functions/airy.hpp>
#include <boost/math/special_functions/bessel.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

using namespace polybounce;
using namespace polybounce::specfun;

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

// Envelope of the oscillatory Airy tail, used as the scale for absolute errors.
double airy_envelope(double x) { return x < -1.0 ? std::pow(-x, -0.25) / std::sqrt(M_PI) : 1.0; }

double watson_weight(double alpha, int k) {
    if (k == 0) return std::tgamma(1.0 + alpha);
    return (alpha + 2.0 * k) * std::exp(std::lgamma(alpha + k) - std::lgamma(k + 1.0));
}

} // namespace

TEST_CASE("log_gamma values and functional equation") {
    CHECK(log_gamma(1.0) == 0.0);
    CHECK(rel(log_gamma(0.5), std::log(std::sqrt(M_PI))) < 1e-12);
    for (double x : {0.3, 1.7, 42.0})
        CHECK(std::fabs(log_gamma(x + 1.0) - log_gamma(x) - std::log(x)) < 1e-12);
    for (double x : {1e-3, 0.1, 0.75, 3.3, 10.0, 123.4, 2500.5})
        CHECK(rel(log_gamma(x), std::lgamma(x)) < 1e-12);
    CHECK_THROWS_AS(log_gamma(0.0), DomainError);
    CHECK_THROWS_AS(log_gamma(-2.5), DomainError);
}

TEST_CASE("ScaledFloat arithmetic beyond double range") {
    ScaledFloat a(3.0);
    CHECK(a.mantissa() == 1.5);
    CHECK(a.exponent() == 1);
    CHECK(a.to_double() == 3.0);
    CHECK(ScaledFloat(0.0).is_zero());
    CHECK(ScaledFloat(-0.1).to_double() == -0.1);

    ScaledFloat big = ScaledFloat::from_parts(1.25, 3000);
    ScaledFloat prod = big * big;
    CHECK(prod.exponent() == 6000);
    CHECK(std::isinf(prod.to_double()));
    CHECK((prod / big / big).to_double() == 1.0);
    CHECK(std::fabs(big.log_abs() - (std::log(1.25) + 3000 * std::log(2.0))) < 1e-9);

    ScaledFloat sum = big + ScaledFloat(1.0);
    CHECK(sum.exponent() == big.exponent());
    CHECK((ScaledFloat(2.0) + ScaledFloat(-2.0)).is_zero());
    CHECK((ScaledFloat(5.0) - ScaledFloat(2.0)).to_double() == 3.0);
}

TEST_CASE("Airy function at the origin") {
    const double ai0 = std::pow(3.0, -2.0 / 3.0) / std::tgamma(2.0 / 3.0);
    const double aip0 = -std::pow(3.0, -1.0 / 3.0) / std::tgamma(1.0 / 3.0);
    CHECK(rel(airy_ai(0.0), ai0) < 1e-13);
    CHECK(rel(airy_ai_prime(0.0), aip0) < 1e-13);
    CHECK(airy_ai(0.0) == doctest::Approx(0.3550280539).epsilon(1e-10));
    CHECK(airy_ai_prime(0.0) == doctest::Approx(-0.2588194038).epsilon(1e-10));
}

TEST_CASE("Airy function against reference implementation") {
    double worst = 0.0;
    for (double x = -30.0; x <= 30.0; x += 0.0731) {
        const double ref = boost::math::airy_ai(x);
        const double refp = boost::math::airy_ai_prime(x);
        double e1, e2;
        if (x > 0.0) {
            e1 = rel(airy_ai(x), ref);
            e2 = rel(airy_ai_prime(x), refp);
        } else {
            const double env = airy_envelope(x);
            e1 = std::fabs(airy_ai(x) - ref) / env;
            e2 = std::fabs(airy_ai_prime(x) - refp) / (env * std::max(1.0, std::sqrt(-x)));
        }
        worst = std::max({worst, e1, e2});
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("Airy decaying tail") {
    double prev = airy_ai(1.0);
    for (double x = 1.25; x < 40.0; x += 0.25) {
        const double v = airy_ai(x);
        CHECK(v < prev);
        CHECK(v >= 0.0);
        prev = v;
    }
    for (double x : {30.5, 40.0, 100.0, 1e3}) {
        CHECK(airy_ai(x) <= 1e-12);
        CHECK(std::fabs(airy_ai_prime(x)) <= 1e-12);
    }
    CHECK_THROWS_AS(airy_ai(NAN), DomainError);
    CHECK_THROWS_AS(airy_ai_prime(INFINITY), DomainError);
}

TEST_CASE("Airy derivative matches finite differences") {
    const double h = 1e-6;
    for (double x : {-12.3, -5.0, -2.338107410459767, -1.0, 0.4, 2.0, 6.5}) {
        const double fd = (airy_ai(x + h) - airy_ai(x - h)) / (2 * h);
        CHECK(rel(airy_ai_prime(x), fd) < 1e-6);
    }
}

TEST_CASE("Airy evaluation routes agree at the switch points") {
    for (double x : {1.0, 1.5, 2.5}) {
        const auto t = detail::airy_taylor(x);
        const auto q = detail::airy_integral(x);
        CHECK(rel(t.ai, q.ai) < 1e-11);
        CHECK(rel(t.aip, q.aip) < 1e-11);
    }
    for (double x : {-8.0, -8.5}) {
        const auto t = detail::airy_taylor(x);
        const auto o = detail::airy_oscillatory(x);
        const double env = airy_envelope(x);
        CHECK(std::fabs(t.ai - o.ai) / env < 1e-11);
        CHECK(std::fabs(t.aip - o.aip) / (env * std::sqrt(-x)) < 1e-11);
    }
}

TEST_CASE("Airy zeros") {
    CHECK(std::fabs(airy_zero(1) - (-2.338107)) < 1e-6);
    CHECK(std::fabs(airy_zero(2) - (-4.087949)) < 1e-6);
    CHECK(std::fabs(airy_zero_approx(1) - (-2.3203)) < 5e-4);
    double prev = 0.0;
    for (int n = 1; n <= 80; ++n) {
        const double a = airy_zero(n);
        CHECK(a < prev);
        CHECK(std::fabs(airy_ai(a)) <= 1e-12);
        CHECK(std::fabs(a - boost::math::airy_ai_zero<double>(n)) < 1e-11 * std::fabs(a));
        if (n <= 20) CHECK(std::fabs(a - airy_zero_approx(n)) / std::fabs(a) < 0.01);
        prev = a;
    }
    CHECK(std::fabs(airy_zero(200) / airy_zero_approx(200) - 1.0) < 1e-6);
    const auto zs = airy_zeros(5);
    REQUIRE(zs.size() == 5);
    CHECK(zs[4] == airy_zero(5));
    CHECK_THROWS_AS(airy_zero(0), DomainError);
    CHECK_THROWS_AS(airy_zero_approx(-1), DomainError);
}

TEST_CASE("bessel_j basic values") {
    CHECK(bessel_j(0.0, 0.0) == 1.0);
    CHECK(bessel_j(2.0, 0.0) == 0.0);
    CHECK(std::fabs(bessel_j(0.5, M_PI)) < 1e-10);
    CHECK(rel(bessel_j(0.5, 1.3), std::sqrt(2.0 / (M_PI * 1.3)) * std::sin(1.3)) < 1e-12);
    CHECK_THROWS_AS(bessel_j(-0.5, 1.0), DomainError);
    CHECK_THROWS_AS(bessel_j(1.0, -1.0), DomainError);
    CHECK_THROWS_AS(bessel_j(NAN, 1.0), DomainError);
    CHECK_THROWS_AS(bessel_j(1.0, 2e4), UnsupportedScale);
}

TEST_CASE("bessel_j against reference implementation") {
    const std::vector<double> orders = {0.0, 0.3, 1.0, 2.5, 10.0, 50.7, 200.0, 1000.25, 1999.9};
    const std::vector<double> args = {0.1, 1.0, 2.0, 10.0, 54.0, 250.0, 686.0, 2000.0, 9000.0};
    for (double nu : orders) {
        for (double x : args) {
            const double ref = boost::math::cyl_bessel_j(nu, x);
            if (std::fabs(ref) < 1e-280) continue;
            // Inside the oscillatory region the error is measured against the local envelope.
            double scale = std::fabs(ref);
            if (nu < x) scale = std::max(scale, 1e-3 * std::sqrt(2.0 / (M_PI * std::sqrt(x * x - nu * nu))));
            CAPTURE(nu);
            CAPTURE(x);
            CHECK(std::fabs(bessel_j(nu, x) - ref) / scale < 1e-9);
        }
    }
}

TEST_CASE("bessel_j_sequence matches ascending series") {
    const auto seq = bessel_j_sequence(0.0, 2.0, 1);
    CHECK(rel(seq.values[0], detail::bessel_j_series(0.0, 2.0)) < 1e-10);
    CHECK(rel(seq.values[1], detail::bessel_j_series(1.0, 2.0)) < 1e-10);
    CHECK(seq.base_order == 0.0);
    CHECK(seq.argument == 2.0);
    CHECK(seq.mu_max() == 1);

    // Overlap grid where the series is stable.
    for (double alpha : {0.0, 0.25, 0.731}) {
        for (double x : {0.5, 3.0, 12.0, 40.0}) {
            const auto s = bessel_j_sequence(alpha, x, 400);
            for (int mu = 0; mu <= 400; mu += 7) {
                const double nu = alpha + mu;
                if (!detail::bessel_series_stable(nu, x)) continue;
                const double ref = detail::bessel_j_series(nu, x);
                if (std::fabs(ref) < 1e-280) continue;
                CHECK(rel(s.values[mu], ref) < 1e-9);
            }
        }
    }
}

TEST_CASE("bessel_j_sequence recurrence, Watson sum and start insensitivity") {
    struct Case { double alpha, x; int mu_max; };
    const std::vector<Case> cases = {{0.0, 2.0, 30},     {0.5, 16.0, 80},   {0.123, 250.0, 600},
                                     {0.9, 686.0, 1500}, {0.4, 2000.0, 2500}, {0.77, 1e4, 10500}};
    for (const auto& c : cases) {
        CAPTURE(c.x);
        const auto seq = bessel_j_sequence(c.alpha, c.x, c.mu_max);
        double peak = 0.0;
        for (double v : seq.values) {
            CHECK(std::isfinite(v));
            peak = std::max(peak, std::fabs(v));
        }
        double worst = 0.0;
        for (int mu = 1; mu < seq.mu_max(); ++mu) {
            if (std::fabs(seq.values[mu]) < 1e-280) continue;
            const double nu = seq.order(mu);
            const double r = seq.values[mu + 1] + seq.values[mu - 1] - 2.0 * nu / c.x * seq.values[mu];
            worst = std::max(worst, std::fabs(r) / peak);
        }
        CHECK(worst < 1e-10);

        // Watson identity recomputed from the emitted values.
        if (c.mu_max > c.x + 30 * std::cbrt(c.x) + 60) {
            double sum = 0.0;
            for (int k = 0; 2 * k <= seq.mu_max(); ++k) sum += watson_weight(c.alpha, k) * seq.values[2 * k];
            CHECK(rel(sum, std::pow(0.5 * c.x, c.alpha)) < 1e-9);
        }

        const auto doubled = detail::bessel_j_sequence(c.alpha, c.x, c.mu_max, 2.0);
        double diff = 0.0;
        for (int mu = 0; mu <= c.mu_max; ++mu) diff = std::max(diff, std::fabs(doubled.values[mu] - seq.values[mu]));
        CHECK(diff / peak < 1e-11);
    }
    CHECK_THROWS_AS(bessel_j_sequence(0.2, 1.5e4, 10), UnsupportedScale);
    CHECK_THROWS_AS(bessel_j_sequence(1.2, 5.0, 10), DomainError);
    CHECK_THROWS_AS(bessel_j_sequence(0.2, 5.0, 0), DomainError);
}

TEST_CASE("negative-order ladder against reference") {
    for (double nu0 : {-0.4, -3.7, -12.25, -1.0}) {
        for (double x : {2.0, 16.0, 54.0}) {
            const auto lad = detail::bessel_j_ladder(nu0, x, 20);
            for (int mu = 0; mu < 20; ++mu) {
                const double ref = boost::math::cyl_bessel_j(nu0 + mu, x);
                const double scale = std::max(std::fabs(ref), 1e-3 / std::sqrt(x));
                CAPTURE(nu0 + mu);
                CAPTURE(x);
                CHECK(std::fabs(lad[mu] - ref) / scale < 1e-9);
            }
        }
    }
}

TEST_CASE("Airy-Bessel identity on the negative axis") {
    for (double y : {1.0, 2.0, 5.0}) {
        const double xi = 2.0 / 3.0 * std::pow(y, 1.5);
        const double rhs = std::sqrt(y) / 3.0 * (detail::bessel_j_series(1.0 / 3.0, xi) +
                                                  detail::bessel_j_series(-1.0 / 3.0, xi));
        CHECK(std::fabs(airy_ai(-y) - rhs) < 1e-8);
    }
}

TEST_CASE("order derivative of J") {
    // d J_nu / d nu at nu = 0 equals (pi/2) Y_0(x).
    for (double x : {0.7, 2.0, 9.5}) {
        const double ref = 0.5 * M_PI * std::cyl_neumann(0.0, x);
        CHECK(rel(bessel_j_dnu(0.0, x), ref) < 1e-5);
        // 4-point stencil oracle
        const double h = 1e-3;
        auto J = [&](double nu) { return detail::bessel_j_real(nu, x); };
        const double d4 = (-J(2 * h) + 8 * J(h) - 8 * J(-h) + J(-2 * h)) / (12 * h);
        CHECK(rel(bessel_j_dnu(0.0, x), d4) < 1e-5);
    }
    CHECK(std::fabs(bessel_j_dnu(80.0, 3.0)) < 1e-60);
    {
        const double nu = 4.3, x = 7.1, h = 1e-6 * nu;
        const double central = bessel_j_dnu(nu, x);
        const double fwd = (bessel_j(nu + h, x) - bessel_j(nu, x)) / h;
        const double bwd = (bessel_j(nu, x) - bessel_j(nu - h, x)) / h;
        CHECK(std::fabs(central - 0.5 * (fwd + bwd)) < 1e-9);
    }
    CHECK_THROWS_AS(bessel_j_dnu(-1.0, 2.0), DomainError);
}
