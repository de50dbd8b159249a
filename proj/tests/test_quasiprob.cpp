#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cvnet/quadrature.hpp"
#include "cvnet/quasiprob.hpp"

using namespace cvnet;

namespace {

// Independent closed form of the EPR quasiprobability, written out from the
// published expression rather than shared library code.
double q_epr_reference(double r, Complex a, Complex b, double s) {
    const double R = s * s - 2.0 * s * std::cosh(2.0 * r) + 1.0;
    const double S = std::cosh(2.0 * r) - s;
    const double quad = S * (std::norm(a) + std::norm(b))
                        - std::sinh(2.0 * r) * 2.0 * (a * b).real();
    return 4.0 / (M_PI * M_PI * R) * std::exp(-2.0 / R * quad);
}

double q_sts_reference(double v1, double v2, double r, Complex a, Complex b,
                       double s) {
    const double ch2 = std::cosh(r) * std::cosh(r);
    const double A = -2.0 * ch2 * s * (v1 + v2) + (v1 + s) * (v2 + s);
    const double A1 = (v1 + v2) * ch2 - v1 - s;
    const double A2 = (v1 + v2) * ch2 - v2 - s;
    const double quad = A1 * std::norm(a) + A2 * std::norm(b)
                        - std::sinh(2.0 * r) * (v1 + v2) * (a * b).real();
    return 4.0 / (M_PI * M_PI * A) * std::exp(-2.0 / A * quad);
}

} // namespace

TEST_CASE("smoothing domain") {
    CHECK_NOTHROW(Smoothing(0.0));
    CHECK_NOTHROW(Smoothing(-3.0));
    CHECK_THROWS_AS(Smoothing(0.1), DomainError);
}

TEST_CASE("epr quasiprobability closed form") {
    CHECK(q_epr(0.0, 0.0, 0.0, Smoothing(-1.0))
          == doctest::Approx(1.0 / (M_PI * M_PI)).epsilon(1e-12));
    CHECK(q_epr_marginal(0.0, 0.0, Smoothing(-1.0))
          == doctest::Approx(1.0 / M_PI).epsilon(1e-12));

    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (double s : {-0.2, -0.5, -1.0, -1.7}) {
        for (int i = 0; i < 20; ++i) {
            const double r = 0.75 * (i % 5);
            const Complex a(coord(gen), coord(gen)), b(coord(gen), coord(gen));
            const double got = q_epr(r, a, b, Smoothing(s));
            CHECK(got == doctest::Approx(q_epr_reference(r, a, b, s)).epsilon(1e-12));
            CHECK(got >= 0.0);
        }
    }
    CHECK_THROWS_AS(q_epr(-0.5, 0.0, 0.0, Smoothing(-1.0)), DomainError);
}

TEST_CASE("sts quasiprobability closed form") {
    const StsParams p(1.2, 1.2, 1.0);
    const double ch2 = std::cosh(1.0) * std::cosh(1.0);
    CHECK(q_sts(p, 0.0, 0.0, Smoothing(-1.0))
          == doctest::Approx(4.0 / (M_PI * M_PI * (4.8 * ch2 + 0.04))).epsilon(1e-12));
    CHECK(q_sts_marginal(StsParams(1.1, 1.1, 0.0), 0.0, Smoothing(-1.0), Arm::First)
          == doctest::Approx(2.0 / (M_PI * 2.1)).epsilon(1e-12));

    std::mt19937_64 gen(12);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (double s : {-0.3, -0.8, -1.0, -2.0}) {
        for (int i = 0; i < 20; ++i) {
            const StsParams q(1.0 + 0.1 * (i % 4), 1.0 + 0.25 * (i % 3), 0.4 * (i % 4));
            const Complex a(coord(gen), coord(gen)), b(coord(gen), coord(gen));
            CHECK(q_sts(q, a, b, Smoothing(s))
                  == doctest::Approx(q_sts_reference(q.v1, q.v2, q.r, a, b, s))
                         .epsilon(1e-12));
        }
    }

    // Pure limit v1 = v2 = 1 coincides with the EPR expression.
    for (double r : {0.0, 0.4, 1.3}) {
        const Complex a(0.7, -0.2), b(-0.4, 1.1);
        CHECK(q_sts(StsParams(1.0, 1.0, r), a, b, Smoothing(-0.5))
              == doctest::Approx(q_epr(r, a, b, Smoothing(-0.5))).epsilon(1e-12));
        CHECK(q_sts_marginal(StsParams(1.0, 1.0, r), a, Smoothing(-0.5), Arm::First)
              == doctest::Approx(q_epr_marginal(r, a, Smoothing(-0.5))).epsilon(1e-12));
    }

    // Symmetric thermal inputs: the two arm marginals agree; asymmetric: not.
    const Complex a(0.3, 0.9);
    CHECK(q_sts_marginal(p, a, Smoothing(-1.0), Arm::First)
          == doctest::Approx(q_sts_marginal(p, a, Smoothing(-1.0), Arm::Second)));
    const StsParams asym(1.2, 2.0, 0.7);
    CHECK(q_sts_marginal(asym, a, Smoothing(-1.0), Arm::First)
          != doctest::Approx(q_sts_marginal(asym, a, Smoothing(-1.0), Arm::Second)));
}

TEST_CASE("generic route matches closed forms") {
    std::mt19937_64 gen(13);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (double s : {-0.5, -1.0, -1.5}) {
        const Smoothing sm(s);
        for (int i = 0; i < 15; ++i) {
            const double r = 0.3 * (i % 5);
            const Complex a(coord(gen), coord(gen)), b(coord(gen), coord(gen));
            CHECK(q_generic(epr_state(r), {a, b}, sm)
                  == doctest::Approx(q_epr(r, a, b, sm)).epsilon(1e-12));
            CHECK(q_generic_marginal(epr_state(r), {0}, {a}, sm)
                  == doctest::Approx(q_epr_marginal(r, a, sm)).epsilon(1e-12));

            const StsParams p(1.3, 1.05, r);
            CHECK(q_generic(sts_state(p), {a, b}, sm)
                  == doctest::Approx(q_sts(p, a, b, sm)).epsilon(1e-12));
            CHECK(q_generic_marginal(sts_state(p), {0}, {a}, sm)
                  == doctest::Approx(q_sts_marginal(p, a, sm, Arm::First)).epsilon(1e-12));
            CHECK(q_generic_marginal(sts_state(p), {1}, {b}, sm)
                  == doctest::Approx(q_sts_marginal(p, b, sm, Arm::Second)).epsilon(1e-12));
        }
    }

    GaussianState shifted = epr_state(0.5);
    shifted.mean = Eigen::VectorXd::Ones(4);
    CHECK_THROWS_AS(q_generic(shifted, {0.0, 0.0}, Smoothing(-1.0)), UnsupportedError);

    GaussianState ill = epr_state(0.0);
    ill.cov(3, 3) = 1e-13;
    CHECK_THROWS_AS(q_generic(ill, {0.0, 0.0}, Smoothing(0.0)), NumericError);
}

TEST_CASE("combinators") {
    CHECK(c_combinator(Sign::Plus, 0.3, 0.2) == doctest::Approx(0.5));
    CHECK(c_combinator(Sign::Minus, 0.3, 0.2) == doctest::Approx(0.1));
    CHECK(d_combinator(Sign::Plus, 1.0, 2.0, 3.0, 4.0) == doctest::Approx(10.0));
    CHECK(d_combinator(Sign::Minus, 1.0, 2.0, 3.0, 4.0) == doctest::Approx(-4.0));
}

TEST_CASE("cached source evaluator agrees with the generic route") {
    std::mt19937_64 gen(14);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (double s : {-0.4, -1.0, -2.0}) {
        const Smoothing sm(s);
        const StsParams p(1.4, 1.1, 0.8);
        const SourceQ cached(sts_state(p), sm);
        CHECK(cached.smoothing() == s);
        for (int i = 0; i < 25; ++i) {
            const Complex a(coord(gen), coord(gen)), b(coord(gen), coord(gen));
            CHECK(cached.joint(a, b)
                  == doctest::Approx(q_generic(sts_state(p), {a, b}, sm)).epsilon(1e-12));
            CHECK(cached.marginal_first(a)
                  == doctest::Approx(q_generic_marginal(sts_state(p), {0}, {a}, sm))
                         .epsilon(1e-12));
            CHECK(cached.marginal_second(b)
                  == doctest::Approx(q_generic_marginal(sts_state(p), {1}, {b}, sm))
                         .epsilon(1e-12));
        }
    }
}

TEST_CASE("marginal consistency by quadrature") {
    // Integrating the joint quasiprobability over one arm recovers the other
    // arm's marginal. Smooth Gaussian integrand; 96-point tensor rule over a
    // +-6 box is accurate far beyond the 1e-6 tolerance.
    const Smoothing sm(-1.0);
    const StsParams p(1.2, 1.5, 0.6);
    for (const Complex alpha : {Complex(0.0, 0.0), Complex(0.8, -0.5)}) {
        const double integral = integrate_plane(
            [&](double x, double y) {
                return q_sts(p, alpha, Complex(x, y), sm);
            },
            6.0);
        CHECK(integral
              == doctest::Approx(q_sts_marginal(p, alpha, sm, Arm::First)).epsilon(1e-6));
    }
    // And the joint normalizes to 1 after both integrations; check via the
    // marginal instead of a 4d quadrature.
    const double total = integrate_plane(
        [&](double x, double y) {
            return q_sts_marginal(p, Complex(x, y), sm, Arm::First);
        },
        6.0);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
}
