#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "schro/greens.hpp"

#include "oracles.hpp"
#include "reference_values.hpp"

using namespace schro;
using namespace schro::greens;
using testor::Rng;

namespace {

// deterministic random unitary interface parameters
struct UnitaryJ {
    double phi;
    Cplx a, b;
};

UnitaryJ random_j(Rng& rng) {
    const double phi = rng.uniform(0.0, kPi - 1e-9);
    const double th = rng.uniform(0.0, 2.0 * kPi);
    const double ps = rng.uniform(0.0, 2.0 * kPi);
    const double r = rng.uniform(0.0, 1.0);
    return {phi, std::sqrt(r) * std::polar(1.0, th), std::sqrt(1.0 - r) * std::polar(1.0, ps)};
}

const GreensFunctionSpec kSpecs[] = {
    GreensFunctionSpec::free(),
    GreensFunctionSpec::centrifugal(-3.0 / 16.0),
    GreensFunctionSpec::centrifugal(-0.5),
    GreensFunctionSpec::centrifugal(1.0),
    GreensFunctionSpec::point_interaction(0.0, Cplx(0.0, 0.0), Cplx(1.0, 0.0)),
};

} // namespace

TEST_CASE("point-interaction case classification") {
    // phi = 0, a = -1, b = 0: Dirichlet, Case III, mu0 = -1
    {
        const auto c = classify_point_interaction(0.0, Cplx(-1.0, 0.0), Cplx(0.0, 0.0));
        CHECK(c.case_id == PointInteractionCoefficients::Case::III);
        for (int sx : {1, -1})
            for (int sy : {1, -1}) {
                CHECK(c.mu_0(sx, sy) == Cplx(-1.0, 0.0));
                CHECK(c.mu_p(sx, sy) == Cplx(0.0, 0.0));
                CHECK(c.mu_m(sx, sy) == Cplx(0.0, 0.0));
            }
    }
    // phi = pi/2, a = 0, b = 1: Case II with omega+ = cot(pi/2) = 0 and
    // mu0(x>0, y<0) = -i conj(b) - 1 = -i - 1
    {
        const auto c = classify_point_interaction(kPi / 2.0, Cplx(0.0, 0.0), Cplx(1.0, 0.0));
        CHECK(c.case_id == PointInteractionCoefficients::Case::II);
        CHECK(std::abs(c.omega_plus) < 1e-15);
        CHECK(std::abs(c.mu_0(1, -1) - Cplx(-1.0, -1.0)) < 1e-14);
    }
    // phi = 0, a = 0, b = 1: Case I with omega+- = +-1, mu0 = sgn(xy)
    {
        const auto c = classify_point_interaction(0.0, Cplx(0.0, 0.0), Cplx(1.0, 0.0));
        CHECK(c.case_id == PointInteractionCoefficients::Case::I);
        CHECK(c.omega_plus == doctest::Approx(1.0));
        CHECK(c.omega_minus == doctest::Approx(-1.0));
        CHECK(c.mu_0(1, 1) == Cplx(1.0, 0.0));
        CHECK(c.mu_0(1, -1) == Cplx(-1.0, 0.0));
    }
    // |Re(a)| = 1: eta vanishes identically (Neumann-type J = I here)
    {
        const auto c = classify_point_interaction(0.0, Cplx(1.0, 0.0), Cplx(0.0, 0.0));
        for (int sx : {1, -1})
            for (int sy : {1, -1}) CHECK(c.eta_of(sx, sy) == Cplx(0.0, 0.0));
        CHECK(c.omega_plus == 0.0);
        CHECK(c.omega_minus == 0.0);
        CHECK(c.mu_0(1, 1) == Cplx(1.0, 0.0));
    }
    CHECK_THROWS_AS((void)classify_point_interaction(0.0, Cplx(0.8, 0.0), Cplx(0.8, 0.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)classify_point_interaction(-0.1, Cplx(0.0, 0.0), Cplx(1.0, 0.0)),
                    std::invalid_argument);
}

TEST_CASE("transmission matrices") {
    // centrifugal: M = I, N = 0
    {
        const auto tc = transmission_matrices(GreensFunctionSpec::centrifugal(-0.5));
        CHECK(tc.M[0][0] == Cplx(1.0, 0.0));
        CHECK(tc.M[1][1] == Cplx(1.0, 0.0));
        CHECK(tc.M[0][1] == Cplx(0.0, 0.0));
        CHECK(std::abs(tc.N[0][0]) + std::abs(tc.N[0][1]) + std::abs(tc.N[1][0]) +
                  std::abs(tc.N[1][1]) == 0.0);
    }
    // phi = 0, a = -1, b = 0: J = -I -> M = 2I, N = 0 (Dirichlet type)
    {
        const auto tc = transmission_matrices(
            GreensFunctionSpec::point_interaction(0.0, Cplx(-1.0, 0.0), Cplx(0.0, 0.0)));
        CHECK(std::abs(tc.M[0][0] - Cplx(2.0, 0.0)) < 1e-15);
        CHECK(std::abs(tc.M[1][1] - Cplx(2.0, 0.0)) < 1e-15);
        CHECK(std::abs(tc.N[0][0]) < 1e-15);
        CHECK(std::abs(tc.N[1][1]) < 1e-15);
    }
    // phi = 0, a = 1, b = 0: J = I -> M = 0, N = 2iI (Neumann type)
    {
        const auto tc = transmission_matrices(
            GreensFunctionSpec::point_interaction(0.0, Cplx(1.0, 0.0), Cplx(0.0, 0.0)));
        CHECK(std::abs(tc.M[0][0]) < 1e-15);
        CHECK(std::abs(tc.N[0][0] - Cplx(0.0, 2.0)) < 1e-15);
        CHECK(std::abs(tc.N[1][1] - Cplx(0.0, 2.0)) < 1e-15);
    }
}

TEST_CASE("eval_green: support, free diagonal, frozen attractive value") {
    // Theta support: centrifugal kernels vanish for sgn(x) != sgn(Re z)
    for (double lam : {-3.0 / 16.0, -0.5, 1.0}) {
        const auto spec = GreensFunctionSpec::centrifugal(lam);
        CHECK(eval_green(spec, 0.4, 1.0, Cplx(-2.0, 0.3)).value == Cplx(0.0, 0.0));
        CHECK(eval_green(spec, 0.4, -1.0, Cplx(2.0, 0.3)).value == Cplx(0.0, 0.0));
    }
    // free: G(t,x,x) = 1/(2 sqrt(i pi t)), so G(t,x,x) / sqrt(a(t)) = 1/sqrt(i pi)
    for (double t : {0.1, 0.7}) {
        const auto g = eval_green(GreensFunctionSpec::free(), t, 1.3, Cplx(1.3, 0.0));
        CHECK(std::abs(g.value * 2.0 * std::sqrt(t) - inv_sqrt_i_pi()) < 1e-15);
    }
    // attractive lambda = -3/16 (nu = 1/4), t = 0.5, x = 1, z = 2
    {
        const auto g = eval_green(GreensFunctionSpec::centrifugal(-3.0 / 16.0), 0.5, 1.0,
                                  Cplx(2.0, 0.0));
        CHECK(std::abs(g.value - testref::kGreenAttr_example) < 1e-13);
    }
    CHECK_THROWS_AS((void)GreensFunctionSpec::centrifugal(-0.25), std::invalid_argument);
    CHECK_THROWS_AS((void)GreensFunctionSpec::centrifugal(0.0), std::invalid_argument);
    CHECK_THROWS_AS(
        (void)eval_green(GreensFunctionSpec::centrifugal(-0.5), 0.4, 1.0, Cplx(0.0, 1.0)),
        std::domain_error);
    CHECK_THROWS_AS((void)eval_green(GreensFunctionSpec::free(), -0.1, 1.0, Cplx(1.0, 0.0)),
                    std::domain_error);
}

TEST_CASE("invariant: decomposition exactness across variants") {
    Rng rng(17);
    for (const auto& spec : kSpecs) {
        for (int i = 0; i < 200; ++i) {
            const double t = rng.uniform(0.05, 2.0);
            const double x = rng.uniform(0.1, 3.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
            Cplx z = std::polar(rng.uniform(0.1, 3.0), rng.uniform(-0.7, 0.7));
            if (rng.uniform() < 0.5) z = -z;
            const auto g = eval_green(spec, t, x, z);
            const Cplx dz = z - Cplx(x, 0.0);
            const Cplx recomposed = std::exp(Cplx(0.0, g.a_t) * dz * dz) * g.gtilde;
            CHECK(std::abs(g.value - recomposed) <= 1e-13 * std::max(std::abs(g.value), 1e-300));
        }
    }
}

TEST_CASE("invariant: Dirichlet limit of the centrifugal kernels") {
    for (double lam : {-3.0 / 16.0, -0.5, 1.0}) {
        const auto spec = GreensFunctionSpec::centrifugal(lam);
        for (double y : {0.7, 1.9}) {
            double prev = 1e300;
            for (int k = 1; k <= 6; ++k) {
                const double x = std::pow(10.0, -k);
                const double v = std::abs(eval_green(spec, 0.3, x, Cplx(y, 0.0)).value);
                CHECK(v < prev);
                prev = v;
            }
        }
    }
}

TEST_CASE("invariant: transmission identity for random point interactions") {
    Rng rng(29);
    double worst = 0.0;
    for (int jj = 0; jj < 10; ++jj) {
        const auto J = random_j(rng);
        const auto spec = GreensFunctionSpec::point_interaction(J.phi, J.a, J.b);
        const auto tc = transmission_matrices(spec);
        for (int yy = 0; yy < 20; ++yy) {
            const double t = rng.uniform(0.08, 1.2);
            const double y = rng.uniform(0.2, 2.5) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
            const auto eval_at = [&](double xx) {
                const auto g = eval_green(spec, t, xx, Cplx(y, 0.0));
                const Cplx dz = Cplx(y - xx, 0.0);
                const Cplx gx = std::exp(Cplx(0.0, g.a_t) * dz * dz) *
                                (g.gtilde_dx - Cplx(0.0, 2.0 * g.a_t) * dz * g.gtilde);
                return std::pair{g.value, gx};
            };
            const auto rich = [&](double sgn) {
                const auto c = eval_at(sgn * 1e-7);
                const auto f = eval_at(sgn * 1e-8);
                return std::pair{(10.0 * f.first - c.first) / 9.0,
                                 (10.0 * f.second - c.second) / 9.0};
            };
            const auto [gp, gxp] = rich(+1.0);
            const auto [gm, gxm] = rich(-1.0);
            for (int r = 0; r < 2; ++r) {
                const Cplx res = tc.M[r][0] * gp + tc.M[r][1] * gm -
                                 (tc.N[r][0] * gxp + tc.N[r][1] * (-gxm));
                worst = std::max(worst, std::abs(res));
            }
        }
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("invariant: delta limit of the diagonal") {
    // free: exact at every t; attractive: monotone approach over t = 1e-1..1e-6
    const Cplx target = inv_sqrt_i_pi();
    {
        const auto spec = GreensFunctionSpec::free();
        for (int k = 1; k <= 6; ++k) {
            const double t = std::pow(10.0, -k);
            const Cplx v = eval_green(spec, t, 1.0, Cplx(1.0, 0.0)).value * 2.0 * std::sqrt(t);
            CHECK(std::abs(v - target) < 1e-14);
        }
    }
    for (double lam : {-3.0 / 16.0, -0.5}) {
        const auto spec = GreensFunctionSpec::centrifugal(lam);
        double prev = 1e300;
        for (int k = 1; k <= 6; ++k) {
            const double t = std::pow(10.0, -k);
            const Cplx v = eval_green(spec, t, 1.0, Cplx(1.0, 0.0)).value * 2.0 * std::sqrt(t);
            const double dev = std::abs(v - target);
            CHECK(dev < prev);
            prev = dev;
        }
        CHECK(prev < 1e-4);
    }
}

TEST_CASE("invariant: analytic d/dx Gtilde matches central differences") {
    Rng rng(31);
    for (const auto& spec : kSpecs) {
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double t = rng.uniform(0.1, 1.5);
            const double x = rng.uniform(0.3, 2.5) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
            Cplx z = std::polar(rng.uniform(0.2, 2.5), rng.uniform(-0.6, 0.6));
            if (x < 0.0) z = -z; // stay on the supported side for centrifugal kernels
            const double h = 1e-6;
            const Cplx fd = (eval_green(spec, t, x + h, z).gtilde -
                             eval_green(spec, t, x - h, z).gtilde) / (2.0 * h);
            const auto g = eval_green(spec, t, x, z);
            worst = std::max(worst, std::abs(fd - g.gtilde_dx) /
                                        std::max(1.0, std::abs(g.gtilde_dx)));
        }
        CHECK(worst < 1e-7);
    }
}

TEST_CASE("invariant: growth coefficients bound the kernels on the sector") {
    Rng rng(41);
    for (const auto& spec : kSpecs) {
        for (int i = 0; i < 60; ++i) {
            const double t = rng.uniform(0.05, 1.5);
            const double x = rng.uniform(0.2, 2.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
            const auto gc = growth_coefficients(spec, t, x);
            CHECK(gc.B0 == 0.0); // every supported kernel is sector-bounded
            // sample the matching halves of the double sector: upper-right
            // for x > 0, lower-left for x < 0
            const double r = rng.uniform(0.1, 4.0);
            const double ang = rng.uniform(0.0, kPi / 5.0);
            Cplx z = std::polar(r, x > 0 ? ang : kPi + ang);
            const auto g = eval_green(spec, t, x, z);
            CHECK(std::abs(g.gtilde) <= gc.A0 * (1.0 + 1e-12));
        }
        // free normalization: A0 * 2 sqrt(t) = 1/sqrt(pi)
        if (spec.variant() == Variant::Free) {
            const auto gc = growth_coefficients(spec, 0.25, 1.0);
            CHECK(gc.A0 * 2.0 * std::sqrt(0.25) == doctest::Approx(1.0 / std::sqrt(kPi)));
        }
    }
    // attractive nu = 1/4: A0 * 2 sqrt(2t) equals the measured Hankel constant
    {
        const auto spec = GreensFunctionSpec::centrifugal(-3.0 / 16.0);
        const auto gc = growth_coefficients(spec, 0.3, 1.0);
        CHECK(std::abs(gc.A0 * 2.0 * std::sqrt(2.0 * 0.3) - testref::kCnu025) <
              1e-6 * testref::kCnu025);
    }
}

TEST_CASE("Schrodinger residual of the kernels") {
    // free: the Gaussian solves the free equation; only stencil error remains
    {
        const auto spec = GreensFunctionSpec::free();
        const Cplx r = schrodinger_residual(spec, 0.5, 1.2, Cplx(0.8, 0.1), 1e-4, 1e-3);
        CHECK(std::abs(r) < 1e-6);
    }
    // attractive lambda = -0.5 (imaginary order)
    {
        const auto spec = GreensFunctionSpec::centrifugal(-0.5);
        const Cplx r = schrodinger_residual(spec, 0.4, 1.3, Cplx(0.7, 0.0), 1e-4, 1e-4);
        CHECK(std::abs(r) < 1e-6);
    }
    // point interaction, Case I: second-order decay of the residual
    {
        const auto spec = GreensFunctionSpec::point_interaction(0.0, Cplx(0.0, 0.0), Cplx(1.0, 0.0));
        const double h1 = 2e-3, h2 = 1e-3;
        const Cplx r1 = schrodinger_residual(spec, 0.3, -0.8, Cplx(-1.1, 0.0), h1, h1);
        const Cplx r2 = schrodinger_residual(spec, 0.3, -0.8, Cplx(-1.1, 0.0), h2, h2);
        const double order = std::log2(std::abs(r1) / std::abs(r2));
        CHECK(order > 1.7);
        CHECK(order < 2.3);
    }
    CHECK_THROWS_AS(
        (void)schrodinger_residual(GreensFunctionSpec::free(), 0.3, 0.005, Cplx(1.0, 0.0), 1e-4, 0.01),
        std::domain_error);
}

TEST_CASE("point-interaction bound set on sector samples") {
    Rng rng(53);
    // |Gtilde_free| = 1/(2 sqrt(pi t)) exactly for the free kernel
    for (double t : {0.1, 0.9}) {
        const auto g = eval_green(GreensFunctionSpec::free(), t, 0.7, Cplx(1.1, 0.4));
        CHECK(std::abs(g.gtilde) == doctest::Approx(1.0 / (2.0 * std::sqrt(kPi * t))));
    }
    // random unitary interactions: |Gtilde| within the advertised A0 on the sector
    for (int jj = 0; jj < 5; ++jj) {
        const auto J = random_j(rng);
        const auto spec = GreensFunctionSpec::point_interaction(J.phi, J.a, J.b);
        for (int i = 0; i < 40; ++i) {
            const double t = rng.uniform(0.05, 1.0);
            const double x = rng.uniform(0.2, 2.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
            const auto gc = growth_coefficients(spec, t, x);
            const double ang = rng.uniform(0.0, kPi / 5.0);
            Cplx z = std::polar(rng.uniform(0.1, 3.0), ang);
            if (rng.uniform() < 0.5) z = -z; // both half-planes, matching sector halves
            if (z.real() < 0.0 && z.imag() > 0.0) z = std::conj(z);
            if (z.real() > 0.0 && z.imag() < 0.0) z = std::conj(z);
            const auto g = eval_green(spec, t, x, z);
            CHECK(std::abs(g.gtilde) <= gc.A0 * (1.0 + 1e-12));
        }
    }
}
