#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "schro/superosc.hpp"

#include "oracles.hpp"

using namespace schro;
using namespace schro::superosc;
using testor::Rng;

TEST_CASE("build_superosc: coefficients and frequencies") {
    // n = 2, k = 2: frequencies (1, 0, -1)
    {
        const auto s = build_superosc(2, 2.0);
        REQUIRE(s.frequencies.size() == 3);
        CHECK(s.frequencies[0] == 1.0);
        CHECK(s.frequencies[1] == 0.0);
        CHECK(s.frequencies[2] == -1.0);
    }
    // n = 1, k = 2: C0 = 1.5, C1 = -0.5
    {
        const auto s = build_superosc(1, 2.0);
        CHECK(s.coefficients[0] == doctest::Approx(1.5).epsilon(1e-14));
        CHECK(s.coefficients[1] == doctest::Approx(-0.5).epsilon(1e-14));
    }
    // value at x = 0 is 1 for any (n, k): sum of coefficients
    for (auto [n, k] : {std::pair{4, 3.0}, {17, -2.5}, {40, 1.5}}) {
        const auto s = build_superosc(n, k);
        CHECK(std::abs(eval_superosc(s, Cplx(0.0, 0.0), EvalForm::Sum) - Cplx(1.0, 0.0)) < 1e-11);
        CHECK(std::abs(eval_superosc(s, Cplx(0.0, 0.0), EvalForm::Product) - Cplx(1.0, 0.0)) < 1e-13);
    }
    CHECK_THROWS_AS((void)build_superosc(3, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)build_superosc(3, -0.5), std::invalid_argument);
    CHECK_THROWS_AS((void)build_superosc(0, 2.0), std::invalid_argument);
}

TEST_CASE("coefficient sign pattern and frequency band") {
    for (auto [n, k] : {std::pair{11, 2.0}, {24, 4.5}, {57, 1.2}}) {
        const auto s = build_superosc(n, k);
        for (int j = 0; j <= n; ++j) {
            // sign(C_j) = sign((1-k)^j) for k > 1
            const double want = (j % 2 == 0) ? 1.0 : -1.0;
            CHECK(std::copysign(1.0, s.coefficients[static_cast<std::size_t>(j)]) == want);
            CHECK(std::abs(s.frequencies[static_cast<std::size_t>(j)]) <= 1.0);
        }
        CHECK(s.frequencies.front() == 1.0);
        CHECK(s.frequencies.back() == -1.0);
    }
}

TEST_CASE("sum and product forms agree") {
    // the documented pair
    {
        const auto s = build_superosc(20, 2.0);
        const Cplx a = eval_superosc(s, Cplx(0.3, 0.0), EvalForm::Sum);
        const Cplx b = eval_superosc(s, Cplx(0.3, 0.0), EvalForm::Product);
        CHECK(std::abs(a - b) < 1e-11 * std::abs(b));
    }
    // 200 pseudo-random triples, n <= 60, |k| <= 5, |z| <= 20
    Rng rng(101);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + static_cast<int>(rng.uniform(0.0, 59.99));
        double k = rng.uniform(1.01, 5.0);
        if (rng.uniform() < 0.5) k = -k;
        const Cplx z = rng.disk(20.0);
        const auto s = build_superosc(n, k);
        const Cplx a = eval_superosc(s, z, EvalForm::Sum);
        const Cplx b = eval_superosc(s, z, EvalForm::Product);
        worst = std::max(worst, std::abs(a - b) / std::max(std::abs(b), 1e-300));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("superoscillatory convergence towards the fast plane wave") {
    // |F_n(0.3) - e^{i 2 (0.3)}| decreases along n = 10, 20, 40, 80
    const Cplx target = std::exp(Cplx(0.0, 0.6));
    double prev = 1e9;
    for (int n : {10, 20, 40, 80}) {
        const auto s = build_superosc(n, 2.0);
        const double err = std::abs(eval_superosc(s, Cplx(0.3, 0.0), EvalForm::Product) - target);
        CHECK(err < prev);
        prev = err;
    }
}

TEST_CASE("aq_distance: basic properties") {
    const auto f = [](Cplx z) { return std::exp(Cplx(0.0, 1.0) * z); };
    const auto g = [](Cplx z) { return std::exp(Cplx(0.0, 1.0) * z) + Cplx(0.3, -0.4); };
    const auto h = [](Cplx z) { return std::cos(z); };

    CHECK(aq_distance(f, f, 2.0, 1.0, 10.0, 32) == 0.0);
    // constant difference with B = 0: the weight is 1 everywhere
    CHECK(aq_distance(f, g, 0.0, 1.0, 10.0, 32) == doctest::Approx(0.5).epsilon(1e-12));
    // symmetry and the triangle inequality on the same sampled grid
    const double dfg = aq_distance(f, g, 2.0, 1.0, 10.0, 32);
    const double dgf = aq_distance(g, f, 2.0, 1.0, 10.0, 32);
    const double dfh = aq_distance(f, h, 2.0, 1.0, 10.0, 32);
    const double dhg = aq_distance(h, g, 2.0, 1.0, 10.0, 32);
    CHECK(dfg == dgf);
    CHECK(dfg >= 0.0);
    CHECK(dfg <= dfh + dhg + 1e-12);

    CHECK_THROWS_AS((void)aq_distance(f, g, -1.0, 1.0, 10.0, 32), std::invalid_argument);
    CHECK_THROWS_AS((void)aq_distance(f, g, 1.0, 2.0, 10.0, 32), std::invalid_argument);
}

TEST_CASE("aq_distance: F_n approaches e^{i3z} in the weighted norm") {
    const auto target = [](Cplx z) { return std::exp(Cplx(0.0, 3.0) * z); };
    double prev = 1e300;
    for (int n : {5, 10, 20, 40}) {
        const auto s = build_superosc(n, 3.0);
        const auto fn = [&s](Cplx z) { return eval_superosc(s, z, EvalForm::Product); };
        const double d = aq_distance(fn, target, 4.0, 1.0, 40.0, 96);
        CHECK(d < prev);
        prev = d;
    }
}

TEST_CASE("plane-wave supershift family") {
    const auto fam = build_supershift_plane_waves(1.0, 3.0);
    CHECK(fam.band == 1.0);
    CHECK(fam.target_kappa == 3.0);
    // F_n(0) = 1
    CHECK(std::abs(fam.stable_f_n(10, Cplx(0.0, 0.0)) - Cplx(1.0, 0.0)) < 1e-13);
    // member frequencies live in [-k0, k0], target outside
    for (const auto& [c, kl] : fam.members(12)) CHECK(std::abs(kl) <= fam.band);
    CHECK(std::abs(fam.target_kappa) > fam.band);

    // rescaling oracle: for k0 = 2 the member frequencies are 2 (1 - 2j/n) and
    // F_n(z) coincides with the unscaled sequence evaluated at k0 z
    const auto fam2 = build_supershift_plane_waves(2.0, 5.0);
    const auto members = fam2.members(8);
    const auto base = build_superosc(8, 2.5);
    for (std::size_t j = 0; j < members.size(); ++j) {
        CHECK(members[j].second ==
              doctest::Approx(2.0 * base.frequencies[j]).epsilon(1e-14));
    }
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        const Cplx z = rng.disk(5.0);
        const Cplx a = fam2.stable_f_n(8, z);
        const Cplx b = eval_superosc(base, 2.0 * z, EvalForm::Product);
        CHECK(std::abs(a - b) < 1e-12 * (1.0 + std::abs(b)));
    }

    CHECK_THROWS_AS((void)build_supershift_plane_waves(1.0, 0.5), std::invalid_argument);
}
