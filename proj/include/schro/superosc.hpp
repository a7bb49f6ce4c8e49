#pragma once

// Superoscillating initial data
//
//   F_n(z) = (cos(z/n) + i k sin(z/n))^n = sum_j C_j e^{i k_j z},
//   C_j = binom(n,j) ((1+k)/2)^{n-j} ((1-k)/2)^j,  k_j = 1 - 2j/n,
//
// plus generic supershift families (a kappa-indexed family phi_kappa with a
// band of admissible kappa's and a target outside it) and the weighted
// sup-distance used to quantify convergence of entire-function sequences.
//
// The literal sum form is spectacularly ill-conditioned: sum_j |C_j| = |k|^n
// against a value of order one. eval_superosc therefore accumulates the sum
// in long double up to the point where that still leaves 12 digits, and in
// MPFR beyond (precision chosen from n log2|k|). The product form is the
// numerically stable route and is what evolution code consumes.

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include <gmp.h>
#include <mpfr.h>

#include "schro/common.hpp"

namespace schro::superosc {

struct SuperoscillatingSequence {
    int n = 1;
    double k = 2.0; // |k| > 1
    std::vector<double> coefficients; // C_j, real for real k
    std::vector<double> frequencies;  // k_j = 1 - 2j/n in [-1,1]
};

inline SuperoscillatingSequence build_superosc(int n, double k) {
    if (n < 1) throw std::invalid_argument("build_superosc: n must be >= 1");
    if (!(std::abs(k) > 1.0))
        throw std::invalid_argument("build_superosc: |k| must exceed 1 (otherwise not superoscillatory)");
    SuperoscillatingSequence s;
    s.n = n;
    s.k = k;
    s.coefficients.resize(static_cast<std::size_t>(n) + 1);
    s.frequencies.resize(static_cast<std::size_t>(n) + 1);
    const long double ap = (1.0L + static_cast<long double>(k)) / 2.0L;
    const long double am = (1.0L - static_cast<long double>(k)) / 2.0L;
    if (n <= 60) {
        // Exact-integer binomials (they fit the 64-bit mantissa up to n = 66)
        // and plain power products; bitwise-exact coefficients for integer k.
        long double binom = 1.0L;
        for (int j = 0; j <= n; ++j) {
            long double c = binom;
            for (int q = 0; q < n - j; ++q) c *= ap;
            for (int q = 0; q < j; ++q) c *= am;
            s.coefficients[static_cast<std::size_t>(j)] = static_cast<double>(c);
            s.frequencies[static_cast<std::size_t>(j)] = static_cast<double>(n - 2 * j) / n;
            binom = binom * (n - j) / (j + 1);
        }
        return s;
    }
    for (int j = 0; j <= n; ++j) {
        // log-space binomial keeps larger n overflow-free; signs tracked
        // separately since one of (1+-k)/2 is negative for |k| > 1.
        const double ln_c = std::lgamma(n + 1.0) - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0) +
                            (n - j) * std::log(std::abs(static_cast<double>(ap))) +
                            j * std::log(std::abs(static_cast<double>(am)));
        double sign = 1.0;
        if (ap < 0.0L && ((n - j) % 2 != 0)) sign = -sign;
        if (am < 0.0L && (j % 2 != 0)) sign = -sign;
        s.coefficients[static_cast<std::size_t>(j)] = sign * std::exp(ln_c);
        s.frequencies[static_cast<std::size_t>(j)] = static_cast<double>(n - 2 * j) / n;
    }
    return s;
}

enum class EvalForm { Sum, Product };

namespace detail {

inline Cplx eval_product(const SuperoscillatingSequence& s, Cplx z) {
    const Cplx w = z / static_cast<double>(s.n);
    const Cplx base = std::cos(w) + Cplx(0.0, s.k) * std::sin(w);
    // Binary exponentiation; exp(n log base) would stumble over the zeros of
    // the base on the imaginary axis.
    Cplx acc(1.0, 0.0);
    Cplx b = base;
    int e = s.n;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline Cplx eval_sum_long_double(const SuperoscillatingSequence& s, Cplx z) {
    using LC = std::complex<long double>;
    const LC zl(z.real(), z.imag());
    LC sum(0.0L, 0.0L), comp(0.0L, 0.0L);
    for (std::size_t j = 0; j < s.coefficients.size(); ++j) {
        const long double kj = s.frequencies[j];
        const LC term = static_cast<long double>(s.coefficients[j]) *
                        std::exp(LC(0.0L, 1.0L) * kj * zl);
        const LC y = term - comp;
        const LC t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return Cplx(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
}

// MPFR path. The headroom needed is the gap between the largest weighted
// term (sum_j |C_j| e^{|k_j Im z|} <= |k|^n e^{|Im z|}) and the value itself,
// which can sit near a zero of F_n; the value is pre-estimated through the
// stable product form.
inline Cplx eval_sum_mpfr(const SuperoscillatingSequence& s, Cplx z, double log_value_estimate) {
    const double cancel_bits =
        (s.n * std::log(std::abs(s.k)) + std::abs(z.imag()) -
         std::max(log_value_estimate, -745.0)) / 0.6931471805599453;
    const mpfr_prec_t prec =
        static_cast<mpfr_prec_t>(std::min(std::max(cancel_bits, 0.0) + 96.0, 8192.0));
    mpfr_t re, im, cj, kj, ph, c, sn, tr, ti, t;
    mpfr_inits2(prec, re, im, cj, kj, ph, c, sn, tr, ti, t, static_cast<mpfr_ptr>(nullptr));
    mpz_t binom;
    mpz_init(binom);
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
    const int n = s.n;
    for (int j = 0; j <= n; ++j) {
        // C_j exactly in high precision: binom(n,j) ((1+k)/2)^{n-j} ((1-k)/2)^j
        mpfr_set_d(cj, (1.0 + s.k) / 2.0, MPFR_RNDN);
        mpfr_pow_si(cj, cj, n - j, MPFR_RNDN);
        mpfr_set_d(t, (1.0 - s.k) / 2.0, MPFR_RNDN);
        mpfr_pow_si(t, t, j, MPFR_RNDN);
        mpfr_mul(cj, cj, t, MPFR_RNDN);
        mpz_bin_uiui(binom, static_cast<unsigned long>(n), static_cast<unsigned long>(j));
        mpfr_mul_z(cj, cj, binom, MPFR_RNDN);
        // e^{i k_j z} = e^{-k_j Im z} (cos(k_j Re z) + i sin(k_j Re z))
        mpfr_set_si(kj, n - 2 * j, MPFR_RNDN);
        mpfr_div_si(kj, kj, n, MPFR_RNDN);
        mpfr_mul_d(ph, kj, z.real(), MPFR_RNDN);
        mpfr_sin_cos(sn, c, ph, MPFR_RNDN);
        mpfr_mul_d(t, kj, -z.imag(), MPFR_RNDN);
        mpfr_exp(t, t, MPFR_RNDN);
        mpfr_mul(cj, cj, t, MPFR_RNDN);
        mpfr_mul(tr, cj, c, MPFR_RNDN);
        mpfr_mul(ti, cj, sn, MPFR_RNDN);
        mpfr_add(re, re, tr, MPFR_RNDN);
        mpfr_add(im, im, ti, MPFR_RNDN);
    }
    const Cplx out(mpfr_get_d(re, MPFR_RNDN), mpfr_get_d(im, MPFR_RNDN));
    mpz_clear(binom);
    mpfr_clears(re, im, cj, kj, ph, c, sn, tr, ti, t, static_cast<mpfr_ptr>(nullptr));
    return out;
}

} // namespace detail

inline Cplx eval_superosc(const SuperoscillatingSequence& s, Cplx z, EvalForm form) {
    if (form == EvalForm::Product) return detail::eval_product(s, z);
    // Cancellation headroom: the weighted terms reach |k|^n e^{|Im z|} while
    // the value (estimated through the stable product form) may be tiny.
    // Coefficients stored in double support ~4 digits of cancellation; the
    // exact MPFR route covers the rest.
    const double mag = std::abs(detail::eval_product(s, z));
    const double log_value = mag > 0.0 ? std::log(mag) : -745.0;
    const double digits_lost =
        (s.n * std::log(std::abs(s.k)) + std::abs(z.imag()) - std::min(log_value, 0.0)) /
        2.302585092994046;
    if (digits_lost < 4.5) return detail::eval_sum_long_double(s, z);
    return detail::eval_sum_mpfr(s, z, log_value);
}

// ---------------------------------------------------------------------------
// A_q-style weighted sup distance, sampled on a polar grid of the disk
// |z| <= R: max |f - g| e^{-B |z|^q}. A lower bound of the true sup over C;
// R is an explicit knob, not a hidden constant.
// ---------------------------------------------------------------------------

inline double aq_distance(const std::function<Cplx(Cplx)>& f, const std::function<Cplx(Cplx)>& g,
                          double B, double q, double R = 40.0, int samples = 128) {
    if (!(B >= 0.0)) throw std::invalid_argument("aq_distance: B must be >= 0");
    if (!(q > 0.0 && q < 2.0)) throw std::invalid_argument("aq_distance: q must lie in (0,2)");
    if (!(R > 0.0) || samples <= 0) throw std::invalid_argument("aq_distance: R, samples must be > 0");
    double sup = 0.0;
    for (int ir = 0; ir <= samples; ++ir) {
        const double r = R * ir / samples;
        const double weight = std::exp(-B * std::pow(r, q));
        if (weight == 0.0) continue;
        const int nth = ir == 0 ? 1 : samples;
        for (int it = 0; it < nth; ++it) {
            const Cplx z = std::polar(r, 2.0 * kPi * it / nth);
            sup = std::max(sup, std::abs(f(z) - g(z)) * weight);
        }
    }
    return sup;
}

// ---------------------------------------------------------------------------
// Supershift family: phi_kappa plus the band of admissible frequencies and a
// target outside it. members(n) yields the (C_l, kappa_l) of F_n; stable_f_n
// evaluates F_n without forming the ill-conditioned sum. When the evolved
// family has a closed form (free plane waves), analytic_evolution supplies
// it for machine-accurate linear-combination cross-checks.
// ---------------------------------------------------------------------------

struct SupershiftFamily {
    std::function<Cplx(Cplx kappa, Cplx z)> phi;
    std::function<GrowthBound(Cplx kappa)> bound_of;
    double band = 1.0;          // admissible set U = [-band, band]
    double target_kappa = 0.0;  // kappa outside U
    std::function<std::vector<std::pair<Cplx, double>>(int n)> members;
    std::function<Cplx(int n, Cplx z)> stable_f_n;
    // Optional closed-form evolution of a member, in long double: linear
    // combinations weighted by C_l ~ |k|^n only stay meaningful when the
    // member values carry sub-double rounding.
    std::function<std::complex<long double>(double t, double x, double kappa)> analytic_evolution;
};

/// Plane-wave family: phi_kappa(z) = e^{i kappa z}, U = [-k0, k0],
/// F_n(z) = (standard superoscillation scaled to the band), target |kappa| > k0.
inline SupershiftFamily build_supershift_plane_waves(double k0, double kappa) {
    if (!(k0 > 0.0)) throw std::invalid_argument("build_supershift_plane_waves: k0 must be > 0");
    if (!(std::abs(kappa) > k0))
        throw std::invalid_argument("build_supershift_plane_waves: |kappa| <= k0 is not a supershift target");
    SupershiftFamily fam;
    fam.band = k0;
    fam.target_kappa = kappa;
    fam.phi = [](Cplx kp, Cplx z) { return std::exp(Cplx(0.0, 1.0) * kp * z); };
    fam.bound_of = [](Cplx kp) { return GrowthBound(1.0, std::abs(kp), 1.0); };
    const double k_ratio = kappa / k0;
    fam.members = [k0, k_ratio](int n) {
        const SuperoscillatingSequence s = build_superosc(n, k_ratio);
        std::vector<std::pair<Cplx, double>> out;
        out.reserve(s.coefficients.size());
        for (std::size_t j = 0; j < s.coefficients.size(); ++j)
            out.emplace_back(Cplx(s.coefficients[j], 0.0), k0 * s.frequencies[j]);
        return out;
    };
    fam.stable_f_n = [k0, k_ratio](int n, Cplx z) {
        const SuperoscillatingSequence s = build_superosc(n, k_ratio);
        return detail::eval_product(s, k0 * z);
    };
    return fam;
}

/// The same family with the known free evolution e^{i kappa x - i kappa^2 t}
/// attached (for cross-checks against the exactly solvable baseline).
inline SupershiftFamily build_supershift_plane_waves_free(double k0, double kappa) {
    SupershiftFamily fam = build_supershift_plane_waves(k0, kappa);
    fam.analytic_evolution = [](double t, double x, double kp) {
        const long double phase = static_cast<long double>(kp) * x -
                                  static_cast<long double>(kp) * kp * t;
        return std::complex<long double>(std::cos(phase), std::sin(phase));
    };
    return fam;
}

} // namespace schro::superosc
