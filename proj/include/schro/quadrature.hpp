#pragma once

// Sector-rotated Fresnel quadrature.
//
// The central object is the integral
//
//     e^{i theta} \int e^{i a (anchor + y e^{i theta} - x)^2} f(anchor + y e^{i theta}) dy
//
// over a half-line or the full line. After rotation the quadratic phase
// carries the Gaussian damping e^{-a sin(2 theta) y^2}, so the integrand is
// absolutely integrable whenever f grows no faster than e^{B|z|^p}, p < 2.
// Truncation comes from that explicit envelope; panels are sized so each one
// spans at most pi/2 of local phase, and the per-panel Gauss-Legendre node
// count is doubled until two successive estimates agree.
//
// regularized_real() evaluates the untransformed eps-regularized integral on
// the real line; it exists as the independent cross-check of the rotated
// forms and is deliberately kept free of any contour machinery.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "schro/common.hpp"

namespace schro::quadrature {

struct SectorSpec {
    enum class Side { Positive, Both };
    double theta = kPi / 4.0; // rotation angle, in (0, pi/2)
    Side side = Side::Both;
    double strip_depth = 0.0; // h of the strip domain; informational

    SectorSpec() = default;
    SectorSpec(double theta_, Side side_, double h_ = 0.0)
        : theta(theta_), side(side_), strip_depth(h_) {
        if (!(theta > 0.0 && theta < kPi / 2.0))
            throw std::invalid_argument("SectorSpec: theta must lie in (0, pi/2)");
        if (!(strip_depth >= 0.0))
            throw std::invalid_argument("SectorSpec: strip depth must be >= 0");
    }
};

struct QuadratureConfig {
    double rel_tol = 1e-10;
    int max_nodes = 1 << 20;
    double truncation_safety = 1e-2; // extra envelope margin at the cut

    QuadratureConfig() = default;
    QuadratureConfig(double tol, int nodes, double safety)
        : rel_tol(tol), max_nodes(nodes), truncation_safety(safety) {
        validate();
    }
    void validate() const {
        if (!(rel_tol >= 1e-14)) throw std::invalid_argument("QuadratureConfig: rel_tol >= 1e-14 required");
        if (!(max_nodes > 0 && max_nodes <= (1 << 22)))
            throw std::invalid_argument("QuadratureConfig: max_nodes must be in (0, 2^22]");
        if (!(truncation_safety > 0.0))
            throw std::invalid_argument("QuadratureConfig: truncation_safety must be > 0");
    }
};

/// f together with its growth certificate and the quadratic phase data
/// (strength a > 0, centre x).
struct RotatedIntegrand {
    std::function<Cplx(Cplx)> f;
    GrowthBound bound;
    double a = 1.0;
    double x = 0.0;

    RotatedIntegrand(std::function<Cplx(Cplx)> f_, GrowthBound b, double a_, double x_)
        : f(std::move(f_)), bound(b), a(a_), x(x_) {
        if (!(a > 0.0)) throw std::invalid_argument("RotatedIntegrand: phase strength a must be > 0");
        // GrowthBound's own constructor already rejects p >= 2.
    }
};

struct IntegralResult {
    Cplx value{0.0, 0.0};
    double error_bound = 0.0;
    bool converged = false;
    long nodes_used = 0;
};

namespace detail {

// Gauss-Legendre nodes/weights on [-1,1], cached per order.
inline const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n) {
    static const auto make = [](int m) {
        std::vector<double> x(static_cast<std::size_t>(m)), w(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            double t = std::cos(kPi * (i + 0.75) / (m + 0.5));
            double p0 = 0.0, p1 = 0.0;
            for (int it = 0; it < 100; ++it) {
                p0 = 1.0;
                p1 = 0.0;
                for (int j = 0; j < m; ++j) {
                    const double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1.0);
                }
                const double dp = m * (t * p0 - p1) / (t * t - 1.0);
                const double dt = p0 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-15) break;
            }
            p1 = 0.0;
            p0 = 1.0;
            for (int j = 0; j < m; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1.0);
            }
            const double dp = m * (t * p0 - p1) / (t * t - 1.0);
            x[static_cast<std::size_t>(i)] = -t;
            w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
        return std::make_pair(x, w);
    };
    static const auto g8 = make(8);
    static const auto g16 = make(16);
    static const auto g32 = make(32);
    static const auto g64 = make(64);
    switch (n) {
        case 8: return g8;
        case 16: return g16;
        case 32: return g32;
        default: return g64;
    }
}

// One smooth complex-valued integrand g(y) on [lo, hi] with a prescribed
// local phase rate; panels sized to <= pi/2 phase each, node doubling
// 8 -> 16 -> 32 -> 64, then panel splitting if still not converged.
struct PanelIntegrator {
    std::function<Cplx(double)> g;
    std::function<double(double)> phase_rate; // |d phase / dy|, >= 0

    IntegralResult run(double lo, double hi, const QuadratureConfig& cfg) const {
        IntegralResult res;
        if (!(hi > lo)) {
            res.converged = true;
            return res;
        }
        // Panel boundaries from the phase budget. The rate is V-shaped around
        // the stationary point, so a trial width from the left edge is
        // re-checked against the rate at the right edge.
        std::vector<double> cuts;
        cuts.push_back(lo);
        double y = lo;
        const double min_w = (hi - lo) * 1e-9;
        while (y < hi) {
            const double remaining = hi - y;
            const double r0 = std::max(phase_rate(y), 1e-12);
            double h = std::min(kPi / 2.0 / r0, remaining);
            const double r1 = std::max(r0, phase_rate(std::min(y + h, hi)));
            h = std::min(kPi / 2.0 / r1, remaining);
            h = std::max(h, min_w);
            y = std::min(y + h, hi);
            cuts.push_back(y);
        }
        const auto panels_value = [&](int order, long& nodes) {
            const auto& [gx, gw] = gauss_legendre(order);
            std::vector<Cplx> vals(cuts.size() - 1);
            double l1 = 0.0;
            for (std::size_t pnl = 0; pnl + 1 < cuts.size(); ++pnl) {
                const double a0 = cuts[pnl], b0 = cuts[pnl + 1];
                const double mid = 0.5 * (a0 + b0), half = 0.5 * (b0 - a0);
                Cplx acc(0.0, 0.0);
                for (std::size_t i = 0; i < gx.size(); ++i) {
                    acc += gw[i] * g(mid + half * gx[i]);
                }
                vals[pnl] = acc * half;
                l1 += std::abs(vals[pnl]);
                nodes += static_cast<long>(gx.size());
            }
            return std::make_pair(pairwise_sum(vals), l1);
        };
        Cplx prev(0.0, 0.0);
        double l1 = 0.0;
        bool have_prev = false;
        for (int order : {8, 16, 32, 64}) {
            if (res.nodes_used > cfg.max_nodes) break;
            auto [val, l1v] = panels_value(order, res.nodes_used);
            if (!is_finite(val)) { // integrand overflow; keep the last finite estimate
                res.converged = false;
                break;
            }
            l1 = l1v;
            if (have_prev) {
                const double diff = std::abs(val - prev);
                const double scale = std::max(std::abs(val), 1e-2 * l1) + 1e-300;
                res.value = val;
                res.error_bound = diff;
                if (diff <= cfg.rel_tol * scale) {
                    res.converged = true;
                    return res;
                }
            } else {
                res.value = val;
            }
            prev = val;
            have_prev = true;
        }
        res.error_bound = std::max(res.error_bound, cfg.rel_tol * l1);
        return res;
    }
};

// Envelope of the rotated integrand along z(y) = anchor + y e^{i theta}:
//   |e^{i a (z - x)^2}| = exp(-a sin(2 th) y^2 - 2 a sin(th) (anchor - x) y)
// times the growth certificate of f at |z|.
struct RayGeometry {
    double a, x, anchor, theta;
    GrowthBound bound;
    double dir; // +1: y >= 0 ray, -1: y <= 0 ray

    double log_envelope(double y) const {
        const double s2 = std::sin(2.0 * theta), s1 = std::sin(theta);
        const double r = std::hypot(anchor + y * std::cos(theta), y * s1);
        return -a * s2 * y * y - 2.0 * a * s1 * (anchor - x) * y + bound.B * std::pow(r, bound.p);
    }

    // |y| beyond which the envelope sits below cut relative to its maximum.
    double truncation(double cut) const {
        const double s2 = std::sin(2.0 * theta);
        const double ylim = std::abs(anchor - x) / std::cos(theta) + 4.0 / std::sqrt(a * s2) +
                            std::pow((bound.B + 1.0) / (a * s2), 1.0 / (2.0 - bound.p)) + 4.0;
        double peak = log_envelope(0.0);
        for (int i = 0; i <= 128; ++i)
            peak = std::max(peak, log_envelope(dir * ylim * i / 128.0));
        const double target = peak + std::log(cut);
        double hi = ylim;
        while (log_envelope(dir * hi) > target && hi < 1e9) hi *= 2.0;
        double lo = 0.0;
        for (int i = 0; i < 200 && (hi - lo) > 1e-12 * (1.0 + hi); ++i) {
            const double mid = 0.5 * (lo + hi);
            // keep the largest prefix whose tail envelope exceeds target
            bool above = false;
            for (int j = 0; j <= 8; ++j) {
                if (log_envelope(dir * (mid + j * (hi - mid) / 8.0)) > target) {
                    above = true;
                    break;
                }
            }
            if (above)
                lo = mid;
            else
                hi = mid;
        }
        return hi;
    }

    double phase_rate(double y) const {
        const Cplx z(anchor + y * std::cos(theta), y * std::sin(theta));
        const double osc = 2.0 * a * std::abs(z - Cplx(x, 0.0));
        const double growth = bound.B * bound.p * std::pow(std::max(std::abs(z), 1.0), bound.p - 1.0);
        return osc + growth + 2.0 * a * std::sin(2.0 * theta) * std::abs(y);
    }
};

inline IntegralResult integrate_ray(const RotatedIntegrand& ri, double anchor, double theta,
                                    double dir, const QuadratureConfig& cfg) {
    RayGeometry geo{ri.a, ri.x, anchor, theta, ri.bound, dir};
    const double ystar = geo.truncation(cfg.rel_tol * cfg.truncation_safety);
    const Cplx eith = std::polar(1.0, theta);
    PanelIntegrator pi;
    pi.g = [&, eith](double y) {
        const double yy = dir * y;
        const Cplx z = Cplx(anchor, 0.0) + yy * eith;
        const Cplx d = z - Cplx(ri.x, 0.0);
        const Cplx iph = Cplx(0.0, ri.a) * d * d;
        // The certified product |e^{ia(z-x)^2} f(z)| can be representable while
        // f alone overflows; skip the tail the certificate proves negligible.
        if (iph.real() + ri.bound.B * std::pow(std::abs(z), ri.bound.p) +
                std::log(ri.bound.A + 1e-300) < -745.0)
            return Cplx(0.0, 0.0);
        return std::exp(iph) * ri.f(z);
    };
    pi.phase_rate = [&](double y) { return geo.phase_rate(dir * y); };
    IntegralResult r = pi.run(0.0, ystar, cfg);
    // Substituting u = -y on the left ray flips both limits and du, so both
    // orientations carry the same +e^{i theta} factor.
    r.value *= eith;
    return r;
}

inline void merge(IntegralResult& into, const IntegralResult& piece) {
    into.value += piece.value;
    into.error_bound += piece.error_bound;
    into.converged = into.converged && piece.converged;
    into.nodes_used += piece.nodes_used;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Public operations. Each returns the integral value; throws AccuracyError
// if the node budget was exhausted before two estimates agreed. The *_result
// variants expose diagnostics without throwing.
// ---------------------------------------------------------------------------

/// e^{i th} \int_0^inf e^{i a (y e^{i th} - x)^2} f(y e^{i th}) dy.
inline IntegralResult fresnel_halfline_result(const RotatedIntegrand& ri,
                                                      const SectorSpec& s,
                                                      const QuadratureConfig& cfg) {
    cfg.validate();
    return detail::integrate_ray(ri, 0.0, s.theta, +1.0, cfg);
}

/// Same with the contour anchored at a real shift x0:
/// e^{i th} \int_0^inf e^{i a (x0 + y e^{i th} - x)^2} f(x0 + y e^{i th}) dy.
inline IntegralResult shifted_halfline_result(const RotatedIntegrand& ri, double x0,
                                                      const SectorSpec& s,
                                                      const QuadratureConfig& cfg) {
    cfg.validate();
    return detail::integrate_ray(ri, x0, s.theta, +1.0, cfg);
}

/// e^{i th} \int_R e^{i a (y e^{i th} - x)^2} f(y e^{i th}) dy (double sector).
inline IntegralResult fresnel_fullline_result(const RotatedIntegrand& ri,
                                                      const SectorSpec& s,
                                                      const QuadratureConfig& cfg) {
    cfg.validate();
    IntegralResult total = detail::integrate_ray(ri, 0.0, s.theta, +1.0, cfg);
    detail::merge(total, detail::integrate_ray(ri, 0.0, s.theta, -1.0, cfg));
    return total;
}

/// Left ray { x0 + y e^{i th} : y <= 0 }, oriented from -inf towards x0.
inline IntegralResult shifted_halfline_left_result(const RotatedIntegrand& ri, double x0,
                                                           const SectorSpec& s,
                                                           const QuadratureConfig& cfg) {
    cfg.validate();
    return detail::integrate_ray(ri, x0, s.theta, -1.0, cfg);
}

namespace detail {

// Runs the panel integrator over geometrically graded sub-intervals
// accumulating towards one endpoint; resolves integrands that are only
// continuous there (fractional powers, log-oscillation).
inline IntegralResult run_graded(const PanelIntegrator& pi, double lo, double hi,
                                 const QuadratureConfig& cfg, int graded_end) {
    if (graded_end == 0) return pi.run(lo, hi, cfg);
    constexpr double ratio = 0.25;
    constexpr int levels = 28; // down to ~1e-17 of the interval length
    IntegralResult total;
    const double len = hi - lo;
    double frac = 1.0;
    double unconverged_err = 0.0;
    for (int i = 0; i < levels && len * frac > 0.0; ++i) {
        const double f1 = frac, f0 = (i == levels - 1) ? 0.0 : frac * ratio;
        const double a0 = graded_end < 0 ? lo + len * f0 : hi - len * f1;
        const double b0 = graded_end < 0 ? lo + len * f1 : hi - len * f0;
        IntegralResult piece = pi.run(a0, b0, cfg);
        total.value += piece.value;
        total.error_bound += piece.error_bound;
        total.nodes_used += piece.nodes_used;
        if (!piece.converged) unconverged_err += piece.error_bound;
        frac = f0;
    }
    // A stubborn sliver (typically the one touching the singular endpoint)
    // is acceptable as long as its error is negligible for the whole value.
    total.converged = unconverged_err <= cfg.rel_tol * (std::abs(total.value) + 1e-300);
    return total;
}

} // namespace detail

/// Oscillatory integral of e^{i a (y-x)^2} f(y) over a real segment
/// [lo, hi]; the middle piece of split contours. graded_end = -1/+1 grades
/// panels geometrically towards lo/hi for endpoint-singular integrands.
inline IntegralResult real_segment_result(const RotatedIntegrand& ri, double lo, double hi,
                                          const QuadratureConfig& cfg, int graded_end = 0) {
    cfg.validate();
    detail::PanelIntegrator pi;
    pi.g = [&](double y) {
        const Cplx d(y - ri.x, 0.0);
        return std::exp(Cplx(0.0, ri.a) * d * d) * ri.f(Cplx(y, 0.0));
    };
    pi.phase_rate = [&](double y) {
        return 2.0 * ri.a * std::abs(y - ri.x) +
               ri.bound.B * ri.bound.p * std::pow(std::max(std::abs(y), 1.0), ri.bound.p - 1.0);
    };
    return detail::run_graded(pi, lo, hi, cfg, graded_end);
}

/// \int e^{-eps (y-y0)^2} e^{i a (y-x)^2} f(y) dy on the real line
/// (half-line for Side::Positive). Requires 0 < eps < 2 a / tan(theta) for
/// the sector it is compared against.
inline IntegralResult regularized_real_result(const RotatedIntegrand& ri, double eps,
                                              double y0, const SectorSpec& s,
                                              const QuadratureConfig& cfg, int graded_end = 0,
                                              const std::vector<double>& breakpoints = {}) {
    cfg.validate();
    if (!(eps > 0.0) || !(eps < 2.0 * ri.a / std::tan(s.theta)))
        throw std::invalid_argument("regularized_real: eps outside (0, 2a/tan(theta))");
    // Truncate where the Gaussian-vs-growth envelope drops below tolerance.
    const double logcut = std::log(cfg.rel_tol * cfg.truncation_safety);
    const auto log_env = [&](double y) {
        return -eps * (y - y0) * (y - y0) + ri.bound.B * std::pow(std::abs(y), ri.bound.p);
    };
    double peak = log_env(y0);
    for (int i = -64; i <= 64; ++i)
        peak = std::max(peak, log_env(y0 + i * std::max(1.0, std::sqrt(1.0 / eps)) / 8.0));
    const auto cut = [&](double dir) {
        double hi = std::max(8.0, std::sqrt(-logcut / eps));
        while (log_env(y0 + dir * hi) > peak + logcut && hi < 1e9) hi *= 2.0;
        return hi;
    };
    double lo = y0 - cut(-1.0), hi = y0 + cut(+1.0);
    if (s.side == SectorSpec::Side::Positive) lo = std::max(lo, 0.0);
    detail::PanelIntegrator pi;
    pi.g = [&](double y) {
        const double dy = y - y0;
        const Cplx d(y - ri.x, 0.0);
        return std::exp(Cplx(-eps * dy * dy, 0.0) + Cplx(0.0, ri.a) * d * d) * ri.f(Cplx(y, 0.0));
    };
    pi.phase_rate = [&](double y) {
        return 2.0 * ri.a * std::abs(y - ri.x) + 2.0 * eps * std::abs(y - y0) +
               ri.bound.B * ri.bound.p * std::pow(std::max(std::abs(y), 1.0), ri.bound.p - 1.0);
    };
    // Kinks of the integrand (e.g. |y| dependence at an interface) must land
    // on panel boundaries, otherwise node doubling stalls.
    std::vector<double> edges = {lo};
    for (double b : breakpoints)
        if (b > lo && b < hi) edges.push_back(b);
    edges.push_back(hi);
    std::sort(edges.begin(), edges.end());
    IntegralResult total;
    total.converged = true;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const IntegralResult piece = detail::run_graded(pi, edges[i], edges[i + 1], cfg, graded_end);
        total.value += piece.value;
        total.error_bound += piece.error_bound;
        total.converged = total.converged && piece.converged;
        total.nodes_used += piece.nodes_used;
    }
    return total;
}

namespace detail {

inline Cplx unwrap(const IntegralResult& r, const char* who) {
    if (!r.converged)
        throw AccuracyError(std::string(who) + ": node budget exhausted before convergence",
                            r.value, r.error_bound);
    return r.value;
}

} // namespace detail

inline Cplx fresnel_halfline(const RotatedIntegrand& ri, const SectorSpec& s,
                             const QuadratureConfig& cfg) {
    return detail::unwrap(fresnel_halfline_result(ri, s, cfg), "fresnel_halfline");
}

inline Cplx fresnel_fullline(const RotatedIntegrand& ri, const SectorSpec& s,
                             const QuadratureConfig& cfg) {
    return detail::unwrap(fresnel_fullline_result(ri, s, cfg), "fresnel_fullline");
}

inline Cplx shifted_halfline(const RotatedIntegrand& ri, double x0, const SectorSpec& s,
                             const QuadratureConfig& cfg) {
    return detail::unwrap(shifted_halfline_result(ri, x0, s, cfg), "shifted_halfline");
}

inline Cplx regularized_real(const RotatedIntegrand& ri, double eps, double y0,
                             const SectorSpec& s, const QuadratureConfig& cfg,
                             int graded_end = 0, const std::vector<double>& breakpoints = {}) {
    return detail::unwrap(regularized_real_result(ri, eps, y0, s, cfg, graded_end, breakpoints),
                          "regularized_real");
}

} // namespace schro::quadrature
