#pragma once

// Wave-function evolution by the rotated-contour representation
//
//   Psi(t,x) = lim_{eps->0} \int e^{-eps y^2} G(t,x,y) F(y) dy,
//
// realized as an absolutely convergent contour integral. The contour is
// split into a left ray anchored at -x0, a real segment [-x0, x0] and a
// right ray anchored at +x0 with x0 > |x|; on the rays the Gaussian factor
// decays monotonically from the anchor, so no piece suffers the envelope
// blow-up a single rotated line anchored at the origin exhibits for large
// a(t) |x|. For kernels that vanish on the opposite half-line (centrifugal)
// only the matching pieces are kept, and kernels with a jump across
// Re z = 0 (point interaction) get the segment split at the origin.

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "schro/common.hpp"
#include "schro/greens.hpp"
#include "schro/quadrature.hpp"
#include "schro/superosc.hpp"

namespace schro::evolution {

using greens::GreensFunctionSpec;
using greens::Variant;
using quadrature::QuadratureConfig;
using quadrature::SectorSpec;
using superosc::SupershiftFamily;

struct EvolutionProblem {
    GreensFunctionSpec green;
    std::function<Cplx(Cplx)> initial;
    GrowthBound initial_bound;
    double theta = kPi / 4.0;
    QuadratureConfig cfg;

    EvolutionProblem(GreensFunctionSpec g, std::function<Cplx(Cplx)> f, GrowthBound b,
                     double theta_ = kPi / 4.0, QuadratureConfig c = {})
        : green(std::move(g)), initial(std::move(f)), initial_bound(b), theta(theta_), cfg(c) {
        if (!(theta > 0.0 && theta < kPi / 2.0))
            throw std::invalid_argument("EvolutionProblem: theta must lie in (0, pi/2)");
        // GrowthBound construction enforces q < 2 already.
    }
};

struct EvolveResult {
    Cplx psi{0.0, 0.0};
    bool converged = false;
    double error_bound = 0.0;
    long nodes_used = 0;
};

struct WaveField {
    std::vector<double> t_grid;
    std::vector<double> x_grid;
    std::vector<Cplx> values;     // row-major, t-major then x
    std::vector<bool> converged;  // per cell
    std::string meta;

    Cplx at(std::size_t it, std::size_t ix) const { return values[it * x_grid.size() + ix]; }
    bool ok(std::size_t it, std::size_t ix) const { return converged[it * x_grid.size() + ix]; }
};

namespace detail {

// Combined integrand bound per the product estimate used throughout:
// |Gtilde F| <= A0 A e^{(B0+B) 2^{pt} (1 + |z|^{pt})}.
inline GrowthBound combined_bound(const GreensFunctionSpec& g, double t, double x,
                                  const GrowthBound& fb, bool derivative = false) {
    const auto gc = greens::growth_coefficients(g, t, x);
    const GrowthBound gtilde_bound(derivative ? std::max(gc.A1, 1e-300) : std::max(gc.A0, 1e-300),
                                   derivative ? gc.B1 : gc.B0, gc.p);
    return GrowthBound::product(gtilde_bound, fb);
}

struct PieceSum {
    Cplx value{0.0, 0.0};
    double err = 0.0;
    bool converged = true;
    long nodes = 0;

    void add(const quadrature::IntegralResult& r) {
        value += r.value;
        err += r.error_bound;
        converged = converged && r.converged;
        nodes += r.nodes_used;
    }
};

// Core three-piece contour evaluation of
//   e^{i th} \int G(t,x,z(y)) W(z(y)) dy
// for an integrand W(z) = Gtilde-like(z) * F(z) given by `w`.
inline EvolveResult contour_integral(const EvolutionProblem& prob, double t, double x,
                                     const std::function<Cplx(Cplx)>& w,
                                     const GrowthBound& wb) {
    const double a = 1.0 / (4.0 * t);
    const SectorSpec sector(prob.theta, SectorSpec::Side::Both);
    // Anchor outside |x| far enough that the rays decay from y = 0 on:
    // the ray linear rate 2 a sin(th)(x0 - |x|) must beat the growth rate B.
    const double margin =
        std::max({1.0 / std::sqrt(a), (wb.B + 1.0) / (2.0 * a * std::sin(prob.theta)), 0.25});
    const double x0 = std::abs(x) + margin;

    PieceSum sum;
    const quadrature::RotatedIntegrand ri(w, wb, a, x);
    const bool centrifugal = prob.green.centrifugal_like();
    const bool split_at_zero = prob.green.variant() == Variant::PointInteraction;

    if (centrifugal) {
        // Theta-support: only the half-line matching sgn(x) contributes. The
        // kernel behaves like a fractional power of y at the origin, so the
        // segment is graded towards it.
        if (x > 0.0) {
            sum.add(quadrature::real_segment_result(ri, 0.0, x0, prob.cfg, -1));
            sum.add(quadrature::shifted_halfline_result(ri, x0, sector, prob.cfg));
        } else {
            sum.add(quadrature::real_segment_result(ri, -x0, 0.0, prob.cfg, +1));
            sum.add(quadrature::shifted_halfline_left_result(ri, -x0, sector, prob.cfg));
        }
    } else {
        if (split_at_zero) {
            sum.add(quadrature::real_segment_result(ri, -x0, 0.0, prob.cfg));
            sum.add(quadrature::real_segment_result(ri, 0.0, x0, prob.cfg));
        } else {
            sum.add(quadrature::real_segment_result(ri, -x0, x0, prob.cfg));
        }
        sum.add(quadrature::shifted_halfline_left_result(ri, -x0, sector, prob.cfg));
        sum.add(quadrature::shifted_halfline_result(ri, x0, sector, prob.cfg));
    }
    EvolveResult res;
    res.psi = sum.value;
    res.converged = sum.converged;
    res.error_bound = sum.err;
    res.nodes_used = sum.nodes;
    return res;
}

} // namespace detail

/// Psi(t, x). Throws AccuracyError when the quadrature could not converge;
/// evolve_result never throws for accuracy reasons and carries diagnostics.
inline EvolveResult evolve_result(const EvolutionProblem& prob, double t, double x) {
    if (!(t > 0.0)) throw std::domain_error("evolve: t must be > 0");
    if (x == 0.0) throw std::domain_error("evolve: x must be nonzero");
    const auto w = [&prob, t, x](Cplx z) {
        return greens::eval_green(prob.green, t, x, z).gtilde * prob.initial(z);
    };
    const GrowthBound wb = detail::combined_bound(prob.green, t, x, prob.initial_bound);
    return detail::contour_integral(prob, t, x, w, wb);
}

inline Cplx evolve(const EvolutionProblem& prob, double t, double x) {
    const EvolveResult r = evolve_result(prob, t, x);
    if (!r.converged)
        throw AccuracyError("evolve: quadrature did not converge", r.psi, r.error_bound);
    return r.psi;
}

/// d/dx Psi(t, x), differentiating under the integral with the analytic
/// d_x Gtilde: d_x G = e^{i a (z-x)^2} (d_x Gtilde - 2 i a (z - x) Gtilde).
inline EvolveResult evolve_dx_result(const EvolutionProblem& prob, double t, double x) {
    if (!(t > 0.0)) throw std::domain_error("evolve_dx: t must be > 0");
    if (x == 0.0) throw std::domain_error("evolve_dx: x must be nonzero");
    const double a = 1.0 / (4.0 * t);
    const auto w = [&prob, t, x, a](Cplx z) {
        const auto g = greens::eval_green(prob.green, t, x, z);
        return (g.gtilde_dx - Cplx(0.0, 2.0 * a) * (z - Cplx(x, 0.0)) * g.gtilde) * prob.initial(z);
    };
    // Envelope: the 2a(z - x) factor adds linear growth; fold it in through
    // the derivative coefficients plus an |z| <= e^{|z|-1} style absorption.
    GrowthBound base = detail::combined_bound(prob.green, t, x, prob.initial_bound, true);
    const GrowthBound gt = detail::combined_bound(prob.green, t, x, prob.initial_bound, false);
    const double lin = 2.0 * a * (1.0 + std::abs(x));
    // |z - x| is absorbed as |z| <= e^{|z|-1}, which needs p >= 1 in the
    // certificate; the envelope only steers truncation, so conservative is fine.
    GrowthBound wb(base.A + lin * gt.A * std::exp(1.0), std::max(base.B, gt.B + 1.0),
                   std::max({base.p, gt.p, 1.0}));
    return detail::contour_integral(prob, t, x, w, wb);
}

inline Cplx evolve_dx(const EvolutionProblem& prob, double t, double x) {
    const EvolveResult r = evolve_dx_result(prob, t, x);
    if (!r.converged)
        throw AccuracyError("evolve_dx: quadrature did not converge", r.psi, r.error_bound);
    return r.psi;
}

/// Grid sweep; cells are independent and evaluated in parallel, per-cell
/// convergence flags instead of global aborts.
inline WaveField evolve_grid(const EvolutionProblem& prob, const std::vector<double>& t_grid,
                             const std::vector<double>& x_grid, unsigned threads = 0) {
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] > t_grid[i - 1])) throw std::invalid_argument("evolve_grid: t grid not sorted");
    for (std::size_t i = 1; i < x_grid.size(); ++i)
        if (!(x_grid[i] > x_grid[i - 1])) throw std::invalid_argument("evolve_grid: x grid not sorted");
    for (double tv : t_grid)
        if (!(tv > 0.0)) throw std::invalid_argument("evolve_grid: t must be > 0");
    for (double xv : x_grid)
        if (xv == 0.0) throw std::invalid_argument("evolve_grid: x = 0 excluded");
    WaveField wf;
    wf.t_grid = t_grid;
    wf.x_grid = x_grid;
    {
        char meta[160];
        std::snprintf(meta, sizeof(meta),
                      "variant=%d theta=%.6g rel_tol=%.3g nt=%zu nx=%zu",
                      static_cast<int>(prob.green.variant()), prob.theta, prob.cfg.rel_tol,
                      t_grid.size(), x_grid.size());
        wf.meta = meta;
    }
    wf.values.assign(t_grid.size() * x_grid.size(), Cplx(0.0, 0.0));
    wf.converged.assign(t_grid.size() * x_grid.size(), false);
    parallel_for(wf.values.size(), [&](std::size_t idx) {
        const std::size_t it = idx / x_grid.size();
        const std::size_t ix = idx % x_grid.size();
        const EvolveResult r = evolve_result(prob, t_grid[it], x_grid[ix]);
        wf.values[idx] = r.psi;
        wf.converged[idx] = r.converged;
    }, threads);
    return wf;
}

// ---------------------------------------------------------------------------
// Boundary traces at x = 0+-, realized at +-delta_b with one Richardson step
// (the kernels are smooth up to the boundary from each side).
// ---------------------------------------------------------------------------

struct BoundaryTrace {
    Cplx psi_plus, psi_minus, dpsi_plus, dpsi_minus;
};

inline constexpr double kBoundaryDelta = 1e-7;

inline BoundaryTrace boundary_trace(const EvolutionProblem& prob, double t,
                                    bool with_derivatives = true) {
    if (prob.green.centrifugal_like() && with_derivatives)
        throw CapabilityError("boundary_trace: centrifugal derivative coefficients are unbounded "
                              "as x -> 0; request value traces only");
    BoundaryTrace b;
    const auto rich = [&](const std::function<Cplx(double)>& f, double s) {
        return (10.0 * f(s * kBoundaryDelta / 10.0) - f(s * kBoundaryDelta)) / 9.0;
    };
    const auto val = [&](double xx) { return evolve(prob, t, xx); };
    b.psi_plus = rich(val, +1.0);
    b.psi_minus = rich(val, -1.0);
    if (with_derivatives) {
        const auto der = [&](double xx) { return evolve_dx(prob, t, xx); };
        b.dpsi_plus = rich(der, +1.0);
        b.dpsi_minus = rich(der, -1.0);
    } else {
        b.dpsi_plus = b.dpsi_minus = Cplx(0.0, 0.0);
    }
    return b;
}

/// || M (Psi(0+), Psi(0-))^T - N (Psi_x(0+), -Psi_x(0-))^T ||_inf.
inline double transmission_residual(const EvolutionProblem& prob, double t) {
    const auto tc = greens::transmission_matrices(prob.green);
    const BoundaryTrace b = boundary_trace(prob, t);
    const Cplx v0 = tc.M[0][0] * b.psi_plus + tc.M[0][1] * b.psi_minus -
                    (tc.N[0][0] * b.dpsi_plus + tc.N[0][1] * (-b.dpsi_minus));
    const Cplx v1 = tc.M[1][0] * b.psi_plus + tc.M[1][1] * b.psi_minus -
                    (tc.N[1][0] * b.dpsi_plus + tc.N[1][1] * (-b.dpsi_minus));
    return std::max(std::abs(v0), std::abs(v1));
}

// ---------------------------------------------------------------------------
// Scans.
// ---------------------------------------------------------------------------

/// |Psi(t, x) - F(x)| along a decreasing sequence of times.
inline std::vector<double> initial_recovery_scan(const EvolutionProblem& prob, double x,
                                                 const std::vector<double>& t_seq) {
    if (x == 0.0) throw std::domain_error("initial_recovery_scan: x must be nonzero");
    for (std::size_t i = 1; i < t_seq.size(); ++i)
        if (!(t_seq[i] < t_seq[i - 1]))
            throw std::invalid_argument("initial_recovery_scan: t_seq must decrease");
    const Cplx fx = prob.initial(Cplx(x, 0.0));
    std::vector<double> err(t_seq.size());
    parallel_for(t_seq.size(), [&](std::size_t i) {
        err[i] = std::abs(evolve(prob, t_seq[i], x) - fx);
    });
    return err;
}

struct SupershiftRow {
    int n = 0;
    double sup_error = 0.0;          // sup_x |Psi(t,x;F_n) - Psi(t,x;phi_kappa)|
    double linearity_residual = 0.0; // sup_x |direct - sum_l C_l Psi(.;phi_l)|
    double grid_step = 0.0;          // spacing behind the sampled sup, for refinement studies
    bool linearity_checked = false;
    bool converged = true;
};

struct CompactInterval {
    double lo = 0.5, hi = 2.0;
    int samples = 201;
};

/// Supershift persistence scan: for each n, the direct evolution of F_n is
/// compared on the compact against the evolved target, and (for n up to
/// linearity_max_n) against the coefficient-weighted sum of evolved family
/// members. Direct F_n evaluation always goes through the stable form.
inline std::vector<SupershiftRow> supershift_scan(const EvolutionProblem& base,
                                                  const SupershiftFamily& family,
                                                  const std::vector<int>& n_seq, double t,
                                                  const CompactInterval& compact,
                                                  int linearity_max_n = 20) {
    if (!(compact.hi > compact.lo) || compact.samples < 2)
        throw std::invalid_argument("supershift_scan: bad compact interval");
    if (compact.lo <= 0.0 && compact.hi >= 0.0)
        throw std::invalid_argument("supershift_scan: compact interval must exclude 0");
    std::vector<double> xs(static_cast<std::size_t>(compact.samples));
    for (int i = 0; i < compact.samples; ++i)
        xs[static_cast<std::size_t>(i)] =
            compact.lo + (compact.hi - compact.lo) * i / (compact.samples - 1);

    // Evolved target on the compact.
    const Cplx kappa(family.target_kappa, 0.0);
    EvolutionProblem target_prob(base.green,
                                 [&family, kappa](Cplx z) { return family.phi(kappa, z); },
                                 family.bound_of(kappa), base.theta, base.cfg);
    std::vector<Cplx> target(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) { target[i] = evolve(target_prob, t, xs[i]); });

    std::vector<SupershiftRow> rows;
    for (int n : n_seq) {
        SupershiftRow row;
        row.n = n;
        row.grid_step = (compact.hi - compact.lo) / (compact.samples - 1);
        EvolutionProblem fn_prob(base.green,
                                 [&family, n](Cplx z) { return family.stable_f_n(n, z); },
                                 family.bound_of(Cplx(family.band, 0.0)), base.theta, base.cfg);
        std::vector<Cplx> direct(xs.size());
        std::vector<char> ok(xs.size(), 1);
        parallel_for(xs.size(), [&](std::size_t i) {
            const EvolveResult r = evolve_result(fn_prob, t, xs[i]);
            direct[i] = r.psi;
            ok[i] = r.converged ? 1 : 0;
        });
        for (std::size_t i = 0; i < xs.size(); ++i) {
            row.sup_error = std::max(row.sup_error, std::abs(direct[i] - target[i]));
            row.converged = row.converged && ok[i];
        }
        if (n <= linearity_max_n) {
            row.linearity_checked = true;
            using LC = std::complex<long double>;
            const auto members = family.members(n);
            // Evolve each member once per x; closed form in long double when
            // the family has one (the |C_l| ~ |k|^n weights would otherwise
            // amplify member rounding past the identity's resolution).
            std::vector<std::vector<LC>> member_vals(members.size(), std::vector<LC>(xs.size()));
            parallel_for(members.size(), [&](std::size_t l) {
                const double kl = members[l].second;
                if (family.analytic_evolution) {
                    for (std::size_t i = 0; i < xs.size(); ++i)
                        member_vals[l][i] = family.analytic_evolution(t, xs[i], kl);
                } else {
                    const Cplx klc(kl, 0.0);
                    EvolutionProblem mp(base.green,
                                        [&family, klc](Cplx z) { return family.phi(klc, z); },
                                        family.bound_of(klc), base.theta, base.cfg);
                    for (std::size_t i = 0; i < xs.size(); ++i) {
                        const Cplx v = evolve(mp, t, xs[i]);
                        member_vals[l][i] = LC(v.real(), v.imag());
                    }
                }
            });
            // Coefficients rebuilt exactly in long double for the summation.
            for (std::size_t i = 0; i < xs.size(); ++i) {
                LC acc(0.0L, 0.0L);
                for (std::size_t l = 0; l < members.size(); ++l) {
                    const Cplx c = members[l].first;
                    acc += LC(c.real(), c.imag()) * member_vals[l][i];
                }
                const Cplx summed(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
                row.linearity_residual = std::max(row.linearity_residual, std::abs(direct[i] - summed));
            }
        }
        rows.push_back(row);
    }
    return rows;
}

/// Morera-style check: the closed triangle contour integral of
/// kappa -> Psi(t, x; phi_kappa) over the boundary of the triangle
/// (v0, v1, v2), composite Gauss-Legendre with `m` nodes per edge.
inline Cplx kappa_holomorphy_check(const EvolutionProblem& base, const SupershiftFamily& family,
                                   double t, double x, const std::array<Cplx, 3>& triangle,
                                   int m = 24) {
    if (m < 2) throw std::invalid_argument("kappa_holomorphy_check: m >= 2 required");
    const auto psi_of_kappa = [&](Cplx kp) {
        EvolutionProblem p(base.green, [&family, kp](Cplx z) { return family.phi(kp, z); },
                           family.bound_of(kp), base.theta, base.cfg);
        return evolve(p, t, x);
    };
    Cplx total(0.0, 0.0);
    const auto& [gx, gw] = quadrature::detail::gauss_legendre(16);
    for (int e = 0; e < 3; ++e) {
        const Cplx a = triangle[static_cast<std::size_t>(e)];
        const Cplx b = triangle[static_cast<std::size_t>((e + 1) % 3)];
        if (a == b) continue; // degenerate edge contributes nothing
        const int panels = (m + 15) / 16;
        for (int pnl = 0; pnl < panels; ++pnl) {
            const Cplx p0 = a + (b - a) * (static_cast<double>(pnl) / panels);
            const Cplx p1 = a + (b - a) * (static_cast<double>(pnl + 1) / panels);
            const Cplx mid = 0.5 * (p0 + p1), half = 0.5 * (p1 - p0);
            for (std::size_t i = 0; i < gx.size(); ++i)
                total += gw[i] * psi_of_kappa(mid + half * gx[i]) * half;
        }
    }
    return total;
}

/// Central-difference residual of i Psi_t = -Psi_xx + V Psi at (t, x).
inline Cplx psi_schrodinger_residual(const EvolutionProblem& prob, double t, double x, double h_t,
                                     double h_x) {
    if ((x - h_x) * (x + h_x) <= 0.0)
        throw std::domain_error("psi_schrodinger_residual: stencil crosses x = 0");
    if (!(h_t > 0.0 && h_t < t))
        throw std::domain_error("psi_schrodinger_residual: h_t must be in (0, t)");
    const Cplx p0 = evolve(prob, t, x);
    const Cplx ptp = evolve(prob, t + h_t, x);
    const Cplx ptm = evolve(prob, t - h_t, x);
    const Cplx pxp = evolve(prob, t, x + h_x);
    const Cplx pxm = evolve(prob, t, x - h_x);
    const Cplx dt = (ptp - ptm) / (2.0 * h_t);
    const Cplx dxx = (pxp - 2.0 * p0 + pxm) / (h_x * h_x);
    return Cplx(0.0, 1.0) * dt + dxx - prob.green.potential(x) * p0;
}

} // namespace schro::evolution
