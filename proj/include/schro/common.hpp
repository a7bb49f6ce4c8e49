#pragma once

// Shared scalar types, growth bounds and error categories used across the
// library. Everything here is header-only and allocation-free.

#include <complex>
#include <cmath>
#include <cstdint>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace schro {

using Cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// sqrt(i*t) with the principal branch, t > 0: e^{i pi/4} sqrt(t).
inline Cplx sqrt_it(double t) {
    const double r = std::sqrt(t);
    const double c = std::sqrt(0.5);
    return Cplx(r * c, r * c);
}

// 1/sqrt(i*pi) = e^{-i pi/4}/sqrt(pi).
inline Cplx inv_sqrt_i_pi() {
    const double r = 1.0 / std::sqrt(kPi);
    const double c = std::sqrt(0.5);
    return Cplx(r * c, -r * c);
}

// i^{p} with the principal branch, complex exponent p.
inline Cplx i_pow(Cplx p) {
    // i^p = e^{i pi p / 2}
    return std::exp(Cplx(0.0, 1.0) * (kPi / 2.0) * p);
}

inline bool is_finite(Cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Exponential-growth descriptor |f(z)| <= A e^{B |z|^p}.  The order p must
/// stay strictly below 2, otherwise the quadratic Fresnel damping cannot
/// dominate the integrand.
struct GrowthBound {
    double A = 1.0;
    double B = 0.0;
    double p = 1.0;

    GrowthBound() = default;
    GrowthBound(double A_, double B_, double p_) : A(A_), B(B_), p(p_) {
        if (!(A >= 0.0) || !(B >= 0.0))
            throw std::invalid_argument("GrowthBound: A, B must be >= 0");
        if (!(p > 0.0 && p < 2.0))
            throw std::invalid_argument("GrowthBound: order p must lie in (0,2)");
    }

    double envelope(double r) const { return A * std::exp(B * std::pow(r, p)); }

    // Combined bound for a product f*g, following the estimate
    // A_f A_g e^{(B_f+B_g) 2^{max(p_f,p_g)} (1 + |z|^{max(p_f,p_g)})}.
    static GrowthBound product(const GrowthBound& f, const GrowthBound& g) {
        const double pt = std::max(f.p, g.p);
        const double scale = std::pow(2.0, pt);
        const double Bt = (f.B + g.B) * scale;
        const double At = f.A * g.A * std::exp((f.B + g.B) * scale);
        return GrowthBound(At, Bt, pt);
    }
};

/// Thrown when an adaptive quadrature could not reach the requested
/// tolerance. Carries the best estimate and its error bound so callers can
/// degrade gracefully.
class AccuracyError : public std::runtime_error {
  public:
    AccuracyError(const std::string& what, Cplx best, double bound)
        : std::runtime_error(what), best_estimate_(best), error_bound_(bound) {}
    Cplx best_estimate() const { return best_estimate_; }
    double error_bound() const { return error_bound_; }

  private:
    Cplx best_estimate_;
    double error_bound_;
};

/// Thrown when an operation is requested on a variant that cannot support it
/// (e.g. derivative boundary traces of the centrifugal propagator, whose
/// x-derivative coefficients blow up at the origin).
class CapabilityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Deterministic pairwise summation; the result does not depend on the order
// in which the entries were produced.
inline Cplx pairwise_sum(const std::vector<Cplx>& v, std::size_t lo, std::size_t hi) {
    const std::size_t n = hi - lo;
    if (n == 0) return Cplx(0.0, 0.0);
    if (n <= 8) {
        Cplx s(0.0, 0.0);
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    const std::size_t mid = lo + n / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

inline Cplx pairwise_sum(const std::vector<Cplx>& v) { return pairwise_sum(v, 0, v.size()); }

// Runs fn(i) for i in [0, n) on up to `threads` workers. Results must be
// written to pre-sized per-index slots by the callee; this keeps the output
// deterministic regardless of scheduling.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                         unsigned threads = 0) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (n == 0) return;
    if (threads == 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    std::vector<std::thread> pool;
    pool.reserve(threads);
    std::exception_ptr first_error;
    std::mutex err_mutex;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < n; i += threads) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace schro
