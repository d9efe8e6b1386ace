#pragma once

// Double-exponential quadrature for the three integral families that carry
// the whole library: Bose-kernel integrals over (0, inf) against
// 1/(e^{2 pi x} - 1), Laplace transforms with removable singularities at 0,
// and unit-square double integrals with edge singularities.
//
// error_estimate is always the difference between the last two refinement
// levels. It is a heuristic, not a bound.

#include "stieltjes/precision.hpp"

#include <functional>
#include <optional>

namespace stj {

struct QuadratureResult {
    Real value;
    Real error_estimate;
    long nodes_used = 0;
};

using RealFn = std::function<Real(const Real&)>;

// Integrand plus distances to the left and right ends of the interval.
// Near an endpoint the distance is exact where x itself has rounded away.
using EdgeFn = std::function<Real(const Real& x, const Real& from_a, const Real& from_b)>;

enum class Singularity { regular_at_0, removable_at_0, log_growth_at_infinity };

struct Integrand1D {
    RealFn eval;
    Singularity note = Singularity::regular_at_0;
    // Required for removable_at_0: used for x < series_cutoff.
    RealFn series;
    double series_cutoff = 0.25;
    // Sines and cosines against the kernel: kernel route only.
    bool oscillatory = false;
    // Distance from the real axis to the nearest singularity of eval.
    // Sets the panel grading of the direct Bose route.
    double singularity_distance = 1.0;

    Integrand1D() = default;
    Integrand1D(RealFn f) : eval(std::move(f)) {}

    // eval, or the series below the cutoff.
    Real operator()(const Real& x) const;
};

struct Integrand2D {
    std::function<Real(const Real& x, const Real& y)> eval;
    // Optional complement-aware form; gets 1-x and 1-y computed exactly.
    std::function<Real(const Real& x, const Real& y, const Real& cx, const Real& cy)> eval_edges;

    Integrand2D() = default;
    Integrand2D(std::function<Real(const Real&, const Real&)> f) : eval(std::move(f)) {}
};

// Tanh-sinh on [a, b]. tol is absolute, scaled by max(1, |I|).
QuadratureResult tanh_sinh(const EdgeFn& f, const Real& a, const Real& b, const Real& tol,
                           int max_level = 12);
QuadratureResult tanh_sinh(const RealFn& f, const Real& a, const Real& b, const Real& tol,
                           int max_level = 12);

// Exp-sinh on [a, inf). x_max bounds the useful range: the integrand is
// assumed negligible past a + x_max and below a + x_min.
QuadratureResult exp_sinh(const RealFn& f, const Real& a, const Real& tol, double x_min,
                          double x_max, int max_level = 12);

enum class BoseRoute { both, kernel_only, direct_only };

struct BoseOptions {
    BoseRoute route = BoseRoute::both;
    // Tolerance override; defaults to ctx.tolerance() scaled down by the guard.
    std::optional<Real> tol;
    // Number of kernel terms summed one by one before the closed remainder.
    int explicit_terms = 4;
};

// int_0^inf g(x) / (e^{2 pi x} - 1) dx.
//
// Direct route: graded tanh-sinh panels on [0, X] with
// X = (working_digits + 5) ln 10 / (2 pi).
// Kernel route: sum_{n<N} int g e^{-2 pi n x} plus the exactly resummed
// remainder int g e^{-2 pi N x} / (1 - e^{-2 pi x}), each by exp-sinh.
// With route = both the two must agree within 10 * tol.
QuadratureResult integrate_bose(const Integrand1D& g, const PrecisionContext& ctx,
                                const BoseOptions& opt = {});

// 1 / (e^{2 pi x} - 1), with expm1 near 0.
Real bose_kernel(const Real& x);

// int_0^inf e^{-u t} h(t) dt.
QuadratureResult integrate_laplace(const Integrand1D& h, const Real& u, const PrecisionContext& ctx,
                                   std::optional<Real> tol = std::nullopt);

// Iterated tanh-sinh over (0,1)^2 on a common tensor grid, refined level by
// level until two successive levels agree within tol.
QuadratureResult integrate_unit_square(const Integrand2D& F, const PrecisionContext& ctx,
                                       std::optional<Real> tol = std::nullopt);

struct AnalyticSummand {
    RealFn on_real;
    std::function<ExtComplex(const ExtComplex&)> on_complex;
    // Closed form (or analytic continuation) of int_0^inf f; quadrature if unset.
    std::optional<Real> integral;
    // Upper cut for the quadrature of int_0^inf f when it decays algebraically.
    double x_max = 1e60;
    bool oscillatory = false;
};

// Abel-Plana: sum_{k>=0} f(k) = f(0)/2 + int_0^inf f + i int_0^inf [f(ix) - f(-ix)] / (e^{2 pi x} - 1).
// The caller vouches for analyticity and growth in the right half-plane.
QuadratureResult abel_plana_sum(const AnalyticSummand& f, const PrecisionContext& ctx);

} // namespace stj
