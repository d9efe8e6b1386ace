#include "stieltjes/quadrature.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace stj {

namespace {

constexpr double kHalfPi = 1.5707963267948966;
constexpr double kLn10 = 2.302585092994046;

Real scaled_tol(const Real& tol, const Real& value)
{
    Real m = abs(value);
    return m > 1 ? tol * m : tol;
}

void require_finite(const Real& v, const Real& x)
{
    if (!isfinite(v)) {
        std::ostringstream os;
        os << "integrand not finite at x = " << x.str(12);
        throw DomainError(os.str());
    }
}

// Trapezoid sums of a DE-transformed integrand over t in [t_lo, t_hi],
// halving the step until two levels agree. node(t) returns w(t) f(x(t)).
template <class Node>
QuadratureResult de_levels(const Node& node, double t_lo, double t_hi, const Real& tol,
                           int max_level)
{
    const double h0 = 0.5;
    Real raw = 0;
    long count = 0;
    for (long j = static_cast<long>(std::ceil(t_lo / h0)); j * h0 <= t_hi; ++j) {
        raw += node(Real(j * h0));
        ++count;
    }
    Real prev = raw * Real(h0);
    Real diff = 0;
    for (int level = 1; level <= max_level; ++level) {
        const double h = h0 / std::ldexp(1.0, level);
        long first = static_cast<long>(std::ceil(t_lo / h));
        if (first % 2 == 0)
            ++first;
        for (long j = first; j * h <= t_hi; j += 2) {
            raw += node(Real(j) * Real(h));
            ++count;
        }
        Real cur = raw * Real(h);
        diff = abs(cur - prev);
        if (level >= 2 && diff <= scaled_tol(tol, cur))
            return {cur, diff, count};
        prev = cur;
    }
    std::ostringstream os;
    os << "double-exponential rule stalled at level " << max_level << ", last difference "
       << diff.str(6);
    throw NonConvergence(os.str());
}

// Node of the tanh-sinh rule on [a, b] in terms of q = exp(-2|v|),
// v = (pi/2) sinh t; keeps the short distance to the nearer end exact.
struct TanhSinhNode {
    Real x, from_a, from_b, weight;
};

TanhSinhNode tanh_sinh_node(const Real& t, const Real& a, const Real& b)
{
    Real half_pi = pi() / 2;
    Real v = half_pi * sinh(t);
    Real q = exp(-2 * abs(v));
    Real len = b - a;
    Real near = len * q / (1 + q);
    Real far = len / (1 + q);
    Real w = len / 2 * half_pi * cosh(t) * 4 * q / ((1 + q) * (1 + q));
    if (t < 0)
        return {a + near, near, far, w};
    return {b - near, far, near, w};
}

double tanh_sinh_tmax(double log10_qmin)
{
    double v = -log10_qmin * kLn10 / 2;
    return std::asinh(v / kHalfPi);
}

QuadratureResult tanh_sinh_impl(const EdgeFn& f, const Real& a, const Real& b, const Real& tol,
                                int max_level, double log10_qmin)
{
    double tm = tanh_sinh_tmax(log10_qmin);
    auto node = [&](const Real& t) {
        TanhSinhNode n = tanh_sinh_node(t, a, b);
        Real v = f(n.x, n.from_a, n.from_b);
        require_finite(v, n.x);
        return n.weight * v;
    };
    return de_levels(node, -tm, tm, tol, max_level);
}

} // namespace

QuadratureResult tanh_sinh(const EdgeFn& f, const Real& a, const Real& b, const Real& tol,
                           int max_level)
{
    return tanh_sinh_impl(f, a, b, tol, max_level, -1.5 * current_digits() - 10);
}

QuadratureResult tanh_sinh(const RealFn& f, const Real& a, const Real& b, const Real& tol,
                           int max_level)
{
    // Without complements x must stay distinguishable from the endpoints.
    Real scale = std::max(Real(abs(a)), Real(abs(b)));
    double lscale = scale > 0 ? std::log10(scale.convert_to<double>()) : 0.0;
    double width = std::log10((b - a).convert_to<double>());
    double qmin = -(current_digits() - 3) + std::max(lscale, 0.0) - width;
    EdgeFn g = [&f](const Real& x, const Real&, const Real&) { return f(x); };
    return tanh_sinh_impl(g, a, b, tol, max_level, qmin);
}

QuadratureResult exp_sinh(const RealFn& f, const Real& a, const Real& tol, double x_min,
                          double x_max, int max_level)
{
    double t_lo = std::asinh(std::log(x_min) / kHalfPi);
    double t_hi = std::asinh(std::log(x_max) / kHalfPi);
    auto node = [&](const Real& t) {
        Real half_pi = pi() / 2;
        Real c = half_pi * sinh(t);
        Real e = exp(c);
        Real x = a + e;
        Real v = f(x);
        require_finite(v, x);
        return half_pi * cosh(t) * e * v;
    };
    return de_levels(node, t_lo, t_hi, tol, max_level);
}

Real Integrand1D::operator()(const Real& x) const
{
    if (note == Singularity::removable_at_0) {
        if (!series)
            throw DomainError("removable_at_0 integrand without a series evaluator");
        if (x < series_cutoff)
            return series(x);
    }
    return eval(x);
}

Real bose_kernel(const Real& x)
{
    Real z = 2 * pi() * x;
    return 1 / expm1(z);
}

namespace {

QuadratureResult bose_direct(const Integrand1D& g, const Real& tol)
{
    const int wd = current_digits();
    Real X = Real(wd + 5) * log(Real(10)) / (2 * pi());
    std::vector<Real> cuts{Real(0)};
    double c = std::min(g.singularity_distance, 1.0) / 2;
    for (double p = c; p < 1; p *= 2)
        cuts.emplace_back(p);
    for (double p : {1.0, 2.0, 3.0, 4.0, 6.0, 8.0, 12.0})
        if (p < X)
            cuts.emplace_back(p);
    cuts.push_back(X);

    Real panel_tol = tol / Real(cuts.size());
    QuadratureResult total{Real(0), Real(0), 0};
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        RealFn f = [&g](const Real& x) { return g(x) * bose_kernel(x); };
        QuadratureResult r = tanh_sinh(f, cuts[i], cuts[i + 1], panel_tol);
        total.value += r.value;
        total.error_estimate += r.error_estimate;
        total.nodes_used += r.nodes_used;
    }
    return total;
}

QuadratureResult bose_kernel_route(const Integrand1D& g, const Real& tol, int explicit_terms)
{
    const int wd = current_digits();
    const double x_min = std::pow(10.0, -(wd + 5));
    const int N = explicit_terms + 1;
    Real two_pi = 2 * pi();
    Real part_tol = tol / Real(N);
    QuadratureResult total{Real(0), Real(0), 0};
    auto add = [&](const QuadratureResult& r) {
        total.value += r.value;
        total.error_estimate += r.error_estimate;
        total.nodes_used += r.nodes_used;
    };
    for (int n = 1; n < N; ++n) {
        Real rate = two_pi * n;
        RealFn f = [&g, rate](const Real& x) { return g(x) * exp(-rate * x); };
        double x_max = (wd + 10) * kLn10 / (2 * kHalfPi * 2 * n) + 5;
        add(exp_sinh(f, Real(0), part_tol, x_min, x_max));
    }
    // sum_{n>=N} e^{-2 pi n x} = e^{-2 pi (N-1) x} / (e^{2 pi x} - 1)
    Real rate = two_pi * (N - 1);
    RealFn f = [&g, rate](const Real& x) { return g(x) * exp(-rate * x) * bose_kernel(x); };
    double x_max = (wd + 10) * kLn10 / (2 * kHalfPi * 2 * N) + 5;
    add(exp_sinh(f, Real(0), part_tol, x_min, x_max));
    return total;
}

} // namespace

QuadratureResult integrate_bose(const Integrand1D& g, const PrecisionContext& ctx,
                                const BoseOptions& opt)
{
    PrecisionScope scope(ctx);
    Real tol = opt.tol ? *opt.tol : ctx.tolerance();
    BoseRoute route = g.oscillatory ? BoseRoute::kernel_only : opt.route;

    if (route == BoseRoute::kernel_only)
        return bose_kernel_route(g, tol, opt.explicit_terms);
    if (route == BoseRoute::direct_only)
        return bose_direct(g, tol);

    QuadratureResult d = bose_direct(g, tol);
    QuadratureResult k = bose_kernel_route(g, tol, opt.explicit_terms);
    Real gap = abs(d.value - k.value);
    if (gap > 10 * scaled_tol(tol, d.value)) {
        std::ostringstream os;
        os << "Bose integral routes disagree: direct " << d.value.str(25) << ", kernel "
           << k.value.str(25);
        throw RouteDisagreement(os.str());
    }
    return {d.value, std::max(std::max(d.error_estimate, k.error_estimate), gap),
            d.nodes_used + k.nodes_used};
}

QuadratureResult integrate_laplace(const Integrand1D& h, const Real& u, const PrecisionContext& ctx,
                                   std::optional<Real> tol)
{
    PrecisionScope scope(ctx);
    if (!(u > 0))
        throw DomainError("integrate_laplace: u must be positive");
    Real t = tol ? *tol : ctx.tolerance();
    const int wd = ctx.working_digits;
    double ud = u.convert_to<double>();
    double x_min = std::pow(10.0, -(wd + 5));
    double x_max = (wd + 10) * kLn10 / ud * 1.2 + 10 / ud;
    RealFn f = [&h, &u](const Real& x) { return exp(-u * x) * h(x); };
    return exp_sinh(f, Real(0), t, x_min, x_max);
}

QuadratureResult integrate_unit_square(const Integrand2D& F, const PrecisionContext& ctx,
                                       std::optional<Real> tol)
{
    PrecisionScope scope(ctx);
    Real t = tol ? *tol : ctx.tolerance();
    if (!F.eval && !F.eval_edges)
        throw DomainError("integrate_unit_square: empty integrand");
    auto value = [&F](const TanhSinhNode& p, const TanhSinhNode& q) {
        if (F.eval_edges)
            return F.eval_edges(p.x, q.x, p.from_b, q.from_b);
        return F.eval(p.x, q.x);
    };

    const double tm = tanh_sinh_tmax(-ctx.working_digits - 5.0);
    const double h0 = 0.5;
    const int max_level = 7;
    const Real zero(0), one(1);

    std::vector<TanhSinhNode> nodes;
    auto add_level_nodes = [&](int level) {
        const double h = h0 / std::ldexp(1.0, level);
        std::vector<TanhSinhNode> fresh;
        long first = static_cast<long>(std::ceil(-tm / h));
        for (long j = first; j * h <= tm; ++j) {
            if (level > 0 && j % 2 == 0)
                continue;
            fresh.push_back(tanh_sinh_node(Real(j) * Real(h), zero, one));
        }
        return fresh;
    };

    Real raw = 0;
    long count = 0;
    auto accumulate = [&](const std::vector<TanhSinhNode>& xs, const std::vector<TanhSinhNode>& ys) {
        for (const auto& p : xs)
            for (const auto& q : ys) {
                Real v = value(p, q);
                require_finite(v, p.x);
                raw += p.weight * q.weight * v;
                ++count;
            }
    };

    nodes = add_level_nodes(0);
    accumulate(nodes, nodes);
    Real prev = raw * Real(h0 * h0);
    Real diff = 0;
    for (int level = 1; level <= max_level; ++level) {
        const double h = h0 / std::ldexp(1.0, level);
        std::vector<TanhSinhNode> fresh = add_level_nodes(level);
        accumulate(fresh, nodes);
        accumulate(nodes, fresh);
        accumulate(fresh, fresh);
        nodes.insert(nodes.end(), fresh.begin(), fresh.end());
        Real cur = raw * Real(h * h);
        diff = abs(cur - prev);
        if (level >= 2 && diff <= scaled_tol(t, cur))
            return {cur, diff, count};
        prev = cur;
    }
    std::ostringstream os;
    os << "unit-square rule stalled, last difference " << diff.str(6);
    throw NonConvergence(os.str());
}

QuadratureResult abel_plana_sum(const AnalyticSummand& f, const PrecisionContext& ctx)
{
    PrecisionScope scope(ctx);
    Real tol = ctx.tolerance();
    QuadratureResult out{f.on_real(Real(0)) / 2, Real(0), 1};

    if (f.integral) {
        out.value += *f.integral;
    } else {
        QuadratureResult r =
            exp_sinh(f.on_real, Real(0), tol, std::pow(10.0, -(ctx.working_digits + 5)), f.x_max);
        out.value += r.value;
        out.error_estimate += r.error_estimate;
        out.nodes_used += r.nodes_used;
    }

    Integrand1D g([&f](const Real& x) {
        ExtComplex up = f.on_complex(ExtComplex(Real(0), x));
        ExtComplex dn = f.on_complex(ExtComplex(Real(0), -x));
        // i (a + ib) has real part -b
        return Real(-(up.im - dn.im));
    });
    g.oscillatory = f.oscillatory;
    QuadratureResult b = integrate_bose(g, ctx);
    out.value += b.value;
    out.error_estimate += b.error_estimate;
    out.nodes_used += b.nodes_used;
    return out;
}

} // namespace stj
