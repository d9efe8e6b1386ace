#include "oracles.hpp"

#include "stieltjes/quadrature.hpp"
#include "stieltjes/series.hpp"

using namespace stj;
using testutil::check_close;
using testutil::ref;

namespace {

Real bose(RealFn g, const PrecisionContext& ctx, bool oscillatory = false)
{
    Integrand1D f(std::move(g));
    f.oscillatory = oscillatory;
    return integrate_bose(f, ctx).value;
}

} // namespace

TEST_CASE("tanh-sinh on endpoint singularities")
{
    PrecisionContext ctx;
    PrecisionScope scope(ctx);
    const Real tol = pow10(-32);
    auto r = tanh_sinh([](const Real& x) { return Real(log(x)); }, Real(0), Real(1), tol);
    check_close(r.value, Real(-1), pow10(-30));
    CHECK(r.nodes_used > 0);
    CHECK(r.error_estimate >= 0);

    // A 1/sqrt endpoint needs the complements; x itself stops near 1e-47.
    EdgeFn inv_sqrt = [](const Real&, const Real& from_a, const Real& from_b) {
        return Real(1 / sqrt(from_a * from_b));
    };
    check_close(tanh_sinh(inv_sqrt, Real(0), Real(1), tol).value, pi(), pow10(-30));
}

TEST_CASE("exp-sinh on a half line")
{
    PrecisionContext ctx;
    PrecisionScope scope(ctx);
    auto r = exp_sinh([](const Real& x) { return Real(exp(-x) * x * x); }, Real(0), pow10(-40), 1e-60, 1e4);
    check_close(r.value, Real(2), pow10(-38));
}

TEST_CASE("Bose integrals with closed forms")
{
    PrecisionContext ctx;
    PrecisionScope scope(ctx);
    const Real tol = ctx.tolerance();

    check_close(bose([](const Real& x) { return x; }, ctx), Real(1) / 24, tol);
    check_close(bose([](const Real& x) { return Real(x * x * x); }, ctx), Real(1) / 240, tol);
    CHECK(abs(bose([](const Real&) { return Real(0); }, ctx)) <= tol);
    // 2 int x log x / (e^{2 pi x} - 1) = zeta'(-1).
    check_close(2 * bose([](const Real& x) { return Real(x * log(x)); }, ctx), ref(frozen::zeta_prime_m1), tol);
}

TEST_CASE("Bose moment ladder against exact Bernoulli numbers")
{
    PrecisionContext ctx;
    PrecisionScope scope(ctx);
    for (unsigned n = 1; n <= 4; ++n) {
        Real q = bose([n](const Real& x) { return Real(pow(x, 2 * n - 1)); }, ctx);
        Real exact = from_rational(bernoulli_number(2 * n)) / (4 * n);
        if (n % 2 == 0)
            exact = -exact;
        CAPTURE(n);
        check_close(q, exact, ctx.tolerance());
    }
}

TEST_CASE("Bose routes agree and the integral is linear")
{
    PrecisionContext ctx;
    PrecisionScope scope(ctx);
    const Real tol = ctx.tolerance();

    std::vector<RealFn> g = {
        [](const Real& x) { return Real(x * log1p(x * x)); },
        [](const Real& x) { return Real(atan(x)); },
        [](const Real& x) { return Real(x / (1 + x * x)); },
        [](const Real& x) { return Real(x * x * atan(x / 2)); },
    };
    for (std::size_t i = 0; i < g.size(); ++i) {
        CAPTURE(i);
        Integrand1D f(g[i]);
        BoseOptions direct, kernel;
        direct.route = BoseRoute::direct_only;
        kernel.route = BoseRoute::kernel_only;
        Real a = integrate_bose(f, ctx, direct).value;
        Real b = integrate_bose(f, ctx, kernel).value;
        CHECK(abs(a - b) <= 10 * tol);
    }

    const Real alpha = Real(3) / 7, beta = -Real(5) / 3;
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        CAPTURE(i);
        RealFn g1 = g[i], g2 = g[i + 1];
        Real combined = bose([&](const Real& x) { return Real(alpha * g1(x) + beta * g2(x)); }, ctx);
        Real split = alpha * bose(g1, ctx) + beta * bose(g2, ctx);
        CHECK(abs(combined - split) <= 4 * tol);
    }
}

TEST_CASE("Legendre relation and its cosine companion")
{
    PrecisionContext ctx;
    PrecisionScope scope(ctx);
    const Real tol = ctx.tolerance();
    for (const char* ys : {"0.1", "1", "5"}) {
        Real y = parse_real(ys);
        Real lhs = 2 * bose([y](const Real& x) { return Real(sin(x * y)); }, ctx, true);
        Real rhs = 1 / expm1(y) - 1 / y + Real(1) / 2;
        CAPTURE(ys);
        check_close(lhs, rhs, tol);
    }
    for (const char* ys : {"0.5", "2"}) {
        Real y = parse_real(ys);
        Real lhs = 2 * bose([y](const Real& x) { return Real(x * cos(x * y)); }, ctx, true);
        Real ey = exp(y);
        Real rhs = 1 / (y * y) - ey / ((ey - 1) * (ey - 1));
        CAPTURE(ys);
        check_close(lhs, rhs, tol);
    }
}

TEST_CASE("Laplace integrals")
{
    PrecisionContext ctx;
    PrecisionScope scope(ctx);
    const Real tol = ctx.tolerance();
    Integrand1D one([](const Real&) { return Real(1); });
    for (const char* us : {"0.5", "1", "2", "10"}) {
        Real u = parse_real(us);
        CAPTURE(us);
        check_close(integrate_laplace(one, u, ctx).value, 1 / u, tol);
    }
    Integrand1D sine([](const Real& t) { return Real(sin(t)); });
    check_close(integrate_laplace(sine, Real(1), ctx).value, Real(1) / 2, tol);

    // Binet's first formula at u = 1 against the arctan Bose integral.
    Integrand1D binet([](const Real& t) { return Real((1 / expm1(t) - 1 / t + Real(1) / 2) / t); });
    binet.note = Singularity::removable_at_0;
    binet.series = [](const Real& t) {
        Real s = 0, p = 1, fact = 2;
        for (unsigned k = 1; k < 60; ++k) {
            s += from_rational(bernoulli_number(2 * k)) * p / fact;
            p *= t * t;
            fact *= Real((2 * k + 1) * (2 * k + 2));
        }
        return s;
    };
    Real lhs = integrate_laplace(binet, Real(1), ctx).value;
    check_close(lhs, 1 - log(2 * pi()) / 2, tol);
    check_close(lhs, 2 * bose([](const Real& x) { return Real(atan(x)); }, ctx), tol);

    CHECK_THROWS_AS(integrate_laplace(one, Real(0), ctx), DomainError);
}

TEST_CASE("unit-square rule")
{
    PrecisionContext ctx = PrecisionContext::for_target(14, 18);
    PrecisionScope scope(ctx);
    Integrand2D unit([](const Real&, const Real&) { return Real(1); });
    check_close(integrate_unit_square(unit, ctx).value, Real(1), pow10(-14));

    // int int 1/(1 - xy) = zeta(2).
    Integrand2D dilog([](const Real& x, const Real& y) { return Real(1 / (1 - x * y)); });
    dilog.eval_edges = [](const Real&, const Real&, const Real& cx, const Real& cy) {
        return Real(1 / (cx + cy - cx * cy));
    };
    check_close(integrate_unit_square(dilog, ctx).value, pi() * pi() / 6, pow10(-12));
}

TEST_CASE("Abel-Plana summation")
{
    PrecisionContext ctx;
    PrecisionScope scope(ctx);
    const Real tol = ctx.tolerance();

    SUBCASE("zeta(2)")
    {
        AnalyticSummand f;
        f.on_real = [](const Real& k) { return Real(1 / ((k + 1) * (k + 1))); };
        f.on_complex = [](const ExtComplex& z) {
            ExtComplex w = z + ExtComplex(Real(1));
            return ExtComplex(Real(1)) / (w * w);
        };
        f.integral = Real(1);
        check_close(abel_plana_sum(f, ctx).value, pi() * pi() / 6, tol);
    }
    SUBCASE("geometric series")
    {
        AnalyticSummand f;
        f.on_real = [](const Real& k) { return Real(exp(-k)); };
        f.on_complex = [](const ExtComplex& z) { return exp(-z); };
        f.oscillatory = true;
        check_close(abel_plana_sum(f, ctx).value, 1 / (1 - exp(Real(-1))), tol);
    }
    SUBCASE("zeta(-2, 1/2) = 0")
    {
        // sum (k + 1/2)^2 diverges; the closed integral carries the continuation.
        AnalyticSummand f;
        f.on_real = [](const Real& k) { return Real((k + Real(1) / 2) * (k + Real(1) / 2)); };
        f.on_complex = [](const ExtComplex& z) {
            ExtComplex w = z + ExtComplex(Real(1) / 2);
            return w * w;
        };
        f.integral = -Real(1) / 24;
        CHECK(abs(abel_plana_sum(f, ctx).value) <= tol);
    }
}
