#include "stieltjes/special.hpp"

#include <cmath>
#include <sstream>

namespace stj {

namespace {

FunctionValue quad_value(const Real& v, std::string route, const QuadratureResult& q)
{
    return {v, std::move(route), q};
}

FunctionValue sum_value(const Real& v, std::string route, const SumDiagnostics& d)
{
    return {v, std::move(route), d};
}

void require_positive(const Real& u, const char* what)
{
    if (!(u > 0))
        throw DomainError(std::string(what) + ": argument must be positive");
}

ExtComplex ipow(ExtComplex b, unsigned n)
{
    ExtComplex r(Real(1));
    for (; n; n >>= 1) {
        if (n & 1)
            r *= b;
        if (n > 1)
            b *= b;
    }
    return r;
}

Real stirling_main(const Real& u)
{
    return (u - Real(1) / 2) * log(u) - u + log(2 * pi()) / 2;
}

// Smallest shift M such that a binomial forward-difference series in
// a = u + M has terms of size Gamma(i - lag) Gamma(a) / Gamma(a + i - lag)
// below the tolerance by outer index `aim`.
long binomial_shift(const Real& u, int aim, int lag, unsigned log_power, const PrecisionContext& ctx)
{
    const double ud = u.convert_to<double>();
    const double ltol = -ctx.target_digits * std::log(10.0) - std::log(1000.0);
    long M = 0;
    for (;; M += 8) {
        double a = ud + M;
        double lt = std::lgamma(aim - lag) + std::lgamma(a) - std::lgamma(a + aim - lag) +
                    log_power * std::log(std::max(std::log(a), 1.0));
        if (lt < ltol || M > 100000)
            return M;
    }
}

FunctionValue stieltjes_coffey(unsigned n, const Real& u, const PrecisionContext& ctx)
{
    PrecisionScope scope(ctx);
    // Re[i(u+ix) L^n] with L = log(u - ix) = rho - i theta
    Integrand1D g([u, n](const Real& x) {
        Real r2 = u * u + x * x;
        ExtComplex L(log(r2) / 2, -atan2(x, u));
        ExtComplex p = ipow(L, n);
        return Real(2 * (x * p.re + u * p.im) / r2);
    });
    g.singularity_distance = u.convert_to<double>();
    QuadratureResult q = integrate_bose(g, ctx);
    Real lu = log(u);
    Real v = pow(lu, n) / (2 * u) - pow(lu, n + 1) / Real(n + 1) + q.value;
    return quad_value(v, "coffey_integral", q);
}

} // namespace

std::string to_string(StieltjesMethod m)
{
    switch (m) {
    case StieltjesMethod::coffey_integral: return "coffey_integral";
    case StieltjesMethod::hasse_sum: return "hasse_sum";
    case StieltjesMethod::limit_euler_maclaurin: return "limit_euler_maclaurin";
    case StieltjesMethod::alt_zeta_recursion: return "alt_zeta_recursion";
    }
    return "?";
}

StieltjesMethod parse_stieltjes_method(const std::string& s)
{
    if (s == "coffey" || s == "coffey_integral")
        return StieltjesMethod::coffey_integral;
    if (s == "hasse" || s == "hasse_sum")
        return StieltjesMethod::hasse_sum;
    if (s == "limit" || s == "oracle" || s == "limit_euler_maclaurin")
        return StieltjesMethod::limit_euler_maclaurin;
    if (s == "altzeta" || s == "alt_zeta" || s == "alt_zeta_recursion")
        return StieltjesMethod::alt_zeta_recursion;
    throw DomainError("unknown Stieltjes method: " + s);
}

std::string to_string(LogGammaRoute r)
{
    switch (r) {
    case LogGammaRoute::binet2: return "binet2";
    case LogGammaRoute::binet1: return "binet1";
    case LogGammaRoute::bourguet: return "bourguet";
    case LogGammaRoute::binomial_series: return "binomial_series";
    }
    return "?";
}

std::string to_string(BarnesRoute r)
{
    switch (r) {
    case BarnesRoute::integral_6_7: return "integral";
    case BarnesRoute::weierstrass_6_5: return "weierstrass_product";
    case BarnesRoute::gosper_vardi_6_10: return "gosper_vardi";
    }
    return "?";
}

std::string FunctionValue::diagnostic_line() const
{
    std::ostringstream os;
    os << "route=" << route;
    if (auto q = std::get_if<QuadratureResult>(&diagnostics))
        os << " nodes=" << q->nodes_used << " error_estimate=" << q->error_estimate.str(3);
    else if (auto d = std::get_if<SumDiagnostics>(&diagnostics))
        os << " terms=" << d->terms_used << " max_term=" << d->max_term_magnitude.str(3)
           << " digits_lost=" << d->cancellation_digits_lost;
    return os.str();
}

FunctionValue stieltjes(unsigned n, const Real& u_in, StieltjesMethod method, const PrecisionContext& ctx)
{
    const Real u = at_digits(u_in, ctx.working_digits);
    ctx.validate();
    require_positive(u, "stieltjes");
    switch (method) {
    case StieltjesMethod::coffey_integral:
        return stieltjes_coffey(n, u, ctx);
    case StieltjesMethod::hasse_sum: {
        PrecisionContext c = ctx;
        for (int attempt = 0;; ++attempt) {
            try {
                SeriesValue s = hasse_stieltjes(n, u, c);
                return sum_value(at_digits(s.value, ctx.working_digits), "hasse_sum", s.diag);
            } catch (const PrecisionExhausted&) {
                if (attempt == 3)
                    throw;
                // a rough a-priori bound on the loss decides the step
                c = c.raised(10 + 2 * static_cast<int>(n));
            }
        }
    }
    case StieltjesMethod::limit_euler_maclaurin: {
        long N = 0;
        Real v = limit_stieltjes_oracle(n, u, ctx, N);
        SumDiagnostics d;
        d.terms_used = N;
        d.max_term_magnitude = abs(v);
        return sum_value(v, "limit_euler_maclaurin", d);
    }
    case StieltjesMethod::alt_zeta_recursion: {
        if (u != 1)
            throw DomainError("alt_zeta_recursion is only valid at u = 1");
        PrecisionScope scope(ctx);
        SeriesValue top = alt_zeta_log_moment(n + 1, ctx);
        Real v = stieltjes_from_altzeta(n, ctx);
        return sum_value(v, "alt_zeta_recursion", top.diag);
    }
    }
    throw DomainError("unknown method");
}

StieltjesMethod default_stieltjes_method(const Real& u, const PrecisionContext& ctx)
{
    if (u != 1 && ctx.target_digits > 60)
        return StieltjesMethod::coffey_integral;
    return StieltjesMethod::hasse_sum;
}

Real binet_kernel(const Real& t, int drop)
{
    if (t < Real(1) / 4) {
        Real tol = pow10(-current_digits() - 5);
        Real sum = 0;
        Real t2 = t * t;
        Real p = t;
        Real fact = 2;
        for (unsigned k = 1; k < 400; ++k) {
            if (k > 1) {
                p *= t2;
                fact *= Real((2 * k - 1) * (2 * k));
            }
            if (static_cast<int>(k) <= drop)
                continue;
            Real term = from_rational(bernoulli_number(2 * k)) * p / fact;
            sum += term;
            if (abs(term) < tol * abs(sum) || term == 0)
                break;
        }
        return sum;
    }
    Real v = 1 / expm1(t) - 1 / t + Real(1) / 2;
    Real p = t;
    Real fact = 2;
    for (int k = 1; k <= drop; ++k) {
        if (k > 1) {
            p *= t * t;
            fact *= Real((2 * k - 1) * (2 * k));
        }
        v -= from_rational(bernoulli_number(2 * k)) * p / fact;
    }
    return v;
}

FunctionValue digamma(const Real& u_in, const PrecisionContext& ctx, DigammaRoute route)
{
    const Real u = at_digits(u_in, ctx.working_digits);
    ctx.validate();
    require_positive(u, "digamma");
    PrecisionScope scope(ctx);
    Real base = -1 / (2 * u) + log(u);
    if (route == DigammaRoute::laplace) {
        Integrand1D h([](const Real& y) { return binet_kernel(y); });
        QuadratureResult q = integrate_laplace(h, u, ctx);
        return quad_value(base - q.value, "laplace", q);
    }
    Integrand1D g([u](const Real& x) { return Real(2 * x / (u * u + x * x)); });
    g.singularity_distance = u.convert_to<double>();
    QuadratureResult q = integrate_bose(g, ctx);
    return quad_value(base - q.value, "bose_integral", q);
}

FunctionValue trigamma(const Real& u_in, const PrecisionContext& ctx, TrigammaRoute route)
{
    const Real u = at_digits(u_in, ctx.working_digits);
    ctx.validate();
    require_positive(u, "trigamma");
    PrecisionScope scope(ctx);
    if (route == TrigammaRoute::hurwitz_zeta) {
        Real v = hurwitz_zeta_em(Real(2), u, 0, ctx)[0];
        return sum_value(v, "hurwitz_zeta", SumDiagnostics{});
    }
    Integrand1D g([u](const Real& x) {
        Real r2 = u * u + x * x;
        return Real(4 * u * x / (r2 * r2));
    });
    g.singularity_distance = u.convert_to<double>();
    QuadratureResult q = integrate_bose(g, ctx);
    return quad_value(1 / (2 * u * u) + 1 / u + q.value, "bose_integral", q);
}

namespace {

// (1/pi) sum_{n>=1} f(2 n pi u)/n, or with weights 1/n^2 and g in place of f:
// explicit head plus the asymptotic tail through zeta(p, N+1).
struct SineCosineSeries {
    bool use_g;     // g(z) in place of f(z)
    int weight;     // power of 1/n
};

Real sine_cosine_series(const Real& u_in, SineCosineSeries kind, const PrecisionContext& ctx)
{
    const Real u = at_digits(u_in, ctx.working_digits);
    // every head term carries its own quadrature error, so aim deeper
    PrecisionContext inner{ctx.working_digits + 15, ctx.target_digits + 10, ctx.guard_digits + 5};
    PrecisionScope scope(inner);
    const Real two_pi_u = 2 * pi() * u;
    const double Z = (inner.target_digits + 10) * std::log(10.0);
    const long N = std::max(4L, static_cast<long>(std::ceil(Z / two_pi_u.convert_to<double>())));
    const Real tol = inner.tolerance() * pow10(-5);

    Real head = 0;
    for (long n = 1; n <= N; ++n) {
        AuxiliaryFG fg = auxiliary_fg(two_pi_u * n, inner);
        head += (kind.use_g ? fg.g : fg.f) / pow(Real(n), kind.weight);
    }

    // f(z) ~ sum (-1)^k (2k)!/z^{2k+1}, g(z) ~ sum (-1)^k (2k+1)!/z^{2k+2}
    Real tail = 0;
    Real fact = 1;
    Real prev = -1;
    const Real zN = two_pi_u * (N + 1);
    for (int k = 0; k < 400; ++k) {
        int m = kind.use_g ? 2 * k + 1 : 2 * k;
        if (k > 0)
            fact *= Real((m - 1) * m);
        int p = m + 1;
        Real size = fact / pow(zN, p);
        if (prev >= 0 && size > prev)
            throw NonConvergence("sine/cosine series: asymptotic tail diverged before tolerance");
        Real coeff = (k % 2 ? -fact : fact) / pow(two_pi_u, p);
        tail += coeff * hurwitz_zeta_em(Real(p + kind.weight), Real(N + 1), 0, inner)[0];
        if (size < tol)
            break;
        prev = size;
    }
    return at_digits(head + tail, ctx.working_digits);
}

} // namespace

FunctionValue log_gamma(const Real& u_in, LogGammaRoute route, const PrecisionContext& ctx)
{
    const Real u = at_digits(u_in, ctx.working_digits);
    ctx.validate();
    require_positive(u, "log_gamma");
    PrecisionScope scope(ctx);
    switch (route) {
    case LogGammaRoute::binet2: {
        Integrand1D g([u](const Real& x) { return Real(2 * atan2(x, u)); });
        g.singularity_distance = u.convert_to<double>();
        QuadratureResult q = integrate_bose(g, ctx);
        return quad_value(stirling_main(u) + q.value, "binet2", q);
    }
    case LogGammaRoute::binet1: {
        Integrand1D h([](const Real& y) { return Real(binet_kernel(y) / y); });
        h.note = Singularity::removable_at_0;
        h.series = [](const Real& y) {
            // sum_k B_{2k} y^{2k-2}/(2k)!
            Real tol = pow10(-current_digits() - 5);
            Real sum = 0, p = 1, fact = 2, y2 = y * y;
            for (unsigned k = 1; k < 400; ++k) {
                if (k > 1) {
                    p *= y2;
                    fact *= Real((2 * k - 1) * (2 * k));
                }
                Real term = from_rational(bernoulli_number(2 * k)) * p / fact;
                sum += term;
                if (abs(term) < tol * abs(sum))
                    break;
            }
            return sum;
        };
        QuadratureResult q = integrate_laplace(h, u, ctx);
        return quad_value(stirling_main(u) + q.value, "binet1", q);
    }
    case LogGammaRoute::bourguet: {
        Real s = sine_cosine_series(u, {false, 1}, ctx) / pi();
        SumDiagnostics d;
        return sum_value(stirling_main(u) + s, "bourguet", d);
    }
    case LogGammaRoute::binomial_series: {
        PrecisionContext c = ctx.raised(10);
        PrecisionScope inner(c);
        const long M = binomial_shift(u, 26, 1, 1, c);
        const Real a = u + M;
        const Real tol = c.tolerance();
        Real shift = 0;
        for (long k = 0; k < M; ++k)
            shift += log(u + k);
        std::vector<Real> F;
        std::vector<Integer> row{Integer(1)};
        Real outer = 0, max_term = 0;
        int small = 0;
        unsigned n = 0;
        const unsigned cap = 64;
        for (; n < cap; ++n) {
            if (n > 0) {
                std::vector<Integer> next(n + 1);
                next[0] = next[n] = 1;
                for (unsigned j = 1; j < n; ++j)
                    next[j] = row[j - 1] + row[j];
                row.swap(next);
            }
            Real x = a + Real(n);
            F.push_back(x * log(x));
            Real innersum = 0;
            for (unsigned j = 0; j <= n; ++j) {
                Real t = from_integer(row[j]) * F[j];
                max_term = std::max(max_term, Real(abs(t) / (n + 1)));
                innersum += (j % 2) ? Real(-t) : t;
            }
            Real term = innersum / Real(n + 1);
            outer += term;
            small = abs(term) < tol ? small + 1 : 0;
            if (n >= 3 && small >= 3)
                break;
        }
        if (n == cap)
            throw NonConvergence("log_gamma binomial series did not settle");
        Real lg_a = outer + Real(1) / 2 - a + log(2 * pi()) / 2;
        Real v = lg_a - shift;
        SumDiagnostics d;
        d.terms_used = n + 1;
        d.max_term_magnitude = max_term;
        Real r = abs(v) > 0 ? Real(max_term / abs(v)) : Real(1);
        d.cancellation_digits_lost =
            r > 1 ? static_cast<int>(std::ceil(log10(r).convert_to<double>())) : 0;
        return sum_value(at_digits(v, ctx.working_digits), "binomial_series", d);
    }
    }
    throw DomainError("unknown log_gamma route");
}

FunctionValue hurwitz_zeta(const Real& s_in, const Real& u_in, const PrecisionContext& ctx, ZetaRoute route)
{
    const Real s = at_digits(s_in, ctx.working_digits);
    const Real u = at_digits(u_in, ctx.working_digits);
    ctx.validate();
    require_positive(u, "hurwitz_zeta");
    if (s == 1)
        throw PoleError("hurwitz_zeta: pole at s = 1");
    PrecisionScope scope(ctx);
    if (route == ZetaRoute::euler_maclaurin)
        return sum_value(hurwitz_zeta_em(s, u, 0, ctx)[0], "euler_maclaurin", SumDiagnostics{});
    Integrand1D g([s, u](const Real& x) {
        Real r2 = u * u + x * x;
        return Real(2 * sin(s * atan2(x, u)) * pow(r2, -s / 2));
    });
    g.singularity_distance = u.convert_to<double>();
    QuadratureResult q = integrate_bose(g, ctx);
    Real v = pow(u, -s) / 2 + pow(u, 1 - s) / (s - 1) + q.value;
    return quad_value(v, "hermite", q);
}

FunctionValue hurwitz_zeta_sderiv(unsigned order, const Real& s_in, const Real& u_in,
                                  const PrecisionContext& ctx, ZetaDerivRoute route)
{
    const Real s = at_digits(s_in, ctx.working_digits);
    const Real u = at_digits(u_in, ctx.working_digits);
    ctx.validate();
    require_positive(u, "hurwitz_zeta_sderiv");
    if (s == 1)
        throw PoleError("hurwitz_zeta_sderiv: pole at s = 1");
    PrecisionScope scope(ctx);
    if (route == ZetaDerivRoute::euler_maclaurin) {
        Real v = hurwitz_zeta_em(s, u, order, ctx)[order];
        return sum_value(v, "euler_maclaurin", SumDiagnostics{});
    }
    if (order < 1 || order > 2)
        throw DomainError("hurwitz_zeta_sderiv: abel_plana route supports orders 1 and 2");

    // d^k/ds^k [u^{-s}/2 + u^{1-s}/(s-1)]
    const Real L = log(u);
    const Real d = s - 1;
    Real alg = pow(-L, order) * pow(u, -s) / 2;
    Real mfact = 1;
    for (unsigned m = 0; m <= order; ++m) {
        if (m > 0)
            mfact *= m;
        Real c = from_integer(binomial(order, m)) * pow(-L, order - m) * pow(u, 1 - s) * mfact /
                 pow(d, m + 1);
        alg += (m % 2) ? Real(-c) : c;
    }

    Integrand1D g([s, u, order](const Real& x) {
        Real r2 = u * u + x * x;
        Real rho = log(r2) / 2;
        Real th = atan2(x, u);
        Real amp = exp(-s * rho);
        Real c = cos(s * th), sn = sin(s * th);
        if (order == 1)
            return Real(2 * amp * (th * c - rho * sn));
        return Real(-2 * amp * (2 * rho * th * c - (rho * rho - th * th) * sn));
    });
    g.singularity_distance = u.convert_to<double>();
    QuadratureResult q = integrate_bose(g, ctx);
    return quad_value(alg + q.value, "abel_plana", q);
}

FunctionValue barnes_g_log(const Real& t_in, BarnesRoute route, const PrecisionContext& ctx)
{
    const Real t = at_digits(t_in, ctx.working_digits);
    ctx.validate();
    PrecisionScope scope(ctx);
    if (t == 0)
        return sum_value(Real(0), to_string(route), SumDiagnostics{});
    switch (route) {
    case BarnesRoute::integral_6_7: {
        require_positive(t, "barnes_g_log (integral route)");
        Integrand1D g([t](const Real& x) { return Real(x * log(t * t + x * x)); });
        g.singularity_distance = t.convert_to<double>();
        QuadratureResult q = integrate_bose(g, ctx);
        Real v = t * t / 2 * (log(t) - Real(3) / 2) + t * log(2 * pi()) / 2 + zeta_prime(-1, ctx) -
                 q.value;
        return quad_value(v, to_string(route), q);
    }
    case BarnesRoute::weierstrass_6_5: {
        if (!(t > -1))
            throw DomainError("barnes_g_log (product route): t must exceed -1");
        PrecisionContext c = ctx.raised(10);
        PrecisionScope inner(c);
        const long K = c.working_digits + 10;
        const Real tol = c.tolerance() * pow10(-5);
        auto h = [&t](const Real& k) { return Real(k * log1p(t / k) + t * t / (2 * k) - t); };
        Real sum = 0;
        for (long k = 1; k < K; ++k)
            sum += h(Real(k));
        const Real k0 = Real(K);
        // int_K^inf h = -t^2/4 - F(K), F(k) = ((k^2 - t^2)/2) log(1 + t/k) - t k / 2
        Real F = (k0 * k0 - t * t) / 2 * log1p(t / k0) - t * k0 / 2;
        Real tail = -t * t / 4 - F + h(k0) / 2;
        // h' and h^{(n)} = D^{n-2}[(k+t)^-1 - k^-1 + t (k+t)^-2 + t^2 k^-3]
        auto hder = [&](unsigned n) {
            if (n == 1)
                return Real(log1p(t / k0) - t / (k0 + t) - t * t / (2 * k0 * k0));
            unsigned m = n - 2;
            Real mf = 1;
            for (unsigned i = 2; i <= m; ++i)
                mf *= i;
            Real kt = k0 + t;
            Real v = mf * pow(kt, -Real(1 + m)) - mf * pow(k0, -Real(1 + m)) +
                     t * mf * (m + 1) * pow(kt, -Real(2 + m)) +
                     t * t * mf * (m + 1) * (m + 2) / 2 * pow(k0, -Real(3 + m));
            return (m % 2) ? Real(-v) : v;
        };
        Real fact = 2;
        SumDiagnostics d;
        bool done = false;
        for (unsigned j = 1; j < 200; ++j) {
            if (j > 1)
                fact *= Real((2 * j - 1) * (2 * j));
            Real term = from_rational(bernoulli_number(2 * j)) / fact * hder(2 * j - 1);
            tail -= term;
            if (abs(term) < tol) {
                d.terms_used = K + j;
                done = true;
                break;
            }
        }
        if (!done)
            throw PrecisionExhausted("barnes_g_log: product tail did not reach tolerance");
        Real g = euler_gamma(c);
        Real v = t * log(2 * pi()) / 2 - (g * t * t + t * t + t) / 2 + sum + tail;
        return sum_value(at_digits(v, ctx.working_digits), to_string(route), d);
    }
    case BarnesRoute::gosper_vardi_6_10: {
        require_positive(t, "barnes_g_log (Gosper-Vardi route)");
        FunctionValue lg = log_gamma(t, LogGammaRoute::binet2, ctx);
        FunctionValue zd = hurwitz_zeta_sderiv(1, Real(-1), t, ctx, ZetaDerivRoute::abel_plana);
        Real v = t * lg.value + zeta_prime(-1, ctx) - zd.value;
        return {v, to_string(route), zd.diagnostics};
    }
    }
    throw DomainError("unknown Barnes G route");
}

SineCosineIntegrals sin_cos_integrals(const Real& x_in, const PrecisionContext& ctx)
{
    const Real x = at_digits(x_in, ctx.working_digits);
    ctx.validate();
    require_positive(x, "sin_cos_integrals");
    PrecisionScope scope(ctx);
    const Real half_pi = pi() / 2;
    if (x <= 8) {
        PrecisionContext c = ctx.raised(10);
        PrecisionScope inner(c);
        const Real tol = pow10(-c.working_digits);
        Real Si = 0, Ci = 0;
        Real p = x;     // x^{2k+1}/(2k+1)!
        for (int k = 0; k < 500; ++k) {
            if (k > 0)
                p *= -x * x / Real((2 * k) * (2 * k + 1));
            Si += p / (2 * k + 1);
            if (abs(p) < tol)
                break;
        }
        Real q = 1;     // (-1)^k x^{2k}/(2k)!
        for (int k = 1; k < 500; ++k) {
            q *= -x * x / Real((2 * k - 1) * (2 * k));
            Ci += q / (2 * k);
            if (abs(q) < tol)
                break;
        }
        Ci += euler_gamma(c) + log(x);
        return {at_digits(Si, ctx.working_digits), at_digits(Real(Si - half_pi), ctx.working_digits),
                at_digits(Ci, ctx.working_digits)};
    }
    AuxiliaryFG fg = auxiliary_fg(x, ctx);
    Real c = cos(x), s = sin(x);
    Real si = -fg.f * c - fg.g * s;
    return {half_pi + si, si, fg.f * s - fg.g * c};
}

AuxiliaryFG auxiliary_fg(const Real& x_in, const PrecisionContext& ctx)
{
    const Real x = at_digits(x_in, ctx.working_digits);
    ctx.validate();
    require_positive(x, "auxiliary_fg");
    PrecisionScope scope(ctx);
    if (x <= 8) {
        SineCosineIntegrals sc = sin_cos_integrals(x, ctx);
        Real c = cos(x), s = sin(x);
        return {sc.Ci * s - sc.si * c, -sc.Ci * c - sc.si * s};
    }
    Integrand1D hf([](const Real& t) { return Real(1 / (1 + t * t)); });
    Integrand1D hg([](const Real& t) { return Real(t / (1 + t * t)); });
    Real f = integrate_laplace(hf, x, ctx).value;
    Real g = integrate_laplace(hg, x, ctx).value;
    return {f, g};
}

Real log_gamma_bourguet_terms(const Real& u_in, long N, const PrecisionContext& ctx)
{
    const Real u = at_digits(u_in, ctx.working_digits);
    ctx.validate();
    require_positive(u, "log_gamma_bourguet_terms");
    if (N < 1)
        throw DomainError("log_gamma_bourguet_terms: N must be >= 1");
    PrecisionScope scope(ctx);
    Real sum = 0;
    for (long n = 1; n <= N; ++n) {
        Real z = 2 * pi() * n * u;
        SineCosineIntegrals sc = sin_cos_integrals(z, ctx);
        sum += (sin(z) * sc.Ci - cos(z) * sc.si) / n;
    }
    return sum / pi();
}

Real zeta_deriv_m1_sine_cosine(const Real& x_in, const PrecisionContext& ctx)
{
    const Real x = at_digits(x_in, ctx.working_digits);
    ctx.validate();
    require_positive(x, "zeta_deriv_m1_sine_cosine");
    PrecisionScope scope(ctx);
    Real zeta_m1 = -bernoulli_poly(2, x) / 2;
    Real series = sine_cosine_series(x, {true, 2}, ctx);
    Real P = pi();
    return -zeta_m1 * log(x) - x * x / 4 + Real(1) / 12 + series / (2 * P * P);
}

Real digamma_sine_cosine(const Real& a_in, const PrecisionContext& ctx)
{
    const Real a = at_digits(a_in, ctx.working_digits);
    ctx.validate();
    require_positive(a, "digamma_sine_cosine");
    PrecisionScope scope(ctx);
    Real series = sine_cosine_series(a, {true, 0}, ctx);
    return log(a) - 1 / (2 * a) - 2 * series;
}

Real polylog_bose(const Real& s_in, const PrecisionContext& ctx)
{
    const Real s = at_digits(s_in, ctx.working_digits);
    ctx.validate();
    if (!(s > 1))
        throw DomainError("polylog_bose: s must exceed 1");
    PrecisionScope scope(ctx);
    Integrand1D g([s](const Real& x) { return Real(pow(x, s - 1)); });
    return integrate_bose(g, ctx).value;
}

} // namespace stj
