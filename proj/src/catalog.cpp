#include "stieltjes/catalog.hpp"

#include "stieltjes/quadrature.hpp"
#include "stieltjes/series.hpp"
#include "stieltjes/special.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>

namespace stj {

Real IdentityEntry::tolerance(const PrecisionContext& ctx) const
{
    PrecisionScope scope(ctx);
    return pow10(tolerance_exponent ? *tolerance_exponent : -(ctx.target_digits - 5));
}

void Catalog::add(IdentityEntry e)
{
    if (e.id.empty() || find(e.id))
        throw DomainError("catalog: missing or duplicate id " + e.id);
    if (e.paper_anchor.empty())
        throw DomainError("catalog: entry " + e.id + " has no anchor");
    if (e.samples.empty())
        throw DomainError("catalog: entry " + e.id + " has no samples");
    if (e.lhs_route.empty() || e.lhs_route == e.rhs_route)
        throw DomainError("catalog: entry " + e.id + " uses the same route on both sides");
    if (e.tolerance_exponent && e.tolerance_note.empty())
        throw DomainError("catalog: entry " + e.id + " overrides the tolerance without a note");
    entries_.push_back(std::move(e));
}

const IdentityEntry* Catalog::find(const std::string& id) const
{
    for (const auto& e : entries_)
        if (e.id == id)
            return &e;
    return nullptr;
}

std::set<std::string> Catalog::all_tags() const
{
    std::set<std::string> out;
    for (const auto& e : entries_)
        out.insert(e.tags.begin(), e.tags.end());
    return out;
}

namespace {

using Ctx = PrecisionContext;

Real frac(long p, long q) { return Real(p) / Real(q); }

Real log2pi() { return log(2 * pi()); }

Real bose(std::function<Real(const Real&)> g, const Real& dist, const Ctx& ctx,
          bool oscillatory = false)
{
    Integrand1D f(std::move(g));
    f.singularity_distance = dist.convert_to<double>();
    f.oscillatory = oscillatory;
    return integrate_bose(f, ctx).value;
}

Real finite_tanh_sinh(const RealFn& f, const Real& a, const Real& b, const Ctx& ctx)
{
    return tanh_sinh(f, a, b, ctx.tolerance() * pow10(-3)).value;
}

// Central differences at h and h/2 combined by one Richardson step.
Real richardson_derivative(const RealFn& f, const Real& x, const Real& h)
{
    auto D = [&](const Real& k) { return Real((f(x + k) - f(x - k)) / (2 * k)); };
    return (4 * D(h / 2) - D(h)) / 3;
}

// Extra digits so that differencing keeps the target.
Ctx difference_context(const Ctx& ctx)
{
    return PrecisionContext::for_target(ctx.target_digits + 25);
}

Real fd_step(const Ctx& ctx) { return pow10(-(ctx.target_digits / 3)); }

Real gamma_n(unsigned n, const Ctx& ctx) { return limit_stieltjes_oracle(n, Real(1), ctx); }

// Positive-log moment S_k; the k-th derivative of the alternating zeta at 1
// is (-1)^k S_k.
Real log_moment(unsigned k, const Ctx& ctx) { return alt_zeta_log_moment(k, ctx).value; }

Real alt_zeta_derivative(unsigned k, const Ctx& ctx)
{
    Real s = log_moment(k, ctx);
    return (k % 2) ? Real(-s) : s;
}

Real stirling_main(const Real& u) { return (u - frac(1, 2)) * log(u) - u + log2pi() / 2; }

Real sinh_kernel_derivative(const Real& y)
{
    // 1/y^2 - e^y/(e^y-1)^2
    Real s = sinh(y / 2);
    return 1 / (y * y) - 1 / (4 * s * s);
}

// Lower precision for the two-dimensional rules; the tensor grid grows with
// the square of the level count.
Ctx square_context(const Ctx& ctx)
{
    int target = std::min(ctx.target_digits, 14);
    return PrecisionContext{target + 18, target, 18};
}

Real log_near(const Real& x, const Real& cx) { return x < frac(1, 2) ? Real(log(x)) : Real(log1p(-cx)); }

Real unit_square(Integrand2D F, const Ctx& ctx)
{
    Ctx c = square_context(ctx);
    PrecisionScope scope(c);
    return integrate_unit_square(F, c).value;
}

Real kanemitsu_double_integral(const Ctx& ctx)
{
    // The log x / x term is folded into the y-integral with
    // 1/x = int_0^1 dy / (1 - (1-x) y)^2, leaving
    // log x [1 + (1-y)/log y] / (1 - (1-x) y)^2, absolutely integrable.
    Integrand2D F;
    F.eval_edges = [](const Real& x, const Real& y, const Real& cx, const Real& cy) {
        Real b;
        if (cy < frac(1, 1000)) {
            Real s = 0, p = cy;
            Real eps = pow10(-current_digits() - 2);
            for (int k = 1; k < 200 && p > eps; ++k) {
                s += p / (k + 1);
                p *= cy;
            }
            b = s / (1 + s);
        } else {
            b = 1 + cy / log_near(y, cy);
        }
        Real d = cy + x * y;
        return Real(log_near(x, cx) * b / (d * d));
    };
    return unit_square(F, ctx);
}

Real gamma1_double_integral(const Ctx& ctx)
{
    Integrand2D F;
    F.eval_edges = [](const Real& x, const Real& y, const Real& cx, const Real& cy) {
        Real lx = log_near(x, cx), ly = log_near(y, cy);
        Real one_minus_xy = cx + cy - cx * cy;
        return Real(((lx + ly) / (one_minus_xy * lx * ly) - 1 / (cx * ly) - 1 / (cy * lx) -
                     1 / (lx * ly)) /
                    2);
    };
    return unit_square(F, ctx);
}

Real euler_double_integral(const Ctx& ctx)
{
    Integrand2D F;
    F.eval_edges = [](const Real& x, const Real& y, const Real& cx, const Real& cy) {
        Real one_minus_xy = cx + cy - cx * cy;
        return Real(-cx / (one_minus_xy * (log_near(x, cx) + log_near(y, cy))));
    };
    return unit_square(F, ctx);
}

Real euler_symmetric_double_integral(const Ctx& ctx)
{
    Integrand2D F;
    F.eval_edges = [](const Real& x, const Real& y, const Real& cx, const Real& cy) {
        Real one_minus_xy = cx + cy - cx * cy;
        return Real(-(cx + cy) / (2 * one_minus_xy * (log_near(x, cx) + log_near(y, cy))));
    };
    return unit_square(F, ctx);
}

// int_0^1 (psi' - psi^2 - 2 gamma psi) dx written with P = psi(1+x),
// Q = psi'(1+x) as Q - P^2 - 2 gamma P + 2 (P + gamma)/x.
Real digamma_square_integral(const Ctx& ctx)
{
    const Real g = euler_gamma(ctx);
    RealFn f = [&ctx, g](const Real& x) {
        Real P_plus_g;
        if (x < frac(1, 8)) {
            // (P + gamma)/x = sum_{k>=1} (-1)^{k+1} zeta(k+1) x^{k-1}
            Real s = 0, p = 1;
            Real eps = ctx.tolerance() * pow10(-5);
            for (int k = 1; k < 400; ++k) {
                Real t = zeta_value(k + 1, ctx) * p;
                s += (k % 2) ? t : Real(-t);
                if (t < eps)
                    break;
                p *= x;
            }
            P_plus_g = s * x;
            Real P = P_plus_g - g;
            Real Q = hurwitz_zeta_em(Real(2), 1 + x, 0, ctx)[0];
            return Real(Q - P * P - 2 * g * P + 2 * s);
        }
        Real P = -hasse_stieltjes(0, 1 + x, ctx).value;
        Real Q = hurwitz_zeta_em(Real(2), 1 + x, 0, ctx)[0];
        return Real(Q - P * P - 2 * g * P + 2 * (P + g) / x);
    };
    return finite_tanh_sinh(f, Real(0), Real(1), ctx);
}

Catalog build()
{
    Catalog c;
    using S = Sample;

    auto single = [](SideFn l, SideFn r) { return std::vector<Sample>{{"", std::move(l), std::move(r)}}; };

    // ---- integral representations with the Bose kernel

    {
        IdentityEntry e{"I-2.2", "sum_n gamma_{n+1}(u)/n! = log(2 pi)/2 - log Gamma(u) - 1, series cut after n = 20",
                        "Eq (2.2), \"may be obtained more directly\"", "hasse_sum", "binet1", {}, -5,
                        "the series is truncated after gamma_21 and the remainder is not bounded", {"series", "slow"}};
        for (int u : {1, 2})
            e.samples.push_back(S{"u=" + std::to_string(u),
                                  [u](const Ctx& ctx) {
                                      Real s = 0, fact = 1;
                                      for (unsigned n = 0; n <= 20; ++n) {
                                          if (n > 0)
                                              fact *= n;
                                          s += stieltjes(n + 1, Real(u), StieltjesMethod::hasse_sum, ctx).value / fact;
                                      }
                                      return s;
                                  },
                                  [u](const Ctx& ctx) {
                                      return Real(log2pi() / 2 - log_gamma(Real(u), LogGammaRoute::binet1, ctx).value - 1);
                                  }});
        c.add(e);
    }
    {
        IdentityEntry e{"I-2.10", "2 int sin(xy)/(e^{2 pi x}-1) dx = 1/(e^y-1) - 1/y + 1/2",
                        "Eq (2.10), \"to determine Legendre's relation\"", "bose_quadrature", "closed_form", {}, {}, "",
                        {"quadrature"}};
        for (auto [num, den] : {std::pair{1, 10}, {1, 1}, {5, 1}})
            e.samples.push_back(S{"y=" + std::to_string(num) + "/" + std::to_string(den),
                                  [num, den](const Ctx& ctx) {
                                      Real y = frac(num, den);
                                      return bose([y](const Real& x) { return Real(2 * sin(x * y)); }, Real(1), ctx, true);
                                  },
                                  [num, den](const Ctx&) { return binet_kernel(frac(num, den)); }});
        c.add(e);
    }
    {
        IdentityEntry e{"I-2.15", "digamma: Bose-kernel integral against the Laplace integral of the Binet kernel",
                        "Eq (2.15), \"As shown in Bromwich's book\"", "bose_integral", "laplace_integral", {}, {}, "",
                        {"quadrature"}};
        for (auto [num, den] : {std::pair{1, 2}, {1, 1}, {3, 1}})
            e.samples.push_back(S{"u=" + std::to_string(num) + "/" + std::to_string(den),
                                  [num, den](const Ctx& ctx) { return digamma(frac(num, den), ctx).value; },
                                  [num, den](const Ctx& ctx) {
                                      return digamma(frac(num, den), ctx, DigammaRoute::laplace).value;
                                  }});
        c.add(e);
    }
    c.add({"I-2.20", "int_0^inf (1-e^{-t})/t^2 [1/(e^t-1) - 1/t + 1/2] dt = 1/4", "Eq (2.20), \"Therefore we obtain\"",
           "exp_sinh_quadrature", "exact",
           single(
               [](const Ctx& ctx) {
                   RealFn f = [](const Real& t) { return Real(-expm1(-t) / (t * t) * binet_kernel(t)); };
                   return exp_sinh(f, Real(0), ctx.tolerance() * pow10(-3), std::pow(10.0, -(ctx.working_digits + 5)),
                                   std::pow(10.0, ctx.working_digits + 10))
                       .value;
               },
               [](const Ctx&) { return frac(1, 4); }),
           {}, "", {"quadrature"}});
    {
        IdentityEntry e{"I-2.23", "2 int x cos(xy)/(e^{2 pi x}-1) dx = 1/y^2 - e^y/(e^y-1)^2",
                        "Eq (2.23), \"Hence we obtain\"", "bose_quadrature", "closed_form", {}, {}, "", {"quadrature"}};
        for (auto [num, den] : {std::pair{1, 2}, {2, 1}})
            e.samples.push_back(S{"y=" + std::to_string(num) + "/" + std::to_string(den),
                                  [num, den](const Ctx& ctx) {
                                      Real y = frac(num, den);
                                      return bose([y](const Real& x) { return Real(2 * x * cos(x * y)); }, Real(1), ctx, true);
                                  },
                                  [num, den](const Ctx&) { return sinh_kernel_derivative(frac(num, den)); }});
        c.add(e);
    }
    c.add({"I-2.25", "int x log(1+x^2)/(e^{2 pi x}-1) dx = int e^{-y}/y [1/12 + e^y/(e^y-1)^2 - 1/y^2] dy",
           "Eq (2.25), \"and with $u = 1$ we have\"", "bose_quadrature", "laplace_integral",
           single(
               [](const Ctx& ctx) { return bose([](const Real& x) { return Real(x * log1p(x * x)); }, Real(1), ctx); },
               [](const Ctx& ctx) {
                   Integrand1D h([](const Real& y) { return Real((frac(1, 12) - sinh_kernel_derivative(y)) / y); });
                   h.note = Singularity::removable_at_0;
                   h.series = [](const Real& y) {
                       // -sum_{k>=2} B_{2k} (2k-1) y^{2k-3} / (2k)!
                       Real s = 0, p = y, fact = 24;
                       Real eps = pow10(-current_digits() - 5);
                       for (unsigned k = 2; k < 300; ++k) {
                           if (k > 2) {
                               p *= y * y;
                               fact *= Real((2 * k - 1) * (2 * k));
                           }
                           Real t = from_rational(bernoulli_number(2 * k)) * (2 * k - 1) * p / fact;
                           s -= t;
                           if (abs(t) < eps * abs(s))
                               break;
                       }
                       return s;
                   };
                   return integrate_laplace(h, Real(1), ctx).value;
               }),
           {}, "", {"quadrature"}});
    c.add({"I-3.6", "int x log(1+x^2)/(e^{2 pi x}-1) dx = zeta'(-1) - 3/4 + log(2 pi)/2",
           "Eq (3.6)/(6.8), \"also derived in [3] and [12]\"", "bose_quadrature", "euler_maclaurin",
           single([](const Ctx& ctx) { return bose([](const Real& x) { return Real(x * log1p(x * x)); }, Real(1), ctx); },
                  [](const Ctx& ctx) { return Real(zeta_prime(-1, ctx) - frac(3, 4) + log2pi() / 2); }),
           {}, "", {"quadrature"}});
    c.add({"I-3.9", "int arctan(x)/(e^{2 pi x}-1) dx = 1/2 - log(2 pi)/4", "Sec 3, \"from (2.14) we see\"",
           "bose_quadrature", "closed_form",
           single([](const Ctx& ctx) { return bose([](const Real& x) { return Real(atan(x)); }, Real(1), ctx); },
                  [](const Ctx&) { return Real(frac(1, 2) - log2pi() / 4); }),
           {}, "", {"quadrature"}});
    {
        IdentityEntry e{"I-3.5", "zeta'(-1,u) = u(u-1) log u/2 - u^2/4 + int [x log(u^2+x^2) + 2u arctan(x/u)]/(e^{2 pi x}-1) dx",
                        "Eq (3.5), \"previously derived by Adamchik [3]\"", "bose_quadrature", "euler_maclaurin", {}, {},
                        "", {"quadrature"}};
        for (auto [num, den] : {std::pair{1, 2}, {2, 1}})
            e.samples.push_back(S{"u=" + std::to_string(num) + "/" + std::to_string(den),
                                  [num, den](const Ctx& ctx) {
                                      Real u = frac(num, den);
                                      Real q = bose([u](const Real& x) { return Real(x * log(u * u + x * x) + 2 * u * atan2(x, u)); },
                                                    u, ctx);
                                      return Real(u * (u - 1) * log(u) / 2 - u * u / 4 + q);
                                  },
                                  [num, den](const Ctx& ctx) {
                                      return hurwitz_zeta_sderiv(1, Real(-1), frac(num, den), ctx, ZetaDerivRoute::euler_maclaurin).value;
                                  }});
        c.add(e);
    }
    // (3.5) itself, with the u^2 log u / 2 term as printed and with the sign
    // that follows from combining the integral form above with (2.4).
    for (bool printed : {true, false}) {
        IdentityEntry e{printed ? "I-3.5a" : "I-3.5as",
                        printed ? "int x log(u^2+x^2)/(e^{2 pi x}-1) dx = zeta'(-1,u) - u^2 log u/2 - 3u^2/4 + u log(2 pi)/2 - u log Gamma(u) as printed"
                                : "int x log(u^2+x^2)/(e^{2 pi x}-1) dx = zeta'(-1,u) + u^2 log u/2 - 3u^2/4 + u log(2 pi)/2 - u log Gamma(u)",
                        "Eq (3.5), \"Using (2.4) we obtain\"", "bose_quadrature",
                        "euler_maclaurin+binomial_series", {}, {}, "", {"quadrature"}};
        const int sign = printed ? -1 : 1;
        for (auto [num, den] : {std::pair{1, 2}, {2, 1}})
            e.samples.push_back(S{"u=" + std::to_string(num) + "/" + std::to_string(den),
                                  [num, den](const Ctx& ctx) {
                                      Real u = frac(num, den);
                                      return bose([u](const Real& x) { return Real(x * log(u * u + x * x)); }, u, ctx);
                                  },
                                  [num, den, sign](const Ctx& ctx) {
                                      Real u = frac(num, den);
                                      Real zd = hurwitz_zeta_em(Real(-1), u, 1, ctx)[1];
                                      Real lg = log_gamma(u, LogGammaRoute::binomial_series, ctx).value;
                                      return Real(zd + sign * u * u * log(u) / 2 - 3 * u * u / 4 + u * log2pi() / 2 - u * lg);
                                  }});
        c.add(e);
    }
    {
        IdentityEntry e{"I-3.7", "2 int x^2 arctan(x/u)/(e^{2 pi x}-1) dx as a combination of log Gamma, zeta'(-1,u), zeta'(-2,u)",
                        "Eq (3.7), \"also previously evaluated by Adamchik\"", "bose_quadrature",
                        "euler_maclaurin+binet1", {}, {}, "", {"quadrature"}};
        // At u = 1 the printed log u term of (3.5) vanishes; u = 2 uses the
        // corrected sign.
        for (int u : {1, 2})
            e.samples.push_back(S{"u=" + std::to_string(u),
                                  [u](const Ctx& ctx) {
                                      Real v(u);
                                      return bose([v](const Real& x) { return Real(2 * x * x * atan2(x, v)); }, v, ctx);
                                  },
                                  [u](const Ctx& ctx) {
                                      Real v(u), L = log(v), lp = log2pi();
                                      Real lg = log_gamma(v, LogGammaRoute::binet1, ctx).value;
                                      Real z1 = hurwitz_zeta_em(Real(-1), v, 1, ctx)[1];
                                      Real z2 = hurwitz_zeta_em(Real(-2), v, 1, ctx)[1];
                                      return Real(-v * v * L / 2 - v * v * v * (1 - 3 * L) / 9 +
                                                  v * v * (lg - (v - frac(1, 2)) * L + v - lp / 2) +
                                                  2 * v * (z1 + v * v * L / 2 - 3 * v * v / 4 + v * lp / 2 - v * lg) - z2);
                                  }});
        c.add(e);
    }
    c.add({"I-3.8", "d/du gamma_1(u) = psi'(u) + zeta'(2,u) at u = 1, Richardson-extrapolated central differences",
           "Eq (3.8), \"previously noted in equation (4.3.223b)\"", "finite_difference_hasse",
           "bose_integral+abel_plana",
           single(
               [](const Ctx& ctx) {
                   Ctx c2 = difference_context(ctx);
                   PrecisionScope scope(c2);
                   RealFn g1 = [&c2](const Real& u) { return hasse_stieltjes(1, u, c2).value; };
                   return richardson_derivative(g1, Real(1), fd_step(ctx));
               },
               [](const Ctx& ctx) {
                   return Real(trigamma(Real(1), ctx).value +
                               hurwitz_zeta_sderiv(1, Real(2), Real(1), ctx, ZetaDerivRoute::abel_plana).value);
               }),
           {}, "", {"series"}});
    {
        IdentityEntry e{"I-3.10", "zeta(-m,u) = -B_{m+1}(u)/(m+1) for m = 0..4",
                        "Eq (3.10), \"we easily find the well-known formula\"", "hermite_integral",
                        "bernoulli_polynomial", {}, {}, "", {"quadrature"}};
        for (int m = 0; m <= 4; ++m)
            for (int q : {4, 1})
                e.samples.push_back(S{"m=" + std::to_string(m) + ",u=1/" + std::to_string(q),
                                      [m, q](const Ctx& ctx) { return hurwitz_zeta(Real(-m), frac(1, q), ctx).value; },
                                      [m, q](const Ctx&) {
                                          return Real(-bernoulli_poly(m + 1, frac(1, q)) / (m + 1));
                                      }});
        c.add(e);
    }

    // ---- alternating zeta and the binomial sums

    c.add({"I-4.14", "alternating zeta at s = 1 equals log 2", "Eq (4.14), \"we note the well-known limit\"",
           "hasse_series", "mpfr_constant",
           single([](const Ctx& ctx) { return alt_zeta_hasse(Real(1), Real(1), ctx).value; },
                  [](const Ctx&) { return ln2(); }),
           {}, "", {"series"}});
    c.add({"I-4.16", "gamma = log(2)/2 - S_1/log 2 with S_1 the halved binomial log-moment",
           "Eq (4.16), \"expression for Euler's constant was originally\"", "halved_binomial_sum", "limit_oracle",
           single([](const Ctx& ctx) { return Real(ln2() / 2 - log_moment(1, ctx) / ln2()); },
                  [](const Ctx& ctx) { return euler_gamma(ctx); }),
           {}, "", {"series"}});
    c.add({"I-4.16.2", "gamma_1 = -log^2(2)/12 + S_1/2 - S_2/(2 log 2)",
           "Eq (4.16.2), \"also previously determined by Coffey\"", "halved_binomial_sum", "limit_oracle",
           single(
               [](const Ctx& ctx) {
                   Real L = ln2();
                   return Real(-L * L / 12 + log_moment(1, ctx) / 2 - log_moment(2, ctx) / (2 * L));
               },
               [](const Ctx& ctx) { return gamma_n(1, ctx); }),
           {}, "", {"series"}});
    {
        IdentityEntry e{"I-4.20", "(-1)^{n+1} zeta_a^{(n)}(1) = sum_{k<n} C(n,k) gamma_k log^{n-k}2 - log^{n+1}2/(n+1)",
                        "Eq (4.20), \"as shown by Dilcher in [26]\"", "halved_binomial_sum", "limit_oracle", {}, {}, "",
                        {"series"}};
        for (unsigned n : {1u, 2u, 3u})
            e.samples.push_back(S{"n=" + std::to_string(n),
                                  [n](const Ctx& ctx) {
                                      Real d = alt_zeta_derivative(n, ctx);
                                      return (n % 2) ? d : Real(-d);
                                  },
                                  [n](const Ctx& ctx) {
                                      Real L = ln2(), s = 0;
                                      for (unsigned k = 0; k < n; ++k)
                                          s += from_integer(binomial(n, k)) * gamma_n(k, ctx) * pow(L, n - k);
                                      return Real(s - pow(L, n + 1) / (n + 1));
                                  }});
        c.add(e);
    }
    {
        IdentityEntry e{"I-4.21",
                        "zeta_a^{(k)}(1) = k! sum_{r=1}^{k+1} (-1)^{r+1} log^r 2 / r! A_{k-r}, A_n = (-1)^n gamma_n/n!, A_{-1} = 1",
                        "Eq (4.21), \"first reported by Briggs and Chowla [15]\"", "halved_binomial_sum",
                        "limit_oracle", {}, {}, "", {"series"}};
        for (unsigned k : {1u, 2u, 3u})
            e.samples.push_back(S{"k=" + std::to_string(k),
                                  [k](const Ctx& ctx) { return alt_zeta_derivative(k, ctx); },
                                  [k](const Ctx& ctx) {
                                      Real L = ln2(), s = 0, kf = 1, rf = 1;
                                      for (unsigned i = 2; i <= k; ++i)
                                          kf *= i;
                                      for (unsigned r = 1; r <= k + 1; ++r) {
                                          rf *= r;
                                          Real A;
                                          if (r == k + 1) {
                                              A = 1;
                                          } else {
                                              unsigned j = k - r;
                                              Real jf = 1;
                                              for (unsigned i = 2; i <= j; ++i)
                                                  jf *= i;
                                              A = gamma_n(j, ctx) / jf;
                                              if (j % 2)
                                                  A = -A;
                                          }
                                          Real t = pow(L, r) / rf * A;
                                          s += (r % 2) ? t : Real(-t);
                                      }
                                      return Real(kf * s);
                                  }});
        c.add(e);
    }
    {
        IdentityEntry e{"I-4.22",
                        "gamma_n by binomial inversion of the alternating-zeta derivatives; the k = n term carries gamma_n itself",
                        "Eq (4.22), \"applying the binomial inversion formula\"", "limit_oracle", "binomial_inversion", {},
                        {}, "", {"series"}};
        for (unsigned n : {0u, 1u, 2u})
            e.samples.push_back(S{"n=" + std::to_string(n), [n](const Ctx& ctx) { return gamma_n(n, ctx); },
                                  [n](const Ctx& ctx) {
                                      Real L = ln2(), s = 0;
                                      for (unsigned k = 0; k <= n; ++k) {
                                          Real d = alt_zeta_derivative(k, ctx);
                                          Real br = ((k % 2) ? d : Real(-d)) + pow(L, k + 1) / (k + 1) + gamma_n(k, ctx);
                                          Real t = from_integer(binomial(n, k)) * pow(L, n - k) * br;
                                          s += (k % 2) ? Real(-t) : t;
                                      }
                                      return (n % 2) ? Real(-s) : s;
                                  }});
        c.add(e);
    }
    {
        IdentityEntry e{"I-4.22t", "gamma_0..gamma_5 by triangular solve of the forward relation from S_1..S_6",
                        "Eq (4.20), \"as shown by Dilcher in [26]\"", "alt_zeta_recursion", "limit_oracle", {}, {}, "",
                        {"series"}};
        for (unsigned n = 0; n <= 5; ++n)
            e.samples.push_back(S{"n=" + std::to_string(n),
                                  [n](const Ctx& ctx) { return stieltjes_from_altzeta(n, ctx); },
                                  [n](const Ctx& ctx) { return gamma_n(n, ctx); }});
        c.add(e);
    }

    // ---- Stieltjes constants and the Hurwitz zeta derivatives

    {
        IdentityEntry e{"I-5.1", "gamma_1(u) as two Bose-kernel integrals against the binomial double sum",
                        "Eq (5.1), \"particular case for the Stieltjes\"", "bose_quadrature", "hasse_sum", {}, {}, "",
                        {"quadrature"}};
        for (auto [num, den] : {std::pair{1, 2}, {1, 1}, {2, 1}})
            e.samples.push_back(S{"u=" + std::to_string(num) + "/" + std::to_string(den),
                                  [num, den](const Ctx& ctx) {
                                      Real u = frac(num, den), L = log(u);
                                      Real a = bose([u](const Real& x) {
                                          Real r2 = u * u + x * x;
                                          return Real(x * log(r2) / r2);
                                      }, u, ctx);
                                      Real b = bose([u](const Real& x) { return Real(atan2(x, u) / (u * u + x * x)); }, u, ctx);
                                      return Real(L / (2 * u) - L * L / 2 + a - 2 * u * b);
                                  },
                                  [num, den](const Ctx& ctx) {
                                      return stieltjes(1, frac(num, den), StieltjesMethod::hasse_sum, ctx).value;
                                  }});
        c.add(e);
    }
    {
        IdentityEntry e{"I-5.3", "int log(t^2+x^2) arctan(x/t)/(e^{2 pi x}-1) dx = log^2 t/4 - t(log^2 t - 2 log t + 2)/2 - zeta''(0,t)/2",
                        "Eq (5.3), \"We may also write this as\"", "bose_quadrature", "euler_maclaurin", {}, {}, "",
                        {"quadrature"}};
        for (int t : {1, 2})
            e.samples.push_back(S{"t=" + std::to_string(t),
                                  [t](const Ctx& ctx) {
                                      Real v(t);
                                      return bose([v](const Real& x) { return Real(log(v * v + x * x) * atan2(x, v)); }, v, ctx);
                                  },
                                  [t](const Ctx& ctx) {
                                      Real v(t), L = log(v);
                                      Real z2 = hurwitz_zeta_em(Real(0), v, 2, ctx)[2];
                                      return Real(L * L / 4 - v * (L * L - 2 * L + 2) / 2 - z2 / 2);
                                  }});
        c.add(e);
    }
    {
        IdentityEntry e{"I-5.4", "Lerch: log Gamma(u) = zeta'(0,u) + log(2 pi)/2", "Eq (5.4), \"We recall Lerch's identity\"",
                        "binet2", "abel_plana", {}, {}, "", {"quadrature"}};
        for (auto [num, den] : {std::pair{1, 4}, {1, 2}, {1, 1}, {2, 1}, {5, 1}})
            e.samples.push_back(S{"u=" + std::to_string(num) + "/" + std::to_string(den),
                                  [num, den](const Ctx& ctx) {
                                      return log_gamma(frac(num, den), LogGammaRoute::binet2, ctx).value;
                                  },
                                  [num, den](const Ctx& ctx) {
                                      return Real(hurwitz_zeta_sderiv(1, Real(0), frac(num, den), ctx).value + log2pi() / 2);
                                  }});
        c.add(e);
    }

    // ---- Barnes G

    {
        IdentityEntry e{"I-6.4", "Alexeiewsky: int_0^t log Gamma = t(1-t)/2 + t log(2 pi)/2 - log G(1+t) + t log Gamma(t)",
                        "Eq (6.4), \"note Alexeiewsky's theorem\"", "quadrature_of_binomial_series",
                        "weierstrass_product+binet2", {}, {}, "", {"quadrature"}};
        for (auto [num, den] : {std::pair{1, 2}, {1, 1}, {2, 1}})
            e.samples.push_back(S{"t=" + std::to_string(num) + "/" + std::to_string(den),
                                  [num, den](const Ctx& ctx) {
                                      RealFn f = [&ctx](const Real& u) {
                                          return log_gamma(u, LogGammaRoute::binomial_series, ctx).value;
                                      };
                                      return finite_tanh_sinh(f, Real(0), frac(num, den), ctx);
                                  },
                                  [num, den](const Ctx& ctx) {
                                      Real t = frac(num, den);
                                      return Real(t * (1 - t) / 2 + t * log2pi() / 2 -
                                                  barnes_g_log(t, BarnesRoute::weierstrass_6_5, ctx).value +
                                                  t * log_gamma(t, LogGammaRoute::binet2, ctx).value);
                                  }});
        c.add(e);
    }
    {
        IdentityEntry e{"I-6.7", "log G(1+t): Bose-kernel integral against the Weierstrass product",
                        "Eq (6.7), \"using Binet's second formula (2.4) for\"", "bose_quadrature", "weierstrass_product", {}, {}, "",
                        {"quadrature"}};
        for (auto [num, den] : {std::pair{1, 2}, {2, 1}})
            e.samples.push_back(S{"t=" + std::to_string(num) + "/" + std::to_string(den),
                                  [num, den](const Ctx& ctx) {
                                      return barnes_g_log(frac(num, den), BarnesRoute::integral_6_7, ctx).value;
                                  },
                                  [num, den](const Ctx& ctx) {
                                      return barnes_g_log(frac(num, den), BarnesRoute::weierstrass_6_5, ctx).value;
                                  }});
        c.add(e);
    }
    {
        IdentityEntry e{"I-6.10", "log G(1+t) - t log Gamma(t) = zeta'(-1) - zeta'(-1,t)",
                        "Eq (6.10), \"due to Gosper [28] and Vardi\"", "bose_quadrature+binet1", "euler_maclaurin", {}, {},
                        "", {"quadrature"}};
        for (auto [num, den] : {std::pair{1, 2}, {2, 1}})
            e.samples.push_back(S{"t=" + std::to_string(num) + "/" + std::to_string(den),
                                  [num, den](const Ctx& ctx) {
                                      Real t = frac(num, den);
                                      return Real(barnes_g_log(t, BarnesRoute::integral_6_7, ctx).value -
                                                  t * log_gamma(t, LogGammaRoute::binet1, ctx).value);
                                  },
                                  [num, den](const Ctx& ctx) {
                                      return Real(zeta_prime(-1, ctx) - hurwitz_zeta_em(Real(-1), frac(num, den), 1, ctx)[1]);
                                  }});
        c.add(e);
    }
    {
        IdentityEntry e{"I-6.11.1",
                        "int e^{-vt}/t^2 [1/(e^t-1) - 1/t + 1/2 - t/12] dt = log G(1+v) - v log Gamma(v) - v^2/4 + B_2(v) log v/2 + 1/12 - zeta'(-1); at v = 1 this is -zeta'(-1) - 1/6",
                        "Sec 6, \"where I have corrected the sign\"", "laplace_integral",
                        "weierstrass_product+binomial_series", {}, {}, "", {"quadrature"}};
        for (auto [num, den] : {std::pair{1, 1}, {2, 1}, {1, 2}})
            e.samples.push_back(S{"v=" + std::to_string(num) + "/" + std::to_string(den),
                                  [num, den](const Ctx& ctx) {
                                      Integrand1D h([](const Real& t) { return Real(binet_kernel(t, 1) / (t * t)); });
                                      return integrate_laplace(h, frac(num, den), ctx).value;
                                  },
                                  [num, den](const Ctx& ctx) {
                                      Real v = frac(num, den);
                                      return Real(barnes_g_log(v, BarnesRoute::weierstrass_6_5, ctx).value -
                                                  v * log_gamma(v, LogGammaRoute::binomial_series, ctx).value -
                                                  v * v / 4 + bernoulli_poly(2, v) * log(v) / 2 + frac(1, 12) -
                                                  zeta_prime(-1, ctx));
                                  }});
        c.add(e);
    }
    {
        IdentityEntry e{"I-6.14", "int_0^v zeta'(-1,t) dt = -B_3(v)/12 + zeta'(-2,v)/2 + zeta(3)/(8 pi^2); zero at v = 1",
                        "Eq (6.13), \"originally derived by Adamchik [2]\"", "quadrature_of_euler_maclaurin",
                        "abel_plana", {}, {}, "", {"quadrature"}};
        for (auto [num, den] : {std::pair{1, 1}, {1, 2}})
            e.samples.push_back(S{"v=" + std::to_string(num) + "/" + std::to_string(den),
                                  [num, den](const Ctx& ctx) {
                                      RealFn f = [&ctx](const Real& t) { return hurwitz_zeta_em(Real(-1), t, 1, ctx)[1]; };
                                      return finite_tanh_sinh(f, Real(0), frac(num, den), ctx);
                                  },
                                  [num, den](const Ctx& ctx) {
                                      Real v = frac(num, den), P = pi();
                                      return Real(-bernoulli_poly(3, v) / 12 +
                                                  hurwitz_zeta_sderiv(1, Real(-2), v, ctx).value / 2 +
                                                  zeta_value(3, ctx) / (8 * P * P));
                                  }});
        c.add(e);
    }
    c.add({"I-6.17", "int x^2 arctan(x)/(e^{2 pi x}-1) dx = -11/36 + log(2 pi)/4 + zeta'(-1) + zeta(3)/(8 pi^2)",
           "Eq (6.17), \"concurs with the more general\"", "bose_quadrature", "euler_maclaurin",
           single([](const Ctx& ctx) { return bose([](const Real& x) { return Real(x * x * atan(x)); }, Real(1), ctx); },
                  [](const Ctx& ctx) {
                      Real P = pi();
                      return Real(-frac(11, 36) + log2pi() / 4 + zeta_prime(-1, ctx) + zeta_value(3, ctx) / (8 * P * P));
                  }),
           {}, "", {"quadrature"}});
    {
        IdentityEntry e{"I-6.20", "int x^{2k-1}/(e^{2 pi x}-1) dx = (-1)^{k+1} B_{2k}/(4k)",
                        "Eq (6.20), \"representation for the polylogarithm function\"", "bose_quadrature",
                        "bernoulli_number", {}, {}, "", {"quadrature"}};
        for (int k = 1; k <= 4; ++k)
            e.samples.push_back(S{"k=" + std::to_string(k),
                                  [k](const Ctx& ctx) { return polylog_bose(Real(2 * k), ctx); },
                                  [k](const Ctx&) {
                                      Real b = from_rational(bernoulli_number(2 * k)) / (4 * k);
                                      return (k % 2) ? b : Real(-b);
                                  }});
        c.add(e);
    }
    c.add({"I-6.21", "int x/(e^{2 pi x}-1) dx = 1/24", "Eq (6.21), \"the required particular case\"",
           "bose_quadrature", "exact",
           single([](const Ctx& ctx) { return polylog_bose(Real(2), ctx); }, [](const Ctx&) { return frac(1, 24); }), {},
           "", {"quadrature"}});
    {
        IdentityEntry e{"I-6.24", "G'(1+t)/G(1+t) = log(2 pi)/2 + 1/2 - t + t psi(t), by finite differences",
                        "Eq (6.24), \"as reported in [49, p.264]\"", "finite_difference_product", "bose_integral", {}, {},
                        "", {"series"}};
        for (auto [num, den] : {std::pair{1, 2}, {1, 1}, {2, 1}})
            e.samples.push_back(S{"t=" + std::to_string(num) + "/" + std::to_string(den),
                                  [num, den](const Ctx& ctx) {
                                      Ctx c2 = difference_context(ctx);
                                      PrecisionScope scope(c2);
                                      RealFn g = [&c2](const Real& t) {
                                          return barnes_g_log(t, BarnesRoute::weierstrass_6_5, c2).value;
                                      };
                                      return richardson_derivative(g, frac(num, den), fd_step(ctx));
                                  },
                                  [num, den](const Ctx& ctx) {
                                      Real t = frac(num, den);
                                      return Real(log2pi() / 2 + frac(1, 2) - t + t * digamma(t, ctx).value);
                                  }});
        c.add(e);
    }

    // ---- Ramanujan's series, Si/Ci representations

    c.add({"I-7.2", "-zeta'(s) = 1/(s-1)^2 + sum_{n<=12} (-1)^n (s-1)^n gamma_{n+1}/n! at s = 3/2",
           "Eq (7.2), \"Ramanujan had determined that\"", "abel_plana", "hasse_sum",
           single([](const Ctx& ctx) { return Real(-hurwitz_zeta_sderiv(1, frac(3, 2), Real(1), ctx).value); },
                  [](const Ctx& ctx) {
                      Real h = frac(1, 2), s = 1 / (h * h), fact = 1;
                      for (unsigned n = 0; n <= 12; ++n) {
                          if (n > 0)
                              fact *= n;
                          Real t = pow(h, n) / fact * stieltjes(n + 1, Real(1), StieltjesMethod::hasse_sum, ctx).value;
                          s += (n % 2) ? Real(-t) : t;
                      }
                      return s;
                  }),
           -15, "the series is cut after n = 12; the first omitted term is below 1e-16", {"series"}});
    c.add({"I-8.2", "log Gamma(1/4): Bourguet's Ci/si series against Binet's second formula",
           "Eq (8.2), \"also reported by Nörlund [38, p.114]\"", "bourguet", "binet2",
           single([](const Ctx& ctx) { return log_gamma(frac(1, 4), LogGammaRoute::bourguet, ctx).value; },
                  [](const Ctx& ctx) { return log_gamma(frac(1, 4), LogGammaRoute::binet2, ctx).value; }),
           -6, "declared loose: oscillatory Ci/si series", {"series", "slow"}});
    {
        IdentityEntry e{"I-8.3", "2 int arctan(x/u)/(e^{2 pi x}-1) dx = (1/pi) sum (1/n) int sin(2 n pi x)/(x+u) dx",
                        "Eq (8.3), \"Comparing (2.4) with (8.1)\"", "bose_quadrature", "sine_cosine_series", {}, {}, "",
                        {"series"}};
        for (int u : {1, 2})
            e.samples.push_back(S{"u=" + std::to_string(u),
                                  [u](const Ctx& ctx) {
                                      Real v(u);
                                      return bose([v](const Real& x) { return Real(2 * atan2(x, v)); }, v, ctx);
                                  },
                                  [u](const Ctx& ctx) {
                                      Real v(u);
                                      return Real(log_gamma(v, LogGammaRoute::bourguet, ctx).value - stirling_main(v));
                                  }});
        c.add(e);
    }
    c.add({"I-8.5", "zeta'(-1,1/4) from the Ci/si series against the Abel-Plana integral",
           "Eq (8.5), \"reported by Elizalde [27] in 1985\"", "sine_cosine_series", "abel_plana",
           single([](const Ctx& ctx) { return zeta_deriv_m1_sine_cosine(frac(1, 4), ctx); },
                  [](const Ctx& ctx) { return hurwitz_zeta_sderiv(1, Real(-1), frac(1, 4), ctx).value; }),
           -6, "declared loose: oscillatory Ci/si series", {"series", "slow"}});
    c.add({"I-8.6", "sum psi(n)/n^2 = zeta(3) - gamma zeta(2)", "Eq (8.6), \"Ogreid and Osland [39] report\"",
           "harmonic_series", "zeta_constants",
           single(
               [](const Ctx& ctx) {
                   // psi(n) = H_n - 1/n - gamma
                   return Real(harmonic_shifted_square_sum(Real(0), ctx) - zeta_value(3, ctx) -
                               euler_gamma(ctx) * zeta_value(2, ctx));
               },
               [](const Ctx& ctx) { return Real(zeta_value(3, ctx) - euler_gamma(ctx) * zeta_value(2, ctx)); }),
           {}, "", {"series"}});
    {
        IdentityEntry e{"I-8.7", "int v e^{-av}/(b^2+v^2) dv = -[Ci(ab) cos(ab) + si(ab) sin(ab)]",
                        "Eq (8.7), \"We have from G&R [29, p.338]\"", "laplace_integral", "sine_cosine_series", {}, {},
                        "", {"quadrature"}};
        for (auto [a2pi, b] : {std::pair{true, 1}, {false, 3}})
            e.samples.push_back(S{std::string(a2pi ? "a=2pi" : "a=1") + ",b=" + std::to_string(b),
                                  [a2pi, b](const Ctx& ctx) {
                                      Real a = a2pi ? Real(2 * pi()) : Real(1), bb(b);
                                      Integrand1D h([bb](const Real& v) { return Real(v / (bb * bb + v * v)); });
                                      return integrate_laplace(h, a, ctx).value;
                                  },
                                  [a2pi, b](const Ctx& ctx) {
                                      Real z = (a2pi ? Real(2 * pi()) : Real(1)) * b;
                                      SineCosineIntegrals sc = sin_cos_integrals(z, ctx);
                                      return Real(-(sc.Ci * cos(z) + sc.si * sin(z)));
                                  }});
        c.add(e);
    }
    {
        IdentityEntry e{"I-8.N", "psi(a) = log a - 1/(2a) + 2 sum [cos(z) Ci(z) + sin(z) si(z)], z = 2 n pi a",
                        "Sec 8, \"appears in Nörlund's book [38, p.108]\"", "sine_cosine_series", "bose_integral", {}, {},
                        "", {"series"}};
        for (auto [num, den] : {std::pair{2, 1}, {1, 2}})
            e.samples.push_back(S{"a=" + std::to_string(num) + "/" + std::to_string(den),
                                  [num, den](const Ctx& ctx) { return digamma_sine_cosine(frac(num, den), ctx); },
                                  [num, den](const Ctx& ctx) { return digamma(frac(num, den), ctx).value; }});
        c.add(e);
    }
    c.add({"I-8.P", "zeta(3) = 7 pi^3/180 - 2 sum 1/(n^3 (e^{2 pi n}-1))", "Sec 8, \"Plouffe (see [40] and [41])\"",
           "plouffe_series", "euler_maclaurin",
           single([](const Ctx& ctx) { return plouffe_zeta3(ctx); }, [](const Ctx& ctx) { return zeta_value(3, ctx); }),
           {}, "", {"series"}});

    // ---- harmonic sums and double integrals

    auto kanemitsu_printed = [](const Ctx& ctx) {
        Real g = euler_gamma(ctx);
        return Real(-(zeta_value(2, ctx) + g * g - 2 * gamma_n(1, ctx)) / 2);
    };
    auto kanemitsu_corrected = [](const Ctx& ctx) {
        Real g = euler_gamma(ctx);
        return Real(-(zeta_value(2, ctx) + g * g + 2 * gamma_n(1, ctx)) / 2);
    };
    c.add({"I-9.1", "sum H_n (log((n+1)/n) - 1/n) = -[zeta(2) + gamma^2 - 2 gamma_1]/2 as printed",
           "Eq (9.1), \"Kanemitsu et al. [38] showed\"", "harmonic_series", "limit_oracle",
           single([](const Ctx& ctx) { return kanemitsu_sum(ctx); }, kanemitsu_printed), {}, "", {"series"}});
    c.add({"I-9.1s", "sum H_n (log((n+1)/n) - 1/n) = -[zeta(2) + gamma^2 + 2 gamma_1]/2",
           "Eq (9.1), \"Kanemitsu et al. [38] showed\"", "harmonic_series", "limit_oracle",
           single([](const Ctx& ctx) { return kanemitsu_sum(ctx); }, kanemitsu_corrected), {}, "", {"series"}});
    c.add({"I-9.2", "unit-square double integral of the Kanemitsu sum = -[zeta(2) + gamma^2 - 2 gamma_1]/2 as printed",
           "Eq (9.2), \"We therefore get\"", "unit_square_quadrature", "limit_oracle",
           single(kanemitsu_double_integral, kanemitsu_printed), -10,
           "two-dimensional rule at 14 target digits", {"double_integral"}});
    c.add({"I-9.2s", "unit-square double integral of the Kanemitsu sum = -[zeta(2) + gamma^2 + 2 gamma_1]/2",
           "Eq (9.2), \"We therefore get\"", "unit_square_quadrature", "limit_oracle",
           single(kanemitsu_double_integral, kanemitsu_corrected), -10, "two-dimensional rule at 14 target digits",
           {"double_integral"}});
    c.add({"I-9.4a", "gamma_1 as a symmetric double integral over the unit square",
           "Sec 9, \"complements the double integral representation\"", "unit_square_quadrature", "limit_oracle",
           single(gamma1_double_integral, [](const Ctx& ctx) { return gamma_n(1, ctx); }), -8,
           "endpoint-singular two-dimensional rule", {"double_integral"}});
    c.add({"I-9.5a", "gamma = -int int (1-x)/((1-xy) log(xy)) dx dy", "Eq (9.5), \"by Guillaera and Sondow [30]\"",
           "unit_square_quadrature", "limit_oracle",
           single(euler_double_integral, [](const Ctx& ctx) { return euler_gamma(ctx); }), -10,
           "endpoint-singular two-dimensional rule", {"double_integral"}});
    c.add({"I-9.6", "gamma = -(1/2) int int (2-x-y)/((1-xy) log(xy)) dx dy",
           "Eq (9.6), \"symmetry may of course be easily restored\"", "unit_square_quadrature", "limit_oracle",
           single(euler_symmetric_double_integral, [](const Ctx& ctx) { return euler_gamma(ctx); }), -10,
           "endpoint-singular two-dimensional rule", {"double_integral"}});
    c.add({"I-9.5b", "int_0^1 (psi' - psi^2 - 2 gamma psi) dx = 2 zeta(2) + 2 gamma_1 as printed",
           "Sec 9, \"apparently new integral representation\"", "quadrature_of_series", "limit_oracle",
           single(digamma_square_integral,
                  [](const Ctx& ctx) { return Real(2 * zeta_value(2, ctx) + 2 * gamma_n(1, ctx)); }),
           {}, "", {"quadrature"}});
    c.add({"I-9.5bs", "int_0^1 (psi' - psi^2 - 2 gamma psi) dx = 2 zeta(2) - 2 gamma_1",
           "Sec 9, \"apparently new integral representation\"", "quadrature_of_series", "limit_oracle",
           single(digamma_square_integral,
                  [](const Ctx& ctx) { return Real(2 * zeta_value(2, ctx) - 2 * gamma_n(1, ctx)); }),
           {}, "", {"quadrature"}});
    c.add({"I-9.T", "sum H_n (1/n - 1/(n+1)) = zeta(2)", "Sec 9, \"and we easily see that\"", "harmonic_series",
           "euler_maclaurin",
           single([](const Ctx& ctx) { return harmonic_telescoping_sum(ctx); },
                  [](const Ctx& ctx) { return zeta_value(2, ctx); }),
           {}, "", {"series"}});
    c.add({"I-9.E", "sum H_n/n^2 = 2 zeta(3)", "Sec 9, \"the well-known Euler sum\"", "harmonic_series",
           "euler_maclaurin",
           single([](const Ctx& ctx) { return euler_sum_h2(ctx); },
                  [](const Ctx& ctx) { return Real(2 * zeta_value(3, ctx)); }),
           {}, "", {"series"}});
    {
        IdentityEntry e{"I-9.7", "sum_{n>=0} psi(n+1)/(x+n)^2 = psi(x) zeta(2,x) + zeta(3,x)",
                        "Eq (9.7), \"as previously noted by Coffey [18]\"", "harmonic_series", "hermite_integral", {}, {},
                        "", {"series"}};
        for (auto [num, den] : {std::pair{1, 1}, {1, 2}, {2, 1}})
            e.samples.push_back(S{"x=" + std::to_string(num) + "/" + std::to_string(den),
                                  [num, den](const Ctx& ctx) {
                                      Real x = frac(num, den);
                                      return Real(harmonic_shifted_square_sum(x, ctx) -
                                                  euler_gamma(ctx) * hurwitz_zeta_em(Real(2), x, 0, ctx)[0]);
                                  },
                                  [num, den](const Ctx& ctx) {
                                      Real x = frac(num, den);
                                      return Real(digamma(x, ctx).value * hurwitz_zeta(Real(2), x, ctx).value +
                                                  hurwitz_zeta(Real(3), x, ctx).value);
                                  }});
        c.add(e);
    }
    return c;
}

} // namespace

const Catalog& builtin_catalog()
{
    static const Catalog c = build();
    return c;
}

EntryResult run_entry(const IdentityEntry& e, const PrecisionContext& ctx)
{
    PrecisionScope scope(ctx);
    EntryResult r;
    r.id = e.id;
    r.description = e.description;
    r.paper_anchor = e.paper_anchor;
    r.lhs_route = e.lhs_route;
    r.rhs_route = e.rhs_route;
    r.tolerance = e.tolerance(ctx);
    const Real nan = std::numeric_limits<Real>::quiet_NaN();
    r.lhs = r.rhs = r.abs_error = nan;

    auto t0 = std::chrono::steady_clock::now();
    bool worst_set = false;
    for (const auto& s : e.samples) {
        SampleResult sr{s.label, nan, nan, nan};
        try {
            sr.lhs = s.lhs(ctx);
            sr.rhs = s.rhs(ctx);
            sr.abs_error = abs(sr.lhs - sr.rhs);
        } catch (const std::exception& ex) {
            if (r.error.empty())
                r.error = (s.label.empty() ? "" : s.label + ": ") + ex.what();
        }
        bool worse = !worst_set || isnan(sr.abs_error) ||
                     (!isnan(r.abs_error) && sr.abs_error > r.abs_error);
        if (worse) {
            r.lhs = sr.lhs;
            r.rhs = sr.rhs;
            r.abs_error = sr.abs_error;
            worst_set = true;
        }
        r.samples.push_back(std::move(sr));
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    r.pass = r.error.empty() && !isnan(r.abs_error) && r.abs_error <= r.tolerance;
    return r;
}

IdentityReport run_catalog(const Catalog& catalog, const CatalogFilter& filter, const PrecisionContext& ctx)
{
    ctx.validate();
    for (const auto& id : filter.ids)
        if (!catalog.find(id))
            throw std::invalid_argument("unknown identity id: " + id);
    const auto tags = catalog.all_tags();
    for (const auto& t : filter.tags)
        if (!tags.count(t))
            throw std::invalid_argument("unknown tag: " + t);

    const bool everything = filter.ids.empty() && filter.tags.empty();
    const bool slow_tag = std::find(filter.tags.begin(), filter.tags.end(), "slow") != filter.tags.end();

    IdentityReport rep;
    rep.digits = ctx.target_digits;
    for (const auto& e : catalog.entries()) {
        bool by_id = std::find(filter.ids.begin(), filter.ids.end(), e.id) != filter.ids.end();
        bool by_tag = std::any_of(filter.tags.begin(), filter.tags.end(), [&](const auto& t) { return e.has_tag(t); });
        if (!everything && !by_id && !by_tag)
            continue;
        ++rep.summary.total;
        if (e.has_tag("slow") && !by_id && !slow_tag && !filter.include_slow) {
            ++rep.summary.skipped;
            continue;
        }
        rep.entries.push_back(run_entry(e, ctx));
        if (rep.entries.back().pass)
            ++rep.summary.passed;
        else
            ++rep.summary.failed;
    }
    return rep;
}

} // namespace stj
