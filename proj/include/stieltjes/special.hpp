#pragma once

// Named functions, each with at least two independent routes built on the
// quadrature and series engines. Domain is real u > 0 throughout.

#include "stieltjes/quadrature.hpp"
#include "stieltjes/series.hpp"

#include <string>
#include <variant>

namespace stj {

enum class StieltjesMethod { coffey_integral, hasse_sum, limit_euler_maclaurin, alt_zeta_recursion };

std::string to_string(StieltjesMethod m);
// Accepts "coffey", "hasse", "limit", "altzeta" and the full enum names.
StieltjesMethod parse_stieltjes_method(const std::string& s);

struct FunctionValue {
    Real value;
    std::string route;
    std::variant<SumDiagnostics, QuadratureResult> diagnostics;

    // One human-readable line: route, node or term counts, error indicators.
    std::string diagnostic_line() const;
};

// gamma_n(u). alt_zeta_recursion is only defined at u = 1. The hasse route
// retries at raised precision when cancellation exceeds the guard digits.
FunctionValue stieltjes(unsigned n, const Real& u, StieltjesMethod method,
                        const PrecisionContext& ctx);

// Cheapest sensible route for the given arguments.
StieltjesMethod default_stieltjes_method(const Real& u, const PrecisionContext& ctx);

// 1/(e^t - 1) - 1/t + 1/2 minus the first `drop` terms of its Bernoulli
// series sum_k B_{2k} t^{2k-1}/(2k)!; the series itself is used below t = 1/4.
Real binet_kernel(const Real& t, int drop = 0);

enum class DigammaRoute { bose_integral, laplace };
enum class TrigammaRoute { bose_integral, hurwitz_zeta };
enum class LogGammaRoute { binet2, binet1, bourguet, binomial_series };
enum class ZetaRoute { hermite, euler_maclaurin };
enum class ZetaDerivRoute { abel_plana, euler_maclaurin };
enum class BarnesRoute { integral_6_7, weierstrass_6_5, gosper_vardi_6_10 };

std::string to_string(LogGammaRoute r);
std::string to_string(BarnesRoute r);

// psi(u) = -1/(2u) + log u - 2 int x/((u^2+x^2)(e^{2 pi x}-1)), or the Laplace
// form with the Binet kernel.
FunctionValue digamma(const Real& u, const PrecisionContext& ctx,
                      DigammaRoute route = DigammaRoute::bose_integral);

// psi'(u) = 1/(2u^2) + 1/u + 4u int x/((u^2+x^2)^2 (e^{2 pi x}-1)), or zeta(2,u).
FunctionValue trigamma(const Real& u, const PrecisionContext& ctx,
                       TrigammaRoute route = TrigammaRoute::bose_integral);

// log Gamma(u).
//   binet2:          Stirling main term + 2 int arctan(x/u)/(e^{2 pi x}-1)
//   binet1:          Stirling main term + Laplace integral of binet_kernel(t)/t
//   bourguet:        Stirling main term + (1/pi) sum f(2 n pi u)/n, explicit
//                    head plus asymptotic tail in Hurwitz zeta values
//   binomial_series: sum_n 1/(n+1) sum_k C(n,k)(-1)^k (a+k)log(a+k) + 1/2 - a
//                    + log(2 pi)/2 at a = u + M, shifted back by sum log(u+k)
FunctionValue log_gamma(const Real& u, LogGammaRoute route, const PrecisionContext& ctx);

// zeta(s, u) by Hermite's integral or by Euler-Maclaurin summation.
FunctionValue hurwitz_zeta(const Real& s, const Real& u, const PrecisionContext& ctx,
                           ZetaRoute route = ZetaRoute::hermite);

// d/ds zeta(s,u) (order 1) or d^2/ds^2 (order 2). The abel_plana route
// differentiates the Abel-Plana representation under the integral and works
// on the real form of the integrand; at order 2 and s = 0 this is the closed
// real form with log(u^2+x^2) arctan(x/u).
FunctionValue hurwitz_zeta_sderiv(unsigned order, const Real& s, const Real& u,
                                  const PrecisionContext& ctx,
                                  ZetaDerivRoute route = ZetaDerivRoute::abel_plana);

// log G(1+t) for the Barnes double gamma function.
FunctionValue barnes_g_log(const Real& t, BarnesRoute route, const PrecisionContext& ctx);

struct SineCosineIntegrals {
    Real Si;
    Real si;
    Real Ci;
};

// Power series for x <= 8, auxiliary Laplace integrals above.
SineCosineIntegrals sin_cos_integrals(const Real& x, const PrecisionContext& ctx);

// f(x) = int_0^inf e^{-xt}/(1+t^2) dt and g(x) = int_0^inf t e^{-xt}/(1+t^2) dt.
struct AuxiliaryFG {
    Real f;
    Real g;
};
AuxiliaryFG auxiliary_fg(const Real& x, const PrecisionContext& ctx);

// (1/pi) sum_{n<=N} (1/n)[sin(2n pi u) Ci(2n pi u) - cos(2n pi u) si(2n pi u)].
Real log_gamma_bourguet_terms(const Real& u, long N, const PrecisionContext& ctx);

// zeta'(-1, x) from the Ci/si series: -zeta(-1,x) log x - x^2/4 + 1/12
// - (1/(2 pi^2)) sum (1/n^2)[cos(z) Ci(z) + sin(z) si(z)], z = 2 n pi x.
Real zeta_deriv_m1_sine_cosine(const Real& x, const PrecisionContext& ctx);

// psi(a) = log a - 1/(2a) + 2 sum [cos(z) Ci(z) + sin(z) si(z)], z = 2 n pi a.
Real digamma_sine_cosine(const Real& a, const PrecisionContext& ctx);

// int_0^inf x^{s-1}/(e^{2 pi x}-1) dx, which equals zeta(s) Gamma(s)/(2 pi)^s.
Real polylog_bose(const Real& s, const PrecisionContext& ctx);

} // namespace stj
