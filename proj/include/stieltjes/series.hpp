#pragma once

// Exact Bernoulli machinery, binomial (Hasse) double sums, the
// Euler-Maclaurin reference evaluators and a few auxiliary series.

#include "stieltjes/precision.hpp"

#include <functional>
#include <vector>

namespace stj {

struct SumDiagnostics {
    long terms_used = 0;
    Real max_term_magnitude = 0;
    // ceil(log10(max_term_magnitude / |result|)), floored at 0.
    int cancellation_digits_lost = 0;
};

struct SeriesValue {
    Real value;
    SumDiagnostics diag;
};

Integer binomial(unsigned n, unsigned k);

// Exact B_n with B_1 = -1/2. Cached; safe to call from several threads.
Rational bernoulli_number(unsigned n);

// B_n(u) = sum_k C(n,k) B_k u^{n-k}, evaluated at the current precision.
Real bernoulli_poly(unsigned n, const Real& u);

// Exact H_n.
Rational harmonic(unsigned n);

// gamma_n(u) = -1/(n+1) sum_i 1/(i+1) sum_j C(i,j) (-1)^j log^{n+1}(u+j).
//
// The raw outer sum converges like 1/i^2, far too slowly for the working
// tolerance. The series is therefore applied at a = u + M, M chosen so the
// outer terms fall below tolerance near i = 24, and shifted back with
// gamma_n(u) = gamma_n(u+M) + sum_{k<M} log^n(u+k)/(u+k).
// The outer sum stops after three consecutive terms below tolerance, cap 64.
// Throws PrecisionExhausted when the digits lost to cancellation exceed
// ctx.guard_digits.
SeriesValue hasse_stieltjes(unsigned n, const Real& u, const PrecisionContext& ctx);

// gamma_n(u) from the defining limit with an Euler-Maclaurin tail through
// B_6. N starts at 10^4 and doubles until the first omitted correction is
// below tolerance and the values at N and 2N agree. Reference evaluator for
// every gamma_n(u) in the tests.
Real limit_stieltjes_oracle(unsigned n, const Real& u, const PrecisionContext& ctx);

// Same, also reporting the N that was accepted.
Real limit_stieltjes_oracle(unsigned n, const Real& u, const PrecisionContext& ctx, long& n_used);

// zeta_a(s, u) = sum_i 2^{-(i+1)} sum_j C(i,j) (-1)^j (u+j)^{-s}.
// Terms shrink like 2^{-i}, so the outer cap is about 3.4 * working digits.
SeriesValue alt_zeta_hasse(const Real& s, const Real& u, const PrecisionContext& ctx);

// S_k = sum_i 2^{-(i+1)} sum_j C(i,j) (-1)^j log^k(1+j)/(1+j).
// The k-th derivative of zeta_a at 1 is (-1)^k S_k.
SeriesValue alt_zeta_log_moment(unsigned k, const PrecisionContext& ctx);

// S_n = log^{n+1}2/(n+1) - sum_{k<n} C(n,k) gamma_k log^{n-k}2, solved for
// gamma_0..gamma_n from S_1..S_{n+1}.
std::vector<Real> stieltjes_from_altzeta_all(unsigned n, const PrecisionContext& ctx);
Real stieltjes_from_altzeta(unsigned n, const PrecisionContext& ctx);

// Derivatives d^r/ds^r zeta(s, u) for r = 0..order by Euler-Maclaurin
// summation carried out in truncated Taylor arithmetic in s.
std::vector<Real> hurwitz_zeta_em(const Real& s, const Real& u, unsigned order,
                                  const PrecisionContext& ctx);

// Cached reference constants at ctx precision.
Real euler_gamma(const PrecisionContext& ctx);
Real zeta_value(int s, const PrecisionContext& ctx);
Real zeta_prime(int s, const PrecisionContext& ctx);

// sum_{n>M} [sum_p plain[p] n^{-p} + log n sum_p logs[p] n^{-p}] through
// Hurwitz zeta values at M+1. Index p of both vectors is the power.
Real asymptotic_tail(const std::vector<Real>& plain, const std::vector<Real>& logs, long M,
                     const PrecisionContext& ctx);

// Coefficients of H_n ~ log n + gamma + 1/(2n) - sum B_{2k}/(2k n^{2k}),
// plain part only (index = power of 1/n), up to power p_max.
std::vector<Real> harmonic_asymptotic(int p_max, const PrecisionContext& ctx);

// S = sum_{n>=1} H_n (log((n+1)/n) - 1/n).
Real kanemitsu_sum(const PrecisionContext& ctx);

// sum_{n>=1} H_n (1/n - 1/(n+1)).
Real harmonic_telescoping_sum(const PrecisionContext& ctx);

// sum_{n>=1} H_n / n^2.
Real euler_sum_h2(const PrecisionContext& ctx);

// sum_{n>=1} H_n / (x+n)^2 for 0 <= x <= 5.
Real harmonic_shifted_square_sum(const Real& x, const PrecisionContext& ctx);

// 7 pi^3/180 - 2 sum 1/(n^3 (e^{2 pi n} - 1)).
Real plouffe_zeta3(const PrecisionContext& ctx);

} // namespace stj
