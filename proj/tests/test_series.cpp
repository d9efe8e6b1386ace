#include "oracles.hpp"

#include "stieltjes/series.hpp"
#include "stieltjes/special.hpp"

using namespace stj;
using testutil::check_close;
using testutil::ref;

TEST_CASE("test oracles reproduce the frozen references")
{
    PrecisionScope scope(60);
    const Real tol = pow10(-44);
    for (unsigned n = 0; n < 6; ++n) {
        CAPTURE(n);
        check_close(oracle::stieltjes(n, Real(1)), ref(frozen::gamma_n[n]), tol);
    }
    for (unsigned n = 0; n < 4; ++n) {
        CAPTURE(n);
        check_close(oracle::stieltjes(n, Real(1) / 2), ref(frozen::gamma_n_half[n]), tol);
    }
    check_close(oracle::stieltjes(20, Real(1), 400, 30), ref(frozen::gamma_20), pow10(-40));
    check_close(oracle::hurwitz_zeta(Real(3), Real(1)), ref(frozen::zeta3), tol);
    check_close(oracle::hurwitz_zeta(Real(3) / 2, Real(1) / 2), ref(frozen::zeta_3half_half), tol);
    check_close(oracle::log_gamma(Real(1) / 4), ref(frozen::lgamma_quarter), tol);
    check_close(oracle::log_gamma(Real(1) / 2), log(pi()) / 2, tol);
}

TEST_CASE("Bernoulli numbers")
{
    CHECK(bernoulli_number(0) == 1);
    CHECK(bernoulli_number(1) == Rational(-1, 2));
    CHECK(bernoulli_number(2) == Rational(1, 6));
    CHECK(bernoulli_number(3) == 0);
    CHECK(bernoulli_number(12) == Rational(-691, 2730));
    for (unsigned k = 1; k < 30; ++k)
        CHECK(bernoulli_number(2 * k + 1) == 0);
    for (unsigned n = 0; n <= 80; ++n) {
        CAPTURE(n);
        CHECK(bernoulli_number(n) == oracle::bernoulli_table()[n]);
    }
}

TEST_CASE("Bernoulli recurrence holds exactly")
{
    for (unsigned n = 2; n <= 60; ++n) {
        Rational s = 0;
        for (unsigned k = 0; k < n; ++k)
            s += Rational(binomial(n, k)) * bernoulli_number(k);
        CAPTURE(n);
        CHECK(s == 0);
    }
}

TEST_CASE("Bernoulli polynomials")
{
    PrecisionScope scope(50);
    const Real eps = pow10(-45);
    check_close(bernoulli_poly(1, Real(1) / 2), Real(0), eps);
    check_close(bernoulli_poly(2, Real(1)), Real(1) / 6, eps);
    check_close(bernoulli_poly(3, Real(1) / 2), Real(0), eps);
    // B_n(u+1) - B_n(u) = n u^{n-1}.
    for (unsigned n = 1; n <= 8; ++n)
        for (const Real& u : {Real(1) / 4, Real(2), Real(-3) / 2}) {
            CAPTURE(n);
            check_close(bernoulli_poly(n, u + 1) - bernoulli_poly(n, u), n * pow(u, n - 1), eps * 1e3);
        }
}

TEST_CASE("harmonic numbers")
{
    CHECK(harmonic(1) == 1);
    CHECK(harmonic(4) == Rational(25, 12));
    CHECK_THROWS_AS(harmonic(0), DomainError);

    // n (H_n - log n - gamma) -> 1/2, Richardson step over n = 10^3, 10^4.
    PrecisionScope scope(50);
    Real g = oracle::euler_gamma();
    auto a = [&](unsigned n) { return Real(n * (from_rational(harmonic(n)) - log(Real(n)) - g)); };
    Real a3 = a(1000), a4 = a(10000);
    CHECK(abs(a3 - Real(1) / 2) < 1e-4);
    CHECK(abs(a4 - Real(1) / 2) < 1e-5);
    Real extrapolated = (10 * a4 - a3) / 9;
    CHECK(abs(extrapolated - Real(1) / 2) < 1e-8);
}

TEST_CASE("Kronecker degenerate case of the binomial double sum")
{
    Rational s = 0;
    for (unsigned i = 0; i <= 40; ++i) {
        Integer inner = 0;
        for (unsigned j = 0; j <= i; ++j)
            inner += (j % 2 ? -1 : 1) * binomial(i, j);
        CHECK(inner == (i == 0 ? 1 : 0));
        s += Rational(inner, Integer(i + 1));
    }
    CHECK(s == 1);
}

TEST_CASE("limit oracle")
{
    PrecisionContext ctx;
    PrecisionScope scope(ctx);
    const Real tol = ctx.tolerance();
    long N = 0;
    Real g = limit_stieltjes_oracle(0, Real(1), ctx, N);
    CHECK(N >= 10000);
    check_close(g, ref(frozen::gamma_n[0]), tol);
    check_close(limit_stieltjes_oracle(1, Real(1), ctx), ref(frozen::gamma_n[1]), tol);
    check_close(limit_stieltjes_oracle(0, Real(2), ctx), ref(frozen::gamma_n[0]) - 1, tol);
    CHECK_THROWS_AS(limit_stieltjes_oracle(0, Real(0), ctx), DomainError);
}

TEST_CASE("Hasse sums")
{
    PrecisionContext ctx;
    PrecisionScope scope(ctx);
    const Real tol = ctx.tolerance();

    SeriesValue g0 = hasse_stieltjes(0, Real(1), ctx);
    check_close(g0.value, ref(frozen::gamma_n[0]), tol);
    CHECK(g0.diag.terms_used > 0);

    Real g = ref(frozen::gamma_n[0]), g1 = ref(frozen::gamma_n[1]), L = ln2();
    check_close(hasse_stieltjes(1, Real(1) / 2, ctx).value, g1 - L * L - 2 * g * L, tol);

    // gamma_0(u) = -psi(u).
    for (const Real& u : {Real(1) / 4, Real(3)})
        check_close(hasse_stieltjes(0, u, ctx).value, -digamma(u, ctx).value, tol);

    CHECK_THROWS_AS(hasse_stieltjes(0, Real(-1), ctx), DomainError);
    CHECK_THROWS_AS(hasse_stieltjes(0, Real(1), PrecisionContext{50, 45, 5}), DomainError);
}

TEST_CASE("Hasse diagnostics report the observed cancellation")
{
    PrecisionContext ctx;
    PrecisionScope scope(ctx);
    for (unsigned n : {0u, 3u, 8u}) {
        SeriesValue v = hasse_stieltjes(n, Real(1), ctx);
        double observed = std::log10((v.diag.max_term_magnitude / abs(v.value)).convert_to<double>());
        CAPTURE(n);
        CHECK(v.diag.cancellation_digits_lost >= 0);
        CHECK(std::abs(v.diag.cancellation_digits_lost - std::max(observed, 0.0)) <= 2);
    }
}

TEST_CASE("route agreement for gamma_n(u)")
{
    PrecisionContext ctx;
    PrecisionScope scope(ctx);
    const Real tol = pow10(-(ctx.target_digits - 2));
    std::vector<Real> alt = stieltjes_from_altzeta_all(3, ctx);
    for (unsigned n = 0; n <= 3; ++n)
        for (const Real& u : {Real(1), Real(1) / 2, Real(2)}) {
            CAPTURE(n);
            CAPTURE(u);
            Real h = hasse_stieltjes(n, u, ctx).value;
            Real o = limit_stieltjes_oracle(n, u, ctx);
            check_close(h, o, tol);
            check_close(o, oracle::stieltjes(n, u), tol);
            if (u == 1)
                check_close(alt[n], o, tol);
        }
}

TEST_CASE("alternating zeta")
{
    PrecisionContext ctx;
    PrecisionScope scope(ctx);
    const Real tol = ctx.tolerance();
    check_close(alt_zeta_hasse(Real(1), Real(1), ctx).value, ln2(), tol);
    check_close(alt_zeta_hasse(Real(2), Real(1), ctx).value, pi() * pi() / 12, tol);
    // (1 - 2^{1-s}) zeta(s) at s = 3.
    check_close(alt_zeta_hasse(Real(3), Real(1), ctx).value, Real(3) / 4 * ref(frozen::zeta3), tol);
    // zeta_a(1, 1) = (psi(1) - psi(1/2))/2.
    check_close(alt_zeta_hasse(Real(1), Real(1), ctx).value,
                (digamma(Real(1), ctx).value - digamma(Real(1) / 2, ctx).value) / 2, tol);

    check_close(alt_zeta_log_moment(0, ctx).value, ln2(), tol);
    // S_2 is the second derivative itself.
    check_close(alt_zeta_log_moment(2, ctx).value, ref(frozen::alt_zeta_d2), tol);

    // gamma = log 2/2 - S_1/log 2.
    Real s1 = alt_zeta_log_moment(1, ctx).value;
    check_close(ln2() / 2 - s1 / ln2(), ref(frozen::gamma_n[0]), tol);
}

TEST_CASE("forward relation applied to reference gamma_k reproduces S_n")
{
    PrecisionContext ctx;
    PrecisionScope scope(ctx);
    const Real L = ln2();
    for (unsigned n = 1; n <= 4; ++n) {
        Real rhs = pow(L, n + 1) / (n + 1);
        for (unsigned k = 0; k < n; ++k)
            rhs -= from_integer(binomial(n, k)) * ref(frozen::gamma_n[k]) * pow(L, n - k);
        CAPTURE(n);
        check_close(alt_zeta_log_moment(n, ctx).value, rhs, ctx.tolerance());
    }
}

TEST_CASE("Hurwitz zeta by Euler-Maclaurin")
{
    PrecisionContext ctx;
    PrecisionScope scope(ctx);
    const Real tol = ctx.tolerance();
    std::vector<Real> z = hurwitz_zeta_em(Real(2), Real(1), 1, ctx);
    check_close(z[0], pi() * pi() / 6, tol);
    check_close(z[1], ref(frozen::zeta_prime_2), tol);
    check_close(hurwitz_zeta_em(Real(-1), Real(1), 1, ctx)[1], ref(frozen::zeta_prime_m1), tol);
    check_close(hurwitz_zeta_em(Real(-1), Real(1) / 4, 1, ctx)[1], ref(frozen::zeta_prime_m1_quarter), tol);
    check_close(hurwitz_zeta_em(Real(0), Real(2), 2, ctx)[2], ref(frozen::zeta_second_0_2), tol);
    check_close(hurwitz_zeta_em(Real(-3), Real(1), 0, ctx)[0], -from_rational(bernoulli_number(4)) / 4, tol);

    check_close(euler_gamma(ctx), ref(frozen::gamma_n[0]), tol);
    check_close(zeta_value(3, ctx), ref(frozen::zeta3), tol);
    check_close(zeta_prime(-1, ctx), ref(frozen::zeta_prime_m1), tol);
}

TEST_CASE("auxiliary sums")
{
    PrecisionContext ctx;
    PrecisionScope scope(ctx);
    const Real tol = ctx.tolerance();
    const Real z2 = pi() * pi() / 6, z3 = ref(frozen::zeta3), g = ref(frozen::gamma_n[0]),
               g1 = ref(frozen::gamma_n[1]);

    Real k = kanemitsu_sum(ctx);
    check_close(k, -(z2 + g * g + 2 * g1) / 2, tol);
    // The summand is negative, so partial sums decrease towards the limit.
    Real partial = 0;
    for (unsigned n = 1; n <= 50; ++n) {
        Real t = from_rational(harmonic(n)) * (log(Real(n + 1) / n) - Real(1) / n);
        CHECK(t < 0);
        partial += t;
    }
    CHECK(partial > k);

    check_close(harmonic_telescoping_sum(ctx), z2, tol);
    check_close(euler_sum_h2(ctx), 2 * z3, tol);
    check_close(plouffe_zeta3(ctx), z3, tol);
    check_close(harmonic_shifted_square_sum(Real(0), ctx), 2 * z3, tol);

    // Three Plouffe terms already give 8 digits.
    Real three = 7 * pow(pi(), 3) / 180;
    for (int n = 1; n <= 3; ++n)
        three -= 2 / (Real(n) * n * n * expm1(2 * pi() * n));
    CHECK(abs(three - z3) < 1e-8);
}
