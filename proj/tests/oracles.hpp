#pragma once

// Test-side reference evaluators. They share nothing with the library beyond
// the Real type: Bernoulli numbers come from the Akiyama-Tanigawa table and
// every tail is a plain Euler-Maclaurin expansion at a shifted point, with far
// more correction terms than the library's own oracle uses.

#include "stieltjes/precision.hpp"

#include <doctest.h>

#include <vector>

namespace oracle {

using stj::Rational;
using stj::Real;

inline const std::vector<Rational>& bernoulli_table()
{
    static const std::vector<Rational> table = [] {
        const unsigned n_max = 80;
        std::vector<Rational> out, a(n_max + 1);
        for (unsigned m = 0; m <= n_max; ++m) {
            a[m] = Rational(1, m + 1);
            for (unsigned j = m; j >= 1; --j)
                a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
            out.push_back(a[0]);
        }
        // The table yields B_1 = +1/2.
        out[1] = Rational(-1, 2);
        return out;
    }();
    return table;
}

inline Real bern(unsigned n)
{
    const Rational& q = bernoulli_table().at(n);
    return Real(numerator(q).str()) / Real(denominator(q).str());
}

// Polynomial in L = log x, index = power.
using LogPoly = std::vector<Real>;

// gamma_n(u) = sum_{k<N} f(u+k) - log^{n+1}(u+N)/(n+1) + f(u+N)/2
//              - sum_j B_{2j}/(2j)! f^{(2j-1)}(u+N),  f(x) = log^n x / x.
inline Real stieltjes(unsigned n, const Real& u, int N = 200, int terms = 24)
{
    Real s = 0;
    for (int k = 0; k < N; ++k) {
        Real x = u + k;
        s += pow(log(x), n) / x;
    }
    Real a = u + N, L = log(a);
    auto eval = [&](const LogPoly& p) {
        Real v = 0;
        for (std::size_t i = p.size(); i-- > 0;)
            v = v * L + p[i];
        return v;
    };
    // f^{(m)}(x) = x^{-1-m} P_m(L); P_{m+1} = -(1+m) P_m + P_m'.
    LogPoly P(n + 1, Real(0));
    P[n] = 1;
    s += -pow(L, n + 1) / (n + 1) + eval(P) / a / 2;
    Real fact = 1;
    for (int m = 0; m < 2 * terms; ++m) {
        LogPoly next(P.size(), Real(0));
        for (std::size_t i = 0; i < P.size(); ++i) {
            next[i] -= (1 + m) * P[i];
            if (i > 0)
                next[i - 1] += Real(i) * P[i];
        }
        P.swap(next);
        const int order = m + 1;
        fact *= order;
        if (order % 2 == 1) {
            const unsigned b = static_cast<unsigned>(order + 1);
            s -= bern(b) / (fact * (order + 1)) * eval(P) / pow(a, order + 1);
        }
    }
    return s;
}

// zeta(s, u) for real s != 1.
inline Real hurwitz_zeta(const Real& s, const Real& u, int N = 200, int terms = 24)
{
    Real z = 0;
    for (int k = 0; k < N; ++k)
        z += pow(u + k, -s);
    Real a = u + N;
    z += pow(a, 1 - s) / (s - 1) + pow(a, -s) / 2;
    Real rising = s, fact = 2;
    for (int j = 1; j <= terms; ++j) {
        z += bern(2 * j) / fact * rising * pow(a, -s - 2 * j + 1);
        rising *= (s + 2 * j - 1) * (s + 2 * j);
        fact *= Real((2 * j + 1) * (2 * j + 2));
    }
    return z;
}

inline Real log_gamma(const Real& u, int N = 60, int terms = 30)
{
    Real shift = 0;
    for (int k = 0; k < N; ++k)
        shift += log(u + k);
    Real z = u + N;
    Real v = (z - Real(1) / 2) * log(z) - z + log(2 * stj::pi()) / 2;
    for (int j = 1; j <= terms; ++j)
        v += bern(2 * j) / (Real(2 * j) * (2 * j - 1) * pow(z, 2 * j - 1));
    return v - shift;
}

inline Real euler_gamma() { return stieltjes(0, Real(1)); }

} // namespace oracle

// Reference strings, computed once at 50 digits and frozen here. The oracle
// tests reproduce them with the evaluators above.
namespace frozen {

inline const char* gamma_n[] = {
    "0.577215664901532860606512090082402431042159336",
    "-0.0728158454836767248605863758749013191377363383",
    "-0.0096903631928723184845303860352125293590658061",
    "0.00205383442030334586616004654275338428571580445",
    "0.00232537006546730005746817017752606800090446941",
    "0.000793323817301062701753334877444444830731539405",
};
inline const char* gamma_n_half[] = {
    "1.9635100260214234794409763329987555671931596",
    "-1.35345968080494151770868716917806440359128629",
    "0.968864475220290711421711062323780654182598045",
    "-0.66742427371138073955598919679692083746495917",
};
inline const char* gamma_20 = "0.000466343561511559449400594824433550525113143474";

inline const char* psi_half = "-1.9635100260214234794409763329987555671931596";
inline const char* psi_quarter = "-4.22745353337626540808953014609668357736724444";
inline const char* trigamma_half = "4.9348022005446793094172454999380755676568497";
inline const char* lgamma_quarter = "1.28802252469807745737061044021971729592537757";
inline const char* lgamma_half = "0.572364942924700087071713675676529355823647406";
inline const char* zeta_prime_m1 = "-0.16542114370045092921391966024278064276403638";
inline const char* zeta3 = "1.20205690315959428539973816151144999076498629";
inline const char* zeta_prime_m1_quarter = "0.093567868970261061186336071647446310061521086";
inline const char* zeta_3half_half = "4.77653794755483324857662766935830217366253008";
inline const char* zeta_prime_2 = "-0.937548254315843753702574094567864977897860289";
inline const char* zeta_second_0_2 = "-2.00635645590858485121010002672996043819899491";
inline const char* log_barnes_g_5half = "-0.0538503492002405180714897599134628081496044229";
inline const char* Si_1 = "0.946083070367183014941353313823179657812337955";
inline const char* Ci_1 = "0.337403922900968134662646203889150769997578033";
inline const char* Si_20 = "1.54824170104343984016364334212951369226157336";
inline const char* Ci_20 = "0.0444198208453533165397687169925705784252251652";
// Second derivative of the alternating zeta function at s = 1.
inline const char* alt_zeta_d2 = "-0.0653725925588985991462073993882010532285881492";

} // namespace frozen

namespace testutil {

using stj::Real;

inline Real ref(const char* s) { return stj::parse_real(s); }

// |a - b| <= tol, with both values in the failure message.
inline void check_close(const Real& a, const Real& b, const Real& tol)
{
    Real err = abs(a - b);
    INFO("a = " << stj::to_decimal(a, 40));
    INFO("b = " << stj::to_decimal(b, 40));
    INFO("|a-b| = " << err.str(3, std::ios_base::scientific) << ", tol = " << tol.str(3, std::ios_base::scientific));
    CHECK(err <= tol);
}

} // namespace testutil
