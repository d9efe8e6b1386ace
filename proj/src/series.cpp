#include "stieltjes/series.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace stj {

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache{Rational(1)};

int digits_lost(const Real& max_term, const Real& result)
{
    if (max_term == 0)
        return 0;
    if (result == 0)
        return 1000;
    Real r = max_term / abs(result);
    if (r <= 1)
        return 0;
    return static_cast<int>(std::ceil(log10(r).convert_to<double>()));
}

void require_guard(const PrecisionContext& ctx)
{
    ctx.validate();
    if (ctx.guard_digits < 10)
        throw DomainError("binomial double sums need guard_digits >= 10");
}

// Truncated power series in eps = s - s0, coefficient r at index r.
using Jet = std::vector<Real>;

Jet jet_mul(const Jet& a, const Jet& b)
{
    Jet c(a.size(), Real(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < a.size(); ++j)
            c[i + j] += a[i] * b[j];
    }
    return c;
}

// x^{-s} around s0: x^{-s0} sum_r (-log x)^r eps^r / r!
Jet jet_power(const Real& x, const Real& s0, std::size_t len)
{
    Jet j(len);
    Real l = -log(x);
    Real t = pow(x, -s0);
    for (std::size_t r = 0; r < len; ++r) {
        j[r] = t;
        t = t * l / Real(r + 1);
    }
    return j;
}

} // namespace

Integer binomial(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.backend().data(), n, k);
    return r;
}

Rational bernoulli_number(unsigned n)
{
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    while (bernoulli_cache.size() <= n) {
        unsigned m = static_cast<unsigned>(bernoulli_cache.size());
        if (m > 1 && m % 2 == 1) {
            bernoulli_cache.emplace_back(0);
            continue;
        }
        Rational s = 0;
        for (unsigned k = 0; k < m; ++k)
            if (bernoulli_cache[k] != 0)
                s += Rational(binomial(m + 1, k)) * bernoulli_cache[k];
        bernoulli_cache.push_back(-s / Rational(m + 1));
    }
    return bernoulli_cache[n];
}

Real bernoulli_poly(unsigned n, const Real& u)
{
    Real r = 0;
    for (unsigned k = 0; k <= n; ++k)
        r = r * u + from_rational(Rational(binomial(n, k)) * bernoulli_number(k));
    return r;
}

Rational harmonic(unsigned n)
{
    if (n < 1)
        throw DomainError("harmonic: n must be >= 1");
    Rational h = 0;
    for (unsigned k = 1; k <= n; ++k)
        h += Rational(1, k);
    return h;
}

SeriesValue hasse_stieltjes(unsigned n, const Real& u_in, const PrecisionContext& ctx)
{
    const Real u = at_digits(u_in, ctx.working_digits);
    require_guard(ctx);
    if (!(u > 0))
        throw DomainError("hasse_stieltjes: u must be positive");
    const Real tol = ctx.tolerance();
    const unsigned cap = 64;
    const int aim = 24;

    const double ud = u.convert_to<double>();
    const double ltol = -ctx.target_digits * std::log(10.0) - std::log(1000.0);
    long M = 0;
    for (;; M += 8) {
        double a = ud + M;
        double lt = std::lgamma(aim) + std::lgamma(a) - std::lgamma(a + aim) - std::log(aim + 1.0) +
                    n * std::log(std::max(std::log(a), 1.0));
        if (lt < ltol || M > 100000)
            break;
    }
    // The alternating inner sums cancel roughly log^{n+1}(u+M) 2^i; carry
    // those digits on top of the caller's working precision.
    const int extra = static_cast<int>(std::ceil(
        (n + 1) * std::log10(std::max(std::log(ud + M), 1.0)) + aim * std::log10(2.0)));
    PrecisionScope scope(ctx.working_digits + extra);
    const Real a = u + M;

    SumDiagnostics d;
    Real max_term = 0;

    Real shift = 0;
    for (long k = 0; k < M; ++k) {
        Real x = u + k;
        Real t = pow(log(x), n) / x;
        if (n == 0)
            t = 1 / x;
        max_term = std::max(max_term, Real(abs(t)));
        shift += t;
    }

    std::vector<Real> F;
    std::vector<Integer> row{Integer(1)};
    Real outer = 0;
    int small = 0;
    unsigned i = 0;
    for (; i < cap; ++i) {
        if (i > 0) {
            std::vector<Integer> next(i + 1);
            next[0] = next[i] = 1;
            for (unsigned j = 1; j < i; ++j)
                next[j] = row[j - 1] + row[j];
            row.swap(next);
        }
        F.push_back(pow(log(a + Real(i)), n + 1));
        Real inner = 0;
        for (unsigned j = 0; j <= i; ++j) {
            Real t = from_integer(row[j]) * F[j];
            Real mag = abs(t) / ((i + 1) * (n + 1));
            max_term = std::max(max_term, mag);
            if (j % 2)
                inner -= t;
            else
                inner += t;
        }
        Real term = inner / Real(i + 1);
        outer += term;
        if (abs(term) / (n + 1) < tol)
            ++small;
        else
            small = 0;
        if (i >= 3 && small >= 3)
            break;
    }
    if (i == cap) {
        std::ostringstream os;
        os << "hasse_stieltjes: outer sum did not settle within " << cap << " terms";
        throw NonConvergence(os.str());
    }
    Real shifted = -outer / Real(n + 1);
    max_term = std::max(max_term, Real(abs(shifted)));
    Real result = shifted + shift;

    d.terms_used = static_cast<long>(i + 1);
    d.max_term_magnitude = max_term;
    d.cancellation_digits_lost = digits_lost(max_term, result);
    if (d.cancellation_digits_lost > ctx.guard_digits + extra) {
        std::ostringstream os;
        os << "hasse_stieltjes: " << d.cancellation_digits_lost << " digits lost, guard is "
           << ctx.guard_digits + extra;
        throw PrecisionExhausted(os.str());
    }
    return {at_digits(result, ctx.working_digits), d};
}

namespace {

// Partial sums sum_{k<N} log^m(u+k)/(u+k), m = 0..nmax, kept at every N
// the oracle has visited so that later calls resume instead of restarting.
struct OracleSums {
    unsigned nmax = 0;
    std::map<long, std::vector<Real>> at;
};

std::mutex oracle_mutex;
std::map<std::pair<std::string, int>, OracleSums> oracle_cache;

const std::vector<Real>& sums_at(OracleSums& e, const Real& u, long N, unsigned n)
{
    if (n > e.nmax || e.at.empty()) {
        e.nmax = std::max({n, e.nmax, 7u});
        e.at.clear();
        e.at[0] = std::vector<Real>(e.nmax + 1, Real(0));
    }
    auto hit = e.at.find(N);
    if (hit != e.at.end())
        return hit->second;
    auto base = std::prev(e.at.upper_bound(N));
    std::vector<Real> s = base->second;
    for (long k = base->first; k < N; ++k) {
        Real x = u + k;
        Real l = log(x);
        Real p = 1 / x;
        for (unsigned m = 0; m <= e.nmax; ++m) {
            s[m] += p;
            p *= l;
        }
    }
    return e.at.emplace(N, std::move(s)).first->second;
}

// f^{(m)}(a) for f(x) = log^n(x)/x, m = 0..7.
std::vector<Real> log_power_derivatives(unsigned n, const Real& a, unsigned mmax)
{
    std::vector<Real> P(n + 1, Real(0));
    P[n] = 1;
    Real L = log(a);
    std::vector<Real> out;
    for (unsigned m = 0; m <= mmax; ++m) {
        Real v = 0;
        for (int k = static_cast<int>(n); k >= 0; --k)
            v = v * L + P[k];
        out.push_back(v / pow(a, m + 1));
        std::vector<Real> Q(n + 1, Real(0));
        for (unsigned k = 0; k <= n; ++k) {
            Q[k] = -Real(m + 1) * P[k];
            if (k + 1 <= n)
                Q[k] += Real(k + 1) * P[k + 1];
        }
        P.swap(Q);
    }
    return out;
}

Real oracle_value(unsigned n, const Real& u, const std::vector<Real>& sums, long N,
                  Real& omitted)
{
    Real a = u + N;
    Real L = log(a);
    std::vector<Real> f = log_power_derivatives(n, a, 7);
    Real v = sums[n] - pow(L, n + 1) / Real(n + 1) + f[0] / 2;
    Real fact = 1;
    for (unsigned j = 1; j <= 3; ++j) {
        fact *= Real((2 * j - 1) * (2 * j));
        v -= from_rational(bernoulli_number(2 * j)) / fact * f[2 * j - 1];
    }
    fact *= Real(7 * 8);
    omitted = abs(from_rational(bernoulli_number(8)) / fact * f[7]);
    return v;
}

} // namespace

Real limit_stieltjes_oracle(unsigned n, const Real& u_in, const PrecisionContext& ctx, long& n_used)
{
    const Real u = at_digits(u_in, ctx.working_digits);
    ctx.validate();
    if (!(u > 0))
        throw DomainError("limit_stieltjes_oracle: u must be positive");
    const int wd = ctx.working_digits + 10;
    PrecisionScope scope(wd);
    const Real tol = ctx.tolerance();
    const long cap = 10000L << 8;

    std::lock_guard<std::mutex> lock(oracle_mutex);
    OracleSums& e = oracle_cache[{u.str(wd + 5), wd}];
    for (long N = 10000; N <= cap; N *= 2) {
        Real omitted, o2;
        Real v1 = oracle_value(n, u, sums_at(e, u, N, n), N, omitted);
        if (omitted >= tol / 10)
            continue;
        Real v2 = oracle_value(n, u, sums_at(e, u, 2 * N, n), 2 * N, o2);
        if (abs(v2 - v1) < tol) {
            n_used = 2 * N;
            return at_digits(v2, ctx.working_digits);
        }
    }
    throw NonConvergence("limit_stieltjes_oracle: N cap reached");
}

Real limit_stieltjes_oracle(unsigned n, const Real& u, const PrecisionContext& ctx)
{
    long used = 0;
    return limit_stieltjes_oracle(n, u, ctx, used);
}

namespace {

// sum_i 2^{-(i+1)} sum_j C(i,j) (-1)^j F(j), outer terms shrinking like 2^{-i}.
SeriesValue halved_binomial_sum(const std::function<Real(unsigned)>& F, const PrecisionContext& ctx)
{
    const Real tol = ctx.tolerance() / 1000;
    const unsigned cap = static_cast<unsigned>(3.4 * ctx.working_digits) + 40;
    std::vector<Real> vals;
    std::vector<Integer> row{Integer(1)};
    Real total = 0;
    Real max_term = 0;
    Real scale = 1;
    int small = 0;
    unsigned i = 0;
    for (; i < cap; ++i) {
        if (i > 0) {
            std::vector<Integer> next(i + 1);
            next[0] = next[i] = 1;
            for (unsigned j = 1; j < i; ++j)
                next[j] = row[j - 1] + row[j];
            row.swap(next);
        }
        scale /= 2;
        vals.push_back(F(i));
        Real inner = 0;
        for (unsigned j = 0; j <= i; ++j) {
            Real t = from_integer(row[j]) * vals[j];
            max_term = std::max(max_term, Real(abs(t) * scale));
            if (j % 2)
                inner -= t;
            else
                inner += t;
        }
        Real term = inner * scale;
        total += term;
        if (abs(term) < tol)
            ++small;
        else
            small = 0;
        if (i >= 3 && small >= 3)
            break;
    }
    if (i == cap)
        throw NonConvergence("binomial sum did not settle");
    SumDiagnostics d;
    d.terms_used = static_cast<long>(i + 1);
    d.max_term_magnitude = max_term;
    d.cancellation_digits_lost = digits_lost(max_term, total);
    if (d.cancellation_digits_lost > ctx.guard_digits) {
        std::ostringstream os;
        os << "binomial sum: " << d.cancellation_digits_lost << " digits lost, guard is "
           << ctx.guard_digits;
        throw PrecisionExhausted(os.str());
    }
    return {total, d};
}

} // namespace

SeriesValue alt_zeta_hasse(const Real& s_in, const Real& u_in, const PrecisionContext& ctx)
{
    const Real s = at_digits(s_in, ctx.working_digits);
    const Real u = at_digits(u_in, ctx.working_digits);
    require_guard(ctx);
    if (!(u > 0))
        throw DomainError("alt_zeta_hasse: u must be positive");
    PrecisionScope scope(ctx);
    return halved_binomial_sum([&](unsigned j) { return pow(u + Real(j), -s); }, ctx);
}

SeriesValue alt_zeta_log_moment(unsigned k, const PrecisionContext& ctx)
{
    require_guard(ctx);
    PrecisionScope scope(ctx);
    return halved_binomial_sum(
        [k](unsigned j) {
            Real x = Real(1 + j);
            return k == 0 ? Real(1 / x) : Real(pow(log(x), k) / x);
        },
        ctx);
}

std::vector<Real> stieltjes_from_altzeta_all(unsigned n, const PrecisionContext& ctx)
{
    require_guard(ctx);
    PrecisionScope scope(ctx);
    const Real L = ln2();
    std::vector<Real> g;
    for (unsigned m = 0; m <= n; ++m) {
        // S_{m+1} = L^{m+2}/(m+2) - sum_{k<=m} C(m+1,k) gamma_k L^{m+1-k}
        Real S = alt_zeta_log_moment(m + 1, ctx).value;
        Real rest = pow(L, m + 2) / Real(m + 2) - S;
        for (unsigned k = 0; k < m; ++k)
            rest -= from_integer(binomial(m + 1, k)) * g[k] * pow(L, m + 1 - k);
        g.push_back(rest / (Real(m + 1) * L));
    }
    return g;
}

Real stieltjes_from_altzeta(unsigned n, const PrecisionContext& ctx)
{
    return stieltjes_from_altzeta_all(n, ctx).back();
}

std::vector<Real> hurwitz_zeta_em(const Real& s_in, const Real& u_in, unsigned order,
                                  const PrecisionContext& ctx)
{
    const Real s = at_digits(s_in, ctx.working_digits);
    const Real u = at_digits(u_in, ctx.working_digits);
    ctx.validate();
    if (!(u > 0))
        throw DomainError("hurwitz_zeta_em: u must be positive");
    if (s == 1)
        throw PoleError("hurwitz_zeta_em: pole at s = 1");
    const int wd = ctx.working_digits + 10;
    PrecisionScope scope(wd);
    const Real tol = ctx.tolerance() * pow10(-5);
    const std::size_t len = order + 1;
    const Real s0 = s;

    double aim = 0.6 * wd + 10 + std::max(0.0, -s.convert_to<double>());
    long N = std::max(0L, static_cast<long>(std::ceil(aim - u.convert_to<double>())));
    const unsigned jcap = static_cast<unsigned>(2 * wd) + 20;

    for (int attempt = 0; attempt < 6; ++attempt, N = 2 * N + 16) {
        Jet total(len, Real(0));
        for (long k = 0; k < N; ++k) {
            Jet t = jet_power(u + k, s0, len);
            for (std::size_t r = 0; r < len; ++r)
                total[r] += t[r];
        }
        const Real a = u + N;
        Jet pa = jet_power(a, s0, len);
        // a^{1-s}/(s-1)
        Jet inv(len);
        Real d = s0 - 1;
        Real p = 1 / d;
        for (std::size_t r = 0; r < len; ++r) {
            inv[r] = p;
            p = -p / d;
        }
        Jet lead = jet_mul(pa, inv);
        for (std::size_t r = 0; r < len; ++r)
            total[r] += a * lead[r] + pa[r] / 2;

        // sum_j B_{2j}/(2j)! (s)_{2j-1} a^{-s-2j+1}
        Jet rising(len, Real(0));
        rising[0] = s0;
        if (len > 1)
            rising[1] = 1;
        Real fact = 2;
        Real apow = 1 / a;
        Real prev_mag = -1;
        bool done = false;
        for (unsigned j = 1; j <= jcap; ++j) {
            if (j > 1) {
                for (unsigned extra : {2 * j - 3, 2 * j - 2}) {
                    Jet lin(len, Real(0));
                    lin[0] = s0 + extra;
                    if (len > 1)
                        lin[1] = 1;
                    rising = jet_mul(rising, lin);
                }
                fact *= Real((2 * j - 1) * (2 * j));
                apow /= a * a;
            }
            Real c = from_rational(bernoulli_number(2 * j)) / fact * apow;
            Jet term = jet_mul(rising, pa);
            Real mag = 0;
            for (std::size_t r = 0; r < len; ++r) {
                term[r] *= c;
                total[r] += term[r];
                mag = std::max(mag, Real(abs(term[r])));
            }
            if (mag < tol && j > 2) {
                done = true;
                break;
            }
            if (prev_mag >= 0 && mag > prev_mag && j > 4)
                break;
            prev_mag = mag;
        }
        if (!done)
            continue;

        std::vector<Real> out(len);
        Real f = 1;
        for (std::size_t r = 0; r < len; ++r) {
            if (r > 0)
                f *= Real(r);
            out[r] = at_digits(total[r] * f, ctx.working_digits);
        }
        return out;
    }
    throw NonConvergence("hurwitz_zeta_em: asymptotic tail did not reach tolerance");
}

namespace {
std::mutex const_mutex;
std::map<std::tuple<int, int, int>, Real> const_cache;

Real cached(int kind, int s, const PrecisionContext& ctx, const std::function<Real()>& make)
{
    auto key = std::make_tuple(kind, s, ctx.working_digits);
    {
        std::lock_guard<std::mutex> lock(const_mutex);
        auto it = const_cache.find(key);
        if (it != const_cache.end())
            return it->second;
    }
    Real v = make();
    std::lock_guard<std::mutex> lock(const_mutex);
    const_cache.emplace(key, v);
    return v;
}
} // namespace

Real euler_gamma(const PrecisionContext& ctx)
{
    return cached(0, 0, ctx, [&] {
        PrecisionScope scope(ctx);
        // The B6-corrected oracle tops out near 45 digits.
        if (ctx.target_digits > 45) {
            Real g;
            mpfr_const_euler(g.backend().data(), MPFR_RNDN);
            return g;
        }
        return limit_stieltjes_oracle(0, Real(1), ctx);
    });
}

Real zeta_value(int s, const PrecisionContext& ctx)
{
    return cached(1, s, ctx, [&] {
        PrecisionScope scope(ctx);
        return hurwitz_zeta_em(Real(s), Real(1), 0, ctx)[0];
    });
}

Real zeta_prime(int s, const PrecisionContext& ctx)
{
    return cached(2, s, ctx, [&] {
        PrecisionScope scope(ctx);
        return hurwitz_zeta_em(Real(s), Real(1), 1, ctx)[1];
    });
}

Real asymptotic_tail(const std::vector<Real>& plain, const std::vector<Real>& logs, long M,
                     const PrecisionContext& ctx)
{
    PrecisionScope scope(ctx);
    Real a = Real(M + 1);
    Real total = 0;
    std::size_t top = std::max(plain.size(), logs.size());
    for (std::size_t p = 0; p < top; ++p) {
        bool hp = p < plain.size() && plain[p] != 0;
        bool hl = p < logs.size() && logs[p] != 0;
        if (!hp && !hl)
            continue;
        if (p < 2)
            throw DomainError("asymptotic_tail: terms of order n^-1 or slower diverge");
        std::vector<Real> z = hurwitz_zeta_em(Real(p), a, hl ? 1 : 0, ctx);
        if (hp)
            total += plain[p] * z[0];
        if (hl)
            total -= logs[p] * z[1];
    }
    return total;
}

std::vector<Real> harmonic_asymptotic(int p_max, const PrecisionContext& ctx)
{
    PrecisionScope scope(ctx);
    std::vector<Real> h(p_max + 1, Real(0));
    h[0] = euler_gamma(ctx);
    if (p_max >= 1)
        h[1] = Real(1) / 2;
    for (int k = 2; k <= p_max; k += 2)
        h[k] = -from_rational(bernoulli_number(k)) / Real(k);
    return h;
}

namespace {

// sum_{n>=1} H_n w(n) where w(n) = sum_{m>=2} c[m] n^{-m} for large n.
Real harmonic_weighted(const std::function<Real(long)>& w, const std::vector<Real>& c,
                       const PrecisionContext& ctx)
{
    PrecisionContext inner = ctx.raised(10);
    PrecisionScope scope(inner);
    const long M = std::max(60, ctx.working_digits);
    const int P = static_cast<int>(std::ceil((inner.working_digits + 5) / std::log10(double(M)))) + 2;

    Real H = 0;
    Real partial = 0;
    for (long n = 1; n <= M; ++n) {
        H += Real(1) / n;
        partial += H * w(n);
    }
    std::vector<Real> h = harmonic_asymptotic(P, inner);
    std::vector<Real> plain(P + 1, Real(0)), logs(P + 1, Real(0));
    for (int p = 2; p <= P; ++p) {
        if (p < static_cast<int>(c.size()))
            logs[p] = c[p];
        for (int m = 2; m <= p && m < static_cast<int>(c.size()); ++m)
            plain[p] += h[p - m] * c[m];
    }
    Real tail = asymptotic_tail(plain, logs, M, inner);
    return at_digits(partial + tail, ctx.working_digits);
}

} // namespace

Real kanemitsu_sum(const PrecisionContext& ctx)
{
    const int P = ctx.working_digits + 20;
    PrecisionScope scope(ctx.working_digits + 10);
    std::vector<Real> c(P + 1, Real(0));
    for (int m = 2; m <= P; ++m)
        c[m] = Real(m % 2 ? 1 : -1) / m;
    return harmonic_weighted(
        [](long n) {
            Real x = Real(1) / n;
            return Real(log1p(x) - x);
        },
        c, ctx);
}

Real harmonic_telescoping_sum(const PrecisionContext& ctx)
{
    const int P = ctx.working_digits + 20;
    PrecisionScope scope(ctx.working_digits + 10);
    std::vector<Real> c(P + 1, Real(0));
    for (int m = 2; m <= P; ++m)
        c[m] = Real(m % 2 ? -1 : 1);
    return harmonic_weighted([](long n) { return Real(Real(1) / n - Real(1) / (n + 1)); }, c,
                             ctx);
}

Real euler_sum_h2(const PrecisionContext& ctx)
{
    PrecisionScope scope(ctx.working_digits + 10);
    std::vector<Real> c{Real(0), Real(0), Real(1)};
    return harmonic_weighted([](long n) { return Real(Real(1) / (Real(n) * n)); }, c, ctx);
}

Real harmonic_shifted_square_sum(const Real& x_in, const PrecisionContext& ctx)
{
    const Real x = at_digits(x_in, ctx.working_digits);
    if (x < 0 || x > 5)
        throw DomainError("harmonic_shifted_square_sum: need 0 <= x <= 5");
    const int P = ctx.working_digits + 20;
    PrecisionScope scope(ctx.working_digits + 10);
    // 1/(x+n)^2 = sum_p (-1)^p (p-1) x^{p-2} / n^p
    std::vector<Real> c(P + 1, Real(0));
    Real xp = 1;
    for (int p = 2; p <= P; ++p) {
        c[p] = (p % 2 ? -1 : 1) * (p - 1) * xp;
        xp *= x;
    }
    return harmonic_weighted(
        [x](long n) {
            Real d = x + n;
            return Real(1 / (d * d));
        },
        c, ctx);
}

Real plouffe_zeta3(const PrecisionContext& ctx)
{
    PrecisionScope scope(ctx);
    const Real tol = ctx.tolerance() * pow10(-5);
    Real P = pi();
    Real sum = 0;
    for (long n = 1;; ++n) {
        Real t = 1 / (pow(Real(n), 3) * expm1(2 * P * n));
        sum += t;
        if (t < tol)
            break;
    }
    return 7 * pow(P, 3) / 180 - 2 * sum;
}

} // namespace stj
