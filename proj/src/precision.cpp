#include "stieltjes/precision.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace stj {

void PrecisionContext::validate() const
{
    if (target_digits < 1 || guard_digits < 0 || working_digits < 1)
        throw DomainError("precision context: digits must be positive");
    if (working_digits < target_digits + guard_digits)
        throw DomainError("precision context: working_digits < target_digits + guard_digits");
}

Real PrecisionContext::tolerance() const
{
    PrecisionScope scope(working_digits);
    return pow10(-target_digits);
}

PrecisionContext PrecisionContext::for_target(int target, int guard)
{
    return PrecisionContext{target + guard, target, guard};
}

PrecisionContext PrecisionContext::raised(int extra_digits) const
{
    return PrecisionContext{working_digits + extra_digits, target_digits,
                            guard_digits + extra_digits};
}

PrecisionScope::PrecisionScope(int digits) : saved_(Real::default_precision())
{
    Real::default_precision(static_cast<unsigned>(std::max(digits, 10)));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

int current_digits() { return static_cast<int>(Real::default_precision()); }

Real at_digits(const Real& x, int digits)
{
    PrecisionScope scope(digits);
    Real r;
    mpfr_set(r.backend().data(), x.backend().data(), MPFR_RNDN);
    return r;
}

Real pi()
{
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

Real ln2()
{
    Real r;
    mpfr_const_log2(r.backend().data(), MPFR_RNDN);
    return r;
}

Real pow10(int e)
{
    Real r(10);
    return pow(r, e);
}

Real from_rational(const Rational& q)
{
    Real r;
    mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
    return r;
}

Real from_integer(const Integer& z)
{
    Real r;
    mpfr_set_z(r.backend().data(), z.backend().data(), MPFR_RNDN);
    return r;
}

Real parse_real(const std::string& s)
{
    Real r;
    if (mpfr_set_str(r.backend().data(), s.c_str(), 10, MPFR_RNDN) != 0)
        throw DomainError("not a decimal number: " + s);
    return r;
}

std::string to_decimal(const Real& x, int digits)
{
    return x.str(static_cast<std::streamsize>(std::max(digits - 1, 0)), std::ios_base::scientific);
}

int agreed_digits(const Real& a, const Real& b, int cap)
{
    Real scale = std::max({Real(abs(a)), Real(abs(b)), Real("1e-300")});
    Real diff = abs(a - b);
    if (diff == 0)
        return cap;
    Real rel = diff / scale;
    double d = -std::log10(rel.convert_to<double>());
    int n = static_cast<int>(std::floor(d));
    return std::clamp(n, 0, cap);
}

ExtComplex& ExtComplex::operator+=(const ExtComplex& o)
{
    re += o.re;
    im += o.im;
    return *this;
}

ExtComplex& ExtComplex::operator-=(const ExtComplex& o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}

ExtComplex& ExtComplex::operator*=(const ExtComplex& o)
{
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
}

ExtComplex& ExtComplex::operator/=(const ExtComplex& o)
{
    Real d = o.re * o.re + o.im * o.im;
    if (d == 0)
        throw DomainError("complex division by zero");
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = r;
    return *this;
}

ExtComplex operator+(ExtComplex a, const ExtComplex& b) { return a += b; }
ExtComplex operator-(ExtComplex a, const ExtComplex& b) { return a -= b; }
ExtComplex operator*(ExtComplex a, const ExtComplex& b) { return a *= b; }
ExtComplex operator/(ExtComplex a, const ExtComplex& b) { return a /= b; }

ExtComplex operator*(ExtComplex a, const Real& b)
{
    a.re *= b;
    a.im *= b;
    return a;
}

Real abs(const ExtComplex& z) { return hypot(z.re, z.im); }

ExtComplex conj(const ExtComplex& z) { return {z.re, -z.im}; }

ExtComplex exp(const ExtComplex& z)
{
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

ExtComplex principal_log(const ExtComplex& z, const PrecisionContext& ctx)
{
    PrecisionScope scope(ctx);
    if (z.re == 0 && z.im == 0)
        throw DomainError("log of zero");
    Real arg = atan2(z.im, z.re);
    // atan2(-0, x<0) gives -pi; the principal branch wants +pi there.
    if (z.im == 0 && z.re < 0)
        arg = pi();
    return {log(abs(z)), arg};
}

ExtComplex log_power(const ExtComplex& z, unsigned n, const PrecisionContext& ctx)
{
    PrecisionScope scope(ctx);
    if (n == 0)
        return ExtComplex(Real(1));
    ExtComplex l = principal_log(z, ctx);
    ExtComplex r(Real(1));
    ExtComplex b = l;
    for (unsigned k = n; k; k >>= 1) {
        if (k & 1)
            r *= b;
        if (k > 1)
            b *= b;
    }
    return r;
}

ExtComplex cpow(const ExtComplex& z, const ExtComplex& w, const PrecisionContext& ctx)
{
    PrecisionScope scope(ctx);
    return exp(w * principal_log(z, ctx));
}

Real arctan_ratio(const Real& x, const Real& u, const PrecisionContext& ctx)
{
    PrecisionScope scope(ctx);
    if (!(u > 0))
        throw DomainError("arctan_ratio: u must be positive");
    if (x < 0)
        throw DomainError("arctan_ratio: x must be non-negative");
    return atan2(x, u);
}

} // namespace stj
