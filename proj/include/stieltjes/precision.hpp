#pragma once

// Scalar layer: variable-precision MPFR reals, a small complex type on top of
// them, exact GMP rationals, and the precision context threaded through
// every computation.
//
// Rounding: MPFR rounds every basic operation and elementary function
// correctly (round-to-nearest) at the precision of the destination.

#include "stieltjes/errors.hpp"

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace stj {

namespace mp = boost::multiprecision;

using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using Integer = mp::mpz_int;
using Rational = mp::mpq_rational;

struct PrecisionContext {
    int working_digits = 50;
    int target_digits = 30;
    int guard_digits = 20;

    // Throws DomainError unless working >= target + guard and all are sane.
    void validate() const;

    // 10^-target_digits, at working precision.
    Real tolerance() const;

    // Context for a caller who only cares about target digits.
    static PrecisionContext for_target(int target, int guard = 20);

    // Same target, more working digits (guard grows with it).
    PrecisionContext raised(int extra_digits) const;
};

// Sets the MPFR default precision for the lifetime of the scope. Every Real
// created inside takes this precision. Copies keep the precision of their
// source, which is why the special-function and series entry points round
// their Real arguments to ctx.working_digits on the way in. Boost 1.74 keeps
// the default in a process-wide static, so scopes must not be used from
// several threads.
class PrecisionScope {
public:
    explicit PrecisionScope(int digits);
    explicit PrecisionScope(const PrecisionContext& ctx)
        : PrecisionScope(ctx.working_digits) {}
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

int current_digits();

// Copy of x rounded to the given number of decimal digits.
Real at_digits(const Real& x, int digits);

Real pi();
Real ln2();
Real pow10(int e);
Real from_rational(const Rational& q);
Real from_integer(const Integer& z);
Real parse_real(const std::string& s);

// Decimal string with `digits` significant digits.
std::string to_decimal(const Real& x, int digits);

// Number of leading decimal digits on which a and b agree, measured
// relative to max(|a|, |b|, 1e-300) and capped at `cap`.
int agreed_digits(const Real& a, const Real& b, int cap);

struct ExtComplex {
    Real re;
    Real im;

    ExtComplex() : re(0), im(0) {}
    ExtComplex(const Real& r) : re(r), im(0) {}
    ExtComplex(const Real& r, const Real& i) : re(r), im(i) {}

    ExtComplex operator-() const { return {-re, -im}; }
    ExtComplex& operator+=(const ExtComplex& o);
    ExtComplex& operator-=(const ExtComplex& o);
    ExtComplex& operator*=(const ExtComplex& o);
    ExtComplex& operator/=(const ExtComplex& o);
};

ExtComplex operator+(ExtComplex a, const ExtComplex& b);
ExtComplex operator-(ExtComplex a, const ExtComplex& b);
ExtComplex operator*(ExtComplex a, const ExtComplex& b);
ExtComplex operator/(ExtComplex a, const ExtComplex& b);
ExtComplex operator*(ExtComplex a, const Real& b);
Real abs(const ExtComplex& z);
ExtComplex conj(const ExtComplex& z);
ExtComplex exp(const ExtComplex& z);

// log z with Im in (-pi, pi].
ExtComplex principal_log(const ExtComplex& z, const PrecisionContext& ctx);

// (principal_log z)^n, with log^0 of anything equal to 1.
ExtComplex log_power(const ExtComplex& z, unsigned n, const PrecisionContext& ctx);

// z^w = exp(w log z) on the principal branch.
ExtComplex cpow(const ExtComplex& z, const ExtComplex& w, const PrecisionContext& ctx);

// arctan(x/u) in [0, pi/2) for u > 0, x >= 0.
Real arctan_ratio(const Real& x, const Real& u, const PrecisionContext& ctx);

} // namespace stj
