#include "hachow/mp.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace hachow {

namespace {

mpfr_prec_t wider(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Real::Real(mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

Real::Real(long v, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(double v, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const mpq_class& q, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const mpz_class& z, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const std::string& decimal, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw std::invalid_argument("bad decimal literal: " + decimal);
    }
}

Real::Real(const Real& o) {
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
    mpfr_init2(v_, o.precision());
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::rounded(mpfr_prec_t bits) const {
    Real r(bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string Real::to_string(int digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
    if (is_zero()) return "0";
    char* s = nullptr;
    std::string fmt = "%." + std::to_string(std::max(digits - 1, 0)) + "Re";
    mpfr_asprintf(&s, fmt.c_str(), v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

Real& Real::operator+=(const Real& o) {
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& o) {
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& o) {
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& o) {
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const {
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::pi(mpfr_prec_t bits) {
    Real r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::catalan(mpfr_prec_t bits) {
    Real r(bits);
    mpfr_const_catalan(r.v_, MPFR_RNDN);
    return r;
}

Real Real::zeta(unsigned long s, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_zeta_ui(r.v_, s, MPFR_RNDN);
    return r;
}

Real operator+(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, long b) {
    Real r(a.precision());
    mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, long b) {
    Real r(a.precision());
    mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }

#define HACHOW_UNARY(name, fn)                        \
    Real name(const Real& x) {                        \
        Real r(x.precision());                        \
        fn(r.raw(), x.raw(), MPFR_RNDN);              \
        return r;                                     \
    }

HACHOW_UNARY(abs, mpfr_abs)
HACHOW_UNARY(sqrt, mpfr_sqrt)
HACHOW_UNARY(log, mpfr_log)
HACHOW_UNARY(exp, mpfr_exp)
HACHOW_UNARY(sin, mpfr_sin)
HACHOW_UNARY(cos, mpfr_cos)

#undef HACHOW_UNARY

Real atan2(const Real& y, const Real& x) {
    Real r(wider(x, y));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real hypot(const Real& x, const Real& y) {
    Real r(wider(x, y));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

Real pow(const Real& x, long n) {
    Real r(x.precision());
    mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}

Real ldexp(const Real& x, long e) {
    Real r(x.precision());
    mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Complex::Complex(Real r) : re(std::move(r)), im(re.precision()) {}

mpfr_prec_t Complex::precision() const { return std::max(re.precision(), im.precision()); }

Complex& Complex::operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& o) {
    *this = *this * o;
    return *this;
}

Complex& Complex::operator/=(const Complex& o) {
    *this = *this / o;
    return *this;
}

Complex operator+(const Complex& a, const Complex& b) { return Complex(a.re + b.re, a.im + b.im); }
Complex operator-(const Complex& a, const Complex& b) { return Complex(a.re - b.re, a.im - b.im); }

Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

Complex operator/(const Complex& a, const Complex& b) {
    // Smith's algorithm keeps intermediate magnitudes bounded.
    if (abs(b.re) >= abs(b.im)) {
        Real r = b.im / b.re;
        Real d = b.re + b.im * r;
        return Complex((a.re + a.im * r) / d, (a.im - a.re * r) / d);
    }
    Real r = b.re / b.im;
    Real d = b.re * r + b.im;
    return Complex((a.re * r + a.im) / d, (a.im * r - a.re) / d);
}

Complex operator*(const Complex& a, const Real& b) { return Complex(a.re * b, a.im * b); }
Complex operator/(const Complex& a, const Real& b) { return Complex(a.re / b, a.im / b); }

Complex conj(const Complex& z) { return Complex(z.re, -z.im); }
Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real abs(const Complex& z) { return hypot(z.re, z.im); }
Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex log(const Complex& z) { return Complex(log(abs(z)), arg(z)); }

Complex exp(const Complex& z) {
    Real m = exp(z.re);
    return Complex(m * cos(z.im), m * sin(z.im));
}

Complex pow(const Complex& z, long n) {
    if (n < 0) {
        Complex one(Real(1L, z.precision()));
        return one / pow(z, -n);
    }
    Complex result(Real(1L, z.precision()));
    Complex base = z;
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

Complex sqrt(const Complex& z) {
    Real m = abs(z);
    Real a = sqrt(ldexp(m + z.re, -1));
    Real b = sqrt(ldexp(m - z.re, -1));
    if (z.im.sign() < 0) b = -b;
    return Complex(a, b);
}

}  // namespace hachow
