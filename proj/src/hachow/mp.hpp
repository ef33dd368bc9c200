#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace hachow {

// MPFR real with its own bit precision. Binary operations produce a value at
// the larger of the two operand precisions, rounded to nearest.
class Real {
public:
    explicit Real(mpfr_prec_t bits = 256);
    Real(long v, mpfr_prec_t bits);
    Real(double v, mpfr_prec_t bits);
    Real(const mpq_class& q, mpfr_prec_t bits);
    Real(const mpz_class& z, mpfr_prec_t bits);
    Real(const std::string& decimal, mpfr_prec_t bits);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    Real rounded(mpfr_prec_t bits) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // Scientific notation with `digits` significant decimal digits.
    std::string to_string(int digits) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    Real operator-() const;

    static Real pi(mpfr_prec_t bits);
    static Real catalan(mpfr_prec_t bits);
    static Real zeta(unsigned long s, mpfr_prec_t bits);

private:
    mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator*(const Real& a, long b);
Real operator/(const Real& a, long b);

bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real ldexp(const Real& x, long e);
Real max(const Real& a, const Real& b);

struct Complex {
    Real re;
    Real im;

    explicit Complex(mpfr_prec_t bits = 256) : re(bits), im(bits) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(Real r);

    mpfr_prec_t precision() const;

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
    Complex operator-() const { return Complex(-re, -im); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator/(const Complex& a, const Real& b);

Complex conj(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real abs(const Complex& z);
Real arg(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex exp(const Complex& z);
Complex pow(const Complex& z, long n);
Complex sqrt(const Complex& z);

}  // namespace hachow
