#include "hachow/polylog.hpp"

#include "hachow/errors.hpp"

#include <cmath>

namespace hachow {

int PrecisionPolicy::claimed_digits() const {
    return static_cast<int>(std::floor(static_cast<double>(bits) * std::log10(2.0))) - 2;
}

namespace {

Complex real_complex(long v, mpfr_prec_t bits) { return Complex(Real(v, bits)); }

// |x| < 2^-e, for x != 0
bool below(const Real& x, long e) { return x.is_zero() || mpfr_get_exp(x.raw()) < -e; }

Complex direct_series(int n, const Complex& z, mpfr_prec_t bits) {
    Complex sum(bits);
    Complex power = z;
    for (long k = 1;; ++k) {
        Complex term = power / Real(std::pow(static_cast<double>(k), n), bits);
        sum += term;
        Real mag = abs(term);
        if (k > 2 && below(mag, static_cast<long>(bits) + 8)) break;
        power *= z;
    }
    return sum;
}

// Expansion in mu = log z, valid for |mu| < 2 pi:
// Li_n(e^mu) = sum_{k != n-1} zeta(n-k) mu^k/k! + mu^{n-1}/(n-1)! (H_{n-1} - log(-mu)).
Complex log_series(int n, const Complex& z, mpfr_prec_t bits) {
    Complex mu = log(z);
    Complex sum(bits);
    Real half = Real(1L, bits) / 2L;
    // k = 0 .. n, skipping n - 1; zeta(0) = -1/2
    Complex mu_k = real_complex(1, bits);
    long factorial = 1;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            mu_k *= mu;
            factorial *= k;
        }
        if (k == n - 1) continue;
        int s = n - k;
        Real zeta = s == 0 ? -half : Real::zeta(static_cast<unsigned long>(s), bits);
        sum += mu_k * (zeta / factorial);
    }
    Complex mu_n1 = pow(mu, n - 1);
    long fact_n1 = n == 3 ? 2 : 1;
    Real harmonic(bits);
    for (int m = 1; m <= n - 1; ++m) harmonic += Real(1L, bits) / static_cast<long>(m);
    sum += mu_n1 * (Complex(harmonic) - log(-mu)) / Real(fact_n1, bits);

    // k = n - 1 + 2j: zeta(1-2j) = (-1)^j 2 (2j-1)! zeta(2j) / (2 pi)^{2j}
    Real two_pi = Real::pi(bits) * 2L;
    Complex w = (mu / two_pi) * (mu / two_pi);
    Complex w_j = real_complex(1, bits);
    Complex tail(bits);
    for (long j = 1;; ++j) {
        w_j *= w;
        Real denom(1L, bits);
        for (long m = 2 * j; m <= 2 * j + n - 1; ++m) denom *= Real(m, bits);
        Complex term = w_j * (Real::zeta(static_cast<unsigned long>(2 * j), bits) * 2L / denom);
        if (j % 2 == 1) term = -term;
        tail += term;
        if (j > 2 && below(abs(term), static_cast<long>(bits) + 8)) break;
        if (j > 100000) throw Error(ErrorKind::Internal, "polylog log-series did not converge");
    }
    sum += mu_n1 * tail;
    return sum;
}

Complex li_work(int n, const Complex& z, mpfr_prec_t bits, double guard_radius) {
    if (z.is_zero()) return Complex(bits);
    Complex one = real_complex(1, bits);
    if (n == 1) {
        Complex w = one - z;
        if (abs(w) < Real(guard_radius, bits)) throw domain_error("li(1, z) is singular at z = 1");
        return -log(w);
    }
    if (z.im.is_zero() && z.re == Real(1L, bits)) return Complex(Real::zeta(static_cast<unsigned long>(n), bits));

    Real r = abs(z);
    if (r <= Real(0.5, bits)) return direct_series(n, z, bits);
    if (r >= Real(2L, bits)) {
        Complex inv = li_work(n, one / z, bits, guard_radius);
        Complex lg = log(-z);
        Real pi2_6 = Real::pi(bits) * Real::pi(bits) / 6L;
        if (n == 2) return -inv - Complex(pi2_6) - lg * lg / Real(2L, bits);
        return inv - lg * pi2_6 - lg * lg * lg / Real(6L, bits);
    }
    return log_series(n, z, bits);
}

}  // namespace

Complex li(int n, const Complex& z, const PrecisionPolicy& policy) {
    if (n < 1 || n > 3) throw invalid_argument("li supports weights 1, 2, 3");
    mpfr_prec_t work = policy.working_bits();
    Complex zw(z.re.rounded(work), z.im.rounded(work));
    Complex v = li_work(n, zw, work, policy.guard_radius);
    return Complex(v.re.rounded(policy.bits), v.im.rounded(policy.bits));
}

Real bloch_wigner(const Complex& z, const PrecisionPolicy& policy) {
    mpfr_prec_t work = policy.working_bits();
    if (z.im.is_zero()) return Real(policy.bits);
    Complex zw(z.re.rounded(work), z.im.rounded(work));
    Complex l2 = li_work(2, zw, work, policy.guard_radius);
    Complex one = real_complex(1, work);
    Real v = l2.im + arg(one - zw) * log(abs(zw));
    return v.rounded(policy.bits);
}

Real trilog_sv(const Complex& z, const PrecisionPolicy& policy) {
    if (z.is_zero()) throw domain_error("trilog_sv is undefined at z = 0");
    mpfr_prec_t work = policy.working_bits();
    Complex zw(z.re.rounded(work), z.im.rounded(work));
    Real lz = log(abs(zw));
    Real v = li_work(3, zw, work, policy.guard_radius).re;
    if (!lz.is_zero()) {
        v -= lz * li_work(2, zw, work, policy.guard_radius).re;
        Complex one = real_complex(1, work);
        v += lz * lz / 3L * (-log(abs(one - zw)));
    }
    return v.rounded(policy.bits);
}

}  // namespace hachow
