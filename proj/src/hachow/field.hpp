#pragma once

#include "hachow/mp.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hachow {

// Imaginary quadratic field Q(sqrt(-d)), d squarefree and positive. The
// generator w satisfies w^2 = -d; for d = 1 it is written i.
struct FieldSpec {
    long d = 1;

    static FieldSpec gaussian() { return FieldSpec{1}; }
    static FieldSpec parse(std::string_view name);  // "Q(i)", "Q(sqrt(-2))", ...

    std::string name() const;
    int r1() const { return 0; }
    int r2() const { return 1; }
    int degree() const { return 2; }
    // Embeddings are indexed 0 (w -> i*sqrt(d)) and 1 (its conjugate).
    int embedding_count() const { return 2; }
    static std::string embedding_name(int k) { return k == 0 ? "sigma" : "sigma_bar"; }
    static int conjugate_embedding(int k) { return 1 - k; }

    bool operator==(const FieldSpec& o) const { return d == o.d; }
};

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(mpq_class a, mpq_class b = 0, long d = 1);
    static FieldElement integer(long n, long d = 1) { return FieldElement(mpq_class(n), 0, d); }
    static FieldElement unit(long d = 1) { return FieldElement(0, 1, d); }  // w

    const mpq_class& re() const { return a_; }
    const mpq_class& im() const { return b_; }  // coefficient of w
    long d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return a_ == 1 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    FieldElement conj() const { return FieldElement(a_, -b_, d_); }
    mpq_class norm() const { return a_ * a_ + d_ * b_ * b_; }
    FieldElement inverse() const;
    FieldElement pow(long n) const;

    FieldElement operator-() const { return FieldElement(-a_, -b_, d_); }
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

    friend FieldElement operator+(FieldElement x, const FieldElement& y) { return x += y; }
    friend FieldElement operator-(FieldElement x, const FieldElement& y) { return x -= y; }
    friend FieldElement operator*(FieldElement x, const FieldElement& y) { return x *= y; }
    friend FieldElement operator/(FieldElement x, const FieldElement& y) { return x /= y; }

    bool operator==(const FieldElement& o) const { return a_ == o.a_ && b_ == o.b_ && d_ == o.d_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    // Arbitrary total order for use as a map key.
    bool operator<(const FieldElement& o) const;

    // "a/b + c/d*i"; parse accepts any arithmetic expression in rationals and i (or w).
    std::string to_string() const;
    static FieldElement parse(std::string_view text, const FieldSpec& field = FieldSpec::gaussian());

    Complex embed(int embedding, mpfr_prec_t bits) const;

private:
    void check_same_field(const FieldElement& o) const;

    mpq_class a_ = 0;
    mpq_class b_ = 0;
    long d_ = 1;
};

std::vector<Complex> embed(const FieldElement& x, mpfr_prec_t bits);

bool is_log_kernel(const FieldElement& x);

// Gaussian integers and factorization over Z[i].
struct GaussianInteger {
    mpz_class re;
    mpz_class im;

    mpz_class norm() const { return re * re + im * im; }
    bool operator==(const GaussianInteger& o) const { return re == o.re && im == o.im; }
    // Canonical prime order: by norm, then real part, then imaginary part.
    bool operator<(const GaussianInteger& o) const;
    FieldElement to_field() const { return FieldElement(mpq_class(re), mpq_class(im), 1); }
    std::string to_string() const { return to_field().to_string(); }
};

struct GaussianFactorization {
    int unit_exponent = 0;  // unit is i^unit_exponent, 0..3
    std::vector<std::pair<GaussianInteger, long>> factors;  // sorted, exponents nonzero

    FieldElement reassemble() const;
    std::string to_string() const;
};

inline constexpr std::uint64_t kDefaultFactorBound = 1000000000000ULL;

// Throws FactorBound if a numerator or denominator norm exceeds `bound`.
GaussianFactorization factor(const FieldElement& x, std::uint64_t bound = kDefaultFactorBound);

// First-quadrant representative (re > 0, im >= 0) of the associate class.
GaussianInteger canonical_associate(const GaussianInteger& g);

}  // namespace hachow
