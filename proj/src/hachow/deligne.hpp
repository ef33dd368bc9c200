#pragma once

#include "hachow/mp.hpp"

#include <string>
#include <vector>

namespace hachow {

// Polynomial in the simplicial coordinate eps with complex coefficients.
class EpsPoly {
public:
    explicit EpsPoly(mpfr_prec_t bits = 256) : bits_(bits) {}
    explicit EpsPoly(std::vector<Complex> coeffs);
    static EpsPoly constant(const Complex& c);
    static EpsPoly epsilon(mpfr_prec_t bits);

    mpfr_prec_t precision() const { return bits_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Complex coeff(int k) const;
    const std::vector<Complex>& coeffs() const { return c_; }

    EpsPoly& operator+=(const EpsPoly& o);
    EpsPoly& operator-=(const EpsPoly& o);
    friend EpsPoly operator+(EpsPoly a, const EpsPoly& b) { return a += b; }
    friend EpsPoly operator-(EpsPoly a, const EpsPoly& b) { return a -= b; }
    friend EpsPoly operator*(const EpsPoly& a, const EpsPoly& b);
    EpsPoly scaled(const Complex& k) const;
    EpsPoly operator-() const;

    Complex evaluate(const Complex& eps) const;
    EpsPoly derivative() const;
    Complex integral01() const;  // exact term-by-term integration over [0, 1]
    EpsPoly conj() const;

    // Max coefficient distance.
    Real distance(const EpsPoly& o) const;

private:
    void trim();

    mpfr_prec_t bits_;
    std::vector<Complex> c_;
};

// Element of the Thom-Whitney Deligne complex of a point, one component per
// complex embedding. Degree 0 holds g(eps), degree 1 holds h(eps) d eps.
struct TWElement {
    int twist = 0;
    int degree = 0;
    std::vector<EpsPoly> parts;

    static TWElement zero(int twist, int degree, int embeddings = 2, mpfr_prec_t bits = 256);
    static TWElement unit(int embeddings = 2, mpfr_prec_t bits = 256);

    bool is_zero() const;
    TWElement conjugate() const;  // conjugate coefficients, swap conjugate embeddings
    TWElement operator+(const TWElement& o) const;
    TWElement operator-(const TWElement& o) const;
    TWElement scaled(const Complex& k) const;
};

TWElement differential(const TWElement& x);
TWElement tw_product(const TWElement& x, const TWElement& y);

// Degree-0 boundary conditions: g(0) in (2 pi i)^p R, g(1) = 0 for p >= 1.
bool satisfies_boundary_conditions(const TWElement& x, const Real& tol);

// Per embedding value in R(p-1), written as scalar * i^(p-1) in units of
// (2 pi)^(p-1).
struct DeligneClass {
    int twist = 1;
    std::vector<Real> scalars;

    Complex value(int embedding) const;
    bool is_conjugation_fixed(const Real& tol) const;
    DeligneClass operator+(const DeligneClass& o) const;
    DeligneClass operator-(const DeligneClass& o) const;
    DeligneClass scaled(const Real& k) const;
    Real distance(const DeligneClass& o) const;
    // "-0.1457... * i" style rendering of value(k).
    std::string value_string(int embedding, int digits = 20) const;
};

DeligneClass class_of(const TWElement& x, int twist);
bool fixed_part_check(const TWElement& x, const Real& tol);

// pi_p(x) = (x + (-1)^p conj(x)) / 2
Complex project_twist(const Complex& x, int p);

}  // namespace hachow
