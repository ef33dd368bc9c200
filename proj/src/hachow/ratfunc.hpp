#pragma once

#include "hachow/field.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hachow {

// A point of P^1(F): a field element or infinity.
struct P1Value {
    bool infinite = false;
    FieldElement value;

    P1Value() = default;
    P1Value(FieldElement v) : value(std::move(v)) {}
    static P1Value inf() {
        P1Value p;
        p.infinite = true;
        return p;
    }
    bool is_zero() const { return !infinite && value.is_zero(); }
    bool is_one() const { return !infinite && value.is_one(); }
    bool operator==(const P1Value& o) const;
    bool operator!=(const P1Value& o) const { return !(*this == o); }
    bool operator<(const P1Value& o) const;
    std::string to_string() const;
};

// a1*z1 + a2*z2 + a0, scaled so that the first nonzero of (a1, a2) is 1.
struct LinearForm {
    FieldElement a1, a2, a0;

    static LinearForm normalized(FieldElement a1, FieldElement a2, FieldElement a0);
    static LinearForm root(const FieldElement& a, int var = 0);  // z_var - a

    bool uses(int var) const { return var == 0 ? !a1.is_zero() : !a2.is_zero(); }
    bool operator==(const LinearForm& o) const { return a1 == o.a1 && a2 == o.a2 && a0 == o.a0; }
    bool operator<(const LinearForm& o) const;
    std::string to_string(const std::vector<std::string>& names) const;
};

// Univariate or bivariate polynomial over F, keyed by exponents (e1, e2).
using Polynomial = std::map<std::pair<int, int>, FieldElement>;

// c * prod l_j^{m_j} with distinct linear forms l_j and nonzero exponents.
class FactoredRational {
public:
    FactoredRational() : c_(1) {}
    explicit FactoredRational(FieldElement c);
    static FactoredRational variable(int var, long d = 1);
    static FactoredRational form(const LinearForm& l, long m = 1);

    const FieldElement& constant() const { return c_; }
    const std::map<LinearForm, long>& factors() const { return f_; }

    bool is_constant() const { return f_.empty(); }
    bool depends_on(int var) const;
    // Total order of vanishing at infinity in variable `var` is -degree(var).
    long degree(int var) const;

    FactoredRational operator*(const FactoredRational& o) const;
    FactoredRational operator/(const FactoredRational& o) const;
    FactoredRational pow(long n) const;
    FactoredRational scaled(const FieldElement& k) const;

    // Exact value at a finite or infinite parameter (univariate in var 0).
    P1Value evaluate(const P1Value& z) const;

    // Substitute z -> (alpha w + beta)/(gamma w + delta) (univariate, var 0).
    FactoredRational substitute_mobius(const FieldElement& alpha, const FieldElement& beta, const FieldElement& gamma,
                                       const FieldElement& delta) const;

    Polynomial numerator_polynomial() const;  // requires all exponents >= 0

    bool operator==(const FactoredRational& o) const { return c_ == o.c_ && f_ == o.f_; }
    bool operator<(const FactoredRational& o) const;
    std::string to_string(const std::vector<std::string>& names) const;

private:
    void add_factor(const LinearForm& l, long m);

    FieldElement c_;
    std::map<LinearForm, long> f_;
};

// Sum of two factored rationals, re-split into linear factors over F. Returns
// nullopt for the zero function. Throws UnsupportedShape when the sum does not
// split into linear forms.
std::optional<FactoredRational> add(const FactoredRational& x, const FactoredRational& y);

// Splits a polynomial into linear factors over Q(i); nullopt for zero.
std::optional<FactoredRational> split_polynomial(const Polynomial& p);

}  // namespace hachow
