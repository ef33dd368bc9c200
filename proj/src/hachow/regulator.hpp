#pragma once

#include "hachow/cubical.hpp"
#include "hachow/deligne.hpp"
#include "hachow/polylog.hpp"
#include "hachow/quadrature.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace hachow {

// Symbolic expansion of products of the forms
//   lambda_a = -1/2 ((eps+1) dt_a/t_a + (eps-1) dtbar_a/tbar_a + d eps log t_a tbar_a)
// in L (x) E. Forms are coded 2a (holomorphic) and 2a+1 (antiholomorphic),
// kept sorted; logs are kept as a sorted index list.
class WangForm {
public:
    using Key = std::tuple<bool, std::vector<int>, std::vector<int>>;  // (d eps, logs, forms)
    using Poly = std::vector<mpq_class>;                              // eps coefficients

    static WangForm lambda(int a);
    static WangForm one();
    // eps-degree-0 part of lambda without the -1/2: (eps+1) w_a + (eps-1) wbar_a
    static WangForm holomorphic_part(int a);
    static WangForm d_eps_log(int a);  // d eps (x) log t_a tbar_a
    // W_n = lambda_0 ... lambda_{n-1}
    static WangForm wang(int n);
    // d eps coefficient by the product rule: (-1/2)^n sum_j (-1)^j l_j prod_{a != j} A_a
    static WangForm wang_d_eps_by_product_rule(int n);

    WangForm operator*(const WangForm& o) const;
    WangForm operator+(const WangForm& o) const;
    WangForm scaled(const mpq_class& k) const;
    WangForm d_eps_part() const;
    // Terms with exactly `k` factors of d eps and two forms, one of each type.
    WangForm curve_part(bool with_d_eps) const;

    const std::map<Key, Poly>& terms() const { return terms_; }
    bool operator==(const WangForm& o) const { return terms_ == o.terms_; }
    std::string to_string() const;

private:
    void add(const Key& k, const Poly& p);
    std::map<Key, Poly> terms_;
};

enum class Provenance { ClosedForm, Numeric, ExactZero };
std::string provenance_name(Provenance p);

struct RegulatorValue {
    DeligneClass value;
    Provenance provenance = Provenance::ExactZero;
    double error = 0;  // quadrature estimate, in class units
};

struct RegulatorOptions {
    PrecisionPolicy precision;
    QuadratureOptions quadrature;
};

// 1-dimensional point cycles: class -sum m log|sigma(x)|.
RegulatorValue regulator_points(const FormalCycle& z, const RegulatorOptions& opts = {});
// Closed form -(1/2pi) i L2(sigma a) for the curve (z, 1 - a/z, 1 - z).
RegulatorValue regulator_totaro(const FieldElement& a, const RegulatorOptions& opts = {});
// Curves in box^3 by integrating the d eps part of W_3 over both charts of P^1.
RegulatorValue regulator_curve_numeric(const FormalCycle& z, const RegulatorOptions& opts = {});
// Degree-0 element of a curve in box^2 (the eps-part of W_2), by quadrature.
TWElement regulator_curve_box2(const Generator& g, const RegulatorOptions& opts, double* error = nullptr);
// Degree-1 element h d eps of a curve in box^3, by quadrature.
TWElement regulator_curve_box3(const Generator& g, const RegulatorOptions& opts, double* error = nullptr);

struct Lemma19Report {
    double residue_check = 0;  // |(1/2 pi i) int d(f dy/y) + f(Div y)|, worst embedding
    double total = 0;          // |P(C)| scalar, worst embedding
    double error = 0;
};
Lemma19Report lemma19_check(const FormalCycle& curve, const RegulatorOptions& opts = {});

// -4 P(C'_a - C''_a) = (2/pi^2) L3(sigma a); accepts combinations of those pairs.
RegulatorValue regulator_goncharov_weight3(const FormalCycle& z, const RegulatorOptions& opts = {});
// Surfaces that split as a product of a curve in box^3 and a curve in box^2
// (slots shuffled): exact zero when the box^2 factor meets the vanishing
// criterion; `numeric` evaluates the TW product of both factors instead.
RegulatorValue regulator_split_surface(const FormalCycle& z, bool numeric, const RegulatorOptions& opts = {});

// Dispatch on the shape of the cycle; degenerate terms contribute exact zero.
RegulatorValue regulator(const FormalCycle& z, const RegulatorOptions& opts = {});

// Matches (z, 1 - a/z, 1 - z) and returns a.
std::optional<FieldElement> match_totaro(const Generator& g);
// Matches C'_a (sign +1) or C''_a (sign -1) and returns (a, sign).
std::optional<std::pair<FieldElement, int>> match_weight3(const Generator& g);

}  // namespace hachow
