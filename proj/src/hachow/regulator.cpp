#include "hachow/regulator.hpp"

#include "hachow/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace hachow {

// ---------------------------------------------------------------- WangForm

namespace {

WangForm::Poly poly_mul(const WangForm::Poly& a, const WangForm::Poly& b) {
    if (a.empty() || b.empty()) return {};
    WangForm::Poly r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

void poly_trim(WangForm::Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Sorts anticommuting symbols; returns 0 on a repeated symbol, else the sign.
int sort_forms(std::vector<int>& f) {
    int sign = 1;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j + 1 < f.size() - i; ++j)
            if (f[j] > f[j + 1]) std::swap(f[j], f[j + 1]), sign = -sign;
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
        if (f[i] == f[i + 1]) return 0;
    return sign;
}

}  // namespace

void WangForm::add(const Key& k, const Poly& p) {
    Poly& slot = terms_[k];
    if (slot.size() < p.size()) slot.resize(p.size(), mpq_class(0));
    for (std::size_t i = 0; i < p.size(); ++i) slot[i] += p[i];
    poly_trim(slot);
    if (slot.empty()) terms_.erase(k);
}

WangForm WangForm::one() {
    WangForm w;
    w.add({false, {}, {}}, {mpq_class(1)});
    return w;
}

WangForm WangForm::holomorphic_part(int a) {
    WangForm w;
    w.add({false, {}, {2 * a}}, {mpq_class(1), mpq_class(1)});
    w.add({false, {}, {2 * a + 1}}, {mpq_class(-1), mpq_class(1)});
    return w;
}

WangForm WangForm::d_eps_log(int a) {
    WangForm w;
    w.add({true, {a}, {}}, {mpq_class(1)});
    return w;
}

WangForm WangForm::lambda(int a) { return (holomorphic_part(a) + d_eps_log(a)).scaled(mpq_class(-1, 2)); }

WangForm WangForm::wang(int n) {
    WangForm w = one();
    for (int a = 0; a < n; ++a) w = w * lambda(a);
    return w;
}

WangForm WangForm::wang_d_eps_by_product_rule(int n) {
    WangForm sum;
    for (int j = 0; j < n; ++j) {
        WangForm prod = one();
        for (int a = 0; a < n; ++a)
            if (a != j) prod = prod * holomorphic_part(a);
        sum = sum + (d_eps_log(j) * prod).scaled(mpq_class(j % 2 ? -1 : 1));
    }
    mpq_class k = 1;
    for (int a = 0; a < n; ++a) k *= mpq_class(-1, 2);
    return sum.scaled(k);
}

WangForm WangForm::operator*(const WangForm& o) const {
    WangForm r;
    for (const auto& [ka, pa] : terms_)
        for (const auto& [kb, pb] : o.terms_) {
            const auto& [da, la, fa] = ka;
            const auto& [db, lb, fb] = kb;
            if (da && db) continue;
            // moving the eps-part of the right factor past the forms of the left one
            int sign = (db && fa.size() % 2) ? -1 : 1;
            std::vector<int> forms = fa;
            forms.insert(forms.end(), fb.begin(), fb.end());
            int s = sort_forms(forms);
            if (s == 0) continue;
            std::vector<int> logs = la;
            logs.insert(logs.end(), lb.begin(), lb.end());
            std::sort(logs.begin(), logs.end());
            Poly p = poly_mul(pa, pb);
            for (auto& c : p) c *= sign * s;
            r.add({da || db, logs, forms}, p);
        }
    return r;
}

WangForm WangForm::operator+(const WangForm& o) const {
    WangForm r = *this;
    for (const auto& [k, p] : o.terms_) r.add(k, p);
    return r;
}

WangForm WangForm::scaled(const mpq_class& k) const {
    WangForm r;
    for (const auto& [key, p] : terms_) {
        Poly q = p;
        for (auto& c : q) c *= k;
        r.add(key, q);
    }
    return r;
}

WangForm WangForm::d_eps_part() const {
    WangForm r;
    for (const auto& [k, p] : terms_)
        if (std::get<0>(k)) r.add(k, p);
    return r;
}

WangForm WangForm::curve_part(bool with_d_eps) const {
    WangForm r;
    for (const auto& [k, p] : terms_) {
        const auto& forms = std::get<2>(k);
        if (std::get<0>(k) != with_d_eps || forms.size() != 2) continue;
        if ((forms[0] % 2) == (forms[1] % 2)) continue;  // two forms of one type vanish on a curve
        r.add(k, p);
    }
    return r;
}

std::string WangForm::to_string() const {
    std::string out;
    for (const auto& [k, p] : terms_) {
        const auto& [d, logs, forms] = k;
        if (!out.empty()) out += " + ";
        out += "(";
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out += " + ";
            out += p[i].get_str() + (i ? "*eps^" + std::to_string(i) : "");
        }
        out += ")";
        if (d) out += " deps";
        for (int l : logs) out += " L" + std::to_string(l + 1);
        for (int f : forms) out += (f % 2 ? " wbar" : " w") + std::to_string(f / 2 + 1);
    }
    return out.empty() ? "0" : out;
}

// --------------------------------------------------------------- helpers

std::string provenance_name(Provenance p) {
    switch (p) {
    case Provenance::ClosedForm: return "closed-form";
    case Provenance::Numeric: return "numeric";
    case Provenance::ExactZero: return "exact-zero";
    }
    return "unknown";
}

namespace {

using cd = std::complex<double>;

DeligneClass zero_class(int twist, mpfr_prec_t bits) { return DeligneClass{twist, {Real(bits), Real(bits)}}; }

cd to_cd(const Complex& z) { return cd(z.re.to_double(), z.im.to_double()); }

// Coordinate of a curve as c * prod (z - r)^m under one embedding.
struct NumericFactor {
    cd c;
    std::vector<std::pair<cd, long>> roots;
};

NumericFactor numeric(const Coordinate& coord, int embedding) {
    if (!coord.is_function) {
        if (coord.constant.infinite || coord.constant.is_zero())
            throw domain_error("curve lies in a face: constant coordinate " + coord.constant.to_string());
        return {to_cd(coord.constant.value.embed(embedding, 64)), {}};
    }
    NumericFactor n{to_cd(coord.f.constant().embed(embedding, 64)), {}};
    for (const auto& [l, m] : coord.f.factors()) n.roots.emplace_back(to_cd((-l.a0 / l.a1).embed(embedding, 64)), m);
    return n;
}

Coordinate at_infinity_chart(const Coordinate& c) {
    if (!c.is_function) return c;
    long d = c.f.constant().d();
    FieldElement zero(0, 0, d), one(1, 0, d);
    return Coordinate::of(c.f.substitute_mobius(zero, one, one, zero));  // z = 1/w
}

struct CurveTerm {
    int b, c;           // holomorphic slot b, antiholomorphic slot c
    cd form;            // w_b ^ wbar_c as a multiple of u_b conj(u_c) dx dy
    std::vector<int> logs;
    std::vector<double> poly;
};

std::vector<CurveTerm> curve_terms(int n, bool with_d_eps) {
    std::vector<CurveTerm> out;
    const WangForm part = WangForm::wang(n).curve_part(with_d_eps);
    for (const auto& [k, p] : part.terms()) {
        const auto& [d, logs, forms] = k;
        CurveTerm t;
        // dz ^ dzbar = -2i dx dy
        if (forms[0] % 2 == 0) t.b = forms[0] / 2, t.c = forms[1] / 2, t.form = cd(0, -2);
        else t.b = forms[1] / 2, t.c = forms[0] / 2, t.form = cd(0, 2);
        t.logs = logs;
        for (const auto& q : p) t.poly.push_back(q.get_d());
        out.push_back(t);
    }
    return out;
}

// Integral over P^1 of sum_terms poly(eps) prod L * (form), one output per eps power.
std::vector<cd> integrate_curve(const std::vector<Coordinate>& coords, const std::vector<CurveTerm>& terms, int embedding,
                                const QuadratureOptions& q, double& error) {
    std::size_t degree = 0;
    for (const auto& t : terms) degree = std::max(degree, t.poly.size());
    std::vector<cd> total(degree, cd(0));
    error = 0;
    for (int chart = 0; chart < 2; ++chart) {
        std::vector<NumericFactor> fs;
        std::vector<cd> singular;
        for (const auto& c : coords) {
            fs.push_back(numeric(chart ? at_infinity_chart(c) : c, embedding));
            for (const auto& r : fs.back().roots) singular.push_back(r.first);
        }
        std::size_t n = fs.size();
        std::vector<double> L(n);
        std::vector<cd> u(n);
        PlaneIntegrand f = [&](cd z, std::vector<cd>& out) {
            for (std::size_t a = 0; a < n; ++a) {
                double l = std::log(std::norm(fs[a].c));
                cd du = 0;
                for (const auto& [r, m] : fs[a].roots) {
                    cd d = z - r;
                    l += m * std::log(std::norm(d));
                    du += double(m) / d;
                }
                L[a] = l, u[a] = du;
            }
            std::fill(out.begin(), out.end(), cd(0));
            for (const auto& t : terms) {
                cd v = t.form * u[t.b] * std::conj(u[t.c]);
                for (int l : t.logs) v *= L[l];
                for (std::size_t k = 0; k < t.poly.size(); ++k) out[k] += t.poly[k] * v;
            }
        };
        QuadratureResult r = integrate_unit_disk(f, degree, singular, q);
        for (std::size_t k = 0; k < degree; ++k) total[k] += r.value[k];
        error += r.error;
    }
    return total;
}

TWElement curve_element(const Generator& g, int n, bool with_d_eps, int twist, const RegulatorOptions& opts,
                        double* error) {
    if (g.arity != 1 || g.dimension() != n)
        throw unsupported_shape("expected a curve in a box of dimension " + std::to_string(n));
    mpfr_prec_t bits = opts.precision.bits;
    auto terms = curve_terms(n, with_d_eps);
    TWElement x = TWElement::zero(twist, with_d_eps ? 1 : 0, 2, bits);
    // current of integration carries 1/(2 pi i)
    const cd scale = 1.0 / cd(0, 2 * M_PI);
    double worst = 0;
    for (int e = 0; e < 2; ++e) {
        double err = 0;
        std::vector<cd> v = integrate_curve(g.coords, terms, e, opts.quadrature, err);
        std::vector<Complex> coeffs;
        for (const cd& c : v) {
            cd s = c * scale;
            coeffs.push_back(Complex(Real(s.real(), bits), Real(s.imag(), bits)));
        }
        x.parts[e] = EpsPoly(coeffs);
        worst = std::max(worst, err / (2 * M_PI));
    }
    if (error) *error = worst;
    return x;
}

FactoredRational swap_variables(const FactoredRational& f) {
    FactoredRational r(f.constant());
    for (const auto& [l, m] : f.factors()) {
        const FieldElement& lead = l.a2.is_zero() ? l.a1 : l.a2;
        r = r * FactoredRational::form(LinearForm::normalized(l.a2, l.a1, l.a0), m).scaled(lead.pow(m));
    }
    return r;
}

Generator swapped(const Generator& g) {
    std::vector<Coordinate> cs;
    for (const auto& c : g.coords) cs.push_back(c.is_function ? Coordinate::of(swap_variables(c.f)) : c);
    return Generator::surface(std::move(cs));
}

// The root a of a coordinate (z_v - a)/z_v.
std::optional<FieldElement> shifted_root(const Coordinate& c) {
    if (!c.is_function || !c.f.constant().is_one() || c.f.factors().size() != 2) return std::nullopt;
    std::optional<FieldElement> a;
    bool has_pole = false;
    for (const auto& [l, m] : c.f.factors()) {
        bool univariate = l.a1.is_zero() != l.a2.is_zero();
        if (!univariate) return std::nullopt;
        if (m == -1 && l.a0.is_zero()) has_pole = true;
        else if (m == 1) a = -l.a0;
        else return std::nullopt;
    }
    if (!has_pole) return std::nullopt;
    return a;
}

const Generator& only_generator(const FormalCycle& z) { return z.terms().begin()->first; }

bool divisors_disjoint(const Coordinate& x, const Coordinate& y) {
    auto support = [](const Coordinate& c) {
        std::vector<P1Value> s;
        if (!c.is_function) return s;
        for (const auto& [l, m] : c.f.factors()) s.push_back(P1Value(-l.a0 / l.a1));
        if (c.f.degree(0) != 0) s.push_back(P1Value::inf());
        return s;
    };
    auto sx = support(x), sy = support(y);
    for (const auto& p : sx)
        if (std::find(sy.begin(), sy.end(), p) != sy.end()) return false;
    return true;
}

struct Split {
    std::vector<int> slots[2];
    Generator factor[2];
    int sign = 1;
};

// Splits a surface whose slots each depend on exactly one parameter.
std::optional<Split> split_surface(const Generator& g) {
    if (g.arity != 2) return std::nullopt;
    Split s;
    std::vector<Coordinate> cs[2];
    for (int k = 0; k < g.dimension(); ++k) {
        const Coordinate& c = g.coords[k];
        bool d0 = c.depends_on(0), d1 = c.depends_on(1);
        if (d0 == d1) return std::nullopt;
        int v = d1 ? 1 : 0;
        s.slots[v].push_back(k);
        cs[v].push_back(v ? Coordinate::of(swap_variables(c.f)) : c);
    }
    for (int v = 0; v < 2; ++v) s.factor[v] = Generator::curve(cs[v]);
    // sign of the shuffle that lists the slots of factor 0 first
    std::vector<int> order = s.slots[0];
    order.insert(order.end(), s.slots[1].begin(), s.slots[1].end());
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (order[i] > order[j]) s.sign = -s.sign;
    return s;
}

}  // namespace

// -------------------------------------------------------------- regulators

TWElement regulator_curve_box2(const Generator& g, const RegulatorOptions& opts, double* error) {
    return curve_element(g, 2, false, 1, opts, error);
}

TWElement regulator_curve_box3(const Generator& g, const RegulatorOptions& opts, double* error) {
    return curve_element(g, 3, true, 2, opts, error);
}

RegulatorValue regulator_points(const FormalCycle& z, const RegulatorOptions& opts) {
    mpfr_prec_t bits = opts.precision.bits;
    if (z.dimension() != 1) throw invalid_argument("regulator_points expects points in a box of dimension 1");
    TWElement x = TWElement::zero(1, 1, 2, bits);
    for (const auto& [g, m] : z.terms()) {
        if (g.arity != 0) throw invalid_argument("regulator_points expects a point cycle");
        const P1Value& v = g.coords[0].constant;
        if (v.infinite || v.is_zero()) throw domain_error("point coordinate " + v.to_string() + " lies in a face");
        for (int e = 0; e < 2; ++e) {
            // d eps part of lambda at a point: -1/2 log t tbar
            Real h = -log(norm(v.value.embed(e, bits))) / 2L * m;
            x.parts[e] += EpsPoly::constant(Complex(h, Real(bits)));
        }
    }
    RegulatorValue r{class_of(x, 1), z.is_zero() ? Provenance::ExactZero : Provenance::ClosedForm, 0};
    return r;
}

RegulatorValue regulator_totaro(const FieldElement& a, const RegulatorOptions& opts) {
    if (a.is_zero() || a.is_one()) throw domain_error("Totaro curve needs a parameter outside {0, 1}");
    mpfr_prec_t bits = opts.precision.bits;
    DeligneClass c{2, {}};
    Real two_pi = Real::pi(bits) * 2L;
    for (int e = 0; e < 2; ++e) c.scalars.push_back(-bloch_wigner(a.embed(e, bits), opts.precision) / two_pi);
    return {c, Provenance::ClosedForm, 0};
}

RegulatorValue regulator_curve_numeric(const FormalCycle& z, const RegulatorOptions& opts) {
    mpfr_prec_t bits = opts.precision.bits;
    TWElement sum = TWElement::zero(2, 1, 2, bits);
    double err = 0;
    for (const auto& [g, m] : z.terms()) {
        double e = 0;
        TWElement x = regulator_curve_box3(g, opts, &e);
        sum = sum + x.scaled(Complex(Real(m, bits), Real(bits)));
        err += std::abs(double(m)) * e;
    }
    return {class_of(sum, 2), Provenance::Numeric, err / (2 * M_PI)};
}

Lemma19Report lemma19_check(const FormalCycle& curve, const RegulatorOptions& opts) {
    if (curve.terms().size() != 1) throw invalid_argument("lemma19_check expects a single curve");
    const Generator& g = only_generator(curve);
    if (g.arity != 1 || g.dimension() != 2) throw invalid_argument("lemma19_check expects a curve in a box of dimension 2");
    const Coordinate &x = g.coords[0], &y = g.coords[1];
    if (!divisors_disjoint(x, y)) throw admissibility_error("divisors of the two coordinates meet on the curve");
    Lemma19Report rep;
    double err = 0;
    TWElement total = regulator_curve_box2(g, opts, &err);
    rep.error = err;
    for (const auto& p : total.parts)
        for (const auto& c : p.coeffs()) rep.total = std::max(rep.total, abs(c).to_double());

    // (1/2 pi i) int d(f dy/y) with f = log x xbar equals (1/pi) int conj(u_x) u_y dx dy.
    std::vector<CurveTerm> terms(1);
    terms[0].b = 1, terms[0].c = 0, terms[0].form = cd(1, 0), terms[0].poly = {1.0};
    mpfr_prec_t bits = opts.precision.bits;
    for (int e = 0; e < 2; ++e) {
        double qerr = 0;
        cd integral = integrate_curve(g.coords, terms, e, opts.quadrature, qerr)[0] / M_PI;
        rep.error = std::max(rep.error, qerr / M_PI);
        // f(Div y) from exact divisor points
        Real fdiv(bits);
        if (y.is_function) {
            std::vector<std::pair<P1Value, long>> div;
            for (const auto& [l, m] : y.f.factors()) div.emplace_back(P1Value(-l.a0 / l.a1), m);
            if (y.f.degree(0) != 0) div.emplace_back(P1Value::inf(), -y.f.degree(0));
            for (const auto& [p, m] : div) {
                P1Value xv = x.is_function ? x.f.evaluate(p) : x.constant;
                if (xv.infinite || xv.is_zero()) throw admissibility_error("x vanishes on the divisor of y");
                fdiv += log(norm(xv.value.embed(e, bits))) * m;
            }
        }
        double re = integral.real() + fdiv.to_double(), im = integral.imag();
        rep.residue_check = std::max(rep.residue_check, std::hypot(re, im));
    }
    return rep;
}

std::optional<FieldElement> match_totaro(const Generator& g) {
    if (g.arity != 1 || g.dimension() != 3) return std::nullopt;
    auto a = shifted_root(g.coords[1]);
    if (!a || a->is_zero() || a->is_one()) return std::nullopt;
    if (only_generator(cycles::totaro(*a)) == g) return a;
    return std::nullopt;
}

std::optional<std::pair<FieldElement, int>> match_weight3(const Generator& g) {
    if (g.arity != 2 || g.dimension() != 5) return std::nullopt;
    for (const Generator& h : {g, swapped(g)}) {
        auto a = shifted_root(h.coords[1]);
        if (!a || a->is_zero()) continue;
        if (only_generator(cycles::c_prime(*a)) == h) return std::make_pair(*a, 1);
        if (only_generator(cycles::c_double_prime(*a)) == h) return std::make_pair(*a, -1);
    }
    return std::nullopt;
}

RegulatorValue regulator_goncharov_weight3(const FormalCycle& z, const RegulatorOptions& opts) {
    mpfr_prec_t bits = opts.precision.bits;
    std::map<FieldElement, long> net, prime;
    for (const auto& [g, m] : z.terms()) {
        auto match = match_weight3(g);
        if (!match) throw unsupported_shape("no closed form for the weight-3 generator " + g.to_string());
        net[match->first] += m;
        if (match->second > 0) prime[match->first] += m;
    }
    DeligneClass c = zero_class(3, bits);
    Real pi2 = Real::pi(bits) * Real::pi(bits);
    for (const auto& [a, m] : net) {
        if (m != 0) throw unsupported_shape("C'_a and C''_a must appear with opposite multiplicities (a = " + a.to_string() + ")");
        long k = prime[a];
        for (int e = 0; e < 2; ++e) {
            // value -k L3 / (2 pi^2) in R(2); the stored scalar is value / i^2
            c.scalars[e] += trilog_sv(a.embed(e, bits), opts.precision) / (pi2 * 2L) * k;
        }
    }
    return {c, z.is_zero() ? Provenance::ExactZero : Provenance::ClosedForm, 0};
}

RegulatorValue regulator_split_surface(const FormalCycle& z, bool numeric, const RegulatorOptions& opts) {
    mpfr_prec_t bits = opts.precision.bits;
    TWElement sum = TWElement::zero(3, 1, 2, bits);
    double err = 0;
    for (const auto& [g, m] : z.terms()) {
        auto s = split_surface(g);
        if (!s) throw unsupported_shape("surface " + g.to_string() + " is not a product of two curves");
        int big = s->factor[0].dimension() == 3 ? 0 : 1;
        const Generator &c3 = s->factor[big], &c2 = s->factor[1 - big];
        if (c3.dimension() != 3 || c2.dimension() != 2)
            throw unsupported_shape("surface " + g.to_string() + " does not split as box^3 x box^2");
        if (!divisors_disjoint(c2.coords[0], c2.coords[1]))
            throw unsupported_shape("box^2 factor of " + g.to_string() + " has meeting divisors");
        if (!numeric) continue;
        double e3 = 0, e2 = 0;
        TWElement h = regulator_curve_box3(c3, opts, &e3);
        TWElement q = regulator_curve_box2(c2, opts, &e2);
        // W_5 splits as W_3 W_2 when the box^3 slots come first
        // W_2 W_3 = W_3 W_2 (both even), and swapping the parameters keeps the orientation
        int sign = s->sign;
        TWElement prod = tw_product(h, q);
        prod.twist = 3;
        sum = sum + prod.scaled(Complex(Real(static_cast<long>(sign * m), bits), Real(bits)));
        double mag = 0;
        for (const auto& p : q.parts)
            for (const auto& c : p.coeffs()) mag = std::max(mag, abs(c).to_double());
        err += std::abs(double(m)) * (e2 * 10 + e3 * mag);
    }
    if (!numeric) return {zero_class(3, bits), Provenance::ExactZero, 0};
    return {class_of(sum, 3), Provenance::Numeric, err};
}

RegulatorValue regulator(const FormalCycle& z, const RegulatorOptions& opts) {
    mpfr_prec_t bits = opts.precision.bits;
    FormalCycle live(z.dimension());
    for (const auto& [g, m] : z.terms())
        if (!is_degenerate(g)) live.add(g, m);
    int n = z.dimension();
    if (live.is_zero()) {
        int p = std::max(1, z.codimension() > 0 ? z.codimension() : n);
        return {zero_class(p, bits), Provenance::ExactZero, 0};
    }
    int p = live.codimension();
    if (p < 0) throw invalid_argument("cycle mixes generators of different codimension");
    int arity = n - p;
    if (arity == 0) {
        if (n == 1) return regulator_points(live, opts);
        return {zero_class(p, bits), Provenance::ExactZero, 0};  // d eps ^ d eps = 0
    }
    if (arity == 1 && n == 3) {
        RegulatorValue out{zero_class(2, bits), Provenance::ClosedForm, 0};
        FormalCycle rest(3);
        for (const auto& [g, m] : live.terms()) {
            if (auto a = match_totaro(g)) out.value = out.value + regulator_totaro(*a, opts).value.scaled(Real(m, bits));
            else rest.add(g, m);
        }
        if (!rest.is_zero()) {
            RegulatorValue num = regulator_curve_numeric(rest, opts);
            out.value = out.value + num.value;
            out.provenance = Provenance::Numeric;
            out.error = num.error;
        }
        return out;
    }
    if (arity == 2 && n == 5) {
        FormalCycle closed(5), split(5);
        for (const auto& [g, m] : live.terms()) {
            if (match_weight3(g)) closed.add(g, m);
            else split.add(g, m);
        }
        RegulatorValue out = regulator_goncharov_weight3(closed, opts);
        if (!split.is_zero()) regulator_split_surface(split, false, opts);  // throws unless it vanishes
        if (closed.is_zero()) out.provenance = Provenance::ExactZero;
        return out;
    }
    throw unsupported_shape("no regulator for generators of dimension " + std::to_string(arity) + " in a box of dimension " +
                            std::to_string(n));
}

}  // namespace hachow
