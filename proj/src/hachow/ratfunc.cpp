#include "hachow/ratfunc.hpp"

#include "hachow/errors.hpp"

#include <algorithm>

namespace hachow {

// ------------------------------------------------------------------ P1Value

bool P1Value::operator==(const P1Value& o) const {
    if (infinite || o.infinite) return infinite == o.infinite;
    return value == o.value;
}

bool P1Value::operator<(const P1Value& o) const {
    if (infinite != o.infinite) return !infinite;  // finite values first
    if (infinite) return false;
    return value < o.value;
}

std::string P1Value::to_string() const { return infinite ? "inf" : value.to_string(); }

// --------------------------------------------------------------- LinearForm

LinearForm LinearForm::normalized(FieldElement a1, FieldElement a2, FieldElement a0) {
    FieldElement lead = !a1.is_zero() ? a1 : a2;
    if (lead.is_zero()) throw invalid_argument("linear form without variables");
    FieldElement inv = lead.inverse();
    return LinearForm{a1 * inv, a2 * inv, a0 * inv};
}

LinearForm LinearForm::root(const FieldElement& a, int var) {
    FieldElement zero(0, 0, a.d()), one(1, 0, a.d());
    return var == 0 ? LinearForm{one, zero, -a} : LinearForm{zero, one, -a};
}

bool LinearForm::operator<(const LinearForm& o) const {
    if (a1 != o.a1) return a1 < o.a1;
    if (a2 != o.a2) return a2 < o.a2;
    return a0 < o.a0;
}

namespace {

// Splits a coefficient into a sign and a printable magnitude.
std::pair<int, std::string> signed_magnitude(const FieldElement& c) {
    if (c.is_rational()) {
        mpq_class r = c.re();
        return {r < 0 ? -1 : 1, mpq_class(abs(r)).get_str()};
    }
    if (c.re() == 0) {
        FieldElement m = c.im() < 0 ? -c : c;
        return {c.im() < 0 ? -1 : 1, m.to_string()};
    }
    if (c.re() < 0) return {-1, "(" + (-c).to_string() + ")"};
    return {1, "(" + c.to_string() + ")"};
}

}  // namespace

std::string LinearForm::to_string(const std::vector<std::string>& names) const {
    std::string out;
    auto append = [&](int sign, const std::string& text) {
        if (out.empty()) out = sign < 0 ? "-" + text : text;
        else out += (sign < 0 ? " - " : " + ") + text;
    };
    const FieldElement* coeffs[2] = {&a1, &a2};
    for (int v = 0; v < 2; ++v) {
        if (coeffs[v]->is_zero()) continue;
        auto [sign, mag] = signed_magnitude(*coeffs[v]);
        append(sign, mag == "1" ? names.at(v) : mag + "*" + names.at(v));
    }
    if (!a0.is_zero()) {
        auto [sign, mag] = signed_magnitude(a0);
        append(sign, mag);
    }
    return out;
}

// --------------------------------------------------------- FactoredRational

FactoredRational::FactoredRational(FieldElement c) : c_(std::move(c)) {
    if (c_.is_zero()) throw invalid_argument("factored rational with zero constant");
}

FactoredRational FactoredRational::variable(int var, long d) {
    return form(LinearForm::root(FieldElement(0, 0, d), var));
}

FactoredRational FactoredRational::form(const LinearForm& l, long m) {
    FactoredRational f(FieldElement(1, 0, l.a0.d()));
    f.add_factor(l, m);
    return f;
}

void FactoredRational::add_factor(const LinearForm& l, long m) {
    if (m == 0) return;
    long& e = f_[l];
    e += m;
    if (e == 0) f_.erase(l);
}

bool FactoredRational::depends_on(int var) const {
    return std::any_of(f_.begin(), f_.end(), [var](const auto& kv) { return kv.first.uses(var); });
}

long FactoredRational::degree(int var) const {
    long d = 0;
    for (const auto& [l, m] : f_)
        if (l.uses(var)) d += m;
    return d;
}

FactoredRational FactoredRational::operator*(const FactoredRational& o) const {
    FactoredRational r = *this;
    r.c_ *= o.c_;
    for (const auto& [l, m] : o.f_) r.add_factor(l, m);
    return r;
}

FactoredRational FactoredRational::operator/(const FactoredRational& o) const { return *this * o.pow(-1); }

FactoredRational FactoredRational::pow(long n) const {
    FactoredRational r(c_.pow(n));
    if (n == 0) return r;
    for (const auto& [l, m] : f_) r.add_factor(l, m * n);
    return r;
}

FactoredRational FactoredRational::scaled(const FieldElement& k) const {
    FactoredRational r = *this;
    r.c_ *= k;
    if (r.c_.is_zero()) throw invalid_argument("scaling factored rational by zero");
    return r;
}

P1Value FactoredRational::evaluate(const P1Value& z) const {
    if (depends_on(1)) throw invalid_argument("evaluate expects a univariate function");
    if (z.infinite) {
        long d = degree(0);
        if (d < 0) return P1Value(FieldElement(0, 0, c_.d()));
        if (d > 0) return P1Value::inf();
        return P1Value(c_);
    }
    long order = 0;
    FieldElement prod = c_;
    for (const auto& [l, m] : f_) {
        FieldElement v = l.a1 * z.value + l.a0;
        if (v.is_zero()) order += m;
        else prod *= v.pow(m);
    }
    if (order > 0) return P1Value(FieldElement(0, 0, c_.d()));
    if (order < 0) return P1Value::inf();
    return P1Value(prod);
}

FactoredRational FactoredRational::substitute_mobius(const FieldElement& alpha, const FieldElement& beta,
                                                     const FieldElement& gamma, const FieldElement& delta) const {
    if (depends_on(1)) throw invalid_argument("substitute_mobius expects a univariate function");
    FactoredRational r(c_);
    for (const auto& [l, m] : f_) {
        FieldElement p = l.a1 * alpha + l.a0 * gamma;
        FieldElement q = l.a1 * beta + l.a0 * delta;
        if (!p.is_zero()) r = r * FactoredRational::form(LinearForm::normalized(p, FieldElement(0, 0, p.d()), q), m)
                                      .scaled(p.pow(m));
        else r = r.scaled(q.pow(m));
        if (!gamma.is_zero())
            r = r * FactoredRational::form(LinearForm::normalized(gamma, FieldElement(0, 0, p.d()), delta), -m)
                        .scaled(gamma.pow(-m));
        else r = r.scaled(delta.pow(-m));
    }
    return r;
}

namespace {

Polynomial multiply(const Polynomial& x, const Polynomial& y) {
    Polynomial r;
    for (const auto& [ex, cx] : x)
        for (const auto& [ey, cy] : y) {
            auto key = std::make_pair(ex.first + ey.first, ex.second + ey.second);
            auto it = r.find(key);
            if (it == r.end()) r.emplace(key, cx * cy);
            else it->second += cx * cy;
        }
    std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

}  // namespace

Polynomial FactoredRational::numerator_polynomial() const {
    Polynomial r{{{0, 0}, c_}};
    for (const auto& [l, m] : f_) {
        if (m < 0) throw invalid_argument("numerator_polynomial of a function with poles");
        Polynomial lp;
        if (!l.a1.is_zero()) lp[{1, 0}] = l.a1;
        if (!l.a2.is_zero()) lp[{0, 1}] = l.a2;
        if (!l.a0.is_zero()) lp[{0, 0}] = l.a0;
        for (long k = 0; k < m; ++k) r = multiply(r, lp);
    }
    return r;
}

bool FactoredRational::operator<(const FactoredRational& o) const {
    if (c_ != o.c_) return c_ < o.c_;
    return f_ < o.f_;
}

std::string FactoredRational::to_string(const std::vector<std::string>& names) const {
    if (f_.empty()) return c_.to_string();
    auto power = [&](const LinearForm& l, long m) {
        std::string base = l.to_string(names);
        bool bare = l.a0.is_zero() && (l.a1.is_zero() || l.a2.is_zero());
        if (!bare) base = "(" + base + ")";
        return m == 1 ? base : base + "^" + std::to_string(m);
    };
    std::string num, den;
    for (const auto& [l, m] : f_) {
        std::string& part = m > 0 ? num : den;
        if (!part.empty()) part += "*";
        part += power(l, m > 0 ? m : -m);
    }
    std::string out;
    bool minus_one = c_ == FieldElement(-1, 0, c_.d());
    if (num.empty()) {
        out = c_.is_rational() ? c_.to_string() : "(" + c_.to_string() + ")";
    } else {
        if (minus_one) out = "-";
        else if (!c_.is_one()) out = (c_.is_rational() ? c_.to_string() : "(" + c_.to_string() + ")") + "*";
        out += num;
    }
    if (!den.empty()) out += "/" + (den.find('*') != std::string::npos ? "(" + den + ")" : den);
    return out;
}

// ---------------------------------------------------------------- splitting

namespace {

// Divisors of a Gaussian integer up to units, from its factorization.
std::vector<FieldElement> divisors(const FieldElement& x) {
    GaussianFactorization f = factor(x);
    std::vector<FieldElement> out{FieldElement(1)};
    for (const auto& [p, e] : f.factors) {
        std::vector<FieldElement> next;
        FieldElement pf = p.to_field();
        for (const FieldElement& d : out) {
            FieldElement acc = d;
            for (long k = 0; k <= e; ++k) {
                next.push_back(acc);
                acc *= pf;
            }
        }
        out = std::move(next);
        if (out.size() > 4096) throw unsupported_shape("too many candidate roots while splitting polynomial");
    }
    return out;
}

FieldElement horner(const std::vector<FieldElement>& a, const FieldElement& z) {
    FieldElement acc = a.back();
    for (std::size_t k = a.size() - 1; k-- > 0;) acc = acc * z + a[k];
    return acc;
}

// Divides by (z - r); a is ascending, returns quotient.
std::vector<FieldElement> deflate(const std::vector<FieldElement>& a, const FieldElement& r) {
    std::size_t d = a.size() - 1;
    std::vector<FieldElement> q(d);
    FieldElement carry = a[d];
    for (std::size_t k = d; k-- > 0;) {
        q[k] = carry;
        carry = a[k] + carry * r;
    }
    return q;
}

FactoredRational split_univariate(std::vector<FieldElement> a, int var) {
    long d = a.front().d();
    if (d != 1) throw unsupported_shape("polynomial splitting is only supported over Q(i)");
    FactoredRational out(FieldElement(1));
    long zero_order = 0;
    while (a.front().is_zero()) {
        a.erase(a.begin());
        ++zero_order;
    }
    if (zero_order) out = out * FactoredRational::form(LinearForm::root(FieldElement(0), var), zero_order);
    if (a.size() > 1) {
        mpz_class L = 1;
        for (const FieldElement& c : a) {
            mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.re().get_den_mpz_t());
            mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.im().get_den_mpz_t());
        }
        FieldElement scale{mpq_class(L)};
        std::vector<FieldElement> nums = divisors(a.front() * scale);
        std::vector<FieldElement> dens = divisors(a.back() * scale);
        if (nums.size() * dens.size() > 100000) throw unsupported_shape("too many candidate roots while splitting polynomial");
        const FieldElement units[] = {FieldElement(1), FieldElement(0, 1), FieldElement(-1), FieldElement(0, -1)};
        std::vector<FieldElement> candidates;
        for (const FieldElement& u : nums)
            for (const FieldElement& v : dens)
                for (const FieldElement& e : units) candidates.push_back(e * u / v);
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const FieldElement& r : candidates) {
            long mult = 0;
            while (a.size() > 1 && horner(a, r).is_zero()) {
                a = deflate(a, r);
                ++mult;
            }
            if (mult) out = out * FactoredRational::form(LinearForm::root(r, var), mult);
            if (a.size() == 1) break;
        }
        if (a.size() > 1)
            throw unsupported_shape("polynomial of degree " + std::to_string(a.size() - 1) +
                                    " does not split into linear factors over Q(i)");
    }
    return out.scaled(a.front());
}

}  // namespace

std::optional<FactoredRational> split_polynomial(const Polynomial& p0) {
    Polynomial p = p0;
    std::erase_if(p, [](const auto& kv) { return kv.second.is_zero(); });
    if (p.empty()) return std::nullopt;
    long d = p.begin()->second.d();

    int min1 = INT32_MAX, min2 = INT32_MAX, max1 = 0, max2 = 0, total = 0;
    for (const auto& [e, c] : p) {
        min1 = std::min(min1, e.first);
        min2 = std::min(min2, e.second);
        max1 = std::max(max1, e.first);
        max2 = std::max(max2, e.second);
        total = std::max(total, e.first + e.second);
    }
    FieldElement zero(0, 0, d);
    if (total == 0) return FactoredRational(p.begin()->second);

    // pull out monomial factors z1^min1 z2^min2
    if (min1 > 0 || min2 > 0) {
        Polynomial q;
        for (const auto& [e, c] : p) q[{e.first - min1, e.second - min2}] = c;
        FactoredRational rest = *split_polynomial(q);
        if (min1) rest = rest * FactoredRational::form(LinearForm::root(zero, 0), min1);
        if (min2) rest = rest * FactoredRational::form(LinearForm::root(zero, 1), min2);
        return rest;
    }
    if (total == 1) {
        auto get = [&](int e1, int e2) {
            auto it = p.find({e1, e2});
            return it == p.end() ? zero : it->second;
        };
        FieldElement a1 = get(1, 0), a2 = get(0, 1), a0 = get(0, 0);
        FieldElement lead = a1.is_zero() ? a2 : a1;
        return FactoredRational::form(LinearForm::normalized(a1, a2, a0)).scaled(lead);
    }
    if (max2 == 0 || max1 == 0) {
        int var = max2 == 0 ? 0 : 1;
        int deg = var == 0 ? max1 : max2;
        std::vector<FieldElement> a(static_cast<std::size_t>(deg) + 1, zero);
        for (const auto& [e, c] : p) a[static_cast<std::size_t>(var == 0 ? e.first : e.second)] = c;
        return split_univariate(a, var);
    }
    throw unsupported_shape("bivariate polynomial of degree " + std::to_string(total) +
                            " is outside the supported linear-factor class");
}

std::optional<FactoredRational> add(const FactoredRational& x, const FactoredRational& y) {
    auto exponent = [](const FactoredRational& f, const LinearForm& l) {
        auto it = f.factors().find(l);
        return it == f.factors().end() ? 0L : it->second;
    };
    // largest common factor with integer exponents, so both quotients are polynomials
    FactoredRational common(FieldElement(1, 0, x.constant().d()));
    std::map<LinearForm, long> g;
    for (const auto& [l, m] : x.factors()) g[l] = std::min(m, exponent(y, l));
    for (const auto& [l, m] : y.factors()) g[l] = std::min(m, exponent(x, l));
    for (const auto& [l, m] : g)
        if (m != 0) common = common * FactoredRational::form(l, m);
    Polynomial px = (x / common).numerator_polynomial();
    Polynomial py = (y / common).numerator_polynomial();
    for (const auto& [e, c] : py) {
        auto it = px.find(e);
        if (it == px.end()) px.emplace(e, c);
        else it->second += c;
    }
    std::optional<FactoredRational> s = split_polynomial(px);
    if (!s) return std::nullopt;
    return *s * common;
}

}  // namespace hachow
