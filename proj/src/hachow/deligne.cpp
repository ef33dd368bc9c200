#include "hachow/deligne.hpp"

#include "hachow/errors.hpp"

#include <algorithm>

namespace hachow {

namespace {

Complex zero_c(mpfr_prec_t bits) { return Complex(bits); }

Complex i_power(int k, mpfr_prec_t bits) {
    int r = ((k % 4) + 4) % 4;
    Real one(1L, bits), zero(bits);
    switch (r) {
    case 0: return Complex(one, zero);
    case 1: return Complex(zero, one);
    case 2: return Complex(-one, zero);
    default: return Complex(zero, -one);
    }
}

}  // namespace

// ---------------------------------------------------------------- EpsPoly

EpsPoly::EpsPoly(std::vector<Complex> coeffs) : bits_(coeffs.empty() ? 256 : coeffs.front().precision()), c_(std::move(coeffs)) {
    trim();
}

EpsPoly EpsPoly::constant(const Complex& c) { return EpsPoly(std::vector<Complex>{c}); }

EpsPoly EpsPoly::epsilon(mpfr_prec_t bits) {
    return EpsPoly(std::vector<Complex>{zero_c(bits), Complex(Real(1L, bits), Real(bits))});
}

void EpsPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Complex EpsPoly::coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : zero_c(bits_); }

EpsPoly& EpsPoly::operator+=(const EpsPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), zero_c(bits_));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

EpsPoly& EpsPoly::operator-=(const EpsPoly& o) { return *this += -o; }

EpsPoly operator*(const EpsPoly& a, const EpsPoly& b) {
    if (a.is_zero() || b.is_zero()) return EpsPoly(a.bits_);
    std::vector<Complex> r(a.c_.size() + b.c_.size() - 1, zero_c(a.bits_));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return EpsPoly(std::move(r));
}

EpsPoly EpsPoly::scaled(const Complex& k) const {
    EpsPoly r(bits_);
    for (const auto& c : c_) r.c_.push_back(c * k);
    r.trim();
    return r;
}

EpsPoly EpsPoly::operator-() const {
    EpsPoly r(bits_);
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
}

Complex EpsPoly::evaluate(const Complex& eps) const {
    Complex acc = zero_c(bits_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * eps + *it;
    return acc;
}

EpsPoly EpsPoly::derivative() const {
    EpsPoly r(bits_);
    for (std::size_t k = 1; k < c_.size(); ++k) r.c_.push_back(c_[k] * Real(static_cast<long>(k), bits_));
    r.trim();
    return r;
}

Complex EpsPoly::integral01() const {
    Complex acc = zero_c(bits_);
    for (std::size_t k = 0; k < c_.size(); ++k) acc += c_[k] / Real(static_cast<long>(k + 1), bits_);
    return acc;
}

EpsPoly EpsPoly::conj() const {
    EpsPoly r(bits_);
    for (const auto& c : c_) r.c_.push_back(hachow::conj(c));
    return r;
}

Real EpsPoly::distance(const EpsPoly& o) const {
    Real m(bits_);
    std::size_t n = std::max(c_.size(), o.c_.size());
    for (std::size_t k = 0; k < n; ++k) m = max(m, abs(coeff(static_cast<int>(k)) - o.coeff(static_cast<int>(k))));
    return m;
}

// -------------------------------------------------------------- TWElement

TWElement TWElement::zero(int twist, int degree, int embeddings, mpfr_prec_t bits) {
    return TWElement{twist, degree, std::vector<EpsPoly>(embeddings, EpsPoly(bits))};
}

TWElement TWElement::unit(int embeddings, mpfr_prec_t bits) {
    TWElement u = zero(0, 0, embeddings, bits);
    for (auto& p : u.parts) p = EpsPoly::constant(Complex(Real(1L, bits), Real(bits)));
    return u;
}

bool TWElement::is_zero() const {
    return std::all_of(parts.begin(), parts.end(), [](const EpsPoly& p) { return p.is_zero(); });
}

TWElement TWElement::conjugate() const {
    TWElement r = *this;
    for (std::size_t k = 0; k < parts.size(); ++k) r.parts[k] = parts[parts.size() - 1 - k].conj();
    return r;
}

TWElement TWElement::operator+(const TWElement& o) const {
    if (twist != o.twist || degree != o.degree || parts.size() != o.parts.size())
        throw invalid_argument("adding Deligne elements of different twist or degree");
    TWElement r = *this;
    for (std::size_t k = 0; k < parts.size(); ++k) r.parts[k] += o.parts[k];
    return r;
}

TWElement TWElement::operator-(const TWElement& o) const { return *this + o.scaled(Complex(Real(-1L, 256), Real(256))); }

TWElement TWElement::scaled(const Complex& k) const {
    TWElement r = *this;
    for (auto& p : r.parts) p = p.scaled(k);
    return r;
}

TWElement differential(const TWElement& x) {
    TWElement r = TWElement::zero(x.twist, x.degree + 1, static_cast<int>(x.parts.size()),
                                  x.parts.empty() ? 256 : x.parts.front().precision());
    if (x.degree == 0)
        for (std::size_t k = 0; k < x.parts.size(); ++k) r.parts[k] = x.parts[k].derivative();
    return r;  // degree 2 and up vanish over a point
}

TWElement tw_product(const TWElement& x, const TWElement& y) {
    if (x.parts.size() != y.parts.size()) throw invalid_argument("product of elements over different embeddings");
    mpfr_prec_t bits = x.parts.empty() ? 256 : x.parts.front().precision();
    TWElement r = TWElement::zero(x.twist + y.twist, x.degree + y.degree, static_cast<int>(x.parts.size()), bits);
    if (r.degree >= 2) return r;  // d eps ^ d eps = 0
    for (std::size_t k = 0; k < x.parts.size(); ++k) r.parts[k] = x.parts[k] * y.parts[k];
    return r;
}

bool satisfies_boundary_conditions(const TWElement& x, const Real& tol) {
    if (x.degree != 0) return true;
    for (const auto& g : x.parts) {
        mpfr_prec_t bits = g.precision();
        Complex at0 = g.coeff(0);
        Complex at1 = g.evaluate(Complex(Real(1L, bits), Real(bits)));
        // (2 pi i)^p R is the real line for even p and the imaginary one for odd p
        const Real& off = x.twist % 2 == 0 ? at0.im : at0.re;
        if (abs(off) > tol) return false;
        if (x.twist >= 1 && abs(at1) > tol) return false;
    }
    return true;
}

// ----------------------------------------------------------- DeligneClass

Complex project_twist(const Complex& x, int p) {
    Complex c = conj(x);
    Complex s = p % 2 == 0 ? x + c : x - c;
    return Complex(ldexp(s.re, -1), ldexp(s.im, -1));
}

Complex DeligneClass::value(int embedding) const {
    const Real& s = scalars.at(embedding);
    return i_power(twist - 1, s.precision()) * s;
}

bool DeligneClass::is_conjugation_fixed(const Real& tol) const {
    for (std::size_t k = 0; k < scalars.size(); ++k) {
        Complex a = value(static_cast<int>(k)), b = conj(value(static_cast<int>(scalars.size() - 1 - k)));
        if (abs(a - b) > tol) return false;
    }
    return true;
}

DeligneClass DeligneClass::operator+(const DeligneClass& o) const {
    if (twist != o.twist || scalars.size() != o.scalars.size()) throw invalid_argument("adding classes of different twist");
    DeligneClass r = *this;
    for (std::size_t k = 0; k < scalars.size(); ++k) r.scalars[k] += o.scalars[k];
    return r;
}

DeligneClass DeligneClass::operator-(const DeligneClass& o) const { return *this + o.scaled(Real(-1L, 64)); }

DeligneClass DeligneClass::scaled(const Real& k) const {
    DeligneClass r = *this;
    for (auto& s : r.scalars) s *= k;
    return r;
}

Real DeligneClass::distance(const DeligneClass& o) const {
    if (twist != o.twist || scalars.size() != o.scalars.size()) throw invalid_argument("comparing classes of different twist");
    Real m(scalars.empty() ? 256 : scalars.front().precision());
    for (std::size_t k = 0; k < scalars.size(); ++k) m = max(m, abs(scalars[k] - o.scalars[k]));
    return m;
}

std::string DeligneClass::value_string(int embedding, int digits) const {
    std::string s = scalars.at(embedding).to_string(digits);
    switch (((twist - 1) % 4 + 4) % 4) {
    case 0: return s;
    case 1: return s + "*i";
    case 2: return s[0] == '-' ? s.substr(1) : "-" + s;
    default: return (s[0] == '-' ? s.substr(1) : "-" + s) + "*i";
    }
}

DeligneClass class_of(const TWElement& x, int twist) {
    if (x.degree != 1) throw invalid_argument("class_of expects a degree-1 element");
    DeligneClass c;
    c.twist = twist;
    for (const auto& h : x.parts) {
        mpfr_prec_t bits = h.precision();
        Complex v = project_twist(h.integral01(), twist - 1);
        v = v / pow(Real::pi(bits) * 2L, twist - 1);
        v = v / i_power(twist - 1, bits);
        c.scalars.push_back(v.re);
    }
    return c;
}

bool fixed_part_check(const TWElement& x, const Real& tol) {
    TWElement c = x.conjugate();
    for (std::size_t k = 0; k < x.parts.size(); ++k)
        if (x.parts[k].distance(c.parts[k]) > tol) return false;
    return true;
}

}  // namespace hachow
