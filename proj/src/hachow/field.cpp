#include "hachow/field.hpp"

#include "hachow/errors.hpp"
#include "hachow/expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace hachow {

// ---------------------------------------------------------------- FieldSpec

FieldSpec FieldSpec::parse(std::string_view name) {
    std::string s;
    for (char c : name)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(c)));
    if (s == "q(i)" || s == "qq(i)" || s == "gaussian" || s == "q(sqrt(-1))") return FieldSpec{1};
    const std::string prefix = "q(sqrt(-";
    if (s.rfind(prefix, 0) == 0 && s.size() > prefix.size() + 2 && s.substr(s.size() - 2) == "))") {
        std::string digits = s.substr(prefix.size(), s.size() - prefix.size() - 2);
        if (!digits.empty() && digits.size() < 10 &&
            std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            long d = std::stol(digits);
            if (d <= 0) throw invalid_argument("field discriminant must be negative");
            for (long k = 2; k * k <= d; ++k)
                if (d % (k * k) == 0) throw invalid_argument("Q(sqrt(-d)) needs squarefree d, got " + digits);
            return FieldSpec{d};
        }
    }
    throw invalid_argument("unknown field '" + std::string(name) + "' (expected Q(i) or Q(sqrt(-d)))");
}

std::string FieldSpec::name() const {
    if (d == 1) return "Q(i)";
    return "Q(sqrt(-" + std::to_string(d) + "))";
}

// ------------------------------------------------------------- FieldElement

FieldElement::FieldElement(mpq_class a, mpq_class b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    a_.canonicalize();
    b_.canonicalize();
}

void FieldElement::check_same_field(const FieldElement& o) const {
    if (d_ != o.d_) throw invalid_argument("mixing elements of different fields");
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    check_same_field(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    check_same_field(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    check_same_field(o);
    mpq_class a = a_ * o.a_ - d_ * b_ * o.b_;
    mpq_class b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    return *this;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw domain_error("division by zero in field");
    mpq_class n = norm();
    return FieldElement(a_ / n, -b_ / n, d_);
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
    check_same_field(o);
    return *this *= o.inverse();
}

FieldElement FieldElement::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    FieldElement result(1, 0, d_);
    FieldElement base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

bool FieldElement::operator<(const FieldElement& o) const {
    if (d_ != o.d_) return d_ < o.d_;
    if (a_ != o.a_) return a_ < o.a_;
    return b_ < o.b_;
}

std::string FieldElement::to_string() const {
    const char* w = d_ == 1 ? "i" : "w";
    auto imag = [&](const mpq_class& c) {
        if (c == 1) return std::string(w);
        return c.get_str() + "*" + w;
    };
    if (b_ == 0) return a_.get_str();
    if (a_ == 0) {
        if (b_ == -1) return std::string("-") + w;
        return imag(b_);
    }
    if (b_ > 0) return a_.get_str() + " + " + imag(b_);
    return a_.get_str() + " - " + imag(-b_);
}

namespace {

FieldElement evaluate_constant(const Expr& e, long d) {
    switch (e.kind) {
    case Expr::Kind::Number:
        return FieldElement(e.number, 0, d);
    case Expr::Kind::Unit:
        if (e.name == "i" && d != 1) throw ParseError("'i' is not in " + FieldSpec{d}.name() + "; use w", e.position);
        return FieldElement(0, 1, d);
    case Expr::Kind::Infinity:
        throw ParseError("infinity is not a field element", e.position);
    case Expr::Kind::Variable:
        throw ParseError("unknown symbol '" + e.name + "'", e.position);
    case Expr::Kind::Neg:
        return -evaluate_constant(*e.args[0], d);
    case Expr::Kind::Add:
        return evaluate_constant(*e.args[0], d) + evaluate_constant(*e.args[1], d);
    case Expr::Kind::Sub:
        return evaluate_constant(*e.args[0], d) - evaluate_constant(*e.args[1], d);
    case Expr::Kind::Mul:
        return evaluate_constant(*e.args[0], d) * evaluate_constant(*e.args[1], d);
    case Expr::Kind::Div: {
        FieldElement den = evaluate_constant(*e.args[1], d);
        if (den.is_zero()) throw ParseError("division by zero", e.position);
        return evaluate_constant(*e.args[0], d) / den;
    }
    case Expr::Kind::Pow: {
        FieldElement base = evaluate_constant(*e.args[0], d);
        if (base.is_zero() && e.exponent < 0) throw ParseError("zero to a negative power", e.position);
        return base.pow(e.exponent);
    }
    }
    throw ParseError("bad expression", e.position);
}

}  // namespace

FieldElement FieldElement::parse(std::string_view text, const FieldSpec& field) {
    ExprPtr e = parse_expression(text);
    return evaluate_constant(*e, field.d);
}

Complex FieldElement::embed(int embedding, mpfr_prec_t bits) const {
    Real re(a_, bits);
    Real im(bits);
    if (d_ == 1) {
        im = Real(b_, bits);
    } else {
        mpfr_prec_t work = bits + 32;
        im = (Real(b_, work) * sqrt(Real(d_, work))).rounded(bits);
    }
    if (embedding == 1) im = -im;
    return Complex(std::move(re), std::move(im));
}

std::vector<Complex> embed(const FieldElement& x, mpfr_prec_t bits) {
    std::vector<Complex> out;
    out.push_back(x.embed(0, bits));
    out.push_back(x.embed(1, bits));
    return out;
}

bool is_log_kernel(const FieldElement& x) {
    if (x.is_zero()) throw domain_error("is_log_kernel of zero");
    return x.norm() == 1;
}

// --------------------------------------------------------- Gaussian integers

bool GaussianInteger::operator<(const GaussianInteger& o) const {
    mpz_class n = norm(), m = o.norm();
    if (n != m) return n < m;
    if (re != o.re) return re < o.re;
    return im < o.im;
}

namespace {

GaussianInteger mul(const GaussianInteger& x, const GaussianInteger& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

mpz_class round_div(const mpz_class& x, const mpz_class& n) {
    // nearest integer to x/n for n > 0
    mpz_class q;
    mpz_class twice = 2 * x + n;
    mpz_class den = 2 * n;
    mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den.get_mpz_t());
    return q;
}

GaussianInteger mod(const GaussianInteger& a, const GaussianInteger& b) {
    mpz_class n = b.norm();
    GaussianInteger num = mul(a, {b.re, -b.im});
    GaussianInteger q{round_div(num.re, n), round_div(num.im, n)};
    GaussianInteger qb = mul(q, b);
    return {a.re - qb.re, a.im - qb.im};
}

GaussianInteger gcd(GaussianInteger a, GaussianInteger b) {
    while (b.re != 0 || b.im != 0) {
        GaussianInteger r = mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

// Divides g by p in place when p | g.
bool divide_exact(GaussianInteger& g, const GaussianInteger& p) {
    mpz_class n = p.norm();
    GaussianInteger num = mul(g, {p.re, -p.im});
    if (!mpz_divisible_p(num.re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(num.im.get_mpz_t(), n.get_mpz_t()))
        return false;
    mpz_divexact(g.re.get_mpz_t(), num.re.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(g.im.get_mpz_t(), num.im.get_mpz_t(), n.get_mpz_t());
    return true;
}

std::map<std::uint64_t, long> factor_integer(std::uint64_t n) {
    std::map<std::uint64_t, long> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

std::vector<GaussianInteger> primes_above(std::uint64_t p) {
    if (p == 2) return {{1, 1}};
    if (p % 4 == 3) return {{mpz_class(std::to_string(p)), 0}};
    mpz_class P(std::to_string(p));
    mpz_class e = (P - 1) / 4;
    mpz_class t;
    for (unsigned long c = 2;; ++c) {
        mpz_class base(c);
        mpz_powm(t.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), P.get_mpz_t());
        mpz_class sq = (t * t) % P;
        if (sq == P - 1) break;
    }
    GaussianInteger pi = canonical_associate(gcd({P, 0}, {t, 1}));
    GaussianInteger other = canonical_associate({pi.re, -pi.im});
    std::vector<GaussianInteger> out{pi, other};
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t checked_u64(const mpz_class& v, std::uint64_t bound, const char* what) {
    if (v > mpz_class(std::to_string(bound)))
        throw Error(ErrorKind::FactorBound,
                    std::string(what) + " norm " + v.get_str() + " exceeds factoring bound " + std::to_string(bound));
    return std::stoull(v.get_str());
}

}  // namespace

GaussianInteger canonical_associate(const GaussianInteger& g) {
    GaussianInteger x = g;
    for (int k = 0; k < 4; ++k) {
        if (x.re > 0 && x.im >= 0) return x;
        x = {-x.im, x.re};  // multiply by i
    }
    return x;  // zero
}

FieldElement GaussianFactorization::reassemble() const {
    FieldElement x = FieldElement::unit(1).pow(unit_exponent);
    for (const auto& [p, e] : factors) x *= p.to_field().pow(e);
    return x;
}

std::string GaussianFactorization::to_string() const {
    static const char* units[] = {"1", "i", "-1", "-i"};
    std::string s = units[unit_exponent];
    for (const auto& [p, e] : factors) {
        s += "*(" + p.to_string() + ")";
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

GaussianFactorization factor(const FieldElement& x, std::uint64_t bound) {
    if (x.is_zero()) throw domain_error("factor of zero");
    if (x.d() != 1) throw domain_error("factorization is only supported over Q(i)");

    mpz_class den;
    mpz_lcm(den.get_mpz_t(), x.re().get_den_mpz_t(), x.im().get_den_mpz_t());
    mpz_class A = x.re().get_num() * (den / x.re().get_den());
    mpz_class B = x.im().get_num() * (den / x.im().get_den());
    GaussianInteger num{A, B};

    std::uint64_t num_norm = checked_u64(num.norm(), bound, "numerator");
    std::uint64_t den_norm = checked_u64(den * den, bound, "denominator");
    (void)den_norm;

    std::map<std::uint64_t, long> rational = factor_integer(num_norm);
    std::uint64_t den_u = std::stoull(den.get_str());
    std::map<std::uint64_t, long> den_primes = factor_integer(den_u);
    for (const auto& [p, e] : den_primes) rational.emplace(p, 0);

    GaussianFactorization f;
    for (const auto& [p, unused] : rational) {
        (void)unused;
        long vden = 0;
        if (auto it = den_primes.find(p); it != den_primes.end()) vden = it->second;
        for (const GaussianInteger& rho : primes_above(p)) {
            long e = 0;
            while (divide_exact(num, rho)) ++e;
            e -= (p == 2 ? 2 * vden : vden);
            if (e != 0) f.factors.emplace_back(rho, e);
        }
    }
    std::sort(f.factors.begin(), f.factors.end(), [](const auto& l, const auto& r) { return l.first < r.first; });

    FieldElement rest = x;
    for (const auto& [p, e] : f.factors) rest /= p.to_field().pow(e);
    const FieldElement units[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (int k = 0; k < 4; ++k) {
        if (rest == units[k]) {
            f.unit_exponent = k;
            return f;
        }
    }
    throw Error(ErrorKind::Internal, "factorization of " + x.to_string() + " left non-unit cofactor " + rest.to_string());
}

}  // namespace hachow
