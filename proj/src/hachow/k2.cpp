#include "hachow/k2.hpp"

#include "hachow/errors.hpp"

#include <algorithm>
#include <set>

namespace hachow {

namespace {

void require_gaussian(const FieldElement& x) {
    if (x.d() != 1) throw invalid_argument("Steinberg decompositions are implemented over Q(i) only");
}

bool is_gaussian_prime(const GaussianInteger& g) {
    mpz_class n = g.norm();
    if (n < 2) return false;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) return true;
    // rational primes 3 mod 4 stay prime: g is an associate of p with p^2 = n
    mpz_class r = sqrt(n);
    return r * r == n && mpz_probab_prime_p(r.get_mpz_t(), 30) && r % 4 == 3 && (g.re == 0 || g.im == 0);
}

}  // namespace

// ------------------------------------------------------- MultSupportVector

void MultSupportVector::add(const GaussianInteger& p, const mpq_class& c) {
    mpq_class& slot = e_[p];
    slot += c;
    if (slot == 0) e_.erase(p);
}

MultSupportVector MultSupportVector::of(const FieldElement& x, std::uint64_t bound) {
    require_gaussian(x);
    if (x.is_zero()) throw domain_error("0 has no class in F^x");
    MultSupportVector v;
    for (const auto& [p, m] : factor(x, bound).factors) v.add(canonical_associate(p), mpq_class(m));
    return v;
}

MultSupportVector MultSupportVector::operator+(const MultSupportVector& o) const {
    MultSupportVector r = *this;
    for (const auto& [p, c] : o.e_) r.add(p, c);
    return r;
}

MultSupportVector MultSupportVector::scaled(const mpq_class& k) const {
    MultSupportVector r;
    for (const auto& [p, c] : e_) r.add(p, c * k);
    return r;
}

std::string MultSupportVector::to_string() const {
    std::string out;
    for (const auto& [p, c] : e_) {
        if (!out.empty()) out += " + ";
        out += c.get_str() + "*[" + p.to_string() + "]";
    }
    return out.empty() ? "0" : out;
}

// -------------------------------------------------------------- WedgeClass

void WedgeClass::add(const GaussianInteger& p, const GaussianInteger& q, const mpq_class& c) {
    if (p == q || c == 0) return;
    Pair key = p < q ? Pair{p, q} : Pair{q, p};
    mpq_class& slot = e_[key];
    slot += p < q ? c : mpq_class(-c);
    if (slot == 0) e_.erase(key);
}

WedgeClass WedgeClass::of(const MultSupportVector& a, const MultSupportVector& b) {
    WedgeClass w;
    for (const auto& [p, x] : a.entries())
        for (const auto& [q, y] : b.entries()) w.add(p, q, x * y);
    return w;
}

WedgeClass WedgeClass::operator+(const WedgeClass& o) const {
    WedgeClass r = *this;
    for (const auto& [k, c] : o.e_) r.add(k.first, k.second, c);
    return r;
}

WedgeClass WedgeClass::operator-(const WedgeClass& o) const { return *this + o.scaled(-1); }

WedgeClass WedgeClass::scaled(const mpq_class& k) const {
    WedgeClass r;
    for (const auto& [key, c] : e_) r.add(key.first, key.second, c * k);
    return r;
}

std::string WedgeClass::to_string() const {
    std::string out;
    for (const auto& [k, c] : e_) {
        if (!out.empty()) out += " + ";
        out += c.get_str() + "*[" + k.first.to_string() + "]^[" + k.second.to_string() + "]";
    }
    return out.empty() ? "0" : out;
}

WedgeClass wedge(const FieldElement& a, const FieldElement& b, std::uint64_t bound) {
    return WedgeClass::of(MultSupportVector::of(a, bound), MultSupportVector::of(b, bound));
}

// ----------------------------------------------------------------- harvest

std::vector<GaussianInteger> canonical_primes(const std::vector<FieldElement>& primes) {
    std::set<GaussianInteger> out;
    for (const auto& x : primes) {
        require_gaussian(x);
        if (x.re().get_den() != 1 || x.im().get_den() != 1)
            throw invalid_argument("prime " + x.to_string() + " is not a Gaussian integer");
        GaussianInteger g{x.re().get_num(), x.im().get_num()};
        if (!is_gaussian_prime(g)) throw invalid_argument(x.to_string() + " is not a Gaussian prime");
        out.insert(canonical_associate(g));
    }
    return {out.begin(), out.end()};
}

namespace {

// Strips the primes of S from a Gaussian integer; true when a unit remains.
bool is_s_unit_integer(GaussianInteger g, const std::vector<GaussianInteger>& primes) {
    if (g.re == 0 && g.im == 0) return false;
    for (const auto& p : primes) {
        mpz_class np = p.norm();
        for (;;) {
            // g / p = g * conj(p) / N(p)
            mpz_class re = g.re * p.re + g.im * p.im, im = g.im * p.re - g.re * p.im;
            if (!mpz_divisible_p(re.get_mpz_t(), np.get_mpz_t()) || !mpz_divisible_p(im.get_mpz_t(), np.get_mpz_t())) break;
            g.re = re / np, g.im = im / np;
        }
    }
    return g.norm() == 1;
}

}  // namespace

std::vector<FieldElement> harvest(const std::vector<GaussianInteger>& primes, long height) {
    if (height < 1) throw invalid_argument("height bound must be positive");
    std::set<FieldElement> out;
    for (long c = 1; c <= height; ++c) {
        if (!is_s_unit_integer({c, 0}, primes)) continue;
        for (long a = -height; a <= height; ++a)
            for (long b = -height; b <= height; ++b) {
                if (a == 0 && b == 0) continue;
                if (a == c && b == 0) continue;  // gamma = 1
                if (!is_s_unit_integer({a, b}, primes) || !is_s_unit_integer({c - a, -b}, primes)) continue;
                mpq_class re(a, c), im(b, c);
                re.canonicalize(), im.canonicalize();
                out.insert(FieldElement(re, im));
            }
    }
    // low height first, so elimination pivots on the simplest atoms
    std::vector<FieldElement> sorted(out.begin(), out.end());
    auto height_of = [](const FieldElement& x) {
        mpz_class c = lcm(x.re().get_den(), x.im().get_den());
        mpq_class a = abs(x.re()) * c, b = abs(x.im()) * c;
        return std::max({mpz_class(a.get_num()), mpz_class(b.get_num()), c});
    };
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](const FieldElement& x, const FieldElement& y) { return height_of(x) < height_of(y); });
    return sorted;
}

std::vector<GaussianInteger> default_primes(const FieldElement& alpha, const FieldElement& beta, std::uint64_t bound) {
    std::set<GaussianInteger> s{canonical_associate({1, 1})};
    FieldElement one(1);
    for (const FieldElement& x : {alpha, beta, one - alpha, one - beta})
        for (const FieldElement& y : {x, x.conj()}) {
            MultSupportVector v = MultSupportVector::of(y, bound);
            for (const auto& [p, m] : v.entries()) s.insert(p);
        }
    return {s.begin(), s.end()};
}

// --------------------------------------------------------------- decompose

bool SteinbergDecomposition::verify(std::uint64_t bound) const {
    WedgeClass lhs = wedge(alpha, beta, bound).scaled(mpq_class(denominator));
    WedgeClass rhs;
    FieldElement one(1);
    for (const auto& a : atoms) rhs = rhs + wedge(a.gamma, one - a.gamma, bound).scaled(a.coefficient * denominator);
    return lhs == rhs;
}

std::string SteinbergDecomposition::certificate() const {
    std::string out = denominator.get_str() + "*(" + alpha.to_string() + ")^(" + beta.to_string() + ") =";
    bool first = true;
    for (const auto& a : atoms) {
        mpq_class k = a.coefficient * denominator;
        out += first ? " " : (k < 0 ? " - " : " + ");
        if (first && k < 0) out += "-";
        first = false;
        out += mpq_class(abs(k)).get_str() + "*(" + a.gamma.to_string() + ")^(1 - (" + a.gamma.to_string() + "))";
    }
    if (first) out += " 0";
    return out;
}

SteinbergDecomposition decompose(const FieldElement& alpha, const FieldElement& beta, const DecomposeOptions& opts) {
    require_gaussian(alpha);
    require_gaussian(beta);
    FieldElement one(1);
    for (const FieldElement& x : {alpha, beta})
        if (x.is_zero() || x.is_one()) throw domain_error("decompose needs arguments outside {0, 1}");
    SteinbergDecomposition out;
    out.alpha = alpha, out.beta = beta;
    if (opts.trivial_shortcut && beta == one - alpha) {
        out.atoms.push_back({alpha, mpq_class(1)});
        out.trivial = true;
        out.rank = 1;
        out.candidates = 1;
        return out;
    }
    std::vector<GaussianInteger> primes = opts.primes.empty() ? default_primes(alpha, beta, opts.factor_bound) : opts.primes;
    WedgeClass target = wedge(alpha, beta, opts.factor_bound);
    if (target.is_zero()) return out;

    std::vector<FieldElement> atoms = harvest(primes, opts.height);
    out.candidates = static_cast<long>(atoms.size());
    std::vector<WedgeClass> cols;
    std::set<WedgeClass::Pair> keyset;
    for (const auto& k : target.entries()) keyset.insert(k.first);
    for (const auto& g : atoms) {
        cols.push_back(wedge(g, one - g, opts.factor_bound));
        for (const auto& k : cols.back().entries()) keyset.insert(k.first);
    }
    std::vector<WedgeClass::Pair> keys(keyset.begin(), keyset.end());
    std::size_t m = keys.size(), n = atoms.size();

    // integer augmented matrix [A | b]; exponents are integers
    auto as_int = [](const mpq_class& q) {
        if (q.get_den() != 1) throw Error(ErrorKind::Internal, "non-integral wedge entry");
        return mpz_class(q.get_num());
    };
    std::vector<std::vector<mpz_class>> M(m, std::vector<mpz_class>(n + 1, 0));
    for (std::size_t r = 0; r < m; ++r) {
        auto it = target.entries().find(keys[r]);
        if (it != target.entries().end()) M[r][n] = as_int(it->second);
        for (std::size_t c = 0; c < n; ++c) {
            auto jt = cols[c].entries().find(keys[r]);
            if (jt != cols[c].entries().end()) M[r][c] = as_int(jt->second);
        }
    }

    // fraction-free (Bareiss) elimination, first usable row as pivot
    std::vector<std::size_t> pivot_cols;
    mpz_class prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < m; ++c) {
        std::size_t p = rank;
        while (p < m && M[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(M[p], M[rank]);
        for (std::size_t r = rank + 1; r < m; ++r) {
            for (std::size_t k = c + 1; k <= n; ++k) {
                mpz_class v = M[rank][c] * M[r][k] - M[r][c] * M[rank][k];
                if (!mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t()))
                    throw Error(ErrorKind::Internal, "fraction-free elimination lost exactness");
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                M[r][k] = v;
            }
            M[r][c] = 0;
        }
        prev = M[rank][c];
        pivot_cols.push_back(c);
        ++rank;
    }
    out.rank = static_cast<long>(rank);
    for (std::size_t r = rank; r < m; ++r)
        if (M[r][n] != 0)
            throw Error(ErrorKind::NoDecomposition,
                        "alpha ^ beta is not in the span of " + std::to_string(n) + " harvested atoms (rank " +
                            std::to_string(rank) + " of " + std::to_string(m) +
                            " wedge coordinates); enlarge the prime set or the height bound");

    // back substitution, free atoms set to zero
    std::vector<mpq_class> x(n, mpq_class(0));
    for (std::size_t i = rank; i-- > 0;) {
        std::size_t c = pivot_cols[i];
        mpq_class acc(M[i][n]);
        for (std::size_t j = i + 1; j < rank; ++j) acc -= mpq_class(M[i][pivot_cols[j]]) * x[pivot_cols[j]];
        x[c] = acc / mpq_class(M[i][c]);
    }
    mpz_class N = 1;
    for (std::size_t c = 0; c < n; ++c)
        if (x[c] != 0) {
            out.atoms.push_back({atoms[c], x[c]});
            mpz_lcm(N.get_mpz_t(), N.get_mpz_t(), x[c].get_den_mpz_t());
        }
    out.denominator = N;
    if (!out.verify(opts.factor_bound)) throw Error(ErrorKind::Internal, "decomposition certificate failed to re-verify");
    return out;
}

}  // namespace hachow
