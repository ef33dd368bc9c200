#include <doctest.h>

#include "hachow/errors.hpp"
#include "hachow/k2.hpp"
#include "support.hpp"

#include <random>
#include <set>

using namespace hachow;

namespace {

FieldElement gi(long a, long b) { return FieldElement(mpq_class(a), mpq_class(b)); }
GaussianInteger gz(long a, long b) { return GaussianInteger{a, b}; }

// v_p(x) by repeated division, independent of the factorization routine.
long valuation(const FieldElement& x, const GaussianInteger& p) {
    auto val_int = [&](mpz_class re, mpz_class im) {
        long v = 0;
        mpz_class n = p.norm();
        for (;;) {
            mpz_class r = re * p.re + im * p.im, s = im * p.re - re * p.im;
            if (r % n != 0 || s % n != 0) return v;
            re = r / n, im = s / n, ++v;
        }
    };
    mpz_class c = lcm(x.re().get_den(), x.im().get_den());
    mpq_class a = x.re() * c, b = x.im() * c;
    return val_int(a.get_num(), b.get_num()) - val_int(c, 0);
}

// wedge coefficients from valuations: v_p(a) v_q(b) - v_q(a) v_p(b)
bool matches_valuation_oracle(const WedgeClass& w, const FieldElement& a, const FieldElement& b,
                              const std::vector<GaussianInteger>& primes) {
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            GaussianInteger p = primes[i], q = primes[j];
            if (q < p) std::swap(p, q);
            mpq_class expect = valuation(a, p) * valuation(b, q) - valuation(a, q) * valuation(b, p);
            auto it = w.entries().find({p, q});
            mpq_class got = it == w.entries().end() ? mpq_class(0) : it->second;
            if (got != expect) return false;
        }
    return true;
}

std::vector<GaussianInteger> support_of(std::initializer_list<FieldElement> xs) {
    std::set<GaussianInteger> s;
    for (const auto& x : xs)
        for (const auto& [p, m] : factor(x).factors) s.insert(canonical_associate(p));
    return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("wedge classes") {
    FieldElement a = gi(2, 3), b = gi(1, -2);
    WedgeClass w = wedge(a, b);
    // 2 + 3i is prime, 1 - 2i = -i (2 + i); 2 + i comes first in the canonical order
    REQUIRE(w.entries().size() == 1);
    CHECK(w.entries().begin()->first == WedgeClass::Pair{gz(2, 1), gz(2, 3)});
    CHECK(w.entries().begin()->second == -1);
    CHECK(wedge(a, a).is_zero());
    CHECK(wedge(a, -a).is_zero());
    CHECK(wedge(gi(0, 1), a).is_zero());

    std::mt19937_64 rng(81);
    for (int k = 0; k < 30; ++k) {
        FieldElement x = testing_support::random_nonzero(rng), y = testing_support::random_nonzero(rng),
                     z = testing_support::random_nonzero(rng);
        CHECK(wedge(x * y, z) == wedge(x, z) + wedge(y, z));
        CHECK(wedge(y, x) == wedge(x, y).scaled(-1));
        CHECK(wedge(x, x.inverse()).is_zero());
        CHECK(matches_valuation_oracle(wedge(x, y), x, y, support_of({x, y})));
    }
    CHECK_THROWS_AS(wedge(FieldElement(0), a), Error);
}

TEST_CASE("harvesting S-unit atoms") {
    std::vector<GaussianInteger> s = canonical_primes({gi(1, 1), gi(2, 1), gi(2, 3), gi(1, -2)});
    CHECK(s.size() == 3);  // 1 - 2i is an associate of 2 + i
    std::vector<FieldElement> h = harvest(s, 8);
    auto has = [&](const FieldElement& x) { return std::find(h.begin(), h.end(), x) != h.end(); };
    CHECK(has(gi(-1, -1)));
    CHECK(has(gi(-1, -1).pow(6)));
    CHECK(has(gi(2, 3)));
    CHECK(harvest({}, 6).empty());
    CHECK_THROWS_AS(canonical_primes({gi(3, 1)}), Error);
    CHECK_THROWS_AS(canonical_primes({gi(5, 0)}), Error);
    CHECK(canonical_primes({gi(3, 0)}).size() == 1);

    // conjugation-closed S gives a conjugation-closed harvest
    std::vector<GaussianInteger> closed = canonical_primes({gi(1, 1), gi(2, 1), gi(1, 2), gi(3, 0)});
    std::vector<FieldElement> hc = harvest(closed, 7);
    std::set<FieldElement> set(hc.begin(), hc.end());
    CHECK(set.size() == hc.size());
    for (const auto& g : hc) CHECK(set.count(g.conj()) == 1);

    // brute-force oracle through the general factorization
    std::set<FieldElement> oracle;
    const long H = 5;
    auto in_s = [&](const FieldElement& x) {
        for (const auto& [p, m] : factor(x).factors)
            if (!std::count(closed.begin(), closed.end(), canonical_associate(p))) return false;
        return true;
    };
    for (long c = 1; c <= H; ++c)
        for (long a = -H; a <= H; ++a)
            for (long b = -H; b <= H; ++b) {
                FieldElement g(mpq_class(a) / c, mpq_class(b) / c);
                if (g.is_zero() || g.is_one()) continue;
                if (in_s(g) && in_s(FieldElement(1) - g)) oracle.insert(g);
            }
    std::vector<FieldElement> h5 = harvest(closed, H);
    CHECK(std::set<FieldElement>(h5.begin(), h5.end()) == oracle);
}

TEST_CASE("Steinberg decompositions") {
    std::mt19937_64 rng(82);
    for (int k = 0; k < 10; ++k) {
        FieldElement a = testing_support::random_generic(rng, 4, 3);
        SteinbergDecomposition d = decompose(a, FieldElement(1) - a);
        CHECK(d.trivial);
        CHECK(d.denominator == 1);
        REQUIRE(d.atoms.size() == 1);
        CHECK(d.atoms[0].gamma == a);
        CHECK(d.verify());
    }
    SteinbergDecomposition w = decompose(gi(2, 3), gi(1, -2));
    MESSAGE(w.certificate());
    CHECK(w.verify());
    CHECK(!w.trivial);
    // independent check of the certificate against valuations
    WedgeClass sum;
    for (const auto& a : w.atoms) sum = sum + wedge(a.gamma, FieldElement(1) - a.gamma).scaled(a.coefficient);
    CHECK(matches_valuation_oracle(sum, gi(2, 3), gi(1, -2), support_of({gi(2, 3), gi(1, -2), gi(2, 1), gi(1, 1)})));
    for (const auto& a : w.atoms) CHECK(mpz_class(w.denominator % a.coefficient.get_den()) == 0);

    DecomposeOptions tiny;
    tiny.primes = canonical_primes({gi(1, 1)});
    tiny.height = 2;
    try {
        decompose(gi(2, 3), gi(1, -2), tiny);
        FAIL("expected NoDecomposition");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoDecomposition);
    }
    CHECK_THROWS_AS(decompose(gi(1, 0), gi(2, 0)), Error);
    CHECK_THROWS_AS(decompose(FieldElement(1, 1, 2), gi(2, 0)), Error);
}
