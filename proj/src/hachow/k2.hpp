#pragma once

#include "hachow/field.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hachow {

// x in F^x (x) Q as exponents over canonical Gaussian primes; units drop.
class MultSupportVector {
public:
    static MultSupportVector of(const FieldElement& x, std::uint64_t bound = kDefaultFactorBound);

    const std::map<GaussianInteger, mpq_class>& entries() const { return e_; }
    MultSupportVector operator+(const MultSupportVector& o) const;
    MultSupportVector scaled(const mpq_class& k) const;
    bool operator==(const MultSupportVector& o) const { return e_ == o.e_; }
    std::string to_string() const;

private:
    void add(const GaussianInteger& p, const mpq_class& c);
    std::map<GaussianInteger, mpq_class> e_;
};

// Element of Lambda^2(F^x (x) Q) on the basis p ^ q with p < q canonical primes.
class WedgeClass {
public:
    using Pair = std::pair<GaussianInteger, GaussianInteger>;

    static WedgeClass of(const MultSupportVector& a, const MultSupportVector& b);

    const std::map<Pair, mpq_class>& entries() const { return e_; }
    bool is_zero() const { return e_.empty(); }
    WedgeClass operator+(const WedgeClass& o) const;
    WedgeClass operator-(const WedgeClass& o) const;
    WedgeClass scaled(const mpq_class& k) const;
    bool operator==(const WedgeClass& o) const { return e_ == o.e_; }
    std::string to_string() const;

private:
    void add(const GaussianInteger& p, const GaussianInteger& q, const mpq_class& c);
    std::map<Pair, mpq_class> e_;
};

WedgeClass wedge(const FieldElement& a, const FieldElement& b, std::uint64_t bound = kDefaultFactorBound);

// Canonical Gaussian primes; throws InvalidArgument on a non-prime.
std::vector<GaussianInteger> canonical_primes(const std::vector<FieldElement>& primes);

// All gamma = (a + b i)/c with |a|, |b| <= height, 1 <= c <= height such that
// gamma and 1 - gamma are S-units. Deduplicated, ordered by height and then
// canonically. Closed under conjugation when S is.
std::vector<FieldElement> harvest(const std::vector<GaussianInteger>& primes, long height);

struct SteinbergAtom {
    FieldElement gamma;
    mpq_class coefficient;
};

struct SteinbergDecomposition {
    FieldElement alpha, beta;
    mpz_class denominator = 1;  // N
    std::vector<SteinbergAtom> atoms;
    long candidates = 0;        // harvested atom count
    long rank = 0;              // rank of the atom system
    bool trivial = false;       // beta = 1 - alpha shortcut

    // N (alpha ^ beta) = sum N c (gamma ^ (1 - gamma)), by fresh factorizations
    bool verify(std::uint64_t bound = kDefaultFactorBound) const;
    std::string certificate() const;
};

struct DecomposeOptions {
    std::vector<GaussianInteger> primes;  // empty: supports of alpha, beta, 1 - alpha, 1 - beta, their conjugates, and 1 + i
    long height = 8;
    std::uint64_t factor_bound = kDefaultFactorBound;
    bool trivial_shortcut = true;  // answer beta = 1 - alpha with the single atom alpha
};

std::vector<GaussianInteger> default_primes(const FieldElement& alpha, const FieldElement& beta,
                                            std::uint64_t bound = kDefaultFactorBound);

SteinbergDecomposition decompose(const FieldElement& alpha, const FieldElement& beta, const DecomposeOptions& opts = {});

}  // namespace hachow
