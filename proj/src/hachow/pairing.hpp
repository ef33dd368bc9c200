#pragma once

#include "hachow/cubical.hpp"
#include "hachow/deligne.hpp"
#include "hachow/k2.hpp"
#include "hachow/regulator.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hachow {

// One row of the rank tables for Spec F with F imaginary quadratic (r1 = 0, r2 = 1).
struct GroupShape {
    int p = 0, n = 0;
    std::string field;
    std::string chow;            // CH^p(F, n)_Q
    int chow_rank = 0;           // -1 for the infinite-rank F^x (x) Q
    std::string deligne;         // D^n(F, p)
    int deligne_dim = 0;         // real dimension
    std::string arithmetic;      // CH^p(F, n, D)_Q with the Deligne complex
    std::string arithmetic_tw;   // same with the Thom-Whitney complex
};

GroupShape group_shape(int p, int n, const FieldSpec& field = FieldSpec::gaussian());

struct Reduction {
    std::vector<mpq_class> multiples;  // q-hat per generator
    DeligneClass residue;
    double residue_norm = 0;
};

// v - sum q_j g_j with each q_j the best rational of denominator <= bound
// (ties to the smaller denominator) against the least-squares coefficient.
Reduction reduce_mod_regulator(const DeligneClass& v, const std::vector<DeligneClass>& generators, long denom_bound = 144);

// For Q(i) and twist 2: the class i L2(i) / (2 pi) of -P(C_i); spans the same
// line as P(Z_i).
DeligneClass gaussian_regulator_generator(const RegulatorOptions& opts = {});

struct PairingResult {
    int p = 0, q = 0;
    DeligneClass raw;
    Provenance provenance = Provenance::ClosedForm;
    double error = 0;
    std::vector<DeligneClass> generators;
    Reduction reduction;
    std::optional<SteinbergDecomposition> decomposition;
    std::string certificate;  // symbolic identity the value rests on
};

struct PairingOptions {
    DecomposeOptions decompose;
    RegulatorOptions regulator;
    long denom_bound = 144;
};

// Cycle-level pairing of two points of Z^1(F, 1): sum over Steinberg atoms
// of -c P(C_gamma).
PairingResult pair_11(const FieldElement& alpha, const FieldElement& beta, const PairingOptions& opts = {});

// (i, Z_i) over Q(i): checks the boundary identity, the vanishing of the
// split surface, and returns -4 P(C'_i - C''_i).
PairingResult pair_1_2_standard(const PairingOptions& opts = {});

struct ArithmeticCycle {
    FormalCycle cycle;
    std::optional<DeligneClass> green;  // empty: the zero Green datum
};

// (delta Z, -P(Z)).
ArithmeticCycle rational_equivalence_shift(const FormalCycle& z, const RegulatorOptions& opts = {});

}  // namespace hachow
