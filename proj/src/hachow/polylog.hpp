#pragma once

#include "hachow/mp.hpp"

namespace hachow {

struct PrecisionPolicy {
    mpfr_prec_t bits = 256;
    // Extra working bits carried through series evaluation before rounding.
    mpfr_prec_t guard_bits = 32;
    // li(1, z) refuses |z - 1| below this radius.
    double guard_radius = 1e-300;

    mpfr_prec_t working_bits() const { return bits + guard_bits; }
    // Decimal digits the returned values are claimed to carry.
    int claimed_digits() const;
};

// Principal-branch classical polylogarithm Li_n(z), n in {1, 2, 3}.
Complex li(int n, const Complex& z, const PrecisionPolicy& policy = {});

// Bloch-Wigner dilogarithm Im Li_2(z) + arg(1 - z) log|z|; 0 on the real line.
Real bloch_wigner(const Complex& z, const PrecisionPolicy& policy = {});

// Single-valued trilogarithm Re(Li_3(z) - log|z| Li_2(z) + log^2|z| Li_1(z) / 3).
Real trilog_sv(const Complex& z, const PrecisionPolicy& policy = {});

}  // namespace hachow
