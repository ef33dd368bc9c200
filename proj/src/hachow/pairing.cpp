#include "hachow/pairing.hpp"

#include "hachow/errors.hpp"

#include <cmath>

namespace hachow {

GroupShape group_shape(int p, int n, const FieldSpec& field) {
    if (p < 0 || n < 0) throw invalid_argument("group_shape needs p, n >= 0");
    const int r1 = field.r1(), r2 = field.r2();
    GroupShape g;
    g.p = p, g.n = n, g.field = field.name();
    auto power = [](const std::string& base, int k) { return base + "^" + std::to_string(k); };

    if (p == 0 && n == 0) g.chow = "Q", g.chow_rank = 1;
    else if (p == 1 && n == 1) g.chow = "F^x (x) Q", g.chow_rank = -1;
    else if (2 * p - n == 1 && p % 2 == 1) g.chow = power("Q", r1 + r2), g.chow_rank = r1 + r2;
    else if (2 * p - n == 1) g.chow = power("Q", r2), g.chow_rank = r2;
    else g.chow = "0", g.chow_rank = 0;

    std::string twist = "R(" + std::to_string(p - 1) + ")";
    if (n == 0 && p == 0) g.deligne = power("R", r1 + r2), g.deligne_dim = r1 + r2;
    else if (n == 1 && p % 2 == 1) g.deligne = power(twist, r1 + r2), g.deligne_dim = r1 + r2;
    else if (n == 1) g.deligne = power(twist, r2), g.deligne_dim = r2;
    else g.deligne = "0", g.deligne_dim = 0;

    std::string quotient = "H^1_D(F, R(" + std::to_string(p) + "))/im(rho_Be)";
    if (p == 0 && n == 0) g.arithmetic = "CH^0(F)_Q = Q";
    else if (p > 0 && 2 * p - n == 1) g.arithmetic = g.chow;
    else if (p > 0 && 2 * p - n == 2) g.arithmetic = quotient;
    else g.arithmetic = "0";

    if (p == 0 && n == 0) g.arithmetic_tw = "Q";
    else if (p > 0 && n == 2 * p - 1)
        g.arithmetic_tw = "extension 0 -> D_TW^0(F, " + std::to_string(p) + ") -> * -> " + g.chow + " -> 0";
    else if (p > 0 && n == 2 * p - 2) g.arithmetic_tw = quotient;
    else g.arithmetic_tw = "0";
    return g;
}

namespace {

Real dot(const DeligneClass& a, const DeligneClass& b) {
    Real s(a.scalars[0].precision());
    for (std::size_t k = 0; k < a.scalars.size(); ++k) s += a.scalars[k] * b.scalars[k];
    return s;
}

mpq_class best_rational(const Real& t, long bound) {
    mpq_class best(0);
    Real best_err = abs(t);
    for (long d = 1; d <= bound; ++d) {
        Real scaled = t * d;
        mpz_class p;
        // round to nearest integer
        Real fl(scaled.precision());
        mpfr_round(fl.raw(), scaled.raw());
        mpfr_get_z(p.get_mpz_t(), fl.raw(), MPFR_RNDN);
        Real err = abs(t - Real(mpq_class(p, d), t.precision()));
        if (err < best_err) {
            best_err = err;
            best = mpq_class(p, d);
            best.canonicalize();
        }
    }
    return best;
}

}  // namespace

Reduction reduce_mod_regulator(const DeligneClass& v, const std::vector<DeligneClass>& generators, long denom_bound) {
    if (denom_bound < 1) throw invalid_argument("denominator bound must be positive");
    mpfr_prec_t bits = v.scalars.at(0).precision();
    std::size_t k = generators.size();
    for (const auto& g : generators) {
        if (g.twist != v.twist) throw invalid_argument("generator twist differs from the value's");
        if (dot(g, g).is_zero()) throw invalid_argument("regulator generator is zero");
    }
    // least squares via the normal equations (k is tiny)
    std::vector<std::vector<Real>> A(k, std::vector<Real>(k + 1, Real(bits)));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) A[i][j] = dot(generators[i], generators[j]);
        A[i][k] = dot(generators[i], v);
    }
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < k; ++r)
            if (abs(A[r][c]) > abs(A[p][c])) p = r;
        std::swap(A[p], A[c]);
        if (A[c][c].is_zero()) throw invalid_argument("regulator generators are linearly dependent");
        for (std::size_t r = 0; r < k; ++r) {
            if (r == c) continue;
            Real f = A[r][c] / A[c][c];
            for (std::size_t j = c; j <= k; ++j) A[r][j] -= f * A[c][j];
        }
    }
    Reduction out;
    out.residue = v;
    for (std::size_t i = 0; i < k; ++i) {
        mpq_class q = best_rational(A[i][k] / A[i][i], denom_bound);
        out.multiples.push_back(q);
        out.residue = out.residue - generators[i].scaled(Real(q, bits));
    }
    for (const auto& s : out.residue.scalars) out.residue_norm = std::max(out.residue_norm, abs(s).to_double());
    return out;
}

DeligneClass gaussian_regulator_generator(const RegulatorOptions& opts) {
    DeligneClass t = regulator_totaro(FieldElement(0, 1), opts).value;
    return t.scaled(Real(-1L, opts.precision.bits));
}

PairingResult pair_11(const FieldElement& alpha, const FieldElement& beta, const PairingOptions& opts) {
    PairingResult r;
    r.p = r.q = 1;
    SteinbergDecomposition dec = decompose(alpha, beta, opts.decompose);
    mpfr_prec_t bits = opts.regulator.precision.bits;
    r.raw = DeligneClass{2, {Real(bits), Real(bits)}};
    for (const auto& a : dec.atoms)
        r.raw = r.raw - regulator_totaro(a.gamma, opts.regulator).value.scaled(Real(a.coefficient, bits));
    r.certificate = dec.certificate();
    r.decomposition = std::move(dec);
    if (alpha.d() == 1) r.generators.push_back(gaussian_regulator_generator(opts.regulator));
    r.reduction = reduce_mod_regulator(r.raw, r.generators, opts.denom_bound);
    return r;
}

PairingResult pair_1_2_standard(const PairingOptions& opts) {
    PairingResult r;
    r.p = 1, r.q = 2;
    FieldElement i(0, 1);
    FormalCycle pair = cycles::c_prime(i) - cycles::c_double_prime(i);
    FormalCycle bounding = pair * 4 - cycles::xi();
    if (boundary(bounding) != product(cycles::point({i}), cycles::z_i()))
        throw Error(ErrorKind::Internal, "symbolic boundary mismatch for 4(C'_i - C''_i) - Xi_i");
    r.certificate = "delta(" + bounding.to_string() + ") = (i) x Z_i";

    RegulatorValue xi = regulator(cycles::xi(), opts.regulator);
    if (xi.provenance != Provenance::ExactZero) throw Error(ErrorKind::Internal, "P(Xi_i) was not recognized as zero");
    RegulatorValue xi_num = regulator_split_surface(cycles::xi(), true, opts.regulator);
    double xi_size = 0;
    for (const auto& s : xi_num.value.scalars) xi_size = std::max(xi_size, abs(s).to_double());
    if (xi_size > 1e-6) throw Error(ErrorKind::Internal, "numeric P(Xi_i) = " + std::to_string(xi_size) + " is not zero");
    r.error = xi_size;

    r.raw = regulator_goncharov_weight3(pair * -4, opts.regulator).value;
    r.reduction = reduce_mod_regulator(r.raw, r.generators, opts.denom_bound);
    return r;
}

ArithmeticCycle rational_equivalence_shift(const FormalCycle& z, const RegulatorOptions& opts) {
    ArithmeticCycle out;
    if (is_degenerate(z)) {
        out.cycle = FormalCycle(std::max(0, z.dimension() - 1));
        int p = std::max(1, z.codimension());
        out.green = DeligneClass{p, {Real(opts.precision.bits), Real(opts.precision.bits)}};
        return out;
    }
    out.cycle = boundary(z);
    out.green = regulator(z, opts).value.scaled(Real(-1L, opts.precision.bits));
    return out;
}

}  // namespace hachow
