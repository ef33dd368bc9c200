#include <doctest.h>

#include "hachow/errors.hpp"
#include "hachow/pairing.hpp"
#include "shape_table.hpp"
#include "support.hpp"

#include <random>

using namespace hachow;

namespace {

constexpr mpfr_prec_t kBits = 256;

FieldElement gi(long a, long b) { return FieldElement(mpq_class(a), mpq_class(b)); }
FieldElement gq(long a, long b, long c) { return FieldElement(mpq_class(a, c), mpq_class(b, c)); }

DeligneClass twist2(const Real& imag_part) { return DeligneClass{2, {imag_part, -imag_part}}; }

Real L2(const FieldElement& x) { return bloch_wigner(x.embed(0, kBits)); }

}  // namespace

TEST_CASE("reduction modulo the regulator image") {
    DeligneClass g = gaussian_regulator_generator();
    Reduction one = reduce_mod_regulator(g, {g});
    CHECK(one.multiples[0] == 1);
    CHECK(one.residue_norm == 0);
    Reduction zero = reduce_mod_regulator(DeligneClass{2, {Real(kBits), Real(kBits)}}, {g});
    CHECK(zero.multiples[0] == 0);
    CHECK(zero.residue_norm == 0);
    Reduction r = reduce_mod_regulator(g.scaled(Real(mpq_class(-17, 12), kBits)), {g});
    CHECK(r.multiples[0] == mpq_class(-17, 12));
    CHECK(r.residue_norm < 1e-70);
    // 2/4 and 1/2 tie: the smaller denominator wins
    CHECK(reduce_mod_regulator(g.scaled(Real(0.5, kBits)), {g}).multiples[0].get_den() == 2);
    // beyond the bound the residue is reported, not hidden
    Reduction far = reduce_mod_regulator(g.scaled(Real(mpq_class(1, 149), kBits)), {g}, 144);
    CHECK(far.residue_norm > 1e-6);
    CHECK(reduce_mod_regulator(g, {}).residue_norm == doctest::Approx(abs(g.scalars[0]).to_double()));
    CHECK_THROWS_AS(reduce_mod_regulator(g, {DeligneClass{2, {Real(kBits), Real(kBits)}}}), Error);
    // the generator is i L2(i)/(2 pi) = i G/(2 pi) with G Catalan's constant
    CHECK(abs(g.scalars[0] - Real::catalan(kBits) / (Real::pi(kBits) * 2L)) < Real(1e-70, kBits));
}

TEST_CASE("pairing of Steinberg pairs") {
    std::mt19937_64 rng(91);
    for (int k = 0; k < 10; ++k) {
        FieldElement a = testing_support::random_generic(rng, 5, 2);
        PairingResult direct = pair_11(a, FieldElement(1) - a);
        // (alpha, 1 - alpha) = -P(C_alpha) = +(1/2 pi) i L2(alpha)
        DeligneClass expect = twist2(L2(a) / (Real::pi(kBits) * 2L));
        CHECK(direct.raw.distance(expect) < Real(1e-60, kBits));

        PairingOptions generic;
        generic.decompose.trivial_shortcut = false;
        PairingResult solved = pair_11(a, FieldElement(1) - a, generic);
        CHECK(!solved.decomposition->trivial);
        Reduction diff = reduce_mod_regulator(solved.raw - expect, solved.generators);
        CHECK(diff.residue_norm <= 1e-9);
    }
}

TEST_CASE("worked example over Q(i)") {
    FieldElement a = gi(2, 3), b = gi(1, -2);
    PairingResult r = pair_11(a, b);
    REQUIRE(r.decomposition);
    CHECK(r.decomposition->verify());
    Real pi = Real::pi(kBits);
    FieldElement g = gi(-1, -1);
    Real closed_form = -L2(g) / (pi * 2L) + L2(g.pow(6)) / (pi * 12L) + L2(a) / (pi * 2L);
    Reduction diff = reduce_mod_regulator(r.raw - twist2(closed_form), r.generators);
    MESSAGE(r.certificate << "; differs from the closed form by " << diff.multiples[0].get_str() << " generators");
    CHECK(diff.residue_norm <= 1e-9);
    CHECK(diff.multiples[0].get_den() <= 144);

    // antisymmetry modulo the generator
    PairingResult swapped = pair_11(b, a);
    CHECK(reduce_mod_regulator(r.raw + swapped.raw, r.generators).residue_norm <= 1e-9);
}

TEST_CASE("parity vanishing on norm-one pairs") {
    const FieldElement units[] = {gq(3, 4, 5), gq(5, 12, 13), gq(4, 3, 5), gq(8, 15, 17), gq(12, -5, 13), gq(-3, 4, 5)};
    int pairs = 0;
    for (const auto& a : units)
        for (const auto& b : units) {
            if (!(a < b)) continue;
            REQUIRE(is_log_kernel(a));
            PairingResult r = pair_11(a, b);
            CHECK(r.reduction.residue_norm <= 1e-9);
            ++pairs;
        }
    CHECK(pairs >= 10);
}

TEST_CASE("weight-three standard pairing") {
    PairingResult r = pair_1_2_standard();
    CHECK(r.p == 1);
    CHECK(r.q == 2);
    Real pi = Real::pi(kBits);
    Real expect = -(Real::zeta(3, kBits) * 3L) / (pi * pi * 16L);
    CHECK(abs(r.raw.value(0).re - expect) <= Real(1e-10, kBits));
    CHECK(r.error <= 1e-6);
    CHECK(r.certificate.find("Z_i") != std::string::npos);
}

TEST_CASE("rational equivalence shifts") {
    FieldElement a = gi(2, 3);
    ArithmeticCycle s = rational_equivalence_shift(cycles::totaro(a));
    CHECK(s.cycle == product(cycles::point({a}), cycles::point({FieldElement(1) - a})));
    REQUIRE(s.green);
    CHECK(s.green->distance(regulator_totaro(a).value.scaled(Real(-1L, kBits))) < Real(1e-60, kBits));

    // a cycle lands in the regulator image: -P(Z_i) = 4 generators
    RegulatorOptions o;
    o.precision.bits = 128;
    ArithmeticCycle z = rational_equivalence_shift(cycles::z_i(), o);
    CHECK(z.cycle.is_zero());
    Reduction red = reduce_mod_regulator(*z.green, {gaussian_regulator_generator(o)});
    CHECK(red.multiples[0] == 4);
    CHECK(red.residue_norm <= 1e-6);

    ArithmeticCycle d = rational_equivalence_shift(FormalCycle::parse("(2 + i; z; 3)"));
    CHECK(d.cycle.is_zero());
    CHECK(d.green->scalars[0].is_zero());
}

TEST_CASE("group shapes against the transcribed table") {
    for (int p = 0; p <= 5; ++p)
        for (int n = 0; n <= 10; ++n) {
            GroupShape g = group_shape(p, n);
            CAPTURE(p);
            CAPTURE(n);
            CHECK(g.chow == shape_table::lookup(shape_table::chow, p, n));
            CHECK(g.deligne == shape_table::lookup(shape_table::deligne, p, n));
            CHECK(g.arithmetic == shape_table::lookup(shape_table::arithmetic, p, n));
            CHECK(g.arithmetic_tw == shape_table::lookup(shape_table::arithmetic_tw, p, n));
        }
    CHECK(group_shape(2, 3).chow_rank == 1);
    CHECK(group_shape(1, 1).chow_rank == -1);
    CHECK(group_shape(3, 1).chow_rank == 0);
    CHECK_THROWS_AS(group_shape(-1, 0), Error);
}
