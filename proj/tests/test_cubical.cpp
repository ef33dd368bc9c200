#include <doctest.h>

#include "hachow/cubical.hpp"
#include "hachow/errors.hpp"
#include "support.hpp"

using namespace hachow;
using testing_support::random_element;
using testing_support::random_generic;

namespace {

FieldElement I(0, 1);

FormalCycle pt(std::initializer_list<FieldElement> xs) { return cycles::point(std::vector<FieldElement>(xs)); }

std::vector<FormalCycle> surface_corpus(std::mt19937_64& rng) {
    std::vector<FormalCycle> out{cycles::xi(), cycles::xi_printed(), cycles::c_prime(I), cycles::c_double_prime(I)};
    for (int k = 0; k < 6; ++k) {
        FieldElement a = random_generic(rng);
        out.push_back(cycles::c_prime(a));
        out.push_back(cycles::c_double_prime(a));
        out.push_back(product(cycles::totaro(a), cycles::totaro(random_generic(rng))));
        out.push_back(product(cycles::multilinearity_curve(a, random_generic(rng)), cycles::totaro(random_generic(rng))));
    }
    out.push_back(FormalCycle::parse("(z1; 1 - z1; z2; 1 - 1/z2)"));
    return out;
}

box::Point random_box_point(std::mt19937_64& rng, int n) {
    box::Point p;
    std::uniform_int_distribution<int> special(0, 5);
    for (int k = 0; k < n; ++k) {
        int s = special(rng);
        if (s == 0) p.push_back(P1Value(FieldElement(0)));
        else if (s == 1) p.push_back(P1Value::inf());
        else p.push_back(P1Value(random_generic(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("literal round-trip") {
    const char* literals[] = {
        "(z; 1 - (2 + 3*i)/z; 1 - z)",
        "4*(z; 1 - i/z; 1 - z) - (z; (z - i)^4/(z - 1)^4; 1 - i)",
        "(z2; 1 - i/z2; z1; 1 - z2/z1; 1 - z1)",
        "(2 + i; 3) - 2*(3; 2 + i)",
        "(inf; z; 0)",
        "(t; (t - 3)*(t - 1/2*i)/(t - 1)^2)",
    };
    for (const char* lit : literals) {
        FormalCycle z = FormalCycle::parse(lit);
        CAPTURE(lit);
        CHECK(FormalCycle::parse(z.to_string()) == z);
    }
    CHECK(FormalCycle::parse("0").is_zero());
    CHECK(FormalCycle::parse("(z; 2) * 3") == FormalCycle::parse("3*(z; 2)"));
    CHECK(FormalCycle::parse("(z; 1 - z) - (z; 1 - z)").is_zero());
    // Moebius reparametrizations are identified.
    CHECK(FormalCycle::parse("(1/z; 1 - 1/z)") == FormalCycle::parse("(z; 1 - z)"));
    CHECK(FormalCycle::parse("(2*z + i; z)") == FormalCycle::parse("(z; (z - i)/2)"));
    CHECK_THROWS_AS(FormalCycle::parse("(z; 1)"), ParseError);
    CHECK_THROWS_AS(FormalCycle::parse("(z; 2"), ParseError);
    CHECK_THROWS_AS(FormalCycle::parse("(x; y; w2)"), ParseError);
    CHECK_THROWS_AS(FormalCycle::parse("(z) (z)"), ParseError);
    CHECK_THROWS_AS(FormalCycle::parse("(z) + (z; 2)"), Error);
}

TEST_CASE("Totaro curves bound the Steinberg symbol") {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 20; ++k) {
        FieldElement a = random_generic(rng);
        CAPTURE(a.to_string());
        CHECK(boundary(cycles::totaro(a)) == pt({a, FieldElement(1) - a}));
        CHECK(boundary(boundary(cycles::totaro(a))).is_zero());
    }
    FormalCycle z = FormalCycle::parse("(z; 1 - (2+3*i)*(z)^-1; 1 - z)");
    CHECK(boundary(z) == pt({FieldElement(2, 3), FieldElement(-1, -3)}));
}

TEST_CASE("curve faces by hand substitution") {
    std::mt19937_64 rng(42);
    for (int k = 0; k < 10; ++k) {
        FieldElement a = random_generic(rng), b = random_generic(rng);
        FieldElement one(1);
        // (t, (t-a)(t-b)/(t-1)^2): t = 0 gives ab, t = inf gives 1 (dropped),
        // zeros t = a, t = b, double pole t = 1 (dropped since t = 1).
        FormalCycle c = cycles::multilinearity_curve(a, b);
        CHECK(face(c, 1, 0) == pt({a * b}));
        CHECK(face(c, 1, 1).is_zero());
        CHECK(face(c, 2, 0) == pt({a}) + pt({b}));
        CHECK(face(c, 2, 1).is_zero());
        CHECK(boundary(c) == pt({a}) + pt({b}) - pt({a * b}));
        // torsion curve (z, (z-a)^4/(z-1)^4): z = 0 gives a^4 with sign -1
        FormalCycle t = cycles::torsion_curve(a, 4);
        FormalCycle expect = pt({a}) * 4;
        if (!a.pow(4).is_one()) expect -= pt({a.pow(4)});
        CHECK(boundary(t) == expect);
    }
}

TEST_CASE("boundary squares to zero on surfaces") {
    std::mt19937_64 rng(43);
    for (const FormalCycle& s : surface_corpus(rng)) {
        CAPTURE(s.to_string());
        FormalCycle d = boundary(s);
        CHECK(boundary(d).is_zero());
        CHECK((d.is_zero() || d.codimension() == s.codimension()));
    }
}

TEST_CASE("surface faces by hand restriction") {
    std::mt19937_64 rng(49);
    for (int k = 0; k < 8; ++k) {
        FieldElement a = random_generic(rng);
        FormalCycle c = cycles::c_prime(a);
        // slot 2 vanishes on z2 = a, slot 4 on z1 = z2; every other face is cut
        // off by a coordinate equal to 1 or is empty.
        CHECK(face(c, 2, 0) == product(pt({a}), cycles::totaro(a)));
        CHECK(face(c, 4, 0) == FormalCycle::parse("(z; 1 - (" + a.to_string() + ")/z; z; 1 - z)"));
        for (int i = 1; i <= 5; ++i)
            for (int j = 0; j < 2; ++j) {
                if (j == 0 && (i == 2 || i == 4)) continue;
                CAPTURE(i);
                CAPTURE(j);
                CHECK(face(c, i, j).is_zero());
            }
    }
    FormalCycle s = FormalCycle::parse("(z1; 1 - z1; z2; 1 - 1/z2)");
    CHECK(face(s, 1, 0).is_zero());
    CHECK(face(s, 2, 0).is_zero());  // z1 = 1
    CHECK(face(s, 2, 1) == FormalCycle::parse("(inf; z; 1 - 1/z)"));
    CHECK(face(s, 3, 1).is_zero());  // last slot tends to 1
}

TEST_CASE("weight three boundary certificate") {
    FormalCycle lhs = boundary((cycles::c_prime(I) - cycles::c_double_prime(I)) * 4 - cycles::xi());
    FormalCycle rhs = product(pt({I}), cycles::z_i());
    CHECK(lhs == rhs);
    CHECK(boundary(cycles::z_i()).is_zero());
    CHECK(boundary(boundary(cycles::xi())).is_zero());
    // The slot order as printed does not close up.
    FormalCycle printed = boundary((cycles::c_prime(I) - cycles::c_double_prime(I)) * 4 - cycles::xi_printed());
    CHECK_FALSE(printed == product(pt({I}), cycles::z_i_printed()));
    CHECK_FALSE(printed == rhs);
}

TEST_CASE("cocubical identities for h") {
    std::mt19937_64 rng(44);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        int n = dim(rng);
        box::Point t = random_box_point(rng, n);
        for (int j = 1; j <= n; ++j) {
            // h^j : box^{n+1} -> box^n
            CHECK(box::h(box::coface(t, j, 0), j) == t);
            CHECK(box::h(box::coface(t, j + 1, 0), j) == t);
            box::Point collapsed = box::coface(box::degeneracy(t, j), j, 1);
            CHECK(box::h(box::coface(t, j, 1), j) == collapsed);
            CHECK(box::h(box::coface(t, j + 1, 1), j) == collapsed);
        }
        for (int l = 0; l < 2; ++l)
            for (int i = 1; i <= n + 1; ++i)
                for (int j = 1; j + 1 <= n + 1; ++j) {
                    if (i < j && j - 1 + 1 <= n && j - 1 >= 1)
                        CHECK(box::h(box::coface(t, i, l), j) == box::coface(box::h(t, j - 1), i, l));
                    if (i > j + 1 && j + 1 <= n)
                        CHECK(box::h(box::coface(t, i, l), j) == box::coface(box::h(t, j), i - 1, l));
                }
    }
}

TEST_CASE("h pullback inverts h on points") {
    std::mt19937_64 rng(45);
    for (int k = 0; k < 30; ++k) {
        FieldElement a = random_generic(rng), b = random_generic(rng), c = random_generic(rng);
        FormalCycle p = pt({a, b, c});
        for (int j = 1; j <= 3; ++j) {
            FormalCycle curve = h_pullback(p, j);
            REQUIRE(curve.terms().size() == 1);
            const Generator& g = curve.terms().begin()->first;
            // sample the curve and push forward by h^j
            for (int s = 0; s < 3; ++s) {
                FieldElement z = random_generic(rng, 30, 7);
                box::Point q;
                bool ok = true;
                for (const auto& coord : g.coords) {
                    P1Value v = coord.is_function ? coord.f.evaluate(P1Value(z)) : coord.constant;
                    ok = ok && !v.infinite;
                    q.push_back(v);
                }
                if (ok) CHECK(box::h(q, j) == box::Point{P1Value(a), P1Value(b), P1Value(c)});
            }
        }
    }
    FormalCycle inf_point = FormalCycle::parse("(inf; 2)");
    CHECK(h_pullback(inf_point, 1) == FormalCycle::parse("(inf; z; 2) + (z; inf; 2)"));
}

TEST_CASE("graded commutativity homotopy") {
    std::mt19937_64 rng(46);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<FieldElement> xs;
        for (int k = 0; k < 4; ++k) xs.push_back(random_generic(rng));
        for (int n = 1; n <= 2; ++n)
            for (int m = 1; m <= 2; ++m) {
                std::vector<FieldElement> zx(xs.begin(), xs.begin() + n), wx(xs.begin() + n, xs.begin() + n + m);
                FormalCycle z = cycles::point(zx), w = cycles::point(wx);
                FormalCycle zw = product(z, w), wz = product(w, z);
                FormalCycle h = commutativity_homotopy(zw, n, m);
                long sign = (n * m) % 2 ? -1 : 1;
                FormalCycle rest = boundary(h) - (zw - wz * sign);
                CAPTURE(n);
                CAPTURE(m);
                CHECK((rest.is_zero() || is_degenerate(rest)));
            }
    }
    FieldElement a(2, 1), b(3);
    FormalCycle h = commutativity_homotopy(pt({a, b}), 1, 1);
    CHECK(boundary(h) == pt({a, b}) + pt({b, a}));
}

TEST_CASE("degenerate generators") {
    CHECK(is_degenerate(FormalCycle::parse("(2; z)")));
    CHECK(is_degenerate(FormalCycle::parse("(z1; z2; 1 - z1)")));
    CHECK_FALSE(is_degenerate(FormalCycle::parse("(z; 1 - 2/z; 1 - z)")));
    CHECK_FALSE(is_degenerate(FormalCycle::parse("(2; 3)")));
    CHECK(is_degenerate(FormalCycle()));
    // boundaries of degenerate cycles are degenerate
    FormalCycle d = FormalCycle::parse("(2; z; 1 - 3/z)");
    CHECK_FALSE(is_degenerate(d));
    CHECK(is_degenerate(FormalCycle::parse("(z1; 2; z2; 1 - 3/z2)")));
}

TEST_CASE("normalization conditions") {
    std::mt19937_64 rng(47);
    for (int k = 0; k < 5; ++k) {
        FieldElement a = random_generic(rng);
        FormalCycle c = cycles::totaro(a);
        CHECK(is_normalized(c));
        CHECK_FALSE(is_refined_normalized(c));
    }
    CHECK_FALSE(is_normalized(FormalCycle::parse("(z; inf)")));
    CHECK(is_refined_normalized(cycles::z_i()));
}

TEST_CASE("conjugation commutes with the boundary") {
    std::mt19937_64 rng(48);
    for (const FormalCycle& s : surface_corpus(rng)) CHECK(boundary(s.conjugate()) == boundary(s).conjugate());
    CHECK(cycles::totaro(I).conjugate() == cycles::totaro(FieldElement(0, -1)));
}

TEST_CASE("unresolved base points are rejected") {
    // z2/z1 is undefined at the origin, where the third slot vanishes.
    FormalCycle bad = FormalCycle::parse("(z1; z2/z1; z1 + z2)");
    // 1 - z1 - z2 is indeterminate at (inf, inf) where z1 is infinite
    CHECK_THROWS_AS(boundary(FormalCycle::parse("(z1; z2; 1 - z1 - z2)")), Error);
    // slot 2 is indeterminate at (2, 2) where the last slot vanishes
    CHECK_THROWS_AS(boundary(FormalCycle::parse("(z1; (z1 - z2)/(z1 - 2); z2; 1 - z2/z1)")), Error);
    CHECK(boundary(cycles::torsion_curve(I, 4)) == pt({I}) * 4);
    CHECK_THROWS_AS(boundary(bad), Error);
    try {
        boundary(bad);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedShape);
    }
}
