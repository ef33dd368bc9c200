// Acceptance run: one PASS/FAIL line per criterion. Tolerances and time
// budgets are fixed here; the oracles are written out locally and do not call
// the routines they check.
#include "hachow/errors.hpp"
#include "hachow/pairing.hpp"
#include "shape_table.hpp"
#include "support.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace hachow;
using testing_support::random_generic;

namespace {

constexpr mpfr_prec_t kBits = 256;

FieldElement gi(long a, long b) { return FieldElement(mpq_class(a), mpq_class(b)); }
FieldElement gq(long a, long b, long c) { return FieldElement(mpq_class(a, c), mpq_class(b, c)); }
const FieldElement kOne(1);
const FieldElement kI(0, 1);

// ---- oracles

// sum_{k>=0} (-1)^k a(k), accelerated by repeated averaging of partial sums
Real alternating_sum(const std::function<Real(long)>& a, int terms = 320) {
    std::vector<Real> s;
    Real acc(kBits + 64);
    for (long k = 0; k < terms; ++k) {
        Real t = a(k);
        if (k % 2) acc -= t;
        else acc += t;
        s.push_back(acc);
    }
    while (s.size() > 1) {
        for (std::size_t j = 0; j + 1 < s.size(); ++j) s[j] = ldexp(s[j] + s[j + 1], -1);
        s.pop_back();
    }
    return s[0];
}

Real catalan_oracle() {
    return alternating_sum([](long k) { return pow(Real(2 * k + 1, kBits + 64), -2); });
}

// zeta(3) = eta(3) / (1 - 2^-2)
Real zeta3_oracle() {
    Real eta = alternating_sum([](long k) { return pow(Real(k + 1, kBits + 64), -3); });
    return eta * Real(4L, kBits + 64) / Real(3L, kBits + 64);
}

// Bloch-Wigner in double precision: power series of Li_2 after moving the
// argument into |w| < 0.85 with the six-fold symmetry.
double bw_double(std::complex<double> z) {
    using cd = std::complex<double>;
    auto li2 = [](cd w) {
        cd s = 0, p = 1;
        for (int k = 1; k < 4000; ++k) p *= w, s += p / double(k) / double(k);
        return s;
    };
    auto d_small = [&](cd w) { return std::imag(li2(w)) + std::arg(1.0 - w) * std::log(std::abs(w)); };
    cd cand[6] = {z, 1.0 / z, 1.0 - z, 1.0 - 1.0 / z, 1.0 / (1.0 - z), z / (z - 1.0)};
    const double sign[6] = {1, -1, -1, 1, 1, -1};
    int best = 0;
    for (int k = 1; k < 6; ++k)
        if (std::abs(cand[k]) < std::abs(cand[best])) best = k;
    return sign[best] * d_small(cand[best]);
}

std::complex<double> to_cd(const FieldElement& x) { return {x.re().get_d(), x.im().get_d()}; }

// best p/q with q <= bound against t, ties to the smaller q
std::pair<long, long> nearest_rational(double t, long bound) {
    long bp = 0, bq = 1;
    double err = std::abs(t);
    for (long q = 1; q <= bound; ++q) {
        long p = std::lround(t * q);
        double e = std::abs(t - double(p) / q);
        if (e < err) err = e, bp = p, bq = q;
    }
    return {bp, bq};
}

// |v - (p/q) g| for the twist-2 scalar v, g = G/(2 pi) the Q(i) generator
struct Reduced {
    std::pair<long, long> multiple;
    double residue;
};
Reduced reduce_scalar(double v, long bound = 144) {
    const double g = catalan_oracle().to_double() / (2 * M_PI);
    auto m = nearest_rational(v / g, bound);
    return {m, std::abs(v - double(m.first) / m.second * g)};
}

// h on box coordinates: 1 - (s - 1)(t - 1), infinite when either slot is
box::Point h_oracle(const box::Point& t, int j) {
    box::Point out;
    for (int k = 0; k < static_cast<int>(t.size()); ++k) {
        if (k == j - 1) {
            const P1Value &a = t[k], &b = t[k + 1];
            if (a.infinite || b.infinite) out.push_back(P1Value::inf());
            else out.push_back(P1Value(kOne - (a.value - kOne) * (b.value - kOne)));
            ++k;
        } else {
            out.push_back(t[k]);
        }
    }
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

Complex random_disc_point(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> u(-radius, radius);
    for (;;) {
        double x = u(rng), y = u(rng);
        if (x * x + y * y < radius * radius && std::abs(y) > 1e-3)
            return Complex(Real(x, kBits), Real(y, kBits));
    }
}

// ---- harness

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail << "failed: " << what << "; ";
        ok = ok && cond;
    }
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs <= budget_s;
    bool pass = out.ok && in_time;
    if (!pass) ++failures;
    std::printf("%s %2d %-28s %7.2f s (budget %g s)%s  %s\n", pass ? "PASS" : "FAIL", id, name, secs, budget_s,
                in_time ? "" : " OVER BUDGET", out.detail.str().c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    criterion(1, "totaro-boundary", 1.0, [](Outcome& o) {
        std::mt19937_64 rng(1001);
        int n = 0;
        for (int k = 0; k < 20; ++k) {
            FieldElement a = random_generic(rng);
            // face oracle: only z = a (slot 2 vanishes) survives, giving (a, 1 - a)
            FormalCycle expect = FormalCycle::of(Generator::point({P1Value(a), P1Value(kOne - a)}));
            o.require(boundary(cycles::totaro(a)) == expect, "boundary of C_" + a.to_string());
            ++n;
        }
        std::vector<FormalCycle> corpus{cycles::xi(), cycles::xi_printed(), cycles::c_prime(kI),
                                        cycles::c_double_prime(kI)};
        for (int k = 0; k < 8; ++k) {
            FieldElement a = random_generic(rng), b = random_generic(rng);
            corpus.push_back(cycles::c_prime(a));
            corpus.push_back(cycles::c_double_prime(a));
            corpus.push_back(product(cycles::totaro(a), cycles::totaro(b)));
            corpus.push_back(product(cycles::multilinearity_curve(a, b), cycles::totaro(random_generic(rng))));
        }
        int surfaces = 0;
        for (const auto& s : corpus)
            for (const auto& [g, m] : s.terms()) {
                o.require(boundary(boundary(FormalCycle::of(g))).is_zero(), "d^2 on " + g.to_string());
                ++surfaces;
            }
        o.detail << n << " curves, d^2 = 0 on " << surfaces << " surface generators";
    });

    criterion(2, "cubical-homotopies", 10.0, [](Outcome& o) {
        std::mt19937_64 rng(1002);
        std::uniform_int_distribution<int> dim(1, 4);
        long identities = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            int n = dim(rng);
            box::Point t = random_box_point(rng, n);
            box::Point t1 = random_box_point(rng, n + 1);
            for (int j = 1; j <= n; ++j) o.require(box::h(t1, j) == h_oracle(t1, j), "h against the oracle");
            for (int j = 1; j <= n; ++j) {
                o.require(box::h(box::coface(t, j, 0), j) == t, "d^0_j h_j = id");
                o.require(box::h(box::coface(t, j + 1, 0), j) == t, "d^0_{j+1} h_j = id");
                box::Point collapsed = box::coface(box::degeneracy(t, j), j, 1);
                o.require(box::h(box::coface(t, j, 1), j) == collapsed, "d^1_j h_j = s_j d^1_j");
                o.require(box::h(box::coface(t, j + 1, 1), j) == collapsed, "d^1_{j+1} h_j = s_j d^1_j");
                identities += 4;
            }
            for (int l = 0; l < 2; ++l)
                for (int i = 1; i <= n + 1; ++i)
                    for (int j = 1; j <= n; ++j) {
                        if (i < j && j >= 2) {
                            o.require(box::h(box::coface(t, i, l), j) == box::coface(box::h(t, j - 1), i, l), "i < j");
                            ++identities;
                        }
                        if (i > j + 1) {
                            o.require(box::h(box::coface(t, i, l), j) == box::coface(box::h(t, j), i - 1, l), "i > j+1");
                            ++identities;
                        }
                    }
        }
        int products = 0;
        for (int k = 0; k < 20; ++k) {
            FormalCycle z = cycles::point({random_generic(rng)}), w = cycles::point({random_generic(rng)});
            FormalCycle zw = product(z, w), wz = product(w, z);
            FormalCycle h = commutativity_homotopy(zw, 1, 1);
            // (-1)^{1*1} = -1: dH = ZW + WZ
            FormalCycle rest = boundary(h) - (zw + wz);
            bool fine = rest.is_zero();
            if (!fine && is_degenerate(rest)) fine = regulator(rest).provenance == Provenance::ExactZero;
            o.require(fine, "dH = ZW + WZ for " + zw.to_string());
            ++products;
        }
        o.detail << identities << " coordinate identities on 1000 points, " << products << " H_{1,1} products";
    });

    criterion(3, "polylog-suite", 30.0, [](Outcome& o) {
        const Real tol(1e-12, kBits);
        Complex one(Real(1L, kBits));
        Complex i(Real(kBits), Real(1L, kBits));
        Real l2i = bloch_wigner(i);
        o.require(abs(l2i - catalan_oracle()) <= tol, "L2(i) = G");
        std::mt19937_64 rng(1003);
        double worst = 0;
        for (int k = 0; k < 100; ++k) {
            Complex u = random_disc_point(rng, 4.0);
            double e = abs(bloch_wigner(one / u) + bloch_wigner(u)).to_double();
            worst = std::max(worst, e);
            o.require(e <= 1e-12, "L2(1/u) = -L2(u)");
        }
        for (int k = 0; k < 100; ++k) {
            Complex x = random_disc_point(rng, 1.0), y = random_disc_point(rng, 1.0);
            Complex xy = one - x * y;
            Real s = bloch_wigner(x) + bloch_wigner(y) + bloch_wigner((one - x) / xy) + bloch_wigner(xy) +
                     bloch_wigner((one - y) / xy);
            worst = std::max(worst, abs(s).to_double());
            o.require(abs(s) <= tol, "five-term relation");
        }
        Real l3i = trilog_sv(i);
        Real expect = -(zeta3_oracle() * 3L) / 32L;
        o.require(abs(l3i - expect) <= tol, "L3(i) = -(3/32) zeta(3)");
        o.detail << "L2(i) gap " << abs(l2i - catalan_oracle()).to_double() << ", L3(i) gap "
                 << abs(l3i - expect).to_double() << ", worst relation " << worst;
    });

    criterion(4, "regulator-cross-check", 300.0, [](Outcome& o) {
        const FieldElement panel[] = {kI, gi(2, 0), gi(2, 3), gi(-1, -1), gq(1, 1, 2)};
        RegulatorOptions opts;  // default quadrature
        double worst = 0;
        for (const auto& a : panel) {
            RegulatorValue num = regulator_curve_numeric(cycles::totaro(a), opts);
            RegulatorValue closed = regulator_totaro(a, opts);
            double gap = num.value.distance(closed.value).to_double();
            // the closed form itself against -(1/2 pi) L2 from the double oracle
            double oracle = -bw_double(to_cd(a)) / (2 * M_PI);
            o.require(std::abs(closed.value.scalars[0].to_double() - oracle) <= 1e-12, "closed form vs oracle");
            o.require(gap <= 1e-4, "numeric vs closed form at " + a.to_string());
            worst = std::max(worst, gap);
        }
        o.detail << "worst |numeric - closed| = " << worst;
    });

    criterion(5, "lemma19-vanishing", 120.0, [](Outcome& o) {
        std::vector<FormalCycle> curves{cycles::multilinearity_curve(gi(2, 3), gi(1, -2)),
                                        FormalCycle::parse("(z; (z-i)^4*(z-1)^-4)")};
        std::mt19937_64 rng(1005);
        int random_curves = 0;
        while (random_curves < 5) {
            // (z, c (z-a)(z-b)/((z-d)(z-e))): degree zero, so z = inf meets no face
            FieldElement c = random_generic(rng), a = random_generic(rng), b = random_generic(rng),
                         d = random_generic(rng), e = random_generic(rng);
            std::string lit = "(z; (" + c.to_string() + ")*(z - (" + a.to_string() + "))*(z - (" + b.to_string() +
                              "))*(z - (" + d.to_string() + "))^-1*(z - (" + e.to_string() + "))^-1)";
            FormalCycle curve;
            try {
                curve = FormalCycle::parse(lit);
                if (curve.is_zero() || boundary(curve).is_zero()) continue;
                lemma19_check(curve);  // rejects curves meeting the faces badly
            } catch (const Error&) {
                continue;
            }
            curves.push_back(curve);
            ++random_curves;
        }
        double total = 0, residue = 0;
        for (const auto& c : curves) {
            Lemma19Report r = lemma19_check(c);
            o.require(r.total <= 1e-6, "total for " + c.to_string());
            o.require(r.residue_check <= 1e-6, "residue formula for " + c.to_string());
            total = std::max(total, r.total);
            residue = std::max(residue, r.residue_check);
        }
        o.detail << curves.size() << " curves, worst total " << total << ", worst residue check " << residue;
    });

    criterion(6, "worked-example", 60.0, [](Outcome& o) {
        FieldElement a = gi(2, 3), b = gi(1, -2);
        PairingResult r = pair_11(a, b);
        o.require(r.decomposition && r.decomposition->verify(), "decomposition certificate");
        o.require(abs(r.raw.scalars[0] + r.raw.scalars[1]) <= Real(1e-60, kBits), "conjugate embeddings");
        std::complex<double> g(-1, -1);
        // -(1/2pi) L2(-1-i) + (1/12pi) L2((-1-i)^6) + (1/2pi) L2(2+3i)
        double closed_form = -bw_double(g) / (2 * M_PI) + bw_double(std::pow(g, 6)) / (12 * M_PI) +
                       bw_double(to_cd(a)) / (2 * M_PI);
        Reduced red = reduce_scalar(r.raw.scalars[0].to_double() - closed_form);
        o.require(red.residue <= 1e-9, "residue modulo the generator");
        o.require(red.multiple.second <= 144, "denominator");
        o.detail << "certificate " << r.certificate << "; value - closed form = " << red.multiple.first << "/"
                 << red.multiple.second << " generators, residue " << red.residue;
    });

    criterion(7, "weight-three-example", 120.0, [](Outcome& o) {
        PairingResult r = pair_1_2_standard();
        FormalCycle bounding = (cycles::c_prime(kI) - cycles::c_double_prime(kI)) * 4 - cycles::xi();
        o.require(boundary(bounding) == product(cycles::point({kI}), cycles::z_i()), "delta(4(C'-C'') - Xi) = i x Z_i");
        o.require(r.certificate.find("= (i) x Z_i") != std::string::npos, "certificate returned");
        o.require(r.error <= 1e-6, "numeric P(Xi_i) = 0");
        Real pi = Real::pi(kBits + 64);
        Real expect = -(zeta3_oracle() * 3L) / (pi * pi * 16L);
        Real gap = abs(r.raw.value(0).re - expect);
        o.require(gap <= Real(1e-10, kBits), "(2/pi^2) L3(i) = -(3/(16 pi^2)) zeta(3)");
        o.detail << "value " << r.raw.value_string(0, 15) << ", gap " << gap.to_double() << ", |P(Xi)| " << r.error;
    });

    criterion(8, "group-bookkeeping", 1.0, [](Outcome& o) {
        int rows = 0;
        for (int p = 0; p <= 5; ++p)
            for (int n = 0; n <= 10; ++n) {
                GroupShape g = group_shape(p, n);
                std::string at = " at (" + std::to_string(p) + ", " + std::to_string(n) + ")";
                o.require(g.chow == shape_table::lookup(shape_table::chow, p, n), "chow" + at);
                o.require(g.deligne == shape_table::lookup(shape_table::deligne, p, n), "deligne" + at);
                o.require(g.arithmetic == shape_table::lookup(shape_table::arithmetic, p, n), "arithmetic" + at);
                o.require(g.arithmetic_tw == shape_table::lookup(shape_table::arithmetic_tw, p, n), "TW" + at);
                ++rows;
            }
        o.detail << rows << " (p, n) rows";
    });

    criterion(9, "log-kernel", 1.0, [](Outcome& o) {
        std::mt19937_64 rng(1009);
        std::uniform_int_distribution<long> small(-12, 12), kind(0, 2);
        const Real tol(1e-60, kBits);
        int accepted = 0;
        auto pythagorean = [&]() {
            for (;;) {
                long m = small(rng), n = small(rng);
                if (m == 0 && n == 0) continue;
                mpq_class d = m * m + n * n;
                return FieldElement(mpq_class(m * m - n * n) / d, mpq_class(2 * m * n) / d);
            }
        };
        for (int k = 0; k < 1000; ++k) {
            FieldElement x;
            switch (kind(rng)) {
            case 0: x = testing_support::random_nonzero(rng); break;
            case 1: x = pythagorean() * pythagorean(); break;
            default: x = pythagorean() * FieldElement(mpq_class(k + 2, k + 1)); break;
            }
            // |sigma(x)| = 1 to working precision
            Complex s = x.embed(0, kBits);
            bool oracle = abs(sqrt(s.re * s.re + s.im * s.im) - Real(1L, kBits)) <= tol;
            bool got = is_log_kernel(x);
            o.require(got == oracle, "kernel test at " + x.to_string());
            accepted += got;
        }
        o.require(is_log_kernel(gq(3, 4, 5)), "3/5 + 4/5 i");
        o.detail << accepted << " of 1000 accepted";
    });

    criterion(10, "parity-vanishing", 120.0, [](Outcome& o) {
        const FieldElement units[] = {gq(3, 4, 5), gq(5, 12, 13), gq(4, 3, 5), gq(8, 15, 17), gq(12, -5, 13)};
        int pairs = 0;
        double worst = 0;
        for (const auto& a : units)
            for (const auto& b : units) {
                if (!(a < b)) continue;
                PairingResult r = pair_11(a, b);
                o.require(r.decomposition && r.decomposition->verify(), "decomposition");
                Reduced red = reduce_scalar(r.raw.scalars[0].to_double());
                o.require(red.residue <= 1e-9, "residue for (" + a.to_string() + ", " + b.to_string() + ")");
                worst = std::max(worst, red.residue);
                ++pairs;
            }
        o.require(pairs >= 10, "ten pairs");
        o.detail << pairs << " norm-one pairs, worst residue " << worst;
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
