#include "hachow/quadrature.hpp"

#include "hachow/errors.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace hachow {

namespace {

using cd = std::complex<double>;

struct Rule {
    std::vector<double> x, w;  // on [0, 1]
};

Rule gauss_legendre(int n) {
    Rule r;
    for (int i = 1; i <= n; ++i) {
        double x = std::cos(M_PI * (i - 0.25) / (n + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.x.push_back(0.5 * (1 - x));
        r.w.push_back(1 / ((1 - x * x) * dp * dp));
    }
    return r;
}

const Rule& coarse() {
    static const Rule r = gauss_legendre(6);
    return r;
}
const Rule& fine() {
    static const Rule r = gauss_legendre(12);
    return r;
}

// Parameter square -> polar (r, theta). Duffy patches collapse the edge s = 0
// onto the apex v.
struct Patch {
    bool duffy = false;
    double vr = 0, vt = 0, ar = 0, at = 0, br = 0, bt = 0;
    double det = 0;
};

struct Cell {
    int patch;
    double s0, s1, t0, t1;
    int depth;
    std::vector<cd> value;
    double err;
    bool operator<(const Cell& o) const { return err < o.err; }
};

class Engine {
public:
    Engine(const PlaneIntegrand& f, std::size_t m) : f_(f), m_(m), buf_(m) {}

    std::vector<Patch> patches;
    long evaluations = 0;

    void estimate(Cell& c) {
        std::vector<cd> lo = apply(c, coarse()), hi = apply(c, fine());
        c.err = 0;
        for (std::size_t k = 0; k < m_; ++k) c.err += std::abs(hi[k] - lo[k]);
        if (!std::isfinite(c.err)) c.err = INFINITY;
        c.value = std::move(hi);
    }

private:
    std::vector<cd> apply(const Cell& c, const Rule& rule) {
        const Patch& p = patches[c.patch];
        std::vector<cd> acc(m_);
        double hs = c.s1 - c.s0, ht = c.t1 - c.t0;
        for (std::size_t i = 0; i < rule.x.size(); ++i) {
            double s = c.s0 + hs * rule.x[i];
            for (std::size_t j = 0; j < rule.x.size(); ++j) {
                double t = c.t0 + ht * rule.x[j];
                double r, th, jac;
                if (p.duffy) {
                    r = p.vr + s * (p.ar - p.vr) + s * t * (p.br - p.ar);
                    th = p.vt + s * (p.at - p.vt) + s * t * (p.bt - p.at);
                    jac = s * std::abs(p.det);
                } else {
                    r = s, th = t, jac = 1;
                }
                jac *= r;
                if (jac == 0) continue;
                double w = rule.w[i] * rule.w[j] * hs * ht * jac;
                f_(std::polar(r, th), buf_);
                ++evaluations;
                for (std::size_t k = 0; k < m_; ++k) acc[k] += w * buf_[k];
            }
        }
        return acc;
    }

    const PlaneIntegrand& f_;
    std::size_t m_;
    std::vector<cd> buf_;
};

std::vector<double> merged(std::vector<double> v, double eps) {
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    for (double x : v)
        if (out.empty() || x - out.back() > eps) out.push_back(x);
    return out;
}

}  // namespace

QuadratureResult integrate_unit_disk(const PlaneIntegrand& f, std::size_t components, const std::vector<cd>& singular,
                                     const QuadratureOptions& opts) {
    constexpr double kMerge = 1e-12;
    const double two_pi = 2 * M_PI;
    std::vector<double> rs{0, 0.5, 1}, ts;
    for (int k = 0; k <= 8; ++k) ts.push_back(two_pi * k / 8);
    struct Polar {
        double r, t;
    };
    std::vector<Polar> marks;
    for (const cd& p : singular) {
        double r = std::abs(p);
        if (r < kMerge || r > 1.5) continue;
        double t = std::arg(p);
        if (t < 0) t += two_pi;
        if (t > two_pi - kMerge) t = 0;
        ts.push_back(t);
        if (r <= 1 + kMerge) {
            r = std::min(r, 1.0);
            rs.push_back(r);
            marks.push_back({r, t});
            if (t < kMerge) marks.push_back({r, two_pi});
        }
    }
    rs = merged(rs, kMerge);
    ts = merged(ts, kMerge);
    auto is_mark = [&](double r, double t) {
        return std::any_of(marks.begin(), marks.end(), [&](const Polar& m) {
            return std::abs(m.r - r) <= kMerge && std::abs(m.t - t) <= kMerge;
        });
    };

    Engine engine(f, components);
    std::priority_queue<Cell> queue;
    std::vector<Cell> done;
    auto push_rect = [&](auto&& self, double r0, double r1, double t0, double t1, int depth) -> void {
        double cr[4] = {r0, r1, r1, r0}, ct[4] = {t0, t0, t1, t1};
        int count = 0, at = -1;
        for (int k = 0; k < 4; ++k)
            if (cr[k] > kMerge && is_mark(cr[k], ct[k])) ++count, at = k;
        if (count > 1) {
            double rm = 0.5 * (r0 + r1), tm = 0.5 * (t0 + t1);
            self(self, r0, rm, t0, tm, depth + 1);
            self(self, rm, r1, t0, tm, depth + 1);
            self(self, r0, rm, tm, t1, depth + 1);
            self(self, rm, r1, tm, t1, depth + 1);
            return;
        }
        if (count == 0) {
            engine.patches.push_back(Patch{});
            Cell c{static_cast<int>(engine.patches.size()) - 1, r0, r1, t0, t1, depth, {}, 0};
            engine.estimate(c);
            queue.push(std::move(c));
            return;
        }
        // two triangles with the marked corner as apex
        int a = (at + 1) % 4, b = (at + 2) % 4, c2 = (at + 3) % 4;
        int tri[2][2] = {{a, b}, {b, c2}};
        for (auto& tr : tri) {
            Patch p;
            p.duffy = true;
            p.vr = cr[at], p.vt = ct[at];
            p.ar = cr[tr[0]], p.at = ct[tr[0]];
            p.br = cr[tr[1]], p.bt = ct[tr[1]];
            p.det = (p.ar - p.vr) * (p.bt - p.at) - (p.at - p.vt) * (p.br - p.ar);
            engine.patches.push_back(p);
            Cell c{static_cast<int>(engine.patches.size()) - 1, 0, 1, 0, 1, depth, {}, 0};
            engine.estimate(c);
            queue.push(std::move(c));
        }
    };
    for (std::size_t i = 0; i + 1 < rs.size(); ++i)
        for (std::size_t j = 0; j + 1 < ts.size(); ++j) push_rect(push_rect, rs[i], rs[i + 1], ts[j], ts[j + 1], 0);

    auto total_error = [&]() {
        double e = 0;
        auto copy = queue;
        while (!copy.empty()) e += copy.top().err, copy.pop();
        for (const auto& c : done) e += c.err;
        return e;
    };
    double err = total_error();
    long cells = static_cast<long>(queue.size());
    long since_recount = 0;
    while (err > opts.tol && !queue.empty()) {
        Cell c = queue.top();
        queue.pop();
        if (c.depth >= opts.max_depth) {
            done.push_back(std::move(c));
            continue;
        }
        if (cells > opts.max_cells)
            throw Error(ErrorKind::Quadrature, "quadrature exceeded " + std::to_string(opts.max_cells) +
                                                   " cells with estimated error " + std::to_string(err));
        err -= c.err;
        double sm = 0.5 * (c.s0 + c.s1), tm = 0.5 * (c.t0 + c.t1);
        Cell kids[4] = {{c.patch, c.s0, sm, c.t0, tm, c.depth + 1, {}, 0}, {c.patch, sm, c.s1, c.t0, tm, c.depth + 1, {}, 0},
                        {c.patch, c.s0, sm, tm, c.t1, c.depth + 1, {}, 0}, {c.patch, sm, c.s1, tm, c.t1, c.depth + 1, {}, 0}};
        for (auto& k : kids) {
            engine.estimate(k);
            err += k.err;
            queue.push(std::move(k));
        }
        cells += 3;
        if (++since_recount == 4096) {
            err = total_error();  // drop accumulated rounding
            since_recount = 0;
        }
    }
    QuadratureResult out;
    out.value.assign(components, cd(0));
    out.error = 0;
    auto absorb = [&](const Cell& c) {
        for (std::size_t k = 0; k < components; ++k) out.value[k] += c.value[k];
        out.error += c.err;
    };
    while (!queue.empty()) absorb(queue.top()), queue.pop();
    for (const auto& c : done) absorb(c);
    out.cells = cells;
    out.evaluations = engine.evaluations;
    if (!(out.error <= opts.tol))
        throw Error(ErrorKind::Quadrature, "quadrature stopped at depth " + std::to_string(opts.max_depth) +
                                               " with estimated error " + std::to_string(out.error));
    return out;
}

}  // namespace hachow
