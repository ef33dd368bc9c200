#include "hachow/cubical.hpp"

#include "hachow/errors.hpp"
#include "hachow/expr.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <set>

namespace hachow {

namespace {

FieldElement zero_of(long d) { return FieldElement(0, 0, d); }
FieldElement one_of(long d) { return FieldElement(1, 0, d); }

P1Value zero_point(long d) { return P1Value(zero_of(d)); }

FactoredRational conj_rational(const FactoredRational& f) {
    FactoredRational r(f.constant().conj());
    for (const auto& [l, m] : f.factors())
        r = r * FactoredRational::form(LinearForm{l.a1.conj(), l.a2.conj(), l.a0.conj()}, m);
    return r;
}

// Renames variable `from` to `to` in a function using only `from`.
FactoredRational rename_variable(const FactoredRational& f, int from, int to) {
    if (from == to) return f;
    FactoredRational r(f.constant());
    for (const auto& [l, m] : f.factors()) {
        const FieldElement& c = from == 0 ? l.a1 : l.a2;
        LinearForm moved = to == 0 ? LinearForm::normalized(c, zero_of(c.d()), l.a0)
                                   : LinearForm::normalized(zero_of(c.d()), c, l.a0);
        r = r * FactoredRational::form(moved, m).scaled(c.pow(m));
    }
    return r;
}

P1Value evaluate(const Coordinate& c, const P1Value& z) { return c.is_function ? c.f.evaluate(z) : c.constant; }

// (alpha, beta, gamma, delta) with f(z) = (alpha z + beta)/(gamma z + delta), if f is Moebius.
std::optional<std::array<FieldElement, 4>> as_mobius(const FactoredRational& f) {
    if (f.depends_on(1)) return std::nullopt;
    const auto& fs = f.factors();
    const FieldElement& c = f.constant();
    long d = c.d();
    if (fs.size() == 1) {
        const auto& [l, m] = *fs.begin();
        if (m == 1) return std::array<FieldElement, 4>{c, c * l.a0, zero_of(d), one_of(d)};
        if (m == -1) return std::array<FieldElement, 4>{zero_of(d), c, one_of(d), l.a0};
        return std::nullopt;
    }
    if (fs.size() == 2) {
        auto it = fs.begin();
        const auto& [l1, m1] = *it++;
        const auto& [l2, m2] = *it;
        if (m1 == 1 && m2 == -1) return std::array<FieldElement, 4>{c, c * l1.a0, one_of(d), l2.a0};
        if (m1 == -1 && m2 == 1) return std::array<FieldElement, 4>{c, c * l2.a0, one_of(d), l1.a0};
    }
    return std::nullopt;
}

// Builds a generator from coordinates in (z1, z2), dropping unused parameters.
Generator make_generator(std::vector<Coordinate> coords) {
    bool uses[2] = {false, false};
    for (const auto& c : coords)
        for (int v = 0; v < 2; ++v) uses[v] = uses[v] || c.depends_on(v);
    if (uses[0] && uses[1]) return Generator::surface(std::move(coords));
    if (!uses[0] && !uses[1]) {
        Generator g;
        g.coords = std::move(coords);
        return g;
    }
    if (uses[1])
        for (auto& c : coords)
            if (c.is_function) c = Coordinate::of(rename_variable(c.f, 1, 0));
    return Generator::curve(std::move(coords));
}

// ------------------------------------------------------ surface divisors

struct Component {
    enum class Kind { Line, InfinityZ1, InfinityZ2 } kind = Kind::Line;
    LinearForm line;
};

std::vector<std::pair<Component, long>> divisor(const FactoredRational& f, int j) {
    std::vector<std::pair<Component, long>> out;
    auto take = [&](Component c, long order) {
        if (j == 0 && order > 0) out.emplace_back(c, order);
        if (j == 1 && order < 0) out.emplace_back(c, -order);
    };
    for (const auto& [l, m] : f.factors()) take(Component{Component::Kind::Line, l}, m);
    take(Component{Component::Kind::InfinityZ1, {}}, -f.degree(0));
    take(Component{Component::Kind::InfinityZ2, {}}, -f.degree(1));
    return out;
}

// Restriction to a component, as a function of its parameter (var 0): z1 for
// lines with a z2 term and for {z2 = inf}, z2 otherwise.
Coordinate restrict(const Coordinate& g, const Component& comp) {
    if (!g.is_function) return g;
    const FactoredRational& f = g.f;
    long d = f.constant().d();
    if (comp.kind == Component::Kind::Line) {
        const LinearForm& c = comp.line;
        FieldElement p1t, p1c, p2t, p2c;
        if (!c.a2.is_zero()) {
            p1t = one_of(d), p1c = zero_of(d);
            p2t = -c.a1 / c.a2, p2c = -c.a0 / c.a2;
        } else {
            p1t = zero_of(d), p1c = -c.a0 / c.a1;
            p2t = one_of(d), p2c = zero_of(d);
        }
        long order = 0;
        FactoredRational r(f.constant());
        for (const auto& [l, m] : f.factors()) {
            FieldElement tc = l.a1 * p1t + l.a2 * p2t;
            FieldElement cc = l.a1 * p1c + l.a2 * p2c + l.a0;
            if (!tc.is_zero()) r = r * FactoredRational::form(LinearForm::normalized(tc, zero_of(d), cc), m).scaled(tc.pow(m));
            else if (!cc.is_zero()) r = r.scaled(cc.pow(m));
            else order += m;
        }
        if (order > 0) return Coordinate::of(zero_point(d));
        if (order < 0) return Coordinate::of(P1Value::inf());
        return Coordinate::of(r);
    }
    int v = comp.kind == Component::Kind::InfinityZ1 ? 0 : 1;
    long dv = f.degree(v);
    if (dv > 0) return Coordinate::of(P1Value::inf());
    if (dv < 0) return Coordinate::of(zero_point(d));
    FactoredRational r(f.constant());
    for (const auto& [l, m] : f.factors()) {
        if (l.uses(v)) {
            r = r.scaled((v == 0 ? l.a1 : l.a2).pow(m));
        } else {
            const FieldElement& cu = v == 0 ? l.a2 : l.a1;
            r = r * FactoredRational::form(LinearForm::normalized(cu, zero_of(d), l.a0), m).scaled(cu.pow(m));
        }
    }
    return Coordinate::of(r);
}

struct PlanePoint {
    P1Value x, y;
};

// Shape of a component in P^1 x P^1.
struct Shape {
    enum class Kind { Vertical, Horizontal, Graph } kind;
    P1Value at;               // Vertical: z1 = at, Horizontal: z2 = at
    FieldElement slope, shift;  // Graph: z2 = slope z1 + shift
};

Shape shape_of(const Component& c) {
    if (c.kind == Component::Kind::InfinityZ1) return {Shape::Kind::Vertical, P1Value::inf(), {}, {}};
    if (c.kind == Component::Kind::InfinityZ2) return {Shape::Kind::Horizontal, P1Value::inf(), {}, {}};
    const LinearForm& l = c.line;
    if (l.a2.is_zero()) return {Shape::Kind::Vertical, P1Value(-l.a0 / l.a1), {}, {}};
    if (l.a1.is_zero()) return {Shape::Kind::Horizontal, P1Value(-l.a0 / l.a2), {}, {}};
    return {Shape::Kind::Graph, {}, -l.a1 / l.a2, -l.a0 / l.a2};
}

P1Value graph_value(const Shape& g, const P1Value& x) {
    if (x.infinite) return P1Value::inf();
    return P1Value(g.slope * x.value + g.shift);
}

std::vector<PlanePoint> intersect(const Shape& a, const Shape& b) {
    using K = Shape::Kind;
    if (a.kind == K::Graph && b.kind != K::Graph) return intersect(b, a);
    if (a.kind == K::Horizontal && b.kind == K::Vertical) return intersect(b, a);
    if (a.kind == b.kind && a.kind != K::Graph) return {};
    if (a.kind == K::Vertical && b.kind == K::Horizontal) return {{a.at, b.at}};
    if (a.kind == K::Vertical) return {{a.at, graph_value(b, a.at)}};
    if (a.kind == K::Horizontal) {
        if (a.at.infinite) return {{P1Value::inf(), P1Value::inf()}};
        return {{P1Value((a.at.value - b.shift) / b.slope), a.at}};
    }
    std::vector<PlanePoint> out{{P1Value::inf(), P1Value::inf()}};
    if (a.slope != b.slope) {
        FieldElement x = (b.shift - a.shift) / (a.slope - b.slope);
        out.push_back({P1Value(x), graph_value(a, P1Value(x))});
    }
    return out;
}

Component vertical_through(const P1Value& x, long d) {
    if (x.infinite) return {Component::Kind::InfinityZ1, {}};
    return {Component::Kind::Line, LinearForm::normalized(one_of(d), zero_of(d), -x.value)};
}

Component horizontal_through(const P1Value& y, long d) {
    if (y.infinite) return {Component::Kind::InfinityZ2, {}};
    return {Component::Kind::Line, LinearForm::normalized(zero_of(d), one_of(d), -y.value)};
}

// Value of a coordinate at a point of P^1 x P^1, or nullopt when the limits
// along a few lines through the point disagree.
std::optional<P1Value> value_at(const Coordinate& g, const PlanePoint& p) {
    if (!g.is_function) return g.constant;
    long d = g.f.constant().d();
    std::vector<P1Value> seen;
    seen.push_back(evaluate(restrict(g, vertical_through(p.x, d)), p.y));
    seen.push_back(evaluate(restrict(g, horizontal_through(p.y, d)), p.x));
    const FieldElement slopes[] = {one_of(d), -one_of(d), FieldElement(mpq_class(1, 2), 1, d)};
    for (const auto& s : slopes) {
        if (p.x.infinite != p.y.infinite) break;
        FieldElement shift = p.x.infinite ? zero_of(d) : p.y.value - s * p.x.value;
        // z2 = s z1 + shift  <=>  z1 - z2/s + shift/s = 0
        Component c{Component::Kind::Line, LinearForm::normalized(-s, one_of(d), -shift)};
        seen.push_back(evaluate(restrict(g, c), p.x));
    }
    for (const auto& v : seen)
        if (v != seen.front()) return std::nullopt;
    return seen.front();
}

// Points of indeterminacy of a coordinate whose exceptional curves would land
// in a face without being cut off by another coordinate equal to 1.
void check_base_points(const Generator& g) {
    for (std::size_t k = 0; k < g.coords.size(); ++k) {
        const Coordinate& c = g.coords[k];
        if (!c.is_function) continue;
        auto zeros = divisor(c.f, 0), poles = divisor(c.f, 1);
        for (const auto& [zc, zm] : zeros)
            for (const auto& [pc, pm] : poles)
                for (const PlanePoint& p : intersect(shape_of(zc), shape_of(pc))) {
                    bool cut = false, touches_face = false;
                    for (std::size_t l = 0; l < g.coords.size(); ++l) {
                        if (l == k || !g.coords[l].is_function) continue;
                        auto v = value_at(g.coords[l], p);
                        if (v && v->is_one()) cut = true;
                        else if (!v || v->is_zero() || v->infinite) touches_face = true;
                    }
                    if (!cut && touches_face)
                        throw unsupported_shape("surface " + g.to_string() + " has a base point of slot " +
                                                std::to_string(k + 1) + " at (" + p.x.to_string() + ", " +
                                                p.y.to_string() + ") meeting a face");
                }
    }
}

FormalCycle curve_face(const Generator& g, int i, int j) {
    FormalCycle out(g.dimension() - 1);
    const FactoredRational& f = g.coords[i - 1].f;
    std::vector<std::pair<P1Value, long>> fiber;
    for (const auto& [l, m] : f.factors()) {
        P1Value root(-l.a0 / l.a1);
        if (j == 0 && m > 0) fiber.emplace_back(root, m);
        if (j == 1 && m < 0) fiber.emplace_back(root, -m);
    }
    long deg = f.degree(0);
    if (j == 0 && deg < 0) fiber.emplace_back(P1Value::inf(), -deg);
    if (j == 1 && deg > 0) fiber.emplace_back(P1Value::inf(), deg);
    for (const auto& [z, mult] : fiber) {
        std::vector<P1Value> pt;
        bool inside = true;
        for (int k = 0; k < g.dimension() && inside; ++k) {
            if (k == i - 1) continue;
            P1Value v = evaluate(g.coords[k], z);
            if (v.is_one()) inside = false;
            pt.push_back(std::move(v));
        }
        if (inside) out.add(Generator::point(pt), mult);
    }
    return out;
}

FormalCycle surface_face(const Generator& g, int i, int j) {
    check_base_points(g);
    FormalCycle out(g.dimension() - 1);
    for (const auto& [comp, mult] : divisor(g.coords[i - 1].f, j)) {
        std::vector<Coordinate> rc;
        bool inside = true, moves = false;
        for (int k = 0; k < g.dimension(); ++k) {
            if (k == i - 1) continue;
            Coordinate c = restrict(g.coords[k], comp);
            if (!c.is_function && c.constant.is_one()) inside = false;
            moves = moves || c.is_function;
            rc.push_back(std::move(c));
        }
        if (inside && moves) out.add(make_generator(std::move(rc)), mult);
    }
    return out;
}

// ------------------------------------------------------ literal parsing

struct Value {
    enum class Kind { Zero, Function } kind = Kind::Zero;
    FactoredRational f;
};

void collect_variables(const Expr& e, std::set<std::string>& names) {
    if (e.kind == Expr::Kind::Variable) names.insert(e.name);
    for (const auto& a : e.args) collect_variables(*a, names);
}

Value evaluate_expr(const Expr& e, const std::map<std::string, int>& vars, long d) {
    using K = Expr::Kind;
    auto fn = [](FactoredRational f) { return Value{Value::Kind::Function, std::move(f)}; };
    switch (e.kind) {
    case K::Number:
        if (e.number == 0) return Value{};
        return fn(FactoredRational(FieldElement(e.number, 0, d)));
    case K::Unit: return fn(FactoredRational(FieldElement(0, 1, d)));
    case K::Infinity: throw ParseError("infinity inside arithmetic", e.position);
    case K::Variable: return fn(FactoredRational::variable(vars.at(e.name), d));
    case K::Neg: {
        Value v = evaluate_expr(*e.args[0], vars, d);
        if (v.kind == Value::Kind::Function) v.f = v.f.scaled(-one_of(d));
        return v;
    }
    case K::Add:
    case K::Sub: {
        Value a = evaluate_expr(*e.args[0], vars, d), b = evaluate_expr(*e.args[1], vars, d);
        if (e.kind == K::Sub && b.kind == Value::Kind::Function) b.f = b.f.scaled(-one_of(d));
        if (a.kind == Value::Kind::Zero) return b;
        if (b.kind == Value::Kind::Zero) return a;
        auto s = add(a.f, b.f);
        if (!s) return Value{};
        return fn(*s);
    }
    case K::Mul: {
        Value a = evaluate_expr(*e.args[0], vars, d), b = evaluate_expr(*e.args[1], vars, d);
        if (a.kind == Value::Kind::Zero || b.kind == Value::Kind::Zero) return Value{};
        return fn(a.f * b.f);
    }
    case K::Div: {
        Value a = evaluate_expr(*e.args[0], vars, d), b = evaluate_expr(*e.args[1], vars, d);
        if (b.kind == Value::Kind::Zero) throw ParseError("division by zero", e.position);
        if (a.kind == Value::Kind::Zero) return a;
        return fn(a.f / b.f);
    }
    case K::Pow: {
        Value a = evaluate_expr(*e.args[0], vars, d);
        if (a.kind == Value::Kind::Zero) {
            if (e.exponent <= 0) throw ParseError("non-positive power of zero", e.position);
            return a;
        }
        return fn(a.f.pow(e.exponent));
    }
    }
    throw Error(ErrorKind::Internal, "unhandled expression kind");
}

Coordinate coordinate_from(const Expr& e, const std::map<std::string, int>& vars, long d) {
    if (e.kind == Expr::Kind::Infinity) return Coordinate::of(P1Value::inf());
    Value v = evaluate_expr(e, vars, d);
    Coordinate c = v.kind == Value::Kind::Zero ? Coordinate::of(zero_point(d)) : Coordinate::of(v.f);
    if (!c.is_function && c.constant.is_one()) throw ParseError("coordinate identically 1 lies outside the box", e.position);
    return c;
}

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    void expect(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }
    long integer() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw ParseError("expected integer", pos);
        if (pos - start > 12) throw ParseError("multiplicity too large", start);
        return std::stol(std::string(s.substr(start, pos - start)));
    }
};

Generator parse_generator(Cursor& cur, long d) {
    std::size_t open = cur.pos;
    cur.expect('(');
    std::vector<ExprPtr> exprs;
    for (;;) {
        exprs.push_back(parse_expression_prefix(cur.s, cur.pos));
        char c = cur.peek();
        if (c == ';' || c == ',') {
            ++cur.pos;
            continue;
        }
        cur.expect(')');
        break;
    }
    std::set<std::string> names;
    for (const auto& e : exprs) collect_variables(*e, names);
    std::map<std::string, int> vars;
    if (names.size() > 2) throw ParseError("a generator takes at most two parameters", open);
    if (names.size() == 2 && names.count("z1") && names.count("z2")) {
        vars = {{"z1", 0}, {"z2", 1}};
    } else {
        int k = 0;
        for (const auto& n : names) vars[n] = k++;
    }
    std::vector<Coordinate> coords;
    for (const auto& e : exprs) coords.push_back(coordinate_from(*e, vars, d));
    return make_generator(std::move(coords));
}

}  // namespace

// ------------------------------------------------------------ Coordinate

Coordinate Coordinate::of(P1Value v) {
    Coordinate c;
    c.constant = std::move(v);
    return c;
}

Coordinate Coordinate::of(const FactoredRational& f) {
    if (f.is_constant()) return of(P1Value(f.constant()));
    Coordinate c;
    c.is_function = true;
    c.f = f;
    return c;
}

bool Coordinate::operator==(const Coordinate& o) const {
    if (is_function != o.is_function) return false;
    return is_function ? f == o.f : constant == o.constant;
}

bool Coordinate::operator<(const Coordinate& o) const {
    if (is_function != o.is_function) return !is_function;
    return is_function ? f < o.f : constant < o.constant;
}

std::string Coordinate::to_string(const std::vector<std::string>& names) const {
    return is_function ? f.to_string(names) : constant.to_string();
}

Coordinate Coordinate::conjugate() const {
    if (is_function) return of(conj_rational(f));
    if (constant.infinite) return *this;
    return of(P1Value(constant.value.conj()));
}

// ------------------------------------------------------------- Generator

Generator Generator::point(const std::vector<P1Value>& p) {
    Generator g;
    for (const auto& v : p) g.coords.push_back(Coordinate::of(v));
    return g;
}

Generator Generator::curve(std::vector<Coordinate> coords) {
    Generator g;
    g.arity = 1;
    for (const auto& c : coords) {
        if (!c.is_function) continue;
        auto m = as_mobius(c.f);
        if (!m) continue;
        const auto& [alpha, beta, gamma, delta] = *m;
        // z = (delta w - beta)/(-gamma w + alpha)
        for (auto& x : coords)
            if (x.is_function) x = Coordinate::of(x.f.substitute_mobius(delta, -beta, -gamma, alpha));
        break;
    }
    if (std::none_of(coords.begin(), coords.end(), [](const Coordinate& c) { return c.is_function; }))
        throw invalid_argument("curve without a moving coordinate");
    g.coords = std::move(coords);
    return g;
}

Generator Generator::surface(std::vector<Coordinate> coords) {
    Generator g;
    g.arity = 2;
    g.coords = std::move(coords);
    return g;
}

std::vector<P1Value> Generator::point_coordinates() const {
    if (arity != 0) throw invalid_argument("generator is not a point");
    std::vector<P1Value> out;
    for (const auto& c : coords) out.push_back(c.constant);
    return out;
}

std::vector<std::string> Generator::parameter_names() const {
    if (arity == 1) return {"z"};
    if (arity == 2) return {"z1", "z2"};
    return {};
}

std::string Generator::to_string() const {
    auto names = parameter_names();
    std::string out = "(";
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (k) out += "; ";
        out += coords[k].to_string(names);
    }
    return out + ")";
}

bool Generator::operator<(const Generator& o) const {
    if (arity != o.arity) return arity < o.arity;
    return coords < o.coords;
}

// ----------------------------------------------------------- FormalCycle

FormalCycle FormalCycle::of(const Generator& g, long mult) {
    FormalCycle c(g.dimension());
    c.add(g, mult);
    return c;
}

void FormalCycle::merge_dimension(int n) {
    if (n_ == -1) n_ = n;
    else if (n_ != n)
        throw invalid_argument("cannot combine cycles in boxes of dimension " + std::to_string(n_) + " and " +
                               std::to_string(n));
}

int FormalCycle::codimension() const {
    int c = -1;
    for (const auto& [g, m] : terms_) {
        int k = g.dimension() - g.arity;
        if (c != -1 && c != k) return -1;
        c = k;
    }
    return c;
}

void FormalCycle::add(const Generator& g, long mult) {
    merge_dimension(g.dimension());
    if (mult == 0) return;
    long& m = terms_[g];
    m += mult;
    if (m == 0) terms_.erase(g);
}

FormalCycle& FormalCycle::operator+=(const FormalCycle& o) {
    if (o.n_ != -1) merge_dimension(o.n_);
    for (const auto& [g, m] : o.terms_) add(g, m);
    return *this;
}

FormalCycle& FormalCycle::operator-=(const FormalCycle& o) { return *this += o * -1; }

FormalCycle FormalCycle::operator*(long k) const {
    FormalCycle r(n_);
    if (k == 0) return r;
    for (const auto& [g, m] : terms_) r.terms_[g] = m * k;
    return r;
}

FormalCycle FormalCycle::conjugate() const {
    FormalCycle r(n_);
    for (const auto& [g, m] : terms_) {
        std::vector<Coordinate> cs;
        for (const auto& c : g.coords) cs.push_back(c.conjugate());
        r.add(make_generator(std::move(cs)), m);
    }
    return r;
}

std::string FormalCycle::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [g, m] : terms_) {
        long a = m < 0 ? -m : m;
        if (out.empty()) out = m < 0 ? "-" : "";
        else out += m < 0 ? " - " : " + ";
        if (a != 1) out += std::to_string(a) + "*";
        out += g.to_string();
    }
    return out;
}

FormalCycle FormalCycle::parse(std::string_view text, const FieldSpec& field) {
    Cursor cur{text};
    if (cur.peek() == '0') {
        ++cur.pos;
        if (cur.peek() != '\0') throw ParseError("trailing input after 0", cur.pos);
        return FormalCycle();
    }
    FormalCycle out;
    bool first = true;
    while (cur.peek() != '\0') {
        long sign = 1;
        char c = cur.peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            ++cur.pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", cur.pos);
        }
        long k = 1;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            k = cur.integer();
            cur.expect('*');
        }
        Generator g = parse_generator(cur, field.d);
        if (cur.peek() == '*') {
            ++cur.pos;
            k *= cur.integer();
        }
        out.add(g, sign * k);
        first = false;
    }
    if (first) throw ParseError("empty cycle literal", 0);
    return out;
}

// ------------------------------------------------------------- faces

FormalCycle face(const Generator& g, int i, int j) {
    int n = g.dimension();
    if (i < 1 || i > n || (j != 0 && j != 1))
        throw invalid_argument("face index (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
    const Coordinate& c = g.coords[i - 1];
    if (!c.is_function) {
        FormalCycle out(n - 1);
        if (j == 0 ? c.constant.is_zero() : c.constant.infinite) {
            std::vector<Coordinate> rest = g.coords;
            rest.erase(rest.begin() + (i - 1));
            out.add(make_generator(std::move(rest)), 1);
        }
        return out;
    }
    return g.arity == 1 ? curve_face(g, i, j) : surface_face(g, i, j);
}

FormalCycle face(const FormalCycle& z, int i, int j) {
    FormalCycle out(z.dimension() < 0 ? -1 : z.dimension() - 1);
    for (const auto& [g, m] : z.terms()) out += face(g, i, j) * m;
    return out;
}

FormalCycle boundary(const FormalCycle& z) {
    FormalCycle out(z.dimension() < 0 ? -1 : z.dimension() - 1);
    for (int i = 1; i <= z.dimension(); ++i)
        for (int j = 0; j < 2; ++j) out += face(z, i, j) * (((i + j) % 2) ? -1 : 1);
    return out;
}

bool is_normalized(const FormalCycle& z) {
    for (int i = 1; i <= z.dimension(); ++i)
        if (!face(z, i, 1).is_zero()) return false;
    return true;
}

bool is_refined_normalized(const FormalCycle& z) {
    if (!is_normalized(z)) return false;
    for (int i = 2; i <= z.dimension(); ++i)
        if (!face(z, i, 0).is_zero()) return false;
    return true;
}

// ------------------------------------------------ homotopies and products

namespace {

std::vector<P1Value> require_point(const Generator& g, const char* what) {
    if (g.arity != 0) throw unsupported_shape(std::string(what) + " is defined on point cycles only");
    return g.point_coordinates();
}

Coordinate param(long d) { return Coordinate::of(FactoredRational::variable(0, d)); }

long field_of(const std::vector<P1Value>& p) {
    for (const auto& v : p)
        if (!v.infinite) return v.value.d();
    return 1;
}

// (s - p)/(s - 1)
Coordinate partner(const P1Value& p) {
    long d = p.value.d();
    FactoredRational f = FactoredRational::form(LinearForm::root(p.value)) /
                         FactoredRational::form(LinearForm::root(one_of(d)));
    return Coordinate::of(f);
}

}  // namespace

FormalCycle h_pullback(const FormalCycle& points, int j) {
    int n = points.dimension();
    FormalCycle out(n < 0 ? -1 : n + 1);
    for (const auto& [g, m] : points.terms()) {
        auto p = require_point(g, "h_pullback");
        if (j < 1 || j > n) throw invalid_argument("h_pullback index out of range");
        long d = field_of(p);
        std::vector<Coordinate> base;
        for (const auto& v : p) base.push_back(Coordinate::of(v));
        auto build = [&](Coordinate a, Coordinate b) {
            std::vector<Coordinate> cs(base.begin(), base.begin() + (j - 1));
            cs.push_back(std::move(a));
            cs.push_back(std::move(b));
            cs.insert(cs.end(), base.begin() + j, base.end());
            out.add(make_generator(std::move(cs)), m);
        };
        if (p[j - 1].infinite) {
            build(Coordinate::of(P1Value::inf()), param(d));
            build(param(d), Coordinate::of(P1Value::inf()));
        } else {
            build(param(d), partner(p[j - 1]));
        }
    }
    return out;
}

FormalCycle product(const FormalCycle& z, const FormalCycle& w) {
    int n = z.dimension() < 0 || w.dimension() < 0 ? -1 : z.dimension() + w.dimension();
    FormalCycle out(n);
    for (const auto& [a, ma] : z.terms())
        for (const auto& [b, mb] : w.terms()) {
            if (a.arity + b.arity > 2) throw unsupported_shape("product of dimension above two");
            std::vector<Coordinate> cs = a.coords;
            for (const auto& c : b.coords)
                cs.push_back(c.is_function && a.arity ? Coordinate::of(rename_variable(c.f, 0, 1)) : c);
            out.add(make_generator(std::move(cs)), ma * mb);
        }
    return out;
}

FormalCycle tau_pullback(const FormalCycle& points) {
    FormalCycle out(points.dimension());
    for (const auto& [g, m] : points.terms()) {
        auto p = require_point(g, "tau_pullback");
        std::rotate(p.rbegin(), p.rbegin() + 1, p.rend());
        out.add(Generator::point(p), m);
    }
    return out;
}

FormalCycle h_last_pullback(const FormalCycle& points) {
    int n = points.dimension();
    FormalCycle out(n < 0 ? -1 : n + 1);
    for (const auto& [g, m] : points.terms()) {
        auto q = require_point(g, "h_last_pullback");
        if (q.empty()) throw invalid_argument("h_last_pullback needs a positive dimension");
        long d = field_of(q);
        std::vector<Coordinate> middle;
        for (std::size_t k = 0; k + 1 < q.size(); ++k) middle.push_back(Coordinate::of(q[k]));
        auto build = [&](Coordinate first, Coordinate last) {
            std::vector<Coordinate> cs{std::move(first)};
            cs.insert(cs.end(), middle.begin(), middle.end());
            cs.push_back(std::move(last));
            out.add(make_generator(std::move(cs)), m);
        };
        if (q.back().infinite) {
            build(param(d), Coordinate::of(P1Value::inf()));
            build(Coordinate::of(P1Value::inf()), param(d));
        } else {
            build(param(d), partner(q.back()));
        }
    }
    return out;
}

FormalCycle commutativity_homotopy(const FormalCycle& z, int n, int m) {
    if (z.dimension() >= 0 && z.dimension() != n + m)
        throw invalid_argument("commutativity_homotopy: cycle dimension differs from n + m");
    FormalCycle out(n + m + 1);
    FormalCycle shifted = z;
    for (int k = 0; k < m; ++k) shifted = tau_pullback(shifted);
    for (int i = 0; i < n; ++i) {
        long sign = ((m + i) * (n + m - 1)) % 2 ? -1 : 1;
        out += h_last_pullback(shifted) * sign;
        shifted = tau_pullback(shifted);
    }
    return out;
}

bool is_degenerate(const Generator& g) {
    for (std::size_t k = 0; k < g.coords.size(); ++k) {
        const Coordinate& c = g.coords[k];
        if (!c.is_function) continue;
        for (int v = 0; v < 2; ++v) {
            if (!c.depends_on(v) || c.depends_on(1 - v)) continue;
            bool elsewhere = false;
            for (std::size_t l = 0; l < g.coords.size(); ++l)
                if (l != k && g.coords[l].depends_on(v)) elsewhere = true;
            if (!elsewhere) return true;
        }
    }
    return false;
}

bool is_degenerate(const FormalCycle& z) {
    return std::all_of(z.terms().begin(), z.terms().end(), [](const auto& kv) { return is_degenerate(kv.first); });
}

// ------------------------------------------------------------- box maps

namespace box {

Point coface(const Point& t, int i, int l) {
    if (i < 1 || i > static_cast<int>(t.size()) + 1) throw invalid_argument("coface index out of range");
    long d = t.empty() || t.front().infinite ? 1 : t.front().value.d();
    Point r = t;
    r.insert(r.begin() + (i - 1), l == 0 ? zero_point(d) : P1Value::inf());
    return r;
}

Point degeneracy(const Point& t, int i) {
    if (i < 1 || i > static_cast<int>(t.size())) throw invalid_argument("degeneracy index out of range");
    Point r = t;
    r.erase(r.begin() + (i - 1));
    return r;
}

Point h(const Point& t, int j) {
    if (j < 1 || j + 1 > static_cast<int>(t.size())) throw invalid_argument("h index out of range");
    const P1Value &a = t[j - 1], &b = t[j];
    P1Value v;
    if (a.infinite || b.infinite) {
        v = P1Value::inf();
    } else {
        FieldElement one = one_of(a.value.d());
        v = P1Value(one - (a.value - one) * (b.value - one));
    }
    Point r(t.begin(), t.begin() + (j - 1));
    r.push_back(v);
    r.insert(r.end(), t.begin() + (j + 1), t.end());
    return r;
}

}  // namespace box

// ---------------------------------------------------------- named cycles

namespace cycles {

namespace {
std::string lit(const FieldElement& a) { return "(" + a.to_string() + ")"; }
}  // namespace

FormalCycle point(const std::vector<FieldElement>& coords) {
    std::vector<P1Value> p(coords.begin(), coords.end());
    return FormalCycle::of(Generator::point(p));
}

FormalCycle totaro(const FieldElement& a) {
    return FormalCycle::parse("(z; 1 - " + lit(a) + "/z; 1 - z)", FieldSpec{a.d()});
}

FormalCycle multilinearity_curve(const FieldElement& a, const FieldElement& b) {
    return FormalCycle::parse("(t; (t - " + lit(a) + ")*(t - " + lit(b) + ")/(t - 1)^2)", FieldSpec{a.d()});
}

FormalCycle torsion_curve(const FieldElement& a, long order) {
    std::string k = std::to_string(order);
    return FormalCycle::parse("(z; (z - " + lit(a) + ")^" + k + "/(z - 1)^" + k + ")", FieldSpec{a.d()});
}

FormalCycle c_prime(const FieldElement& a) {
    return FormalCycle::parse("(z2; 1 - " + lit(a) + "/z2; z1; 1 - z2/z1; 1 - z1)", FieldSpec{a.d()});
}

FormalCycle c_double_prime(const FieldElement& a) {
    return FormalCycle::parse("(z1; 1 - " + lit(a) + "/z2; z2; 1 - z2/z1; 1 - z1)", FieldSpec{a.d()});
}

FormalCycle xi_printed() { return FormalCycle::parse("(z2; 1 - i/z2; z1; (z1 - i)^4/(z1 - 1)^4; 1 - z2)"); }

FormalCycle xi() { return FormalCycle::parse("(z2; z1; (z1 - i)^4/(z1 - 1)^4; 1 - i/z2; 1 - z2)"); }

FormalCycle z_i_printed() { return FormalCycle::parse("4*(z; 1 - i/z; 1 - z) - (z; (z - i)^4/(z - 1)^4; 1 - z)"); }

FormalCycle z_i() { return FormalCycle::parse("4*(z; 1 - i/z; 1 - z) - (z; (z - i)^4/(z - 1)^4; 1 - i)"); }

}  // namespace cycles

}  // namespace hachow
