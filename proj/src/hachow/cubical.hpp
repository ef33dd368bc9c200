#pragma once

#include "hachow/field.hpp"
#include "hachow/ratfunc.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hachow {

// One slot of a parametrized generator: a constant point of P^1 or a
// factored rational function of the parameters.
struct Coordinate {
    bool is_function = false;
    P1Value constant;
    FactoredRational f;

    static Coordinate of(P1Value v);
    static Coordinate of(const FactoredRational& f);  // constant functions become constants

    bool depends_on(int var) const { return is_function && f.depends_on(var); }
    bool operator==(const Coordinate& o) const;
    bool operator<(const Coordinate& o) const;
    std::string to_string(const std::vector<std::string>& names) const;
    Coordinate conjugate() const;
};

// A parametrized locus in a box: arity 0 is a point, 1 a curve in z, 2 a
// surface in (z1, z2). Multiplicities live in FormalCycle.
struct Generator {
    int arity = 0;
    std::vector<Coordinate> coords;

    static Generator point(const std::vector<P1Value>& p);
    // Curves are brought to a canonical parametrization: the first slot that is
    // a Moebius function of z becomes z itself.
    static Generator curve(std::vector<Coordinate> coords);
    static Generator surface(std::vector<Coordinate> coords);

    int dimension() const { return static_cast<int>(coords.size()); }
    std::vector<P1Value> point_coordinates() const;  // arity 0 only
    std::vector<std::string> parameter_names() const;
    std::string to_string() const;

    bool operator==(const Generator& o) const { return arity == o.arity && coords == o.coords; }
    bool operator<(const Generator& o) const;
};

// Formal integer combination of generators in a box of fixed dimension.
class FormalCycle {
public:
    FormalCycle() = default;  // zero of unspecified dimension
    explicit FormalCycle(int dimension) : n_(dimension) {}
    static FormalCycle of(const Generator& g, long mult = 1);

    int dimension() const { return n_; }
    const std::map<Generator, long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Codimension n - arity when all terms agree, -1 otherwise.
    int codimension() const;

    void add(const Generator& g, long mult);
    FormalCycle& operator+=(const FormalCycle& o);
    FormalCycle& operator-=(const FormalCycle& o);
    FormalCycle operator*(long k) const;
    FormalCycle operator-() const { return *this * -1; }
    friend FormalCycle operator+(FormalCycle a, const FormalCycle& b) { return a += b; }
    friend FormalCycle operator-(FormalCycle a, const FormalCycle& b) { return a -= b; }
    friend FormalCycle operator*(long k, const FormalCycle& z) { return z * k; }
    bool operator==(const FormalCycle& o) const { return terms_ == o.terms_ && (n_ == o.n_ || is_zero()); }

    FormalCycle conjugate() const;

    // Literal grammar: term (('+'|'-') term)*, term = [k '*'] '(' expr (';' expr)* ')' ['*' k].
    std::string to_string() const;
    static FormalCycle parse(std::string_view text, const FieldSpec& field = FieldSpec::gaussian());

private:
    void merge_dimension(int n);

    int n_ = -1;
    std::map<Generator, long> terms_;
};

// i is 1-based; j = 0 cuts t_i = 0, j = 1 cuts t_i = infinity.
FormalCycle face(const FormalCycle& z, int i, int j);
FormalCycle face(const Generator& g, int i, int j);
FormalCycle boundary(const FormalCycle& z);
bool is_normalized(const FormalCycle& z);
bool is_refined_normalized(const FormalCycle& z);

// Preimage of a point cycle under h^j : box^{n+1} -> box^n.
FormalCycle h_pullback(const FormalCycle& points, int j);
FormalCycle product(const FormalCycle& z, const FormalCycle& w);
// Inverse cyclic shift (p_1..p_N) -> (p_N, p_1, .., p_{N-1}) applied to points.
FormalCycle tau_pullback(const FormalCycle& points);
// Preimage under (x_1..x_{N+1}) -> (x_2..x_N, x_1 + x_{N+1} - x_1 x_{N+1}).
FormalCycle h_last_pullback(const FormalCycle& points);
FormalCycle commutativity_homotopy(const FormalCycle& z, int n, int m);

// Pulled back along a degeneracy: some slot is a free parameter used nowhere else.
bool is_degenerate(const Generator& g);
bool is_degenerate(const FormalCycle& z);

// Coordinate maps of the cocubical box.
namespace box {
using Point = std::vector<P1Value>;
Point coface(const Point& t, int i, int l);  // insert 0 (l = 0) or infinity (l = 1) at slot i
Point degeneracy(const Point& t, int i);      // drop slot i
Point h(const Point& t, int j);              // 1 - (t_j - 1)(t_{j+1} - 1) in slot j
}  // namespace box

// Named cycles used throughout the worked examples.
namespace cycles {
FormalCycle point(const std::vector<FieldElement>& coords);
FormalCycle totaro(const FieldElement& a);                             // (z, 1 - a/z, 1 - z)
FormalCycle multilinearity_curve(const FieldElement& a, const FieldElement& b);  // (t, (t-a)(t-b)/(t-1)^2)
FormalCycle torsion_curve(const FieldElement& a, long order);         // (z, (z-a)^k/(z-1)^k)
FormalCycle c_prime(const FieldElement& a);                            // (z2, 1-a/z2, z1, 1-z2/z1, 1-z1)
FormalCycle c_double_prime(const FieldElement& a);                     // (z1, 1-a/z2, z2, 1-z2/z1, 1-z1)
FormalCycle xi_printed();    // (z2, 1-i/z2, z1, (z1-i)^4/(z1-1)^4, 1-z2)
FormalCycle xi();            // slot order repaired so the boundary identity closes
FormalCycle z_i_printed();   // 4(z, 1-i/z, 1-z) - (z, (z-i)^4/(z-1)^4, 1-z)
FormalCycle z_i();           // second term with last slot 1-i
}  // namespace cycles

}  // namespace hachow
