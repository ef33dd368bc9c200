#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace hachow {

struct QuadratureOptions {
    double tol = 1e-6;      // absolute, summed over all cells and components
    int max_depth = 28;     // subdivision levels below the initial grid
    long max_cells = 400000;
};

struct QuadratureResult {
    std::vector<std::complex<double>> value;
    double error = 0;
    long cells = 0;
    long evaluations = 0;
};

// Density with respect to dx dy at z, written into `out` (size fixed by the caller).
using PlaneIntegrand = std::function<void(std::complex<double> z, std::vector<std::complex<double>>& out)>;

// Integral over the closed unit disk of a vector-valued density whose only
// singularities are integrable point singularities at `singular` (points
// outside the disk are ignored). Cells are polar rectangles; those touching a
// singular point are split into Duffy triangles with the point at the apex.
// Throws Quadrature errors when the tolerance is not reached.
QuadratureResult integrate_unit_disk(const PlaneIntegrand& f, std::size_t components,
                                     const std::vector<std::complex<double>>& singular, const QuadratureOptions& opts);

}  // namespace hachow
