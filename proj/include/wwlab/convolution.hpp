#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "wwlab/field.hpp"

namespace wwlab {

// Direct O(N^2) bilinear sum: output spectrum at xi = sum over grid pairs
// xi1 + xi2 = xi of kernel(xi1, xi2) * fhat(xi1) * ghat(xi2). Pairs whose
// mode sum is not representable on the grid are dropped (no wrap-around),
// so for band-limited inputs this is the exact convolution sum.
inline Field bilinear_sum(const Field& f, const Field& g,
                          const std::function<Complex(double, double)>& kernel) {
    if (f.grid() != g.grid())
        throw std::invalid_argument("bilinear_sum: fields live on different grids");
    const auto& grid = f.grid();
    const int n = grid.size();
    const auto& fs = f.spectrum();
    const auto& gs = g.spectrum();
    std::vector<Complex> out(n, 0.0);
    for (int i2 = 0; i2 < n; ++i2) {
        const Complex g2 = gs[i2];
        if (g2 == Complex(0.0, 0.0)) continue;
        const double xi2 = grid.xi(i2);
        const int m2 = grid.mode(i2);
        for (int i1 = 0; i1 < n; ++i1) {
            const Complex f1 = fs[i1];
            if (f1 == Complex(0.0, 0.0)) continue;
            const int bin = grid.bin_of_mode(grid.mode(i1) + m2);
            if (bin < 0) continue;
            out[bin] += kernel(grid.xi(i1), xi2) * f1 * g2;
        }
    }
    return Field::from_spectrum(grid, std::move(out));
}

} // namespace wwlab
