#pragma once

#include "wwlab/convolution.hpp"
#include "wwlab/cutoffs.hpp"

namespace wwlab {

// Low-high cutoff for T_f g: passes pairs with |xi1| well below |xi2| and
// kills output built from low |xi2|. The transition thresholds are not
// canonical; these defaults keep the two plateaus comfortably separated.
struct ParaproductCutoff {
    double ratio_lo = 1.0 / 20.0;
    double ratio_hi = 1.0 / 10.0;

    double operator()(double xi1, double xi2) const {
        const double a2 = std::abs(xi2);
        if (a2 == 0.0) return 0.0;
        return ratio_chi(std::abs(xi1) / a2, ratio_lo, ratio_hi) * (1.0 - bump_theta(2.0 * xi2));
    }
};

// Paraproduct T_f g: the bilinear sum weighted by the low-high cutoff.
inline Field paraproduct(const Field& f, const Field& g,
                         const ParaproductCutoff& cutoff = ParaproductCutoff{}) {
    Field out = bilinear_sum(f, g, [&cutoff](double xi1, double xi2) {
        return Complex(cutoff(xi1, xi2), 0.0);
    });
    if (f.is_real() && g.is_real())
        out = Field::from_spectrum(out.grid(), out.spectrum(), true);
    return out;
}

} // namespace wwlab
