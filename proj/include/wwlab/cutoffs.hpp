#pragma once

#include <cmath>

namespace wwlab {

// C-infinity step: 0 for t <= 0, 1 for t >= 1, strictly monotone between,
// with exact plateaus (all derivatives vanish at both ends).
inline double smoothstep(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / t);
    const double b = std::exp(-1.0 / (1.0 - t));
    return a / (a + b);
}

// Even bump: 1 for |r| <= 1, 0 for |r| >= 2, smooth transition between.
inline double bump_theta(double r) {
    return smoothstep(2.0 - std::abs(r));
}

// Ratio cutoff for the paraproduct: 1 for r <= lo, 0 for r >= hi.
inline double ratio_chi(double r, double lo, double hi) {
    return smoothstep((hi - r) / (hi - lo));
}

} // namespace wwlab
