#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "wwlab/cutoffs.hpp"
#include "wwlab/field.hpp"

namespace wwlab {

// Dyadic frequency decomposition built from the smooth bump theta:
// block symbols psi_k(xi) = theta(xi/2^k) - theta(xi/2^{k-1}) for k >= 1 and
// a low block theta(xi). The blocks sum to 1 exactly on the grid because
// theta has exact plateaus.
class LittlewoodPaley {
public:
    static constexpr int kLowBlock = 0;

    explicit LittlewoodPaley(const PeriodicGrid& grid) : grid_(grid) {
        const double xi_max = grid.xi_max();
        k_max_ = 1;
        while (std::ldexp(1.0, k_max_) < xi_max) ++k_max_;
    }

    int k_max() const { return k_max_; }

    // Block symbol at wavenumber xi; k = kLowBlock selects the low block.
    static double block_symbol(int k, double xi) {
        if (k == kLowBlock) return bump_theta(xi);
        return bump_theta(xi / std::ldexp(1.0, k)) - bump_theta(xi / std::ldexp(1.0, k - 1));
    }

    // P_k f (k in {kLowBlock, 1, ..., k_max}).
    Field project(const Field& f, int k) const {
        if (f.grid() != grid_)
            throw std::invalid_argument("LittlewoodPaley: field grid mismatch");
        if (k != kLowBlock && (k < 1 || k > k_max_))
            throw std::invalid_argument("LittlewoodPaley: block index out of range");
        std::vector<Complex> s(f.spectrum());
        for (int i = 0; i < grid_.size(); ++i) s[i] *= block_symbol(k, grid_.xi(i));
        return Field::from_spectrum(grid_, std::move(s), f.is_real());
    }

    // Zygmund/Besov norm C_*^gamma = max(||P_low f||_inf, sup_k 2^{k gamma} ||P_k f||_inf).
    double besov(const Field& f, double gamma) const {
        double norm = project(f, kLowBlock).linf();
        for (int k = 1; k <= k_max_; ++k)
            norm = std::max(norm, std::pow(2.0, k * gamma) * project(f, k).linf());
        return norm;
    }

private:
    PeriodicGrid grid_;
    int k_max_;
};

inline Field lp_project(const Field& f, int k) {
    return LittlewoodPaley(f.grid()).project(f, k);
}

inline double besov_norm(const Field& f, double gamma) {
    return LittlewoodPaley(f.grid()).besov(f, gamma);
}

} // namespace wwlab
