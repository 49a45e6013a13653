#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace wwlab {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Uniform Fourier lattice on a circle of circumference R with N modes.
// Sample points x_i = i*dx, i = 0..N-1; wavenumbers xi_j = 2*pi*j/R for
// j in {-N/2, ..., N/2-1}, stored in FFT bin order (0, 1, ..., -N/2, ..., -1).
class PeriodicGrid {
public:
    PeriodicGrid(int modes, double circumference)
        : n_(modes), r_(circumference) {
        if (n_ <= 0 || n_ % 2 != 0)
            throw std::invalid_argument("PeriodicGrid: N must be a positive even integer, got " +
                                        std::to_string(n_));
        if (!(r_ > 0.0))
            throw std::invalid_argument("PeriodicGrid: circumference must be positive");
    }

    int size() const { return n_; }
    double circumference() const { return r_; }
    double dx() const { return r_ / n_; }
    double x(int i) const { return i * dx(); }

    // Signed integer mode for FFT bin i.
    int mode(int i) const { return i < n_ / 2 ? i : i - n_; }
    // Wavenumber for FFT bin i.
    double xi(int i) const { return kTwoPi * mode(i) / r_; }
    double xi_max() const { return kTwoPi * (n_ / 2) / r_; }

    // FFT bin holding signed mode m, or -1 if m is not representable.
    int bin_of_mode(int m) const {
        if (m < -n_ / 2 || m > n_ / 2 - 1) return -1;
        return m >= 0 ? m : m + n_;
    }

    // Highest mode kept by the 2/3-rule dealias mask. Chosen so that
    // products of two kept modes never alias back into the kept band.
    int dealias_limit() const { return (n_ - 1) / 3; }

    bool operator==(const PeriodicGrid& o) const { return n_ == o.n_ && r_ == o.r_; }
    bool operator!=(const PeriodicGrid& o) const { return !(*this == o); }

private:
    int n_;
    double r_;
};

} // namespace wwlab
