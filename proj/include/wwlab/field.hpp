#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wwlab/fft.hpp"
#include "wwlab/grid.hpp"

namespace wwlab {

using Complex = std::complex<double>;

// A function on the periodic grid, kept simultaneously as physical samples
// and Fourier series coefficients (consistent via the DFT by construction).
// Fields are immutable values; every operation returns a new Field.
class Field {
public:
    static Field from_samples(const PeriodicGrid& grid, std::vector<Complex> values,
                              bool real = false) {
        check_size(grid, values.size());
        auto spectrum = fft::forward(values);
        return Field(grid, std::move(values), std::move(spectrum), real);
    }

    static Field from_real_samples(const PeriodicGrid& grid, const std::vector<double>& values) {
        std::vector<Complex> v(values.size());
        for (size_t i = 0; i < values.size(); ++i) v[i] = values[i];
        return from_samples(grid, std::move(v), true);
    }

    static Field from_spectrum(const PeriodicGrid& grid, std::vector<Complex> spectrum,
                               bool real = false) {
        check_size(grid, spectrum.size());
        auto values = fft::backward(spectrum);
        return Field(grid, std::move(values), std::move(spectrum), real);
    }

    static Field zero(const PeriodicGrid& grid) {
        return Field(grid, std::vector<Complex>(grid.size()), std::vector<Complex>(grid.size()),
                     true);
    }

    const PeriodicGrid& grid() const { return grid_; }
    int size() const { return grid_.size(); }
    bool is_real() const { return real_; }
    const std::vector<Complex>& values() const { return values_; }
    const std::vector<Complex>& spectrum() const { return spectrum_; }

    std::vector<double> real_values() const {
        std::vector<double> v(values_.size());
        for (size_t i = 0; i < values_.size(); ++i) v[i] = values_[i].real();
        return v;
    }

    Field operator+(const Field& o) const { return combine(o, 1.0); }
    Field operator-(const Field& o) const { return combine(o, -1.0); }

    Field operator*(double c) const {
        std::vector<Complex> v(values_), s(spectrum_);
        for (auto& x : v) x *= c;
        for (auto& x : s) x *= c;
        return Field(grid_, std::move(v), std::move(s), real_);
    }
    friend Field operator*(double c, const Field& f) { return f * c; }

    Field operator*(Complex c) const {
        std::vector<Complex> v(values_), s(spectrum_);
        for (auto& x : v) x *= c;
        for (auto& x : s) x *= c;
        return Field(grid_, std::move(v), std::move(s), real_ && c.imag() == 0.0);
    }

    // Pointwise product of physical samples.
    Field product(const Field& o) const {
        require_same_grid(o);
        std::vector<Complex> v(values_.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = values_[i] * o.values_[i];
        return from_samples(grid_, std::move(v), real_ && o.real_);
    }

    // Pointwise quotient of physical samples (denominator must not vanish).
    Field quotient(const Field& o) const {
        require_same_grid(o);
        std::vector<Complex> v(values_.size());
        for (size_t i = 0; i < v.size(); ++i) {
            if (std::abs(o.values_[i]) == 0.0)
                throw std::invalid_argument("Field::quotient: division by zero sample");
            v[i] = values_[i] / o.values_[i];
        }
        return from_samples(grid_, std::move(v), real_ && o.real_);
    }

    Field conj() const {
        std::vector<Complex> v(values_.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = std::conj(values_[i]);
        return from_samples(grid_, std::move(v), real_);
    }

    Field real_part() const {
        std::vector<Complex> v(values_.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = values_[i].real();
        return from_samples(grid_, std::move(v), true);
    }

    Field imag_part() const {
        std::vector<Complex> v(values_.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = values_[i].imag();
        return from_samples(grid_, std::move(v), true);
    }

    // Zero every mode above the 2/3-rule limit.
    Field dealias() const {
        std::vector<Complex> s(spectrum_);
        const int limit = grid_.dealias_limit();
        for (int i = 0; i < grid_.size(); ++i)
            if (std::abs(grid_.mode(i)) > limit) s[i] = 0.0;
        return from_spectrum(grid_, std::move(s), real_);
    }

    Field with_zero_mean() const {
        std::vector<Complex> s(spectrum_);
        s[0] = 0.0;
        return from_spectrum(grid_, std::move(s), real_);
    }

    Complex mean() const { return spectrum_[0]; }

    double linf() const {
        double m = 0.0;
        for (const auto& x : values_) m = std::max(m, std::abs(x));
        return m;
    }

    // Sup norm on a spectrally refined grid (trigonometric interpolation).
    double linf_oversampled(int factor) const {
        if (factor <= 1) return linf();
        const int n = grid_.size();
        const int big = n * factor;
        std::vector<Complex> s(big, 0.0);
        for (int i = 0; i < n; ++i) {
            const int m = grid_.mode(i);
            if (m == -n / 2 && real_) {
                // Split the unpaired Nyquist mode symmetrically.
                s[(m + big) % big] += 0.5 * spectrum_[i];
                s[n / 2] += 0.5 * spectrum_[i];
            } else {
                s[(m + big) % big] += spectrum_[i];
            }
        }
        auto v = fft::backward(s);
        double mx = 0.0;
        for (const auto& x : v) mx = std::max(mx, std::abs(x));
        return mx;
    }

    // L2 norm by trapezoid quadrature of the samples (exact on the grid).
    double l2() const {
        double sum = 0.0;
        for (const auto& x : values_) sum += std::norm(x);
        return std::sqrt(sum * grid_.dx());
    }

    // H^s norm: sqrt( R * sum_j (1+xi_j^2)^s |spectrum_j|^2 ). The weight R
    // makes s = 0 reproduce the physical L2 quadrature (Parseval).
    double sobolev(double s) const {
        double sum = 0.0;
        for (int i = 0; i < grid_.size(); ++i) {
            const double xi = grid_.xi(i);
            sum += std::pow(1.0 + xi * xi, s) * std::norm(spectrum_[i]);
        }
        return std::sqrt(sum * grid_.circumference());
    }

    double max_hermitian_defect() const {
        const int n = grid_.size();
        double d = 0.0;
        for (int i = 0; i < n; ++i) {
            const int j = (n - i) % n;
            d = std::max(d, std::abs(spectrum_[i] - std::conj(spectrum_[j])));
        }
        return d;
    }

private:
    Field(const PeriodicGrid& grid, std::vector<Complex> values, std::vector<Complex> spectrum,
          bool real)
        : grid_(grid), values_(std::move(values)), spectrum_(std::move(spectrum)), real_(real) {}

    static void check_size(const PeriodicGrid& grid, size_t n) {
        if (static_cast<size_t>(grid.size()) != n)
            throw std::invalid_argument("Field: data length does not match grid");
    }

    void require_same_grid(const Field& o) const {
        if (grid_ != o.grid_)
            throw std::invalid_argument("Field: operands live on different grids");
    }

    Field combine(const Field& o, double sign) const {
        require_same_grid(o);
        std::vector<Complex> v(values_.size()), s(spectrum_.size());
        for (size_t i = 0; i < v.size(); ++i) {
            v[i] = values_[i] + sign * o.values_[i];
            s[i] = spectrum_[i] + sign * o.spectrum_[i];
        }
        return Field(grid_, std::move(v), std::move(s), real_ && o.real_);
    }

    PeriodicGrid grid_;
    std::vector<Complex> values_;
    std::vector<Complex> spectrum_;
    bool real_;
};

// Multiply the spectrum by symbol(xi_j). The symbol must be finite at every
// grid wavenumber; singular symbols must special-case xi = 0 themselves.
// The realness flag survives when the symbol is Hermitian
// (symbol(-xi) == conj(symbol(xi))), which covers even-real symbols and i*xi.
inline Field apply_multiplier(const Field& f, const std::function<Complex(double)>& symbol) {
    const auto& grid = f.grid();
    const int n = grid.size();
    std::vector<Complex> s(n);
    bool hermitian = true;
    for (int i = 0; i < n; ++i) {
        const double xi = grid.xi(i);
        const Complex m = symbol(xi);
        if (!std::isfinite(m.real()) || !std::isfinite(m.imag()))
            throw std::invalid_argument("apply_multiplier: non-finite symbol value at xi = " +
                                        std::to_string(xi));
        s[i] = m * f.spectrum()[i];
        if (hermitian) {
            const Complex mr = symbol(-xi);
            if (std::abs(mr - std::conj(m)) > 1e-14 * (1.0 + std::abs(m))) hermitian = false;
        }
    }
    return Field::from_spectrum(grid, std::move(s), f.is_real() && hermitian);
}

inline Field apply_multiplier(const Field& f, const std::function<double(double)>& symbol) {
    return apply_multiplier(f, std::function<Complex(double)>(
                                   [&symbol](double xi) { return Complex(symbol(xi), 0.0); }));
}

// d/dx (spectral).
inline Field derivative(const Field& f) {
    return apply_multiplier(f, std::function<Complex(double)>([](double xi) {
                                return Complex(0.0, xi);
                            }));
}

// |grad| f.
inline Field abs_gradient(const Field& f) {
    return apply_multiplier(f, std::function<double(double)>([](double xi) {
                                return std::abs(xi);
                            }));
}

// |grad|^{1/2} f (the half-wave dispersion symbol Lambda).
inline Field half_gradient(const Field& f) {
    return apply_multiplier(f, std::function<double(double)>([](double xi) {
                                return std::sqrt(std::abs(xi));
                            }));
}

// |grad|^{-1/2} f on mean-zero fields; the xi = 0 coefficient is dropped.
inline Field inverse_half_gradient(const Field& f) {
    return apply_multiplier(f, std::function<double(double)>([](double xi) {
                                return xi == 0.0 ? 0.0 : 1.0 / std::sqrt(std::abs(xi));
                            }));
}

// Translate by a: f(x) -> f(x - a).
inline Field translate(const Field& f, double a) {
    return apply_multiplier(f, std::function<Complex(double)>([a](double xi) {
                                return std::exp(Complex(0.0, -xi * a));
                            }));
}

} // namespace wwlab
