#pragma once

#include <complex>
#include <map>
#include <mutex>
#include <vector>

#include <fftw3.h>

namespace wwlab::fft {

// Plan cache for complex-to-complex transforms. FFTW's planner is not
// thread-safe, so creation is serialized; fftw_execute_dft on distinct
// buffers is safe to call concurrently. Plans are created with
// FFTW_ESTIMATE | FFTW_UNALIGNED so they are deterministic and applicable
// to any buffer.
class Plans {
public:
    static Plans& instance() {
        static Plans p;
        return p;
    }

    struct Pair {
        fftw_plan forward;
        fftw_plan backward;
    };

    Pair get(int n) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;
        std::vector<std::complex<double>> a(n), b(n);
        auto* ap = reinterpret_cast<fftw_complex*>(a.data());
        auto* bp = reinterpret_cast<fftw_complex*>(b.data());
        Pair p;
        p.forward = fftw_plan_dft_1d(n, ap, bp, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
        p.backward = fftw_plan_dft_1d(n, ap, bp, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
        cache_[n] = p;
        return p;
    }

private:
    Plans() = default;
    std::mutex mutex_;
    std::map<int, Pair> cache_;
};

// values -> Fourier series coefficients (forward transform divided by N,
// so coefficients approximate the continuum series coefficients).
inline std::vector<std::complex<double>> forward(const std::vector<std::complex<double>>& values) {
    const int n = static_cast<int>(values.size());
    std::vector<std::complex<double>> in(values), out(n);
    auto plans = Plans::instance().get(n);
    fftw_execute_dft(plans.forward,
                     reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    const double scale = 1.0 / n;
    for (auto& c : out) c *= scale;
    return out;
}

// Fourier series coefficients -> values (unscaled inverse).
inline std::vector<std::complex<double>> backward(const std::vector<std::complex<double>>& spectrum) {
    const int n = static_cast<int>(spectrum.size());
    std::vector<std::complex<double>> in(spectrum), out(n);
    auto plans = Plans::instance().get(n);
    fftw_execute_dft(plans.backward,
                     reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

} // namespace wwlab::fft
