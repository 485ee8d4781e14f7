#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <fftw3.h>

namespace qlandau {

// Axis transforms of a row-major nx*ny complex array (index = ix*ny + iy).
// Plans are created with FFTW_ESTIMATE|FFTW_UNALIGNED so they are deterministic
// and may execute on any caller buffer via the new-array interface. Backward
// transforms include the 1/n normalization.
class FftPlans {
public:
    FftPlans(int nx, int ny) : nx_(nx), ny_(ny) {
        if (nx < 1 || ny < 1) throw std::invalid_argument("FftPlans: bad dims");
        scratch_.resize(static_cast<std::size_t>(nx) * ny);
        auto* buf = reinterpret_cast<fftw_complex*>(scratch_.data());
        const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
        int n_y[] = {ny};
        fy_fwd_ = fftw_plan_many_dft(1, n_y, nx, buf, nullptr, 1, ny, buf, nullptr,
                                     1, ny, FFTW_FORWARD, flags);
        fy_bwd_ = fftw_plan_many_dft(1, n_y, nx, buf, nullptr, 1, ny, buf, nullptr,
                                     1, ny, FFTW_BACKWARD, flags);
        int n_x[] = {nx};
        fx_fwd_ = fftw_plan_many_dft(1, n_x, ny, buf, nullptr, ny, 1, buf, nullptr,
                                     ny, 1, FFTW_FORWARD, flags);
        fx_bwd_ = fftw_plan_many_dft(1, n_x, ny, buf, nullptr, ny, 1, buf, nullptr,
                                     ny, 1, FFTW_BACKWARD, flags);
        if (!fy_fwd_ || !fy_bwd_ || !fx_fwd_ || !fx_bwd_)
            throw std::runtime_error("FftPlans: planning failed");
    }

    ~FftPlans() {
        fftw_destroy_plan(fy_fwd_);
        fftw_destroy_plan(fy_bwd_);
        fftw_destroy_plan(fx_fwd_);
        fftw_destroy_plan(fx_bwd_);
    }

    FftPlans(const FftPlans&) = delete;
    FftPlans& operator=(const FftPlans&) = delete;

    void forward_y(std::complex<double>* a) const { run(fy_fwd_, a); }
    void backward_y(std::complex<double>* a) const {
        run(fy_bwd_, a);
        rescale(a, 1.0 / ny_);
    }
    void forward_x(std::complex<double>* a) const { run(fx_fwd_, a); }
    void backward_x(std::complex<double>* a) const {
        run(fx_bwd_, a);
        rescale(a, 1.0 / nx_);
    }

    int nx() const { return nx_; }
    int ny() const { return ny_; }

private:
    void run(fftw_plan plan, std::complex<double>* a) const {
        auto* p = reinterpret_cast<fftw_complex*>(a);
        fftw_execute_dft(plan, p, p);
    }

    void rescale(std::complex<double>* a, double s) const {
        const std::size_t n = static_cast<std::size_t>(nx_) * ny_;
        for (std::size_t i = 0; i < n; ++i) a[i] *= s;
    }

    int nx_, ny_;
    std::vector<std::complex<double>> scratch_;
    fftw_plan fy_fwd_, fy_bwd_, fx_fwd_, fx_bwd_;
};

// FFT-ordered angular wavenumbers for an n-point periodic axis of length L.
inline std::vector<double> fft_wavenumbers(int n, double L) {
    std::vector<double> k(n);
    const double dk = 2.0 * 3.14159265358979323846 / L;
    for (int j = 0; j < n; ++j) k[j] = dk * (j < n / 2 ? j : j - n);
    return k;
}

} // namespace qlandau
