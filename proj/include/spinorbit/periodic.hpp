// Real 2π-periodic zero-mean functions stored by their Fourier coefficients.
#pragma once

#include <complex>
#include <span>
#include <vector>

namespace spinorbit {

namespace fft {

bool is_power_of_two(std::size_t n);

/// In-place radix-2 DFT, a_k <- sum_m a_m exp(-+ 2πi k m / n) (sign + when inverse),
/// unnormalized. Sizes that are not a power of two use the direct O(n^2) sum.
void transform(std::vector<std::complex<double>> &a, bool inverse);

}  // namespace fft

/// u(t) = sum_{1 <= |k| <= N} c_k exp(ikt) with c_{-k} = conj(c_k) and c_0 = 0.
class PeriodicFunction {
public:
    PeriodicFunction() = default;
    explicit PeriodicFunction(int order);
    /// modes[k - 1] = c_k for k = 1..N.
    explicit PeriodicFunction(std::vector<std::complex<double>> modes);

    /// Zero-mean part of uniformly sampled values on t_m = 2πm/n, truncated to `order`
    /// modes. Requires n >= 2 order + 1. The removed mean is written to *mean if given.
    static PeriodicFunction from_samples(std::span<const double> values, int order,
                                         double *mean = nullptr);

    int order() const { return static_cast<int>(modes_.size()); }

    /// c_k for any k; zero outside [-N, N] and at k = 0.
    std::complex<double> coefficient(int k) const;
    void set_coefficient(int k, std::complex<double> c);
    std::span<const std::complex<double>> modes() const { return modes_; }

    double operator()(double t) const;

    /// Values on t_m = 2πm/n for m = 0..n-1; requires n >= 2N + 1.
    std::vector<double> sample(int n) const;

    PeriodicFunction derivative() const;

    /// max over a uniform grid; n = 0 picks a grid of 16 nodes per retained mode.
    double sup_norm(int n = 0) const;

    PeriodicFunction &operator+=(const PeriodicFunction &other);
    PeriodicFunction &operator-=(const PeriodicFunction &other);
    PeriodicFunction &operator*=(double s);

    friend PeriodicFunction operator+(PeriodicFunction a, const PeriodicFunction &b) {
        return a += b;
    }
    friend PeriodicFunction operator-(PeriodicFunction a, const PeriodicFunction &b) {
        return a -= b;
    }
    friend PeriodicFunction operator*(double s, PeriodicFunction a) { return a *= s; }

private:
    void resize_to(int order);

    std::vector<std::complex<double>> modes_;
};

}  // namespace spinorbit
