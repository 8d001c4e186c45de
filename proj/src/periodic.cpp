#include "spinorbit/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spinorbit/error.hpp"

namespace spinorbit {

namespace fft {

namespace {

constexpr double kPi = std::numbers::pi;

void direct(std::vector<std::complex<double>> &a, bool inverse) {
    const std::size_t n = a.size();
    const double sign = inverse ? 1.0 : -1.0;
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc{};
        for (std::size_t m = 0; m < n; ++m)
            acc += a[m] * std::polar(1.0, sign * 2.0 * kPi * static_cast<double>((k * m) % n) /
                                              static_cast<double>(n));
        out[k] = acc;
    }
    a = std::move(out);
}

}  // namespace

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void transform(std::vector<std::complex<double>> &a, bool inverse) {
    const std::size_t n = a.size();
    if (n <= 1) return;
    if (!is_power_of_two(n)) {
        direct(a, inverse);
        return;
    }
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        for (std::size_t k = 0; k < half; ++k) {
            // twiddles computed directly rather than by recurrence to avoid drift
            const std::complex<double> w =
                std::polar(1.0, sign * 2.0 * kPi * static_cast<double>(k) / static_cast<double>(len));
            for (std::size_t i = 0; i < n; i += len) {
                const std::complex<double> x = a[i + k];
                const std::complex<double> y = a[i + k + half] * w;
                a[i + k] = x + y;
                a[i + k + half] = x - y;
            }
        }
    }
}

}  // namespace fft

PeriodicFunction::PeriodicFunction(int order) {
    if (order < 0) throw InvalidArgument("PeriodicFunction: negative order");
    modes_.assign(static_cast<std::size_t>(order), {});
}

PeriodicFunction::PeriodicFunction(std::vector<std::complex<double>> modes)
    : modes_(std::move(modes)) {}

PeriodicFunction PeriodicFunction::from_samples(std::span<const double> values, int order,
                                                double *mean) {
    const int n = static_cast<int>(values.size());
    if (order < 0 || n < 2 * order + 1)
        throw InvalidArgument("PeriodicFunction: need at least 2N+1 samples");
    std::vector<std::complex<double>> a(values.begin(), values.end());
    fft::transform(a, false);
    PeriodicFunction out(order);
    for (int k = 1; k <= order; ++k) out.modes_[k - 1] = a[k] / static_cast<double>(n);
    if (mean) *mean = a[0].real() / n;
    return out;
}

std::complex<double> PeriodicFunction::coefficient(int k) const {
    const int ak = std::abs(k);
    if (k == 0 || ak > order()) return {};
    return k > 0 ? modes_[k - 1] : std::conj(modes_[ak - 1]);
}

void PeriodicFunction::set_coefficient(int k, std::complex<double> c) {
    if (k == 0) throw InvalidArgument("PeriodicFunction: the mean is fixed at zero");
    if (k < 0) {
        k = -k;
        c = std::conj(c);
    }
    if (k > order()) resize_to(k);
    modes_[k - 1] = c;
}

double PeriodicFunction::operator()(double t) const {
    double acc = 0.0;
    for (int k = order(); k >= 1; --k) acc += (modes_[k - 1] * std::polar(1.0, k * t)).real();
    return 2.0 * acc;
}

std::vector<double> PeriodicFunction::sample(int n) const {
    if (n < 2 * order() + 1) throw InvalidArgument("PeriodicFunction: need at least 2N+1 nodes");
    std::vector<std::complex<double>> a(static_cast<std::size_t>(n));
    for (int k = 1; k <= order(); ++k) {
        a[k] = modes_[k - 1];
        a[n - k] = std::conj(modes_[k - 1]);
    }
    fft::transform(a, true);
    std::vector<double> out(static_cast<std::size_t>(n));
    std::transform(a.begin(), a.end(), out.begin(), [](auto z) { return z.real(); });
    return out;
}

PeriodicFunction PeriodicFunction::derivative() const {
    PeriodicFunction d(order());
    for (int k = 1; k <= order(); ++k) d.modes_[k - 1] = std::complex<double>(0.0, k) * modes_[k - 1];
    return d;
}

double PeriodicFunction::sup_norm(int n) const {
    if (order() == 0) return 0.0;
    if (n == 0) {
        n = 1;
        while (n < 16 * (order() + 1)) n <<= 1;
    }
    const auto values = sample(n);
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

void PeriodicFunction::resize_to(int order) { modes_.resize(static_cast<std::size_t>(order)); }

PeriodicFunction &PeriodicFunction::operator+=(const PeriodicFunction &other) {
    if (other.order() > order()) resize_to(other.order());
    for (int k = 1; k <= other.order(); ++k) modes_[k - 1] += other.modes_[k - 1];
    return *this;
}

PeriodicFunction &PeriodicFunction::operator-=(const PeriodicFunction &other) {
    if (other.order() > order()) resize_to(other.order());
    for (int k = 1; k <= other.order(); ++k) modes_[k - 1] -= other.modes_[k - 1];
    return *this;
}

PeriodicFunction &PeriodicFunction::operator*=(double s) {
    for (auto &c : modes_) c *= s;
    return *this;
}

}  // namespace spinorbit
