#pragma once

#include <cmath>
#include <complex>

namespace spinorbit::detail {

// Neumaier compensated sum.
template <class T>
class CompensatedSum {
public:
    void add(T x) {
        const T t = sum_ + x;
        if (magnitude(sum_) >= magnitude(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    T value() const { return sum_ + comp_; }

private:
    static double magnitude(double v) { return std::abs(v); }
    static double magnitude(long double v) { return static_cast<double>(std::fabs(v)); }

    T sum_{};
    T comp_{};
};

// Component-wise compensation for complex sums.
class ComplexCompensatedSum {
public:
    void add(std::complex<double> z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    CompensatedSum<double> re_;
    CompensatedSum<double> im_;
};

}  // namespace spinorbit::detail
