#ifndef ANTIPODE_NUMERIC_HPP
#define ANTIPODE_NUMERIC_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

#include "antipode/error.hpp"

namespace antipode {

inline constexpr double default_tolerance = 1e-9;

/// Complex float with an explicit equality tolerance.
class NumericScalar {
public:
    NumericScalar() = default;
    NumericScalar(std::complex<double> value, double tolerance = default_tolerance)
        : value_(value), tolerance_(tolerance)
    {
    }
    NumericScalar(double value, double tolerance = default_tolerance) : value_(value), tolerance_(tolerance) {}

    std::complex<double> value() const noexcept { return value_; }
    double tolerance() const noexcept { return tolerance_; }
    std::complex<double> to_complex() const noexcept { return value_; }

    bool is_zero() const { return std::abs(value_) <= tolerance_; }

    NumericScalar operator-() const { return {-value_, tolerance_}; }
    NumericScalar inverse() const
    {
        if (is_zero())
            throw Error(ErrorKind::DivisionByZero, "numeric inverse of a value within tolerance of zero");
        return {1.0 / value_, tolerance_};
    }
    NumericScalar conj() const { return {std::conj(value_), tolerance_}; }

    NumericScalar& operator+=(const NumericScalar& b) { value_ += b.value_; tolerance_ = std::max(tolerance_, b.tolerance_); return *this; }
    NumericScalar& operator-=(const NumericScalar& b) { value_ -= b.value_; tolerance_ = std::max(tolerance_, b.tolerance_); return *this; }
    NumericScalar& operator*=(const NumericScalar& b) { value_ *= b.value_; tolerance_ = std::max(tolerance_, b.tolerance_); return *this; }
    NumericScalar& operator/=(const NumericScalar& b)
    {
        if (b.is_zero())
            throw Error(ErrorKind::DivisionByZero, "numeric division by a value within tolerance of zero");
        value_ /= b.value_;
        tolerance_ = std::max(tolerance_, b.tolerance_);
        return *this;
    }

    friend NumericScalar operator+(NumericScalar a, const NumericScalar& b) { return a += b; }
    friend NumericScalar operator-(NumericScalar a, const NumericScalar& b) { return a -= b; }
    friend NumericScalar operator*(NumericScalar a, const NumericScalar& b) { return a *= b; }
    friend NumericScalar operator/(NumericScalar a, const NumericScalar& b) { return a /= b; }

    // Tolerant, hence not transitive: never use as a sort key.
    friend bool operator==(const NumericScalar& a, const NumericScalar& b)
    {
        return std::abs(a.value_ - b.value_) <= std::max(a.tolerance_, b.tolerance_);
    }

    std::string to_string() const
    {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.12g%+.12gi", value_.real(), value_.imag());
        return buf;
    }

private:
    std::complex<double> value_{0.0, 0.0};
    double tolerance_ = default_tolerance;
};

} // namespace antipode

#endif
