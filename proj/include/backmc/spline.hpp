#pragma once

#include <span>
#include <vector>

namespace backmc {

/// Monotonicity-preserving cubic interpolant (Fritsch-Carlson tangent
/// limiting) with flat extrapolation outside the knot range. Never
/// overshoots the knot values, which keeps tabulated volatility
/// functions non-negative.
class MonotoneCubicSpline {
public:
    MonotoneCubicSpline() = default;
    MonotoneCubicSpline(std::span<const double> x, std::span<const double> y);

    double operator()(double x) const;

    std::span<const double> knots_x() const { return x_; }
    std::span<const double> knots_y() const { return y_; }

private:
    std::vector<double> x_, y_, tangent_;
};

}  // namespace backmc
