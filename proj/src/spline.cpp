#include "backmc/spline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace backmc {

MonotoneCubicSpline::MonotoneCubicSpline(std::span<const double> x,
                                         std::span<const double> y)
    : x_(x.begin(), x.end()), y_(y.begin(), y.end()) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n)
        throw std::invalid_argument("spline: need >= 2 knots with matching x,y");
    for (std::size_t i = 1; i < n; ++i)
        if (!(x_[i] > x_[i - 1]))
            throw std::invalid_argument("spline: knot abscissae must be strictly increasing");

    std::vector<double> secant(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        secant[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);

    tangent_.assign(n, 0.0);
    tangent_[0] = secant[0];
    tangent_[n - 1] = secant[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i)
        tangent_[i] = secant[i - 1] * secant[i] <= 0.0
                          ? 0.0
                          : 0.5 * (secant[i - 1] + secant[i]);

    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (secant[i] == 0.0) {
            tangent_[i] = 0.0;
            tangent_[i + 1] = 0.0;
            continue;
        }
        const double a = tangent_[i] / secant[i];
        const double b = tangent_[i + 1] / secant[i];
        const double s = a * a + b * b;
        if (s > 9.0) {
            const double tau = 3.0 / std::sqrt(s);
            tangent_[i] = tau * a * secant[i];
            tangent_[i + 1] = tau * b * secant[i];
        }
    }
}

double MonotoneCubicSpline::operator()(double x) const {
    if (x <= x_.front()) return y_.front();
    if (x >= x_.back()) return y_.back();
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + t;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    return h00 * y_[i] + h10 * h * tangent_[i] + h01 * y_[i + 1] +
           h11 * h * tangent_[i + 1];
}

}  // namespace backmc
