#include "xccy/spline.hpp"

#include "xccy/errors.hpp"

#include <algorithm>
#include <cmath>

namespace xccy {

MonotoneSpline::MonotoneSpline(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    XCCY_INPUT_REQUIRE(xs_.size() == ys_.size(), "spline knot size mismatch");
    XCCY_INPUT_REQUIRE(xs_.size() >= 2, "spline needs at least two knots");
    const std::size_t n = xs_.size();
    for (std::size_t i = 1; i < n; ++i)
        XCCY_INPUT_REQUIRE(xs_[i - 1] < xs_[i], "spline knots not strictly increasing");

    std::vector<double> h(n - 1), d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = xs_[i + 1] - xs_[i];
        d[i] = (ys_[i + 1] - ys_[i]) / h[i];
    }

    tangents_.assign(n, 0.0);
    if (n == 2) {
        tangents_[0] = tangents_[1] = d[0]; // exactly linear
    } else {
        // Interior tangents: weighted secant mean, zero across local extrema.
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (d[i - 1] * d[i] <= 0.0)
                tangents_[i] = 0.0;
            else
                tangents_[i] = (d[i - 1] * h[i] + d[i] * h[i - 1]) / (h[i - 1] + h[i]);
        }
        // One-sided parabolic ends, clamped to keep the end interval monotone.
        auto end_tangent = [](double h0, double h1, double d0, double d1) {
            double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
            if (m * d0 <= 0.0)
                m = 0.0;
            else if (d0 * d1 <= 0.0 && std::abs(m) > 3.0 * std::abs(d0))
                m = 3.0 * d0;
            return m;
        };
        tangents_[0] = end_tangent(h[0], h[1], d[0], d[1]);
        tangents_[n - 1] = end_tangent(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);

        // Fritsch-Carlson limiter: pull (alpha, beta) inside the circle of
        // radius 3 so each interval stays monotone.
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (d[i] == 0.0) {
                tangents_[i] = tangents_[i + 1] = 0.0;
                continue;
            }
            const double alpha = tangents_[i] / d[i];
            const double beta = tangents_[i + 1] / d[i];
            const double r2 = alpha * alpha + beta * beta;
            if (r2 > 9.0) {
                const double scale = 3.0 / std::sqrt(r2);
                tangents_[i] = scale * alpha * d[i];
                tangents_[i + 1] = scale * beta * d[i];
            }
        }
    }
}

double MonotoneSpline::operator()(double x) const {
    XCCY_REQUIRE(x >= xs_.front() && x <= xs_.back(),
                 "spline evaluation at " << x << " outside [" << xs_.front() << ", " << xs_.back() << "]");
    auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - xs_.begin());
    if (i == xs_.size())
        --i;
    if (i > 0)
        --i;
    const double h = xs_[i + 1] - xs_[i];
    const double s = (x - xs_[i]) / h;
    const double h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
    const double h10 = s * (1.0 - s) * (1.0 - s);
    const double h01 = s * s * (3.0 - 2.0 * s);
    const double h11 = s * s * (s - 1.0);
    return h00 * ys_[i] + h10 * h * tangents_[i] + h01 * ys_[i + 1] + h11 * h * tangents_[i + 1];
}

} // namespace xccy
