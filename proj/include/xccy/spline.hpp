#pragma once

#include <cstddef>
#include <vector>

namespace xccy {

/// Monotone cubic interpolation (Fritsch-Carlson tangent limiting) through a
/// set of knots. On any monotone knot range the interpolant never overshoots
/// the knot values; two knots degenerate to a straight line. Evaluation
/// outside the knot range is a range error.
class MonotoneSpline {
public:
    MonotoneSpline(std::vector<double> xs, std::vector<double> ys);

    double operator()(double x) const;

    double x_min() const { return xs_.front(); }
    double x_max() const { return xs_.back(); }
    std::size_t size() const { return xs_.size(); }

private:
    std::vector<double> xs_, ys_, tangents_;
};

} // namespace xccy
