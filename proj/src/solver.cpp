#include "xccy/solver.hpp"

#include "xccy/errors.hpp"

#include <cmath>

namespace xccy {

double find_root_bracketed(const std::function<double(double)>& f, double lo, double hi, double f_tolerance,
                           int max_iterations) {
    XCCY_REQUIRE(lo < hi, "root bracket is empty");
    double flo = f(lo);
    if (std::abs(flo) <= f_tolerance)
        return lo;
    double fhi = f(hi);
    if (std::abs(fhi) <= f_tolerance)
        return hi;
    if (flo * fhi > 0.0)
        throw SolverError("no sign change in bracket [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "]: f(lo)=" + std::to_string(flo) + ", f(hi)=" + std::to_string(fhi));

    double x = lo, fx = flo;
    for (int it = 0; it < max_iterations; ++it) {
        // secant through the bracket ends, bisection when it leaves the bracket
        double cand = hi - fhi * (hi - lo) / (fhi - flo);
        const double mid = 0.5 * (lo + hi);
        if (!(cand > lo && cand < hi))
            cand = mid;
        x = cand;
        fx = f(x);
        if (std::abs(fx) <= f_tolerance)
            return x;
        if (flo * fx < 0.0) {
            hi = x;
            fhi = fx;
        } else {
            lo = x;
            flo = fx;
        }
        if (hi - lo <= 1e-16 * std::max(1.0, std::abs(hi)))
            return std::abs(flo) < std::abs(fhi) ? lo : hi;
        // force an occasional bisection so a stale end cannot stall the secant
        if (it % 8 == 7) {
            const double m = 0.5 * (lo + hi);
            const double fm = f(m);
            if (std::abs(fm) <= f_tolerance)
                return m;
            if (flo * fm < 0.0) {
                hi = m;
                fhi = fm;
            } else {
                lo = m;
                flo = fm;
            }
        }
    }
    throw SolverError("root finder did not converge: residual " + std::to_string(fx) + " after " +
                      std::to_string(max_iterations) + " iterations");
}

} // namespace xccy
