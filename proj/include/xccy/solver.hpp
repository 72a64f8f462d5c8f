#pragma once

#include <functional>

namespace xccy {

/// Bracketed secant/bisection hybrid. Needs f(lo) and f(hi) of opposite sign;
/// stops when |f| <= f_tolerance or the bracket collapses to machine width.
/// Throws SolverError when no sign change is found or iterations run out.
double find_root_bracketed(const std::function<double(double)>& f, double lo, double hi, double f_tolerance,
                           int max_iterations);

} // namespace xccy
