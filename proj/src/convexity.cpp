#include "xccy/convexity.hpp"

#include "xccy/errors.hpp"

#include <cmath>

namespace xccy {

namespace {

// Shared exponent tau*(E + Delta + beta) / (1 + tau*E) * sigma * eta * rho * horizon.
double drift_exponent(const MtmPeriodView& v, const ModelSlice& s) {
    XCCY_REQUIRE(v.horizon >= 0.0, "renotioning fixing before valuation");
    XCCY_REQUIRE(v.tau > 0.0, "period accrual must be positive");
    const double ratio_den = 1.0 + v.tau * v.discount_rate;
    if (ratio_den <= 0.0)
        throw SolverError("degenerate discount ratio: 1 + tau*E <= 0");
    const double shifted = v.discount_rate + s.delta + s.beta_or_default(v);
    return v.tau * shifted / ratio_den * s.sigma * s.eta * s.rho * v.horizon;
}

double libor_cross_term(double forward, double delta, double exponent) {
    return (forward + delta) * std::exp(exponent) - delta;
}

} // namespace

MtmAdjustment adjust_domestic_mtm(const MtmPeriodView& v, const ModelSlice& s) {
    const double q = drift_exponent(v, s);
    const double g = s.sigma * s.eta * s.rho * v.horizon;
    MtmAdjustment adj;
    adj.delayed_fx = v.fx_forward * std::exp(-q);
    adj.fx_times_libor = adj.delayed_fx * libor_cross_term(v.forward_libor, s.delta, g);
    return adj;
}

MtmAdjustment adjust_foreign_mtm(const MtmPeriodView& v, const ModelSlice& s) {
    const double q = drift_exponent(v, s);
    const double g = s.sigma * s.eta * s.rho * v.horizon;
    MtmAdjustment adj;
    adj.delayed_fx = std::exp(q) / v.fx_forward;
    adj.fx_times_libor = adj.delayed_fx * libor_cross_term(v.forward_libor, s.delta, -g);
    return adj;
}

void MarketModelParams::validate() const {
    auto check = [](const std::vector<double>& v, const char* name, double lo, double hi) {
        XCCY_INPUT_REQUIRE(!v.empty(), "model parameter '" << name << "' is empty");
        for (double x : v)
            XCCY_INPUT_REQUIRE(x >= lo && x <= hi, "model parameter '" << name << "' = " << x << " out of range");
    };
    const double inf = 1e30;
    check(delta, "delta", 0.0, inf);
    check(delta_f, "delta_f", 0.0, inf);
    check(eta, "eta", 0.0, inf);
    check(eta_f, "eta_f", 0.0, inf);
    check(sigma, "sigma", 0.0, inf);
    check(rho_fx_libor, "rho_fx_libor", -1.0, 1.0);
    check(rho_fx_libor_f, "rho_fx_libor_f", -1.0, 1.0);
}

double MarketModelParams::pick(const std::vector<double>& v, std::size_t i, const char* name) {
    XCCY_INPUT_REQUIRE(!v.empty(), "model parameter '" << name << "' is empty");
    if (v.size() == 1)
        return v.front();
    XCCY_INPUT_REQUIRE(i < v.size(), "model parameter '" << name << "' has no entry for period " << i);
    return v[i];
}

ModelSlice MarketModelParams::domestic_slice(std::size_t i) const {
    ModelSlice s;
    s.delta = pick(delta, i, "delta");
    s.eta = pick(eta, i, "eta");
    s.sigma = pick(sigma, i, "sigma");
    s.rho = pick(rho_fx_libor, i, "rho_fx_libor");
    if (beta)
        s.beta = pick(*beta, i, "beta");
    return s;
}

ModelSlice MarketModelParams::foreign_slice(std::size_t i) const {
    ModelSlice s;
    s.delta = pick(delta_f, i, "delta_f");
    s.eta = pick(eta_f, i, "eta_f");
    s.sigma = pick(sigma, i, "sigma");
    s.rho = pick(rho_fx_libor_f, i, "rho_fx_libor_f");
    if (beta_f)
        s.beta = pick(*beta_f, i, "beta_f");
    return s;
}

} // namespace xccy
