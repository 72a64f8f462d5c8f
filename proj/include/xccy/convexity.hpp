#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace xccy {

/// Everything a renotioning-period correction needs, read off the curves once:
/// the time to the FX fixing, the period accrual, the simple-compounding
/// discount rate E over the period, the forward Libor F fixing with the
/// notional, and the outright FX forward for the fixing date.
struct MtmPeriodView {
    double horizon = 0.0;       // years from valuation to the FX fixing
    double tau = 0.0;           // accrual fraction of the coupon period
    double discount_rate = 0.0; // E (domestic leg) or E^f (foreign leg)
    double forward_libor = 0.0; // F or F^f
    double fx_forward = 1.0;    // X for the fixing date, foreign -> domestic units
};

/// Per-period shifted-lognormal model parameters.
struct ModelSlice {
    double delta = 0.0;          // displacement, keeps shifted forwards positive
    double eta = 0.0;            // Libor vol
    double sigma = 0.0;          // FX forward vol
    double rho = 0.0;            // corr(Libor driver, FX driver)
    std::optional<double> beta;  // static forward/discount spread; default F - E

    double beta_or_default(const MtmPeriodView& v) const {
        return beta ? *beta : v.forward_libor - v.discount_rate;
    }
};

struct MtmAdjustment {
    double delayed_fx = 0.0;     // E[chi at fixing, paid at period end] (inverse FX for foreign legs)
    double fx_times_libor = 0.0; // E[chi * Libor] (Libor / chi for foreign legs)
};

/// Frozen-drift expectations for a domestic renotioning leg: the FX fixing paid
/// one period late and the FX-times-Libor coupon.
MtmAdjustment adjust_domestic_mtm(const MtmPeriodView& view, const ModelSlice& slice);

/// Foreign-leg counterpart; works on 1/X and carries the opposite-sign drift.
MtmAdjustment adjust_foreign_mtm(const MtmPeriodView& view, const ModelSlice& slice);

/// Per-period parameter set for both legs of a MtM CCS. Arrays are broadcast:
/// size one applies to every period, otherwise indexed by schedule period.
class MarketModelParams {
public:
    std::vector<double> delta{0.01}, eta{0.0}, sigma{0.0}, rho_fx_libor{0.0};
    std::vector<double> delta_f{0.01}, eta_f{0.0}, rho_fx_libor_f{0.0};
    std::optional<std::vector<double>> beta, beta_f;

    void validate() const;

    ModelSlice domestic_slice(std::size_t period) const;
    ModelSlice foreign_slice(std::size_t period) const;

private:
    static double pick(const std::vector<double>& v, std::size_t i, const char* name);
};

} // namespace xccy
