#pragma once

#include "xccy/convexity.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace xccy::mc {

struct SimConfig {
    std::uint64_t paths = 200000; // trajectories, antithetic partners included
    double step = 1.0 / 12;       // years
    std::uint64_t seed = 42;
    bool antithetic = true;
    int threads = 0; // 0 = hardware concurrency; results do not depend on it
};

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
};

enum class MtmSide { Domestic, Foreign };

/// Simulate under the payment-date pricing measure directly (the Libor driver
/// is a martingale, the FX forward carries the full state-dependent drift), or
/// under the fixing-date measure with Radon-Nikodym reweighting (the FX
/// forward is a martingale, the Libor driver drifts, payoffs carry weights).
enum class MeasureRoute { PricingMeasure, WeightedFromFixingMeasure };

struct MtmSimResult {
    Estimate fx_term;        // E[chi_fix] (domestic) or E[1/chi_fix] (foreign)
    Estimate fx_libor_term;  // E[chi_fix * L] or E[L^f / chi_fix]
    Estimate weight;         // RN weight sample mean; exactly 1 on the direct route
    std::uint64_t rejected_trajectories = 0;
    std::uint64_t samples = 0; // statistically independent samples (pairs if antithetic)
};

/// Exact (non-frozen) simulation of the renotioning-period expectations that
/// the closed-form adjustments approximate. Trajectories whose discount ratio
/// degenerates (1 + tau*E <= 0) are rejected and counted; more than 0.1%
/// rejections is an error.
MtmSimResult simulate_mtm_expectations(MtmSide side, const MtmPeriodView& view, const ModelSlice& slice,
                                       const SimConfig& cfg, MeasureRoute route = MeasureRoute::PricingMeasure);

/// Covariance-ratio estimate of the collateral-switch convexity of an FX
/// forward: gamma = Cov(chi_T, D) / (X * E[D]) under a joint lognormal model
/// of the FX fixing and the spread accrual factor D.
Estimate estimate_gamma(double fx_vol, double spread_vol, double rho, double t, const SimConfig& cfg);

/// Deterministic rate curves for the discrete margining replication.
struct RiskFreeSpec {
    std::function<double(double)> risk_free;           // r(t)
    std::function<double(double)> collateral_foreign;  // c^f(t)
    std::function<double(double)> basis;               // b^f(t; e)
    std::function<double(double)> overnight;           // e(t)

    static RiskFreeSpec flat(double r, double cf, double bf, double e);
};

/// Runs the discrete foreign-collateral strategy (remunerate the account at
/// c^f, fund it by rolling an FX swap plus a risk-free zero-coupon bond) over
/// [0, horizon] with step dt and returns the annualized realized dividend
/// rate. Converges to r - c^f + b^f(e) - e at first order in dt.
double replicate_foreign_collateral_carry(const RiskFreeSpec& spec, double dt, double horizon = 1.0);

struct SweepConfig {
    std::vector<double> sigmas{0.1, 0.2, 0.3};
    std::vector<double> etas{0.1, 0.2, 0.3};
    std::vector<double> rhos{-0.9, 0.0, 0.9};
    std::vector<double> horizons{1.0, 5.0, 10.0};
    double tau = 0.25;
    double discount_rate = 0.02; // E and E^f
    double delta = 0.0;
    double beta = 0.0;
    double fx_forward = 1.0;
};

struct SweepRow {
    double sigma, eta, rho, horizon;
    std::string target;
    double closed_form, mc_mean, mc_se, z;
};

/// Systematic sweep comparing each closed-form adjustment with the non-frozen
/// simulation; z = (closed_form - mc_mean) / mc_se.
std::vector<SweepRow> validate_closed_forms(const SweepConfig& grid, const SimConfig& cfg);

double max_abs_z(const std::vector<SweepRow>& rows);

std::string sweep_report_csv(const std::vector<SweepRow>& rows);

} // namespace xccy::mc
