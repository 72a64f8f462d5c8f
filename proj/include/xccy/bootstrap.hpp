#pragma once

#include "xccy/curve.hpp"
#include "xccy/instruments.hpp"
#include "xccy/market.hpp"
#include "xccy/quotes.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace xccy {

struct BootstrapConfig {
    std::string target_currency; // currency whose funding curve is implied; empty = infer
    double cutover = 0.0;        // longest FX-swap maturity in years; 0 = derive from quotes
    double tolerance = 1e-10;    // round-trip NPV per unit notional
    double solver_tolerance = 1e-13;
    int max_iterations = 100;
    int frequency_months = 3;
    DayCount day_count = DayCount::Act360;
    bool annual_grid = true;     // densify CCS pillars to a smooth annual grid
};

struct CalibrationFit {
    std::string instrument; // "fx-swap 9m", "mtm-ccs 5y", ...
    Tenor maturity;
    double time = 0.0;
    double npv = 0.0; // per unit notional after calibration
};

struct BootstrapResult {
    std::string currency;   // curve currency
    std::string collateral; // collateral currency (the system base)
    Curve curve;
    /// Same curve written over the currency's own overnight curve when one is
    /// configured; the two representations agree at pillars.
    std::optional<ZeroSpreadCurve> spread_form;
    std::vector<CalibrationFit> fits;

    double worst_fit() const;
};

/// Strips implied discount pillars from FX swaps: df(T) = X(T)/chi * P_other(T)
/// where `other` is the counter currency of each quote. Quotes must be sorted
/// by maturity; a non-positive implied discount factor is a data error.
std::vector<std::pair<double, double>> bootstrap_short_end(const std::vector<Quote>& fx_swaps,
                                                           const std::string& target, const FxSystem& fx);

/// Full short-end + sequential CCS bootstrap of one implied funding curve
/// under the collateral currency fx.base(). The quote set holds one currency
/// pair: optional fx-spot, fx-swaps for the short end, and mtm-ccs / cn-ccs
/// par spreads for the long end (splined to an annual grid before solving).
/// FX-spot quotes in the set override the system's spots.
BootstrapResult bootstrap_implied_curve(const std::vector<Quote>& quotes, const BootstrapConfig& cfg,
                                        const FxSystem& fx);

/// Scheme (a): assume hub/base and hub/third CCS quotes hold unchanged under
/// base-currency collateral; imply the hub curve, then the third currency's
/// curve, both under base collateral. Two curves built.
struct TripletSchemeA {
    Curve hub_curve;   // hub funding curve under base collateral
    Curve third_curve; // third-currency funding curve under base collateral
};
TripletSchemeA triplet_scheme_a(const std::vector<Quote>& hub_base_quotes,
                                const std::vector<Quote>& hub_third_quotes, const MarketData& md,
                                const std::string& base, const BootstrapConfig& cfg);

/// Scheme (b): imply base and third curves under hub collateral, synthesize
/// base/third at-par spreads there, then assume those spreads hold under base
/// collateral and re-bootstrap the third currency's curve. Three curves built.
struct TripletSchemeB {
    Curve base_curve_hub_coll;
    Curve third_curve_hub_coll;
    Curve third_curve; // final third-currency curve under base collateral
    std::vector<Quote> synthetic_quotes; // base/third par spreads under hub collateral
};
TripletSchemeB triplet_scheme_b(const std::vector<Quote>& hub_base_quotes,
                                const std::vector<Quote>& hub_third_quotes, const MarketData& md,
                                const std::string& base, const BootstrapConfig& cfg,
                                const std::vector<Tenor>& spread_grid);

struct TripletRow {
    Tenor maturity;
    double spread_a = 0.0; // base/third par spread under base collateral, scheme (a) curves
    double spread_b = 0.0; // same spread under hub collateral, scheme (b) curves
    double diff_bp = 0.0;  // (b - a) in basis points
};

std::vector<TripletRow> compare_triplet(const TripletSchemeA& a, const TripletSchemeB& b, const MarketData& md,
                                        const std::string& hub, const std::string& base, const std::string& third,
                                        const std::vector<Tenor>& grid, const BootstrapConfig& cfg);

/// Table layout of the comparison: maturity,spread_a,spread_b,diff_bp.
std::string triplet_report_csv(const std::vector<TripletRow>& rows);

/// Maturities used by the triplet comparison when none are requested.
std::vector<Tenor> default_triplet_grid();

} // namespace xccy
