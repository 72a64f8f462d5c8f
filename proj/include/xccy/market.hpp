#pragma once

#include "xccy/curve.hpp"
#include "xccy/datetime.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace xccy {

namespace mc {
struct SimConfig;
}
class MarketModelParams;

/// Selects one of the four effective-discounting rules: which currency the
/// flows are paid in, which currency the collateral account is held in, and
/// which accrual curve remunerates it. Foreign funding is always via FX swaps
/// collateralized at the domestic overnight rate.
struct CollateralContext {
    std::string flow_currency;
    std::string collateral_currency;
    /// CSA accrual curve. Empty picks the default: the system discount curve
    /// when collateral sits in the base currency, the collateral currency's
    /// own overnight curve otherwise.
    std::string collateral_rate_curve;
};

/// Spot FX rates plus every curve needed for collateral-consistent forwards:
/// one domestic (base-currency) collateral curve, one funding curve per
/// foreign currency built under base collateral, forwarding pseudo-curves,
/// and optional own-market overnight curves. Spots are stored only against
/// the base so that cross rates triangulate exactly. Immutable in use:
/// populate once, then share freely across threads.
class FxSystem {
public:
    FxSystem(Date asof, std::string base_currency) : asof_(asof), base_(std::move(base_currency)) {}

    Date asof() const { return asof_; }
    const std::string& base() const { return base_; }

    void set_spot(const std::string& currency, double chi);
    /// Base currency: the collateral curve P(.;e). Foreign currency: the
    /// funding curve for its flows under base collateral.
    void set_discount(const std::string& currency, Curve curve);
    void set_forwarding(const std::string& currency, Curve curve);
    /// Own-market overnight curve (CSA accrual in that currency, and the
    /// natural zero-spread reference).
    void set_overnight(const std::string& currency, Curve curve);

    /// chi: one unit of `currency` in base units; base itself maps to 1.
    double spot(const std::string& currency) const;
    /// chi from->to, derived from stored spots so triples multiply exactly.
    double cross_spot(const std::string& from, const std::string& to) const;

    const Curve& discount(const std::string& currency) const;
    const Curve& forwarding(const std::string& currency) const;
    const Curve& overnight(const std::string& currency) const;
    bool has_discount(const std::string& currency) const { return discount_.count(currency) > 0; }
    bool has_forwarding(const std::string& currency) const { return forwarding_.count(currency) > 0; }
    bool has_overnight(const std::string& currency) const { return overnight_.count(currency) > 0; }

    std::vector<std::string> currencies() const;

private:
    Date asof_;
    std::string base_;
    std::map<std::string, double> spots_;
    std::map<std::string, Curve> discount_, forwarding_, overnight_;
};

/// Composes the effective discounting curve for a (flow currency, collateral
/// currency) pair. All rate sums become products and ratios of discount
/// factors sampled on the union pillar grid, which is exact for log-linear
/// inputs (monotone-cubic inputs are reproduced at pillars only).
Curve effective_discount_curve(const CollateralContext& ctx, const FxSystem& fx);

/// Collateral-consistent FX forward of `currency` against the base:
/// X(T) = chi * Pf(T) / P(T).
double fx_forward(const FxSystem& fx, const std::string& currency, double t);

/// Forward rate from -> to at T when all curves share collateral in
/// `collateral_currency` (which must be the system base; mixing collateral
/// contexts breaks the triangulation identity and is rejected).
double triangulate_forward(const FxSystem& fx, const std::string& from, const std::string& to,
                           const std::string& collateral_currency, double t);

/// Joint lognormal model for the FX fixing and the collateral-spread accrual
/// factor D(t,T; e^f - b^f(e)); the convexity of an FX forward under a change
/// of collateral currency is not market-observable, so these assumptions must
/// be supplied explicitly.
struct CollateralSpreadSpec {
    double vol = 0.0;     // lognormal vol of the spread accrual factor
    double rho_fx = 0.0;  // corr(FX driver, accrual-factor driver)
    double mean_df = 1.0; // expected accrual factor under the base forward measure
};

struct GammaEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

/// Model-implied relative shift of an FX forward when the collateral currency
/// changes; Monte Carlo covariance-ratio estimate (no closed form is used).
GammaEstimate fx_convexity_gamma(const MarketModelParams& params, const CollateralSpreadSpec& spread_spec, double t,
                                 const mc::SimConfig& cfg);

/// Single-currency market inputs shared by every investor viewpoint: one
/// overnight (OIS) and one forwarding curve per currency, spots against a
/// reference currency. A viewpoint with any domestic currency is spun off
/// with make_system.
struct MarketData {
    Date asof;
    std::string reference_currency;
    std::map<std::string, double> spots; // one unit of ccy in reference units
    std::map<std::string, Curve> overnight;
    std::map<std::string, Curve> forwarding;

    double spot_in(const std::string& ccy, const std::string& domestic) const;
};

/// Builds the FxSystem of an investor whose domestic currency is `domestic`:
/// the domestic discount curve is that currency's overnight curve, spots are
/// rebased, forwarding and overnight curves are registered for every currency.
/// Foreign funding curves are left to the bootstrap.
FxSystem make_system(const MarketData& md, const std::string& domestic);

} // namespace xccy
