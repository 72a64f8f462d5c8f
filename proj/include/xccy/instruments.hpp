#pragma once

#include "xccy/convexity.hpp"
#include "xccy/datetime.hpp"
#include "xccy/market.hpp"

#include <optional>
#include <string>

namespace xccy {

/// Exchange one unit of `foreign_currency` at maturity against contract_rate
/// units of domestic currency, margined in domestic currency at the overnight
/// rate. `notional` is the domestic amount exchanged at maturity.
struct FxSwapInstrument {
    std::string foreign_currency;
    Date maturity;
    double contract_rate = 0.0; // domestic units per one foreign unit
    double notional = 1.0;      // domestic leg notional
};

/// NPV in domestic units. Zero when the contract rate equals the
/// collateral-consistent market forward.
double price_fx_swap(const FxSwapInstrument& swap, const FxSystem& fx);

enum class NotionalKind { Constant, MarkedToMarket };
enum class RateKind { Floating, Fixed };
enum class PricingMode { Effective, Adjusted };

PricingMode parse_pricing_mode(const std::string& tag);

struct CcsLeg {
    std::string currency;
    Schedule schedule;
    double notional = 1.0; // ignored for marked-to-market legs (reset each period)
    NotionalKind notional_kind = NotionalKind::Constant;
    RateKind rate_kind = RateKind::Floating;
    double spread = 0.0;
    double fixed_rate = 0.0;
    bool pay = false;
    bool quoted_spread_leg = false;
};

/// Two legs, at most one of them renotioning; collateral is held in the
/// system base currency at its overnight rate.
struct CcsInstrument {
    CcsLeg leg1, leg2;

    const CcsLeg& spread_leg() const;
    CcsLeg& spread_leg();
    void validate() const;
};

/// Constant-notional leg annuity: -P(T_0) + sum tau_i (F_i + s) P(T_i) + P(T_N),
/// in leg-currency units, discounted on the leg currency's funding curve.
double price_cn_ccs_leg(const CcsLeg& leg, const FxSystem& fx);

/// Constant-notional leg under an explicit collateral context: discounting
/// comes from the Table-1 rule engine, forwards stay at their own-market
/// values (the market approximation of zero collateral-switch convexity).
double price_cn_ccs_leg(const CcsLeg& leg, const CollateralContext& ctx, const FxSystem& fx);

/// Renotioning leg in the leg's own currency pricing off implied forward FX
/// notionals; both currencies may be foreign. Returns base-currency units.
double price_mtm_leg_effective(const CcsLeg& leg, const CcsLeg& counter, const FxSystem& fx);

/// Renotioning leg denominated in the base currency (counter leg is foreign).
/// Adjusted mode prices the delayed-FX and FX-times-Libor expectations with
/// the frozen-drift corrections instead of the implied-notional shortcut.
double price_mtm_leg_domestic(const CcsLeg& leg, const CcsLeg& counter, const FxSystem& fx, PricingMode mode,
                              const MarketModelParams* params = nullptr);

/// Renotioning leg in a foreign currency against a base-currency constant
/// leg; the lending summation collapses to sum P(T_{i-1}) exactly.
double price_mtm_leg_foreign(const CcsLeg& leg, const CcsLeg& counter, const FxSystem& fx, PricingMode mode,
                             const MarketModelParams* params = nullptr);

/// Leg value in base-currency units with receive/pay sign not applied.
double price_ccs_leg_in_base(const CcsLeg& leg, const CcsLeg& counter, const FxSystem& fx, PricingMode mode,
                             const MarketModelParams* params = nullptr);

/// Whole-swap NPV in base units (receive legs minus pay legs).
double price_ccs(const CcsInstrument& ccs, const FxSystem& fx, PricingMode mode,
                 const MarketModelParams* params = nullptr);

/// Spread on the quoted leg that makes the swap price to zero. The NPV is
/// affine in the spread, so this is a two-evaluation closed-form solve.
double par_spread(const CcsInstrument& ccs, const FxSystem& fx, PricingMode mode,
                  const MarketModelParams* params = nullptr);

/// Standard quoted MtM CCS: major-currency renotioning leg paying flat Libor,
/// minor-currency constant leg paying Libor plus the quoted spread; unit minor
/// notional, schedules quarterly from `start` to `end`.
CcsInstrument make_market_mtm_ccs(const std::string& major, const std::string& minor, Date start, Date end,
                                  double spread, int frequency_months = 3, DayCount dc = DayCount::Act360);

/// Constant-notional variant with spot-equivalent notionals.
CcsInstrument make_market_cn_ccs(const std::string& major, const std::string& minor, Date start, Date end,
                                 double spread, const FxSystem& fx, int frequency_months = 3,
                                 DayCount dc = DayCount::Act360);

} // namespace xccy
