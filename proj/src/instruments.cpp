#include "xccy/instruments.hpp"

#include "xccy/errors.hpp"

#include <cmath>

namespace xccy {

double price_fx_swap(const FxSwapInstrument& swap, const FxSystem& fx) {
    XCCY_INPUT_REQUIRE(swap.contract_rate > 0.0, "FX swap contract rate must be positive");
    XCCY_INPUT_REQUIRE(swap.maturity > fx.asof(), "FX swap already matured");
    const double t = fx.discount(fx.base()).time(swap.maturity);
    const double market = fx_forward(fx, swap.foreign_currency, t);
    return swap.notional * (market / swap.contract_rate - 1.0) * fx.discount(fx.base()).df(t);
}

PricingMode parse_pricing_mode(const std::string& tag) {
    if (tag == "effective")
        return PricingMode::Effective;
    if (tag == "adjusted")
        return PricingMode::Adjusted;
    throw InputError("unknown pricing mode '" + tag + "' (use effective or adjusted)");
}

const CcsLeg& CcsInstrument::spread_leg() const {
    XCCY_INPUT_REQUIRE(leg1.quoted_spread_leg != leg2.quoted_spread_leg,
                       "exactly one leg must carry the quoted spread");
    return leg1.quoted_spread_leg ? leg1 : leg2;
}

CcsLeg& CcsInstrument::spread_leg() {
    XCCY_INPUT_REQUIRE(leg1.quoted_spread_leg != leg2.quoted_spread_leg,
                       "exactly one leg must carry the quoted spread");
    return leg1.quoted_spread_leg ? leg1 : leg2;
}

void CcsInstrument::validate() const {
    XCCY_INPUT_REQUIRE(!(leg1.notional_kind == NotionalKind::MarkedToMarket &&
                         leg2.notional_kind == NotionalKind::MarkedToMarket),
                       "at most one leg may be marked-to-market");
    XCCY_INPUT_REQUIRE(leg1.currency != leg2.currency, "CCS legs must be in different currencies");
    XCCY_INPUT_REQUIRE(leg1.pay != leg2.pay, "one leg is received, the other paid");
}

namespace {

struct LegTimes {
    std::vector<double> t; // model times of the schedule dates
};

LegTimes resolve_times(const Schedule& schedule, const FxSystem& fx) {
    LegTimes lt;
    lt.t.reserve(schedule.dates().size());
    for (const Date& d : schedule.dates()) {
        XCCY_INPUT_REQUIRE(d >= fx.asof(), "schedule date " << d.to_string() << " before valuation date");
        lt.t.push_back(year_fraction(fx.asof(), d, DayCount::Act365F));
    }
    return lt;
}

double period_rate(const CcsLeg& leg, const Curve& forwarding, std::size_t i, const FxSystem& fx) {
    if (leg.rate_kind == RateKind::Fixed)
        return leg.fixed_rate;
    return forward_libor(forwarding, leg.schedule, i, fx.asof());
}

// Implied forward FX converting one unit of `from` into `to` units off the
// funding curves (X^impl in the effective-curve approach).
double implied_fx(const FxSystem& fx, const std::string& from, const std::string& to, double t) {
    return fx.cross_spot(from, to) * fx.discount(from).df(t) / fx.discount(to).df(t);
}

MtmPeriodView make_period_view(const CcsLeg& leg, const LegTimes& lt, const Curve& discount,
                               const Curve& forwarding, const FxSystem& fx, const std::string& fgn_ccy,
                               std::size_t i) {
    MtmPeriodView v;
    v.horizon = lt.t[i];
    v.tau = leg.schedule.accruals()[i];
    v.discount_rate = (discount.df(lt.t[i]) / discount.df(lt.t[i + 1]) - 1.0) / v.tau;
    v.forward_libor = period_rate(leg, forwarding, i, fx);
    v.fx_forward = fx_forward(fx, fgn_ccy, lt.t[i]);
    return v;
}

} // namespace

double price_cn_ccs_leg(const CcsLeg& leg, const FxSystem& fx) {
    XCCY_INPUT_REQUIRE(leg.notional_kind == NotionalKind::Constant, "leg is not constant-notional");
    const Curve& discount = fx.discount(leg.currency);
    const Curve& forwarding = leg.rate_kind == RateKind::Floating ? fx.forwarding(leg.currency) : discount;
    const LegTimes lt = resolve_times(leg.schedule, fx);
    const std::size_t n = leg.schedule.periods();
    double value = -discount.df(lt.t.front()) + discount.df(lt.t.back());
    for (std::size_t i = 0; i < n; ++i) {
        const double rate = period_rate(leg, forwarding, i, fx) + leg.spread;
        value += leg.schedule.accruals()[i] * rate * discount.df(lt.t[i + 1]);
    }
    return leg.notional * value;
}

double price_cn_ccs_leg(const CcsLeg& leg, const CollateralContext& ctx, const FxSystem& fx) {
    XCCY_INPUT_REQUIRE(leg.notional_kind == NotionalKind::Constant, "leg is not constant-notional");
    XCCY_INPUT_REQUIRE(ctx.flow_currency == leg.currency, "collateral context flows in " << ctx.flow_currency
                                                                                         << " but leg pays "
                                                                                         << leg.currency);
    const Curve discount = effective_discount_curve(ctx, fx);
    const Curve& forwarding = leg.rate_kind == RateKind::Floating ? fx.forwarding(leg.currency) : discount;
    const LegTimes lt = resolve_times(leg.schedule, fx);
    double value = -discount.df(lt.t.front()) + discount.df(lt.t.back());
    for (std::size_t i = 0; i < leg.schedule.periods(); ++i) {
        const double rate = period_rate(leg, forwarding, i, fx) + leg.spread;
        value += leg.schedule.accruals()[i] * rate * discount.df(lt.t[i + 1]);
    }
    return leg.notional * value;
}

double price_mtm_leg_effective(const CcsLeg& leg, const CcsLeg& counter, const FxSystem& fx) {
    XCCY_INPUT_REQUIRE(leg.notional_kind == NotionalKind::MarkedToMarket, "leg is not marked-to-market");
    XCCY_INPUT_REQUIRE(counter.notional_kind == NotionalKind::Constant,
                       "a renotioning leg resets against a constant-notional leg");
    const Curve& discount = fx.discount(leg.currency);
    const Curve& forwarding = leg.rate_kind == RateKind::Floating ? fx.forwarding(leg.currency) : discount;
    const LegTimes lt = resolve_times(leg.schedule, fx);
    const double to_base = fx.spot(leg.currency);
    double value = 0.0;
    for (std::size_t i = 0; i < leg.schedule.periods(); ++i) {
        // notional fixes at the period start to match the counter leg's value
        const double notional = counter.notional * implied_fx(fx, counter.currency, leg.currency, lt.t[i]);
        const double rate = period_rate(leg, forwarding, i, fx) + leg.spread;
        value += notional * (-discount.df(lt.t[i]) +
                             discount.df(lt.t[i + 1]) * (1.0 + leg.schedule.accruals()[i] * rate));
    }
    return to_base * value;
}

double price_mtm_leg_domestic(const CcsLeg& leg, const CcsLeg& counter, const FxSystem& fx, PricingMode mode,
                              const MarketModelParams* params) {
    XCCY_INPUT_REQUIRE(leg.currency == fx.base(), "leg currency " << leg.currency << " is not the base currency");
    XCCY_INPUT_REQUIRE(counter.currency != fx.base(), "counter leg must be foreign");
    if (mode == PricingMode::Effective)
        return price_mtm_leg_effective(leg, counter, fx);

    XCCY_INPUT_REQUIRE(params != nullptr, "adjusted pricing needs market model parameters");
    params->validate();
    XCCY_INPUT_REQUIRE(leg.notional_kind == NotionalKind::MarkedToMarket, "leg is not marked-to-market");
    XCCY_INPUT_REQUIRE(counter.notional_kind == NotionalKind::Constant,
                       "a renotioning leg resets against a constant-notional leg");
    const Curve& discount = fx.discount(fx.base());
    const Curve& forwarding = leg.rate_kind == RateKind::Floating ? fx.forwarding(fx.base()) : discount;
    const LegTimes lt = resolve_times(leg.schedule, fx);
    double value = 0.0;
    for (std::size_t i = 0; i < leg.schedule.periods(); ++i) {
        const MtmPeriodView view = make_period_view(leg, lt, discount, forwarding, fx, counter.currency, i);
        const MtmAdjustment adj = adjust_domestic_mtm(view, params->domestic_slice(i));
        const double tau = view.tau;
        // redemption plus interest, both paid at T_i off the T_{i-1} FX fixing
        double coupon = adj.delayed_fx * (1.0 + tau * leg.spread);
        coupon += tau * (leg.rate_kind == RateKind::Floating ? adj.fx_times_libor : adj.delayed_fx * leg.fixed_rate);
        // lending of the renotioned amount at T_{i-1}: plain FX-swap flow
        value += discount.df(lt.t[i + 1]) * coupon - discount.df(lt.t[i]) * view.fx_forward;
    }
    return counter.notional * value;
}

double price_mtm_leg_foreign(const CcsLeg& leg, const CcsLeg& counter, const FxSystem& fx, PricingMode mode,
                             const MarketModelParams* params) {
    XCCY_INPUT_REQUIRE(leg.currency != fx.base(), "leg currency is not foreign");
    XCCY_INPUT_REQUIRE(counter.currency == fx.base(), "counter leg of a foreign renotioning leg must be domestic");
    if (mode == PricingMode::Effective)
        return price_mtm_leg_effective(leg, counter, fx);

    XCCY_INPUT_REQUIRE(params != nullptr, "adjusted pricing needs market model parameters");
    params->validate();
    XCCY_INPUT_REQUIRE(leg.notional_kind == NotionalKind::MarkedToMarket, "leg is not marked-to-market");
    XCCY_INPUT_REQUIRE(counter.notional_kind == NotionalKind::Constant,
                       "a renotioning leg resets against a constant-notional leg");
    const Curve& discount = fx.discount(leg.currency);       // foreign funding curve under base collateral
    const Curve& domestic = fx.discount(fx.base());
    const Curve& forwarding = leg.rate_kind == RateKind::Floating ? fx.forwarding(leg.currency) : discount;
    const LegTimes lt = resolve_times(leg.schedule, fx);
    const double chi = fx.spot(leg.currency);
    double value = 0.0;
    for (std::size_t i = 0; i < leg.schedule.periods(); ++i) {
        const MtmPeriodView view = make_period_view(leg, lt, discount, forwarding, fx, leg.currency, i);
        const MtmAdjustment adj = adjust_foreign_mtm(view, params->foreign_slice(i));
        const double tau = view.tau;
        double coupon = adj.delayed_fx * (1.0 + tau * leg.spread);
        coupon += tau * (leg.rate_kind == RateKind::Floating ? adj.fx_times_libor : adj.delayed_fx * leg.fixed_rate);
        // lending term: chi * P^f(T_{i-1}) / X(T_{i-1}) equals P(T_{i-1}) exactly
        value += chi * discount.df(lt.t[i + 1]) * coupon - domestic.df(lt.t[i]);
    }
    return counter.notional * value;
}

double price_ccs_leg_in_base(const CcsLeg& leg, const CcsLeg& counter, const FxSystem& fx, PricingMode mode,
                             const MarketModelParams* params) {
    if (leg.notional_kind == NotionalKind::Constant)
        return fx.spot(leg.currency) * price_cn_ccs_leg(leg, fx);
    if (leg.currency == fx.base())
        return price_mtm_leg_domestic(leg, counter, fx, mode, params);
    if (counter.currency == fx.base())
        return price_mtm_leg_foreign(leg, counter, fx, mode, params);
    XCCY_INPUT_REQUIRE(mode == PricingMode::Effective,
                       "adjusted pricing of a renotioning leg needs a domestic leg in the swap");
    return price_mtm_leg_effective(leg, counter, fx);
}

double price_ccs(const CcsInstrument& ccs, const FxSystem& fx, PricingMode mode, const MarketModelParams* params) {
    ccs.validate();
    const double v1 = price_ccs_leg_in_base(ccs.leg1, ccs.leg2, fx, mode, params);
    const double v2 = price_ccs_leg_in_base(ccs.leg2, ccs.leg1, fx, mode, params);
    return (ccs.leg1.pay ? -v1 : v1) + (ccs.leg2.pay ? -v2 : v2);
}

double par_spread(const CcsInstrument& ccs, const FxSystem& fx, PricingMode mode, const MarketModelParams* params) {
    ccs.validate();
    CcsInstrument work = ccs;
    work.spread_leg().spread = 0.0;
    const double npv0 = price_ccs(work, fx, mode, params);
    work.spread_leg().spread = 1.0;
    const double npv1 = price_ccs(work, fx, mode, params);
    const double annuity = npv1 - npv0;
    if (std::abs(annuity) < 1e-14)
        throw SolverError("degenerate instrument: spread annuity is zero");
    return -npv0 / annuity;
}

CcsInstrument make_market_mtm_ccs(const std::string& major, const std::string& minor, Date start, Date end,
                                  double spread, int frequency_months, DayCount dc) {
    CcsInstrument ccs{CcsLeg{major, build_schedule(start, end, frequency_months, dc)},
                      CcsLeg{minor, build_schedule(start, end, frequency_months, dc)}};
    ccs.leg1.notional_kind = NotionalKind::MarkedToMarket;
    ccs.leg1.pay = true;
    ccs.leg2.notional = 1.0;
    ccs.leg2.spread = spread;
    ccs.leg2.quoted_spread_leg = true;
    return ccs;
}

CcsInstrument make_market_cn_ccs(const std::string& major, const std::string& minor, Date start, Date end,
                                 double spread, const FxSystem& fx, int frequency_months, DayCount dc) {
    CcsInstrument ccs{CcsLeg{major, build_schedule(start, end, frequency_months, dc)},
                      CcsLeg{minor, build_schedule(start, end, frequency_months, dc)}};
    ccs.leg1.notional = fx.cross_spot(minor, major); // spot-equivalent notionals
    ccs.leg1.pay = true;
    ccs.leg2.notional = 1.0;
    ccs.leg2.spread = spread;
    ccs.leg2.quoted_spread_leg = true;
    return ccs;
}

} // namespace xccy
