#include "xccy/market.hpp"

#include "xccy/convexity.hpp"
#include "xccy/errors.hpp"
#include "xccy/mc.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace xccy {

void FxSystem::set_spot(const std::string& currency, double chi) {
    XCCY_INPUT_REQUIRE(chi > 0.0, "FX spot for " << currency << " must be positive");
    XCCY_INPUT_REQUIRE(currency != base_, "spot of the base currency is fixed at 1");
    spots_[currency] = chi;
}

void FxSystem::set_discount(const std::string& currency, Curve curve) {
    XCCY_INPUT_REQUIRE(curve.asof() == asof_, "curve valuation date mismatch for " << currency);
    discount_.insert_or_assign(currency, std::move(curve));
}

void FxSystem::set_forwarding(const std::string& currency, Curve curve) {
    XCCY_INPUT_REQUIRE(curve.asof() == asof_, "curve valuation date mismatch for " << currency);
    forwarding_.insert_or_assign(currency, std::move(curve));
}

void FxSystem::set_overnight(const std::string& currency, Curve curve) {
    XCCY_INPUT_REQUIRE(curve.asof() == asof_, "curve valuation date mismatch for " << currency);
    overnight_.insert_or_assign(currency, std::move(curve));
}

double FxSystem::spot(const std::string& currency) const {
    if (currency == base_)
        return 1.0;
    auto it = spots_.find(currency);
    XCCY_INPUT_REQUIRE(it != spots_.end(), "no FX spot configured for " << currency);
    return it->second;
}

double FxSystem::cross_spot(const std::string& from, const std::string& to) const {
    return spot(from) / spot(to);
}

namespace {

const Curve& find_curve(const std::map<std::string, Curve>& curves, const std::string& currency, const char* role) {
    auto it = curves.find(currency);
    XCCY_INPUT_REQUIRE(it != curves.end(), "no " << role << " curve configured for " << currency);
    return it->second;
}

} // namespace

const Curve& FxSystem::discount(const std::string& currency) const { return find_curve(discount_, currency, "discount"); }
const Curve& FxSystem::forwarding(const std::string& currency) const {
    return find_curve(forwarding_, currency, "forwarding");
}
const Curve& FxSystem::overnight(const std::string& currency) const {
    return find_curve(overnight_, currency, "overnight");
}

std::vector<std::string> FxSystem::currencies() const {
    std::set<std::string> s{base_};
    for (const auto& [ccy, unused] : spots_)
        s.insert(ccy);
    for (const auto& [ccy, unused] : discount_)
        s.insert(ccy);
    return {s.begin(), s.end()};
}

namespace {

struct CurveFactor {
    const Curve* curve;
    int exponent; // +1 or -1
};

Curve compose(Date asof, const std::vector<CurveFactor>& factors) {
    std::set<double> grid;
    for (const auto& f : factors)
        grid.insert(f.curve->times().begin(), f.curve->times().end());
    std::vector<double> times(grid.begin(), grid.end());
    std::vector<double> dfs;
    dfs.reserve(times.size());
    for (double t : times) {
        double df = 1.0;
        for (const auto& f : factors)
            df *= f.exponent > 0 ? f.curve->df(t) : 1.0 / f.curve->df(t);
        dfs.push_back(df);
    }
    return Curve(asof, std::move(times), std::move(dfs), CurveInterp::LogLinearDf);
}

} // namespace

Curve effective_discount_curve(const CollateralContext& ctx, const FxSystem& fx) {
    const bool flow_domestic = ctx.flow_currency == fx.base();
    const bool coll_domestic = ctx.collateral_currency == fx.base();

    // CSA accrual curve ("c" of the dispatch): default e for domestic
    // collateral, the collateral currency's own overnight curve otherwise.
    const Curve* accrual = nullptr;
    if (!ctx.collateral_rate_curve.empty()) {
        accrual = &fx.discount(ctx.collateral_rate_curve); // registered under a currency key
    } else if (coll_domestic) {
        accrual = &fx.discount(fx.base());
    } else {
        XCCY_INPUT_REQUIRE(fx.has_overnight(ctx.collateral_currency),
                           "no overnight curve for collateral currency " << ctx.collateral_currency
                                                                         << "; cannot resolve its CSA accrual rate");
        accrual = &fx.overnight(ctx.collateral_currency);
    }

    std::vector<CurveFactor> factors{{accrual, +1}};
    if (flow_domestic && !coll_domestic) {
        // domestic flows, foreign collateral: c^f - b^f(e) + e
        factors.push_back({&fx.discount(fx.base()), +1});
        factors.push_back({&fx.discount(ctx.collateral_currency), -1});
    } else if (!flow_domestic && coll_domestic) {
        // foreign flows, domestic collateral: c + b^f(e) - e
        factors.push_back({&fx.discount(ctx.flow_currency), +1});
        factors.push_back({&fx.discount(fx.base()), -1});
    } else if (!flow_domestic && !coll_domestic && ctx.flow_currency != ctx.collateral_currency) {
        // foreign flows, collateral in another foreign currency:
        // c^{f'} - b^{f'}(e) + b^f(e)
        factors.push_back({&fx.discount(ctx.flow_currency), +1});
        factors.push_back({&fx.discount(ctx.collateral_currency), -1});
    }
    // flow == collateral (domestic/domestic or f == f'): accrual curve alone.

    return compose(fx.asof(), factors);
}

double fx_forward(const FxSystem& fx, const std::string& currency, double t) {
    XCCY_REQUIRE(t >= 0.0, "FX forward requested at negative time");
    if (currency == fx.base())
        return 1.0;
    return fx.spot(currency) * fx.discount(currency).df(t) / fx.discount(fx.base()).df(t);
}

double triangulate_forward(const FxSystem& fx, const std::string& from, const std::string& to,
                           const std::string& collateral_currency, double t) {
    XCCY_INPUT_REQUIRE(collateral_currency == fx.base(),
                       "triangulation needs all forwards under one collateral currency; this system is built under "
                           << fx.base() << ", not " << collateral_currency);
    return fx.cross_spot(from, to) * fx.discount(from).df(t) / fx.discount(to).df(t);
}

double MarketData::spot_in(const std::string& ccy, const std::string& domestic) const {
    auto get = [this](const std::string& c) {
        if (c == reference_currency)
            return 1.0;
        auto it = spots.find(c);
        XCCY_INPUT_REQUIRE(it != spots.end(), "no spot for " << c << " in market data");
        return it->second;
    };
    return get(ccy) / get(domestic);
}

FxSystem make_system(const MarketData& md, const std::string& domestic) {
    XCCY_INPUT_REQUIRE(md.overnight.count(domestic), "no overnight curve for domestic currency " << domestic);
    FxSystem fx(md.asof, domestic);
    fx.set_discount(domestic, md.overnight.at(domestic));
    for (const auto& [ccy, curve] : md.overnight)
        fx.set_overnight(ccy, curve);
    for (const auto& [ccy, curve] : md.forwarding)
        fx.set_forwarding(ccy, curve);
    auto all = md.spots;
    all.emplace(md.reference_currency, 1.0);
    for (const auto& [ccy, unused] : all)
        if (ccy != domestic)
            fx.set_spot(ccy, md.spot_in(ccy, domestic));
    return fx;
}

GammaEstimate fx_convexity_gamma(const MarketModelParams& params, const CollateralSpreadSpec& spread_spec, double t,
                                 const mc::SimConfig& cfg) {
    XCCY_INPUT_REQUIRE(!params.sigma.empty(), "collateral convexity is not observable from quotes; supply an FX "
                                              "forward volatility explicitly");
    XCCY_INPUT_REQUIRE(std::abs(spread_spec.rho_fx) <= 1.0 && spread_spec.vol >= 0.0,
                       "bad collateral spread model: need vol >= 0 and |rho| <= 1");
    params.validate();
    const double sigma = params.sigma.front();
    const auto est = mc::estimate_gamma(sigma, spread_spec.vol, spread_spec.rho_fx, t, cfg);
    return {est.mean, est.std_error};
}

} // namespace xccy
