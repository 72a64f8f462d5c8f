#include "xccy/bootstrap.hpp"

#include "xccy/errors.hpp"
#include "xccy/solver.hpp"
#include "xccy/spline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace xccy {

double BootstrapResult::worst_fit() const {
    double w = 0.0;
    for (const auto& f : fits)
        w = std::max(w, std::abs(f.npv));
    return w;
}

namespace {

struct PairQuotes {
    std::string first, second;           // quote pair orientation
    std::optional<double> spot;          // value of the fx-spot quote, first -> second
    std::vector<Quote> fx_swaps;         // sorted by maturity
    std::vector<Quote> ccs;              // sorted by maturity
};

PairQuotes organize(const std::vector<Quote>& quotes) {
    PairQuotes pq;
    for (const auto& q : quotes) {
        switch (q.kind) {
        case QuoteKind::FxSpot:
        case QuoteKind::FxSwap:
        case QuoteKind::CnCcs:
        case QuoteKind::MtmCcs: {
            if (pq.first.empty()) {
                pq.first = q.first_currency();
                pq.second = q.second_currency();
            }
            const bool same = q.first_currency() == pq.first && q.second_currency() == pq.second;
            const bool flipped = q.first_currency() == pq.second && q.second_currency() == pq.first;
            XCCY_INPUT_REQUIRE(same || flipped, "calibration set mixes currency pairs: " << q.pair);
            // pair orientation is contractual for swaps and CCS (major leg first)
            XCCY_INPUT_REQUIRE(same || q.kind == QuoteKind::FxSpot,
                               "quote orientation " << q.pair << " conflicts with " << pq.first << pq.second);
            if (q.kind == QuoteKind::FxSpot)
                pq.spot = same ? q.value : 1.0 / q.value;
            else if (q.kind == QuoteKind::FxSwap)
                pq.fx_swaps.push_back(q);
            else
                pq.ccs.push_back(q);
            break;
        }
        default:
            break; // single-currency quotes are not calibration instruments here
        }
    }
    auto by_maturity = [](const Quote& a, const Quote& b) { return *a.maturity < *b.maturity; };
    std::sort(pq.fx_swaps.begin(), pq.fx_swaps.end(), by_maturity);
    std::sort(pq.ccs.begin(), pq.ccs.end(), by_maturity);
    for (const auto* set : {&pq.fx_swaps, &pq.ccs})
        for (std::size_t i = 1; i < set->size(); ++i)
            XCCY_INPUT_REQUIRE((*set)[i - 1].maturity != (*set)[i].maturity,
                               "duplicate calibration maturity " << (*set)[i].maturity->to_string());
    return pq;
}

double tenor_time(Date asof, Tenor tenor) {
    return year_fraction(asof, add_months(asof, tenor.months), DayCount::Act365F);
}

std::string resolve_target(const PairQuotes& pq, const BootstrapConfig& cfg, const FxSystem& fx) {
    if (!cfg.target_currency.empty()) {
        XCCY_INPUT_REQUIRE(cfg.target_currency == pq.first || cfg.target_currency == pq.second,
                           "target currency " << cfg.target_currency << " not in quoted pair " << pq.first
                                              << pq.second);
        return cfg.target_currency;
    }
    const bool first_known = pq.first == fx.base() || fx.has_discount(pq.first);
    const bool second_known = pq.second == fx.base() || fx.has_discount(pq.second);
    XCCY_INPUT_REQUIRE(first_known != second_known,
                       "cannot infer which curve to imply from pair " << pq.first << pq.second
                                                                      << "; set target_currency");
    return first_known ? pq.second : pq.first;
}

} // namespace

std::vector<std::pair<double, double>> bootstrap_short_end(const std::vector<Quote>& fx_swaps,
                                                           const std::string& target, const FxSystem& fx) {
    std::vector<std::pair<double, double>> pillars;
    double prev = 0.0;
    for (const auto& q : fx_swaps) {
        XCCY_INPUT_REQUIRE(q.kind == QuoteKind::FxSwap, "short-end instrument is not an fx-swap");
        const std::string ccy_other = q.first_currency() == target ? q.second_currency() : q.first_currency();
        XCCY_INPUT_REQUIRE(ccy_other != target && (q.first_currency() == target || q.second_currency() == target),
                           "fx-swap " << q.pair << " does not involve " << target);
        const double t = tenor_time(fx.asof(), *q.maturity);
        XCCY_INPUT_REQUIRE(t > prev, "fx-swap quotes must be sorted with increasing maturities");
        prev = t;
        // forward points are quoted on the pair orientation
        const double spot_pair = q.first_currency() == target ? fx.cross_spot(target, ccy_other)
                                                              : fx.cross_spot(ccy_other, target);
        const double fwd_pair = spot_pair + q.value;
        XCCY_INPUT_REQUIRE(fwd_pair > 0.0, "fx-swap quote at " << q.maturity->to_string()
                                                               << " implies a non-positive forward");
        const double fwd_target_other =
            q.first_currency() == target ? fwd_pair : 1.0 / fwd_pair; // X: 1 target -> other units
        const Curve& other_curve = fx.discount(ccy_other);
        const double df = fwd_target_other / fx.cross_spot(target, ccy_other) * other_curve.df(t);
        XCCY_INPUT_REQUIRE(df > 0.0, "fx-swap quote at " << q.maturity->to_string()
                                                         << " implies a non-positive discount factor");
        pillars.emplace_back(t, df);
    }
    return pillars;
}

BootstrapResult bootstrap_implied_curve(const std::vector<Quote>& quotes, const BootstrapConfig& cfg,
                                        const FxSystem& fx_in) {
    PairQuotes pq = organize(quotes);
    XCCY_INPUT_REQUIRE(!pq.fx_swaps.empty() || !pq.ccs.empty(), "no calibration instruments");
    FxSystem fx = fx_in;

    const std::string target = resolve_target(pq, cfg, fx);
    const std::string other = target == pq.first ? pq.second : pq.first;
    XCCY_INPUT_REQUIRE(other == fx.base() || fx.has_discount(other),
                       "counter currency " << other << " has no funding curve under " << fx.base()
                                           << " collateral yet");

    // fx-spot quote overrides the configured spot (first -> second orientation)
    if (pq.spot) {
        const double chi_first_second = *pq.spot;
        if (pq.second == fx.base())
            fx.set_spot(pq.first, chi_first_second);
        else if (pq.first == fx.base())
            fx.set_spot(pq.second, 1.0 / chi_first_second);
        else if (fx.has_discount(other) || other == fx.base()) {
            // cross quote: rebase through the known counter currency
            const double other_in_base = fx.spot(other);
            fx.set_spot(target, target == pq.first ? chi_first_second * other_in_base
                                                   : other_in_base / chi_first_second);
        }
    }

    // ---- short end: exact stripping from FX swaps
    auto pillars = bootstrap_short_end(pq.fx_swaps, target, fx);
    double cutover = cfg.cutover;
    if (cutover == 0.0 && !pillars.empty())
        cutover = pillars.back().first;

    // ---- long end: sequential solve on CCS par spreads
    if (!pq.ccs.empty()) {
        const bool mtm = pq.ccs.front().kind == QuoteKind::MtmCcs;
        for (const auto& q : pq.ccs)
            XCCY_INPUT_REQUIRE((q.kind == QuoteKind::MtmCcs) == mtm,
                               "calibration set mixes marked-to-market and constant-notional CCS");

        std::vector<double> knot_t, knot_s;
        for (const auto& q : pq.ccs) {
            knot_t.push_back(tenor_time(fx.asof(), *q.maturity));
            knot_s.push_back(q.value);
        }
        std::optional<MonotoneSpline> spread_spline;
        if (knot_t.size() >= 2)
            spread_spline.emplace(knot_t, knot_s);

        // pillar grid: quoted maturities plus annual fill-in, all past the cutover
        std::set<int> months;
        for (const auto& q : pq.ccs)
            months.insert(q.maturity->months);
        if (cfg.annual_grid && !pq.ccs.empty())
            for (int m = 12 * ((pq.ccs.front().maturity->months + 11) / 12); m <= pq.ccs.back().maturity->months;
                 m += 12)
                months.insert(m);

        for (int m : months) {
            const Tenor tenor{m};
            const double t = tenor_time(fx.asof(), tenor);
            if (t <= cutover + 1e-9)
                continue; // FX swaps win at overlapping maturities
            if (t < (knot_t.empty() ? 0.0 : knot_t.front()) - 1e-12)
                continue;
            const double spread = spread_spline ? (*spread_spline)(std::min(t, knot_t.back())) : knot_s.front();

            const std::string major = pq.first, minor = pq.second;
            const Date end = add_months(fx.asof(), tenor.months);
            CcsInstrument inst = mtm ? make_market_mtm_ccs(major, minor, fx.asof(), end, spread,
                                                           cfg.frequency_months, cfg.day_count)
                                     : make_market_cn_ccs(major, minor, fx.asof(), end, spread, fx,
                                                          cfg.frequency_months, cfg.day_count);

            // bracket around the flat-forward extrapolation of the curve so far
            double guess = 1.0;
            if (!pillars.empty()) {
                std::vector<double> ts, dfs;
                for (auto& [pt, pdf] : pillars) {
                    ts.push_back(pt);
                    dfs.push_back(pdf);
                }
                guess = Curve(fx.asof(), ts, dfs).df(t);
            } else if (fx.has_overnight(target)) {
                guess = fx.overnight(target).df(t);
            }

            auto npv_for_df = [&](double df) {
                std::vector<double> ts, dfs;
                ts.reserve(pillars.size() + 1);
                for (auto& [pt, pdf] : pillars) {
                    ts.push_back(pt);
                    dfs.push_back(pdf);
                }
                ts.push_back(t);
                dfs.push_back(df);
                fx.set_discount(target, Curve(fx.asof(), std::move(ts), std::move(dfs)));
                return price_ccs(inst, fx, PricingMode::Effective);
            };
            const double solved =
                find_root_bracketed(npv_for_df, 1e-8, std::max(2.0 * guess, 1e-6), cfg.solver_tolerance,
                                    cfg.max_iterations);
            pillars.emplace_back(t, solved);
        }
    }

    XCCY_INPUT_REQUIRE(!pillars.empty(), "no calibration instruments");
    std::vector<double> ts, dfs;
    for (auto& [pt, pdf] : pillars) {
        ts.push_back(pt);
        dfs.push_back(pdf);
    }
    BootstrapResult result{target, fx.base(), Curve(fx.asof(), ts, dfs), std::nullopt, {}};
    fx.set_discount(target, result.curve);

    // round-trip every calibration instrument on the finished curve
    for (const auto& q : pq.fx_swaps) {
        const double t = tenor_time(fx.asof(), *q.maturity);
        FxSwapInstrument swap;
        const std::string ccy_other = q.first_currency() == target ? q.second_currency() : q.first_currency();
        const double spot_pair = q.first_currency() == target ? fx.cross_spot(target, ccy_other)
                                                              : fx.cross_spot(ccy_other, target);
        const double fwd_pair = spot_pair + q.value;
        double npv;
        if (ccy_other == fx.base()) {
            swap.foreign_currency = target;
            swap.maturity = add_months(fx.asof(), q.maturity->months);
            swap.contract_rate = q.first_currency() == target ? fwd_pair : 1.0 / fwd_pair;
            npv = price_fx_swap(swap, fx);
        } else {
            // cross pair: check the stripping identity directly
            const double x_target_other = q.first_currency() == target ? fwd_pair : 1.0 / fwd_pair;
            npv = x_target_other - fx.cross_spot(target, ccy_other) * fx.discount(target).df(t) /
                                       fx.discount(ccy_other).df(t);
        }
        result.fits.push_back({"fx-swap " + q.maturity->to_string(), *q.maturity, t, npv});
    }
    for (const auto& q : pq.ccs) {
        const double t = tenor_time(fx.asof(), *q.maturity);
        if (t <= cutover + 1e-9)
            continue;
        const Date end = add_months(fx.asof(), q.maturity->months);
        CcsInstrument inst = q.kind == QuoteKind::MtmCcs
                                 ? make_market_mtm_ccs(pq.first, pq.second, fx.asof(), end, q.value,
                                                       cfg.frequency_months, cfg.day_count)
                                 : make_market_cn_ccs(pq.first, pq.second, fx.asof(), end, q.value, fx,
                                                      cfg.frequency_months, cfg.day_count);
        const double npv = price_ccs(inst, fx, PricingMode::Effective);
        result.fits.push_back({to_string(q.kind) + " " + q.maturity->to_string(), *q.maturity, t, npv});
    }

    if (result.worst_fit() > cfg.tolerance)
        throw SolverError("bootstrap round-trip failure: worst |NPV| = " + std::to_string(result.worst_fit()) +
                          " above tolerance");

    if (fx.has_overnight(target)) {
        const Curve& ref = fx.overnight(target);
        std::vector<double> zt, zs;
        for (auto& [pt, pdf] : pillars) {
            zt.push_back(pt);
            zs.push_back(-std::log(pdf / ref.df(pt)) / pt);
        }
        result.spread_form.emplace(ref, std::move(zt), std::move(zs));
    }
    return result;
}

std::vector<Tenor> default_triplet_grid() {
    std::vector<Tenor> g;
    for (int m : {12, 18, 24, 36, 48, 60, 84, 120, 144, 180})
        g.push_back(Tenor{m});
    return g;
}

TripletSchemeA triplet_scheme_a(const std::vector<Quote>& hub_base_quotes,
                                const std::vector<Quote>& hub_third_quotes, const MarketData& md,
                                const std::string& base, const BootstrapConfig& cfg) {
    FxSystem fx = make_system(md, base);
    BootstrapConfig c1 = cfg;
    c1.target_currency.clear();
    const BootstrapResult hub = bootstrap_implied_curve(hub_base_quotes, c1, fx);
    fx.set_discount(hub.currency, hub.curve);
    const BootstrapResult third = bootstrap_implied_curve(hub_third_quotes, c1, fx);
    return {hub.curve, third.curve};
}

TripletSchemeB triplet_scheme_b(const std::vector<Quote>& hub_base_quotes,
                                const std::vector<Quote>& hub_third_quotes, const MarketData& md,
                                const std::string& base, const BootstrapConfig& cfg,
                                const std::vector<Tenor>& spread_grid) {
    const PairQuotes pq1 = organize(hub_base_quotes);
    const PairQuotes pq2 = organize(hub_third_quotes);
    const std::string hub = (pq2.first == pq1.first || pq2.first == pq1.second) ? pq2.first : pq2.second;
    XCCY_INPUT_REQUIRE(hub == pq1.first || hub == pq1.second, "quote sets share no hub currency");
    const std::string third = hub == pq2.first ? pq2.second : pq2.first;
    XCCY_INPUT_REQUIRE(base == pq1.first || base == pq1.second, "base currency " << base << " not quoted against "
                                                                                 << hub);

    FxSystem hub_view = make_system(md, hub);
    BootstrapConfig c = cfg;
    c.target_currency.clear();
    const BootstrapResult base_impl = bootstrap_implied_curve(hub_base_quotes, c, hub_view);
    hub_view.set_discount(base_impl.currency, base_impl.curve);
    const BootstrapResult third_impl = bootstrap_implied_curve(hub_third_quotes, c, hub_view);
    hub_view.set_discount(third_impl.currency, third_impl.curve);

    // 1) synthesize base/third par spreads under hub collateral
    std::vector<Quote> synthetic;
    Quote spot_q;
    spot_q.kind = QuoteKind::FxSpot;
    spot_q.pair = base + third;
    spot_q.value = md.spot_in(base, third);
    synthetic.push_back(spot_q);
    for (const Tenor& tenor : spread_grid) {
        const CcsInstrument inst = make_market_mtm_ccs(base, third, md.asof, add_months(md.asof, tenor.months), 0.0,
                                                       cfg.frequency_months, cfg.day_count);
        Quote q;
        q.kind = QuoteKind::MtmCcs;
        q.pair = base + third;
        q.maturity = tenor;
        q.value = par_spread(inst, hub_view, PricingMode::Effective);
        q.collateral_currency = hub;
        synthetic.push_back(q);
    }

    // 2) assume those spreads hold under base collateral and re-bootstrap
    FxSystem base_view = make_system(md, base);
    const BootstrapResult third_final = bootstrap_implied_curve(synthetic, c, base_view);
    return TripletSchemeB{base_impl.curve, third_impl.curve, third_final.curve, std::move(synthetic)};
}

std::vector<TripletRow> compare_triplet(const TripletSchemeA& a, const TripletSchemeB& b, const MarketData& md,
                                        const std::string& hub, const std::string& base, const std::string& third,
                                        const std::vector<Tenor>& grid, const BootstrapConfig& cfg) {
    FxSystem view_a = make_system(md, base);
    view_a.set_discount(hub, a.hub_curve);
    view_a.set_discount(third, a.third_curve);

    FxSystem view_b = make_system(md, hub);
    view_b.set_discount(base, b.base_curve_hub_coll);
    view_b.set_discount(third, b.third_curve_hub_coll);

    std::vector<TripletRow> rows;
    for (const Tenor& tenor : grid) {
        const Date end = add_months(md.asof, tenor.months);
        const CcsInstrument inst_a =
            make_market_mtm_ccs(base, third, md.asof, end, 0.0, cfg.frequency_months, cfg.day_count);
        const double sa = par_spread(inst_a, view_a, PricingMode::Effective);
        const double sb = par_spread(inst_a, view_b, PricingMode::Effective);
        rows.push_back({tenor, sa, sb, (sb - sa) * 1e4});
    }
    return rows;
}

std::string triplet_report_csv(const std::vector<TripletRow>& rows) {
    std::ostringstream out;
    out << "maturity,spread_a,spread_b,diff_bp\n";
    char buf[128];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%s,%.10f,%.10f,%.4f\n", r.maturity.to_string().c_str(), r.spread_a,
                      r.spread_b, r.diff_bp);
        out << buf;
    }
    return out.str();
}

} // namespace xccy
