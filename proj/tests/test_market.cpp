#include "xccy/convexity.hpp"
#include "xccy/errors.hpp"
#include "xccy/market.hpp"
#include "xccy/mc.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace xccy;

namespace {

const Date kAsof(2013, 9, 6);

Curve flat_df(double rate) { return Curve::flat(kAsof, rate); }

// EUR-domestic system with USD and HKD funding curves under EUR collateral
FxSystem sample_system() {
    FxSystem fx(kAsof, "EUR");
    fx.set_spot("USD", 0.7628);
    fx.set_spot("HKD", 0.0983);
    fx.set_discount("EUR", Curve(kAsof, {1.0, 2.0, 5.0, 10.0}, {0.999, 0.9955, 0.972, 0.918}));
    fx.set_discount("USD", Curve(kAsof, {1.0, 2.0, 5.0, 10.0}, {0.9985, 0.9935, 0.966, 0.905}));
    fx.set_discount("HKD", Curve(kAsof, {1.0, 2.0, 5.0, 10.0}, {0.9975, 0.992, 0.960, 0.894}));
    return fx;
}

} // namespace

TEST_CASE("spot handling and exact cross rates") {
    FxSystem fx = sample_system();
    CHECK(fx.spot("EUR") == 1.0);
    CHECK(fx.spot("USD") == 0.7628);
    CHECK(fx.cross_spot("USD", "HKD") == doctest::Approx(0.7628 / 0.0983).epsilon(1e-15));
    // stored n-1 spots: triangulation of spots is exact by construction
    CHECK(fx.cross_spot("USD", "HKD") * fx.cross_spot("HKD", "EUR") == doctest::Approx(0.7628).epsilon(1e-15));
    CHECK_THROWS_AS(fx.spot("JPY"), InputError);
    CHECK_THROWS_AS(fx.set_spot("JPY", -1.0), InputError);
}

TEST_CASE("effective discounting rules") {
    FxSystem fx(kAsof, "EUR");
    fx.set_spot("USD", 0.7628);
    const Curve p_eur(kAsof, {1.0, 5.0}, {0.99, 0.95});
    const Curve p_usd(kAsof, {1.0, 5.0}, {0.9999, 0.9655});
    fx.set_discount("EUR", p_eur);
    fx.set_discount("USD", p_usd);

    SUBCASE("domestic flows, domestic collateral at e") {
        const Curve eff = effective_discount_curve({"EUR", "EUR", ""}, fx);
        for (double t : {0.5, 1.0, 3.0, 5.0, 8.0})
            CHECK(eff.df(t) == doctest::Approx(p_eur.df(t)).epsilon(1e-15));
    }
    SUBCASE("foreign flows, domestic collateral collapse to the funding curve") {
        const Curve eff = effective_discount_curve({"USD", "EUR", ""}, fx);
        CHECK(eff.df(1.0) == doctest::Approx(0.9999).epsilon(1e-15));
        for (double t : {0.5, 1.0, 2.5, 5.0, 9.0})
            CHECK(eff.df(t) == doctest::Approx(p_usd.df(t)).epsilon(1e-14));
    }
    SUBCASE("foreign flows, same foreign collateral depend only on its accrual curve") {
        const Curve usd_ois(kAsof, {1.0, 5.0}, {0.9975, 0.962});
        fx.set_overnight("USD", usd_ois);
        const Curve eff = effective_discount_curve({"USD", "USD", ""}, fx);
        for (double t : {0.5, 1.0, 2.5, 5.0, 9.0})
            CHECK(eff.df(t) == doctest::Approx(usd_ois.df(t)).epsilon(1e-14));
    }
    SUBCASE("domestic flows under foreign collateral with zero basis-overnight spread") {
        // own-market overnight curve made identical to the funding curve
        fx.set_overnight("USD", p_usd);
        const Curve eff = effective_discount_curve({"EUR", "USD", ""}, fx);
        for (double t : {0.5, 1.0, 2.5, 5.0, 9.0})
            CHECK(eff.df(t) == doctest::Approx(p_eur.df(t)).epsilon(1e-14));
    }
    SUBCASE("missing curve is a configuration error") {
        CHECK_THROWS_AS(effective_discount_curve({"JPY", "EUR", ""}, fx), InputError);
        CHECK_THROWS_AS(effective_discount_curve({"EUR", "USD", ""}, fx), InputError); // no USD overnight curve
    }
}

TEST_CASE("effective discounting composes multiplicatively across two foreign currencies") {
    FxSystem fx = sample_system();
    fx.set_overnight("HKD", flat_df(0.004));
    const Curve eff = effective_discount_curve({"USD", "HKD", ""}, fx);
    for (double t : {1.0, 2.0, 5.0, 10.0}) {
        const double expected = fx.overnight("HKD").df(t) * fx.discount("USD").df(t) / fx.discount("HKD").df(t);
        CHECK(eff.df(t) == doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("fx forwards") {
    FxSystem fx(kAsof, "EUR");
    fx.set_spot("USD", 1.30);
    fx.set_discount("EUR", Curve(kAsof, {1.0}, {0.99}));
    fx.set_discount("USD", Curve(kAsof, {1.0}, {0.98}));

    CHECK(fx_forward(fx, "USD", 0.0) == doctest::Approx(1.30).epsilon(1e-15));
    CHECK(fx_forward(fx, "USD", 1.0) == doctest::Approx(1.30 * 0.98 / 0.99).epsilon(1e-15));
    CHECK(fx_forward(fx, "USD", 1.0) == doctest::Approx(1.2868687).epsilon(1e-7));

    FxSystem same(kAsof, "EUR");
    same.set_spot("USD", 1.30);
    same.set_discount("EUR", Curve(kAsof, {1.0, 4.0}, {0.99, 0.96}));
    same.set_discount("USD", Curve(kAsof, {1.0, 4.0}, {0.99, 0.96}));
    for (double t : {0.3, 1.0, 2.0, 4.0, 7.0})
        CHECK(fx_forward(same, "USD", t) == doctest::Approx(1.30).epsilon(1e-15));
}

TEST_CASE("triangulation") {
    SUBCASE("constructed two-curve example") {
        FxSystem fx(kAsof, "ZZZ");
        fx.set_spot("XXX", 1.0);
        fx.set_spot("YYY", 1.0 / 0.9); // chi x->y = 0.9
        fx.set_discount("ZZZ", flat_df(0.01));
        fx.set_discount("XXX", Curve(kAsof, {1.0}, {0.99}));
        fx.set_discount("YYY", Curve(kAsof, {1.0}, {0.98}));
        CHECK(triangulate_forward(fx, "XXX", "YYY", "ZZZ", 0.0) == doctest::Approx(0.9).epsilon(1e-15));
        CHECK(triangulate_forward(fx, "XXX", "YYY", "ZZZ", 1.0) ==
              doctest::Approx(0.9 * 0.99 / 0.98).epsilon(1e-15));
        CHECK(triangulate_forward(fx, "XXX", "YYY", "ZZZ", 1.0) == doctest::Approx(0.9091837).epsilon(1e-7));
    }
    SUBCASE("identity under a common collateral currency") {
        FxSystem fx = sample_system();
        for (int i = 1; i <= 20; ++i) {
            const double t = 0.5 * i;
            const double lhs = fx_forward(fx, "USD", t); // USD -> EUR(=collateral)
            const double rhs = triangulate_forward(fx, "USD", "HKD", "EUR", t) * fx_forward(fx, "HKD", t);
            CHECK(std::abs(lhs - rhs) / lhs < 1e-12);
        }
    }
    SUBCASE("mixed collateral contexts are rejected") {
        FxSystem fx = sample_system();
        CHECK_THROWS_AS(triangulate_forward(fx, "USD", "HKD", "USD", 1.0), InputError);
    }
}

TEST_CASE("FX swap par rates agree for both reference-leg conventions") {
    // the same par rate solves both the domestic-reference and the
    // foreign-reference contract: both legs price to zero simultaneously
    FxSystem fx(kAsof, "EUR");
    fx.set_spot("USD", 1.30);
    fx.set_discount("EUR", Curve(kAsof, {1.0, 3.0}, {0.99, 0.965}));
    fx.set_discount("USD", Curve(kAsof, {1.0, 3.0}, {0.98, 0.955}));
    for (double t : {0.5, 1.0, 2.0, 3.0}) {
        const double x = fx_forward(fx, "USD", t);
        const double p = fx.discount("EUR").df(t);
        const double pf = fx.discount("USD").df(t);
        // domestic reference: E[(chi_T / X - 1) D(e)] = (chi pf / (X p) - 1) p
        const double v_dom = (1.30 * pf / x - p);
        // foreign reference: E[(chi_T - X) D(e)] = chi pf - X p
        const double v_for = 1.30 * pf - x * p;
        CHECK(std::abs(v_dom) < 1e-15);
        CHECK(std::abs(v_for) < 1e-15);
    }
}

TEST_CASE("collateral-switch convexity") {
    MarketModelParams params;
    params.sigma = {0.10};
    mc::SimConfig cfg;
    cfg.paths = 400000;
    cfg.seed = 42;

    SUBCASE("deterministic spread has zero convexity") {
        const auto g = fx_convexity_gamma(params, {0.0, 0.5, 1.0}, 5.0, cfg);
        CHECK(g.value == 0.0);
        CHECK(g.std_error == 0.0);
    }
    SUBCASE("zero FX volatility has zero convexity") {
        MarketModelParams novol;
        novol.sigma = {0.0};
        const auto g = fx_convexity_gamma(novol, {0.01, 0.5, 1.0}, 5.0, cfg);
        CHECK(std::abs(g.value) <= 3.0 * g.std_error + 1e-12);
    }
    SUBCASE("positive correlation gives a positive estimate with a reported error") {
        const auto g = fx_convexity_gamma(params, {0.01, 0.5, 1.0}, 5.0, cfg);
        CHECK(g.std_error > 0.0);
        CHECK(g.value > 0.0);
        // joint lognormal model has gamma = exp(rho sigma nu T) - 1
        const double analytic = std::exp(0.5 * 0.10 * 0.01 * 5.0) - 1.0;
        CHECK(std::abs(g.value - analytic) < 4.0 * g.std_error);
    }
    SUBCASE("missing model parameters demand explicit assumptions") {
        MarketModelParams empty;
        empty.sigma.clear();
        CHECK_THROWS_AS(fx_convexity_gamma(empty, {0.01, 0.5, 1.0}, 5.0, cfg), InputError);
    }
}

TEST_CASE("market data viewpoints") {
    MarketData md;
    md.asof = kAsof;
    md.reference_currency = "EUR";
    md.spots = {{"USD", 0.7628}, {"HKD", 0.0983}};
    md.overnight = {{"EUR", flat_df(0.0008)}, {"USD", flat_df(0.0012)}, {"HKD", flat_df(0.0015)}};
    md.forwarding = {{"EUR", flat_df(0.002)}, {"USD", flat_df(0.0025)}, {"HKD", flat_df(0.0038)}};

    const FxSystem eur = make_system(md, "EUR");
    CHECK(eur.base() == "EUR");
    CHECK(eur.spot("USD") == doctest::Approx(0.7628).epsilon(1e-15));
    CHECK(eur.discount("EUR").df(1.0) == doctest::Approx(std::exp(-0.0008)).epsilon(1e-12));

    const FxSystem usd = make_system(md, "USD");
    CHECK(usd.spot("EUR") == doctest::Approx(1.0 / 0.7628).epsilon(1e-15));
    CHECK(usd.spot("HKD") == doctest::Approx(0.0983 / 0.7628).epsilon(1e-15));
    CHECK(usd.discount("USD").df(1.0) == doctest::Approx(std::exp(-0.0012)).epsilon(1e-12));
    CHECK_FALSE(usd.has_discount("EUR")); // funding curves come from the bootstrap
}
