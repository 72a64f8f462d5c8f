#include "xccy/convexity.hpp"
#include "xccy/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace xccy;

namespace {

MtmPeriodView sample_view(double horizon = 5.0) {
    MtmPeriodView v;
    v.horizon = horizon;
    v.tau = 0.25;
    v.discount_rate = 0.02;
    v.forward_libor = 0.02;
    v.fx_forward = 1.30;
    return v;
}

ModelSlice sample_slice(double rho = 0.5) {
    ModelSlice s;
    s.delta = 0.0;
    s.eta = 0.20;
    s.sigma = 0.10;
    s.rho = rho;
    s.beta = 0.0;
    return s;
}

} // namespace

TEST_CASE("domestic adjustment hand values") {
    // exponent = -tau E/(1+tau E) * sigma eta rho * horizon evaluated by hand
    const double q = 0.25 * 0.02 / (1.0 + 0.25 * 0.02) * 0.10 * 0.20 * 0.5 * 5.0;
    CHECK(q == doctest::Approx(0.000248756).epsilon(1e-5));
    const MtmAdjustment adj = adjust_domestic_mtm(sample_view(), sample_slice());
    CHECK(adj.delayed_fx / 1.30 == doctest::Approx(std::exp(-q)).epsilon(1e-15));
    CHECK(adj.delayed_fx / 1.30 == doctest::Approx(0.99975128).epsilon(1e-8));
    // Libor factor e^{sigma eta rho T} = e^{0.05}
    CHECK(adj.fx_times_libor / adj.delayed_fx ==
          doctest::Approx(0.02 * std::exp(0.05)).epsilon(1e-15));
    CHECK(std::exp(0.05) == doctest::Approx(1.0512711).epsilon(1e-7));
}

TEST_CASE("foreign adjustment hand values carry the opposite sign") {
    const MtmAdjustment adj = adjust_foreign_mtm(sample_view(), sample_slice());
    const double q = 0.25 * 0.02 / (1.0 + 0.25 * 0.02) * 0.10 * 0.20 * 0.5 * 5.0;
    CHECK(adj.delayed_fx * 1.30 == doctest::Approx(std::exp(q)).epsilon(1e-15));
    CHECK(adj.delayed_fx * 1.30 == doctest::Approx(1.00024879).epsilon(1e-8));
    CHECK(adj.fx_times_libor / adj.delayed_fx == doctest::Approx(0.02 * std::exp(-0.05)).epsilon(1e-15));
}

TEST_CASE("zero correlation collapses both adjustments") {
    const MtmAdjustment dom = adjust_domestic_mtm(sample_view(), sample_slice(0.0));
    CHECK(dom.delayed_fx == 1.30);
    CHECK(dom.fx_times_libor == doctest::Approx(1.30 * 0.02).epsilon(1e-15));
    const MtmAdjustment fgn = adjust_foreign_mtm(sample_view(), sample_slice(0.0));
    CHECK(fgn.delayed_fx == doctest::Approx(1.0 / 1.30).epsilon(1e-15));
    CHECK(fgn.fx_times_libor == doctest::Approx(0.02 / 1.30).epsilon(1e-15));
}

TEST_CASE("zero horizon means no adjustment") {
    const MtmAdjustment adj = adjust_domestic_mtm(sample_view(0.0), sample_slice());
    CHECK(adj.delayed_fx == 1.30);
    CHECK(adj.fx_times_libor == doctest::Approx(1.30 * 0.02).epsilon(1e-15));
}

TEST_CASE("domestic and foreign drift exponents are exact negatives") {
    for (double rho : {-0.9, -0.3, 0.2, 0.8}) {
        const MtmAdjustment dom = adjust_domestic_mtm(sample_view(), sample_slice(rho));
        const MtmAdjustment fgn = adjust_foreign_mtm(sample_view(), sample_slice(rho));
        const double q_dom = std::log(dom.delayed_fx / 1.30);
        const double q_fgn = std::log(fgn.delayed_fx * 1.30);
        CHECK(q_dom == doctest::Approx(-q_fgn).epsilon(1e-12));
    }
}

TEST_CASE("adjustments are monotone in correlation and vanish at zero") {
    double prev = -1.0;
    for (double rho = -0.9; rho <= 0.91; rho += 0.3) {
        const MtmAdjustment adj = adjust_domestic_mtm(sample_view(), sample_slice(rho));
        const double factor = adj.delayed_fx / 1.30;
        CHECK(factor > 0.0);
        if (prev > 0.0)
            CHECK(factor < prev); // decreasing in rho for E + delta + beta > 0
        prev = factor;
    }
    const MtmAdjustment zero = adjust_domestic_mtm(sample_view(), sample_slice(0.0));
    CHECK(zero.delayed_fx == 1.30);
}

TEST_CASE("exponent scales linearly in the horizon") {
    const MtmAdjustment a1 = adjust_domestic_mtm(sample_view(2.0), sample_slice());
    const MtmAdjustment a2 = adjust_domestic_mtm(sample_view(4.0), sample_slice());
    CHECK(std::log(a2.delayed_fx / 1.30) == doctest::Approx(2.0 * std::log(a1.delayed_fx / 1.30)).epsilon(1e-12));
}

TEST_CASE("degenerate discount ratio is a singularity error") {
    MtmPeriodView v = sample_view();
    v.discount_rate = -4.2; // 1 + tau E < 0 at tau = 0.25
    CHECK_THROWS_AS(adjust_domestic_mtm(v, sample_slice()), SolverError);
}

TEST_CASE("displacement enters the Libor cross term only") {
    MtmPeriodView v = sample_view();
    ModelSlice s = sample_slice();
    s.delta = 0.01;
    const MtmAdjustment adj = adjust_domestic_mtm(v, s);
    const double q = 0.25 * (0.02 + 0.01) / (1.0 + 0.25 * 0.02) * 0.10 * 0.20 * 0.5 * 5.0;
    CHECK(adj.delayed_fx == doctest::Approx(1.30 * std::exp(-q)).epsilon(1e-14));
    const double g = 0.10 * 0.20 * 0.5 * 5.0;
    CHECK(adj.fx_times_libor ==
          doctest::Approx(adj.delayed_fx * ((0.02 + 0.01) * std::exp(g) - 0.01)).epsilon(1e-14));
}

TEST_CASE("parameter broadcast and validation") {
    MarketModelParams p;
    p.sigma = {0.1, 0.12, 0.14};
    p.eta = {0.2};
    p.rho_fx_libor = {0.5};
    CHECK(p.domestic_slice(0).sigma == 0.1);
    CHECK(p.domestic_slice(2).sigma == 0.14);
    CHECK(p.domestic_slice(2).eta == 0.2);
    CHECK(p.domestic_slice(0).delta == 0.01); // default displacement
    CHECK_THROWS_AS(p.domestic_slice(3), InputError);

    MarketModelParams bad;
    bad.rho_fx_libor = {1.5};
    CHECK_THROWS_AS(bad.validate(), InputError);
    MarketModelParams bad2;
    bad2.eta = {-0.1};
    CHECK_THROWS_AS(bad2.validate(), InputError);
}
