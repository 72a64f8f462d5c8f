#include "xccy/curve.hpp"
#include "xccy/errors.hpp"
#include "xccy/spline.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace xccy;

namespace {
const Date kAsof(2013, 9, 6);
}

TEST_CASE("discount factor basics") {
    const Curve one_pillar(kAsof, {1.0}, {0.99});
    CHECK(one_pillar.df(0.0) == 1.0);
    CHECK(one_pillar.df(1.0) == 0.99);

    const Curve c(kAsof, {1.0, 2.0}, {0.99, 0.98});
    CHECK(c.df(1.0) == 0.99);
    CHECK(c.df(2.0) == 0.98);
    // hand evaluation of the log-linear rule
    CHECK(c.df(1.5) == doctest::Approx(std::exp(0.5 * std::log(0.99) + 0.5 * std::log(0.98))).epsilon(1e-15));
    CHECK(c.df(1.5) == doctest::Approx(0.9849873).epsilon(1e-7));
    CHECK_THROWS_AS(c.df(-0.1), Error);
}

TEST_CASE("flat-forward extrapolation keeps ln df affine") {
    const Curve c(kAsof, {1.0, 2.0, 5.0}, {0.99, 0.985, 0.95});
    const double f = c.terminal_forward();
    for (double t : {5.5, 7.0, 12.0, 40.0}) {
        CHECK(c.df(t) > 0.0);
        CHECK(std::log(c.df(t)) == doctest::Approx(std::log(0.95) - f * (t - 5.0)).epsilon(1e-13));
    }
    // three extrapolated points are collinear in (t, ln df)
    const double a = std::log(c.df(6.0)), b = std::log(c.df(8.0)), d = std::log(c.df(10.0));
    CHECK(b - a == doctest::Approx((d - b)).epsilon(1e-12));
}

TEST_CASE("curves accept negative rates but never negative discount factors") {
    const Curve c(kAsof, {1.0, 2.0}, {1.01, 1.03}); // negative-rate curve
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> t(0.0, 10.0);
    for (int i = 0; i < 200; ++i)
        CHECK(c.df(t(rng)) > 0.0);
    CHECK(forward_simple_rate(c, 1.0, 2.0, 1.0) < 0.0);
}

TEST_CASE("curve construction errors") {
    CHECK_THROWS_AS(Curve(kAsof, {1.0, 1.0}, {0.99, 0.98}), InputError);
    CHECK_THROWS_AS(Curve(kAsof, {1.0}, {-0.5}), InputError);
    CHECK_THROWS_AS(Curve(kAsof, {0.0}, {0.99}), InputError); // df(0) must be 1
    CHECK_NOTHROW(Curve(kAsof, {0.0, 1.0}, {1.0, 0.99}));
}

TEST_CASE("forward simple rates") {
    const Curve c(kAsof, {0.75, 1.0}, {0.9850, 0.9800});
    CHECK(forward_simple_rate(c, 0.75, 1.0, 0.25) == doctest::Approx((0.985 / 0.98 - 1.0) / 0.25).epsilon(1e-15));
    CHECK(forward_simple_rate(c, 0.75, 1.0, 0.25) == doctest::Approx(0.0204082).epsilon(1e-5));

    const Curve flat(kAsof, {10.0}, {1.0});
    CHECK(forward_simple_rate(flat, 0.75, 1.0, 0.25) == 0.0);

    const Curve neg(kAsof, {0.75, 1.0}, {0.98, 0.99});
    CHECK(forward_simple_rate(neg, 0.75, 1.0, 0.25) == doctest::Approx(-0.0404040).epsilon(1e-5));
    CHECK_THROWS_AS(forward_simple_rate(c, 1.0, 0.75, 0.25), Error);
}

TEST_CASE("forward libor off a pseudo-curve") {
    // pseudo-curve chosen so that df(0.75)=0.99 and df(1.0)=0.984
    const Curve fwd(kAsof, {0.75, 1.0}, {0.9900, 0.9840});
    const double r = (0.99 / 0.984 - 1.0) / 0.25;
    CHECK(r == doctest::Approx(0.0243902).epsilon(1e-5));

    // single-curve collapse: identical forwarding and discounting curves
    const Curve c(kAsof, {0.75, 1.0}, {0.985, 0.98});
    CHECK(forward_simple_rate(c, 0.75, 1.0, 0.25) ==
          doctest::Approx((c.df(0.75) / c.df(1.0) - 1.0) / 0.25).epsilon(1e-15));

    const Curve flat(kAsof, {10.0}, {1.0});
    const Schedule s = build_schedule(kAsof, add_months(kAsof, 12), 3);
    for (std::size_t i = 0; i < s.periods(); ++i)
        CHECK(forward_libor(flat, s, i, kAsof) == 0.0);
}

TEST_CASE("monotone spline") {
    SUBCASE("two knots are exactly linear") {
        const MonotoneSpline s({1.0, 2.0}, {1.0, 3.0});
        CHECK(s(1.5) == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(s(1.0) == 1.0);
        CHECK(s(2.0) == 3.0);
    }
    SUBCASE("knot reproduction on the quoted par-spread grid") {
        const std::vector<double> t{1.0, 1.5, 2.0, 3.0, 4.0, 5.0, 7.0, 10.0, 15.0, 20.0, 30.0};
        const std::vector<double> s{-0.1450e-2, -0.1850e-2, -0.2050e-2, -0.2375e-2, -0.2550e-2, -0.2650e-2,
                                    -0.2675e-2, -0.2625e-2, -0.2475e-2, -0.2325e-2, -0.2050e-2};
        const MonotoneSpline spline(t, s);
        for (std::size_t i = 0; i < t.size(); ++i)
            CHECK(spline(t[i]) == doctest::Approx(s[i]).epsilon(1e-15));
        CHECK(spline(5.0) == doctest::Approx(-0.002650).epsilon(1e-15));
        // 12y sits on a monotone segment between 10y and 15y
        const double v = spline(12.0);
        CHECK(v >= -0.002625);
        CHECK(v <= -0.002475);
    }
    SUBCASE("no overshoot on random monotone segments") {
        std::mt19937 rng(17);
        std::uniform_real_distribution<double> dy(0.0, 1.0), dx(0.1, 2.0);
        for (int rep = 0; rep < 50; ++rep) {
            std::vector<double> xs{0.0}, ys{0.0};
            bool up = rep % 2 == 0;
            for (int i = 0; i < 8; ++i) {
                xs.push_back(xs.back() + dx(rng));
                ys.push_back(ys.back() + (up ? 1.0 : -1.0) * dy(rng));
                if (i == 3)
                    up = !up; // one interior extremum
            }
            const MonotoneSpline s(xs, ys);
            for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
                const double lo = std::min(ys[i], ys[i + 1]) - 1e-12;
                const double hi = std::max(ys[i], ys[i + 1]) + 1e-12;
                for (int k = 1; k < 16; ++k) {
                    const double v = s(xs[i] + (xs[i + 1] - xs[i]) * k / 16.0);
                    CHECK(v >= lo);
                    CHECK(v <= hi);
                }
            }
        }
    }
    SUBCASE("extrapolation is a range error") {
        const MonotoneSpline s({1.0, 2.0, 3.0}, {1.0, 2.0, 4.0});
        CHECK_THROWS_AS(s(0.5), Error);
        CHECK_THROWS_AS(s(3.5), Error);
    }
}

TEST_CASE("monotone-cubic-zero curve interpolation") {
    const std::vector<double> t{1.0, 2.0, 5.0, 10.0};
    const std::vector<double> df{0.99, 0.975, 0.93, 0.85};
    const Curve c(kAsof, t, df, CurveInterp::MonotoneCubicZero);
    for (std::size_t i = 0; i < t.size(); ++i)
        CHECK(c.df(t[i]) == doctest::Approx(df[i]).epsilon(1e-14));
    CHECK(c.df(0.4) > 0.0);
    CHECK(c.df(3.25) > c.df(5.0));
    CHECK(c.df(3.25) < c.df(2.0));
    CHECK(c.df(12.0) > 0.0); // flat-forward extrapolation applies here too
}

TEST_CASE("zero-spread representation") {
    const Curve ref(kAsof, {1.0, 2.0, 5.0}, {0.99, 0.98, 0.94});
    SUBCASE("zero spread reproduces the reference everywhere") {
        const ZeroSpreadCurve z(ref, {1.0, 3.0, 5.0}, {0.0, 0.0, 0.0});
        for (double t : {0.0, 0.3, 1.0, 2.7, 5.0, 9.0})
            CHECK(z.df(t) == doctest::Approx(ref.df(t)).epsilon(1e-15));
    }
    SUBCASE("composed discount factor") {
        const ZeroSpreadCurve z(ref, {1.0, 5.0}, {0.001, 0.002});
        CHECK(z.df(1.0) == doctest::Approx(0.99 * std::exp(-0.001 * 1.0)).epsilon(1e-15));
        CHECK(z.df(5.0) == doctest::Approx(0.94 * std::exp(-0.002 * 5.0)).epsilon(1e-15));
        CHECK(z.spread(3.0) == doctest::Approx(0.0015).epsilon(1e-15)); // linear in Z
        CHECK(z.df(8.0) > 0.0);
    }
}
