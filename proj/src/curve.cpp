#include "xccy/curve.hpp"

#include "xccy/errors.hpp"

#include <algorithm>
#include <cmath>

namespace xccy {

CurveInterp parse_curve_interp(const std::string& tag) {
    if (tag == "log-linear-df")
        return CurveInterp::LogLinearDf;
    if (tag == "monotone-cubic-zero")
        return CurveInterp::MonotoneCubicZero;
    throw InputError("unknown curve interpolation '" + tag + "'");
}

std::string to_string(CurveInterp interp) {
    return interp == CurveInterp::LogLinearDf ? "log-linear-df" : "monotone-cubic-zero";
}

Curve::Curve(Date asof, std::vector<double> times, std::vector<double> dfs, CurveInterp interp)
    : asof_(asof), times_(std::move(times)), dfs_(std::move(dfs)), interp_(interp) {
    XCCY_INPUT_REQUIRE(times_.size() == dfs_.size(), "curve pillar size mismatch");
    if (!times_.empty() && times_.front() == 0.0) {
        XCCY_INPUT_REQUIRE(std::abs(dfs_.front() - 1.0) < 1e-15, "curve df at time 0 must be 1");
        times_.erase(times_.begin());
        dfs_.erase(dfs_.begin());
    }
    XCCY_INPUT_REQUIRE(!times_.empty(), "curve needs at least one pillar after time 0");
    double prev = 0.0;
    for (std::size_t i = 0; i < times_.size(); ++i) {
        XCCY_INPUT_REQUIRE(times_[i] > prev, "curve pillar times must be strictly increasing and positive");
        XCCY_INPUT_REQUIRE(dfs_[i] > 0.0, "curve discount factors must be positive");
        prev = times_[i];
    }
    log_dfs_.resize(dfs_.size());
    std::transform(dfs_.begin(), dfs_.end(), log_dfs_.begin(), [](double x) { return std::log(x); });
    if (interp_ == CurveInterp::MonotoneCubicZero && times_.size() >= 2) {
        std::vector<double> zeros(times_.size());
        for (std::size_t i = 0; i < times_.size(); ++i)
            zeros[i] = -log_dfs_[i] / times_[i];
        zero_spline_.emplace(times_, std::move(zeros));
    }
}

Curve Curve::flat(Date asof, double rate, double horizon) {
    return Curve(asof, {horizon}, {std::exp(-rate * horizon)});
}

double Curve::terminal_forward() const {
    if (times_.size() == 1)
        return -log_dfs_.back() / times_.back();
    const std::size_t n = times_.size();
    return (log_dfs_[n - 2] - log_dfs_[n - 1]) / (times_[n - 1] - times_[n - 2]);
}

double Curve::df(double t) const {
    XCCY_REQUIRE(t >= 0.0, "discount factor requested at negative time " << t);
    if (t == 0.0)
        return 1.0;
    if (t >= times_.back()) // flat instantaneous forward beyond the last pillar
        return dfs_.back() * std::exp(-terminal_forward() * (t - times_.back()));

    if (interp_ == CurveInterp::MonotoneCubicZero && zero_spline_) {
        const double z = t <= times_.front() ? -log_dfs_.front() / times_.front() : (*zero_spline_)(t);
        return std::exp(-z * t);
    }

    // log-linear in df with the implicit (0, 1) pillar
    auto it = std::upper_bound(times_.begin(), times_.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - times_.begin());
    const double t0 = i == 0 ? 0.0 : times_[i - 1];
    const double y0 = i == 0 ? 0.0 : log_dfs_[i - 1];
    const double w = (t - t0) / (times_[i] - t0);
    return std::exp(y0 + w * (log_dfs_[i] - y0));
}

double Curve::time(Date d) const { return year_fraction(asof_, d, DayCount::Act365F); }

double Curve::df(Date d) const { return df(time(d)); }

double forward_simple_rate(const Curve& curve, double t1, double t2, double tau) {
    XCCY_REQUIRE(t1 >= 0.0 && t1 < t2, "forward rate needs 0 <= T1 < T2, got [" << t1 << ", " << t2 << "]");
    XCCY_REQUIRE(tau > 0.0, "forward rate accrual must be positive");
    return (curve.df(t1) / curve.df(t2) - 1.0) / tau;
}

double forward_libor(const Curve& forwarding, const Schedule& schedule, std::size_t period_index, Date asof) {
    XCCY_REQUIRE(period_index < schedule.periods(), "schedule period " << period_index << " out of range");
    const double t1 = year_fraction(asof, schedule.dates()[period_index], DayCount::Act365F);
    const double t2 = year_fraction(asof, schedule.dates()[period_index + 1], DayCount::Act365F);
    return forward_simple_rate(forwarding, t1, t2, schedule.accruals()[period_index]);
}

ZeroSpreadCurve::ZeroSpreadCurve(const Curve& reference, std::vector<double> times, std::vector<double> spreads)
    : reference_(reference), times_(std::move(times)), spreads_(std::move(spreads)) {
    XCCY_INPUT_REQUIRE(times_.size() == spreads_.size(), "spread pillar size mismatch");
    XCCY_INPUT_REQUIRE(!times_.empty(), "spread curve needs at least one pillar");
    for (std::size_t i = 1; i < times_.size(); ++i)
        XCCY_INPUT_REQUIRE(times_[i - 1] < times_[i], "spread pillar times must be strictly increasing");
}

double ZeroSpreadCurve::spread(double t) const {
    if (t <= times_.front())
        return spreads_.front();
    if (t >= times_.back())
        return spreads_.back();
    auto it = std::upper_bound(times_.begin(), times_.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - times_.begin());
    const double w = (t - times_[i - 1]) / (times_[i] - times_[i - 1]);
    return spreads_[i - 1] + w * (spreads_[i] - spreads_[i - 1]);
}

double ZeroSpreadCurve::df(double t) const { return reference_.df(t) * std::exp(-spread(t) * t); }

} // namespace xccy
