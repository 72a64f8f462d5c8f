#pragma once

#include "xccy/datetime.hpp"
#include "xccy/spline.hpp"

#include <optional>
#include <string>
#include <vector>

namespace xccy {

enum class CurveInterp { LogLinearDf, MonotoneCubicZero };

CurveInterp parse_curve_interp(const std::string& tag);
std::string to_string(CurveInterp interp);

/// Discount curve: dated pillars (time in years, discount factor) with df(0)=1
/// implicit. Extrapolation beyond the last pillar keeps the instantaneous
/// forward flat (ln df affine in T); negative rates are allowed, df stays > 0.
/// Immutable after construction.
class Curve {
public:
    Curve(Date asof, std::vector<double> times, std::vector<double> dfs,
          CurveInterp interp = CurveInterp::LogLinearDf);

    /// Flat curve at a continuously compounded zero rate.
    static Curve flat(Date asof, double rate, double horizon = 60.0);

    double df(double t) const;
    /// Instantaneous-forward-flat extrapolation slope at the long end.
    double terminal_forward() const;

    Date asof() const { return asof_; }
    CurveInterp interp() const { return interp_; }
    const std::vector<double>& times() const { return times_; }
    const std::vector<double>& dfs() const { return dfs_; }

    double df(Date d) const;
    /// Model time of a date under ACT/365F from the curve's valuation date.
    double time(Date d) const;

private:
    Date asof_;
    std::vector<double> times_;
    std::vector<double> dfs_;
    std::vector<double> log_dfs_;
    std::optional<MonotoneSpline> zero_spline_;
    CurveInterp interp_;
};

/// Simple-compounded forward rate (df(T1)/df(T2) - 1) / tau. May be negative.
double forward_simple_rate(const Curve& curve, double t1, double t2, double tau);

/// Forward Libor for schedule period i, read off a forwarding pseudo-curve
/// (multi-curve convention: the pseudo-curve exists only to produce forwards).
double forward_libor(const Curve& forwarding, const Schedule& schedule, std::size_t period_index, Date asof);

/// Reference curve times a zero-coupon spread: df(T) = ref(T) * exp(-Z(T) * T).
/// Spread pillars interpolate linearly in Z, flat outside.
class ZeroSpreadCurve {
public:
    ZeroSpreadCurve(const Curve& reference, std::vector<double> times, std::vector<double> spreads);

    double df(double t) const;
    double spread(double t) const;
    const Curve& reference() const { return reference_; }
    const std::vector<double>& times() const { return times_; }
    const std::vector<double>& spreads() const { return spreads_; }

private:
    Curve reference_;
    std::vector<double> times_;
    std::vector<double> spreads_;
};

} // namespace xccy
