#include "xccy/mc.hpp"

#include "xccy/errors.hpp"
#include "xccy/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <thread>

namespace xccy::mc {

namespace {

double pairwise_sum(const double* x, std::size_t n) {
    if (n <= 16) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            s += x[i];
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

Estimate reduce(std::vector<double>& values) {
    Estimate est;
    const std::size_t n = values.size();
    if (n == 0)
        return est;
    const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    if (*mn == *mx) { // degenerate (zero-vol) case: exact value, zero error
        est.mean = *mn;
        est.std_error = 0.0;
        return est;
    }
    est.mean = pairwise_sum(values.data(), n) / static_cast<double>(n);
    for (double& v : values)
        v = (v - est.mean) * (v - est.mean);
    const double ss = pairwise_sum(values.data(), n);
    est.std_error = n > 1 ? std::sqrt(ss / (static_cast<double>(n) * static_cast<double>(n - 1))) : 0.0;
    return est;
}

int resolve_threads(const SimConfig& cfg, std::uint64_t work_items) {
    int t = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
    if (t < 1)
        t = 1;
    if (static_cast<std::uint64_t>(t) > work_items)
        t = static_cast<int>(work_items);
    return t;
}

template <typename Fn>
void parallel_for(std::uint64_t count, int threads, Fn&& body) {
    if (threads <= 1) {
        body(0, count);
        return;
    }
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (count + threads - 1) / threads;
    for (int k = 0; k < threads; ++k) {
        const std::uint64_t lo = k * chunk;
        const std::uint64_t hi = std::min<std::uint64_t>(count, lo + chunk);
        if (lo >= hi)
            break;
        pool.emplace_back([lo, hi, &body] { body(lo, hi); });
    }
    for (auto& th : pool)
        th.join();
}

struct KernelCoeffs {
    double x0, x1;  // d lnX = (x0 + x1 * tau*Y/den) dt + sigma dW_X
    double d1, d2;  // d E   = (d1 * Y + d2 * Y * tau*Y/den) dt + eta * Y dW_F
    bool weighted;
    MtmSide side;
};

KernelCoeffs make_coeffs(MtmSide side, MeasureRoute route, double sigma, double eta, double rho) {
    KernelCoeffs c{};
    c.side = side;
    c.weighted = route == MeasureRoute::WeightedFromFixingMeasure;
    if (!c.weighted) {
        // payment-date pricing measure: Libor driver is a martingale, the FX
        // forward carries the state-dependent drift
        c.x0 = (side == MtmSide::Domestic ? -0.5 : 0.5) * sigma * sigma;
        c.x1 = -sigma * eta * rho;
        c.d1 = c.d2 = 0.0;
    } else {
        // fixing-date measure: FX forward is a martingale, the Libor driver
        // picks up the measure-change drift and payoffs carry RN weights
        c.x0 = -0.5 * sigma * sigma;
        c.x1 = 0.0;
        c.d1 = side == MtmSide::Domestic ? 0.0 : -eta * sigma * rho;
        c.d2 = eta * eta;
    }
    return c;
}

} // namespace

MtmSimResult simulate_mtm_expectations(MtmSide side, const MtmPeriodView& view, const ModelSlice& slice,
                                       const SimConfig& cfg, MeasureRoute route) {
    XCCY_INPUT_REQUIRE(cfg.paths >= 2, "need at least two paths");
    XCCY_INPUT_REQUIRE(cfg.step > 0.0, "step must be positive");
    XCCY_INPUT_REQUIRE(view.horizon >= 0.0 && view.tau > 0.0 && view.fx_forward > 0.0,
                       "bad renotioning period state");
    XCCY_INPUT_REQUIRE(std::abs(slice.rho) <= 1.0 && slice.eta >= 0.0 && slice.sigma >= 0.0,
                       "bad model slice");

    const double beta = slice.beta_or_default(view);
    const double shift = slice.delta + beta;
    const double tau = view.tau;
    const double e0 = view.discount_rate;
    const double x0 = view.fx_forward;
    XCCY_REQUIRE(1.0 + tau * e0 > 0.0, "degenerate initial discount ratio: 1 + tau*E <= 0");

    const std::uint64_t streams = cfg.antithetic ? cfg.paths / 2 : cfg.paths;
    XCCY_INPUT_REQUIRE(streams >= 1, "path budget too small for the antithetic setting");

    const std::uint64_t nsteps =
        view.horizon == 0.0 ? 0 : static_cast<std::uint64_t>(std::ceil(view.horizon / cfg.step - 1e-12));
    const double dt = nsteps == 0 ? 0.0 : view.horizon / static_cast<double>(nsteps);
    const double sqdt = std::sqrt(dt);
    const KernelCoeffs co = make_coeffs(side, route, slice.sigma, slice.eta, slice.rho);
    const double svol = slice.sigma * sqdt;
    const double evol = slice.eta * sqdt;
    const double rho = slice.rho;
    const double rho_c = std::sqrt(std::max(0.0, 1.0 - rho * rho));
    const double ln_x0 = std::log(x0);
    const double den0 = 1.0 + tau * e0;

    std::vector<double> v_fx(streams), v_fxlibor(streams), v_weight(streams);
    std::vector<unsigned char> valid(streams, 0);
    std::atomic<std::uint64_t> rejected_total{0};

    const int threads = resolve_threads(cfg, streams);
    const int legs = cfg.antithetic ? 2 : 1;

    parallel_for(streams, threads, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t rejected = 0;
        std::vector<double> zbuf(std::max<std::uint64_t>(1, 2 * nsteps));
        for (std::uint64_t p = lo; p < hi; ++p) {
            double acc_fx = 0.0, acc_fxl = 0.0, acc_w = 0.0;
            bool ok = true;
            for (std::uint64_t n = 0; n < nsteps; ++n)
                normal_pair(cfg.seed, p, n, zbuf[2 * n], zbuf[2 * n + 1]);
            for (int leg = 0; leg < legs && ok; ++leg) {
                const double sign = leg == 0 ? 1.0 : -1.0;
                double e = e0;
                double ln_x = ln_x0;
                for (std::uint64_t n = 0; n < nsteps; ++n) {
                    const double z1 = sign * zbuf[2 * n];
                    const double zx = rho * z1 + rho_c * sign * zbuf[2 * n + 1];
                    const double den = 1.0 + tau * e;
                    if (den <= 0.0) {
                        ok = false;
                        break;
                    }
                    const double y = e + shift;
                    const double r = tau * y / den;
                    ln_x += (co.x0 + co.x1 * r) * dt + svol * zx;
                    e += (co.d1 * y + co.d2 * y * r) * dt + evol * y * z1;
                }
                if (!ok || 1.0 + tau * e <= 0.0) {
                    ok = false;
                    break;
                }
                const double x = std::exp(ln_x);
                const double libor = e + beta;
                double w = 1.0;
                if (co.weighted) {
                    w = co.side == MtmSide::Domestic ? den0 / (1.0 + tau * e)
                                                     : (x / x0) * den0 / (1.0 + tau * e);
                }
                const double p_fx = co.side == MtmSide::Domestic ? x : 1.0 / x;
                acc_fx += w * p_fx;
                acc_fxl += w * p_fx * libor;
                acc_w += w;
            }
            if (ok) {
                const double inv = 1.0 / legs;
                v_fx[p] = acc_fx * inv;
                v_fxlibor[p] = acc_fxl * inv;
                v_weight[p] = acc_w * inv;
                valid[p] = 1;
            } else {
                rejected += legs;
            }
        }
        rejected_total.fetch_add(rejected, std::memory_order_relaxed);
    });

    MtmSimResult res;
    res.rejected_trajectories = rejected_total.load();
    const double total = static_cast<double>(streams) * legs;
    if (static_cast<double>(res.rejected_trajectories) > 0.001 * total)
        throw SolverError("path rejection rate above 0.1%: " + std::to_string(res.rejected_trajectories) + " of " +
                          std::to_string(static_cast<std::uint64_t>(total)) + " trajectories");

    // deterministic compaction in stream order, then pairwise reduction
    std::vector<double> c_fx, c_fxl, c_w;
    c_fx.reserve(streams);
    c_fxl.reserve(streams);
    c_w.reserve(streams);
    for (std::uint64_t p = 0; p < streams; ++p) {
        if (valid[p]) {
            c_fx.push_back(v_fx[p]);
            c_fxl.push_back(v_fxlibor[p]);
            c_w.push_back(v_weight[p]);
        }
    }
    res.samples = c_fx.size();
    XCCY_REQUIRE(res.samples > 1, "all paths rejected");

    res.fx_term = reduce(c_fx);
    res.fx_libor_term = reduce(c_fxl);
    res.weight = reduce(c_w);
    return res;
}

Estimate estimate_gamma(double fx_vol, double spread_vol, double rho, double t, const SimConfig& cfg) {
    XCCY_INPUT_REQUIRE(fx_vol >= 0.0 && spread_vol >= 0.0 && std::abs(rho) <= 1.0 && t >= 0.0,
                       "bad convexity model inputs");
    XCCY_INPUT_REQUIRE(cfg.paths >= 2, "need at least two paths");
    const std::uint64_t streams = cfg.antithetic ? cfg.paths / 2 : cfg.paths;
    const std::uint64_t n_batches = std::min<std::uint64_t>(64, streams);
    const std::uint64_t batch = streams / n_batches;
    XCCY_INPUT_REQUIRE(batch >= 1, "path budget too small");

    const double sx = fx_vol * std::sqrt(t);
    const double sd = spread_vol * std::sqrt(t);
    const double rho_c = std::sqrt(std::max(0.0, 1.0 - rho * rho));
    const int legs = cfg.antithetic ? 2 : 1;

    std::vector<double> gammas(n_batches, 0.0);
    const int threads = resolve_threads(cfg, n_batches);
    parallel_for(n_batches, threads, [&](std::uint64_t blo, std::uint64_t bhi) {
        for (std::uint64_t b = blo; b < bhi; ++b) {
            double s_chi = 0.0, s_d = 0.0, s_chid = 0.0;
            for (std::uint64_t i = 0; i < batch; ++i) {
                const std::uint64_t p = b * batch + i;
                double z1, z2;
                normal_pair(cfg.seed ^ 0x67616d6dULL, p, 0, z1, z2);
                for (int leg = 0; leg < legs; ++leg) {
                    const double sign = leg == 0 ? 1.0 : -1.0;
                    const double zf = sign * (rho * z1 + rho_c * z2);
                    const double chi = std::exp(sx * sign * z1 - 0.5 * sx * sx);
                    const double d = std::exp(sd * zf - 0.5 * sd * sd);
                    s_chi += chi;
                    s_d += d;
                    s_chid += chi * d;
                }
            }
            const double m = static_cast<double>(batch * legs);
            const double mean_chi = s_chi / m, mean_d = s_d / m, mean_chid = s_chid / m;
            gammas[b] = (mean_chid - mean_chi * mean_d) / mean_d; // X normalized to 1
        }
    });

    return reduce(gammas);
}

RiskFreeSpec RiskFreeSpec::flat(double r, double cf, double bf, double e) {
    return RiskFreeSpec{[r](double) { return r; }, [cf](double) { return cf; }, [bf](double) { return bf; },
                        [e](double) { return e; }};
}

double replicate_foreign_collateral_carry(const RiskFreeSpec& spec, double dt, double horizon) {
    XCCY_INPUT_REQUIRE(dt > 0.0 && horizon > 0.0, "need positive step and horizon");
    XCCY_INPUT_REQUIRE(spec.risk_free && spec.collateral_foreign && spec.basis && spec.overnight,
                       "all four deterministic rate curves are required");
    const std::uint64_t n = static_cast<std::uint64_t>(std::llround(horizon / dt));
    XCCY_INPUT_REQUIRE(n >= 1, "horizon shorter than one step");
    const double h = horizon / static_cast<double>(n);
    // 2-point Gauss-Legendre nodes on [0,1]
    const double g1 = 0.5 - 0.5 / std::sqrt(3.0);
    const double g2 = 0.5 + 0.5 / std::sqrt(3.0);
    double dividends = 0.0;
    for (std::uint64_t k = 0; k < n; ++k) {
        const double t = k * h;
        auto integral = [&](const std::function<double(double)>& f) {
            return 0.5 * h * (f(t + g1 * h) + f(t + g2 * h));
        };
        // roll the FX swap and the risk-free zero-coupon bond over [t, t+h]:
        // what is left after funding the remunerated account is the dividend
        const double carry_df = std::exp(-(integral(spec.risk_free) + integral(spec.basis) - integral(spec.overnight)));
        dividends += 1.0 - carry_df * (1.0 + spec.collateral_foreign(t) * h);
    }
    return dividends / horizon;
}

std::vector<SweepRow> validate_closed_forms(const SweepConfig& grid, const SimConfig& cfg) {
    std::vector<SweepRow> rows;
    auto z_score = [](double closed, const Estimate& est) {
        const double diff = closed - est.mean;
        if (est.std_error == 0.0)
            return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
        return diff / est.std_error;
    };
    for (double t : grid.horizons)
        for (double sigma : grid.sigmas)
            for (double eta : grid.etas)
                for (double rho : grid.rhos) {
                    MtmPeriodView view;
                    view.horizon = t;
                    view.tau = grid.tau;
                    view.discount_rate = grid.discount_rate;
                    view.forward_libor = grid.discount_rate + grid.beta;
                    view.fx_forward = grid.fx_forward;
                    ModelSlice slice;
                    slice.delta = grid.delta;
                    slice.eta = eta;
                    slice.sigma = sigma;
                    slice.rho = rho;
                    slice.beta = grid.beta;

                    const MtmAdjustment dom = adjust_domestic_mtm(view, slice);
                    const MtmAdjustment fgn = adjust_foreign_mtm(view, slice);
                    const MtmSimResult sim_d = simulate_mtm_expectations(MtmSide::Domestic, view, slice, cfg);
                    const MtmSimResult sim_f = simulate_mtm_expectations(MtmSide::Foreign, view, slice, cfg);

                    rows.push_back({sigma, eta, rho, t, "delayed_fx", dom.delayed_fx, sim_d.fx_term.mean,
                                    sim_d.fx_term.std_error, z_score(dom.delayed_fx, sim_d.fx_term)});
                    rows.push_back({sigma, eta, rho, t, "fx_times_libor", dom.fx_times_libor,
                                    sim_d.fx_libor_term.mean, sim_d.fx_libor_term.std_error,
                                    z_score(dom.fx_times_libor, sim_d.fx_libor_term)});
                    rows.push_back({sigma, eta, rho, t, "delayed_inv_fx", fgn.delayed_fx, sim_f.fx_term.mean,
                                    sim_f.fx_term.std_error, z_score(fgn.delayed_fx, sim_f.fx_term)});
                    rows.push_back({sigma, eta, rho, t, "invfx_times_libor", fgn.fx_times_libor,
                                    sim_f.fx_libor_term.mean, sim_f.fx_libor_term.std_error,
                                    z_score(fgn.fx_times_libor, sim_f.fx_libor_term)});
                }
    return rows;
}

double max_abs_z(const std::vector<SweepRow>& rows) {
    double m = 0.0;
    for (const auto& r : rows)
        m = std::max(m, std::abs(r.z));
    return m;
}

std::string sweep_report_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "sigma,eta,rho,T,target,closed_form,mc_mean,mc_se,z\n";
    char buf[256];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.4g,%.4g,%.4g,%.4g,%s,%.12g,%.12g,%.6g,%.4f\n", r.sigma, r.eta, r.rho,
                      r.horizon, r.target.c_str(), r.closed_form, r.mc_mean, r.mc_se, r.z);
        out << buf;
    }
    return out.str();
}

} // namespace xccy::mc
