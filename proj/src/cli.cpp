#include "xccy/cli.hpp"

#include "xccy/bootstrap.hpp"
#include "xccy/errors.hpp"
#include "xccy/io.hpp"
#include "xccy/mc.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>

namespace xccy::cli {

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kCalibrationFailure = 2;
constexpr int kInputError = 3;
constexpr int kOracleBreach = 4;

std::string out_path(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

void ensure_out_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    XCCY_INPUT_REQUIRE(!ec, "cannot create output directory '" << dir << "'");
}

void write_manifest(const RunManifest& m) {
    write_text_file(out_path(m.out_dir, "manifest.json"), m.to_json().dump(2) + "\n");
}

std::string fits_csv(const BootstrapResult& r) {
    std::ostringstream os;
    os << "instrument,maturity,time,npv\n";
    char buf[160];
    for (const auto& f : r.fits) {
        std::snprintf(buf, sizeof buf, "%s,%s,%.9f,%.3e\n", f.instrument.c_str(), f.maturity.to_string().c_str(),
                      f.time, f.npv);
        os << buf;
    }
    return os.str();
}

int cmd_bootstrap(const std::string& quotes_path, const std::string& curves_path, const std::string& out_dir,
                  const std::string& target, const std::string& domestic_flag, double tolerance,
                  std::uint64_t seed) {
    const MarketFile mf = load_market(curves_path);
    const std::string domestic = domestic_flag.empty() ? mf.data.reference_currency : domestic_flag;
    const auto quotes = load_quotes_file(quotes_path);

    BootstrapConfig cfg;
    cfg.target_currency = target;
    cfg.tolerance = tolerance;

    RunManifest manifest;
    manifest.command = "bootstrap";
    manifest.asof = mf.data.asof.to_string();
    manifest.add_input(quotes_path);
    manifest.add_input(curves_path);
    manifest.out_dir = out_dir;
    manifest.seed = seed;
    manifest.config = {{"domestic", domestic},
                       {"target", target},
                       {"tolerance", tolerance},
                       {"frequency_months", cfg.frequency_months}};
    ensure_out_dir(out_dir);
    write_manifest(manifest);

    FxSystem fx = system_from_market(mf, domestic);
    const BootstrapResult result = bootstrap_implied_curve(quotes, cfg, fx);

    save_curve(out_path(out_dir, "implied_" + result.currency + "_" + result.collateral + "coll.json"), result.curve);
    write_text_file(out_path(out_dir, "roundtrip.csv"), fits_csv(result));
    std::printf("bootstrapped %s funding curve under %s collateral: %zu pillars, worst |NPV| %.3e\n",
                result.currency.c_str(), result.collateral.c_str(), result.curve.times().size(), result.worst_fit());
    for (const auto& f : result.fits)
        std::printf("  %-14s NPV % .3e\n", f.instrument.c_str(), f.npv);
    return kOk;
}

int cmd_price(const std::string& instrument_path, const std::string& curves_path, const std::string& mode_tag,
              const std::string& params_path, const std::string& domestic_flag, const std::string& out_dir,
              std::uint64_t seed, bool spread_only) {
    const MarketFile mf = load_market(curves_path);
    const std::string domestic = domestic_flag.empty() ? mf.data.reference_currency : domestic_flag;
    const PricingMode mode = parse_pricing_mode(mode_tag);
    const InstrumentFile inst = load_instrument(instrument_path);

    MarketModelParams params;
    const bool have_params = !params_path.empty();
    if (have_params)
        params = load_params(params_path);
    XCCY_INPUT_REQUIRE(mode == PricingMode::Effective || have_params,
                       "adjusted mode needs --params with the market model parameters");

    RunManifest manifest;
    manifest.command = spread_only ? "par-spread" : "price";
    manifest.asof = mf.data.asof.to_string();
    manifest.add_input(instrument_path);
    manifest.add_input(curves_path);
    if (have_params)
        manifest.add_input(params_path);
    manifest.out_dir = out_dir;
    manifest.seed = seed;
    manifest.config = {{"domestic", domestic}, {"mode", mode_tag}};

    const FxSystem fx = system_from_market(mf, domestic);
    json report{{"mode", mode_tag}, {"domestic", domestic}};
    if (inst.fx_swap) {
        const double npv = price_fx_swap(*inst.fx_swap, fx);
        report["npv"] = npv;
        std::printf("fx-swap NPV (%s): %.10g\n", domestic.c_str(), npv);
    } else {
        const MarketModelParams* p = have_params ? &params : nullptr;
        const double npv = price_ccs(*inst.ccs, fx, mode, p);
        const double par = par_spread(*inst.ccs, fx, mode, p);
        report["npv"] = npv;
        report["par_spread"] = par;
        if (spread_only)
            std::printf("par spread: %.10g (%.4f bp)\n", par, par * 1e4);
        else
            std::printf("NPV (%s): %.10g   par spread: %.10g\n", domestic.c_str(), npv, par);
    }
    if (!out_dir.empty()) {
        ensure_out_dir(out_dir);
        write_manifest(manifest);
        write_text_file(out_path(out_dir, spread_only ? "par_spread.json" : "price.json"), report.dump(2) + "\n");
    }
    return kOk;
}

int cmd_triplet_check(const std::vector<std::string>& quote_paths, const std::string& curves_path,
                      const std::string& scheme, const std::string& base_flag, const std::string& out_dir,
                      std::uint64_t seed) {
    XCCY_INPUT_REQUIRE(scheme == "a" || scheme == "b", "scheme must be 'a' or 'b', got '" << scheme << "'");
    XCCY_INPUT_REQUIRE(quote_paths.size() == 2, "triplet-check needs exactly two --quotes files (hub/base, hub/third)");
    const MarketFile mf = load_market(curves_path);
    const std::string base = base_flag.empty() ? mf.data.reference_currency : base_flag;
    const auto q1 = load_quotes_file(quote_paths[0]);
    const auto q2 = load_quotes_file(quote_paths[1]);
    XCCY_INPUT_REQUIRE(!q1.empty() && !q2.empty(), "no calibration instruments");

    // hub = the currency both quote sets share; third = its partner in set 2
    auto pair_of = [](const std::vector<Quote>& qs) {
        for (const auto& q : qs)
            if (q.pair.size() == 6)
                return std::make_pair(q.first_currency(), q.second_currency());
        throw InputError("quote set has no currency-pair instruments");
    };
    const auto [a1, b1] = pair_of(q1);
    const auto [a2, b2] = pair_of(q2);
    const std::string hub = (a2 == a1 || a2 == b1) ? a2 : b2;
    XCCY_INPUT_REQUIRE(hub == a1 || hub == b1, "quote sets share no hub currency");
    const std::string third = hub == a2 ? b2 : a2;

    RunManifest manifest;
    manifest.command = "triplet-check";
    manifest.asof = mf.data.asof.to_string();
    manifest.add_input(quote_paths[0]);
    manifest.add_input(quote_paths[1]);
    manifest.add_input(curves_path);
    manifest.out_dir = out_dir;
    manifest.seed = seed;
    manifest.config = {{"scheme", scheme}, {"base", base}, {"hub", hub}, {"third", third}};
    ensure_out_dir(out_dir);
    write_manifest(manifest);

    BootstrapConfig cfg;
    const auto grid = default_triplet_grid();
    const TripletSchemeA sa = triplet_scheme_a(q1, q2, mf.data, base, cfg);
    const TripletSchemeB sb = triplet_scheme_b(q1, q2, mf.data, base, cfg, grid);
    const auto rows = compare_triplet(sa, sb, mf.data, hub, base, third, grid, cfg);

    write_text_file(out_path(out_dir, "triplet.csv"), triplet_report_csv(rows));
    save_curve(out_path(out_dir, "implied_" + third + "_" + base + "coll_scheme_" + scheme + ".json"),
               scheme == "a" ? sa.third_curve : sb.third_curve);
    std::printf("%s", triplet_report_csv(rows).c_str());
    return kOk;
}

int cmd_convexity_check(const std::string& params_path, const std::string& out_dir, std::uint64_t paths,
                        std::uint64_t seed, double step, int threads) {
    mc::SweepConfig grid;
    RunManifest manifest;
    manifest.command = "convexity-check";
    if (!params_path.empty()) {
        grid = sweep_config_from_json(json::parse(read_text_file(params_path)));
        manifest.add_input(params_path);
    }
    mc::SimConfig cfg;
    cfg.paths = paths;
    cfg.seed = seed;
    cfg.step = step;
    cfg.threads = threads;

    manifest.out_dir = out_dir;
    manifest.seed = seed;
    manifest.config = {{"paths", paths}, {"step", step}, {"tau", grid.tau}, {"discount_rate", grid.discount_rate}};
    ensure_out_dir(out_dir);
    write_manifest(manifest);

    const auto rows = mc::validate_closed_forms(grid, cfg);
    write_text_file(out_path(out_dir, "convexity_z.csv"), mc::sweep_report_csv(rows));
    const double worst = mc::max_abs_z(rows);
    std::printf("%zu grid points, max |z| = %.3f\n", rows.size(), worst);
    if (worst > 3.0) {
        std::fprintf(stderr, "closed-form adjustment outside 3 standard errors of the exact simulation\n");
        return kOracleBreach;
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"multi-currency collateral-aware curve and cross-currency swap engine"};
    app.require_subcommand(1);

    std::string quotes_path, curves_path, instrument_path, params_path, out_dir = "out";
    std::string mode = "effective", scheme = "a", target, domestic, asof;
    std::vector<std::string> quote_paths;
    double tolerance = 1e-10, step = 1.0 / 12;
    std::uint64_t seed = 42, paths = 1000000;
    int threads = 0;

    auto* boot = app.add_subcommand("bootstrap", "strip an implied funding curve from FX swaps and CCS");
    boot->add_option("--quotes", quotes_path, "quote CSV")->required();
    boot->add_option("--curves", curves_path, "market JSON")->required();
    boot->add_option("--out", out_dir, "output directory");
    boot->add_option("--target", target, "currency to imply (default: inferred)");
    boot->add_option("--domestic", domestic, "domestic/collateral currency (default: market reference)");
    boot->add_option("--asof", asof, "valuation date override (must match the market file)");
    boot->add_option("--tol", tolerance, "round-trip NPV tolerance");
    boot->add_option("--seed", seed, "manifest seed");

    auto* price = app.add_subcommand("price", "price an instrument file");
    price->add_option("--instrument", instrument_path)->required();
    price->add_option("--curves", curves_path)->required();
    price->add_option("--mode", mode, "effective|adjusted");
    price->add_option("--params", params_path, "market model parameters JSON");
    price->add_option("--domestic", domestic);
    price->add_option("--asof", asof);
    price->add_option("--out", out_dir);
    price->add_option("--seed", seed);

    auto* spread = app.add_subcommand("par-spread", "solve the quoted-leg par spread");
    spread->add_option("--instrument", instrument_path)->required();
    spread->add_option("--curves", curves_path)->required();
    spread->add_option("--mode", mode);
    spread->add_option("--params", params_path);
    spread->add_option("--domestic", domestic);
    spread->add_option("--asof", asof);
    spread->add_option("--out", out_dir);
    spread->add_option("--seed", seed);

    auto* triplet = app.add_subcommand("triplet-check", "compare triangulation schemes on a currency triplet");
    triplet->add_option("--quotes", quote_paths, "two quote CSVs: hub/base then hub/third")->expected(1, 2);
    triplet->add_option("--curves", curves_path)->required();
    triplet->add_option("--scheme", scheme, "which scheme's curve to export (a|b)");
    triplet->add_option("--base", domestic, "collateral currency of the comparison");
    triplet->add_option("--asof", asof);
    triplet->add_option("--out", out_dir);
    triplet->add_option("--seed", seed);

    auto* conv = app.add_subcommand("convexity-check", "closed-form vs exact-simulation z-score sweep");
    conv->add_option("--params", params_path, "sweep grid JSON (optional)");
    conv->add_option("--paths", paths, "Monte Carlo paths");
    conv->add_option("--step", step, "Euler step in years");
    conv->add_option("--seed", seed);
    conv->add_option("--threads", threads, "worker threads (0 = hardware); results do not depend on it");
    conv->add_option("--out", out_dir);

    std::vector<const char*> argv;
    argv.push_back("xccy");
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (boot->parsed())
            return cmd_bootstrap(quotes_path, curves_path, out_dir, target, domestic, tolerance, seed);
        if (price->parsed())
            return cmd_price(instrument_path, curves_path, mode, params_path, domestic, out_dir, seed, false);
        if (spread->parsed())
            return cmd_price(instrument_path, curves_path, mode, params_path, domestic, out_dir, seed, true);
        if (triplet->parsed())
            return cmd_triplet_check(quote_paths, curves_path, scheme, domestic, out_dir, seed);
        if (conv->parsed())
            return cmd_convexity_check(params_path, out_dir, paths, seed, step, threads);
    } catch (const SolverError& e) {
        std::fprintf(stderr, "calibration error: %s\n", e.what());
        return kCalibrationFailure;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kInputError;
    }
    return kInputError;
}

} // namespace xccy::cli
