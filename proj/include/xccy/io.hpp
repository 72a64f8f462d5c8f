#pragma once

#include "xccy/bootstrap.hpp"
#include "xccy/convexity.hpp"
#include "xccy/curve.hpp"
#include "xccy/instruments.hpp"
#include "xccy/market.hpp"
#include "xccy/mc.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace xccy {

nlohmann::json curve_to_json(const Curve& curve);
Curve curve_from_json(const nlohmann::json& j);

void save_curve(const std::string& path, const Curve& curve);
Curve load_curve(const std::string& path);

/// Market file: shared single-currency inputs.
/// { "asof": "YYYY-MM-DD", "reference": "EUR",
///   "spots": { "USD": 0.7628, ... },
///   "curves": { "EUR": { "overnight": {...}, "forwarding": {...}, "funding": {...} }, ... } }
/// The optional per-currency "funding" entry carries an already-bootstrapped
/// implied curve under the reference currency's collateral.
struct MarketFile {
    MarketData data;
    std::map<std::string, Curve> funding; // implied curves under reference-collateral
};
MarketFile load_market(const std::string& path);
nlohmann::json market_to_json(const MarketFile& mf);

/// Builds the viewpoint system and grafts any funding curves onto it.
FxSystem system_from_market(const MarketFile& mf, const std::string& domestic);

MarketModelParams params_from_json(const nlohmann::json& j);
MarketModelParams load_params(const std::string& path);

/// Instrument descriptor:
/// { "kind": "mtm-ccs" | "cn-ccs",
///   "legs": [ { "currency": "USD", "notional": 1.0, "mtm": true, "pay": true,
///               "rate": "float" | "fixed", "spread": 0.0, "fixed_rate": 0.0,
///               "quoted_spread": false,
///               "schedule": { "start": "...", "end": "...", "frequency_months": 3,
///                             "day_count": "ACT/360" } }, ... ] }
/// or { "kind": "fx-swap", "foreign": "USD", "maturity": "...",
///      "contract_rate": 1.3, "notional": 1.0 }
struct InstrumentFile {
    std::optional<CcsInstrument> ccs;
    std::optional<FxSwapInstrument> fx_swap;
};
InstrumentFile load_instrument(const std::string& path);

mc::SweepConfig sweep_config_from_json(const nlohmann::json& j);

/// Reproducibility anchor: the resolved configuration of a run, including
/// content digests of every input file. Identical digests mean byte-identical
/// outputs regardless of thread count.
struct RunManifest {
    std::string command;
    std::string asof;
    std::vector<std::pair<std::string, std::string>> inputs; // path, content digest
    std::string out_dir;
    std::uint64_t seed = 42;
    nlohmann::json config;

    void add_input(const std::string& path);
    std::string digest() const;
    nlohmann::json to_json() const;
};

/// FNV-1a 64-bit over a string, hex-encoded.
std::string fnv1a_hex(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace xccy
