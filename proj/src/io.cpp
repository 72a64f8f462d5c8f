#include "xccy/io.hpp"

#include "xccy/errors.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace xccy {

using nlohmann::json;

namespace {

json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    XCCY_INPUT_REQUIRE(in.good(), "cannot open '" << path << "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::vector<double> number_or_array(const json& j, const char* name) {
    try {
        if (j.is_array())
            return j.get<std::vector<double>>();
        return {j.get<double>()};
    } catch (const json::exception& e) {
        throw InputError(std::string("field '") + name + "': " + e.what());
    }
}

} // namespace

json curve_to_json(const Curve& curve) {
    json pillars = json::array();
    for (std::size_t i = 0; i < curve.times().size(); ++i)
        pillars.push_back({{"t", curve.times()[i]}, {"df", curve.dfs()[i]}});
    return json{{"asof", curve.asof().to_string()}, {"interp", to_string(curve.interp())}, {"pillars", pillars}};
}

Curve curve_from_json(const json& j) {
    try {
        const Date asof = Date::parse(j.at("asof").get<std::string>());
        const CurveInterp interp =
            j.contains("interp") ? parse_curve_interp(j.at("interp").get<std::string>()) : CurveInterp::LogLinearDf;
        std::vector<double> times, dfs;
        for (const auto& p : j.at("pillars")) {
            times.push_back(p.at("t").get<double>());
            dfs.push_back(p.at("df").get<double>());
        }
        return Curve(asof, std::move(times), std::move(dfs), interp);
    } catch (const json::exception& e) {
        throw InputError(std::string("bad curve JSON: ") + e.what());
    }
}

void save_curve(const std::string& path, const Curve& curve) { write_text_file(path, curve_to_json(curve).dump(2) + "\n"); }

Curve load_curve(const std::string& path) { return curve_from_json(parse_json_file(path)); }

MarketFile load_market(const std::string& path) {
    const json j = parse_json_file(path);
    MarketFile mf;
    try {
        mf.data.asof = Date::parse(j.at("asof").get<std::string>());
        mf.data.reference_currency = j.at("reference").get<std::string>();
        if (j.contains("spots"))
            for (const auto& [ccy, v] : j.at("spots").items())
                mf.data.spots[ccy] = v.get<double>();
        for (const auto& [ccy, block] : j.at("curves").items()) {
            if (block.contains("overnight"))
                mf.data.overnight.emplace(ccy, curve_from_json(block.at("overnight")));
            if (block.contains("forwarding"))
                mf.data.forwarding.emplace(ccy, curve_from_json(block.at("forwarding")));
            if (block.contains("funding"))
                mf.funding.emplace(ccy, curve_from_json(block.at("funding")));
        }
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
    XCCY_INPUT_REQUIRE(mf.data.overnight.count(mf.data.reference_currency),
                       path << ": reference currency has no overnight curve");
    return mf;
}

json market_to_json(const MarketFile& mf) {
    json curves = json::object();
    for (const auto& [ccy, c] : mf.data.overnight)
        curves[ccy]["overnight"] = curve_to_json(c);
    for (const auto& [ccy, c] : mf.data.forwarding)
        curves[ccy]["forwarding"] = curve_to_json(c);
    for (const auto& [ccy, c] : mf.funding)
        curves[ccy]["funding"] = curve_to_json(c);
    json spots = json::object();
    for (const auto& [ccy, v] : mf.data.spots)
        spots[ccy] = v;
    return json{{"asof", mf.data.asof.to_string()},
                {"reference", mf.data.reference_currency},
                {"spots", spots},
                {"curves", curves}};
}

FxSystem system_from_market(const MarketFile& mf, const std::string& domestic) {
    FxSystem fx = make_system(mf.data, domestic);
    if (domestic == mf.data.reference_currency)
        for (const auto& [ccy, curve] : mf.funding)
            fx.set_discount(ccy, curve);
    return fx;
}

MarketModelParams params_from_json(const json& j) {
    MarketModelParams p;
    try {
        if (j.contains("domestic")) {
            const json& d = j.at("domestic");
            if (d.contains("delta"))
                p.delta = number_or_array(d.at("delta"), "delta");
            if (d.contains("eta"))
                p.eta = number_or_array(d.at("eta"), "eta");
            if (d.contains("sigma"))
                p.sigma = number_or_array(d.at("sigma"), "sigma");
            if (d.contains("rho_fx_libor"))
                p.rho_fx_libor = number_or_array(d.at("rho_fx_libor"), "rho_fx_libor");
            if (d.contains("beta"))
                p.beta = number_or_array(d.at("beta"), "beta");
        }
        if (j.contains("foreign")) {
            const json& f = j.at("foreign");
            if (f.contains("delta"))
                p.delta_f = number_or_array(f.at("delta"), "delta");
            if (f.contains("eta"))
                p.eta_f = number_or_array(f.at("eta"), "eta");
            if (f.contains("sigma"))
                p.sigma = number_or_array(f.at("sigma"), "sigma");
            if (f.contains("rho_fx_libor"))
                p.rho_fx_libor_f = number_or_array(f.at("rho_fx_libor"), "rho_fx_libor");
            if (f.contains("beta"))
                p.beta_f = number_or_array(f.at("beta"), "beta");
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("bad params JSON: ") + e.what());
    }
    p.validate();
    return p;
}

MarketModelParams load_params(const std::string& path) { return params_from_json(parse_json_file(path)); }

namespace {

CcsLeg leg_from_json(const json& j) {
    try {
        const json& s = j.at("schedule");
        Schedule schedule = build_schedule(Date::parse(s.at("start").get<std::string>()),
                                           Date::parse(s.at("end").get<std::string>()),
                                           s.value("frequency_months", 3),
                                           parse_day_count(s.value("day_count", std::string("ACT/360"))));
        CcsLeg leg{j.at("currency").get<std::string>(), std::move(schedule)};
        leg.notional = j.value("notional", 1.0);
        leg.notional_kind = j.value("mtm", false) ? NotionalKind::MarkedToMarket : NotionalKind::Constant;
        const std::string rate = j.value("rate", std::string("float"));
        XCCY_INPUT_REQUIRE(rate == "float" || rate == "fixed", "leg rate must be 'float' or 'fixed'");
        leg.rate_kind = rate == "fixed" ? RateKind::Fixed : RateKind::Floating;
        leg.spread = j.value("spread", 0.0);
        leg.fixed_rate = j.value("fixed_rate", 0.0);
        leg.pay = j.value("pay", false);
        leg.quoted_spread_leg = j.value("quoted_spread", false);
        return leg;
    } catch (const json::exception& e) {
        throw InputError(std::string("bad leg JSON: ") + e.what());
    }
}

} // namespace

InstrumentFile load_instrument(const std::string& path) {
    const json j = parse_json_file(path);
    InstrumentFile f;
    try {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "fx-swap") {
            FxSwapInstrument s;
            s.foreign_currency = j.at("foreign").get<std::string>();
            s.maturity = Date::parse(j.at("maturity").get<std::string>());
            s.contract_rate = j.at("contract_rate").get<double>();
            s.notional = j.value("notional", 1.0);
            f.fx_swap = s;
        } else if (kind == "mtm-ccs" || kind == "cn-ccs") {
            const json& legs = j.at("legs");
            XCCY_INPUT_REQUIRE(legs.is_array() && legs.size() == 2, "instrument needs exactly two legs");
            CcsInstrument ccs{leg_from_json(legs[0]), leg_from_json(legs[1])};
            ccs.validate();
            f.ccs = ccs;
        } else {
            throw InputError("unknown instrument kind '" + kind + "'");
        }
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
    return f;
}

mc::SweepConfig sweep_config_from_json(const json& j) {
    mc::SweepConfig g;
    try {
        if (j.contains("sigmas"))
            g.sigmas = j.at("sigmas").get<std::vector<double>>();
        if (j.contains("etas"))
            g.etas = j.at("etas").get<std::vector<double>>();
        if (j.contains("rhos"))
            g.rhos = j.at("rhos").get<std::vector<double>>();
        if (j.contains("horizons"))
            g.horizons = j.at("horizons").get<std::vector<double>>();
        g.tau = j.value("tau", g.tau);
        g.discount_rate = j.value("discount_rate", g.discount_rate);
        g.delta = j.value("delta", g.delta);
        g.beta = j.value("beta", g.beta);
        g.fx_forward = j.value("fx_forward", g.fx_forward);
    } catch (const json::exception& e) {
        throw InputError(std::string("bad sweep config: ") + e.what());
    }
    return g;
}

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    XCCY_INPUT_REQUIRE(in.good(), "cannot open '" << path << "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    XCCY_INPUT_REQUIRE(out.good(), "cannot write '" << path << "'");
    out << content;
}

void RunManifest::add_input(const std::string& path) { inputs.emplace_back(path, fnv1a_hex(read_text_file(path))); }

json RunManifest::to_json() const {
    json in = json::array();
    for (const auto& [path, digest] : inputs)
        in.push_back({{"path", path}, {"digest", digest}});
    json j{{"command", command}, {"asof", asof},         {"inputs", in},
           {"out", out_dir},     {"seed", seed},         {"config", config}};
    j["digest"] = fnv1a_hex(j.dump());
    return j;
}

std::string RunManifest::digest() const { return to_json().at("digest").get<std::string>(); }

} // namespace xccy
