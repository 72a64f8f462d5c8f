#include "xccy/quotes.hpp"

#include "xccy/errors.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace xccy {

QuoteKind parse_quote_kind(const std::string& tag) {
    if (tag == "fx-spot")
        return QuoteKind::FxSpot;
    if (tag == "fx-swap")
        return QuoteKind::FxSwap;
    if (tag == "ois-swap")
        return QuoteKind::OisSwap;
    if (tag == "libor-swap")
        return QuoteKind::LiborSwap;
    if (tag == "cn-ccs")
        return QuoteKind::CnCcs;
    if (tag == "mtm-ccs")
        return QuoteKind::MtmCcs;
    throw InputError("unknown quote kind '" + tag + "'");
}

std::string to_string(QuoteKind kind) {
    switch (kind) {
    case QuoteKind::FxSpot:
        return "fx-spot";
    case QuoteKind::FxSwap:
        return "fx-swap";
    case QuoteKind::OisSwap:
        return "ois-swap";
    case QuoteKind::LiborSwap:
        return "libor-swap";
    case QuoteKind::CnCcs:
        return "cn-ccs";
    case QuoteKind::MtmCcs:
        return "mtm-ccs";
    }
    return "?";
}

std::string Quote::second_currency() const {
    XCCY_INPUT_REQUIRE(pair.size() == 6, "quote '" << pair << "' is not a currency pair");
    return pair.substr(3, 3);
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ','))
        out.push_back(trim(field));
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

bool valid_pair(const std::string& p) {
    if (p.size() != 3 && p.size() != 6)
        return false;
    for (char c : p)
        if (!std::isupper(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

std::vector<Quote> parse_quotes(const std::string& text) {
    std::vector<Quote> quotes;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        if (lineno == 1 && t.rfind("kind,", 0) == 0)
            continue; // header row
        const auto fields = split_csv(t);
        try {
            XCCY_INPUT_REQUIRE(fields.size() == 4 || fields.size() == 5,
                               "expected 4 or 5 fields, got " << fields.size());
            Quote q;
            q.kind = parse_quote_kind(fields[0]);
            q.pair = fields[1];
            XCCY_INPUT_REQUIRE(valid_pair(q.pair), "bad currency field '" << q.pair << "'");
            const bool pair_instrument = q.kind != QuoteKind::OisSwap && q.kind != QuoteKind::LiborSwap;
            XCCY_INPUT_REQUIRE(q.pair.size() == (pair_instrument ? 6u : 3u),
                               "'" << fields[0] << "' needs a " << (pair_instrument ? "currency pair" : "currency"));
            if (q.kind == QuoteKind::FxSpot) {
                XCCY_INPUT_REQUIRE(fields[2] == "spot", "fx-spot maturity field must be 'spot'");
            } else {
                q.maturity = Tenor::parse(fields[2]);
            }
            q.value = std::stod(fields[3]);
            if (q.kind == QuoteKind::FxSpot)
                XCCY_INPUT_REQUIRE(q.value > 0.0, "fx-spot rate must be positive");
            if (fields.size() == 5 && !fields[4].empty()) {
                XCCY_INPUT_REQUIRE(valid_pair(fields[4]) && fields[4].size() == 3,
                                   "bad collateral currency '" << fields[4] << "'");
                q.collateral_currency = fields[4];
            }
            quotes.push_back(std::move(q));
        } catch (const std::exception& e) {
            throw InputError("quote line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return quotes;
}

std::string serialize_quotes(const std::vector<Quote>& quotes) {
    std::ostringstream out;
    out << "kind,pair_or_ccy,maturity,value,collateral_ccy\n";
    for (const auto& q : quotes) {
        char val[32];
        std::snprintf(val, sizeof val, "%.17g", q.value);
        out << to_string(q.kind) << ',' << q.pair << ',' << (q.maturity ? q.maturity->to_string() : "spot") << ','
            << val << ',' << q.collateral_currency << '\n';
    }
    return out.str();
}

std::vector<Quote> load_quotes_file(const std::string& path) {
    std::ifstream in(path);
    XCCY_INPUT_REQUIRE(in.good(), "cannot open quote file '" << path << "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_quotes(ss.str());
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

} // namespace xccy
