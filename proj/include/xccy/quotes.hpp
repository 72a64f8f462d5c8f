#pragma once

#include "xccy/datetime.hpp"

#include <optional>
#include <string>
#include <vector>

namespace xccy {

enum class QuoteKind { FxSpot, FxSwap, OisSwap, LiborSwap, CnCcs, MtmCcs };

QuoteKind parse_quote_kind(const std::string& tag);
std::string to_string(QuoteKind kind);

/// One market quote. `pair` is "ABC" for single-currency instruments or
/// "ABCDEF" for FX/CCS pairs, read as: value converts (or references) one unit
/// of the first currency against the second. For fx-swap quotes the value is
/// the forward points delta = X - spot; for swaps and CCS it is the par
/// rate/spread in decimal units (-0.2650% -> -0.002650).
struct Quote {
    QuoteKind kind;
    std::string pair;                      // currency or currency pair
    std::optional<Tenor> maturity;         // absent only for fx-spot
    double value = 0.0;
    std::string collateral_currency;       // optional declared collateral

    std::string first_currency() const { return pair.substr(0, 3); }
    std::string second_currency() const;
};

/// Parses the quote CSV (kind,pair_or_ccy,maturity,value,collateral_ccy?).
/// Lines starting with '#' and blank lines are skipped; a leading header row
/// "kind,..." is tolerated. Malformed rows raise InputError with the line number.
std::vector<Quote> parse_quotes(const std::string& text);

std::string serialize_quotes(const std::vector<Quote>& quotes);

std::vector<Quote> load_quotes_file(const std::string& path);

} // namespace xccy
