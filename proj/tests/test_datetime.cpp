#include "xccy/datetime.hpp"
#include "xccy/errors.hpp"
#include "xccy/quotes.hpp"

#include <doctest.h>

#include <random>

using namespace xccy;

namespace {

// independent day counter: walk the calendar one day at a time
int enumerate_days(Date a, Date b) {
    int n = 0;
    while (a < b) {
        a = Date::from_serial(a.serial() + 1);
        ++n;
    }
    return n;
}

} // namespace

TEST_CASE("year fractions") {
    const Date d1(2013, 9, 6), d2(2013, 12, 5);
    CHECK(year_fraction(d1, d2, DayCount::Act360) == doctest::Approx(90.0 / 360).epsilon(1e-15));
    CHECK(year_fraction(d1, d1, DayCount::Act360) == 0.0);
    CHECK(year_fraction(d1, d1, DayCount::Act365F) == 0.0);

    const Date y2(2014, 9, 6);
    CHECK(enumerate_days(d1, y2) == 365);
    CHECK(year_fraction(d1, y2, DayCount::Act365F) == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(year_fraction(d2, d1, DayCount::Act360), InputError);
}

TEST_CASE("year fraction additivity on ordered triples") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> off(1, 2000);
    for (int k = 0; k < 200; ++k) {
        const Date a(2010, 1, 1);
        const Date b = Date::from_serial(a.serial() + off(rng));
        const Date c = Date::from_serial(b.serial() + off(rng));
        for (DayCount dc : {DayCount::Act360, DayCount::Act365F}) {
            const double lhs = year_fraction(a, b, dc) + year_fraction(b, c, dc);
            CHECK(lhs == doctest::Approx(year_fraction(a, c, dc)).epsilon(1e-14));
        }
    }
}

TEST_CASE("date round trips and month arithmetic") {
    const Date d = Date::parse("2013-09-06");
    CHECK(d.to_string() == "2013-09-06");
    CHECK(d.year() == 2013);
    CHECK(d.month() == 9);
    CHECK(d.day() == 6);
    CHECK(add_months(Date(2013, 1, 31), 1) == Date(2013, 2, 28));
    CHECK(add_months(Date(2016, 1, 31), 1) == Date(2016, 2, 29));
    CHECK(add_months(Date(2013, 3, 31), -1) == Date(2013, 2, 28));
    CHECK_THROWS_AS(Date::parse("2013/09/06"), InputError);
    CHECK_THROWS_AS(Date(2013, 2, 29), InputError);
}

TEST_CASE("schedule construction") {
    const Date t0(2013, 9, 6);

    SUBCASE("exact quarterly division") {
        const Schedule s = build_schedule(t0, add_months(t0, 24), 3);
        CHECK(s.periods() == 8);
        CHECK(s.start() == t0);
        CHECK(s.end() == add_months(t0, 24));
    }
    SUBCASE("single annual period") {
        CHECK(build_schedule(t0, add_months(t0, 12), 12).periods() == 1);
    }
    SUBCASE("short initial stub") {
        const Schedule s = build_schedule(t0, add_months(t0, 14), 3);
        CHECK(s.periods() == 5);
        CHECK(s.dates()[1] == add_months(t0, 2)); // 2m stub first
        CHECK(s.dates()[2] == add_months(t0, 5));
    }
    SUBCASE("ordering errors") {
        CHECK_THROWS_AS(build_schedule(t0, t0, 3), InputError);
        CHECK_THROWS_AS(build_schedule(add_months(t0, 1), t0, 3), InputError);
    }
}

TEST_CASE("schedule accruals sum to the full year fraction") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> months(1, 360), freq(1, 12);
    for (int k = 0; k < 100; ++k) {
        const Date t0(2013, 9, 6);
        const Date tn = add_months(t0, months(rng));
        for (DayCount dc : {DayCount::Act360, DayCount::Act365F}) {
            const Schedule s = build_schedule(t0, tn, freq(rng), dc);
            double sum = 0.0;
            for (double tau : s.accruals()) {
                CHECK(tau > 0.0);
                sum += tau;
            }
            CHECK(sum == doctest::Approx(year_fraction(t0, tn, dc)).epsilon(1e-12));
        }
    }
}

TEST_CASE("quote parsing") {
    SUBCASE("paper-style row") {
        const auto qs = parse_quotes("mtm-ccs,USDEUR,5y,-0.002650,USD\n");
        REQUIRE(qs.size() == 1);
        CHECK(qs[0].kind == QuoteKind::MtmCcs);
        CHECK(qs[0].pair == "USDEUR");
        CHECK(qs[0].maturity->months == 60);
        CHECK(qs[0].value == doctest::Approx(-0.002650));
        CHECK(qs[0].collateral_currency == "USD");
    }
    SUBCASE("empty file") { CHECK(parse_quotes("").empty()); }
    SUBCASE("zero-length maturity rejected") {
        CHECK_THROWS_AS(parse_quotes("mtm-ccs,USDEUR,0d,-0.002,USD\n"), InputError);
        CHECK_THROWS_AS(parse_quotes("mtm-ccs,USDEUR,0m,-0.002,USD\n"), InputError);
    }
    SUBCASE("line numbers in errors") {
        try {
            parse_quotes("fx-spot,USDEUR,spot,0.76\nmtm-ccs,USDEUR,oops,-0.002\n");
            FAIL("expected a parse error");
        } catch (const InputError& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
    }
    SUBCASE("unknown kind rejected") { CHECK_THROWS_AS(parse_quotes("swaption,USDEUR,5y,0.01\n"), InputError); }
}

TEST_CASE("quote serialization round trip") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> val(-0.02, 0.02);
    std::uniform_int_distribution<int> months(1, 360), kind(0, 5);
    std::vector<Quote> quotes;
    const char* pairs[] = {"USDEUR", "USDHKD", "EURHKD"};
    for (int k = 0; k < 50; ++k) {
        Quote q;
        q.kind = static_cast<QuoteKind>(kind(rng));
        q.pair = q.kind == QuoteKind::OisSwap || q.kind == QuoteKind::LiborSwap ? "EUR" : pairs[k % 3];
        if (q.kind != QuoteKind::FxSpot)
            q.maturity = Tenor{months(rng)};
        q.value = q.kind == QuoteKind::FxSpot ? std::abs(val(rng)) + 0.5 : val(rng);
        if (k % 4 == 0 && q.pair.size() == 6)
            q.collateral_currency = "USD";
        quotes.push_back(q);
    }
    const auto parsed = parse_quotes(serialize_quotes(quotes));
    REQUIRE(parsed.size() == quotes.size());
    for (std::size_t i = 0; i < quotes.size(); ++i) {
        CHECK(parsed[i].kind == quotes[i].kind);
        CHECK(parsed[i].pair == quotes[i].pair);
        CHECK(parsed[i].maturity == quotes[i].maturity);
        CHECK(parsed[i].value == quotes[i].value); // %.17g survives bit-exactly
        CHECK(parsed[i].collateral_currency == quotes[i].collateral_currency);
    }
}
