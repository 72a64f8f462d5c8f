#include "xccy/datetime.hpp"

#include "xccy/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

namespace xccy {

namespace {

// Civil-date conversions after Howard Hinnant's public-domain algorithms.
int days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);            // [0, 399]
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1; // [0, 365]
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;           // [0, 146096]
    return era * 146097 + static_cast<int>(doe) - 719468;
}

std::array<int, 3> civil_from_days(int z) {
    z += 719468;
    const int era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int y = static_cast<int>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return {y + (m <= 2), static_cast<int>(m), static_cast<int>(d)};
}

bool is_leap(int y) { return y % 4 == 0 && (y % 100 != 0 || y % 400 == 0); }

int days_in_month(int y, int m) {
    static const int lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y))
        return 29;
    return lengths[m - 1];
}

} // namespace

Date::Date(int year, int month, int day) {
    XCCY_INPUT_REQUIRE(month >= 1 && month <= 12, "invalid month " << month);
    XCCY_INPUT_REQUIRE(day >= 1 && day <= days_in_month(year, month),
                       "invalid day " << day << " for " << year << "-" << month);
    serial_ = days_from_civil(year, month, day);
}

Date Date::parse(const std::string& iso) {
    int y = 0, m = 0, d = 0;
    char sep1 = 0, sep2 = 0;
    if (std::sscanf(iso.c_str(), "%d%c%d%c%d", &y, &sep1, &m, &sep2, &d) != 5 || sep1 != '-' || sep2 != '-')
        throw InputError("cannot parse date '" + iso + "' (expected YYYY-MM-DD)");
    return Date(y, m, d);
}

int Date::year() const { return civil_from_days(serial_)[0]; }
int Date::month() const { return civil_from_days(serial_)[1]; }
int Date::day() const { return civil_from_days(serial_)[2]; }

std::string Date::to_string() const {
    const auto ymd = civil_from_days(serial_);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", ymd[0], ymd[1], ymd[2]);
    return buf;
}

Date add_months(Date d, int months) {
    const auto ymd = civil_from_days(d.serial());
    int m0 = ymd[0] * 12 + (ymd[1] - 1) + months;
    int y = m0 / 12;
    int m = m0 % 12;
    if (m < 0) {
        m += 12;
        y -= 1;
    }
    const int day = std::min(ymd[2], days_in_month(y, m + 1));
    return Date(y, m + 1, day);
}

DayCount parse_day_count(const std::string& tag) {
    if (tag == "ACT/360")
        return DayCount::Act360;
    if (tag == "ACT/365F")
        return DayCount::Act365F;
    throw InputError("unknown day count '" + tag + "'");
}

std::string to_string(DayCount dc) { return dc == DayCount::Act360 ? "ACT/360" : "ACT/365F"; }

double year_fraction(Date d1, Date d2, DayCount dc) {
    XCCY_INPUT_REQUIRE(d1 <= d2, "year_fraction: " << d1.to_string() << " after " << d2.to_string());
    const double days = days_between(d1, d2);
    return dc == DayCount::Act360 ? days / 360.0 : days / 365.0;
}

Schedule::Schedule(std::vector<Date> dates, DayCount dc) : dates_(std::move(dates)), day_count_(dc) {
    XCCY_INPUT_REQUIRE(dates_.size() >= 2, "schedule needs at least two dates");
    accruals_.reserve(dates_.size() - 1);
    for (std::size_t i = 1; i < dates_.size(); ++i) {
        XCCY_INPUT_REQUIRE(dates_[i - 1] < dates_[i], "schedule dates not strictly increasing at index " << i);
        accruals_.push_back(year_fraction(dates_[i - 1], dates_[i], day_count_));
    }
}

Schedule build_schedule(Date start, Date end, int frequency_months, DayCount dc) {
    XCCY_INPUT_REQUIRE(start < end, "schedule start " << start.to_string() << " not before end " << end.to_string());
    XCCY_INPUT_REQUIRE(frequency_months > 0, "schedule frequency must be positive");
    std::vector<Date> dates;
    Date d = end;
    while (d > start) {
        dates.push_back(d);
        d = add_months(end, -frequency_months * static_cast<int>(dates.size()));
    }
    dates.push_back(start); // short initial stub when the span is not an integer multiple
    std::reverse(dates.begin(), dates.end());
    return Schedule(std::move(dates), dc);
}

Tenor Tenor::parse(const std::string& text) {
    XCCY_INPUT_REQUIRE(!text.empty(), "empty tenor");
    const char unit = text.back();
    int n = 0;
    try {
        std::size_t pos = 0;
        n = std::stoi(text.substr(0, text.size() - 1), &pos);
        XCCY_INPUT_REQUIRE(pos == text.size() - 1, "trailing characters in tenor '" << text << "'");
    } catch (const std::exception&) {
        throw InputError("cannot parse tenor '" + text + "'");
    }
    int months = 0;
    if (unit == 'm' || unit == 'M')
        months = n;
    else if (unit == 'y' || unit == 'Y')
        months = 12 * n;
    else
        throw InputError("unknown tenor unit in '" + text + "' (use <n>m or <n>y)");
    XCCY_INPUT_REQUIRE(months > 0, "tenor '" << text << "' is not strictly positive");
    return Tenor{months};
}

std::string Tenor::to_string() const {
    if (months % 12 == 0)
        return std::to_string(months / 12) + "y";
    return std::to_string(months) + "m";
}

} // namespace xccy
