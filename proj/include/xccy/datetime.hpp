#pragma once

#include <compare>
#include <string>
#include <vector>

namespace xccy {

/// Calendar date (proleptic Gregorian). No business-day calendars: schedule
/// rolling is plain calendar arithmetic so results stay reproducible.
class Date {
public:
    Date() : serial_(0) {}
    Date(int year, int month, int day);

    static Date from_serial(int days_since_epoch) {
        Date d;
        d.serial_ = days_since_epoch;
        return d;
    }
    /// Parses "YYYY-MM-DD".
    static Date parse(const std::string& iso);

    int year() const;
    int month() const;
    int day() const;
    int serial() const { return serial_; }

    std::string to_string() const;

    auto operator<=>(const Date&) const = default;

private:
    int serial_; // days since 1970-01-01
};

inline int days_between(Date a, Date b) { return b.serial() - a.serial(); }

/// Month arithmetic with end-of-month clamping (Jan 31 + 1m = Feb 28).
Date add_months(Date d, int months);

enum class DayCount { Act360, Act365F };

DayCount parse_day_count(const std::string& tag);
std::string to_string(DayCount dc);

/// Accrued year fraction between two ordered dates.
double year_fraction(Date d1, Date d2, DayCount dc);

/// Payment schedule T_0 < T_1 < ... < T_N with per-period accruals.
class Schedule {
public:
    Schedule(std::vector<Date> dates, DayCount dc);

    const std::vector<Date>& dates() const { return dates_; }
    const std::vector<double>& accruals() const { return accruals_; }
    DayCount day_count() const { return day_count_; }

    std::size_t periods() const { return accruals_.size(); }
    Date start() const { return dates_.front(); }
    Date end() const { return dates_.back(); }

private:
    std::vector<Date> dates_;
    std::vector<double> accruals_;
    DayCount day_count_;
};

/// Rolls period dates back from `end` every `frequency_months`; a span that is
/// not an integer number of periods gets a short initial stub.
Schedule build_schedule(Date start, Date end, int frequency_months, DayCount dc = DayCount::Act360);

/// Tenor expressed in whole months ("3m", "18m", "5y").
struct Tenor {
    int months = 0;

    static Tenor parse(const std::string& text);
    std::string to_string() const;

    auto operator<=>(const Tenor&) const = default;
};

} // namespace xccy
