#include "feedersim/calendar.hpp"

#include <array>
#include <stdexcept>

namespace feedersim {

namespace {
constexpr std::array<int, 12> kMonthDays = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
}

bool is_leap_year(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_year(int year) { return is_leap_year(year) ? 366 : 365; }

int quarters_in_year(int year) { return days_in_year(year) * kQuartersPerDay; }

int hours_in_year(int year) { return days_in_year(year) * kHoursPerDay; }

int days_in_month(int year, int month) {
    if (month < 1 || month > 12) throw std::invalid_argument("month out of range");
    if (month == 2 && is_leap_year(year)) return 29;
    return kMonthDays[static_cast<std::size_t>(month - 1)];
}

int day_of_year(const Date& d) {
    if (d.day < 1 || d.day > days_in_month(d.year, d.month))
        throw std::invalid_argument("day out of range");
    int doy = d.day - 1;
    for (int m = 1; m < d.month; ++m) doy += days_in_month(d.year, m);
    return doy;
}

Date date_from_day_of_year(int year, int doy) {
    if (doy < 0 || doy >= days_in_year(year))
        throw std::invalid_argument("day of year out of range");
    int month = 1;
    while (doy >= days_in_month(year, month)) {
        doy -= days_in_month(year, month);
        ++month;
    }
    return Date{year, month, doy + 1};
}

int weekday(const Date& d) {
    // Sakamoto's method, 0 = Sunday.
    static constexpr std::array<int, 12> t = {0, 3, 2, 5, 0, 3, 5, 1, 4, 6, 2, 4};
    int y = d.year;
    if (d.month < 3) y -= 1;
    return (y + y / 4 - y / 100 + y / 400 + t[static_cast<std::size_t>(d.month - 1)] + d.day) % 7;
}

int last_sunday_doy(int year, int month) {
    Date last{year, month, days_in_month(year, month)};
    int wd = weekday(last);
    last.day -= wd;  // back up to the preceding (or same) Sunday
    return day_of_year(last);
}

DstRule dst_rule_for_zone(std::string_view tz) {
    if (tz.rfind("Europe/", 0) == 0 || tz == "CET" || tz == "MET") return DstRule::european;
    return DstRule::none;
}

int spring_forward_doy(int year) { return last_sunday_doy(year, 3); }

int fall_back_doy(int year) { return last_sunday_doy(year, 10); }

}  // namespace feedersim
