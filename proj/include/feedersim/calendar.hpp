#pragma once

#include <string>
#include <string_view>

namespace feedersim {

constexpr int kQuartersPerDay = 96;
constexpr int kQuartersPerHour = 4;
constexpr int kHoursPerDay = 24;
constexpr double kHoursPerQuarter = 0.25;

bool is_leap_year(int year);
int days_in_year(int year);
int quarters_in_year(int year);
int hours_in_year(int year);

struct Date {
    int year = 0;
    int month = 1;  // 1..12
    int day = 1;    // 1..31
};

int days_in_month(int year, int month);

/// Day of year, 0-based (Jan 1 -> 0).
int day_of_year(const Date& d);

/// Inverse of day_of_year.
Date date_from_day_of_year(int year, int doy);

/// 0 = Sunday .. 6 = Saturday.
int weekday(const Date& d);

/// Day of year (0-based) of the last Sunday of the given month.
int last_sunday_doy(int year, int month);

/// Daylight-saving behaviour derived from an IANA zone name. European zones
/// switch at 02:00 local on the last Sunday of March/October; everything else
/// is treated as transition-free (UTC, fixed offsets).
enum class DstRule { none, european };

DstRule dst_rule_for_zone(std::string_view tz);

/// 0-based day of year of the spring-forward day (last Sunday of March).
int spring_forward_doy(int year);
/// 0-based day of year of the fall-back day (last Sunday of October).
int fall_back_doy(int year);

/// First quarter slot of the local hour affected by both transitions (02:00).
constexpr int kDstQuarterSlot = 2 * kQuartersPerHour;

}  // namespace feedersim
