#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "feedersim/calendar.hpp"

using namespace feedersim;

TEST_CASE("year lengths") {
    CHECK(!is_leap_year(2022));
    CHECK(is_leap_year(2024));
    CHECK(is_leap_year(2000));
    CHECK(!is_leap_year(1900));
    CHECK(days_in_year(2022) == 365);
    CHECK(days_in_year(2024) == 366);
    CHECK(quarters_in_year(2022) == 35040);
    CHECK(quarters_in_year(2024) == 35136);
    CHECK(hours_in_year(2022) == 8760);
    CHECK(hours_in_year(2024) == 8784);
}

TEST_CASE("day of year round trip") {
    for (int year : {2022, 2024}) {
        for (int doy = 0; doy < days_in_year(year); ++doy) {
            const Date d = date_from_day_of_year(year, doy);
            CHECK(day_of_year(d) == doy);
        }
    }
    CHECK(day_of_year({2022, 1, 1}) == 0);
    CHECK(day_of_year({2022, 12, 31}) == 364);
    CHECK(day_of_year({2024, 2, 29}) == 59);
    CHECK(day_of_year({2024, 3, 1}) == 60);
}

TEST_CASE("weekday against known dates") {
    CHECK(weekday({2022, 1, 1}) == 6);   // Saturday
    CHECK(weekday({1970, 1, 1}) == 4);   // Thursday
    CHECK(weekday({2000, 1, 1}) == 6);   // Saturday
    CHECK(weekday({2024, 2, 29}) == 4);  // Thursday
    CHECK(weekday({2022, 3, 27}) == 0);  // Sunday
    CHECK(weekday({2022, 10, 30}) == 0); // Sunday
}

TEST_CASE("last sunday and transition days") {
    CHECK(last_sunday_doy(2022, 3) == day_of_year({2022, 3, 27}));
    CHECK(last_sunday_doy(2022, 10) == day_of_year({2022, 10, 30}));
    CHECK(last_sunday_doy(2021, 3) == day_of_year({2021, 3, 28}));
    CHECK(last_sunday_doy(2021, 10) == day_of_year({2021, 10, 31}));

    CHECK(spring_forward_doy(2022) == 85);
    CHECK(fall_back_doy(2022) == 302);
    CHECK(kDstQuarterSlot == 8);  // 02:00 local
}

TEST_CASE("zone to transition rule") {
    CHECK(dst_rule_for_zone("Europe/Brussels") == DstRule::european);
    CHECK(dst_rule_for_zone("Europe/Madrid") == DstRule::european);
    CHECK(dst_rule_for_zone("CET") == DstRule::european);
    CHECK(dst_rule_for_zone("UTC") == DstRule::none);
    CHECK(dst_rule_for_zone("Etc/UTC") == DstRule::none);
}

TEST_CASE("days in month") {
    CHECK(days_in_month(2022, 2) == 28);
    CHECK(days_in_month(2024, 2) == 29);
    CHECK(days_in_month(2022, 12) == 31);
    int total = 0;
    for (int m = 1; m <= 12; ++m) total += days_in_month(2022, m);
    CHECK(total == 365);
}
