#include <doctest.h>

#include "property_suite.hpp"

using namespace amdkit;

TEST_CASE("bound inequalities and sum identities hold on random codes") {
    auto stats = testing::run_property_suite(/*num_codes=*/1000, /*strategies_per_code=*/100,
                                             /*seed=*/20240811);
    for (const auto& f : stats.failures) {
        INFO(f);
        CHECK(false);
    }
    CHECK(stats.codes_checked == 1000);
    CHECK(stats.strategies_checked == 100000);
}

TEST_CASE("a second seed agrees") {
    auto stats = testing::run_property_suite(/*num_codes=*/100, /*strategies_per_code=*/20,
                                             /*seed=*/1);
    CHECK(stats.ok());
}
