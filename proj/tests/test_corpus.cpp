#include <doctest.h>

#include "amdkit/corpus.hpp"

TEST_CASE("every worked-example regression item passes") {
    auto results = amdkit::corpus::run_all();
    CHECK(results.size() >= 40);
    for (const auto& r : results) {
        INFO(r.name);
        std::string detail;
        for (const auto& f : r.failures) detail += f + "; ";
        INFO(detail);
        CHECK(r.pass);
    }
}
