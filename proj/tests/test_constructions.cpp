#include <doctest.h>

#include "amdkit/constructions.hpp"
#include "amdkit/corpus.hpp"

using namespace amdkit;

TEST_CASE("tonchev parameters") {
    auto p = tonchev_parameters(19, 3, 3);
    CHECK(p.lambda_stated == 3);
    CHECK(p.lambda_witnessed == 3);
    CHECK(p.lambdas_agree);

    auto degenerate = tonchev_parameters(7, 1, 3);
    CHECK(degenerate.lambda_stated == 0);
    CHECK(degenerate.lambda_witnessed == 1);
    CHECK(!degenerate.lambdas_agree);

    CHECK_THROWS_AS(tonchev_parameters(19, 3, 2), error);  // even l
    CHECK_THROWS_AS(tonchev_parameters(19, 2, 3), error);  // even u
    CHECK_THROWS_AS(tonchev_parameters(20, 3, 3), error);  // q != 2ul+1
}

TEST_CASE("tonchev coset family over F19 matches the known sets") {
    auto r = tonchev_edf(19, 3, 3, FiniteField::prime(19));
    CHECK(r.family == corpus::z19_tonchev_edf_family());
    CHECK(r.report.pass);
    CHECK(r.report.parameters->display() == "(19,3,3,3)-EDF");
    CHECK(r.notes.empty());
    // Cosets of a multiplicative subgroup avoid 0 and are disjoint.
    CHECK(r.family.pairwise_disjoint());
    for (const auto& set : r.family.index_sets())
        for (std::int64_t x : set) CHECK(x != 0);
}

TEST_CASE("tonchev degenerate case u=1 verifies with a lambda mismatch note") {
    auto r = tonchev_edf(7, 1, 3, FiniteField::prime(7));
    CHECK(r.report.pass);
    CHECK(r.report.parameters->display() == "(7,3,1,1)-EDF");
    CHECK(!r.notes.empty());
    CHECK_THROWS_AS(tonchev_edf(19, 3, 3, FiniteField::prime(7)), error); // wrong field order
}

TEST_CASE("tonchev over a prime-power field") {
    // q = 27 = 2*13*1 + 1 with u=13, l=1: a single coset, the index-2
    // subgroup, which is a Paley-type difference set.
    auto r = tonchev_edf(27, 13, 1, FiniteField::of_order(27));
    CHECK(r.report.pass);
    CHECK(r.report.type == FamilyType::ds);
    CHECK(r.report.parameters->lambdas == std::vector<std::int64_t>{6}); // (27-3)/4
}

TEST_CASE("two-set SEDF construction sweep") {
    auto k3 = two_set_sedf(3);
    CHECK(k3.family ==
          SetFamily::from_indices(make_cyclic_group(10), {{0, 1, 2}, {3, 6, 9}}));
    CHECK(k3.report.parameters->display() == "(10,2,3,1)-SEDF");

    CHECK(two_set_sedf(1).family ==
          SetFamily::from_indices(make_cyclic_group(2), {{0}, {1}}));

    for (std::int64_t k = 1; k <= 12; ++k) {
        auto r = two_set_sedf(k);
        CHECK(r.report.pass);
        CHECK(r.report.parameters->lambdas == std::vector<std::int64_t>{1});
        CHECK(r.report.parameters->n == k * k + 1);
    }
    CHECK_THROWS_AS(two_set_sedf(0), error);
}

TEST_CASE("singleton SEDF construction") {
    for (std::int64_t n : {2, 5, 7}) {
        auto r = singleton_sedf(n);
        CHECK(r.report.pass);
        CHECK(static_cast<std::int64_t>(r.family.set_count()) == n);
        CHECK(r.report.parameters->lambdas == std::vector<std::int64_t>{1});
    }
    CHECK_THROWS_AS(singleton_sedf(1), error);
}

TEST_CASE("complement GSEDF construction") {
    auto r7 = complement_gsedf(7);
    CHECK(r7.report.pass);
    CHECK(r7.report.parameters->lambdas == std::vector<std::int64_t>{1, 1});

    CHECK(complement_gsedf(2).family ==
          SetFamily::from_indices(make_cyclic_group(2), {{0}, {1}}));

    auto r13 = complement_gsedf(13);
    CHECK(r13.report.pass);
    CHECK(maximal_gsedf_ds_check(r13.family).equivalence_consistent);
}

TEST_CASE("fixed fixtures verify with their advertised parameters") {
    CHECK(qr_gsedf().report.parameters->display() == "(7,4;1,1,1,4;1,1,1,2)-GSEDF");
    CHECK(pedf_example_z13().report.parameters->display() == "(13,6;2,1,3;3,4,1;5,3,3)-PEDF");
}
