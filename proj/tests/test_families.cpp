#include <doctest.h>

#include "amdkit/constructions.hpp"
#include "amdkit/corpus.hpp"
#include "amdkit/families.hpp"

using namespace amdkit;

namespace {

SetFamily family13(std::vector<std::vector<std::int64_t>> sets) {
    return SetFamily::from_indices(make_cyclic_group(13), std::move(sets));
}

} // namespace

TEST_CASE("verify_ds") {
    auto pass = verify_ds_indices(make_cyclic_group(21), {3, 6, 12, 7, 14});
    CHECK(pass.pass);
    CHECK(pass.parameters->display() == "(21,5,1)-DS");

    auto trivial = verify_ds_indices(make_cyclic_group(6), {2});
    CHECK(trivial.pass);
    CHECK(trivial.parameters->lambdas == std::vector<std::int64_t>{0});

    auto fail_report = verify_ds_indices(make_cyclic_group(13), {0, 1, 4});
    CHECK(!fail_report.pass);
    REQUIRE(fail_report.counterexample.has_value());
    // 2 is not a difference of {0,1,4}.
    CHECK(fail_report.counterexample->element == GroupElement{2});
    CHECK(fail_report.counterexample->observed == 0);
}

TEST_CASE("verify_df accepts the Z13 size classes and relaxes disjointness") {
    CHECK(verify_df(corpus::z13_df_three_family()).parameters->display() == "(13,2,3,1)-DF");
    CHECK(verify_df(corpus::z13_df_four_family()).parameters->display() == "(13,1,4,1)-DF");
    CHECK(verify_df(corpus::z13_df_singletons_family()).parameters->display() == "(13,3,1,0)-DF");

    // Overlapping blocks are fine for a DF; the blocks below share 0.
    SetFamily overlapping = SetFamily::from_indices(make_cyclic_group(7), {{0, 1, 3}, {0, 2, 3}});
    CHECK(!overlapping.pairwise_disjoint());
    auto report = verify_df(overlapping);
    CHECK(report.pass); // both are planes of the Fano difference set family
    CHECK(report.parameters->lambdas == std::vector<std::int64_t>{2});

    CHECK_THROWS_AS(verify_df(family13({{0, 1, 4}, {3, 5}}), /*require_uniform_k=*/true), error);
}

TEST_CASE("verify_edf") {
    auto z19 = verify_edf(corpus::z19_tonchev_edf_family());
    CHECK(z19.pass);
    CHECK(z19.parameters->display() == "(19,3,3,3)-EDF");

    auto z5 = verify_edf(SetFamily::from_indices(make_cyclic_group(5), {{0, 1}, {2, 4}}));
    CHECK(z5.pass);
    CHECK(z5.parameters->lambdas == std::vector<std::int64_t>{2});

    // The lifted Fano difference set: three singleton quadratic residues.
    auto z7 = verify_edf(SetFamily::from_indices(make_cyclic_group(7), {{1}, {2}, {4}}));
    CHECK(z7.pass);
    CHECK(z7.parameters->display() == "(7,3,1,1)-EDF");

    CHECK_THROWS_AS(verify_edf(corpus::z13_two_set_gedf_family()), error); // sizes 2,3
    CHECK_THROWS_AS(verify_edf(family13({{0, 1}})), error);                // m = 1
    CHECK_THROWS_AS(verify_edf(family13({{0, 1}, {1, 2}})), error);        // overlap
}

TEST_CASE("verify_bedf") {
    CHECK(verify_bedf(corpus::z19_tonchev_edf_family(), 3).pass);
    auto too_tight = verify_bedf(corpus::z19_tonchev_edf_family(), 2);
    CHECK(!too_tight.pass);
    CHECK(too_tight.counterexample->observed == 3);

    SetFamily z2 = SetFamily::from_indices(make_cyclic_group(2), {{0}, {1}});
    CHECK(!verify_bedf(z2, 1).pass);
    CHECK(verify_bedf(z2, 2).pass);

    // Mixed sizes error by default; the relaxed form bound-checks anyway.
    CHECK_THROWS_AS(verify_bedf(corpus::z13_two_set_gedf_family(), 1), error);
    CHECK(verify_bedf(corpus::z13_two_set_gedf_family(), 1, /*require_uniform_k=*/false).pass);
}

TEST_CASE("verify_sedf") {
    auto pass = verify_sedf(SetFamily::from_indices(make_cyclic_group(10), {{0, 1, 2}, {3, 6, 9}}));
    CHECK(pass.pass);
    CHECK(pass.parameters->display() == "(10,2,3,1)-SEDF");

    CHECK(verify_sedf(singleton_sedf(6).family).parameters->display() == "(6,6,1,1)-SEDF");

    // The Z19 EDF is not strong: per-set outgoing maps are lumpy.
    auto fail_report = verify_sedf(corpus::z19_tonchev_edf_family());
    CHECK(!fail_report.pass);
    CHECK(fail_report.counterexample.has_value());
}

TEST_CASE("verify_gedf") {
    CHECK(verify_gedf(corpus::z13_two_set_gedf_family()).parameters->display() ==
          "(13,2;2,3;1)-GEDF");
    CHECK(verify_gedf(corpus::z11_three_set_gedf_family()).parameters->display() ==
          "(11,3;1,1,2;1)-GEDF");
    CHECK(verify_gedf(pedf_example_z13().family).parameters->lambdas ==
          std::vector<std::int64_t>{11});
}

TEST_CASE("verify_gsedf") {
    auto z7 = verify_gsedf(qr_gsedf().family);
    CHECK(z7.pass);
    CHECK(z7.parameters->display() == "(7,4;1,1,1,4;1,1,1,2)-GSEDF");

    CHECK(verify_gsedf(complement_gsedf(9).family).parameters->display() == "(9,2;1,8;1,1)-GSEDF");

    auto z13 = verify_gsedf(pedf_example_z13().family);
    CHECK(!z13.pass);
    CHECK(z13.counterexample->context == "outgoing differences of set 1");
}

TEST_CASE("verify_bgsedf") {
    CHECK(verify_bgsedf(qr_gsedf().family, {1, 1, 1, 2}).pass);
    auto fail_report = verify_bgsedf(qr_gsedf().family, {1, 1, 1, 1});
    CHECK(!fail_report.pass);
    CHECK(fail_report.counterexample->context == "incoming differences of set 4");
    // A verified GSEDF always meets its own lambdas as bounds.
    auto gsedf = verify_gsedf(qr_gsedf().family);
    CHECK(verify_bgsedf(qr_gsedf().family, gsedf.parameters->lambdas).pass);
    CHECK_THROWS_AS(verify_bgsedf(qr_gsedf().family, {1, 1}), error);
}

TEST_CASE("verify_pedf") {
    auto z13 = verify_pedf(pedf_example_z13().family);
    CHECK(z13.pass);
    CHECK(z13.parameters->display() == "(13,6;2,1,3;3,4,1;5,3,3)-PEDF");

    // Explicit profile must match the derived grouping.
    CHECK(verify_pedf(pedf_example_z13().family, {{2, 3}, {1, 4}, {3, 1}}).pass);
    CHECK_THROWS_AS(verify_pedf(pedf_example_z13().family, {{2, 3}, {1, 4}}), error);

    // Any EDF is a one-class PEDF with the same lambda.
    auto edf = verify_pedf(corpus::z19_tonchev_edf_family());
    CHECK(edf.pass);
    CHECK(edf.parameters->lambdas == std::vector<std::int64_t>{3});

    // The Z13 two-set GEDF has nonuniform per-class maps.
    CHECK(!verify_pedf(corpus::z13_two_set_gedf_family()).pass);
}

TEST_CASE("parameter identities") {
    FamilyParameters edf{FamilyType::edf, 19, 3, {3, 3, 3}, {3}, {}};
    CHECK(parameters_feasible(edf));
    edf.lambdas = {2};
    CHECK(!parameters_feasible(edf));

    FamilyParameters ds{FamilyType::ds, 21, 1, {5}, {1}, {}};
    CHECK(parameters_feasible(ds));

    // (n,3,2,1)-SEDF forces n = 9.
    for (std::int64_t n = 2; n <= 40; ++n) {
        FamilyParameters sedf{FamilyType::sedf, n, 3, {2, 2, 2}, {1}, {}};
        CHECK(parameters_feasible(sedf) == (n == 9));
    }

    // Every verifier pass satisfies its own identity.
    for (const auto& named : corpus::fixture_families()) {
        for (FamilyType t : {FamilyType::df, FamilyType::edf, FamilyType::sedf, FamilyType::gedf,
                             FamilyType::gsedf, FamilyType::pedf}) {
            VerificationReport r;
            try {
                r = verify_family(named.family, t);
            } catch (const error&) {
                continue;
            }
            if (r.pass) {
                INFO(named.name, " as ", family_type_name(t));
                CHECK(parameters_feasible(*r.parameters));
            }
        }
    }
}

TEST_CASE("implication lattice edges") {
    CHECK(is_lattice_edge(FamilyType::sedf, FamilyType::edf));
    CHECK(!is_lattice_edge(FamilyType::gedf, FamilyType::edf));
    CHECK(lattice_edges().size() == 9);

    auto sedf_to_edf =
        implication_check(two_set_sedf(3).family, FamilyType::sedf, FamilyType::edf);
    CHECK(sedf_to_edf.pass);
    CHECK(sedf_to_edf.parameters->display() == "(10,2,3,2)-EDF");

    auto ds_to_edf =
        implication_check(corpus::z21_difference_set_family(), FamilyType::ds, FamilyType::edf);
    CHECK(ds_to_edf.pass);
    CHECK(ds_to_edf.parameters->display() == "(21,5,1,1)-EDF");

    auto ds_to_df =
        implication_check(corpus::z21_difference_set_family(), FamilyType::ds, FamilyType::df);
    CHECK(ds_to_df.pass);
    CHECK(ds_to_df.parameters->display() == "(21,1,5,1)-DF");

    auto pedf_to_gedf =
        implication_check(pedf_example_z13().family, FamilyType::pedf, FamilyType::gedf);
    CHECK(pedf_to_gedf.pass);
    CHECK(pedf_to_gedf.parameters->lambdas == std::vector<std::int64_t>{11});

    auto gsedf_to_pedf = implication_check(qr_gsedf().family, FamilyType::gsedf, FamilyType::pedf);
    CHECK(gsedf_to_pedf.pass);
    // Classes: three singletons (lambda 1+1+1) and one 4-set (lambda 2).
    CHECK(gsedf_to_pedf.parameters->lambdas == std::vector<std::int64_t>{3, 2});

    CHECK_THROWS_AS(
        implication_check(qr_gsedf().family, FamilyType::gedf, FamilyType::edf), error);

    // A family that fails the source type yields a fail report, not a throw.
    auto not_sedf = implication_check(corpus::z19_tonchev_edf_family(), FamilyType::sedf,
                                      FamilyType::edf);
    CHECK(!not_sedf.pass);
}

TEST_CASE("every applicable lattice edge holds on the fixture corpus") {
    for (const auto& named : corpus::fixture_families()) {
        for (const auto& [from, to] : lattice_edges()) {
            VerificationReport source;
            try {
                source = verify_family(named.family, from);
            } catch (const error&) {
                continue; // preconditions (sizes, m) not met; edge not applicable
            }
            if (!source.pass) continue;
            INFO(named.name, ": ", family_type_name(from), " -> ", family_type_name(to));
            CHECK(implication_check(named.family, from, to).pass);
        }
    }
}

TEST_CASE("a GSEDF containing a singleton set is maximal with lambda 1") {
    for (const auto& named : corpus::fixture_families()) {
        VerificationReport r;
        try {
            r = verify_gsedf(named.family);
        } catch (const error&) {
            continue;
        }
        if (!r.pass) continue;
        const auto& p = *r.parameters;
        std::int64_t a = 0;
        for (auto k : p.sizes) a += static_cast<std::int64_t>(k);
        for (std::size_t i = 0; i < p.sizes.size(); ++i) {
            if (p.sizes[i] != 1) continue;
            INFO(named.name);
            CHECK(p.lambdas[i] == 1);
            CHECK(a == p.n);
        }
    }
}

TEST_CASE("maximal partition characterizations") {
    auto z7 = maximal_gsedf_ds_check(qr_gsedf().family);
    CHECK(z7.whole.pass);
    CHECK(z7.equivalence_consistent);
    CHECK(z7.parts[3].parameters->display() == "(7,4,2)-DS");

    auto complement = maximal_gsedf_ds_check(complement_gsedf(13).family);
    CHECK(complement.whole.pass);
    CHECK(complement.parts[1].parameters->display() == "(13,12,11)-DS");

    auto z13 = maximal_gsedf_ds_check(pedf_example_z13().family);
    CHECK(!z13.whole.pass);
    CHECK(z13.equivalence_consistent);

    auto pedf = maximal_pedf_df_check(pedf_example_z13().family);
    CHECK(pedf.whole.pass);
    CHECK(pedf.equivalence_consistent);
    CHECK(pedf.parts[0].parameters->display() == "(13,2,3,1)-DF");
    CHECK(pedf.parts[1].parameters->display() == "(13,1,4,1)-DF");
    CHECK(pedf.parts[2].parameters->display() == "(13,3,1,0)-DF");

    // Not a partition -> precondition error.
    CHECK_THROWS_AS(maximal_gsedf_ds_check(corpus::z13_two_set_gedf_family()), error);
}
