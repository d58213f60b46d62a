#include "amdkit/corpus.hpp"

#include "amdkit/constructions.hpp"
#include "amdkit/search.hpp"

namespace amdkit::corpus {
namespace {

SetFamily family_of(std::int64_t n, std::vector<std::vector<std::int64_t>> sets) {
    return SetFamily::from_indices(make_cyclic_group(n), std::move(sets));
}

AmdCode equiprobable_code(std::int64_t n, std::vector<std::vector<std::int64_t>> sets) {
    return AmdCode::equiprobable(family_of(n, std::move(sets)));
}

bool uniform_map(const FrequencyMap& map, std::int64_t lambda) {
    auto v = map.uniform_value();
    return v && *v == lambda;
}

bool table_matches(const FrequencyMap& map, const std::vector<std::int64_t>& expected) {
    for (std::int64_t d = 1; d < map.group().order(); ++d)
        if (map.count_of_index(d) != expected[static_cast<std::size_t>(d - 1)]) return false;
    return true;
}

} // namespace

SetFamily z21_difference_set_family() { return family_of(21, {{3, 6, 12, 7, 14}}); }
SetFamily z19_tonchev_edf_family() { return family_of(19, {{1, 7, 11}, {4, 9, 6}, {16, 17, 5}}); }
SetFamily z13_two_set_gedf_family() { return family_of(13, {{0, 1}, {2, 4, 6}}); }
SetFamily z11_three_set_gedf_family() { return family_of(11, {{0}, {1}, {3, 5}}); }
SetFamily z13_df_three_family() { return family_of(13, {{0, 1, 4}, {3, 5, 10}}); }
SetFamily z13_df_four_family() { return family_of(13, {{2, 6, 7, 9}}); }
SetFamily z13_df_singletons_family() { return family_of(13, {{8}, {11}, {12}}); }

AmdCode z21_ds_code() {
    return equiprobable_code(21, {{3}, {6}, {12}, {7}, {14}});
}

AmdCode z7_strong_code() {
    return equiprobable_code(7, {{1}, {2}, {4}, {0, 3, 5, 6}});
}

AmdCode z13_gedf_code() {
    return equiprobable_code(13, {{0, 1}, {2, 4, 6}});
}

AmdCode z10_weak_r_optimal_code() {
    return equiprobable_code(10, {{0}, {5}, {1, 9}, {2, 3}});
}

std::vector<NamedFamily> fixture_families() {
    std::vector<NamedFamily> out;
    out.push_back({"z21-ds", z21_difference_set_family()});
    out.push_back({"z19-edf", z19_tonchev_edf_family()});
    out.push_back({"z13-gedf", z13_two_set_gedf_family()});
    out.push_back({"z11-gedf", z11_three_set_gedf_family()});
    out.push_back({"z13-df-size3", z13_df_three_family()});
    out.push_back({"z13-df-size4", z13_df_four_family()});
    out.push_back({"z13-df-singletons", z13_df_singletons_family()});
    out.push_back({"z13-pedf", pedf_example_z13().family});
    out.push_back({"z7-qr-gsedf", qr_gsedf().family});
    out.push_back({"z7-complement-gsedf", complement_gsedf(7).family});
    out.push_back({"z7-singleton-sedf", singleton_sedf(7).family});
    for (std::int64_t k = 2; k <= 4; ++k)
        out.push_back({"two-set-sedf-k" + std::to_string(k), two_set_sedf(k).family});
    out.push_back({"z7-tonchev-degenerate", tonchev_edf(7, 1, 3, FiniteField::prime(7)).family});
    return out;
}

const std::vector<Item>& items() {
    static const std::vector<Item> all = [] {
        std::vector<Item> v;
        auto add = [&](std::string name, std::string summary, std::function<void(Checker&)> run) {
            v.push_back({std::move(name), std::move(summary), std::move(run)});
        };

        // ---- groups and fields -------------------------------------------
        add("cyclic-group-z21", "Z21 constructs with order 21", [](Checker& c) {
            c.expect(make_cyclic_group(21).order() == 21, "order");
        });
        add("prime-field-f19", "F19 has the primitive element 2", [](Checker& c) {
            FiniteField f = FiniteField::prime(19);
            c.expect(f.order() == 19, "order");
            c.expect(find_primitive_element(f) == GroupElement{2}, "primitive element");
        });

        // ---- difference multisets ----------------------------------------
        add("internal-differences-z21-ds", "all 20 internal differences of the Z21 set occur once",
            [](Checker& c) {
                auto map = internal_differences_indices(make_cyclic_group(21), {3, 6, 12, 7, 14});
                c.expect(uniform_map(map, 1), "uniform count 1");
                c.expect(map.total() == 20, "total 20");
            });
        add("external-differences-z19-edf", "the Z19 coset family covers every difference 3 times",
            [](Checker& c) {
                auto map = external_difference_multiset(z19_tonchev_edf_family());
                c.expect(uniform_map(map, 3), "uniform count 3");
            });
        add("external-differences-z13-gedf", "the Z13 two-set family covers every difference once",
            [](Checker& c) {
                auto map = external_difference_multiset(z13_two_set_gedf_family());
                c.expect(uniform_map(map, 1), "uniform count 1");
            });
        add("outgoing-tables-z13-pedf", "the Z13 six-set family's first two outgoing tables",
            [](Checker& c) {
                SetFamily f = pedf_example_z13().family;
                c.expect(table_matches(outgoing_differences(f, 0),
                                       {2, 3, 2, 2, 3, 3, 3, 3, 2, 2, 3, 2}),
                         "table for the first set");
                c.expect(table_matches(outgoing_differences(f, 1),
                                       {3, 2, 3, 3, 2, 2, 2, 2, 3, 3, 2, 3}),
                         "table for the second set");
            });
        add("outgoing-incoming-z7-gsedf", "Z7 family: outgoing(1) uniform 1, incoming(4) uniform 2",
            [](Checker& c) {
                SetFamily f = qr_gsedf().family;
                c.expect(uniform_map(outgoing_differences(f, 0), 1), "outgoing set 1");
                c.expect(uniform_map(incoming_differences(f, 3), 2), "incoming set 4");
            });
        add("class-differences-z13-pedf", "class sums: size-3 class 5, size-4 class 3",
            [](Checker& c) {
                SetFamily f = pedf_example_z13().family;
                c.expect(uniform_map(class_differences(f, {0, 1}), 5), "size-3 class");
                c.expect(uniform_map(class_differences(f, {2}), 3), "size-4 class");
            });

        // ---- verifiers ----------------------------------------------------
        add("verify-ds-z21", "{3,6,12,7,14} is a (21,5,1)-DS", [](Checker& c) {
            auto r = verify_ds_indices(make_cyclic_group(21), {3, 6, 12, 7, 14});
            c.expect(r.pass, "pass");
            c.expect(r.parameters->display() == "(21,5,1)-DS", "parameters");
        });
        add("verify-ds-singleton", "a singleton is a trivial DS with lambda 0", [](Checker& c) {
            auto r = verify_ds_indices(make_cyclic_group(9), {4});
            c.expect(r.pass && r.parameters->lambdas[0] == 0, "lambda 0");
        });
        add("verify-df-z13-classes", "the three Z13 size classes are DFs", [](Checker& c) {
            auto r3 = verify_df(z13_df_three_family());
            c.expect(r3.pass && r3.parameters->display() == "(13,2,3,1)-DF", "(13,2,3,1)-DF");
            auto r4 = verify_df(z13_df_four_family());
            c.expect(r4.pass && r4.parameters->display() == "(13,1,4,1)-DF", "(13,1,4,1)-DF");
            auto r1 = verify_df(z13_df_singletons_family());
            c.expect(r1.pass && r1.parameters->display() == "(13,3,1,0)-DF", "(13,3,1,0)-DF");
        });
        add("verify-edf-z19", "the Z19 coset family is a (19,3,3,3)-EDF", [](Checker& c) {
            auto r = verify_edf(z19_tonchev_edf_family());
            c.expect(r.pass && r.parameters->display() == "(19,3,3,3)-EDF", "parameters");
        });
        add("verify-bedf-bounds", "BEDF bound pass/fail around the Z19 family", [](Checker& c) {
            c.expect(verify_bedf(z19_tonchev_edf_family(), 3).pass, "bound 3 passes");
            auto r = verify_bedf(z19_tonchev_edf_family(), 2);
            c.expect(!r.pass && r.counterexample && r.counterexample->observed == 3,
                     "bound 2 fails with observed 3");
            c.expect(verify_bedf(z13_two_set_gedf_family(), 1, false).pass,
                     "Z13 two-set family bound-checks at 1 with sizes relaxed");
        });
        add("verify-sedf-z10", "{0,1,2},{3,6,9} is a (10,2,3,1)-SEDF", [](Checker& c) {
            auto r = verify_sedf(family_of(10, {{0, 1, 2}, {3, 6, 9}}));
            c.expect(r.pass && r.parameters->display() == "(10,2,3,1)-SEDF", "parameters");
        });
        add("verify-sedf-singletons", "singletons in Z7 form a (7,7,1,1)-SEDF", [](Checker& c) {
            auto r = verify_sedf(singleton_sedf(7).family);
            c.expect(r.pass && r.parameters->display() == "(7,7,1,1)-SEDF", "parameters");
        });
        add("verify-gedf-examples", "the Z13 and Z11 families are GEDFs with lambda 1",
            [](Checker& c) {
                auto r13 = verify_gedf(z13_two_set_gedf_family());
                c.expect(r13.pass && r13.parameters->display() == "(13,2;2,3;1)-GEDF", "Z13");
                auto r11 = verify_gedf(z11_three_set_gedf_family());
                c.expect(r11.pass && r11.parameters->display() == "(11,3;1,1,2;1)-GEDF", "Z11");
                auto r12 = verify_gedf(pedf_example_z13().family);
                c.expect(r12.pass && r12.parameters->lambdas[0] == 11, "Z13 six-set lambda 11");
            });
        add("verify-gsedf-examples", "GSEDF pass/fail on the Z7 and Z13 families", [](Checker& c) {
            auto r7 = verify_gsedf(qr_gsedf().family);
            c.expect(r7.pass && r7.parameters->display() == "(7,4;1,1,1,4;1,1,1,2)-GSEDF", "Z7");
            auto rc = verify_gsedf(complement_gsedf(7).family);
            c.expect(rc.pass && rc.parameters->display() == "(7,2;1,6;1,1)-GSEDF", "complement");
            auto r12 = verify_gsedf(pedf_example_z13().family);
            c.expect(!r12.pass, "Z13 six-set family is not a GSEDF");
            c.expect(r12.counterexample && r12.counterexample->context.find("set 1") != std::string::npos,
                     "failure witnessed at the first set");
        });
        add("verify-bgsedf-z7", "Z7 family meets bounds (1,1,1,2) and not (1,1,1,1)",
            [](Checker& c) {
                c.expect(verify_bgsedf(qr_gsedf().family, {1, 1, 1, 2}).pass, "bounds (1,1,1,2)");
                auto r = verify_bgsedf(qr_gsedf().family, {1, 1, 1, 1});
                c.expect(!r.pass &&
                             r.counterexample->context.find("set 4") != std::string::npos,
                         "bound 1 fails at the fourth set");
            });
        add("verify-pedf-z13", "the Z13 six-set family is a (13,6;2,1,3;3,4,1;5,3,3)-PEDF",
            [](Checker& c) {
                auto r = verify_pedf(pedf_example_z13().family);
                c.expect(r.pass && r.parameters->display() == "(13,6;2,1,3;3,4,1;5,3,3)-PEDF",
                         "parameters");
            });
        add("edf-reads-as-pedf", "an EDF is a one-class PEDF with the same lambda", [](Checker& c) {
            auto r = verify_pedf(z19_tonchev_edf_family());
            c.expect(r.pass && r.parameters->lambdas == std::vector<std::int64_t>{3}, "lambda 3");
        });
        add("parameter-identities", "counting identities for the worked parameter sets",
            [](Checker& c) {
                FamilyParameters edf{FamilyType::edf, 19, 3, {3, 3, 3}, {3}, {}};
                c.expect(parameters_feasible(edf), "(19,3,3,3)-EDF identity");
                FamilyParameters ds{FamilyType::ds, 21, 1, {5}, {1}, {}};
                c.expect(parameters_feasible(ds), "(21,5,1)-DS identity");
                int feasible_n = 0;
                std::int64_t found_n = 0;
                for (std::int64_t n = 2; n <= 60; ++n) {
                    FamilyParameters sedf{FamilyType::sedf, n, 3, {2, 2, 2}, {1}, {}};
                    if (parameters_feasible(sedf)) {
                        ++feasible_n;
                        found_n = n;
                    }
                }
                c.expect(feasible_n == 1 && found_n == 9, "(n,3,2,1)-SEDF forces n = 9");
            });

        // ---- implication lattice -----------------------------------------
        add("implication-sedf-to-edf", "(10,2,3,1)-SEDF reads as a (10,2,3,2)-EDF", [](Checker& c) {
            auto r = implication_check(two_set_sedf(3).family, FamilyType::sedf, FamilyType::edf);
            c.expect(r.pass && r.parameters->display() == "(10,2,3,2)-EDF", "parameters");
        });
        add("implication-ds-to-edf", "(21,5,1)-DS lifts to a (21,5,1,1)-EDF", [](Checker& c) {
            auto r = implication_check(z21_difference_set_family(), FamilyType::ds, FamilyType::edf);
            c.expect(r.pass && r.parameters->display() == "(21,5,1,1)-EDF", "parameters");
        });
        add("implication-pedf-to-gedf", "the Z13 PEDF reads as a GEDF with lambda 11",
            [](Checker& c) {
                auto r = implication_check(pedf_example_z13().family, FamilyType::pedf,
                                           FamilyType::gedf);
                c.expect(r.pass && r.parameters->lambdas == std::vector<std::int64_t>{11},
                         "lambda 5+3+3");
            });

        // ---- partition characterizations ----------------------------------
        add("partition-gsedf-ds-z7", "Z7 partition: GSEDF <=> each part a DS", [](Checker& c) {
            auto r = maximal_gsedf_ds_check(qr_gsedf().family);
            c.expect(r.whole.pass, "GSEDF side");
            c.expect(r.equivalence_consistent, "equivalence");
            c.expect(r.parts[3].pass && r.parts[3].parameters->display() == "(7,4,2)-DS",
                     "{0,3,5,6} is a (7,4,2)-DS");
        });
        add("partition-gsedf-ds-complement", "Z13 complement partition: {1..12} is a (13,12,11)-DS",
            [](Checker& c) {
                auto r = maximal_gsedf_ds_check(complement_gsedf(13).family);
                c.expect(r.whole.pass && r.equivalence_consistent, "GSEDF + equivalence");
                c.expect(r.parts[1].parameters->display() == "(13,12,11)-DS", "complement part");
            });
        add("partition-gsedf-ds-z13-fails", "the Z13 six-set partition is not a GSEDF",
            [](Checker& c) {
                auto r = maximal_gsedf_ds_check(pedf_example_z13().family);
                c.expect(!r.whole.pass, "GSEDF side fails");
                c.expect(r.equivalence_consistent, "DS side fails consistently");
            });
        add("partition-pedf-df-z13", "Z13 partition: PEDF <=> each size class a DF",
            [](Checker& c) {
                auto r = maximal_pedf_df_check(pedf_example_z13().family);
                c.expect(r.whole.pass && r.equivalence_consistent, "PEDF + equivalence");
                c.expect(r.parts[0].parameters->display() == "(13,2,3,1)-DF", "size-3 class");
                c.expect(r.parts[1].parameters->display() == "(13,1,4,1)-DF", "size-4 class");
                c.expect(r.parts[2].parameters->display() == "(13,3,1,0)-DF", "size-1 class");
            });

        // ---- constructions -------------------------------------------------
        add("construct-tonchev-z19", "the (19,3,3) coset construction gives the known family",
            [](Checker& c) {
                auto r = tonchev_edf(19, 3, 3, FiniteField::prime(19));
                c.expect(r.family == z19_tonchev_edf_family(), "exact sets");
                c.expect(r.report.pass && r.report.parameters->display() == "(19,3,3,3)-EDF",
                         "verified parameters");
            });
        add("construct-tonchev-degenerate", "the (7,1,3) case warns about the lambda mismatch",
            [](Checker& c) {
                auto r = tonchev_edf(7, 1, 3, FiniteField::prime(7));
                c.expect(r.report.pass, "singleton cosets verify");
                c.expect(!r.notes.empty(), "mismatch note present");
            });
        add("construct-two-set-sedf", "two-set SEDFs for k = 1, 3, 4", [](Checker& c) {
            auto r3 = two_set_sedf(3);
            c.expect(r3.family == family_of(10, {{0, 1, 2}, {3, 6, 9}}), "k=3 sets");
            c.expect(r3.report.pass && r3.report.parameters->display() == "(10,2,3,1)-SEDF", "k=3");
            c.expect(two_set_sedf(1).report.pass, "k=1");
            auto r4 = two_set_sedf(4);
            c.expect(r4.report.pass && r4.report.parameters->display() == "(17,2,4,1)-SEDF", "k=4");
        });
        add("construct-singleton-sedf", "singleton SEDFs for n = 2, 5, 7", [](Checker& c) {
            for (std::int64_t n : {2, 5, 7}) {
                auto r = singleton_sedf(n);
                c.expect(r.report.pass && r.report.parameters->lambdas[0] == 1,
                         "n=" + std::to_string(n));
            }
        });
        add("construct-complement-gsedf", "complement GSEDFs verify and pass the DS check",
            [](Checker& c) {
                for (std::int64_t n : {2, 7, 13}) {
                    auto r = complement_gsedf(n);
                    c.expect(r.report.pass, "n=" + std::to_string(n));
                }
                c.expect(maximal_gsedf_ds_check(complement_gsedf(13).family).equivalence_consistent,
                         "n=13 partition check");
            });
        add("construct-qr-gsedf", "the Z7 fixture verifies and matches the strong code",
            [](Checker& c) {
                auto r = qr_gsedf();
                c.expect(r.report.pass && r.report.parameters->display() ==
                                              "(7,4;1,1,1,4;1,1,1,2)-GSEDF",
                         "parameters");
                AmdCode code = code_from_family(r.family, FamilyType::gsedf);
                auto eval = eval_strong_optimum(code);
                c.expect(eval.eps_hat == Rational(1), "derived code's strong optimum");
            });
        add("construct-pedf-z13", "the Z13 fixture is a PEDF, a GEDF, and not a GSEDF",
            [](Checker& c) {
                auto r = pedf_example_z13();
                c.expect(r.report.pass, "PEDF");
                c.expect(!verify_gsedf(r.family).pass, "not GSEDF");
                c.expect(verify_gedf(r.family).parameters->lambdas[0] == 11, "GEDF lambda 11");
            });

        // ---- weak game ------------------------------------------------------
        add("weak-ds-code", "the deterministic Z21 code detects with eps 1/5 everywhere",
            [](Checker& c) {
                AmdCode code = z21_ds_code();
                for (std::int64_t idx : code.support())
                    c.expect(code.message_prob(idx) == Rational(1, 5), "Pr[g] = 1/5");
                WeakEvaluation eval = eval_weak_optimum(code);
                c.expect(eval.eps_hat == Rational(1, 5), "eps_hat");
                for (std::int64_t d = 1; d < 21; ++d)
                    c.expect(eval.eps_by_delta[static_cast<std::size_t>(d)] == Rational(1, 5),
                             "eps uniform over deltas");
            });
        add("weak-gedf-counterexample", "the Z13 two-set code beats its rand bound at delta 1",
            [](Checker& c) {
                AmdCode code = z13_gedf_code();
                c.expect(eval_weak_delta(code, 1) == Rational(1, 4), "eps_1 = 1/4");
                WeakBounds b = weak_bounds(code);
                c.expect(b.rand == Rational(5, 24), "rand bound 5/24");
                c.expect(b.guess == Rational(1, 5), "guess bound 1/5");
                c.expect(!classify(code).weak_R, "not R-optimal");
            });
        add("weak-z10-code", "the Z10 code is R-optimal with eps 1/2", [](Checker& c) {
            AmdCode code = z10_weak_r_optimal_code();
            WeakEvaluation eval = eval_weak_optimum(code);
            c.expect(eval.eps_hat == Rational(1, 2), "eps_hat 1/2");
            c.expect(weak_bounds(code).rand == Rational(1, 2), "rand bound 1/2");
            c.expect(classify(code).weak_R, "R-optimal");
        });
        add("weak-pedf-code", "the Z13 PEDF code meets its rand bound 65/72", [](Checker& c) {
            AmdCode code = code_from_family(pedf_example_z13().family, FamilyType::pedf);
            WeakEvaluation eval = eval_weak_optimum(code);
            c.expect(eval.eps_hat == Rational(65, 72), "eps_hat 65/72");
            c.expect(classify(code).weak_R, "R-optimal");
        });
        add("weak-edf-code", "the Z19 EDF code detects with eps k(m-1)/(n-1) = 1/3",
            [](Checker& c) {
                AmdCode code = code_from_family(z19_tonchev_edf_family(), FamilyType::edf);
                c.expect(eval_weak_optimum(code).eps_hat == Rational(1, 3), "eps_hat 1/3");
                c.expect(classify(code).weak_R, "R-optimal");
            });
        add("weak-uniform-strategy", "the uniform strategy achieves exactly the rand bound",
            [](Checker& c) {
                for (AmdCode code : {z21_ds_code(), z13_gedf_code(), z10_weak_r_optimal_code()}) {
                    c.expect(eval_strategy(code, uniform_weak_strategy(code)) == weak_bounds(code).rand,
                             "uniform strategy = rand bound");
                }
            });

        // ---- strong game ----------------------------------------------------
        add("strong-z7-code", "per-source optima of the Z7 strong code", [](Checker& c) {
            AmdCode code = z7_strong_code();
            StrongEvaluation eval = eval_strong_optimum(code);
            for (std::size_t s = 0; s < 3; ++s)
                c.expect(eval.eps_hat_s[s] == Rational(1), "eps_hat for a singleton source");
            c.expect(eval.eps_hat_s[3] == Rational(1, 2), "eps_hat for the fourth source");
            c.expect(eval.eps_hat == Rational(1), "overall");
            for (std::int64_t d = 1; d < 7; ++d)
                c.expect(eval_strong_delta(code, 3, d) == Rational(1, 2),
                         "every delta wins half the time against source 4");
            c.expect(eval_strong_delta(code, 0, 1) == Rational(1), "E(1)+1 = E(2)");
            auto dist = induced_message_distribution(code);
            for (const auto& [idx, p] : dist) {
                bool singleton = idx == 1 || idx == 2 || idx == 4;
                c.expect(p == (singleton ? Rational(1, 4) : Rational(1, 16)), "induced Pr[g]");
            }
        });
        add("strong-z7-classify", "the Z7 strong code is R-optimal but not G-optimal",
            [](Checker& c) {
                AmdCode code = z7_strong_code();
                Classification cls = classify(code);
                c.expect(cls.strong_R, "strong R");
                c.expect(!cls.strong_G, "not strong G");
                StrongBounds b = strong_bounds(code);
                c.expect(b.rand_s[3] == Rational(1, 2) && b.guess_s[3] == Rational(1, 4),
                         "source-4 bounds");
                c.expect(b.rand_s[0] == Rational(1) && b.guess_s[0] == Rational(1),
                         "singleton-source bounds");
            });
        add("strong-two-set-sedf", "the (10,2,3,1)-SEDF code detects with eps 1/k = 1/3",
            [](Checker& c) {
                AmdCode code = code_from_family(two_set_sedf(3).family, FamilyType::sedf);
                StrongEvaluation eval = eval_strong_optimum(code);
                c.expect(eval.eps_hat_s[0] == Rational(1, 3) && eval.eps_hat_s[1] == Rational(1, 3),
                         "per-source 1/3");
                SimultaneousOptimalityReport r = check_simultaneous_optimality(code);
                c.expect(r.strong_simultaneous, "strong R+G simultaneous");
                c.expect(r.consistent, "m=2, n=k^2+1 equality case");
            });
        add("strong-singleton-sedf", "singleton codes always lose: eps_hat_s = 1", [](Checker& c) {
            AmdCode code = code_from_family(singleton_sedf(5).family, FamilyType::sedf);
            for (const auto& e : eval_strong_optimum(code).eps_hat_s)
                c.expect(e == Rational(1), "eps_hat_s = 1");
        });

        // ---- code <-> family translations -----------------------------------
        add("recover-gsedf-from-z7-code", "the Z7 strong code recovers the Z7 GSEDF",
            [](Checker& c) {
                RecoveredFamily r = family_from_code(z7_strong_code(), FamilyType::gsedf);
                c.expect(r.family == qr_gsedf().family, "same sets");
                c.expect(r.parameters.display() == "(7,4;1,1,1,4;1,1,1,2)-GSEDF", "parameters");
            });
        add("z10-code-is-not-a-pedf", "recovery from the Z10 code fails: not k-regular",
            [](Checker& c) {
                bool raised = false;
                try {
                    family_from_code(z10_weak_r_optimal_code(), FamilyType::pedf);
                } catch (const error& e) {
                    raised = e.code() == errc::precondition &&
                             std::string(e.what()).find("k-regular") != std::string::npos;
                }
                c.expect(raised, "precondition error names k-regularity");
            });
        add("edf-code-round-trip", "code_from_family then family_from_code is the identity",
            [](Checker& c) {
                SetFamily original = z19_tonchev_edf_family();
                RecoveredFamily r =
                    family_from_code(code_from_family(original, FamilyType::edf), FamilyType::edf);
                c.expect(r.family == original, "same sets");
                c.expect(r.parameters.lambdas == std::vector<std::int64_t>{3}, "lambda 3");
            });

        // ---- search ----------------------------------------------------------
        add("search-ds-z21", "the (21,5,1)-DS search finds the known set's class", [](Checker& c) {
            SearchSpec spec{make_cyclic_group(21), FamilyType::ds, {5}, {1},
                            SearchMode::all_up_to_translation, 0, 1};
            SearchCertificate cert = search_family(spec);
            c.expect(cert.outcome == SearchOutcome::found, "found");
            SetFamily known = canonical_translate(z21_difference_set_family(), FamilyType::ds, {1});
            bool present = false;
            for (const auto& s : cert.solutions) present = present || s == known;
            c.expect(present, "known class among solutions");
        });
        add("search-edf-z19", "the (19,3,3,3)-EDF search finds the coset family's class",
            [](Checker& c) {
                SearchSpec spec{make_cyclic_group(19), FamilyType::edf, {3, 3, 3}, {3},
                                SearchMode::all_up_to_translation, 0, 1};
                SearchCertificate cert = search_family(spec);
                c.expect(cert.outcome == SearchOutcome::found, "found");
                SetFamily known = canonical_translate(z19_tonchev_edf_family(), FamilyType::edf, {3});
                bool present = false;
                for (const auto& s : cert.solutions) present = present || s == known;
                c.expect(present, "known class among solutions");
            });
        add("search-sedf-nonexistence", "(9,3,2,1)-SEDFs do not exist over Z9 or Z3xZ3",
            [](Checker& c) {
                for (const auto& g : abelian_groups_of_order(9)) {
                    SearchSpec spec{g, FamilyType::sedf, {2, 2, 2}, {1},
                                    SearchMode::all_up_to_translation, 0, 1};
                    SearchCertificate cert = certify_nonexistence(spec);
                    c.expect(cert.outcome == SearchOutcome::exhausted_no_solution,
                             "exhausted over " + g.describe());
                }
            });
        add("search-sedf-existence", "a (10,2,3,1)-SEDF exists over Z10", [](Checker& c) {
            SearchSpec spec{make_cyclic_group(10), FamilyType::sedf, {3, 3}, {1},
                            SearchMode::all_up_to_translation, 0, 1};
            SearchCertificate cert = certify_nonexistence(spec);
            c.expect(cert.outcome == SearchOutcome::found, "found");
        });

        // ---- structural consequences ------------------------------------------
        add("gsedf-singleton-consequence", "a GSEDF with a singleton set is maximal with lambda 1",
            [](Checker& c) {
                auto r = verify_gsedf(qr_gsedf().family);
                c.expect(r.pass, "verifies");
                const auto& p = *r.parameters;
                std::int64_t a = 0;
                for (std::size_t k : p.sizes) a += static_cast<std::int64_t>(k);
                for (std::size_t i = 0; i < p.sizes.size(); ++i)
                    if (p.sizes[i] == 1)
                        c.expect(p.lambdas[i] == 1 && a == p.n, "lambda_i = 1 and sum k_i = n");
            });

        return v;
    }();
    return all;
}

std::vector<ItemResult> run_all() {
    std::vector<ItemResult> results;
    for (const auto& item : items()) {
        Checker checker;
        ItemResult r;
        r.name = item.name;
        r.summary = item.summary;
        try {
            item.run(checker);
            r.failures = checker.failures();
        } catch (const std::exception& e) {
            r.failures.push_back(std::string("exception: ") + e.what());
        }
        r.pass = r.failures.empty();
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace amdkit::corpus
