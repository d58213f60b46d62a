// Acceptance suite: one pass/fail line per criterion, exact values, with the
// stated wall-clock limits enforced. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "amdkit/constructions.hpp"
#include "amdkit/corpus.hpp"
#include "amdkit/search.hpp"
#include "property_suite.hpp"

using namespace amdkit;

namespace {

struct Criterion {
    std::string name;
    std::string description;
    double limit_ms;
    std::function<void(std::vector<std::string>&)> run;
};

void expect(std::vector<std::string>& failures, bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
}

} // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({"criterion-01", "deterministic Z21 code: eps 1/5 for every delta", 1000,
                        [](std::vector<std::string>& f) {
                            AmdCode code = corpus::z21_ds_code();
                            WeakEvaluation eval = eval_weak_optimum(code);
                            expect(f, eval.eps_hat == Rational(1, 5), "eps_hat != 1/5");
                            int deltas = 0;
                            for (std::int64_t d = 1; d < 21; ++d, ++deltas)
                                expect(f, eval.eps_by_delta[static_cast<std::size_t>(d)] == Rational(1, 5),
                                       "eps_delta != 1/5 at delta " + std::to_string(d));
                            expect(f, deltas == 20, "expected 20 deltas");
                        }});

    criteria.push_back({"criterion-02", "Z7 strong code: per-source optima and R- but not G-optimal",
                        1000, [](std::vector<std::string>& f) {
                            AmdCode code = corpus::z7_strong_code();
                            StrongEvaluation eval = eval_strong_optimum(code);
                            for (std::size_t s = 0; s < 3; ++s)
                                expect(f, eval.eps_hat_s[s] == Rational(1),
                                       "eps_hat_s != 1 for source " + std::to_string(s + 1));
                            expect(f, eval.eps_hat_s[3] == Rational(1, 2), "eps_hat_4 != 1/2");
                            Classification cls = classify(code);
                            expect(f, cls.strong_R, "strong_R false");
                            expect(f, !cls.strong_G, "strong_G true");
                            StrongBounds b = strong_bounds(code);
                            expect(f, b.guess_s[3] == Rational(1, 4), "guess bound at s=4 != 1/4");
                            expect(f, b.guess_s[3] < eval.eps_hat_s[3], "1/4 < 1/2 violated");
                        }});

    criteria.push_back({"criterion-03", "cyclotomic coset construction reproduces the F19 family",
                        1000, [](std::vector<std::string>& f) {
                            auto r = tonchev_edf(19, 3, 3, FiniteField::prime(19));
                            expect(f, find_primitive_element(FiniteField::prime(19)) == GroupElement{2},
                                   "alpha != 2");
                            expect(f, r.family == corpus::z19_tonchev_edf_family(),
                                   "sets differ from {1,7,11},{4,9,6},{16,17,5}");
                            expect(f, r.report.pass, "verification failed");
                            expect(f, r.report.parameters->display() == "(19,3,3,3)-EDF",
                                   "parameters != (19,3,3,3)-EDF");
                        }});

    criteria.push_back({"criterion-04", "Z13 six-set family: tables, PEDF pass, GSEDF fail", 1000,
                        [](std::vector<std::string>& f) {
                            SetFamily fam = pedf_example_z13().family;
                            const std::vector<std::int64_t> t1{2, 3, 2, 2, 3, 3, 3, 3, 2, 2, 3, 2};
                            const std::vector<std::int64_t> t2{3, 2, 3, 3, 2, 2, 2, 2, 3, 3, 2, 3};
                            auto out1 = outgoing_differences(fam, 0);
                            auto out2 = outgoing_differences(fam, 1);
                            for (std::int64_t d = 1; d <= 12; ++d) {
                                expect(f, out1.count_of_index(d) == t1[static_cast<std::size_t>(d - 1)],
                                       "first table differs at " + std::to_string(d));
                                expect(f, out2.count_of_index(d) == t2[static_cast<std::size_t>(d - 1)],
                                       "second table differs at " + std::to_string(d));
                            }
                            auto pedf = verify_pedf(fam);
                            expect(f, pedf.pass, "PEDF verification failed");
                            expect(f,
                                   pedf.parameters->lambdas == std::vector<std::int64_t>{5, 3, 3},
                                   "PEDF lambdas != (5,3,3)");
                            auto gsedf = verify_gsedf(fam);
                            expect(f, !gsedf.pass, "GSEDF unexpectedly passed");
                            expect(f,
                                   gsedf.counterexample &&
                                       gsedf.counterexample->context ==
                                           "outgoing differences of set 1",
                                   "GSEDF failure not at the first set");
                        }});

    criteria.push_back({"criterion-05", "Z13 two-set code: eps_1 = 1/4 beats rand bound 5/24", 1000,
                        [](std::vector<std::string>& f) {
                            AmdCode code = corpus::z13_gedf_code();
                            expect(f, eval_weak_delta(code, 1) == Rational(1, 4), "eps_1 != 1/4");
                            expect(f, weak_bounds(code).rand == Rational(5, 24),
                                   "rand bound != 5/24");
                            expect(f, !classify(code).weak_R, "weak_R true");
                        }});

    criteria.push_back({"criterion-06", "Z10 code: R-optimal at 1/2, and not a PEDF in disguise",
                        1000, [](std::vector<std::string>& f) {
                            AmdCode code = corpus::z10_weak_r_optimal_code();
                            WeakEvaluation eval = eval_weak_optimum(code);
                            WeakBounds b = weak_bounds(code);
                            expect(f, eval.eps_hat == Rational(1, 2), "eps_hat != 1/2");
                            expect(f, b.rand == Rational(1, 2), "rand bound != 1/2");
                            expect(f, classify(code).weak_R, "weak_R false");
                            bool raised = false;
                            try {
                                family_from_code(code, FamilyType::pedf);
                            } catch (const error& e) {
                                raised = e.code() == errc::precondition &&
                                         std::string(e.what()).find("k-regular") !=
                                             std::string::npos;
                            }
                            expect(f, raised, "missing not-k-regular precondition error");
                        }});

    criteria.push_back({"criterion-07", "SEDF existence frontier at desk scale", 60000,
                        [](std::vector<std::string>& f) {
                            for (const auto& g : abelian_groups_of_order(9)) {
                                SearchSpec spec{g, FamilyType::sedf, {2, 2, 2}, {1},
                                                SearchMode::all_up_to_translation, 0, 1};
                                auto cert = certify_nonexistence(spec);
                                expect(f, cert.outcome == SearchOutcome::exhausted_no_solution,
                                       "(9,3,2,1) not refuted over " + g.describe());
                            }
                            SearchSpec spec{make_cyclic_group(10), FamilyType::sedf, {3, 3}, {1},
                                            SearchMode::all_up_to_translation, 0, 1};
                            auto cert = search_family(spec);
                            expect(f, cert.outcome == SearchOutcome::found,
                                   "(10,2,3,1) not found over Z10");
                        }});

    criteria.push_back({"criterion-08", "property suite: 1000 random codes, 100 strategies each",
                        300000, [](std::vector<std::string>& f) {
                            auto stats = testing::run_property_suite(1000, 100, 20240811);
                            expect(f, stats.codes_checked == 1000, "fewer than 1000 codes");
                            expect(f, stats.strategies_checked == 100000,
                                   "fewer than 100000 strategies");
                            for (const auto& failure : stats.failures) expect(f, false, failure);
                        }});

    criteria.push_back({"criterion-09", "implication lattice holds on every fixture family", 30000,
                        [](std::vector<std::string>& f) {
                            // Constructed fixtures plus families found by search.
                            std::vector<corpus::NamedFamily> families = corpus::fixture_families();
                            SearchSpec ds_spec{make_cyclic_group(21), FamilyType::ds, {5}, {1},
                                               SearchMode::all_up_to_translation, 0, 1};
                            for (const auto& s : search_family(ds_spec).solutions)
                                families.push_back({"found-z21-ds", s});
                            SearchSpec sedf_spec{make_cyclic_group(10), FamilyType::sedf, {3, 3},
                                                 {1}, SearchMode::all_up_to_translation, 0, 1};
                            for (const auto& s : search_family(sedf_spec).solutions)
                                families.push_back({"found-z10-sedf", s});

                            int edges_checked = 0;
                            for (const auto& named : families) {
                                for (const auto& [from, to] : lattice_edges()) {
                                    VerificationReport source;
                                    try {
                                        source = verify_family(named.family, from);
                                    } catch (const error&) {
                                        continue;
                                    }
                                    if (!source.pass) continue;
                                    ++edges_checked;
                                    auto target = implication_check(named.family, from, to);
                                    expect(f, target.pass,
                                           named.name + ": " + family_type_name(from) + " -> " +
                                               family_type_name(to) + " failed");
                                }
                            }
                            expect(f, edges_checked >= 40, "too few applicable edges exercised");
                        }});

    criteria.push_back({"criterion-10", "code<->family round trips are the identity", 10000,
                        [](std::vector<std::string>& f) {
                            SetFamily edf = corpus::z19_tonchev_edf_family();
                            RecoveredFamily r1 = family_from_code(
                                code_from_family(edf, FamilyType::edf), FamilyType::edf);
                            expect(f, r1.family == edf, "EDF round trip changed the sets");
                            expect(f, r1.parameters.lambdas == std::vector<std::int64_t>{3},
                                   "EDF round trip changed lambda");

                            SetFamily gsedf = qr_gsedf().family;
                            RecoveredFamily r2 = family_from_code(
                                code_from_family(gsedf, FamilyType::gsedf), FamilyType::gsedf);
                            expect(f, r2.family == gsedf, "GSEDF round trip changed the sets");
                            expect(f,
                                   r2.parameters.lambdas == std::vector<std::int64_t>{1, 1, 1, 2},
                                   "GSEDF round trip changed lambdas");

                            for (std::int64_t k = 2; k <= 4; ++k) {
                                SetFamily sedf = two_set_sedf(k).family;
                                RecoveredFamily r = family_from_code(
                                    code_from_family(sedf, FamilyType::sedf), FamilyType::sedf);
                                expect(f, r.family == sedf,
                                       "SEDF round trip changed the sets at k=" + std::to_string(k));
                                expect(f, r.parameters.lambdas == std::vector<std::int64_t>{1},
                                       "SEDF round trip changed lambda at k=" + std::to_string(k));
                            }
                        }});

    int failed = 0;
    for (const auto& criterion : criteria) {
        std::vector<std::string> failures;
        auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(failures);
        } catch (const std::exception& e) {
            failures.push_back(std::string("exception: ") + e.what());
        }
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        if (ms > criterion.limit_ms)
            failures.push_back("exceeded the " + std::to_string(criterion.limit_ms) +
                               " ms limit");
        bool pass = failures.empty();
        failed += pass ? 0 : 1;
        std::printf("%s %s: %s (%.0f ms)\n", pass ? "PASS" : "FAIL", criterion.name.c_str(),
                    criterion.description.c_str(), ms);
        for (const auto& f : failures) std::printf("     %s\n", f.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
