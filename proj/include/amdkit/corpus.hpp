#pragma once

#include <functional>
#include <string>
#include <vector>

#include "amdkit/amd.hpp"

namespace amdkit::corpus {

/// One regression item: a named set of exact checks over a worked example.
struct Item {
    std::string name;
    std::string summary;
    std::function<void(class Checker&)> run;
};

class Checker {
public:
    void expect(bool condition, const std::string& what) {
        if (!condition) failures_.push_back(what);
    }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    std::vector<std::string> failures_;
};

struct ItemResult {
    std::string name;
    std::string summary;
    bool pass = false;
    std::vector<std::string> failures;
};

const std::vector<Item>& items();
std::vector<ItemResult> run_all();

// Fixed families and codes the corpus (and the acceptance suite) exercises.
SetFamily z21_difference_set_family();
SetFamily z19_tonchev_edf_family();
SetFamily z13_two_set_gedf_family();      // {0,1},{2,4,6}
SetFamily z11_three_set_gedf_family();    // {0},{1},{3,5}
SetFamily z13_df_three_family();          // {0,1,4},{3,5,10}
SetFamily z13_df_four_family();           // {2,6,7,9}
SetFamily z13_df_singletons_family();     // {8},{11},{12}
AmdCode z21_ds_code();
AmdCode z7_strong_code();                 // E(1)=1, E(2)=2, E(3)=4, E(4) in {0,3,5,6}
AmdCode z13_gedf_code();
AmdCode z10_weak_r_optimal_code();        // E(1)=0, E(2)=5, E(3) in {1,9}, E(4) in {2,3}

/// Named families for lattice soundness sweeps.
struct NamedFamily {
    std::string name;
    SetFamily family;
};
std::vector<NamedFamily> fixture_families();

} // namespace amdkit::corpus
