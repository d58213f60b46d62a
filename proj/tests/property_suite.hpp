#pragma once

// Randomized property checks shared by the property test binary and the
// acceptance suite: exact bound inequalities, sum identities, and strategy
// domination over randomly generated codes.

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "amdkit/amd.hpp"

namespace amdkit::testing {

struct PropertyStats {
    int codes_checked = 0;
    long long strategies_checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

inline AmdCode random_code(std::mt19937_64& rng) {
    std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 49); // 2..50
    FiniteAbelianGroup group = [&] {
        if (n % 6 == 0 && rng() % 3 == 0) return FiniteAbelianGroup({2, n / 2});
        return make_cyclic_group(n);
    }();
    // 2..6 sources, never more than the group can host disjointly.
    std::int64_t m = 2 + static_cast<std::int64_t>(rng() % std::min<std::int64_t>(5, n - 1));
    std::vector<std::int64_t> pool;
    for (std::int64_t i = 0; i < n; ++i) pool.push_back(i);
    std::shuffle(pool.begin(), pool.end(), rng);

    std::vector<AmdSource> sources;
    std::int64_t cursor = 0;
    for (std::int64_t s = 0; s < m; ++s) {
        std::int64_t still_to_fill = m - 1 - s;
        std::int64_t available = n - cursor - still_to_fill; // >= 1 by induction
        std::int64_t size = 1 + static_cast<std::int64_t>(rng() % std::min<std::int64_t>(4, available));
        AmdSource src;
        src.name = "s" + std::to_string(s + 1);
        std::int64_t weight_total = 0;
        std::vector<std::int64_t> weights;
        for (std::int64_t i = 0; i < size; ++i) {
            src.set.push_back(pool[static_cast<std::size_t>(cursor++)]);
            weights.push_back(1 + static_cast<std::int64_t>(rng() % 4));
            weight_total += weights.back();
        }
        for (std::int64_t w : weights) src.probs.emplace_back(w, weight_total);
        sources.push_back(std::move(src));
    }
    return AmdCode(std::move(group), std::move(sources));
}

inline WeakStrategy random_strategy(const AmdCode& code, std::mt19937_64& rng) {
    WeakStrategy strategy;
    std::int64_t weight_total = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> picks;
    std::size_t support = 1 + rng() % 5;
    for (std::size_t i = 0; i < support; ++i) {
        std::int64_t delta = 1 + static_cast<std::int64_t>(rng() % (code.n() - 1));
        std::int64_t w = 1 + static_cast<std::int64_t>(rng() % 8);
        bool merged = false;
        for (auto& [d, wt] : picks)
            if (d == delta) {
                wt += w;
                merged = true;
            }
        if (!merged) picks.emplace_back(delta, w);
        weight_total += w;
    }
    for (const auto& [d, w] : picks) strategy.distribution.emplace_back(d, Rational(w, weight_total));
    return strategy;
}

inline PropertyStats run_property_suite(int num_codes, int strategies_per_code,
                                        std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    PropertyStats stats;
    auto report = [&](const AmdCode& code, const std::string& what) {
        if (stats.failures.size() >= 16) return;
        std::ostringstream os;
        os << what << " [n=" << code.n() << " m=" << code.source_count() << " a=" << code.a()
           << "]";
        stats.failures.push_back(os.str());
    };

    for (int trial = 0; trial < num_codes; ++trial) {
        AmdCode code = random_code(rng);
        ++stats.codes_checked;
        const std::int64_t m = static_cast<std::int64_t>(code.source_count());
        const std::int64_t a = code.a();

        WeakEvaluation weak = eval_weak_optimum(code);
        StrongEvaluation strong = eval_strong_optimum(code);
        WeakBounds wb = weak_bounds(code);
        StrongBounds sb = strong_bounds(code);

        // Lower bounds on the weak optimum.
        if (!(weak.eps_hat >= wb.rand)) report(code, "weak eps_hat below the rand bound");
        if (!(weak.eps_hat >= wb.guess)) report(code, "weak eps_hat below the guess bound");
        if (weak.eps_hat.compare_squared_to(wb.product_rhs) < 0)
            report(code, "weak eps_hat^2 below (m-1)/(m(n-1))");

        // Weak sum identity: sum over deltas of eps_delta = a(m-1)/m.
        Rational weak_sum;
        for (std::int64_t d = 1; d < code.n(); ++d)
            weak_sum += weak.eps_by_delta[static_cast<std::size_t>(d)];
        if (weak_sum != Rational(a * (m - 1), m)) report(code, "weak sum identity violated");

        // Per-source bounds and sum identities.
        for (std::size_t s = 0; s < code.source_count(); ++s) {
            if (!(strong.eps_hat_s[s] >= sb.rand_s[s]))
                report(code, "strong eps_hat_s below the rand bound");
            if (!(strong.eps_hat_s[s] >= sb.guess_s[s]))
                report(code, "strong eps_hat_s below the guess bound");
            Rational strong_sum;
            for (std::int64_t d = 1; d < code.n(); ++d)
                strong_sum += strong.eps[s][static_cast<std::size_t>(d)];
            if (strong_sum != Rational(a - code.a_s(s)))
                report(code, "strong sum identity violated");
        }

        // k-uniform product bound on the strong optimum.
        if (code.k_uniform() && sb.product_rhs) {
            if (strong.eps_hat.compare_squared_to(*sb.product_rhs) < 0)
                report(code, "strong eps_hat^2 below (m-1)/(n-1)");
        }

        // The uniform strategy achieves the rand bound exactly.
        if (eval_strategy(code, uniform_weak_strategy(code)) != wb.rand)
            report(code, "uniform strategy does not equal the rand bound");

        // No randomized strategy beats the per-delta optimum.
        for (int i = 0; i < strategies_per_code; ++i) {
            WeakStrategy sigma = random_strategy(code, rng);
            ++stats.strategies_checked;
            if (!(eval_strategy(code, sigma) <= weak.eps_hat))
                report(code, "randomized strategy beats eps_hat");
        }

        // Same domination per source in the strong game.
        for (int i = 0; i < 4; ++i) {
            StrongStrategy sigma;
            for (std::size_t s = 0; s < code.source_count(); ++s)
                sigma.per_source.push_back(random_strategy(code, rng));
            std::vector<Rational> eps = eval_strategy(code, sigma);
            for (std::size_t s = 0; s < code.source_count(); ++s)
                if (!(eps[s] <= strong.eps_hat_s[s]))
                    report(code, "randomized strong strategy beats eps_hat_s");
        }
    }
    return stats;
}

} // namespace amdkit::testing
