#include "amdkit/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace amdkit {

std::string search_mode_name(SearchMode m) {
    switch (m) {
        case SearchMode::first_solution: return "first";
        case SearchMode::all_up_to_translation: return "all";
        case SearchMode::count_only: return "count";
    }
    fail(errc::internal, "unknown search mode");
}

SearchMode search_mode_from_name(const std::string& name) {
    if (name == "first") return SearchMode::first_solution;
    if (name == "all") return SearchMode::all_up_to_translation;
    if (name == "count") return SearchMode::count_only;
    fail(errc::usage, "unknown search mode '" + name + "'");
}

std::string search_outcome_name(SearchOutcome o) {
    switch (o) {
        case SearchOutcome::found: return "found";
        case SearchOutcome::exhausted_no_solution: return "exhausted-no-solution";
        case SearchOutcome::budget_exhausted: return "budget-exhausted";
    }
    fail(errc::internal, "unknown search outcome");
}

FamilyParameters SearchSpec::parameters() const {
    FamilyParameters p;
    p.type = type;
    p.n = group.order();
    p.m = sizes.size();
    p.sizes = sizes;
    p.lambdas = lambdas;
    if (type == FamilyType::ds) {
        if (sizes.size() != 1) fail(errc::parameter, "ds search takes a single set size");
        p.m = 1;
    }
    if (type == FamilyType::pedf) {
        for (std::size_t s : sizes) {
            auto it = std::find_if(p.classes.begin(), p.classes.end(),
                                   [&](const SizeClass& c) { return c.size == s; });
            if (it == p.classes.end())
                p.classes.push_back({1, s});
            else
                ++it->count;
        }
        if (lambdas.size() != p.classes.size())
            fail(errc::parameter, "pedf search needs one lambda per size class");
    }
    return p;
}

namespace {

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string spec_signature(const SearchSpec& spec) {
    std::ostringstream os;
    os << family_type_name(spec.type) << "|" << spec.group.describe() << "|sizes=";
    for (std::size_t s : spec.sizes) os << s << ",";
    os << "|lambdas=";
    for (std::int64_t l : spec.lambdas) os << l << ",";
    return os.str();
}

std::string spec_hash_hex(const SearchSpec& spec) {
    std::uint64_t h = fnv1a(spec_signature(spec));
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

bool internal_type(FamilyType t) { return t == FamilyType::ds || t == FamilyType::df; }
bool bounded_type(FamilyType t) { return t == FamilyType::bedf || t == FamilyType::bgsedf; }

struct BudgetExhausted {};

// Interchangeability groups: positions of equal set size whose lambda
// targets coincide may be permuted without changing the family.
std::vector<int> position_groups(const SearchSpec& spec) {
    const std::size_t m = spec.sizes.size();
    std::vector<int> group_of(m, -1);
    std::vector<std::pair<std::size_t, std::int64_t>> seen; // (size, target) per group
    auto target_of = [&](std::size_t i) -> std::int64_t {
        switch (spec.type) {
            case FamilyType::gsedf:
            case FamilyType::bgsedf:
                return spec.lambdas[i];
            default:
                return 0; // single shared target, or per-class target determined by size
        }
    };
    for (std::size_t i = 0; i < m; ++i) {
        std::pair<std::size_t, std::int64_t> key{spec.sizes[i], target_of(i)};
        int g = -1;
        for (std::size_t j = 0; j < seen.size(); ++j)
            if (seen[j] == key) g = static_cast<int>(j);
        if (g < 0) {
            g = static_cast<int>(seen.size());
            seen.push_back(key);
        }
        group_of[i] = g;
    }
    return group_of;
}

class Searcher {
public:
    explicit Searcher(const SearchSpec& spec)
        : spec_(spec), g_(spec.group), n_(spec.group.order()), m_(spec.sizes.size()),
          groups_(position_groups(spec)) {
        // Wire each position to the tracked count map its pairs feed.
        switch (spec_.type) {
            case FamilyType::ds:
            case FamilyType::df:
            case FamilyType::edf:
            case FamilyType::gedf:
            case FamilyType::bedf:
                map_of_.assign(m_, 0);
                targets_ = {spec_.lambdas.at(0)};
                break;
            case FamilyType::sedf:
                map_of_.resize(m_);
                for (std::size_t i = 0; i < m_; ++i) map_of_[i] = i;
                targets_.assign(m_, spec_.lambdas.at(0));
                break;
            case FamilyType::gsedf:
            case FamilyType::bgsedf:
                if (spec_.lambdas.size() != m_)
                    fail(errc::parameter, "need one lambda per set");
                map_of_.resize(m_);
                for (std::size_t i = 0; i < m_; ++i) map_of_[i] = i;
                targets_ = spec_.lambdas;
                break;
            case FamilyType::pedf: {
                auto params = spec_.parameters();
                map_of_.resize(m_);
                for (std::size_t i = 0; i < m_; ++i) {
                    for (std::size_t h = 0; h < params.classes.size(); ++h)
                        if (params.classes[h].size == spec_.sizes[i]) {
                            map_of_[i] = h;
                            break;
                        }
                }
                targets_ = spec_.lambdas;
                break;
            }
        }
        counts_.assign(targets_.size(), std::vector<std::int32_t>(static_cast<std::size_t>(n_), 0));
        sets_.assign(m_, {});
        used_.assign(static_cast<std::size_t>(n_), false);
        disjoint_ = spec_.type != FamilyType::df;
    }

    // Runs the full DFS from scratch. first_stop makes the traversal return
    // after the first verified solution.
    void run(bool first_stop) {
        first_stop_ = first_stop;
        descend(0);
    }

    // Enumerates completions of the first set only; used to split the tree
    // for parallel execution. Node accounting matches the full DFS exactly.
    void enumerate_first_set(std::vector<std::vector<std::int64_t>>& out) {
        collect_first_ = &out;
        descend(0);
        collect_first_ = nullptr;
    }

    // Replays a completed first set (counting no nodes), then searches the
    // rest of the tree below it.
    void resume_after_first_set(const std::vector<std::int64_t>& first_set, bool first_stop) {
        first_stop_ = first_stop;
        for (std::size_t pos = 0; pos < first_set.size(); ++pos) {
            if (!try_place(0, first_set[pos])) fail(errc::internal, "first-set replay failed");
        }
        descend(1);
    }

    std::uint64_t nodes() const { return nodes_; }
    std::uint64_t pruned() const { return pruned_; }
    const std::vector<std::vector<std::vector<std::int64_t>>>& solutions() const { return solutions_; }
    bool stopped_early() const { return stop_; }

private:
    // Places element x as the next member of set i, updating difference
    // counts; returns false (and rolls back) if any count exceeds its target.
    bool try_place(std::size_t i, std::int64_t x) {
        applied_.clear();
        bool ok = true;
        if (internal_type(spec_.type)) {
            for (std::int64_t y : sets_[i]) {
                if (!bump(map_of_[i], g_.sub_index(x, y)) || !bump(map_of_[i], g_.sub_index(y, x))) {
                    ok = false;
                    break;
                }
            }
        } else {
            for (std::size_t j = 0; j < m_ && ok; ++j) {
                if (j == i) continue;
                for (std::int64_t y : sets_[j]) {
                    // Outgoing: pair (x in A_i, y in A_j) feeds map(i) at x-y
                    // and map(j) at y-x; the incoming view (BGSEDF) swaps.
                    std::size_t mi = spec_.type == FamilyType::bgsedf ? map_of_[j] : map_of_[i];
                    std::size_t mj = spec_.type == FamilyType::bgsedf ? map_of_[i] : map_of_[j];
                    if (!bump(mi, g_.sub_index(x, y)) || !bump(mj, g_.sub_index(y, x))) {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if (!ok) {
            rollback();
            return false;
        }
        sets_[i].push_back(x);
        if (disjoint_) used_[static_cast<std::size_t>(x)] = true;
        return true;
    }

    bool bump(std::size_t map_id, std::int64_t diff) {
        auto& c = counts_[map_id][static_cast<std::size_t>(diff)];
        if (c + 1 > targets_[map_id]) return false;
        ++c;
        applied_.emplace_back(map_id, diff);
        return true;
    }

    void rollback() {
        for (auto it = applied_.rbegin(); it != applied_.rend(); ++it)
            --counts_[it->first][static_cast<std::size_t>(it->second)];
        applied_.clear();
    }

    void unplace(std::size_t i) {
        std::int64_t x = sets_[i].back();
        sets_[i].pop_back();
        if (disjoint_) used_[static_cast<std::size_t>(x)] = false;
        if (internal_type(spec_.type)) {
            for (std::int64_t y : sets_[i]) {
                decrement(map_of_[i], g_.sub_index(x, y));
                decrement(map_of_[i], g_.sub_index(y, x));
            }
        } else {
            for (std::size_t j = 0; j < m_; ++j) {
                if (j == i) continue;
                for (std::int64_t y : sets_[j]) {
                    std::size_t mi = spec_.type == FamilyType::bgsedf ? map_of_[j] : map_of_[i];
                    std::size_t mj = spec_.type == FamilyType::bgsedf ? map_of_[i] : map_of_[j];
                    decrement(mi, g_.sub_index(x, y));
                    decrement(mj, g_.sub_index(y, x));
                }
            }
        }
    }

    void decrement(std::size_t map_id, std::int64_t diff) {
        --counts_[map_id][static_cast<std::size_t>(diff)];
    }

    // Lexicographically non-decreasing order between interchangeable
    // neighbours; disjoint sets can only tie in the DF overlap case.
    bool order_ok(std::size_t i) const {
        if (i == 0 || groups_[i] != groups_[i - 1]) return true;
        if (disjoint_) return sets_[i - 1][0] < sets_[i][0];
        return sets_[i - 1] <= sets_[i];
    }

    void descend(std::size_t i) {
        if (stop_) return;
        if (i == m_) {
            record_solution();
            return;
        }
        place_next(i, disjoint_ ? 1 : 0);
    }

    void place_next(std::size_t i, std::int64_t min_candidate) {
        if (stop_) return;
        if (sets_[i].size() == spec_.sizes[i]) {
            if (!order_ok(i)) return;
            if (i == 0 && collect_first_) {
                collect_first_->push_back(sets_[0]);
                return;
            }
            descend(i + 1);
            return;
        }
        std::int64_t lo = sets_[i].empty() ? min_candidate : sets_[i].back() + 1;
        if (i == 0 && sets_[0].empty()) {
            // Translation normalization: the first set contains 0, and 0 is
            // its least element, so it is pinned as the first placement.
            lo = 0;
        } else if (sets_[i].empty() && disjoint_ && groups_[i] == groups_[i - 1]) {
            // Interchangeable disjoint neighbours are ordered by least
            // element, so the first placement can start past the previous
            // set's least element.
            lo = std::max(lo, sets_[i - 1][0] + 1);
        }
        for (std::int64_t x = lo; x < n_; ++x) {
            if (i == 0 && sets_[0].empty() && x > 0) break;
            if (disjoint_ && used_[static_cast<std::size_t>(x)]) continue;
            ++nodes_;
            if (budget_ && nodes_ > budget_) throw BudgetExhausted{};
            if (!try_place(i, x)) {
                ++pruned_;
                continue;
            }
            place_next(i, min_candidate);
            unplace(i);
            if (stop_) return;
        }
    }

    void record_solution() {
        solutions_.push_back(sets_);
        if (first_stop_) stop_ = true;
    }

public:
    std::uint64_t budget_ = 0;

private:
    const SearchSpec& spec_;
    const FiniteAbelianGroup& g_;
    std::int64_t n_;
    std::size_t m_;
    std::vector<int> groups_;
    std::vector<std::size_t> map_of_;
    std::vector<std::int64_t> targets_;
    std::vector<std::vector<std::int32_t>> counts_;
    std::vector<std::vector<std::int64_t>> sets_;
    std::vector<bool> used_;
    std::vector<std::pair<std::size_t, std::int64_t>> applied_;
    std::vector<std::vector<std::vector<std::int64_t>>> solutions_;
    std::vector<std::vector<std::int64_t>>* collect_first_ = nullptr;
    std::uint64_t nodes_ = 0;
    std::uint64_t pruned_ = 0;
    bool disjoint_ = true;
    bool first_stop_ = false;
    bool stop_ = false;
};

// Verifies a raw solution against the real verifier and checks the
// witnessed lambdas equal the search targets.
bool solution_verified(const SearchSpec& spec, const SetFamily& family) {
    FamilyParameters want = spec.parameters();
    VerificationReport report = verify_family(family, spec.type, spec.lambdas,
                                              spec.type == FamilyType::pedf ? want.classes
                                                                            : std::vector<SizeClass>{});
    if (!report.pass) return false;
    if (!bounded_type(spec.type) && report.parameters->lambdas != want.lambdas) return false;
    return true;
}

} // namespace

SetFamily canonical_translate(const SetFamily& family, FamilyType type,
                              const std::vector<std::int64_t>& lambdas) {
    const FiniteAbelianGroup& g = family.group();
    SearchSpec pseudo{g, type, family.sizes(), lambdas, SearchMode::all_up_to_translation, 0, 1};
    if (pseudo.lambdas.empty()) pseudo.lambdas.assign(family.set_count(), 0);
    if ((type == FamilyType::gsedf || type == FamilyType::bgsedf) &&
        pseudo.lambdas.size() != family.set_count())
        pseudo.lambdas.assign(family.set_count(), 0);
    std::vector<int> groups = position_groups(pseudo);

    std::vector<std::vector<std::int64_t>> best;
    for (std::int64_t t = 0; t < g.order(); ++t) {
        std::vector<std::vector<std::int64_t>> translated;
        for (const auto& s : family.index_sets()) {
            std::vector<std::int64_t> moved;
            moved.reserve(s.size());
            for (std::int64_t x : s) moved.push_back(g.add_index(x, t));
            std::sort(moved.begin(), moved.end());
            translated.push_back(std::move(moved));
        }
        // Reorder interchangeable positions canonically.
        int max_group = *std::max_element(groups.begin(), groups.end());
        for (int grp = 0; grp <= max_group; ++grp) {
            std::vector<std::size_t> positions;
            for (std::size_t i = 0; i < groups.size(); ++i)
                if (groups[i] == grp) positions.push_back(i);
            std::vector<std::vector<std::int64_t>> members;
            for (std::size_t i : positions) members.push_back(translated[i]);
            std::sort(members.begin(), members.end());
            for (std::size_t idx = 0; idx < positions.size(); ++idx)
                translated[positions[idx]] = members[idx];
        }
        if (best.empty() || translated < best) best = std::move(translated);
    }
    return SetFamily::from_indices(g, std::move(best));
}

namespace {

SearchCertificate run_search(const SearchSpec& spec) {
    FamilyParameters params = spec.parameters();
    for (const auto& check : check_parameter_identity(params)) {
        if (!check.pass)
            fail(errc::identity, "infeasible parameters " + params.display() + ": " + check.identity +
                                     " gives " + std::to_string(check.lhs) + " vs " +
                                     std::to_string(check.rhs));
    }
    if (spec.type != FamilyType::df) {
        std::int64_t a = 0;
        for (std::size_t s : spec.sizes) a += static_cast<std::int64_t>(s);
        if (a > spec.group.order())
            fail(errc::identity, "disjoint sets of total size " + std::to_string(a) +
                                     " cannot fit in a group of order " +
                                     std::to_string(spec.group.order()));
    }

    SearchCertificate cert;
    cert.spec_hash = spec_hash_hex(spec);
    cert.spec_display = params.display() + " over " + spec.group.describe();

    const bool first_mode = spec.mode == SearchMode::first_solution;
    const bool keep_families = spec.mode != SearchMode::count_only;
    std::uint64_t nodes = 0;
    std::uint64_t pruned = 0;
    bool budget_hit = false;
    std::vector<std::vector<std::vector<std::int64_t>>> raw_solutions;

    unsigned jobs = spec.jobs;
    if (first_mode || spec.node_budget > 0) jobs = 1; // keep certificates deterministic

    if (jobs <= 1) {
        Searcher searcher(spec);
        searcher.budget_ = spec.node_budget;
        try {
            searcher.run(first_mode);
        } catch (const BudgetExhausted&) {
            budget_hit = true;
        }
        nodes = searcher.nodes();
        pruned = searcher.pruned();
        raw_solutions = searcher.solutions();
    } else {
        // Split below the first completed set: enumerate its completions
        // sequentially, then search each subtree independently. The node
        // total and solution set are identical to a single-threaded run.
        std::vector<std::vector<std::int64_t>> first_sets;
        Searcher top(spec);
        top.enumerate_first_set(first_sets);
        nodes = top.nodes();
        pruned = top.pruned();

        std::vector<std::uint64_t> task_nodes(first_sets.size(), 0);
        std::vector<std::uint64_t> task_pruned(first_sets.size(), 0);
        std::vector<std::vector<std::vector<std::vector<std::int64_t>>>> task_solutions(first_sets.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            while (true) {
                std::size_t idx = next.fetch_add(1);
                if (idx >= first_sets.size()) return;
                Searcher sub(spec);
                sub.resume_after_first_set(first_sets[idx], false);
                task_nodes[idx] = sub.nodes();
                task_pruned[idx] = sub.pruned();
                task_solutions[idx] = sub.solutions();
            }
        };
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& th : threads) th.join();
        for (std::size_t i = 0; i < first_sets.size(); ++i) {
            nodes += task_nodes[i];
            pruned += task_pruned[i];
            for (auto& sol : task_solutions[i]) raw_solutions.push_back(std::move(sol));
        }
    }

    cert.nodes_explored = nodes;
    cert.nodes_pruned = pruned;

    // Canonicalize, verify, and deduplicate translation classes.
    std::set<std::vector<std::vector<std::int64_t>>> seen;
    std::vector<SetFamily> canonical;
    for (const auto& raw : raw_solutions) {
        SetFamily family = SetFamily::from_indices(spec.group, raw);
        if (!solution_verified(spec, family))
            fail(errc::internal, "search produced a family its verifier rejects");
        SetFamily rep = canonical_translate(family, spec.type, spec.lambdas);
        if (seen.insert(rep.index_sets()).second && keep_families)
            canonical.push_back(std::move(rep));
    }
    std::sort(canonical.begin(), canonical.end(),
              [](const SetFamily& a, const SetFamily& b) { return a.index_sets() < b.index_sets(); });

    cert.solutions_found = seen.size();
    cert.solutions = std::move(canonical);
    if (budget_hit)
        cert.outcome = SearchOutcome::budget_exhausted;
    else
        cert.outcome = seen.empty() ? SearchOutcome::exhausted_no_solution : SearchOutcome::found;
    return cert;
}

} // namespace

SearchCertificate search_family(const SearchSpec& spec) {
    return run_search(spec);
}

SearchCertificate certify_nonexistence(const SearchSpec& spec) {
    SearchSpec full = spec;
    if (full.mode == SearchMode::first_solution) full.mode = SearchMode::all_up_to_translation;
    return run_search(full);
}

SweepReport sweep_sedf_open_problem(std::int64_t n_max, std::uint64_t node_budget, unsigned jobs) {
    SweepReport report;
    for (std::int64_t n = 2; n <= n_max; ++n) {
        for (std::size_t k = 2; static_cast<std::int64_t>(3 * k) <= n; ++k) {
            for (std::size_t m = 3; static_cast<std::int64_t>(m * k) <= n; ++m) {
                std::int64_t rhs = static_cast<std::int64_t>(k) * static_cast<std::int64_t>(k) *
                                   (static_cast<std::int64_t>(m) - 1);
                if (rhs % (n - 1) != 0) {
                    report.excluded.push_back("(" + std::to_string(n) + "," + std::to_string(m) + "," +
                                              std::to_string(k) + "): k^2(m-1) not divisible by n-1");
                    continue;
                }
                std::int64_t lambda = rhs / (n - 1);
                for (const auto& group : abelian_groups_of_order(n)) {
                    SearchSpec spec{group, FamilyType::sedf, std::vector<std::size_t>(m, k),
                                    {lambda},   SearchMode::count_only,         node_budget,
                                    jobs};
                    SearchCertificate cert = certify_nonexistence(spec);
                    report.rows.push_back({n, m, k, lambda, group.describe(), cert.outcome,
                                           cert.nodes_explored});
                }
            }
        }
    }
    return report;
}

} // namespace amdkit
