#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amdkit/families.hpp"
#include "amdkit/rational.hpp"

namespace amdkit {

/// One source of an AMD code: its name, its set A(s) of valid encodings
/// (sorted canonical element indices) and the exact encoding distribution
/// Pr[E(s) = g] aligned with `set`. Probabilities are strictly positive and
/// sum to one; a zero-probability encoding simply does not belong to A(s).
struct AmdSource {
    std::string name;
    std::vector<std::int64_t> set;
    std::vector<Rational> probs;
};

/// An AMD code (S, G, A, E) with equiprobable sources. Valid-encoding sets
/// are pairwise disjoint so every message decodes uniquely. Immutable.
class AmdCode {
public:
    /// Validates: group order >= 2, at least one source, nonempty disjoint
    /// sets, positive per-source probabilities summing to exactly 1.
    AmdCode(FiniteAbelianGroup group, std::vector<AmdSource> sources);

    /// Equiprobable encoding over the family's sets (source names s1..sm).
    static AmdCode equiprobable(const SetFamily& family);

    const FiniteAbelianGroup& group() const { return group_; }
    const std::vector<AmdSource>& sources() const { return sources_; }
    std::size_t source_count() const { return sources_.size(); } // m
    std::int64_t n() const { return group_.order(); }
    std::int64_t a() const { return a_; } // total number of valid encodings
    std::int64_t a_s(std::size_t s) const { return static_cast<std::int64_t>(sources_[s].set.size()); }

    /// Sorted union of the A(s); the message support G_0.
    const std::vector<std::int64_t>& support() const { return support_; }
    /// Source owning a given encoding, if any.
    std::optional<std::size_t> source_of(std::int64_t element_index) const;

    bool k_uniform() const;
    bool equiprobable_encoding() const;
    bool k_regular() const { return k_uniform() && equiprobable_encoding(); }
    bool deterministic() const;

    Rational encoding_prob(std::size_t s, std::int64_t element_index) const;
    /// Induced message probability Pr[g] = Pr[E(s)=g] / m.
    Rational message_prob(std::int64_t element_index) const;

    /// The family {A(s)} as a SetFamily (always disjoint by construction).
    SetFamily family() const;

private:
    FiniteAbelianGroup group_;
    std::vector<AmdSource> sources_;
    std::vector<std::int64_t> support_;
    std::vector<std::int64_t> owner_;   // support_[i] belongs to sources_[owner_[i]]
    std::int64_t a_ = 0;
};

/// Randomized strategy for the weak game: a distribution over nonzero
/// deltas, stored as (delta index, probability) pairs summing to 1.
struct WeakStrategy {
    std::vector<std::pair<std::int64_t, Rational>> distribution;
};

/// Per-source delta distributions for the strong game.
struct StrongStrategy {
    std::vector<WeakStrategy> per_source;
};

struct WeakEvaluation {
    std::vector<Rational> eps_by_delta;  // indexed by element index; [0] unused
    Rational eps_hat;
    std::vector<std::int64_t> argmax_deltas;
    bool degenerate = false; // m = 1: no winning substitution exists
};

struct StrongEvaluation {
    std::vector<std::vector<Rational>> eps;   // [source][delta index]
    std::vector<Rational> eps_hat_s;
    std::vector<std::vector<std::int64_t>> argmax_deltas_s;
    Rational eps_hat;
    std::vector<std::size_t> argmax_sources;
    bool degenerate = false;
};

struct WeakBounds {
    Rational rand;                    // a(m-1) / (m(n-1))
    Rational guess;                   // 1/a
    Rational product_rhs;             // (m-1) / (m(n-1)), lower bound for eps^2
    Rational deterministic_floor;     // (m-1) / (n-1)
    std::optional<Rational> uniform_rand; // k(m-1)/(n-1) when k-uniform
};

struct StrongBounds {
    std::vector<Rational> rand_s;     // (a - a_s) / (n-1)
    std::vector<Rational> guess_s;    // 1 / a_s
    Rational global_rand;             // (a - min a_s) / (n-1)
    Rational global_guess;            // 1 / min a_s
    std::optional<Rational> product_rhs; // (m-1)/(n-1) when k-uniform
};

struct Classification {
    bool weak_R = false;
    bool weak_G = false;
    bool strong_R = false;
    bool strong_G = false;
    WeakEvaluation weak;
    StrongEvaluation strong;
    WeakBounds weak_bounds;
    StrongBounds strong_bounds;
};

/// Pr over G_0, as (element index, probability) pairs in canonical order.
std::vector<std::pair<std::int64_t, Rational>> induced_message_distribution(const AmdCode& code);

/// Good(Delta) = { g in G_0 : g in A(s), g + Delta in A(s'), s' != s }.
std::vector<std::int64_t> good_set(const AmdCode& code, std::int64_t delta_index);
/// Good(Delta, s), the strong-game version with the source fixed.
std::vector<std::int64_t> good_set(const AmdCode& code, std::int64_t delta_index, std::size_t s);

Rational eval_weak_delta(const AmdCode& code, std::int64_t delta_index);

/// The optimum over all (randomized) strategies, computed by enumerating
/// deterministic deltas. Lemma: the success probability of a randomized
/// strategy is the convex combination sum sigma(delta) * eps_delta, an
/// affine function of sigma, so its maximum over the distribution simplex
/// is attained at a point mass; eps_hat = max over nonzero deltas.
WeakEvaluation eval_weak_optimum(const AmdCode& code);

Rational eval_strong_delta(const AmdCode& code, std::size_t s, std::int64_t delta_index);
StrongEvaluation eval_strong_optimum(const AmdCode& code);

/// Success probability of a randomized strategy: the convex combination of
/// the per-delta values. Never exceeds the corresponding optimum.
Rational eval_strategy(const AmdCode& code, const WeakStrategy& strategy);
std::vector<Rational> eval_strategy(const AmdCode& code, const StrongStrategy& strategy);

WeakStrategy uniform_weak_strategy(const AmdCode& code);

WeakBounds weak_bounds(const AmdCode& code);
StrongBounds strong_bounds(const AmdCode& code);

/// R/G-optimality flags for both games. weak_R is decided by eps_hat ==
/// rand bound and cross-checked against the all-deltas-equal
/// characterization; disagreement would be an internal error.
Classification classify(const AmdCode& code);

/// Equiprobable code over a family verified as the stated type. Bounded
/// types verify with all-ones lambda (the case that yields G-optimal codes).
AmdCode code_from_family(const SetFamily& family, FamilyType type);

struct RecoveredFamily {
    SetFamily family;
    FamilyParameters parameters;
};

/// Converse translations. Hypotheses per target type:
///   edf    k-regular and weak R-optimal
///   pedf   same as edf (the recovered EDF read as a one-class PEDF)
///   bedf   weak G-optimal (forces k-regularity), lambda = 1
///   gsedf  equiprobable encoding and strong R-optimal
///   sedf   gsedf hypotheses plus k-uniform
///   bgsedf strong G-optimal, all lambda_j = 1
/// Violations throw errc::precondition naming the failed hypothesis.
RecoveredFamily family_from_code(const AmdCode& code, FamilyType target);

struct SimultaneousOptimalityReport {
    bool weak_R = false, weak_G = false, weak_simultaneous = false;
    /// k-regular + simultaneous weak optimality <=> the family is an
    /// (n,m,k,1)-EDF; both sides are evaluated independently.
    bool family_is_lambda1_edf = false;
    bool strong_R = false, strong_G = false, strong_simultaneous = false;
    Rational strong_eps_hat;
    /// m >= 3 with eps_hat < 1 can never be simultaneously strong R- and
    /// G-optimal, and the k-uniform equality case forces m=2, n=k^2+1.
    bool consistent = true;
    std::vector<std::string> notes;
};

SimultaneousOptimalityReport check_simultaneous_optimality(const AmdCode& code);

} // namespace amdkit
