#include "amdkit/amd.hpp"

#include <algorithm>

namespace amdkit {

AmdCode::AmdCode(FiniteAbelianGroup group, std::vector<AmdSource> sources)
    : group_(std::move(group)), sources_(std::move(sources)) {
    if (group_.order() < 2) fail(errc::invalid_order, "message space must have at least two elements");
    if (sources_.empty()) fail(errc::precondition, "code needs at least one source");
    for (auto& src : sources_) {
        if (src.set.empty()) fail(errc::precondition, "source '" + src.name + "' has no valid encodings");
        if (src.set.size() != src.probs.size())
            fail(errc::precondition, "source '" + src.name + "' probabilities do not align with A(s)");
        // Keep (encoding, probability) pairs sorted by canonical element order.
        std::vector<std::size_t> perm(src.set.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::sort(perm.begin(), perm.end(),
                  [&](std::size_t x, std::size_t y) { return src.set[x] < src.set[y]; });
        std::vector<std::int64_t> set;
        std::vector<Rational> probs;
        Rational sum;
        for (std::size_t i : perm) {
            std::int64_t idx = src.set[i];
            if (idx < 0 || idx >= group_.order()) fail(errc::element_domain, "encoding outside the group");
            if (!(src.probs[i] > Rational(0)))
                fail(errc::precondition, "encoding probabilities must be strictly positive");
            set.push_back(idx);
            probs.push_back(src.probs[i]);
            sum += src.probs[i];
        }
        if (std::adjacent_find(set.begin(), set.end()) != set.end())
            fail(errc::element_domain, "duplicate encoding within A(s)");
        if (sum != Rational(1))
            fail(errc::precondition, "encoding probabilities of '" + src.name + "' sum to " + sum.str());
        src.set = std::move(set);
        src.probs = std::move(probs);
        a_ += static_cast<std::int64_t>(src.set.size());
    }
    for (std::size_t s = 0; s < sources_.size(); ++s)
        for (std::int64_t idx : sources_[s].set) {
            support_.push_back(idx);
            owner_.push_back(static_cast<std::int64_t>(s));
        }
    // Sort support (and owners) by element index, then check disjointness.
    std::vector<std::size_t> perm(support_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t x, std::size_t y) { return support_[x] < support_[y]; });
    std::vector<std::int64_t> support, owner;
    for (std::size_t i : perm) {
        support.push_back(support_[i]);
        owner.push_back(owner_[i]);
    }
    support_ = std::move(support);
    owner_ = std::move(owner);
    if (std::adjacent_find(support_.begin(), support_.end()) != support_.end())
        fail(errc::disjointness, "valid-encoding sets are not pairwise disjoint");
}

AmdCode AmdCode::equiprobable(const SetFamily& family) {
    std::vector<AmdSource> sources;
    for (std::size_t i = 0; i < family.set_count(); ++i) {
        AmdSource src;
        src.name = "s" + std::to_string(i + 1);
        src.set = family.index_sets()[i];
        std::int64_t k = static_cast<std::int64_t>(src.set.size());
        src.probs.assign(src.set.size(), Rational(1, k));
        sources.push_back(std::move(src));
    }
    return AmdCode(family.group(), std::move(sources));
}

std::optional<std::size_t> AmdCode::source_of(std::int64_t element_index) const {
    auto it = std::lower_bound(support_.begin(), support_.end(), element_index);
    if (it == support_.end() || *it != element_index) return std::nullopt;
    return static_cast<std::size_t>(owner_[static_cast<std::size_t>(it - support_.begin())]);
}

bool AmdCode::k_uniform() const {
    for (const auto& src : sources_)
        if (src.set.size() != sources_[0].set.size()) return false;
    return true;
}

bool AmdCode::equiprobable_encoding() const {
    for (const auto& src : sources_) {
        Rational expected(1, static_cast<std::int64_t>(src.set.size()));
        for (const auto& p : src.probs)
            if (p != expected) return false;
    }
    return true;
}

bool AmdCode::deterministic() const {
    for (const auto& src : sources_)
        if (src.set.size() != 1) return false;
    return true;
}

Rational AmdCode::encoding_prob(std::size_t s, std::int64_t element_index) const {
    if (s >= sources_.size()) fail(errc::index_range, "source index out of range");
    const auto& src = sources_[s];
    auto it = std::lower_bound(src.set.begin(), src.set.end(), element_index);
    if (it == src.set.end() || *it != element_index) return Rational(0);
    return src.probs[static_cast<std::size_t>(it - src.set.begin())];
}

Rational AmdCode::message_prob(std::int64_t element_index) const {
    auto s = source_of(element_index);
    if (!s) return Rational(0);
    return encoding_prob(*s, element_index) / Rational(static_cast<std::int64_t>(sources_.size()));
}

SetFamily AmdCode::family() const {
    std::vector<std::vector<std::int64_t>> sets;
    for (const auto& src : sources_) sets.push_back(src.set);
    return SetFamily::from_indices(group_, std::move(sets));
}

std::vector<std::pair<std::int64_t, Rational>> induced_message_distribution(const AmdCode& code) {
    std::vector<std::pair<std::int64_t, Rational>> dist;
    for (std::int64_t idx : code.support()) dist.emplace_back(idx, code.message_prob(idx));
    return dist;
}

namespace {

void require_delta(const AmdCode& code, std::int64_t delta_index) {
    if (delta_index == 0) fail(errc::zero_delta, "delta must be nonzero");
    if (delta_index < 0 || delta_index >= code.n()) fail(errc::element_domain, "delta outside the group");
}

} // namespace

std::vector<std::int64_t> good_set(const AmdCode& code, std::int64_t delta_index) {
    require_delta(code, delta_index);
    std::vector<std::int64_t> good;
    const auto& g = code.group();
    for (std::int64_t enc : code.support()) {
        std::int64_t shifted = g.add_index(enc, delta_index);
        auto owner = code.source_of(enc);
        auto target = code.source_of(shifted);
        if (target && *target != *owner) good.push_back(enc);
    }
    return good;
}

std::vector<std::int64_t> good_set(const AmdCode& code, std::int64_t delta_index, std::size_t s) {
    require_delta(code, delta_index);
    if (s >= code.source_count()) fail(errc::index_range, "source index out of range");
    std::vector<std::int64_t> good;
    const auto& g = code.group();
    for (std::int64_t enc : code.sources()[s].set) {
        std::int64_t shifted = g.add_index(enc, delta_index);
        auto target = code.source_of(shifted);
        if (target && *target != s) good.push_back(enc);
    }
    return good;
}

Rational eval_weak_delta(const AmdCode& code, std::int64_t delta_index) {
    Rational eps;
    for (std::int64_t enc : good_set(code, delta_index)) eps += code.message_prob(enc);
    return eps;
}

WeakEvaluation eval_weak_optimum(const AmdCode& code) {
    WeakEvaluation eval;
    eval.degenerate = code.source_count() == 1;
    eval.eps_by_delta.assign(static_cast<std::size_t>(code.n()), Rational(0));
    for (std::int64_t delta = 1; delta < code.n(); ++delta) {
        Rational eps = eval_weak_delta(code, delta);
        eval.eps_by_delta[static_cast<std::size_t>(delta)] = eps;
        if (eps > eval.eps_hat) eval.eps_hat = eps;
    }
    for (std::int64_t delta = 1; delta < code.n(); ++delta)
        if (eval.eps_by_delta[static_cast<std::size_t>(delta)] == eval.eps_hat)
            eval.argmax_deltas.push_back(delta);
    return eval;
}

Rational eval_strong_delta(const AmdCode& code, std::size_t s, std::int64_t delta_index) {
    Rational eps;
    for (std::int64_t enc : good_set(code, delta_index, s)) eps += code.encoding_prob(s, enc);
    return eps;
}

StrongEvaluation eval_strong_optimum(const AmdCode& code) {
    StrongEvaluation eval;
    eval.degenerate = code.source_count() == 1;
    const std::size_t m = code.source_count();
    eval.eps.resize(m);
    eval.eps_hat_s.assign(m, Rational(0));
    eval.argmax_deltas_s.resize(m);
    for (std::size_t s = 0; s < m; ++s) {
        eval.eps[s].assign(static_cast<std::size_t>(code.n()), Rational(0));
        for (std::int64_t delta = 1; delta < code.n(); ++delta) {
            Rational eps = eval_strong_delta(code, s, delta);
            eval.eps[s][static_cast<std::size_t>(delta)] = eps;
            if (eps > eval.eps_hat_s[s]) eval.eps_hat_s[s] = eps;
        }
        for (std::int64_t delta = 1; delta < code.n(); ++delta)
            if (eval.eps[s][static_cast<std::size_t>(delta)] == eval.eps_hat_s[s])
                eval.argmax_deltas_s[s].push_back(delta);
        if (eval.eps_hat_s[s] > eval.eps_hat) eval.eps_hat = eval.eps_hat_s[s];
    }
    for (std::size_t s = 0; s < m; ++s)
        if (eval.eps_hat_s[s] == eval.eps_hat) eval.argmax_sources.push_back(s);
    return eval;
}

namespace {

void require_strategy(const AmdCode& code, const WeakStrategy& strategy) {
    Rational sum;
    for (const auto& [delta, prob] : strategy.distribution) {
        require_delta(code, delta);
        if (prob < Rational(0)) fail(errc::precondition, "strategy probabilities must be nonnegative");
        sum += prob;
    }
    if (sum != Rational(1)) fail(errc::precondition, "strategy distribution sums to " + sum.str());
}

} // namespace

Rational eval_strategy(const AmdCode& code, const WeakStrategy& strategy) {
    require_strategy(code, strategy);
    Rational eps;
    for (const auto& [delta, prob] : strategy.distribution)
        eps += prob * eval_weak_delta(code, delta);
    return eps;
}

std::vector<Rational> eval_strategy(const AmdCode& code, const StrongStrategy& strategy) {
    if (strategy.per_source.size() != code.source_count())
        fail(errc::precondition, "strong strategy needs one distribution per source");
    std::vector<Rational> eps;
    for (std::size_t s = 0; s < code.source_count(); ++s) {
        require_strategy(code, strategy.per_source[s]);
        Rational e;
        for (const auto& [delta, prob] : strategy.per_source[s].distribution)
            e += prob * eval_strong_delta(code, s, delta);
        eps.push_back(e);
    }
    return eps;
}

WeakStrategy uniform_weak_strategy(const AmdCode& code) {
    WeakStrategy strategy;
    for (std::int64_t delta = 1; delta < code.n(); ++delta)
        strategy.distribution.emplace_back(delta, Rational(1, code.n() - 1));
    return strategy;
}

WeakBounds weak_bounds(const AmdCode& code) {
    const std::int64_t m = static_cast<std::int64_t>(code.source_count());
    const std::int64_t n = code.n();
    const std::int64_t a = code.a();
    WeakBounds b;
    b.rand = Rational(a * (m - 1), m * (n - 1));
    b.guess = Rational(1, a);
    b.product_rhs = Rational(m - 1, m * (n - 1));
    b.deterministic_floor = Rational(m - 1, n - 1);
    if (code.k_uniform()) {
        std::int64_t k = code.a_s(0);
        b.uniform_rand = Rational(k * (m - 1), n - 1);
    }
    return b;
}

StrongBounds strong_bounds(const AmdCode& code) {
    const std::int64_t n = code.n();
    const std::int64_t a = code.a();
    StrongBounds b;
    std::int64_t min_as = code.a_s(0);
    for (std::size_t s = 0; s < code.source_count(); ++s) {
        std::int64_t as = code.a_s(s);
        min_as = std::min(min_as, as);
        b.rand_s.emplace_back(a - as, n - 1);
        b.guess_s.emplace_back(1, as);
    }
    b.global_rand = Rational(a - min_as, n - 1);
    b.global_guess = Rational(1, min_as);
    if (code.k_uniform()) {
        std::int64_t m = static_cast<std::int64_t>(code.source_count());
        b.product_rhs = Rational(m - 1, n - 1);
    }
    return b;
}

Classification classify(const AmdCode& code) {
    Classification c;
    c.weak = eval_weak_optimum(code);
    c.strong = eval_strong_optimum(code);
    c.weak_bounds = weak_bounds(code);
    c.strong_bounds = strong_bounds(code);

    c.weak_R = c.weak.eps_hat == c.weak_bounds.rand;
    // Cross-check the all-deltas-equal characterization of weak R-optimality.
    bool all_equal = true;
    for (std::int64_t delta = 1; delta < code.n(); ++delta)
        all_equal = all_equal && c.weak.eps_by_delta[static_cast<std::size_t>(delta)] == c.weak_bounds.rand;
    if (all_equal != c.weak_R)
        fail(errc::internal, "weak R-optimality characterizations disagree");

    c.weak_G = c.weak.eps_hat == c.weak_bounds.guess;

    c.strong_R = true;
    c.strong_G = true;
    for (std::size_t s = 0; s < code.source_count(); ++s) {
        c.strong_R = c.strong_R && c.strong.eps_hat_s[s] == c.strong_bounds.rand_s[s];
        c.strong_G = c.strong_G && c.strong.eps_hat_s[s] == c.strong_bounds.guess_s[s];
    }
    return c;
}

AmdCode code_from_family(const SetFamily& family, FamilyType type) {
    std::vector<std::int64_t> lambdas;
    if (type == FamilyType::bedf) lambdas = {1};
    if (type == FamilyType::bgsedf) lambdas.assign(family.set_count(), 1);
    VerificationReport report = verify_family(family, type, lambdas);
    if (!report.pass)
        fail(errc::wrong_type, "family does not verify as " + family_type_name(type));
    return AmdCode::equiprobable(family);
}

namespace {

RecoveredFamily finish_recovery(const AmdCode& code, FamilyType target, FamilyParameters params) {
    SetFamily family = code.family();
    VerificationReport check = verify_family(family, target, params.lambdas,
                                             target == FamilyType::pedf ? params.classes
                                                                        : std::vector<SizeClass>{});
    if (!check.pass || (check.parameters && !(*check.parameters == params)))
        fail(errc::internal, "recovered family does not verify with the guaranteed parameters");
    return {std::move(family), std::move(params)};
}

} // namespace

RecoveredFamily family_from_code(const AmdCode& code, FamilyType target) {
    Classification c = classify(code);
    const std::int64_t n = code.n();
    const std::int64_t m = static_cast<std::int64_t>(code.source_count());
    const std::int64_t a = code.a();

    FamilyParameters params;
    params.n = n;
    params.m = code.source_count();
    for (std::size_t s = 0; s < code.source_count(); ++s)
        params.sizes.push_back(static_cast<std::size_t>(code.a_s(s)));

    switch (target) {
        case FamilyType::edf:
        case FamilyType::pedf: {
            if (!code.k_regular())
                fail(errc::precondition, "not k-regular: per-source encoding set sizes/distributions differ");
            if (!c.weak_R) fail(errc::precondition, "not R-optimal in the weak game");
            std::int64_t k = code.a_s(0);
            std::int64_t lambda = k * k * m * (m - 1) / (n - 1);
            params.type = target;
            if (target == FamilyType::pedf) {
                params.classes = {{code.source_count(), static_cast<std::size_t>(k)}};
                params.lambdas = {lambda};
            } else {
                params.lambdas = {lambda};
            }
            return finish_recovery(code, target, std::move(params));
        }
        case FamilyType::bedf: {
            if (!c.weak_G) fail(errc::precondition, "not G-optimal in the weak game");
            if (!code.k_regular())
                fail(errc::internal, "weak G-optimal code is not k-regular"); // cannot happen
            params.type = FamilyType::bedf;
            params.lambdas = {1};
            return finish_recovery(code, target, std::move(params));
        }
        case FamilyType::gsedf:
        case FamilyType::sedf: {
            if (!code.equiprobable_encoding())
                fail(errc::precondition, "not equiprobable: some encoding distribution is not uniform");
            if (!c.strong_R) fail(errc::precondition, "not R-optimal in the strong game");
            if (target == FamilyType::sedf && !code.k_uniform())
                fail(errc::precondition, "not k-uniform: set sizes differ");
            std::vector<std::int64_t> lambdas;
            for (std::size_t s = 0; s < code.source_count(); ++s) {
                std::int64_t as = code.a_s(s);
                lambdas.push_back(as * (a - as) / (n - 1));
            }
            params.type = target;
            params.lambdas = target == FamilyType::sedf ? std::vector<std::int64_t>{lambdas[0]}
                                                        : std::move(lambdas);
            return finish_recovery(code, target, std::move(params));
        }
        case FamilyType::bgsedf: {
            if (!c.strong_G) fail(errc::precondition, "not G-optimal in the strong game");
            params.type = FamilyType::bgsedf;
            params.lambdas.assign(code.source_count(), 1);
            return finish_recovery(code, target, std::move(params));
        }
        default:
            fail(errc::precondition,
                 "no converse translation exists for target type " + family_type_name(target));
    }
}

SimultaneousOptimalityReport check_simultaneous_optimality(const AmdCode& code) {
    Classification c = classify(code);
    SimultaneousOptimalityReport r;
    r.weak_R = c.weak_R;
    r.weak_G = c.weak_G;
    r.weak_simultaneous = c.weak_R && c.weak_G;
    r.strong_R = c.strong_R;
    r.strong_G = c.strong_G;
    r.strong_simultaneous = c.strong_R && c.strong_G;
    r.strong_eps_hat = c.strong.eps_hat;

    // Weak side: for k-regular codes, simultaneous optimality is equivalent
    // to the family being an (n,m,k,1)-EDF.
    if (code.k_regular() && code.source_count() >= 2) {
        VerificationReport edf = verify_edf(code.family());
        r.family_is_lambda1_edf = edf.pass && edf.parameters->lambdas[0] == 1;
        if (r.weak_simultaneous != r.family_is_lambda1_edf) {
            r.consistent = false;
            r.notes.push_back("weak simultaneous optimality and lambda-1 EDF equivalence disagree");
        }
    } else if (r.weak_simultaneous && !code.k_regular()) {
        r.consistent = false;
        r.notes.push_back("simultaneously weak R- and G-optimal code must be k-regular");
    }

    // Strong side constraints.
    if (code.source_count() >= 3 && r.strong_eps_hat < Rational(1) && r.strong_simultaneous) {
        r.consistent = false;
        r.notes.push_back("strong R+G optimality with m >= 3 and eps < 1 is impossible");
    }
    if (code.k_uniform() && r.strong_eps_hat < Rational(1)) {
        Rational rhs(static_cast<std::int64_t>(code.source_count()) - 1, code.n() - 1);
        if (r.strong_eps_hat.compare_squared_to(rhs) == 0) {
            std::int64_t k = code.a_s(0);
            if (!(code.source_count() == 2 && code.n() == k * k + 1)) {
                r.consistent = false;
                r.notes.push_back("k-uniform equality case must have m = 2 and n = k^2 + 1");
            } else {
                r.notes.push_back("k-uniform product bound met with equality: m = 2, n = k^2 + 1");
            }
        }
    }
    return r;
}

} // namespace amdkit
