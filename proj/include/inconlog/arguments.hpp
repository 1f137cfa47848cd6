#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "inconlog/consequence.hpp"
#include "inconlog/error.hpp"
#include "inconlog/formula.hpp"
#include "inconlog/limits.hpp"
#include "inconlog/premise_set.hpp"
#include "inconlog/theory.hpp"

namespace inconlog {

/// P => phi: believing every premise in `support` warrants believing `conclusion`.
struct SupportingArgument {
    PremiseSet support;
    Formula conclusion;

    friend bool operator==(const SupportingArgument&, const SupportingArgument&) = default;
};

/// P =/> phi: believing every premise in `support` forces withdrawing premise `victim`.
struct UnderminingArgument {
    PremiseSet support;
    std::size_t victim;

    friend bool operator==(const UnderminingArgument&, const UnderminingArgument&) = default;
    friend bool operator<(const UnderminingArgument& a, const UnderminingArgument& b) {
        if (a.victim != b.victim) return a.victim < b.victim;
        return BySizeThenMembers{}(a.support, b.support);
    }
};

inline std::string to_string(const ReliabilityTheory& t, const SupportingArgument& a) {
    return t.format(a.support) + " ⇒ " + a.conclusion.to_string();
}

inline std::string to_string(const ReliabilityTheory& t, const UnderminingArgument& a) {
    return t.format(a.support) + " ⇏ " + t.id(a.victim);
}

/// Every minimal unsatisfiable subset of `within`, sorted by size then members.
///
/// Finds one MUS by deletion, then recurses on `within` minus each of its
/// members: any other MUS misses at least one of them. Visited sets are memoised.
inline std::vector<PremiseSet> minimal_unsat_subsets(const ConsistencyChecker& checker, const PremiseSet& within) {
    std::set<PremiseSet> visited;
    std::vector<PremiseSet> found;

    auto shrink = [&](PremiseSet s) {
        for (auto i = s.find_first(); i != PremiseSet::npos; i = s.find_next(i)) {
            s.reset(i);
            if (checker.consistent(s)) s.set(i);
        }
        return s;
    };

    std::function<void(const PremiseSet&)> search = [&](const PremiseSet& s) {
        if (!visited.insert(s).second) return;
        PremiseSet mus;
        bool known = false;
        for (const auto& m : found)
            if (m.is_subset_of(s)) {
                mus = m;
                known = true;
                break;
            }
        if (!known) {
            if (checker.consistent(s)) return;
            mus = shrink(s);
            found.push_back(mus);
        }
        for (auto i = mus.find_first(); i != PremiseSet::npos; i = mus.find_next(i)) {
            PremiseSet next = s;
            next.reset(i);
            search(next);
        }
    };
    search(within);

    std::sort(found.begin(), found.end(), BySizeThenMembers{});
    return found;
}

inline void require_mus_budget(const ReliabilityTheory& t, const Limits& limits) {
    if (t.size() > limits.mus_budget)
        throw CapExceeded("premise count " + std::to_string(t.size()) + " exceeds MUS budget " +
                          std::to_string(limits.mus_budget));
}

inline std::vector<PremiseSet> minimal_unsat_subsets(const ReliabilityTheory& t, const Limits& limits = {}) {
    t.require_valid();
    require_mus_budget(t, limits);
    ConsistencyChecker checker(t.formulas(), limits);
    return minimal_unsat_subsets(checker, t.all());
}

/// Undermining arguments produced under one linear extension: for each MUS, its
/// least reliable member is undermined by the rest.
inline std::vector<UnderminingArgument> undermining_args_linear(const std::vector<PremiseSet>& muses,
                                                                const TotalOrder& order) {
    std::vector<UnderminingArgument> out;
    for (const auto& m : muses) {
        std::size_t victim = min_under(order, m);
        PremiseSet support = m;
        support.reset(victim);
        out.push_back({std::move(support), victim});
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<UnderminingArgument> undermining_args_linear(const ReliabilityTheory& t, const TotalOrder& order,
                                                                const Limits& limits = {}) {
    return undermining_args_linear(minimal_unsat_subsets(t, limits), order);
}

/// Undermining arguments over the partial order itself: every minimal member of
/// a MUS is undermined by the rest.
inline std::vector<UnderminingArgument> undermining_args_partial(const ReliabilityTheory& t,
                                                                 const std::vector<PremiseSet>& muses) {
    std::vector<UnderminingArgument> out;
    for (const auto& m : muses) {
        PremiseSet low = minimal_elements(t, m);
        for (auto v = low.find_first(); v != PremiseSet::npos; v = low.find_next(v)) {
            PremiseSet support = m;
            support.reset(v);
            out.push_back({std::move(support), v});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<UnderminingArgument> undermining_args_partial(const ReliabilityTheory& t,
                                                                 const Limits& limits = {}) {
    return undermining_args_partial(t, minimal_unsat_subsets(t, limits));
}

/// Victims of the arguments whose support lies inside `s`.
inline PremiseSet out_set(const std::vector<UnderminingArgument>& args, const PremiseSet& s) {
    PremiseSet out(s.size());
    for (const auto& a : args)
        if (a.support.is_subset_of(s)) out.set(a.victim);
    return out;
}

struct BeliefState {
    PremiseSet delta;
    TotalOrder order;
};

/// The believed premises for a set of undermining arguments: the unique Delta
/// with Delta = Sigma \ Out(Delta).
///
/// Walks the premises most reliable first and drops a premise as soon as one of
/// its undermining arguments has its whole support still believed. Each
/// argument's support must rank above its victim in `order` (true for arguments
/// from undermining_args_linear), so a removal never has to be undone.
inline BeliefState believed_premises(const ReliabilityTheory& t, const std::vector<UnderminingArgument>& args,
                                     const TotalOrder& order) {
    std::vector<std::vector<const UnderminingArgument*>> by_victim(t.size());
    for (const auto& a : args) by_victim.at(a.victim).push_back(&a);

    PremiseSet delta = t.all();
    for (auto phi : order.ranking()) {
        for (const auto* a : by_victim[phi]) {
            if (a->support.is_subset_of(delta)) {
                delta.reset(phi);
                break;
            }
        }
    }
    return {std::move(delta), order};
}

/// Conclusions of the supporting arguments whose support is believed, in one pass.
inline std::vector<Formula> believed_conclusions(const std::vector<SupportingArgument>& args, const PremiseSet& delta) {
    std::vector<Formula> out;
    for (const auto& a : args)
        if (a.support.is_subset_of(delta)) out.push_back(a.conclusion);
    return out;
}

/// Membership of `goal` in the belief set Th(Delta).
inline bool belief_holds(const ReliabilityTheory& t, const BeliefState& state, const Formula& goal,
                         const Limits& limits = {}) {
    ConsistencyChecker checker(t.formulas(), limits, Backend::automatic, goal.atoms());
    return checker.entails(state.delta, goal);
}

/// Subset-minimal P within `within` such that P |= goal.
///
/// Every such P is a MUS of within + {!goal} with !goal removed; MUSes not
/// containing !goal are inconsistent sets that entail anything, and count only
/// when no smaller candidate is inside them.
inline std::vector<PremiseSet> minimal_entailing_subsets(const std::vector<Formula>& formulas,
                                                         const PremiseSet& within, const Formula& goal,
                                                         const Limits& limits = {}) {
    std::vector<Formula> extended = formulas;
    extended.push_back(Formula::negation(goal));
    ConsistencyChecker checker(std::move(extended), limits);
    PremiseSet scope = within;
    scope.resize(formulas.size() + 1);
    scope.set(formulas.size());

    std::vector<PremiseSet> candidates;
    for (auto m : minimal_unsat_subsets(checker, scope)) {
        m.resize(formulas.size());
        candidates.push_back(std::move(m));
    }
    std::vector<PremiseSet> out;
    for (const auto& c : candidates) {
        bool has_smaller = std::any_of(candidates.begin(), candidates.end(), [&](const PremiseSet& d) {
            return d != c && d.is_subset_of(c);
        });
        if (!has_smaller) out.push_back(c);
    }
    std::sort(out.begin(), out.end(), BySizeThenMembers{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// All minimal supporting arguments for `goal` inside the believed premises.
inline std::vector<SupportingArgument> supports(const ReliabilityTheory& t, const BeliefState& state,
                                                const Formula& goal, const Limits& limits = {}) {
    if (!belief_holds(t, state, goal, limits))
        throw UsageError("goal '" + goal.to_string() + "' is not believed");
    std::vector<SupportingArgument> out;
    for (auto& p : minimal_entailing_subsets(t.formulas(), state.delta, goal, limits))
        out.push_back({std::move(p), goal});
    return out;
}

/// Replays argument derivation for one linear extension: the initial premise
/// arguments, then each undermining argument (smaller MUSes first) followed by
/// the believed-premise set recomputed from the arguments derived so far.
/// Intermediate sets may shrink and grow again.
inline std::vector<std::string> saturation_trace(const ReliabilityTheory& t, const TotalOrder& order,
                                                 const Limits& limits = {}) {
    std::vector<std::string> lines;
    for (auto i : t.sorted_by_id())
        lines.push_back(to_string(t, SupportingArgument{singleton(t.size(), i), t.formula(i)}));

    auto muses = minimal_unsat_subsets(t, limits);
    std::vector<UnderminingArgument> derived;
    for (const auto& m : muses) {
        auto arg = undermining_args_linear({m}, order).front();
        derived.push_back(arg);
        lines.push_back(to_string(t, arg));
        lines.push_back("  Δ = " + t.format(believed_premises(t, derived, order).delta));
    }
    return lines;
}

} // namespace inconlog
