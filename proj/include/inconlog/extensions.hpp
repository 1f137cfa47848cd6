#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "inconlog/consequence.hpp"
#include "inconlog/formula.hpp"
#include "inconlog/limits.hpp"
#include "inconlog/premise_set.hpp"
#include "inconlog/theory.hpp"

namespace inconlog {

/// R: the distinct most reliable consistent premise sets of a theory.
using ExtensionSet = std::set<PremiseSet>;

/// Greedy accumulation, most reliable first: a premise is kept iff it is
/// consistent with everything kept before it.
inline PremiseSet most_reliable_set(const ConsistencyChecker& checker, const TotalOrder& order) {
    PremiseSet kept(checker.size());
    for (auto i : order.ranking()) {
        kept.set(i);
        if (!checker.consistent(kept)) kept.reset(i);
    }
    return kept;
}

inline PremiseSet most_reliable_set(const ReliabilityTheory& t, const TotalOrder& order, const Limits& limits = {}) {
    ConsistencyChecker checker(t.formulas(), limits);
    return most_reliable_set(checker, order);
}

/// R, explored as a search over prefixes of linear extensions.
///
/// Two prefixes that placed the same premises and kept the same subset lead to
/// the same outcomes, so each (placed, kept) state is expanded once; the cap
/// bounds the number of distinct states.
inline ExtensionSet all_extensions(const ReliabilityTheory& t, const Limits& limits = {}) {
    t.require_valid();
    const std::size_t n = t.size();
    ConsistencyChecker checker(t.formulas(), limits);
    std::vector<PremiseSet> above(n, PremiseSet(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (t.less(i, j)) above[i].set(j);

    using State = std::pair<PremiseSet, PremiseSet>;
    std::set<State> seen;
    std::vector<State> stack{{PremiseSet(n), PremiseSet(n)}};
    seen.insert(stack.back());
    std::map<PremiseSet, bool> verdicts;
    auto consistent = [&](const PremiseSet& kept) {
        auto [it, fresh] = verdicts.try_emplace(kept, false);
        if (fresh) it->second = checker.consistent(kept);
        return it->second;
    };
    ExtensionSet out;
    while (!stack.empty()) {
        auto [placed, kept] = std::move(stack.back());
        stack.pop_back();
        if (placed.count() == n) {
            out.insert(kept);
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (placed.test(i) || !above[i].is_subset_of(placed)) continue;
            State next{placed, kept};
            next.first.set(i);
            next.second.set(i);
            if (!consistent(next.second)) next.second.reset(i);
            if (seen.insert(next).second) {
                if (seen.size() > limits.max_extensions)
                    throw CapExceeded("more than " + std::to_string(limits.max_extensions) +
                                      " search states while collecting extensions");
                stack.push_back(std::move(next));
            }
        }
    }
    return out;
}

/// Goal holds in Th(D) for every D in `r`; `r` must belong to `t`.
inline bool skeptical_entails(const ReliabilityTheory& t, const ExtensionSet& r, const Formula& goal,
                              const Limits& limits = {}) {
    ConsistencyChecker checker(t.formulas(), limits, Backend::automatic, goal.atoms());
    for (const auto& d : r)
        if (!checker.entails(d, goal)) return false;
    return true;
}

inline bool skeptical_entails(const ReliabilityTheory& t, const Formula& goal, const Limits& limits = {}) {
    return skeptical_entails(t, all_extensions(t, limits), goal, limits);
}

/// Goal holds in Th(D) for some D in R.
inline bool credulous_entails(const ReliabilityTheory& t, const Formula& goal, const Limits& limits = {}) {
    ConsistencyChecker checker(t.formulas(), limits, Backend::automatic, goal.atoms());
    for (const auto& d : all_extensions(t, limits))
        if (checker.entails(d, goal)) return true;
    return false;
}

} // namespace inconlog
