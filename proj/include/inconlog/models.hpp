#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "inconlog/consequence.hpp"
#include "inconlog/extensions.hpp"
#include "inconlog/formula.hpp"
#include "inconlog/limits.hpp"
#include "inconlog/premise_set.hpp"
#include "inconlog/theory.hpp"

namespace inconlog {

/// Premises satisfied by an interpretation.
inline PremiseSet prem_of(const Interpretation& m, const ReliabilityTheory& t) {
    PremiseSet out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        if (evaluate(t.formula(i), m)) out.set(i);
    return out;
}

/// The preference test on satisfied-premise sets: `less` is dominated by `more`
/// when they differ and every premise only `less` satisfies is outranked by some
/// premise only `more` satisfies.
inline bool prem_preferred(const ReliabilityTheory& t, const PremiseSet& less, const PremiseSet& more) {
    if (less == more) return false;
    PremiseSet lost = less - more;
    PremiseSet gained = more - less;
    for (auto phi = lost.find_first(); phi != PremiseSet::npos; phi = lost.find_next(phi)) {
        bool compensated = false;
        for (auto psi = gained.find_first(); psi != PremiseSet::npos && !compensated; psi = gained.find_next(psi))
            compensated = t.less(phi, psi);
        if (!compensated) return false;
    }
    return true;
}

/// m ⊑ n: interpretation n is preferred over m.
inline bool prefers(const ReliabilityTheory& t, const Interpretation& m, const Interpretation& n) {
    return prem_preferred(t, prem_of(m, t), prem_of(n, t));
}

struct PreferenceWitness {
    Interpretation less;
    Interpretation more;
    /// Each premise satisfied only by `less`, paired with a more reliable premise satisfied only by `more`.
    std::vector<std::pair<std::size_t, std::size_t>> pairing;
};

inline std::optional<PreferenceWitness> preference_witness(const ReliabilityTheory& t, const Interpretation& m,
                                                           const Interpretation& n) {
    PremiseSet pm = prem_of(m, t), pn = prem_of(n, t);
    if (!prem_preferred(t, pm, pn)) return std::nullopt;
    PreferenceWitness w{m, n, {}};
    PremiseSet lost = pm - pn, gained = pn - pm;
    for (auto phi = lost.find_first(); phi != PremiseSet::npos; phi = lost.find_next(phi))
        for (auto psi = gained.find_first(); psi != PremiseSet::npos; psi = gained.find_next(psi))
            if (t.less(phi, psi)) {
                w.pairing.emplace_back(phi, psi);
                break;
            }
    return w;
}

namespace detail {

inline Interpretation row_interpretation(const std::vector<std::string>& atoms, std::size_t row) {
    std::set<std::string> on;
    for (std::size_t i = 0; i < atoms.size(); ++i)
        if ((row >> i) & 1u) on.insert(atoms[i]);
    return Interpretation(std::move(on));
}

// Rows of `checker`'s universe satisfying `filter` (all rows when null) whose
// satisfied-premise set is maximal under the preference among those rows.
inline std::vector<Interpretation> maximal_rows(const ReliabilityTheory& t, const ConsistencyChecker& checker,
                                                const TruthTable* filter) {
    const std::size_t rows = std::size_t{1} << checker.atoms().size();
    std::vector<std::size_t> candidates;
    std::vector<PremiseSet> prem;
    std::set<PremiseSet> distinct;
    for (std::size_t r = 0; r < rows; ++r) {
        if (filter && !filter->test(r)) continue;
        PremiseSet p(t.size());
        for (std::size_t i = 0; i < t.size(); ++i)
            if (checker.table(i).test(r)) p.set(i);
        candidates.push_back(r);
        distinct.insert(p);
        prem.push_back(std::move(p));
    }
    std::set<PremiseSet> maximal;
    for (const auto& p : distinct) {
        bool dominated = std::any_of(distinct.begin(), distinct.end(),
                                     [&](const PremiseSet& q) { return prem_preferred(t, p, q); });
        if (!dominated) maximal.insert(p);
    }
    std::vector<Interpretation> out;
    for (std::size_t k = 0; k < candidates.size(); ++k)
        if (maximal.count(prem[k])) out.push_back(row_interpretation(checker.atoms(), candidates[k]));
    return out;
}

} // namespace detail

/// Interpretations over the atoms of the theory (plus `extra_atoms`) not
/// dominated by any other interpretation, in row order.
inline std::vector<Interpretation> preferred_models(const ReliabilityTheory& t, const Limits& limits = {},
                                                    const std::set<std::string>& extra_atoms = {}) {
    ConsistencyChecker checker(t.formulas(), limits, Backend::truth_table, extra_atoms);
    return detail::maximal_rows(t, checker, nullptr);
}

/// The undominated interpretations among those satisfying `alpha`, compared
/// under the preference of `t` itself (not of the revised theory).
inline std::vector<Interpretation> preferred_models_satisfying(const ReliabilityTheory& t, const Formula& alpha,
                                                               const Limits& limits = {},
                                                               const std::set<std::string>& extra_atoms = {}) {
    std::set<std::string> extra = extra_atoms;
    alpha.collect_atoms(extra);
    ConsistencyChecker checker(t.formulas(), limits, Backend::truth_table, extra);
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < checker.atoms().size(); ++i) index.emplace(checker.atoms()[i], i);
    TruthTable filter = TruthTable::compile(alpha, index);
    return detail::maximal_rows(t, checker, &filter);
}

/// Adds `alpha` as a premise more reliable than every other one.
///
/// Premises whose formula equals `alpha` are dropped first together with their
/// order pairs; the new premise gets the first free id "__revision_k", so
/// revising twice by the same formula yields the same theory.
inline ReliabilityTheory revise(const ReliabilityTheory& t, const Formula& alpha) {
    t.require_valid();
    std::vector<Premise> kept;
    std::set<std::string> kept_ids;
    for (const auto& p : t.premises())
        if (!(p.formula == alpha)) {
            kept.push_back(p);
            kept_ids.insert(p.id);
        }

    std::set<OrderPair> order;
    for (const auto& [lo, hi] : t.closed_order())
        if (kept_ids.count(lo) && kept_ids.count(hi)) order.emplace(lo, hi);

    std::size_t k = 1;
    while (kept_ids.count("__revision_" + std::to_string(k))) ++k;
    std::string id = "__revision_" + std::to_string(k);
    for (const auto& p : kept) order.emplace(p.id, id);
    kept.push_back({id, alpha});
    return ReliabilityTheory(std::move(kept), std::move(order));
}

/// alpha |~ beta: beta is a skeptical consequence of the theory revised by alpha.
/// An unsatisfiable alpha has no models and conditions everything.
inline bool conditional(const ReliabilityTheory& t, const Formula& alpha, const Formula& beta,
                        const Limits& limits = {}) {
    std::vector<Formula> a{alpha};
    if (!is_consistent(a, limits)) return true;
    return skeptical_entails(revise(t, alpha), beta, limits);
}

} // namespace inconlog
