#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "inconlog/consequence.hpp"
#include "inconlog/error.hpp"
#include "inconlog/formula.hpp"
#include "inconlog/limits.hpp"
#include "inconlog/premise_set.hpp"

namespace inconlog {

struct Premise {
    std::string id;
    Formula formula;

    friend bool operator==(const Premise&, const Premise&) = default;
};

/// (x, y): premise x is strictly less reliable than premise y.
using OrderPair = std::pair<std::string, std::string>;

/// Smallest transitive superset of `pairs`.
inline std::set<OrderPair> transitive_closure(const std::set<OrderPair>& pairs) {
    std::map<std::string, std::set<std::string>> above;
    std::set<std::string> nodes;
    for (const auto& [lo, hi] : pairs) {
        above[lo].insert(hi);
        nodes.insert(lo);
        nodes.insert(hi);
    }
    std::set<OrderPair> out;
    for (const auto& start : nodes) {
        std::vector<std::string> stack(above[start].begin(), above[start].end());
        std::set<std::string> seen;
        while (!stack.empty()) {
            std::string n = std::move(stack.back());
            stack.pop_back();
            if (!seen.insert(n).second) continue;
            out.emplace(start, n);
            for (const auto& m : above[n]) stack.push_back(m);
        }
    }
    return out;
}

/// A finite premise list with a partial reliability order.
///
/// Any input is representable so that validate() can report what is wrong with
/// it; operations that need a strict partial order call require_valid().
class ReliabilityTheory {
public:
    ReliabilityTheory() = default;

    ReliabilityTheory(std::vector<Premise> premises, std::set<OrderPair> order)
        : premises_(std::move(premises)), order_(std::move(order)) {
        for (std::size_t i = 0; i < premises_.size(); ++i) {
            if (!index_.emplace(premises_[i].id, i).second) well_formed_ = false;
        }
        for (const auto& [lo, hi] : order_)
            if (!index_.count(lo) || !index_.count(hi)) well_formed_ = false;

        std::size_t n = premises_.size();
        less_.assign(n, std::vector<char>(n, 0));
        for (const auto& [lo, hi] : transitive_closure(order_)) {
            auto a = index_.find(lo), b = index_.find(hi);
            if (a == index_.end() || b == index_.end()) continue;
            less_[a->second][b->second] = 1;
        }
        for (std::size_t i = 0; i < n; ++i)
            if (less_[i][i]) well_formed_ = false;

        by_id_.resize(n);
        for (std::size_t i = 0; i < n; ++i) by_id_[i] = i;
        std::stable_sort(by_id_.begin(), by_id_.end(),
                         [&](std::size_t a, std::size_t b) { return premises_[a].id < premises_[b].id; });
    }

    std::size_t size() const noexcept { return premises_.size(); }
    bool empty() const noexcept { return premises_.empty(); }
    const std::vector<Premise>& premises() const noexcept { return premises_; }
    const Premise& premise(std::size_t i) const { return premises_.at(i); }
    const std::string& id(std::size_t i) const { return premises_.at(i).id; }
    const Formula& formula(std::size_t i) const { return premises_.at(i).formula; }

    /// Generating order pairs as supplied.
    const std::set<OrderPair>& order() const noexcept { return order_; }

    /// True iff ids are unique, every order pair names declared premises and
    /// the closed order is irreflexive.
    bool well_formed() const noexcept { return well_formed_; }

    void require_valid() const {
        if (!well_formed_) throw InvalidTheory("reliability theory is not a strict partial order over unique ids");
    }

    std::optional<std::size_t> find(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t index_of(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw UsageError("unknown premise id '" + id + "'");
        return it->second;
    }

    /// Premise i is strictly less reliable than premise j under the closed order.
    bool less(std::size_t i, std::size_t j) const { return less_[i][j] != 0; }

    /// Closed order as id pairs.
    std::set<OrderPair> closed_order() const {
        std::set<OrderPair> out;
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j)
                if (less_[i][j]) out.emplace(premises_[i].id, premises_[j].id);
        return out;
    }

    std::vector<Formula> formulas() const {
        std::vector<Formula> out;
        out.reserve(premises_.size());
        for (const auto& p : premises_) out.push_back(p.formula);
        return out;
    }

    std::set<std::string> atoms() const {
        std::set<std::string> out;
        for (const auto& p : premises_) p.formula.collect_atoms(out);
        return out;
    }

    PremiseSet all() const { return full_set(size()); }
    PremiseSet none() const { return empty_set(size()); }

    /// Premise indices sorted by id.
    const std::vector<std::size_t>& sorted_by_id() const noexcept { return by_id_; }

    PremiseSet set_of(const std::vector<std::string>& ids) const {
        PremiseSet s(size());
        for (const auto& id : ids) s.set(index_of(id));
        return s;
    }

    /// Member ids in sorted order.
    std::vector<std::string> ids(const PremiseSet& s) const {
        std::vector<std::string> out;
        for (auto i : by_id_)
            if (s.test(i)) out.push_back(premises_[i].id);
        return out;
    }

    /// "{a,b,c}" with ids sorted.
    std::string format(const PremiseSet& s) const {
        std::string out = "{";
        bool first = true;
        for (const auto& id : ids(s)) {
            if (!first) out += ',';
            out += id;
            first = false;
        }
        return out + "}";
    }

    /// Same (id, formula) premises and the same closed order; declaration order is irrelevant.
    friend bool operator==(const ReliabilityTheory& a, const ReliabilityTheory& b) {
        if (a.size() != b.size()) return false;
        for (const auto& p : a.premises_) {
            auto j = b.find(p.id);
            if (!j || !(b.formula(*j) == p.formula)) return false;
        }
        return a.closed_order() == b.closed_order();
    }

private:
    std::vector<Premise> premises_;
    std::set<OrderPair> order_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::vector<char>> less_;
    std::vector<std::size_t> by_id_;
    bool well_formed_ = true;
};

struct ValidationIssue {
    enum class Kind { cycle, dangling_id, duplicate_id, unsatisfiable_premise };
    Kind kind;
    /// For a cycle: the ids along it with the first repeated at the end.
    std::vector<std::string> ids;

    bool is_error() const noexcept { return kind != Kind::unsatisfiable_premise; }

    std::string describe() const {
        switch (kind) {
        case Kind::cycle: {
            std::string out = "cycle: ";
            for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? " < " : "") + ids[i];
            return out;
        }
        case Kind::dangling_id: return "dangling id: " + ids.front();
        case Kind::duplicate_id: return "duplicate id: " + ids.front();
        case Kind::unsatisfiable_premise: return "warning: unsatisfiable premise " + ids.front();
        }
        return {};
    }
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool valid() const {
        return std::none_of(issues.begin(), issues.end(), [](const auto& i) { return i.is_error(); });
    }
};

/// Structural checks (duplicate ids, dangling order ids, cycles) plus a warning
/// for each individually unsatisfiable premise, which can never be believed.
inline ValidationReport validate(const ReliabilityTheory& t, const Limits& limits = {}) {
    ValidationReport report;
    std::set<std::string> seen, reported;
    for (const auto& p : t.premises())
        if (!seen.insert(p.id).second && reported.insert(p.id).second)
            report.issues.push_back({ValidationIssue::Kind::duplicate_id, {p.id}});

    std::set<std::string> dangling;
    for (const auto& [lo, hi] : t.order()) {
        if (!seen.count(lo)) dangling.insert(lo);
        if (!seen.count(hi)) dangling.insert(hi);
    }
    for (const auto& d : dangling) report.issues.push_back({ValidationIssue::Kind::dangling_id, {d}});

    // One representative cycle per strongly connected region, found by DFS over
    // the generating pairs.
    std::map<std::string, std::vector<std::string>> above;
    for (const auto& [lo, hi] : t.order()) above[lo].push_back(hi);
    std::map<std::string, int> state; // 0 new, 1 on stack, 2 done
    std::vector<std::string> path;
    std::function<void(const std::string&)> dfs = [&](const std::string& n) {
        state[n] = 1;
        path.push_back(n);
        for (const auto& m : above[n]) {
            if (state[m] == 1) {
                auto it = std::find(path.begin(), path.end(), m);
                std::vector<std::string> cyc(it, path.end());
                cyc.push_back(m);
                report.issues.push_back({ValidationIssue::Kind::cycle, std::move(cyc)});
            } else if (state[m] == 0) {
                dfs(m);
            }
        }
        path.pop_back();
        state[n] = 2;
    };
    for (const auto& [n, _] : above)
        if (state[n] == 0) dfs(n);

    for (const auto& p : t.premises()) {
        std::vector<Formula> one{p.formula};
        if (!is_consistent(one, limits))
            report.issues.push_back({ValidationIssue::Kind::unsatisfiable_premise, {p.id}});
    }
    return report;
}

/// A linear extension of a reliability order: every premise index, most reliable first.
class TotalOrder {
public:
    TotalOrder() = default;
    explicit TotalOrder(std::vector<std::size_t> ranking) : ranking_(std::move(ranking)) {
        position_.assign(ranking_.size(), 0);
        for (std::size_t k = 0; k < ranking_.size(); ++k) position_.at(ranking_[k]) = k;
    }

    static TotalOrder from_ids(const ReliabilityTheory& t, const std::vector<std::string>& ids) {
        std::vector<std::size_t> r;
        for (const auto& id : ids) r.push_back(t.index_of(id));
        return TotalOrder(std::move(r));
    }

    const std::vector<std::size_t>& ranking() const noexcept { return ranking_; }
    std::size_t size() const noexcept { return ranking_.size(); }
    /// 0 for the most reliable premise.
    std::size_t position(std::size_t premise) const { return position_.at(premise); }

    /// Premise i is ranked below (less reliable than) premise j.
    bool below(std::size_t i, std::size_t j) const { return position(i) > position(j); }

    std::vector<std::string> ids(const ReliabilityTheory& t) const {
        std::vector<std::string> out;
        for (auto i : ranking_) out.push_back(t.id(i));
        return out;
    }

    /// True iff this is a permutation of t's premises respecting its order.
    bool extends(const ReliabilityTheory& t) const {
        if (ranking_.size() != t.size()) return false;
        std::vector<char> seen(t.size(), 0);
        for (auto i : ranking_) {
            if (i >= t.size() || seen[i]) return false;
            seen[i] = 1;
        }
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = 0; j < t.size(); ++j)
                if (t.less(i, j) && !below(i, j)) return false;
        return true;
    }

    friend bool operator==(const TotalOrder& a, const TotalOrder& b) { return a.ranking_ == b.ranking_; }

private:
    std::vector<std::size_t> ranking_;
    std::vector<std::size_t> position_;
};

/// Visits every linear extension, lexicographically by id sequence. Throws
/// CapExceeded once more than `limits.max_extensions` have been produced.
/// The visitor returns false to stop early.
inline void for_each_linear_extension(const ReliabilityTheory& t, const Limits& limits,
                                      const std::function<bool(const TotalOrder&)>& visit) {
    t.require_valid();
    const std::size_t n = t.size();
    // A premise may be placed once nothing still unplaced is more reliable than it.
    std::vector<std::size_t> pending_above(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (t.less(i, j)) ++pending_above[i];

    std::vector<std::size_t> ranking;
    std::vector<char> placed(n, 0);
    std::size_t produced = 0;
    bool stop = false;

    std::function<void()> extend = [&] {
        if (stop) return;
        if (ranking.size() == n) {
            if (++produced > limits.max_extensions)
                throw CapExceeded("more than " + std::to_string(limits.max_extensions) + " linear extensions");
            if (!visit(TotalOrder(ranking))) stop = true;
            return;
        }
        for (auto i : t.sorted_by_id()) {
            if (placed[i] || pending_above[i] != 0) continue;
            placed[i] = 1;
            ranking.push_back(i);
            for (std::size_t k = 0; k < n; ++k)
                if (t.less(k, i)) --pending_above[k];
            extend();
            for (std::size_t k = 0; k < n; ++k)
                if (t.less(k, i)) ++pending_above[k];
            ranking.pop_back();
            placed[i] = 0;
            if (stop) return;
        }
    };
    extend();
}

inline std::vector<TotalOrder> linear_extensions(const ReliabilityTheory& t, const Limits& limits = {}) {
    std::vector<TotalOrder> out;
    for_each_linear_extension(t, limits, [&](const TotalOrder& o) {
        out.push_back(o);
        return true;
    });
    return out;
}

/// The least reliable member of `ids` under a total order.
inline std::size_t min_under(const TotalOrder& order, const PremiseSet& ids) {
    if (ids.none()) throw UsageError("min_under of an empty set");
    std::size_t best = ids.find_first();
    for (auto i = ids.find_next(best); i != PremiseSet::npos; i = ids.find_next(i))
        if (order.position(i) > order.position(best)) best = i;
    return best;
}

/// Members of `ids` with no other member strictly less reliable than them.
inline PremiseSet minimal_elements(const ReliabilityTheory& t, const PremiseSet& ids) {
    if (ids.none()) throw UsageError("minimal_elements of an empty set");
    PremiseSet out(ids.size());
    for (auto x = ids.find_first(); x != PremiseSet::npos; x = ids.find_next(x)) {
        bool minimal = true;
        for (auto y = ids.find_first(); y != PremiseSet::npos && minimal; y = ids.find_next(y))
            if (t.less(y, x)) minimal = false;
        if (minimal) out.set(x);
    }
    return out;
}

} // namespace inconlog
