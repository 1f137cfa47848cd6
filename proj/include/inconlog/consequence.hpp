#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "inconlog/error.hpp"
#include "inconlog/formula.hpp"
#include "inconlog/limits.hpp"
#include "inconlog/premise_set.hpp"

namespace inconlog {

/// Characteristic vector of a formula over a fixed, sorted atom universe.
///
/// Row r is the interpretation in which atom i is true iff bit i of r is set.
/// Bits beyond the last row are always zero.
class TruthTable {
public:
    TruthTable(std::size_t atom_count, bool value)
        : rows_(std::size_t{1} << atom_count), words_((rows_ + 63) / 64, value ? ~std::uint64_t{0} : 0) {
        trim();
    }

    static TruthTable of_atom(std::size_t atom_count, std::size_t atom) {
        TruthTable t(atom_count, false);
        if (atom < 6) {
            static constexpr std::uint64_t patterns[6] = {
                0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
                0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
            };
            for (auto& w : t.words_) w = patterns[atom];
        } else {
            std::size_t block = std::size_t{1} << (atom - 6);
            for (std::size_t w = 0; w < t.words_.size(); ++w)
                if ((w / block) % 2 == 1) t.words_[w] = ~std::uint64_t{0};
        }
        t.trim();
        return t;
    }

    static TruthTable compile(const Formula& f, const std::map<std::string, std::size_t>& atom_index) {
        switch (f.kind()) {
        case Formula::Kind::atom: return of_atom(atom_index.size(), atom_index.at(f.name()));
        case Formula::Kind::negation: {
            TruthTable t = compile(f.child(), atom_index);
            for (auto& w : t.words_) w = ~w;
            t.trim();
            return t;
        }
        case Formula::Kind::implication: {
            TruthTable l = compile(f.left(), atom_index);
            TruthTable r = compile(f.right(), atom_index);
            for (std::size_t w = 0; w < l.words_.size(); ++w) l.words_[w] = ~l.words_[w] | r.words_[w];
            l.trim();
            return l;
        }
        }
        throw UsageError("unknown formula kind");
    }

    std::size_t rows() const noexcept { return rows_; }
    bool test(std::size_t row) const { return (words_[row / 64] >> (row % 64)) & 1u; }
    const std::vector<std::uint64_t>& words() const noexcept { return words_; }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

private:
    void trim() {
        if (rows_ < 64) words_[0] &= (std::uint64_t{1} << rows_) - 1;
    }

    std::size_t rows_;
    std::vector<std::uint64_t> words_;
};

namespace detail {

/// Clause database with one root literal per encoded formula (Tseitin encoding).
/// Literals are nonzero ints: +v / -v for variable v >= 1.
struct Cnf {
    int variables = 0;
    std::vector<std::vector<int>> clauses;
    std::map<std::string, int> atom_vars;

    int encode(const Formula& f) {
        switch (f.kind()) {
        case Formula::Kind::atom: {
            auto [it, inserted] = atom_vars.try_emplace(f.name(), 0);
            if (inserted) it->second = ++variables;
            return it->second;
        }
        case Formula::Kind::negation: return -encode(f.child());
        case Formula::Kind::implication: {
            int l = encode(f.left());
            int r = encode(f.right());
            int v = ++variables;
            // v <-> (!l | r)
            clauses.push_back({-v, -l, r});
            clauses.push_back({l, v});
            clauses.push_back({-r, v});
            return v;
        }
        }
        return 0;
    }
};

/// DPLL with queue-driven unit propagation over clause occurrence lists.
/// Input atoms are encoded first, so branching settles them before any
/// definitional variable; the Tseitin clauses then fix the rest.
class Dpll {
public:
    Dpll(const Cnf& cnf, std::span<const int> assumptions)
        : cnf_(cnf), value_(cnf.variables + 1, 0), occurs_(2 * (cnf.variables + 1)),
          units_(assumptions.begin(), assumptions.end()) {
        for (std::size_t c = 0; c < cnf_.clauses.size(); ++c)
            for (int lit : cnf_.clauses[c]) occurs_[slot(lit)].push_back(c);
    }

    bool solve() {
        for (const auto& clause : cnf_.clauses)
            if (clause.size() == 1) units_.push_back(clause.front());
        for (int lit : units_)
            if (!assign(lit)) return false;
        return search();
    }

private:
    static std::size_t slot(int lit) { return 2 * static_cast<std::size_t>(lit > 0 ? lit : -lit) + (lit < 0); }

    bool assign(int lit) {
        int v = lit > 0 ? lit : -lit;
        signed char want = lit > 0 ? 1 : -1;
        if (value_[v] == want) return true;
        if (value_[v] == -want) return false;
        value_[v] = want;
        trail_.push_back(lit);
        return true;
    }

    int literal_value(int lit) const {
        int v = lit > 0 ? lit : -lit;
        return lit > 0 ? value_[v] : -value_[v];
    }

    // Propagates every assignment on the trail from `head` on; false on conflict.
    bool propagate(std::size_t head) {
        while (head < trail_.size()) {
            int falsified = -trail_[head++];
            for (std::size_t c : occurs_[slot(falsified)]) {
                int unassigned = 0, last = 0;
                bool satisfied = false;
                for (int lit : cnf_.clauses[c]) {
                    int val = literal_value(lit);
                    if (val > 0) {
                        satisfied = true;
                        break;
                    }
                    if (val == 0) {
                        ++unassigned;
                        last = lit;
                    }
                }
                if (satisfied) continue;
                if (unassigned == 0) return false;
                if (unassigned == 1) assign(last);
            }
        }
        return true;
    }

    bool search() {
        std::size_t mark = 0;
        if (!propagate(mark)) return false;
        return branch(1);
    }

    bool branch(int from) {
        int v = from;
        while (v <= cnf_.variables && value_[v] != 0) ++v;
        if (v > cnf_.variables) return true;
        for (int lit : {v, -v}) {
            std::size_t mark = trail_.size();
            assign(lit);
            if (propagate(mark) && branch(v + 1)) return true;
            undo(mark);
        }
        return false;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            int lit = trail_.back();
            value_[lit > 0 ? lit : -lit] = 0;
            trail_.pop_back();
        }
    }

    const Cnf& cnf_;
    std::vector<signed char> value_;
    std::vector<std::vector<std::size_t>> occurs_;
    std::vector<int> trail_;
    std::vector<int> units_;
};


} // namespace detail

/// Which decision procedure a ConsistencyChecker uses.
enum class Backend {
    automatic,   ///< truth tables up to Limits::max_atoms, DPLL above
    truth_table, ///< exhaustive valuation; refuses universes above the cap
    dpll,
};

/// Classical consistency and entailment over subsets of a fixed formula list.
///
/// The atom universe is the atoms of the formulas plus `extra_atoms`. Subsets are
/// PremiseSets indexed like `formulas`.
class ConsistencyChecker {
public:
    explicit ConsistencyChecker(std::vector<Formula> formulas, const Limits& limits = {},
                                Backend backend = Backend::automatic,
                                const std::set<std::string>& extra_atoms = {})
        : formulas_(std::move(formulas)), limits_(limits) {
        std::set<std::string> atoms = extra_atoms;
        for (const auto& f : formulas_) f.collect_atoms(atoms);
        atoms_.assign(atoms.begin(), atoms.end());
        for (std::size_t i = 0; i < atoms_.size(); ++i) atom_index_.emplace(atoms_[i], i);

        if (backend == Backend::automatic)
            backend = atoms_.size() <= limits.max_atoms ? Backend::truth_table : Backend::dpll;
        if (backend == Backend::truth_table && atoms_.size() > limits.max_atoms)
            throw CapExceeded("atom count " + std::to_string(atoms_.size()) + " exceeds cap " +
                              std::to_string(limits.max_atoms));
        backend_ = backend;

        if (backend_ == Backend::truth_table) {
            tables_.reserve(formulas_.size());
            for (const auto& f : formulas_) tables_.push_back(TruthTable::compile(f, atom_index_));
        } else {
            for (const auto& a : atoms_) cnf_.encode(Formula::atom(a));
            roots_.reserve(formulas_.size());
            for (const auto& f : formulas_) roots_.push_back(cnf_.encode(f));
        }
    }

    std::size_t size() const noexcept { return formulas_.size(); }
    const std::vector<Formula>& formulas() const noexcept { return formulas_; }
    const std::vector<std::string>& atoms() const noexcept { return atoms_; }
    Backend backend() const noexcept { return backend_; }
    const Limits& limits() const noexcept { return limits_; }

    /// Truth table of formula i; only available with the truth-table backend.
    const TruthTable& table(std::size_t i) const {
        if (backend_ != Backend::truth_table) throw UsageError("truth tables not built for this checker");
        return tables_.at(i);
    }

    bool covers(const Formula& f) const {
        for (const auto& a : f.atoms())
            if (!atom_index_.count(a)) return false;
        return true;
    }

    bool consistent(const PremiseSet& s) const {
        if (backend_ == Backend::truth_table) {
            auto idx = members(s);
            for (std::size_t w = 0; w < word_count(); ++w) {
                std::uint64_t acc = row_mask();
                for (auto i : idx) {
                    acc &= tables_[i].words()[w];
                    if (!acc) break;
                }
                if (acc) return true;
            }
            return false;
        }
        std::vector<int> assumptions;
        for (auto i : members(s)) assumptions.push_back(roots_[i]);
        return detail::Dpll(cnf_, assumptions).solve();
    }

    /// True iff the formulas in `s` classically entail `goal`.
    bool entails(const PremiseSet& s, const Formula& goal) const {
        if (!covers(goal)) {
            std::vector<Formula> fs = formulas_;
            fs.push_back(goal);
            auto extra = std::set<std::string>(atoms_.begin(), atoms_.end());
            ConsistencyChecker wider(std::move(fs), limits_, Backend::automatic, extra);
            return wider.entails(resized(s, formulas_.size() + 1), goal);
        }
        if (backend_ == Backend::truth_table) {
            TruthTable g = TruthTable::compile(goal, atom_index_);
            auto idx = members(s);
            for (std::size_t w = 0; w < word_count(); ++w) {
                std::uint64_t acc = row_mask() & ~g.words()[w];
                for (auto i : idx) {
                    if (!acc) break;
                    acc &= tables_[i].words()[w];
                }
                if (acc) return false;
            }
            return true;
        }
        detail::Cnf cnf = cnf_;
        int root = cnf.encode(goal);
        std::vector<int> assumptions;
        for (auto i : members(s)) assumptions.push_back(roots_[i]);
        assumptions.push_back(-root);
        return !detail::Dpll(cnf, assumptions).solve();
    }

private:
    std::size_t word_count() const { return ((std::size_t{1} << atoms_.size()) + 63) / 64; }
    std::uint64_t row_mask() const {
        std::size_t rows = std::size_t{1} << atoms_.size();
        return rows < 64 ? (std::uint64_t{1} << rows) - 1 : ~std::uint64_t{0};
    }

    static PremiseSet resized(PremiseSet s, std::size_t n) {
        s.resize(n);
        return s;
    }

    std::vector<Formula> formulas_;
    Limits limits_;
    std::vector<std::string> atoms_;
    std::map<std::string, std::size_t> atom_index_;
    Backend backend_ = Backend::truth_table;
    std::vector<TruthTable> tables_;
    detail::Cnf cnf_;
    std::vector<int> roots_;
};

/// True iff some interpretation over the atoms of `fs` satisfies every member.
inline bool is_consistent(std::span<const Formula> fs, const Limits& limits = {}) {
    ConsistencyChecker checker(std::vector<Formula>(fs.begin(), fs.end()), limits);
    return checker.consistent(full_set(fs.size()));
}

/// Classical entailment `fs |= goal`.
inline bool entails(std::span<const Formula> fs, const Formula& goal, const Limits& limits = {}) {
    ConsistencyChecker checker(std::vector<Formula>(fs.begin(), fs.end()), limits, Backend::automatic,
                               goal.atoms());
    return checker.entails(full_set(fs.size()), goal);
}

/// All 2^n interpretations over `atoms`, ordered by the bitmask whose bit i is
/// the i-th atom in sorted order.
inline std::vector<Interpretation> all_interpretations(const std::set<std::string>& atoms,
                                                       const Limits& limits = {}) {
    if (atoms.size() > limits.max_atoms)
        throw CapExceeded("atom count " + std::to_string(atoms.size()) + " exceeds cap " +
                          std::to_string(limits.max_atoms));
    std::vector<std::string> sorted(atoms.begin(), atoms.end());
    std::vector<Interpretation> out;
    std::size_t rows = std::size_t{1} << sorted.size();
    out.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        std::set<std::string> on;
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if ((r >> i) & 1u) on.insert(sorted[i]);
        out.emplace_back(std::move(on));
    }
    return out;
}

} // namespace inconlog
