#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "inconlog/arguments.hpp"
#include "inconlog/error.hpp"
#include "inconlog/limits.hpp"
#include "inconlog/premise_set.hpp"
#include "inconlog/theory.hpp"

namespace inconlog {

using Argument = std::variant<SupportingArgument, UnderminingArgument>;

inline const PremiseSet& support_of(const Argument& a) {
    return std::visit([](const auto& x) -> const PremiseSet& { return x.support; }, a);
}

inline bool is_undermining(const Argument& a) { return std::holds_alternative<UnderminingArgument>(a); }

inline std::string to_string(const ReliabilityTheory& t, const Argument& a) {
    return std::visit([&](const auto& x) { return to_string(t, x); }, a);
}

/// Stable textual key: sorted support ids, the arrow, then the conclusion or victim.
inline std::string canonical_key(const ReliabilityTheory& t, const Argument& a) {
    std::string key;
    for (const auto& id : t.ids(support_of(a))) key += id + ",";
    if (const auto* s = std::get_if<SupportingArgument>(&a)) return key + "=>" + s->conclusion.to_string();
    return key + "=/>" + t.id(std::get<UnderminingArgument>(a).victim);
}

/// "a" followed by the 64-bit FNV-1a hash of the canonical key in hex.
inline std::string argument_name(const ReliabilityTheory& t, const Argument& a) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : canonical_key(t, a)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static constexpr char digits[] = "0123456789abcdef";
    std::string out = "a";
    for (int shift = 60; shift >= 0; shift -= 4) out += digits[(h >> shift) & 0xF];
    return out;
}

/// Arguments with the attack relation: an undermining argument attacks every
/// argument whose support contains its victim.
class ArgumentationFramework {
public:
    ArgumentationFramework() = default;

    explicit ArgumentationFramework(std::vector<Argument> arguments) {
        for (auto& a : arguments)
            if (std::find(arguments_.begin(), arguments_.end(), a) == arguments_.end())
                arguments_.push_back(std::move(a));
        const std::size_t n = arguments_.size();
        attackers_.assign(n, {});
        targets_.assign(n, {});
        for (std::size_t i = 0; i < n; ++i) {
            const auto* u = std::get_if<UnderminingArgument>(&arguments_[i]);
            if (!u) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const PremiseSet& s = support_of(arguments_[j]);
                if (u->victim < s.size() && s.test(u->victim)) {
                    attacks_.emplace_back(i, j);
                    targets_[i].push_back(j);
                    attackers_[j].push_back(i);
                }
            }
        }
    }

    std::size_t size() const noexcept { return arguments_.size(); }
    const std::vector<Argument>& arguments() const noexcept { return arguments_; }
    const Argument& argument(std::size_t i) const { return arguments_.at(i); }
    const std::vector<std::pair<std::size_t, std::size_t>>& attacks() const noexcept { return attacks_; }
    const std::vector<std::size_t>& attackers(std::size_t i) const { return attackers_.at(i); }
    const std::vector<std::size_t>& targets(std::size_t i) const { return targets_.at(i); }

    bool attacks(std::size_t a, std::size_t b) const {
        const auto& t = targets_.at(a);
        return std::find(t.begin(), t.end(), b) != t.end();
    }

private:
    std::vector<Argument> arguments_;
    std::vector<std::pair<std::size_t, std::size_t>> attacks_;
    std::vector<std::vector<std::size_t>> attackers_;
    std::vector<std::vector<std::size_t>> targets_;
};

inline ArgumentationFramework build_af(std::vector<Argument> args) { return ArgumentationFramework(std::move(args)); }

/// {phi} => phi for every premise.
inline std::vector<Argument> premise_arguments(const ReliabilityTheory& t) {
    std::vector<Argument> out;
    for (std::size_t i = 0; i < t.size(); ++i) out.emplace_back(SupportingArgument{singleton(t.size(), i), t.formula(i)});
    return out;
}

/// Premise arguments plus the undermining arguments of one linear extension.
inline ArgumentationFramework linear_framework(const ReliabilityTheory& t, const TotalOrder& order,
                                               const Limits& limits = {}) {
    auto args = premise_arguments(t);
    for (auto& u : undermining_args_linear(t, order, limits)) args.emplace_back(std::move(u));
    return build_af(std::move(args));
}

/// Premise arguments plus undermining arguments against every minimal member of each MUS.
inline ArgumentationFramework partial_framework(const ReliabilityTheory& t, const Limits& limits = {}) {
    auto args = premise_arguments(t);
    for (auto& u : undermining_args_partial(t, limits)) args.emplace_back(std::move(u));
    return build_af(std::move(args));
}

struct ArgExtension {
    enum class Status { stable, grounded };
    /// Argument indices into the framework, ascending.
    std::vector<std::size_t> members;
    Status status = Status::stable;

    bool contains(std::size_t i) const { return std::binary_search(members.begin(), members.end(), i); }
    friend bool operator==(const ArgExtension&, const ArgExtension&) = default;
};

/// Least fixed point of the defence function, starting from the unattacked arguments.
inline ArgExtension grounded_extension(const ArgumentationFramework& af) {
    const std::size_t n = af.size();
    std::vector<char> in(n, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<char> defeated(n, 0);
        for (std::size_t a = 0; a < n; ++a)
            if (in[a])
                for (auto b : af.targets(a)) defeated[b] = 1;
        for (std::size_t a = 0; a < n; ++a) {
            if (in[a]) continue;
            const auto& att = af.attackers(a);
            if (std::all_of(att.begin(), att.end(), [&](std::size_t b) { return defeated[b] != 0; })) {
                in[a] = 1;
                changed = true;
            }
        }
    }
    ArgExtension e{{}, ArgExtension::Status::grounded};
    for (std::size_t a = 0; a < n; ++a)
        if (in[a]) e.members.push_back(a);
    return e;
}

/// All stable extensions by backtracking over in/out labels.
///
/// An argument may go in only if it neither attacks nor is attacked by an
/// argument already in; a branch dies as soon as some out argument has no
/// undecided attacker left and no attacker in.
inline std::vector<ArgExtension> stable_extensions(const ArgumentationFramework& af, const Limits& limits = {}) {
    const std::size_t n = af.size();
    if (n > limits.max_arguments)
        throw CapExceeded("argument count " + std::to_string(n) + " exceeds cap " +
                          std::to_string(limits.max_arguments));

    enum : signed char { undecided = 0, in = 1, out = -1 };
    std::vector<signed char> label(n, undecided);
    std::vector<std::size_t> in_attackers(n, 0), open_attackers(n, 0);
    for (std::size_t a = 0; a < n; ++a) open_attackers[a] = af.attackers(a).size();

    std::vector<ArgExtension> found;
    auto unsupported_out = [&](std::size_t a) {
        return label[a] == out && in_attackers[a] == 0 && open_attackers[a] == 0;
    };

    std::function<void(std::size_t)> search = [&](std::size_t k) {
        if (k == n) {
            ArgExtension e;
            for (std::size_t a = 0; a < n; ++a)
                if (label[a] == in) e.members.push_back(a);
            found.push_back(std::move(e));
            return;
        }
        for (signed char choice : {in, out}) {
            if (choice == in) {
                bool clash = false;
                for (auto b : af.targets(k)) clash = clash || label[b] == in || b == k;
                for (auto b : af.attackers(k)) clash = clash || label[b] == in;
                if (clash) continue;
            }
            label[k] = choice;
            for (auto b : af.targets(k)) {
                --open_attackers[b];
                if (choice == in) ++in_attackers[b];
            }
            bool dead = unsupported_out(k);
            for (auto b : af.targets(k)) dead = dead || unsupported_out(b);
            if (!dead) search(k + 1);
            for (auto b : af.targets(k)) {
                ++open_attackers[b];
                if (choice == in) --in_attackers[b];
            }
            label[k] = undecided;
        }
    };
    search(0);
    return found;
}

/// True iff the order extended with "victim below each support member" for
/// every undermining argument in `ext` has a cycle.
inline bool is_ignored(const ReliabilityTheory& t, const ArgumentationFramework& af, const ArgExtension& ext) {
    const std::size_t n = t.size();
    std::vector<std::vector<char>> less(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) less[i][j] = t.less(i, j);
    for (auto a : ext.members)
        if (const auto* u = std::get_if<UnderminingArgument>(&af.argument(a)))
            for (auto psi = u->support.find_first(); psi != PremiseSet::npos; psi = u->support.find_next(psi))
                less[u->victim][psi] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (less[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (less[k][j]) less[i][j] = 1;
    for (std::size_t i = 0; i < n; ++i)
        if (less[i][i]) return true;
    return false;
}

/// Sigma minus the victims of the undermining arguments in a non-ignored extension.
inline PremiseSet af_belief_state(const ReliabilityTheory& t, const ArgumentationFramework& af,
                                  const ArgExtension& ext) {
    if (is_ignored(t, af, ext)) throw UsageError("belief state requested for an ignored extension");
    PremiseSet delta = t.all();
    for (auto a : ext.members)
        if (const auto* u = std::get_if<UnderminingArgument>(&af.argument(a))) delta.reset(u->victim);
    return delta;
}

/// "arg(NAME)." lines then "att(A,B)." lines, each block sorted.
inline std::string export_af(const ReliabilityTheory& t, const ArgumentationFramework& af) {
    std::vector<std::string> names;
    for (const auto& a : af.arguments()) names.push_back(argument_name(t, a));
    std::vector<std::string> args, atts;
    for (const auto& n : names) args.push_back("arg(" + n + ").");
    for (const auto& [a, b] : af.attacks()) atts.push_back("att(" + names[a] + "," + names[b] + ").");
    std::sort(args.begin(), args.end());
    std::sort(atts.begin(), atts.end());
    std::string out;
    for (const auto& l : args) out += l + "\n";
    for (const auto& l : atts) out += l + "\n";
    return out;
}

} // namespace inconlog
