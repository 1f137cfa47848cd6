#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "inconlog/arguments.hpp"
#include "inconlog/error.hpp"
#include "inconlog/formula.hpp"
#include "inconlog/limits.hpp"
#include "inconlog/theory.hpp"

namespace inconlog {

// ---------------------------------------------------------------------------
// Modal categories
// ---------------------------------------------------------------------------

/// Layers of premises, most reliable layer first.
struct ModalCategories {
    std::vector<std::vector<Premise>> layers;
};

/// Every premise of an earlier layer is more reliable than every premise of a
/// later one; premises within a layer are incomparable.
inline ReliabilityTheory from_modal_categories(const ModalCategories& mc) {
    std::vector<Premise> premises;
    std::set<OrderPair> order;
    for (std::size_t i = 0; i < mc.layers.size(); ++i) {
        for (const auto& p : mc.layers[i]) premises.push_back(p);
        for (std::size_t j = i + 1; j < mc.layers.size(); ++j)
            for (const auto& hi : mc.layers[i])
                for (const auto& lo : mc.layers[j]) order.emplace(lo.id, hi.id);
    }
    return ReliabilityTheory(std::move(premises), std::move(order));
}

// ---------------------------------------------------------------------------
// ATMS
// ---------------------------------------------------------------------------

/// body -> head, or body -> !head for a denial.
struct Justification {
    std::vector<std::string> body;
    std::string head;
    bool denial = false;

    friend bool operator==(const Justification&, const Justification&) = default;
};

struct AtmsProblem {
    std::set<std::string> assumptions;
    std::set<std::string> nodes;
    std::vector<Justification> justifications;

    void check() const {
        for (const auto& a : assumptions)
            if (nodes.count(a)) throw UsageError("'" + a + "' is both an assumption and a node");
        for (const auto& j : justifications) {
            if (!nodes.count(j.head)) throw UsageError("justification head '" + j.head + "' is not a node");
            for (const auto& b : j.body)
                if (!nodes.count(b) && !assumptions.count(b))
                    throw UsageError("justification body atom '" + b + "' is undeclared");
        }
    }
};

/// Premise id of justification k (0-based).
inline std::string justification_id(std::size_t k) { return "__just_" + std::to_string(k + 1); }

/// Assumptions become atomic premises, justifications become implications, and
/// every justification is more reliable than every assumption.
inline ReliabilityTheory atms_encode(const AtmsProblem& p) {
    p.check();
    std::vector<Premise> premises;
    for (const auto& a : p.assumptions) premises.push_back({a, Formula::atom(a)});
    std::set<OrderPair> order;
    for (std::size_t k = 0; k < p.justifications.size(); ++k) {
        const auto& j = p.justifications[k];
        Formula head = Formula::atom(j.head);
        if (j.denial) head = Formula::negation(head);
        Formula f = head;
        if (!j.body.empty()) {
            Formula body = Formula::atom(j.body.front());
            for (std::size_t b = 1; b < j.body.size(); ++b) body = Formula::conjunction(body, Formula::atom(j.body[b]));
            f = Formula::implication(body, head);
        }
        std::string id = justification_id(k);
        premises.push_back({id, f});
        for (const auto& a : p.assumptions) order.emplace(a, id);
    }
    return ReliabilityTheory(std::move(premises), std::move(order));
}

namespace detail {

inline std::vector<std::set<std::string>> minimal_family(std::vector<std::set<std::string>> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<std::set<std::string>> out;
    for (const auto& s : sets) {
        bool has_smaller = std::any_of(sets.begin(), sets.end(), [&](const auto& q) {
            return q.size() < s.size() && std::includes(s.begin(), s.end(), q.begin(), q.end());
        });
        if (!has_smaller) out.push_back(s);
    }
    return out;
}

inline std::set<std::string> assumption_part(const ReliabilityTheory& t, const AtmsProblem& p, const PremiseSet& s) {
    std::set<std::string> out;
    for (const auto& id : t.ids(s))
        if (p.assumptions.count(id)) out.insert(id);
    return out;
}

inline TotalOrder first_extension(const ReliabilityTheory& t, const Limits& limits) {
    std::optional<TotalOrder> first;
    for_each_linear_extension(t, limits, [&](const TotalOrder& o) {
        first = o;
        return false;
    });
    return *first;
}

} // namespace detail

/// The label of `node`: assumption sets of the minimal supporting arguments for
/// the node, reduced to the inclusion-minimal ones.
///
/// Supporting arguments are the subset-minimal premise sets entailing the node;
/// `order` selects the linear extension they are derived under (the first one
/// when absent).
inline std::vector<std::set<std::string>> atms_labels(const AtmsProblem& p, const std::string& node,
                                                      const std::optional<TotalOrder>& order = std::nullopt,
                                                      const Limits& limits = {}) {
    if (!p.nodes.count(node)) throw UsageError("unknown node '" + node + "'");
    ReliabilityTheory t = atms_encode(p);
    require_mus_budget(t, limits);
    TotalOrder o = order ? *order : detail::first_extension(t, limits);
    if (!o.extends(t)) throw UsageError("order is not a linear extension of the encoded theory");

    std::vector<std::set<std::string>> envs;
    for (const auto& s : minimal_entailing_subsets(t.formulas(), t.all(), Formula::atom(node), limits))
        envs.push_back(detail::assumption_part(t, p, s));
    return detail::minimal_family(std::move(envs));
}

/// Minimal assumption projections of the undermining arguments (support plus
/// victim) derived under `order` (the first linear extension when absent).
inline std::vector<std::set<std::string>> atms_nogoods(const AtmsProblem& p,
                                                       const std::optional<TotalOrder>& order = std::nullopt,
                                                       const Limits& limits = {}) {
    ReliabilityTheory t = atms_encode(p);
    TotalOrder o = order ? *order : detail::first_extension(t, limits);
    if (!o.extends(t)) throw UsageError("order is not a linear extension of the encoded theory");

    std::vector<std::set<std::string>> envs;
    for (const auto& u : undermining_args_linear(t, o, limits)) {
        PremiseSet s = u.support;
        s.set(u.victim);
        envs.push_back(detail::assumption_part(t, p, s));
    }
    return detail::minimal_family(std::move(envs));
}

/// Reads "assume a." / "node n." / "just a, m -> n." / "deny a, b -> n." lines;
/// "#" starts a comment.
inline AtmsProblem parse_atms(std::string_view text) {
    AtmsProblem p;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;

    auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return std::string();
        auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };
    auto ident = [&](std::string s, std::size_t line) {
        s = trim(std::move(s));
        if (!is_identifier(s)) throw ParseError("expected identifier, got '" + s + "'", line, 1);
        return s;
    };

    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.back() != '.') throw ParseError("statement must end with '.'", line_no, line.size());
        line.pop_back();
        auto space = line.find_first_of(" \t");
        std::string keyword = line.substr(0, space);
        std::string rest = space == std::string::npos ? std::string() : line.substr(space + 1);

        if (keyword == "assume") {
            p.assumptions.insert(ident(rest, line_no));
        } else if (keyword == "node") {
            p.nodes.insert(ident(rest, line_no));
        } else if (keyword == "just" || keyword == "deny") {
            auto arrow = rest.find("->");
            if (arrow == std::string::npos) throw ParseError("expected '->'", line_no, 1);
            Justification j;
            j.denial = keyword == "deny";
            j.head = ident(rest.substr(arrow + 2), line_no);
            std::string body = trim(rest.substr(0, arrow));
            std::size_t start = 0;
            while (!body.empty()) {
                auto comma = body.find(',', start);
                j.body.push_back(ident(body.substr(start, comma - start), line_no));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            p.justifications.push_back(std::move(j));
        } else {
            throw ParseError("unknown statement '" + keyword + "'", line_no, 1);
        }
    }
    try {
        p.check();
    } catch (const UsageError& e) {
        throw ParseError(e.what(), line_no, 1);
    }
    return p;
}

} // namespace inconlog
