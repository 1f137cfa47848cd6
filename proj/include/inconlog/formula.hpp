#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "inconlog/error.hpp"

namespace inconlog {

/// Propositional formula over negation and material implication.
///
/// Conjunction and disjunction exist only as constructors that rewrite into the
/// two primitive connectives: `a & b` becomes `!(a -> !b)` and `a | b` becomes
/// `!a -> b`. Values are immutable and share subtrees, so copies are cheap.
class Formula {
public:
    enum class Kind { atom, negation, implication };

    static Formula atom(std::string name) {
        if (name.empty()) throw UsageError("atom name must be nonempty");
        return Formula(std::make_shared<const Node>(Node{Kind::atom, std::move(name), {}, {}}));
    }
    static Formula negation(Formula child) {
        return Formula(std::make_shared<const Node>(Node{Kind::negation, {}, std::move(child.node_), {}}));
    }
    static Formula implication(Formula left, Formula right) {
        return Formula(std::make_shared<const Node>(
            Node{Kind::implication, {}, std::move(left.node_), std::move(right.node_)}));
    }
    static Formula conjunction(Formula a, Formula b) {
        return negation(implication(std::move(a), negation(std::move(b))));
    }
    static Formula disjunction(Formula a, Formula b) {
        return implication(negation(std::move(a)), std::move(b));
    }

    Kind kind() const noexcept { return node_->kind; }
    bool is_atom() const noexcept { return kind() == Kind::atom; }

    /// Atom name; empty for compound formulas.
    const std::string& name() const noexcept { return node_->name; }
    /// Operand of a negation.
    Formula child() const { return Formula(node_->left); }
    Formula left() const { return Formula(node_->left); }
    Formula right() const { return Formula(node_->right); }

    void collect_atoms(std::set<std::string>& out) const { collect(*node_, out); }
    std::set<std::string> atoms() const {
        std::set<std::string> out;
        collect_atoms(out);
        return out;
    }

    /// Prints in the input grammar with minimal parentheses; parses back to an equal formula.
    std::string to_string() const {
        std::string out;
        print(*node_, out);
        return out;
    }

    friend bool operator==(const Formula& a, const Formula& b) { return compare(*a.node_, *b.node_) == 0; }
    friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
        return compare(*a.node_, *b.node_) <=> 0;
    }

private:
    struct Node {
        Kind kind;
        std::string name;
        std::shared_ptr<const Node> left;
        std::shared_ptr<const Node> right;
    };

    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    static void collect(const Node& n, std::set<std::string>& out) {
        switch (n.kind) {
        case Kind::atom: out.insert(n.name); break;
        case Kind::negation: collect(*n.left, out); break;
        case Kind::implication:
            collect(*n.left, out);
            collect(*n.right, out);
            break;
        }
    }

    static int compare(const Node& a, const Node& b) {
        if (&a == &b) return 0;
        if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
        switch (a.kind) {
        case Kind::atom: return a.name.compare(b.name) < 0 ? -1 : (a.name == b.name ? 0 : 1);
        case Kind::negation: return compare(*a.left, *b.left);
        case Kind::implication:
            if (int c = compare(*a.left, *b.left); c != 0) return c;
            return compare(*a.right, *b.right);
        }
        return 0;
    }

    // !(l -> !r) is printed back as the conjunction it abbreviates.
    static bool is_conjunction(const Node& n) {
        return n.kind == Kind::negation && n.left->kind == Kind::implication && n.left->right->kind == Kind::negation;
    }

    // !l -> r is printed back as l | r.
    static bool is_disjunction(const Node& n) {
        return n.kind == Kind::implication && n.left->kind == Kind::negation;
    }

    // Binding strength: implication 0, disjunction 1, conjunction 2, atoms and negations 3.
    static int precedence(const Node& n) {
        if (n.kind == Kind::implication) return is_disjunction(n) ? 1 : 0;
        return is_conjunction(n) ? 2 : 3;
    }

    static void print(const Node& n, std::string& out, int min_precedence = 0) {
        bool wrap = precedence(n) < min_precedence;
        if (wrap) out += '(';
        if (is_conjunction(n)) {
            print(*n.left->left, out, 2);
            out += " & ";
            print(*n.left->right->left, out, 3);
        } else if (is_disjunction(n)) {
            print(*n.left->left, out, 1);
            out += " | ";
            print(*n.right, out, 2);
        } else if (n.kind == Kind::atom) {
            out += n.name;
        } else if (n.kind == Kind::negation) {
            out += '!';
            print(*n.left, out, 3);
        } else {
            print(*n.left, out, 1);
            out += " -> ";
            print(*n.right, out, 0);
        }
        if (wrap) out += ')';
    }

    std::shared_ptr<const Node> node_;
};

/// A valuation given by the set of atoms that are true; every other atom is false.
class Interpretation {
public:
    Interpretation() = default;
    explicit Interpretation(std::set<std::string> true_atoms) : true_atoms_(std::move(true_atoms)) {}
    Interpretation(std::initializer_list<std::string> true_atoms) : true_atoms_(true_atoms) {}

    bool holds(const std::string& atom) const { return true_atoms_.count(atom) != 0; }
    const std::set<std::string>& true_atoms() const noexcept { return true_atoms_; }

    /// "{a,b}" with atoms sorted.
    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (const auto& a : true_atoms_) {
            if (!first) out += ',';
            out += a;
            first = false;
        }
        return out + "}";
    }

    friend bool operator==(const Interpretation&, const Interpretation&) = default;
    friend auto operator<=>(const Interpretation&, const Interpretation&) = default;

private:
    std::set<std::string> true_atoms_;
};

inline bool evaluate(const Formula& f, const Interpretation& m) {
    switch (f.kind()) {
    case Formula::Kind::atom: return m.holds(f.name());
    case Formula::Kind::negation: return !evaluate(f.child(), m);
    case Formula::Kind::implication: return !evaluate(f.left(), m) || evaluate(f.right(), m);
    }
    return false;
}

namespace detail {

// Grammar, loosest first:
//   implication := disjunction ("->" implication)?
//   disjunction := conjunction ("|" conjunction)*
//   conjunction := unary ("&" unary)*
//   unary       := ("!" | "~") unary | identifier | "(" implication ")"
class FormulaParser {
public:
    FormulaParser(std::string_view text, std::size_t line, std::size_t column_offset)
        : text_(text), line_(line), column_offset_(column_offset) {}

    Formula parse() {
        Formula f = implication();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return f;
    }

private:
    Formula implication() {
        Formula lhs = disjunction();
        skip_space();
        if (text_.substr(pos_, 2) == "->") {
            pos_ += 2;
            return Formula::implication(std::move(lhs), implication());
        }
        return lhs;
    }

    Formula disjunction() {
        Formula lhs = conjunction();
        while (accept('|')) lhs = Formula::disjunction(std::move(lhs), conjunction());
        return lhs;
    }

    Formula conjunction() {
        Formula lhs = unary();
        while (accept('&')) lhs = Formula::conjunction(std::move(lhs), unary());
        return lhs;
    }

    Formula unary() {
        skip_space();
        if (pos_ == text_.size()) fail("unexpected end of formula");
        char c = text_[pos_];
        if (c == '!' || c == '~') {
            ++pos_;
            return Formula::negation(unary());
        }
        if (c == '(') {
            ++pos_;
            Formula inner = implication();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (is_ident_start(c)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
            return Formula::atom(std::string(text_.substr(start, pos_ - start)));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r' ||
                                       text_[pos_] == '\n'))
            ++pos_;
    }

    static bool is_ident_start(char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
    }
    static bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what, line_, column_offset_ + pos_ + 1);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t column_offset_;
};

} // namespace detail

/// Parses the textual formula grammar; `line`/`column_offset` only affect error positions.
inline Formula parse_formula(std::string_view text, std::size_t line = 1, std::size_t column_offset = 0) {
    return detail::FormulaParser(text, line, column_offset).parse();
}

inline bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    auto start = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
    if (!start(s.front())) return false;
    for (char c : s)
        if (!start(c) && !(c >= '0' && c <= '9')) return false;
    return true;
}

} // namespace inconlog
