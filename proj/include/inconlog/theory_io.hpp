#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "inconlog/error.hpp"
#include "inconlog/formula.hpp"
#include "inconlog/theory.hpp"

namespace inconlog {

// Theory file format, one statement per line:
//   # comment
//   premise ID: FORMULA
//   order ID1 < ID2        (ID1 strictly less reliable than ID2)

inline ReliabilityTheory parse_theory(std::string_view text) {
    std::vector<Premise> premises;
    std::set<OrderPair> order;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;

    auto skip = [](const std::string& s, std::size_t pos) {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r')) ++pos;
        return pos;
    };
    auto read_id = [&](const std::string& s, std::size_t& pos) {
        pos = skip(s, pos);
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        std::string id = s.substr(start, pos - start);
        if (!is_identifier(id)) throw ParseError("expected premise id", line_no, start + 1);
        return id;
    };

    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::size_t pos = skip(raw, 0);
        if (pos == raw.size()) continue;

        if (raw.compare(pos, 8, "premise ") == 0 || raw.compare(pos, 8, "premise\t") == 0) {
            pos += 8;
            std::string id = read_id(raw, pos);
            pos = skip(raw, pos);
            if (pos == raw.size() || raw[pos] != ':') throw ParseError("expected ':' after premise id", line_no, pos + 1);
            ++pos;
            premises.push_back({id, parse_formula(std::string_view(raw).substr(pos), line_no, pos)});
        } else if (raw.compare(pos, 6, "order ") == 0 || raw.compare(pos, 6, "order\t") == 0) {
            pos += 6;
            std::string lo = read_id(raw, pos);
            pos = skip(raw, pos);
            if (pos == raw.size() || raw[pos] != '<') throw ParseError("expected '<'", line_no, pos + 1);
            ++pos;
            std::string hi = read_id(raw, pos);
            pos = skip(raw, pos);
            if (pos != raw.size()) throw ParseError("trailing text after order statement", line_no, pos + 1);
            order.emplace(std::move(lo), std::move(hi));
        } else {
            throw ParseError("expected 'premise' or 'order'", line_no, pos + 1);
        }
    }
    return ReliabilityTheory(std::move(premises), std::move(order));
}

inline ReliabilityTheory load_theory(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_theory(buf.str());
}

/// Premises in declaration order, then the generating order pairs sorted.
inline std::string print_theory(const ReliabilityTheory& t) {
    std::string out;
    for (const auto& p : t.premises()) out += "premise " + p.id + ": " + p.formula.to_string() + "\n";
    for (const auto& [lo, hi] : t.order()) out += "order " + lo + " < " + hi + "\n";
    return out;
}

} // namespace inconlog
