#pragma once

#include <cstddef>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace inconlog {

/// Subset of a theory's premises, indexed by declaration position.
using PremiseSet = boost::dynamic_bitset<>;

inline PremiseSet empty_set(std::size_t n) { return PremiseSet(n); }

inline PremiseSet full_set(std::size_t n) {
    PremiseSet s(n);
    s.set();
    return s;
}

inline PremiseSet singleton(std::size_t n, std::size_t i) {
    PremiseSet s(n);
    s.set(i);
    return s;
}

inline std::vector<std::size_t> members(const PremiseSet& s) {
    std::vector<std::size_t> out;
    out.reserve(s.count());
    for (auto i = s.find_first(); i != PremiseSet::npos; i = s.find_next(i)) out.push_back(i);
    return out;
}

/// Orders by cardinality, then by ascending member indices. Used wherever set
/// families are returned, so results are deterministic.
struct BySizeThenMembers {
    bool operator()(const PremiseSet& a, const PremiseSet& b) const {
        if (a.count() != b.count()) return a.count() < b.count();
        return members(a) < members(b);
    }
};

} // namespace inconlog
