#pragma once

#include <cstddef>

namespace inconlog {

/// Enumeration caps shared by all brute-force procedures.
struct Limits {
    /// Largest atom universe handled by exhaustive valuation; larger universes
    /// fall back to the DPLL backend (consistency) or are refused (model sweeps).
    std::size_t max_atoms = 20;
    /// Largest number of linear extensions enumerated before giving up.
    std::size_t max_extensions = 100000;
    /// Largest premise count accepted by minimal-unsatisfiable-subset search.
    std::size_t mus_budget = 24;
    /// Largest argumentation framework searched for stable extensions.
    std::size_t max_arguments = 512;
};

} // namespace inconlog
