#ifndef SCHUBITOPE_PATTERNS_HPP
#define SCHUBITOPE_PATTERNS_HPP

#include <optional>
#include <vector>

#include "schubitope/diagram.hpp"
#include "schubitope/permutation.hpp"

namespace schub {

struct PatternWitness {
    bool found = false;
    std::vector<int> positions;  // lexicographically smallest realization
};

// Subsequence search with prefix pruning; witness positions are 1-based.
PatternWitness contains_pattern(const Permutation& w, const Permutation& tau);

// Avoids 1423, 1432 and 13254.
bool avoids_lattice_free_patterns(const Permutation& w);

// No i < j with alpha_j - alpha_i >= 2.
bool composition_avoids_02(const Composition& alpha);

}  // namespace schub

#endif
