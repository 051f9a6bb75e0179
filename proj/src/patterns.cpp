#include "schubitope/patterns.hpp"

namespace schub {

namespace {

// Extend a partial realization pos[0..depth) of tau in w. Positions are
// tried in increasing order, so the first complete realization found is the
// lexicographically smallest one.
bool search(const Permutation& w, const Permutation& tau, std::vector<int>& pos, int depth) {
    const int k = tau.size();
    if (depth == k) return true;
    const int start = depth == 0 ? 1 : pos[depth - 1] + 1;
    for (int i = start; i <= w.size() - (k - depth - 1); ++i) {
        bool ok = true;
        // The new value must compare against each chosen value the way
        // tau(depth+1) compares against tau(1..depth).
        for (int d = 0; d < depth && ok; ++d)
            ok = (w(i) < w(pos[d])) == (tau(depth + 1) < tau(d + 1));
        if (!ok) continue;
        pos[depth] = i;
        if (search(w, tau, pos, depth + 1)) return true;
    }
    return false;
}

}  // namespace

PatternWitness contains_pattern(const Permutation& w, const Permutation& tau) {
    if (tau.size() > w.size()) return {};
    std::vector<int> pos(tau.size());
    if (!search(w, tau, pos, 0)) return {};
    return {true, pos};
}

bool avoids_lattice_free_patterns(const Permutation& w) {
    static const std::vector<std::vector<int>> patterns = {
        {1, 4, 2, 3}, {1, 4, 3, 2}, {1, 3, 2, 5, 4}};
    for (const auto& p : patterns)
        if (contains_pattern(w, Permutation(p)).found) return false;
    return true;
}

bool composition_avoids_02(const Composition& alpha) {
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (std::size_t j = i + 1; j < alpha.size(); ++j)
            if (alpha[j] - alpha[i] >= 2) return false;
    return true;
}

}  // namespace schub
