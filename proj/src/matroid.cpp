#include "schubitope/matroid.hpp"

#include <algorithm>

namespace schub {

bool gale_leq(Subset t, Subset s) {
    if (popcount(t) != popcount(s)) return false;
    const auto a = subset_elements(t);
    const auto b = subset_elements(s);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

namespace {

// Choose a_1 < a_2 < ... < a_k with a_i <= b_i, descending over the sorted
// elements b of the defining set.
void descend(const std::vector<int>& b, std::size_t idx, int min_next, Subset acc,
             std::vector<Subset>& out) {
    if (idx == b.size()) {
        out.push_back(acc);
        return;
    }
    for (int a = min_next; a <= b[idx]; ++a)
        descend(b, idx + 1, a + 1, with(acc, a), out);
}

}  // namespace

SchubertMatroid::SchubertMatroid(int n, Subset defining_set) : n_(n), set_(defining_set) {
    if (n < 1 || n > kMaxGroundSize) throw input_error("ground-set size out of range");
    if (set_ & ~((Subset{1} << n_) - 1)) throw input_error("defining set not inside [n]");
    descend(subset_elements(set_), 0, 1, 0, bases_);
    std::sort(bases_.begin(), bases_.end());
}

int SchubertMatroid::rank(Subset a) const {
    int best = 0;
    for (Subset b : bases_) best = std::max(best, popcount(a & b));
    return best;
}

std::vector<Subset> SchubertMatroid::spanning_sets() const {
    std::vector<Subset> out;
    const Subset full = (Subset{1} << n_) - 1;
    for (Subset a = 0; a <= full; ++a)
        if (rank(a) == basis_size()) out.push_back(a);
    return out;
}

std::vector<int> indicator_vector(Subset s, int n) {
    std::vector<int> v(n, 0);
    for (int i = 1; i <= n; ++i)
        if (contains(s, i)) v[i - 1] = 1;
    return v;
}

std::vector<std::vector<int>> SchubertMatroid::basis_vectors() const {
    std::vector<std::vector<int>> out;
    out.reserve(bases_.size());
    for (Subset b : bases_) out.push_back(indicator_vector(b, n_));
    return out;
}

std::vector<std::vector<int>> SchubertMatroid::spanning_vectors() const {
    std::vector<std::vector<int>> out;
    for (Subset s : spanning_sets()) out.push_back(indicator_vector(s, n_));
    return out;
}

}  // namespace schub
