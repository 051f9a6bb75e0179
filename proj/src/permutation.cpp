#include "schubitope/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace schub {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    if (n == 0 || n > kMaxGroundSize)
        throw input_error("permutation length must be in 1.." + std::to_string(kMaxGroundSize));
    std::vector<bool> seen(n + 1, false);
    for (int v : word_) {
        if (v < 1 || v > n || seen[v])
            throw input_error("not a permutation of [" + std::to_string(n) + "]");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(word_.size());
    for (int i = 1; i <= size(); ++i) inv[word_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::times_s(int i) const {
    auto w = word_;
    std::swap(w[i - 1], w[i]);
    return Permutation(std::move(w));
}

int Permutation::inversions() const {
    int count = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (word_[i] > word_[j]) ++count;
    return count;
}

int Permutation::first_ascent() const {
    for (int i = 1; i < size(); ++i)
        if (word_[i - 1] < word_[i]) return i;
    return 0;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace schub
