#ifndef SCHUBITOPE_PERMUTATION_HPP
#define SCHUBITOPE_PERMUTATION_HPP

#include <vector>

#include "schubitope/types.hpp"

namespace schub {

// One-line notation, values 1..n.
class Permutation {
  public:
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    static Permutation longest(int n);  // w0 = n (n-1) ... 1

    int size() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[i - 1]; }  // 1-based
    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const;
    // Swap w(i) and w(i+1), i.e. w * s_i.
    Permutation times_s(int i) const;

    int inversions() const;
    // Smallest i with w(i) < w(i+1), or 0 if w is the longest element.
    int first_ascent() const;

    bool operator==(const Permutation& o) const { return word_ == o.word_; }
    bool operator<(const Permutation& o) const { return word_ < o.word_; }

  private:
    std::vector<int> word_;
};

// All permutations of [n] in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace schub

#endif
