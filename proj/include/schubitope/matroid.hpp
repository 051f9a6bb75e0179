#ifndef SCHUBITOPE_MATROID_HPP
#define SCHUBITOPE_MATROID_HPP

#include <vector>

#include "schubitope/types.hpp"

namespace schub {

// Componentwise comparison of the sorted elements; false unless |t| = |s|.
bool gale_leq(Subset t, Subset s);

// Schubert matroid SM_n(S): ground set [n], bases = Gale down-set of S.
// The basis list is enumerated once at construction and frozen.
class SchubertMatroid {
  public:
    SchubertMatroid(int n, Subset defining_set);

    int n() const { return n_; }
    Subset defining_set() const { return set_; }
    int basis_size() const { return popcount(set_); }

    const std::vector<Subset>& bases() const { return bases_; }
    int rank(Subset a) const;
    std::vector<Subset> spanning_sets() const;

    std::vector<std::vector<int>> basis_vectors() const;
    std::vector<std::vector<int>> spanning_vectors() const;

  private:
    int n_;
    Subset set_;
    std::vector<Subset> bases_;
};

std::vector<int> indicator_vector(Subset s, int n);

}  // namespace schub

#endif
