#ifndef SCHUBITOPE_DIAGRAM_HPP
#define SCHUBITOPE_DIAGRAM_HPP

#include <optional>
#include <utility>
#include <vector>

#include "schubitope/permutation.hpp"
#include "schubitope/types.hpp"

namespace schub {

using Composition = std::vector<int>;  // nonnegative parts

// Ordered list of n column subsets of [n], read as box positions in an
// n x n grid. Column order is significant.
class Diagram {
  public:
    Diagram(int n, std::vector<Subset> columns);

    int n() const { return n_; }
    const std::vector<Subset>& columns() const { return cols_; }
    Subset column(int j) const { return cols_[j - 1]; }  // 1-based

    int box_count() const;
    bool operator==(const Diagram& o) const { return n_ == o.n_ && cols_ == o.cols_; }
    bool operator<(const Diagram& o) const;

  private:
    int n_;
    std::vector<Subset> cols_;
};

Diagram rothe_diagram(const Permutation& w);
Diagram skyline_diagram(const Composition& alpha);

// Row range [lo, hi]; empty when lo == 0.
struct MovableInterval {
    int lo = 0;
    int hi = 0;

    bool empty() const { return lo == 0; }
    int length() const { return empty() ? 0 : hi - lo + 1; }
    Subset as_subset() const;
    bool operator==(const MovableInterval& o) const { return lo == o.lo && hi == o.hi; }
};

// Rows from the topmost boxless position of the column down to its lowest
// box; empty for boxless columns and for full prefixes {1..k}.
MovableInterval movable_interval(const Diagram& d, int j);
std::vector<MovableInterval> movable_intervals(const Diagram& d);

enum class CriterionMode { AtMostOne, Disjoint };

struct CriterionVerdict {
    bool ok = true;
    // Lexicographically smallest violating column pair when !ok.
    std::pair<int, int> witness{0, 0};
};

CriterionVerdict criterion_check(const Diagram& d, CriterionMode mode);

// For every corner (i, w(i)): at most one column strictly right of w(i) may
// hold a box of D(w) strictly below row i.
bool hook_condition(const Permutation& w);

// Entry i counts columns j with max(D_j) >= i.
std::vector<int> upper_closure_weight(const Diagram& d);

// Keep only the rows/columns listed (1-based, strictly increasing), reindexed.
Diagram restrict_diagram(const Diagram& d, const std::vector<int>& rows,
                         const std::vector<int>& cols);

// theta values of a fixed diagram over all 2^n row subsets, keyed by bitmask.
class ThetaTable {
  public:
    explicit ThetaTable(const Diagram& d);

    int theta(Subset rows) const { return values_[rows]; }
    int n() const { return n_; }
    int box_count() const { return boxes_; }

  private:
    int n_;
    int boxes_;
    std::vector<int> values_;
};

// theta of a single column: matched parenthesis pairs plus stars in word_I.
int theta_column(Subset column, Subset rows, int n);
// The recorded word itself; useful for diagnostics and the CLI.
std::string theta_word(Subset column, Subset rows, int n);

}  // namespace schub

#endif
