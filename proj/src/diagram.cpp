#include "schubitope/diagram.hpp"

#include <algorithm>

namespace schub {

Diagram::Diagram(int n, std::vector<Subset> columns) : n_(n), cols_(std::move(columns)) {
    if (n < 1 || n > kMaxGroundSize)
        throw input_error("ambient size must be in 1.." + std::to_string(kMaxGroundSize));
    if (static_cast<int>(cols_.size()) > n_)
        throw input_error("diagram has more columns than ambient size");
    cols_.resize(n_, 0);
    const Subset full = (Subset{1} << n_) - 1;
    for (Subset c : cols_)
        if (c & ~full) throw input_error("column row index exceeds ambient size");
}

int Diagram::box_count() const {
    int total = 0;
    for (Subset c : cols_) total += popcount(c);
    return total;
}

bool Diagram::operator<(const Diagram& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return cols_ < o.cols_;
}

Diagram rothe_diagram(const Permutation& w) {
    const int n = w.size();
    const Permutation winv = w.inverse();
    std::vector<Subset> cols(n, 0);
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
            if (w(i) > j && winv(j) > i) cols[j - 1] = with(cols[j - 1], i);
    return Diagram(n, std::move(cols));
}

Diagram skyline_diagram(const Composition& alpha) {
    const int n = static_cast<int>(alpha.size());
    if (n == 0) throw input_error("empty composition");
    std::vector<Subset> cols(n, 0);
    for (int i = 1; i <= n; ++i) {
        if (alpha[i - 1] < 0) throw input_error("composition parts must be nonnegative");
        if (alpha[i - 1] > n)
            throw input_error("composition part exceeds ambient size " + std::to_string(n));
        for (int j = 1; j <= alpha[i - 1]; ++j) cols[j - 1] = with(cols[j - 1], i);
    }
    return Diagram(n, std::move(cols));
}

Subset MovableInterval::as_subset() const {
    Subset s = 0;
    for (int r = lo; !empty() && r <= hi; ++r) s = with(s, r);
    return s;
}

MovableInterval movable_interval(const Diagram& d, int j) {
    if (j < 1 || j > d.n()) throw input_error("column index out of range");
    const Subset col = d.column(j);
    if (col == 0) return {};
    int first_empty = 1;
    while (contains(col, first_empty)) ++first_empty;
    int last_box = d.n();
    while (!contains(col, last_box)) --last_box;
    if (first_empty > last_box) return {};  // full prefix {1..k}
    return {first_empty, last_box};
}

std::vector<MovableInterval> movable_intervals(const Diagram& d) {
    std::vector<MovableInterval> out;
    out.reserve(d.n());
    for (int j = 1; j <= d.n(); ++j) out.push_back(movable_interval(d, j));
    return out;
}

CriterionVerdict criterion_check(const Diagram& d, CriterionMode mode) {
    const auto intervals = movable_intervals(d);
    const int limit = mode == CriterionMode::AtMostOne ? 1 : 0;
    for (int i = 1; i <= d.n(); ++i)
        for (int j = i + 1; j <= d.n(); ++j) {
            const Subset inter = intervals[i - 1].as_subset() & intervals[j - 1].as_subset();
            if (popcount(inter) > limit) return {false, {i, j}};
        }
    return {};
}

bool hook_condition(const Permutation& w) {
    const Diagram d = rothe_diagram(w);
    for (int i = 1; i <= w.size(); ++i) {
        int columns_with_box = 0;
        for (int j = w(i) + 1; j <= w.size(); ++j) {
            const Subset below = d.column(j) & ~((Subset{1} << i) - 1);  // rows > i
            if (below) ++columns_with_box;
        }
        if (columns_with_box > 1) return false;
    }
    return true;
}

std::vector<int> upper_closure_weight(const Diagram& d) {
    std::vector<int> wt(d.n(), 0);
    for (Subset col : d.columns()) {
        if (col == 0) continue;
        int max_row = kMaxGroundSize;
        while (!contains(col, max_row)) --max_row;
        for (int i = 1; i <= max_row; ++i) ++wt[i - 1];
    }
    return wt;
}

Diagram restrict_diagram(const Diagram& d, const std::vector<int>& rows,
                         const std::vector<int>& cols) {
    const int m = static_cast<int>(rows.size());
    std::vector<Subset> out(cols.size(), 0);
    for (int jj = 0; jj < static_cast<int>(cols.size()); ++jj) {
        const Subset col = d.column(cols[jj]);
        for (int ii = 0; ii < m; ++ii)
            if (contains(col, rows[ii])) out[jj] = with(out[jj], ii + 1);
    }
    return Diagram(m, std::move(out));
}

int theta_column(Subset column, Subset rows, int n) {
    int open = 0, matched = 0, stars = 0;
    for (int i = 1; i <= n; ++i) {
        const bool box = contains(column, i);
        const bool in_set = contains(rows, i);
        if (!box && in_set) {
            ++open;
        } else if (box && !in_set) {
            if (open > 0) {
                --open;
                ++matched;
            }
        } else if (box && in_set) {
            ++stars;
        }
    }
    return matched + stars;
}

std::string theta_word(Subset column, Subset rows, int n) {
    std::string word;
    for (int i = 1; i <= n; ++i) {
        const bool box = contains(column, i);
        const bool in_set = contains(rows, i);
        if (!box && in_set)
            word += '(';
        else if (box && !in_set)
            word += ')';
        else if (box && in_set)
            word += '*';
    }
    return word;
}

ThetaTable::ThetaTable(const Diagram& d) : n_(d.n()), boxes_(d.box_count()) {
    values_.assign(std::size_t{1} << n_, 0);
    for (Subset rows = 0; rows < values_.size(); ++rows) {
        int total = 0;
        for (Subset col : d.columns()) total += theta_column(col, rows, n_);
        values_[rows] = total;
    }
}

}  // namespace schub
