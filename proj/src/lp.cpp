#include "schubitope/lp.hpp"

#include <algorithm>

namespace schub {

bool lp_feasible(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    const int m = static_cast<int>(a.size());
    const int n = m > 0 ? static_cast<int>(a[0].size()) : 0;
    if (m == 0) return true;

    // Make every right-hand side nonnegative.
    for (int r = 0; r < m; ++r)
        if (b[r] < 0) {
            for (auto& v : a[r]) v = -v;
            b[r] = -b[r];
        }

    // Tableau columns: n structural variables, m artificials, then rhs.
    // Objective row: minimize the sum of artificials.
    const int cols = n + m + 1;
    std::vector<std::vector<Rat>> t(m + 1, std::vector<Rat>(cols, 0));
    std::vector<int> basis(m);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c) t[r][c] = a[r][c];
        t[r][n + r] = 1;
        t[r][cols - 1] = b[r];
        basis[r] = n + r;
    }
    // Reduced costs: z row = -sum of constraint rows (artificial costs 1).
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < cols; ++c) t[m][c] -= t[r][c];
    for (int r = 0; r < m; ++r) t[m][n + r] = 0;

    while (true) {
        // Bland: entering column = lowest index with negative reduced cost.
        int enter = -1;
        for (int c = 0; c < n + m; ++c)
            if (t[m][c] < 0) {
                enter = c;
                break;
            }
        if (enter < 0) break;

        int leave = -1;
        Rat best_ratio;
        for (int r = 0; r < m; ++r) {
            if (t[r][enter] <= 0) continue;
            Rat ratio = t[r][cols - 1] / t[r][enter];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave < 0) break;  // unbounded below cannot happen in phase 1

        const Rat pivot = t[leave][enter];
        for (int c = 0; c < cols; ++c) t[leave][c] /= pivot;
        for (int r = 0; r <= m; ++r) {
            if (r == leave || t[r][enter] == 0) continue;
            const Rat factor = t[r][enter];
            for (int c = 0; c < cols; ++c) t[r][c] -= factor * t[leave][c];
        }
        basis[leave] = enter;
    }

    // Feasible iff all artificials were driven to zero.
    return t[m][cols - 1] == 0;
}

bool in_convex_hull(const std::vector<int>& p, const std::vector<std::vector<int>>& points) {
    if (points.empty()) return false;
    const int n = static_cast<int>(p.size());
    const int k = static_cast<int>(points.size());
    // Cheap necessary conditions before the LP: componentwise bounds.
    for (int i = 0; i < n; ++i) {
        int lo = points[0][i], hi = points[0][i];
        for (const auto& q : points) {
            lo = std::min(lo, q[i]);
            hi = std::max(hi, q[i]);
        }
        if (p[i] < lo || p[i] > hi) return false;
    }
    std::vector<std::vector<Rat>> a(n + 1, std::vector<Rat>(k));
    std::vector<Rat> b(n + 1);
    for (int i = 0; i < n; ++i) {
        for (int c = 0; c < k; ++c) a[i][c] = points[c][i];
        b[i] = p[i];
    }
    for (int c = 0; c < k; ++c) a[n][c] = 1;
    b[n] = 1;
    return lp_feasible(std::move(a), std::move(b));
}

}  // namespace schub
