#include "schubitope/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "schubitope/lp.hpp"

namespace schub {

LatticePointSet::LatticePointSet(int dim, std::vector<Point> points)
    : dim_(dim), points_(std::move(points)) {
    for (const auto& p : points_)
        if (static_cast<int>(p.size()) != dim_)
            throw input_error("lattice point dimension mismatch");
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool LatticePointSet::contains(const Point& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

namespace {

void enumerate_schubitope(const ThetaTable& theta, int t, int coord, Subset prefix_mask,
                          int prefix_sum, Point& current, std::vector<Point>& out) {
    const int n = theta.n();
    const int total = t * theta.box_count();
    if (coord == n) {
        if (prefix_sum != total) return;
        // Prefix pruning is tight for prefix subsets only; confirm the full
        // H-description before accepting.
        const Subset full = (Subset{1} << n) - 1;
        for (Subset rows = 1; rows <= full; ++rows) {
            int sum = 0;
            for (int i = 1; i <= n; ++i)
                if (contains(rows, i)) sum += current[i - 1];
            if (sum > t * theta.theta(rows)) return;
        }
        out.push_back(current);
        return;
    }
    const Subset here = with(prefix_mask, coord + 1);
    const Subset rest = ((Subset{1} << n) - 1) & ~here;
    const int cap_prefix = t * theta.theta(here);
    // The suffix can contribute at most t * theta(rest), so the prefix sum
    // must already reach total minus that.
    const int min_prefix = total - t * theta.theta(rest);
    const int cap_i = t * theta.theta(Subset{1} << coord);
    for (int v = 0; v <= cap_i; ++v) {
        const int s = prefix_sum + v;
        if (s > cap_prefix || s > total) break;
        if (s < min_prefix) continue;
        current[coord] = v;
        enumerate_schubitope(theta, t, coord + 1, here, s, current, out);
    }
    current[coord] = 0;
}

}  // namespace

LatticePointSet dilated_schubitope_points(const ThetaTable& theta, int t) {
    if (t < 0) throw input_error("dilation factor must be nonnegative");
    const int n = theta.n();
    if (t == 0 || theta.box_count() == 0)
        return LatticePointSet(n, {Point(n, 0)});
    std::vector<Point> out;
    Point current(n, 0);
    enumerate_schubitope(theta, t, 0, 0, 0, current, out);
    return LatticePointSet(n, std::move(out));
}

LatticePointSet dilated_schubitope_points(const Diagram& d, int t) {
    return dilated_schubitope_points(ThetaTable(d), t);
}

namespace {

std::set<Point> pairwise_sums(const std::set<Point>& a, const std::set<Point>& b) {
    std::set<Point> out;
    for (const auto& u : a)
        for (const auto& v : b) {
            Point s(u.size());
            for (std::size_t k = 0; k < u.size(); ++k) s[k] = u[k] + v[k];
            out.insert(std::move(s));
        }
    return out;
}

std::set<Point> self_sum(const std::vector<Point>& vertices, int dim, int t) {
    std::set<Point> layer{Point(dim, 0)};
    if (t == 0) return layer;
    std::set<Point> verts(vertices.begin(), vertices.end());
    layer = verts;
    for (int s = 1; s < t; ++s) layer = pairwise_sums(layer, verts);
    return layer;
}

}  // namespace

LatticePointSet dilated_minkowski_points(const std::vector<std::vector<Point>>& factors,
                                         int dim, int t) {
    if (t < 0) throw input_error("dilation factor must be nonnegative");
    std::set<Point> acc{Point(dim, 0)};
    for (const auto& factor : factors) {
        if (factor.empty()) throw input_error("empty Minkowski factor");
        acc = pairwise_sums(acc, self_sum(factor, dim, t));
    }
    return LatticePointSet(dim, {acc.begin(), acc.end()});
}

LatticePointSet spanning_polytope_points(const SchubertMatroid& m, int t) {
    const auto layer = self_sum(m.spanning_vectors(), m.n(), t);
    return LatticePointSet(m.n(), {layer.begin(), layer.end()});
}

bool is_vertex(const Point& p, const LatticePointSet& l) {
    if (!l.contains(p)) throw input_error("vertex query point not in the set");
    std::vector<Point> rest;
    rest.reserve(l.size() - 1);
    for (const auto& q : l.points())
        if (q != p) rest.push_back(q);
    if (rest.empty()) return true;
    return !in_convex_hull(p, rest);
}

namespace {

// Valid subset-sum bounds of conv(points); a cheap outer filter ahead of the
// LP membership test.
struct SubsetSumBounds {
    int n;
    std::vector<long long> lo, hi;  // indexed by bitmask

    explicit SubsetSumBounds(const std::vector<Point>& points) {
        n = static_cast<int>(points[0].size());
        const std::size_t count = std::size_t{1} << n;
        lo.assign(count, 0);
        hi.assign(count, 0);
        for (Subset s = 1; s < count; ++s) {
            bool first = true;
            for (const auto& p : points) {
                long long sum = 0;
                for (int i = 1; i <= n; ++i)
                    if (contains(s, i)) sum += p[i - 1];
                if (first || sum < lo[s]) lo[s] = sum;
                if (first || sum > hi[s]) hi[s] = sum;
                first = false;
            }
        }
    }

    bool admits(const Point& p) const {
        const std::size_t count = std::size_t{1} << n;
        for (Subset s = 1; s < count; ++s) {
            long long sum = 0;
            for (int i = 1; i <= n; ++i)
                if (contains(s, i)) sum += p[i - 1];
            if (sum < lo[s] || sum > hi[s]) return false;
        }
        return true;
    }
};

void scan_box(const Point& lo, const Point& hi, int coord, Point& current,
              const std::function<void(const Point&)>& visit) {
    if (coord == static_cast<int>(lo.size())) {
        visit(current);
        return;
    }
    for (int v = lo[coord]; v <= hi[coord]; ++v) {
        current[coord] = v;
        scan_box(lo, hi, coord + 1, current, visit);
    }
}

}  // namespace

LatticePointSet hull_lattice_points(const std::vector<Point>& support) {
    if (support.empty()) throw input_error("empty support");
    const int n = static_cast<int>(support[0].size());
    Point lo = support[0], hi = support[0];
    for (const auto& p : support)
        for (int i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], p[i]);
            hi[i] = std::max(hi[i], p[i]);
        }
    const SubsetSumBounds bounds(support);
    std::vector<Point> inside;
    Point current(n, 0);
    scan_box(lo, hi, 0, current, [&](const Point& p) {
        if (!bounds.admits(p)) return;
        if (in_convex_hull(p, support)) inside.push_back(p);
    });
    return LatticePointSet(n, std::move(inside));
}

LatticeFreeVerdict lattice_free_check(const LatticePointSet& l) {
    for (const auto& p : l.points())
        if (!is_vertex(p, l)) return {false, p};
    return {};
}

GPCertificate gp_certificate(const LatticePointSet& l) {
    if (l.size() == 0) throw input_error("empty point set");
    const int n = l.dim();
    const std::size_t count = std::size_t{1} << n;
    GPCertificate cert;
    cert.y.assign(count, 0);
    cert.z.assign(count, 0);
    for (Subset s = 1; s < count; ++s) {
        bool first = true;
        for (const auto& p : l.points()) {
            long long sum = 0;
            for (int i = 1; i <= n; ++i)
                if (contains(s, i)) sum += p[i - 1];
            if (first || sum < cert.y[s]) cert.y[s] = sum;
            if (first || sum > cert.z[s]) cert.z[s] = sum;
            first = false;
        }
    }

    cert.y_supermodular = cert.z_submodular = cert.cross_inequality = true;
    for (Subset a = 0; a < count; ++a)
        for (Subset b = 0; b < count; ++b) {
            if (cert.y[a] + cert.y[b] > cert.y[a | b] + cert.y[a & b])
                cert.y_supermodular = false;
            if (cert.z[a] + cert.z[b] < cert.z[a | b] + cert.z[a & b])
                cert.z_submodular = false;
            if (cert.z[a] - cert.y[b] < cert.z[a & ~b] - cert.y[b & ~a])
                cert.cross_inequality = false;
        }

    // Re-enumerate the integer points of the (y, z) region and compare.
    Point lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        lo[i] = static_cast<int>(cert.y[Subset{1} << i]);
        hi[i] = static_cast<int>(cert.z[Subset{1} << i]);
    }
    std::vector<Point> region;
    Point current(n, 0);
    scan_box(lo, hi, 0, current, [&](const Point& p) {
        for (Subset s = 1; s < count; ++s) {
            long long sum = 0;
            for (int i = 1; i <= n; ++i)
                if (contains(s, i)) sum += p[i - 1];
            if (sum < cert.y[s] || sum > cert.z[s]) return;
        }
        region.push_back(p);
    });
    cert.region_matches = LatticePointSet(n, std::move(region)) == l;

    cert.ok = cert.y_supermodular && cert.z_submodular && cert.cross_inequality &&
              cert.region_matches;
    return cert;
}

SupportChecks support_property_checks(const std::vector<Point>& support) {
    if (support.empty()) throw input_error("empty support");
    const int n = static_cast<int>(support[0].size());
    LatticePointSet s(n, support);
    SupportChecks checks;

    // interval_closed: every integer gamma between two members is a member.
    checks.interval_closed = true;
    for (const auto& a : s.points()) {
        for (const auto& b : s.points()) {
            bool leq = true;
            for (int i = 0; i < n && leq; ++i) leq = a[i] <= b[i];
            if (!leq) continue;
            Point current(n, 0);
            bool ok = true;
            scan_box(a, b, 0, current, [&](const Point& g) {
                if (!s.contains(g)) ok = false;
            });
            if (!ok) {
                checks.interval_closed = false;
                break;
            }
        }
        if (!checks.interval_closed) break;
    }

    int max_total = 0;
    for (const auto& p : s.points())
        max_total = std::max(max_total, std::accumulate(p.begin(), p.end(), 0));

    checks.degree_raising = true;
    for (const auto& a : s.points()) {
        if (std::accumulate(a.begin(), a.end(), 0) >= max_total) continue;
        bool found = false;
        for (int i = 0; i < n && !found; ++i) {
            Point b = a;
            ++b[i];
            found = s.contains(b);
        }
        if (!found) {
            checks.degree_raising = false;
            break;
        }
    }

    int maximal = 0;
    for (const auto& a : s.points()) {
        bool is_max = true;
        for (const auto& b : s.points()) {
            if (a == b) continue;
            bool leq = true;
            for (int i = 0; i < n && leq; ++i) leq = a[i] <= b[i];
            if (leq) {
                is_max = false;
                break;
            }
        }
        if (is_max) ++maximal;
    }
    checks.unique_max = maximal == 1;

    checks.snp = hull_lattice_points(support) == s;
    return checks;
}

KeyClosures key_closures(const Composition& alpha) {
    const int n = static_cast<int>(alpha.size());
    if (n == 0) throw input_error("empty composition");

    const auto close = [n](const Point& start, bool with_m_moves) {
        std::set<Point> seen{start};
        std::vector<Point> queue{start};
        while (!queue.empty()) {
            const Point b = queue.back();
            queue.pop_back();
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    if (b[i] < b[j]) {
                        Point next = b;
                        std::swap(next[i], next[j]);
                        if (seen.insert(next).second) queue.push_back(next);
                    }
                    if (with_m_moves && b[i] <= b[j] - 2) {
                        Point next = b;
                        ++next[i];
                        --next[j];
                        if (seen.insert(next).second) queue.push_back(next);
                    }
                }
        }
        return std::vector<Point>(seen.begin(), seen.end());
    };

    Point start(alpha.begin(), alpha.end());
    return {LatticePointSet(n, close(start, false)), LatticePointSet(n, close(start, true))};
}

int affine_dimension(const std::vector<Point>& points) {
    if (points.size() <= 1) return 0;
    const int n = static_cast<int>(points[0].size());
    std::vector<std::vector<Rat>> rows;
    for (std::size_t k = 1; k < points.size(); ++k) {
        std::vector<Rat> row(n);
        for (int i = 0; i < n; ++i) row[i] = points[k][i] - points[0][i];
        rows.push_back(std::move(row));
    }
    // Exact Gaussian elimination rank.
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r][col] == 0) continue;
            const Rat factor = rows[r][col] / rows[rank][col];
            for (int c = col; c < n; ++c) rows[r][c] -= factor * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace schub
