#ifndef SCHUBITOPE_LATTICE_HPP
#define SCHUBITOPE_LATTICE_HPP

#include <optional>
#include <vector>

#include "schubitope/diagram.hpp"
#include "schubitope/matroid.hpp"
#include "schubitope/types.hpp"

namespace schub {

using Point = std::vector<int>;

// Canonically sorted, duplicate-free set of integer vectors of one dimension.
class LatticePointSet {
  public:
    LatticePointSet(int dim, std::vector<Point> points);

    int dim() const { return dim_; }
    const std::vector<Point>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool contains(const Point& p) const;

    bool operator==(const LatticePointSet& o) const {
        return dim_ == o.dim_ && points_ == o.points_;
    }

  private:
    int dim_;
    std::vector<Point> points_;
};

// All lattice points of t * S_D from the H-description: coordinate sum
// t * #D and subset sums bounded by t * theta_D(I).
LatticePointSet dilated_schubitope_points(const Diagram& d, int t);
LatticePointSet dilated_schubitope_points(const ThetaTable& theta, int t);

// Layered IDP sums: t-fold self-sum of each factor's 0/1 vertex set, then
// cross sums, deduplicating at every layer.
LatticePointSet dilated_minkowski_points(const std::vector<std::vector<Point>>& factors,
                                         int dim, int t);

// t-fold IDP self-sum of the spanning-set indicator vectors.
LatticePointSet spanning_polytope_points(const SchubertMatroid& m, int t);

// p must be a member of l; true iff p is not a convex combination of the rest.
bool is_vertex(const Point& p, const LatticePointSet& l);

// All lattice points in conv(S): bounding-box scan filtered by the exact LP.
LatticePointSet hull_lattice_points(const std::vector<Point>& support);

struct LatticeFreeVerdict {
    bool ok = true;
    std::optional<Point> witness;  // first non-vertex in canonical order
};

LatticeFreeVerdict lattice_free_check(const LatticePointSet& l);

// Subset-sum lower/upper bounds (y, z) extracted from a point set, plus the
// paramodularity checks that certify conv(l) as a generalized polymatroid.
struct GPCertificate {
    bool ok = false;
    bool y_supermodular = false;
    bool z_submodular = false;
    bool cross_inequality = false;
    bool region_matches = false;
    std::vector<long long> y, z;  // indexed by subset bitmask
};

GPCertificate gp_certificate(const LatticePointSet& l);

struct SupportChecks {
    bool interval_closed = false;
    bool degree_raising = false;
    bool unique_max = false;
    bool snp = false;
};

SupportChecks support_property_checks(const std::vector<Point>& support);

// Breadth-first closures of a composition: swaps t_{i,j} alone give the
// vertex set; adding the moves m_{i,j} = +e_i - e_j gives the lattice set.
struct KeyClosures {
    LatticePointSet vertices;
    LatticePointSet lattice_points;
};

KeyClosures key_closures(const Composition& alpha);

// Rank over Q of the differences p - p0; 0 for a single point.
int affine_dimension(const std::vector<Point>& points);

}  // namespace schub

#endif
