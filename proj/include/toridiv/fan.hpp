#pragma once

// Rational polyhedral fans: validity, completeness, point location, common
// refinement with face fans of polytopes, smallness of refinements.

#include <string>
#include <vector>

#include "toridiv/polyhedron.hpp"

namespace toridiv {

struct Fan {
    int dim = 0;
    std::vector<ZVec> rays;                  // primitive, pairwise distinct
    std::vector<std::vector<int>> max_cones; // sorted ray-index sets
};

struct FanCheck {
    bool valid = true;
    std::string reason;
};

// Checks all structural invariants: primitive distinct rays spanning the
// ambient space, strongly convex cones generated by their extreme rays,
// pairwise intersections that are faces of both, every ray used.
FanCheck validate_fan(const Fan& f);

// Throws DomainError with the failure reason when invalid.
void require_valid(const Fan& f);

// Facet description of max cone ci (homogeneous: <a,x> >= 0 rows, span
// equations for lower-dimensional cones).
ConeHRep cone_hrep(const Fan& f, int ci);

// Generators of max cone ci as vectors.
std::vector<ZVec> cone_generators(const Fan& f, int ci);

// True iff the union of cones is all of N_R: all max cones full-dimensional,
// every facet shared by exactly two max cones, facet graph connected.
bool is_complete(const Fan& f);

// All max cones containing u.
std::vector<int> locate(const Fan& f, const QVec& u);
std::vector<int> locate(const Fan& f, const ZVec& u);

// A wall is a shared facet of exactly two max cones.
struct Wall {
    int cone_a = -1;
    int cone_b = -1;
    std::vector<int> rays; // fan ray indices spanning the wall
};
std::vector<Wall> fan_walls(const Fan& f);

// Common refinement of f with the face fan of q (bounded, full-dimensional,
// 0 interior). Ray order of f is preserved; genuinely new rays are appended.
Fan refine_by_polytope(const Fan& f, const VPolyhedron& q);

// Requires f2 to refine f (UsageError otherwise); true iff no ray was added.
bool is_refinement_small(const Fan& f, const Fan& f2);

// Index of the max cone of `coarse` containing max cone ci of `fine`, -1 if none.
int containing_cone(const Fan& coarse, const Fan& fine, int ci);

} // namespace toridiv
