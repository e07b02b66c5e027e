#pragma once

// Exact polyhedral engine: H- and V-representations with double description
// conversion, polar duals, rational simplex LP, lattice point enumeration and
// Hilbert bases of pointed cones.

#include <variant>
#include <vector>

#include "toridiv/linalg.hpp"

namespace toridiv {

// One closed halfspace {x : <normal, x> >= rhs}.
struct Halfspace {
    QVec normal;
    Rat rhs;
};

struct HPolyhedron {
    int dim = 0;
    std::vector<Halfspace> ineqs;
};

// conv(vertices) + cone(rays). Rays are primitive integer vectors. A
// polyhedron containing a line is represented with +/- ray pairs; the
// canonical form then keeps one (non-extreme) base point among the vertices.
struct VPolyhedron {
    int dim = 0;
    std::vector<QVec> vertices;
    std::vector<ZVec> rays;

    bool empty() const { return vertices.empty() && rays.empty(); }
};

bool operator==(const VPolyhedron& a, const VPolyhedron& b);

// ---------------------------------------------------------------------------
// linear programming (exact, Bland's rule)
// ---------------------------------------------------------------------------

struct LpOptimal {
    Rat value;
    QVec point;
    QVec dual; // per-constraint multipliers: dual >= 0, A^T dual = objective, b.dual = value
};
struct LpUnbounded {
    QVec direction; // feasible recession direction with <objective, direction> < 0
};
struct LpInfeasible {
    QVec farkas; // y >= 0, y^T A = 0, y.b > 0
};
using LpOutcome = std::variant<LpOptimal, LpUnbounded, LpInfeasible>;

// min <objective, x> over region. Deterministic; certificates are verified
// before returning.
LpOutcome lp_minimize(const QVec& objective, const HPolyhedron& region);

bool lp_is_feasible(const HPolyhedron& region);

// ---------------------------------------------------------------------------
// representation conversion
// ---------------------------------------------------------------------------

// H -> V. Empty set comes back as the empty VPolyhedron.
VPolyhedron dual_description(const HPolyhedron& p);

// V -> H, irredundant. Lower-dimensional inputs produce +/- inequality pairs
// for the affine hull; the empty polyhedron produces a canonical
// contradictory pair.
HPolyhedron dual_description(const VPolyhedron& p);

// Polar {u : <m, u> >= -1 for all m in p}. Requires p bounded, full-dimensional,
// with 0 interior; violations raise DomainError naming the offending direction.
VPolyhedron polar_dual(const VPolyhedron& p);

bool contains(const HPolyhedron& p, const QVec& x);

// Extreme rays of {y : M y >= 0} plus a basis of its lineality space.
struct ConeDescription {
    std::vector<ZVec> rays;  // primitive, lex sorted
    std::vector<ZVec> lines; // primitive basis of the lineality space
};
ConeDescription cone_extreme_rays(const ZMatrix& m, int dim);

// Facet inequalities and span equations of cone(generators).
struct ConeHRep {
    ZMatrix ineqs; // facet normals a: <a, x> >= 0
    ZMatrix eqs;   // span cutting: <e, x> = 0
};
ConeHRep cone_hrep_of_generators(const std::vector<ZVec>& generators, int dim);

bool cone_contains(const ConeHRep& h, const QVec& x);
bool cone_contains(const ConeHRep& h, const ZVec& x);

// ---------------------------------------------------------------------------
// lattice machinery
// ---------------------------------------------------------------------------

// All integer points of a bounded H-polyhedron, lex sorted. Unbounded input
// raises DomainError; the empty polyhedron yields the empty list.
std::vector<ZVec> lattice_points(const HPolyhedron& p);

// Minimal generating set of cone(generators) intersected with Z^dim.
// Requires the cone pointed and full-dimensional.
std::vector<ZVec> hilbert_basis(const std::vector<ZVec>& generators, int dim);

// Splits a pointed cone into simplicial subcones on the same generators.
// Input must be the extreme rays; returns index sets of size = cone dimension.
std::vector<std::vector<int>> triangulate_cone(const std::vector<ZVec>& extreme_rays, int dim);

// Membership of x in the semigroup generated by gens (all inside a pointed
// cone given by its facet normals, used as a positive grading).
bool semigroup_member(const ZVec& x, const std::vector<ZVec>& gens, const ConeHRep& cone);

} // namespace toridiv
