#pragma once

// Quasi-nefness: the dual polytope Q_D, small Q-Cartierizing refinements,
// nef tests by wall crossings, the q-nef vertex criterion, and quasi-nef
// thresholds.

#include "toridiv/divisor.hpp"

namespace toridiv {

// conv{u_rho / d_rho}. Requires every d_rho > 0 and a full-dimensional hull.
VPolyhedron qd_polytope(const Fan& f, const ToricDivisor& d);

struct WallCrossing {
    int cone_a = -1;            // cones of the (refined) fan
    int cone_b = -1;
    std::vector<int> wall_rays; // ray indices spanning the wall
    int test_ray = -1;          // ray of cone_b off the wall used for the value
    Rat value;                  // <m_a - m_b, u_test> for the rational data
    bool extracted = false;     // wall interior to a single original max cone
};

struct QCartierization {
    Fan fan_prime;
    ToricDivisor dbar;          // strict transform: same coefficients, same rays
    CartierStatus dbar_status;  // Cartier or QCartier by construction
    bool small = true;          // rays(fan_prime) == rays(fan)
    std::vector<WallCrossing> walls;
};

// Refines the fan by the face fan of Q_D and certifies: smallness, D-bar at
// least Q-Cartier, every extracted wall crossing strictly positive. When d is
// integral and D globally generated, additionally certifies that the vertices
// of P_D are exactly the per-cone data of D-bar and that every facet datum of
// Q_D lies in P_D. Violations raise InternalInconsistency.
QCartierization qcartierize(const Fan& f, const ToricDivisor& d);

// Wall crossings of d on its own fan (d must be Cartier or Q-Cartier there).
std::vector<WallCrossing> wall_crossings(const Fan& f, const ToricDivisor& d,
                                         const CartierStatus& status);

// Nef test for a Q-Cartier divisor: every wall crossing >= 0.
bool is_nef_qcartier(const Fan& f, const ToricDivisor& d);

struct QnefResult {
    bool yes = true;
    int witness_cone = -1;
    QVec witness_vertex; // local-polyhedron vertex outside P_D when yes == false
};

// Vertex criterion on a complete fan: every vertex of every local polyhedron
// {m : <m,u_rho> >= -d_rho, rho in sigma(1)} lies in P_D.
QnefResult is_qnef(const Fan& f, const ToricDivisor& d);

struct QnefThreshold {
    Rat value;
    struct Breakpoint {
        int cone;
        int ray;  // constraint ray outside the cone
        Rat t;    // critical parameter for this pair
    };
    std::vector<Breakpoint> table;
};

// Exact threshold inf{t : D + tA is q-nef} for ample A (Q-Cartier with all
// wall crossings strictly positive; DomainError otherwise).
QnefThreshold qnt(const Fan& f, const ToricDivisor& d, const ToricDivisor& a);

struct GgConjectureReport {
    struct Row {
        int m;
        bool gg;
        int witness_cone = -1;
        ZVec witness_generator;
    };
    std::vector<Row> rows;
    bool all_yes = true;
};

// Global generation of m(D + A) for m = 1..m_max; evidence, not proof.
GgConjectureReport check_gg_conjecture(const Fan& f, const ToricDivisor& d,
                                       const ToricDivisor& a, int m_max);

} // namespace toridiv
