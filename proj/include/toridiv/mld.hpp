#pragma once

// de Fernex-Hacon pullbacks of Weil divisors as exact linear programs,
// relative canonical divisors K+/K-, boundary-infimum valuations, bounded
// MLD searches, and the accumulating family of terminal threefold cones.

#include "toridiv/qnef.hpp"

namespace toridiv {

struct PullbackEntry {
    ZVec query;
    Rat coefficient; // LP value min{<m,u> : <m,u_rho> >= d_rho on sigma(1)}
    QVec optimizer;
    int cone = -1;
};

struct PullbackResult {
    std::vector<PullbackEntry> entries;
};

// Queries must be primitive and inside the fan support (DomainError otherwise).
// When several cones contain a query, all are checked for agreement.
PullbackResult dfh_pullback(const Fan& f, const ToricDivisor& d,
                            const std::vector<ZVec>& queries);

// (1/k) min{<m,u> : m a minimal module generator of -kD on the containing
// cone}: the finite-level valuation whose limit the pullback LP computes.
Rat finite_level_valuation(const Fan& f, const ToricDivisor& d, const ZVec& u, int k);

struct RelativeCanonicalValue {
    ZVec u;
    Rat val_minus; // coefficient of K-_{Y/X} along u
    Rat val_plus;  // coefficient of K+_{Y/X} along u
    bool exceptional = true; // false when u is one of the fan rays
};

RelativeCanonicalValue relative_canonical(const Fan& f, const ZVec& u);

struct BoundaryLp {
    bool bounded = true;
    Rat value;
    QVec optimizer;
};

// inf <objective, m> over {m : 0 <= <m,u_i> - 1 <= 1 for every ray} on a
// single-max-cone affine fan.
BoundaryLp boundary_inf_valuation(const Fan& f, const QVec& objective);

enum class MldKind { Plus, Minus };

struct MldReport {
    int bound = 0;
    MldKind which = MldKind::Plus;
    struct Row {
        ZVec u;
        Rat val_plus;
        Rat val_minus;
        bool exceptional;
    };
    std::vector<Row> rows; // lex order in u
    // minima over the search box only; not certified global infima
    bool any = false;
    Rat min_all;
    ZVec argmin_all;
    bool any_exceptional = false;
    Rat min_exceptional;
    ZVec argmin_exceptional;
};

// Enumerates primitive u in the fan support with |entries| <= bound.
MldReport mld_search(const Fan& f, int bound, MldKind which);

// The family of affine threefold cones with rays (2,-1,0), (2,0,1), (1,1,1),
// (a,1,0); the distinguished interior ray is their sum before u_4, (5,0,2).
Fan acc_family_fan(long a);
ZVec acc_family_ue();

struct AccRow {
    long a;
    Rat boundary_lp;         // boundary LP, objective <m, u_E>
    Rat boundary_lp_literal; // boundary LP, objective with the last coordinate negated
    Rat defn_lp;             // pullback LP of -K_X along u_E
    Rat val_plus;            // defn_lp - 1
    Rat closed_form;         // (4a+5)/(a+2)
};

struct AccLimits {
    Rat boundary_lp;
    Rat boundary_lp_literal;
    Rat defn_lp;
};

std::vector<AccRow> acc_family(const std::vector<long>& a_values);

// The same three LP columns with the a-dependent constraint replaced by its
// degeneration as a grows without bound (x pinned to 0 for the two-sided
// boundary system, x >= 0 for the one-sided system).
AccLimits acc_family_limits();

} // namespace toridiv
