#include "toridiv/polyhedron.hpp"

#include <algorithm>
#include <cassert>

// Two-phase dense tableau simplex over exact rationals, Bland's rule
// throughout. Free variables are split x = x+ - x-, constraints
// <a_i, x> >= b_i get surplus variables: a_i x+ - a_i x- - s_i = b_i.

namespace toridiv {

namespace {

struct Tableau {
    int n = 0;        // original dimension
    int m = 0;        // active rows
    int cols = 0;     // structural columns: 2n + m_orig (+ artificials in phase 1)
    int m_orig = 0;
    std::vector<QVec> rows;   // each length cols + 1, last entry rhs
    std::vector<int> basis;   // basic variable per row
    QVec cost;                // reduced cost row, length cols

    void pivot(int r, int j) {
        QVec& pr = rows[r];
        Rat inv = Rat(1) / pr[j];
        for (auto& e : pr) e *= inv;
        for (int i = 0; i < (int)rows.size(); ++i) {
            if (i == r || rows[i][j] == 0) continue;
            Rat f = rows[i][j];
            for (int k = 0; k <= cols; ++k) rows[i][k] -= f * pr[k];
        }
        if (cost[j] != 0) {
            Rat f = cost[j];
            for (int k = 0; k < cols; ++k) cost[k] -= f * pr[k];
        }
        basis[r] = j;
    }

    // Bland: returns true when optimal, false when unbounded (entering col in *enter).
    bool run(int allowed_cols, int* enter) {
        for (;;) {
            int j = -1;
            for (int k = 0; k < allowed_cols; ++k)
                if (cost[k] < 0) { j = k; break; }
            if (j < 0) return true;
            int r = -1;
            Rat best(0);
            for (int i = 0; i < (int)rows.size(); ++i) {
                if (rows[i][j] <= 0) continue;
                Rat ratio = rows[i][cols] / rows[i][j];
                if (r < 0 || ratio < best || (ratio == best && basis[i] < basis[r])) {
                    r = i;
                    best = ratio;
                }
            }
            if (r < 0) {
                *enter = j;
                return false;
            }
            pivot(r, j);
        }
    }
};

} // namespace

LpOutcome lp_minimize(const QVec& objective, const HPolyhedron& region) {
    const int n = region.dim;
    if ((int)objective.size() != n) throw UsageError("lp_minimize: objective dimension mismatch");
    const int m = (int)region.ineqs.size();
    for (const auto& h : region.ineqs)
        if ((int)h.normal.size() != n) throw UsageError("lp_minimize: constraint dimension mismatch");

    // columns: x+ (n) | x- (n) | s (m) | artificials (m)
    const int struct_cols = 2 * n + m;
    const int all_cols = struct_cols + m;

    Tableau t;
    t.n = n;
    t.m_orig = m;
    t.cols = all_cols;
    t.rows.assign(m, QVec(all_cols + 1, Rat(0)));
    t.basis.resize(m);
    for (int i = 0; i < m; ++i) {
        const auto& h = region.ineqs[i];
        int sign = (h.rhs < 0) ? -1 : 1;
        for (int j = 0; j < n; ++j) {
            t.rows[i][j] = Rat(sign) * h.normal[j];
            t.rows[i][n + j] = Rat(-sign) * h.normal[j];
        }
        t.rows[i][2 * n + i] = Rat(-sign);
        t.rows[i][struct_cols + i] = 1;
        t.rows[i][all_cols] = Rat(sign) * h.rhs;
        t.basis[i] = struct_cols + i;
    }

    // phase 1: minimize the artificial sum
    t.cost.assign(all_cols, Rat(0));
    for (int j = 0; j < struct_cols; ++j) {
        Rat acc(0);
        for (int i = 0; i < m; ++i) acc += t.rows[i][j];
        t.cost[j] = -acc; // c_j - sum over basic artificial rows
    }
    int enter = -1;
    bool ok = t.run(all_cols, &enter);
    assert(ok); // phase 1 is bounded below by 0
    (void)ok;
    Rat phase1(0);
    for (int i = 0; i < m; ++i)
        if (t.basis[i] >= struct_cols) phase1 += t.rows[i][all_cols];

    if (phase1 > 0) {
        // Farkas certificate from the phase-1 multipliers: the reduced cost of
        // surplus column i is pi_i, with pi A = 0, pi >= 0, pi.b > 0.
        QVec farkas(m, Rat(0));
        for (int i = 0; i < m; ++i) farkas[i] = t.cost[2 * n + i];
        Rat yb(0);
        for (int i = 0; i < m; ++i) {
            if (farkas[i] < 0) throw InternalInconsistency("lp: negative Farkas multiplier");
            yb += farkas[i] * region.ineqs[i].rhs;
        }
        for (int j = 0; j < n; ++j) {
            Rat acc(0);
            for (int i = 0; i < m; ++i) acc += farkas[i] * region.ineqs[i].normal[j];
            if (acc != 0) throw InternalInconsistency("lp: Farkas combination not annihilating");
        }
        if (yb <= 0) throw InternalInconsistency("lp: Farkas certificate without positive rhs");
        return LpInfeasible{std::move(farkas)};
    }

    // drive leftover artificials out of the (degenerate) basis
    std::vector<int> keep;
    for (int i = 0; i < (int)t.rows.size(); ++i) {
        if (t.basis[i] < struct_cols) { keep.push_back(i); continue; }
        int j = -1;
        for (int k = 0; k < struct_cols; ++k)
            if (t.rows[i][k] != 0) { j = k; break; }
        if (j >= 0) {
            t.pivot(i, j);
            keep.push_back(i);
        }
        // else: redundant row, dropped below
    }
    if ((int)keep.size() != (int)t.rows.size()) {
        std::vector<QVec> rows2;
        std::vector<int> basis2;
        for (int i : keep) {
            rows2.push_back(std::move(t.rows[i]));
            basis2.push_back(t.basis[i]);
        }
        t.rows = std::move(rows2);
        t.basis = std::move(basis2);
    }

    // phase 2
    auto struct_cost = [&](int j) -> Rat {
        if (j < n) return objective[j];
        if (j < 2 * n) return -objective[j - n];
        return Rat(0);
    };
    t.cost.assign(all_cols, Rat(0));
    for (int j = 0; j < struct_cols; ++j) {
        Rat red = struct_cost(j);
        for (int i = 0; i < (int)t.rows.size(); ++i)
            red -= struct_cost(t.basis[i]) * t.rows[i][j];
        t.cost[j] = red;
    }
    if (!t.run(struct_cols, &enter)) {
        // recession direction from the entering column
        QVec dir(n, Rat(0));
        if (enter < 2 * n) dir[enter % n] = (enter < n) ? 1 : -1;
        for (int i = 0; i < (int)t.rows.size(); ++i) {
            int b = t.basis[i];
            if (b < n) dir[b] -= t.rows[i][enter];
            else if (b < 2 * n) dir[b - n] += t.rows[i][enter];
        }
        Rat drop = dot(objective, dir);
        if (drop >= 0) throw InternalInconsistency("lp: unbounded direction does not descend");
        for (const auto& h : region.ineqs)
            if (dot(h.normal, dir) < 0)
                throw InternalInconsistency("lp: unbounded direction not in recession cone");
        return LpUnbounded{std::move(dir)};
    }

    QVec point(n, Rat(0));
    for (int i = 0; i < (int)t.rows.size(); ++i) {
        int b = t.basis[i];
        if (b < n) point[b] += t.rows[i][all_cols];
        else if (b < 2 * n) point[b - n] -= t.rows[i][all_cols];
    }
    Rat value = dot(objective, point);

    // dual certificate: multiplier of constraint i is the reduced cost of its
    // surplus column (0 for rows eliminated as redundant)
    QVec dual(m, Rat(0));
    for (int i = 0; i < m; ++i) dual[i] = t.cost[2 * n + i];
    Rat dual_value(0);
    for (int i = 0; i < m; ++i) {
        if (dual[i] < 0) throw InternalInconsistency("lp: negative dual multiplier");
        dual_value += dual[i] * region.ineqs[i].rhs;
    }
    for (int j = 0; j < n; ++j) {
        Rat acc(0);
        for (int i = 0; i < m; ++i) acc += dual[i] * region.ineqs[i].normal[j];
        if (acc != objective[j]) throw InternalInconsistency("lp: dual infeasible");
    }
    if (dual_value != value) throw InternalInconsistency("lp: duality gap");
    for (const auto& h : region.ineqs)
        if (dot(h.normal, point) < h.rhs)
            throw InternalInconsistency("lp: optimal point infeasible");

    return LpOptimal{std::move(value), std::move(point), std::move(dual)};
}

bool lp_is_feasible(const HPolyhedron& region) {
    QVec zero(region.dim, Rat(0));
    return !std::holds_alternative<LpInfeasible>(lp_minimize(zero, region));
}

} // namespace toridiv
