#pragma once

// Independent brute-force oracles for the test suites. These deliberately
// avoid the production code paths they are used to check: LPs are solved by
// basic-solution enumeration, lattice points by box scans, semigroup
// membership by a fresh dynamic program.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "toridiv/divisor.hpp"
#include "toridiv/polyhedron.hpp"

namespace toridiv::oracles {

// Exact LP minimum by enumerating basic solutions; the region must be known
// feasible and bounded in the objective direction for the value to be valid.
inline std::optional<Rat> lp_min_by_enumeration(const QVec& obj, const HPolyhedron& p) {
    const int n = p.dim;
    const int m = (int)p.ineqs.size();
    std::optional<Rat> best;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start) -> void {
        if ((int)pick.size() == n) {
            QMatrix a;
            QVec b;
            for (int i : pick) {
                a.push_back(p.ineqs[i].normal);
                b.push_back(p.ineqs[i].rhs);
            }
            auto res = solve_rational(a, b);
            if (!res.consistent() || !res.solution->kernel.empty()) return;
            const QVec& x = res.solution->x;
            for (const auto& h : p.ineqs)
                if (dot(h.normal, x) < h.rhs) return;
            Rat v = dot(obj, x);
            if (!best || v < *best) best = v;
            return;
        }
        for (int i = start; i < m; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return best;
}

// Is the LP unbounded below? Tests the lineality basis of the recession cone
// and the 1-dimensional kernels of all (n-1)-subsets, which cover its extreme
// rays.
inline bool lp_unbounded_by_enumeration(const QVec& obj, const HPolyhedron& p) {
    const int n = p.dim;
    const int m = (int)p.ineqs.size();
    auto descends = [&](const QVec& k) {
        for (int sgn : {1, -1}) {
            QVec dir(n);
            for (int j = 0; j < n; ++j) dir[j] = Rat(sgn) * k[j];
            bool recession = true;
            for (const auto& h : p.ineqs)
                if (dot(h.normal, dir) < 0) {
                    recession = false;
                    break;
                }
            if (recession && dot(obj, dir) < 0) return true;
        }
        return false;
    };
    {
        QMatrix full;
        for (const auto& h : p.ineqs) full.push_back(h.normal);
        if (full.empty()) full.push_back(QVec(n, Rat(0)));
        for (const QVec& k : solve_rational(full, QVec(full.size(), Rat(0))).solution->kernel)
            if (descends(k)) return true;
    }
    bool found = false;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start) -> void {
        if (found) return;
        if ((int)pick.size() == n - 1) {
            QMatrix a;
            for (int i : pick) a.push_back(p.ineqs[i].normal);
            if (a.empty()) a.push_back(QVec(n, Rat(0)));
            auto res = solve_rational(a, QVec(a.size(), Rat(0)));
            if (res.solution->kernel.size() == 1 && descends(res.solution->kernel[0]))
                found = true;
            return;
        }
        for (int i = start; i < m; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    if (n >= 1) rec(rec, 0);
    return found;
}

// All lattice points by scanning an integer box derived from basic solutions
// (the vertices of a polytope are among the feasible basic solutions).
inline std::vector<ZVec> lattice_points_by_box_scan(const HPolyhedron& p) {
    const int n = p.dim;
    std::vector<QVec> feasible_basic;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start) -> void {
        if ((int)pick.size() == n) {
            QMatrix a;
            QVec b;
            for (int i : pick) {
                a.push_back(p.ineqs[i].normal);
                b.push_back(p.ineqs[i].rhs);
            }
            auto res = solve_rational(a, b);
            if (!res.consistent() || !res.solution->kernel.empty()) return;
            const QVec& x = res.solution->x;
            for (const auto& h : p.ineqs)
                if (dot(h.normal, x) < h.rhs) return;
            feasible_basic.push_back(x);
            return;
        }
        for (int i = start; i < (int)p.ineqs.size(); ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    std::vector<ZVec> out;
    if (feasible_basic.empty()) return out;
    std::vector<Int> lo(n), hi(n);
    for (int j = 0; j < n; ++j) {
        lo[j] = rat_floor(feasible_basic[0][j]);
        hi[j] = rat_ceil(feasible_basic[0][j]);
        for (const QVec& x : feasible_basic) {
            lo[j] = std::min(lo[j], rat_floor(x[j]));
            hi[j] = std::max(hi[j], rat_ceil(x[j]));
        }
    }
    ZVec x(n);
    auto scan = [&](auto&& self, int c) -> void {
        if (c == n) {
            for (const auto& h : p.ineqs)
                if (dot(h.normal, to_qvec(x)) < h.rhs) return;
            out.push_back(x);
            return;
        }
        for (Int v = lo[c]; v <= hi[c]; ++v) {
            x[c] = v;
            self(self, c + 1);
        }
    };
    scan(scan, 0);
    std::sort(out.begin(), out.end(), [](const ZVec& a, const ZVec& b) { return lex_less(a, b); });
    return out;
}

// Fresh dynamic program: is x a nonnegative integer combination of gens?
inline bool semigroup_member_dp(const ZVec& x, const std::vector<ZVec>& gens,
                                const ConeHRep& cone) {
    std::map<ZVec, bool> memo;
    auto rec = [&](auto&& self, const ZVec& y) -> bool {
        if (is_zero(y)) return true;
        if (!cone_contains(cone, y)) return false;
        auto it = memo.find(y);
        if (it != memo.end()) return it->second;
        memo[y] = false; // cycle guard; values strictly decrease in the grading
        for (const ZVec& g : gens) {
            ZVec z(y.size());
            for (size_t j = 0; j < y.size(); ++j) z[j] = y[j] - g[j];
            if (self(self, z)) return memo[y] = true;
        }
        return false;
    };
    return rec(rec, x);
}

// ---------------------------------------------------------------------------
// random instances
// ---------------------------------------------------------------------------

using Rng = std::mt19937_64;

inline Int rnd_int(Rng& rng, long lo, long hi) {
    return Int(std::uniform_int_distribution<long>(lo, hi)(rng));
}

// 2D: primitive rays sorted counterclockwise, consecutive pairs as cones.
// 3D: face fan of a random lattice polytope with 0 interior (contains a
// scaled cross-polytope); optionally triangulated to a simplicial fan.
inline Fan random_complete_fan(Rng& rng, int dim, bool simplicial) {
    if (dim == 2) {
        std::set<ZVec> dirs{ZVec{1, 0}, ZVec{0, 1}, ZVec{-1, 0}, ZVec{0, -1}};
        int extra = (int)std::uniform_int_distribution<int>(0, 4)(rng);
        for (int i = 0; i < extra; ++i) {
            ZVec v{rnd_int(rng, -4, 4), rnd_int(rng, -4, 4)};
            if (is_zero(v)) continue;
            dirs.insert(primitivize(v));
        }
        std::vector<ZVec> rays(dirs.begin(), dirs.end());
        auto half = [](const ZVec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
        std::sort(rays.begin(), rays.end(), [&](const ZVec& a, const ZVec& b) {
            if (half(a) != half(b)) return half(a) < half(b);
            return a[0] * b[1] - a[1] * b[0] > 0; // counterclockwise within a half-plane
        });
        Fan f;
        f.dim = 2;
        f.rays = rays;
        for (size_t i = 0; i < rays.size(); ++i) {
            int j = (int)((i + 1) % rays.size());
            std::vector<int> cone{(int)i, j};
            std::sort(cone.begin(), cone.end());
            f.max_cones.push_back(std::move(cone));
        }
        std::sort(f.max_cones.begin(), f.max_cones.end());
        return f;
    }
    // dim == 3
    VPolyhedron pts;
    pts.dim = 3;
    for (int i = 0; i < 3; ++i)
        for (int s : {2, -2}) {
            QVec v(3, Rat(0));
            v[i] = s;
            pts.vertices.push_back(std::move(v));
        }
    int extra = (int)std::uniform_int_distribution<int>(1, 4)(rng);
    for (int i = 0; i < extra; ++i) {
        QVec v(3);
        for (int j = 0; j < 3; ++j) v[j] = Rat(rnd_int(rng, -3, 3));
        if (is_zero(v)) continue;
        pts.vertices.push_back(std::move(v));
    }
    VPolyhedron hull = dual_description(dual_description(pts)); // extreme points only
    Fan f;
    f.dim = 3;
    std::map<ZVec, int> index;
    for (const QVec& v : hull.vertices) {
        ZVec r = primitive_direction(v);
        if (!index.count(r)) {
            index[r] = (int)f.rays.size();
            f.rays.push_back(r);
        }
    }
    HPolyhedron hrep = dual_description(hull);
    for (const auto& hs : hrep.ineqs) {
        std::vector<int> cone;
        for (const QVec& v : hull.vertices)
            if (dot(hs.normal, v) == hs.rhs) cone.push_back(index.at(primitive_direction(v)));
        std::sort(cone.begin(), cone.end());
        cone.erase(std::unique(cone.begin(), cone.end()), cone.end());
        f.max_cones.push_back(std::move(cone));
    }
    std::sort(f.max_cones.begin(), f.max_cones.end());
    if (simplicial) {
        Fan g;
        g.dim = 3;
        g.rays = f.rays;
        for (const auto& cone : f.max_cones) {
            std::vector<ZVec> gens;
            for (int i : cone) gens.push_back(f.rays[i]);
            for (const auto& piece : triangulate_cone(gens, 3)) {
                std::vector<int> idx;
                for (int t : piece) idx.push_back(cone[t]);
                std::sort(idx.begin(), idx.end());
                g.max_cones.push_back(std::move(idx));
            }
        }
        std::sort(g.max_cones.begin(), g.max_cones.end());
        return g;
    }
    return f;
}

inline ToricDivisor random_divisor(Rng& rng, const Fan& f, long lo, long hi) {
    ToricDivisor d;
    for (size_t i = 0; i < f.rays.size(); ++i) d.coeffs.push_back(Rat(rnd_int(rng, lo, hi)));
    return d;
}

// standard fixtures
inline Fan projective_plane_fan() {
    Fan f;
    f.dim = 2;
    f.rays = {ZVec{1, 0}, ZVec{0, 1}, ZVec{-1, -1}};
    f.max_cones = {{0, 1}, {0, 2}, {1, 2}};
    return f;
}

inline Fan cube_fan() {
    Fan f;
    f.dim = 3;
    for (int a : {-1, 1})
        for (int b : {-1, 1})
            for (int c : {-1, 1}) f.rays.push_back(ZVec{a, b, c});
    // six face cones of the cube; ray order is (-1,-1,-1), (-1,-1,1), ...
    auto pick = [&](int coord, int sign) {
        std::vector<int> cone;
        for (int i = 0; i < 8; ++i)
            if (f.rays[i][coord] == sign) cone.push_back(i);
        return cone;
    };
    for (int c = 0; c < 3; ++c)
        for (int s : {-1, 1}) f.max_cones.push_back(pick(c, s));
    std::sort(f.max_cones.begin(), f.max_cones.end());
    return f;
}

inline Fan quadric_cone_fan() {
    Fan f;
    f.dim = 3;
    f.rays = {ZVec{1, 0, 0}, ZVec{0, 1, 0}, ZVec{1, 0, 1}, ZVec{0, 1, 1}};
    f.max_cones = {{0, 1, 2, 3}};
    return f;
}

inline Fan octahedron_fan() {
    Fan f;
    f.dim = 3;
    f.rays = {ZVec{1, 0, 0},  ZVec{-1, 0, 0}, ZVec{0, 1, 0},
              ZVec{0, -1, 0}, ZVec{0, 0, 1},  ZVec{0, 0, -1}};
    for (int i : {0, 1})
        for (int j : {2, 3})
            for (int k : {4, 5}) {
                std::vector<int> cone{i, j, k};
                std::sort(cone.begin(), cone.end());
                f.max_cones.push_back(std::move(cone));
            }
    std::sort(f.max_cones.begin(), f.max_cones.end());
    return f;
}

} // namespace toridiv::oracles
