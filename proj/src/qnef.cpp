#include "toridiv/qnef.hpp"

#include <algorithm>
#include <set>

namespace toridiv {

VPolyhedron qd_polytope(const Fan& f, const ToricDivisor& d) {
    check_divisor(f, d);
    std::string bad;
    for (size_t i = 0; i < f.rays.size(); ++i)
        if (d.coeffs[i] <= 0) bad += (bad.empty() ? "" : ",") + std::to_string(i);
    if (!bad.empty())
        throw DomainError("qd_polytope: coefficients must be positive on every ray (rays " + bad +
                          ")");
    VPolyhedron raw;
    raw.dim = f.dim;
    for (size_t i = 0; i < f.rays.size(); ++i) {
        QVec v(f.dim);
        for (int j = 0; j < f.dim; ++j) v[j] = Rat(f.rays[i][j]) / d.coeffs[i];
        raw.vertices.push_back(std::move(v));
    }
    // canonicalize: drop non-extreme points via the H <-> V round trip
    VPolyhedron out = dual_description(dual_description(raw));
    if (!out.rays.empty())
        throw InternalInconsistency("qd_polytope: hull of finitely many points is bounded");
    {
        QMatrix diffs;
        for (size_t i = 1; i < out.vertices.size(); ++i) {
            QVec diff(f.dim);
            for (int j = 0; j < f.dim; ++j) diff[j] = out.vertices[i][j] - out.vertices[0][j];
            diffs.push_back(std::move(diff));
        }
        if (out.vertices.size() <= (size_t)f.dim || rank(std::move(diffs)) != f.dim)
            throw DomainError("qd_polytope: hull is not full-dimensional");
    }
    return out;
}

std::vector<WallCrossing> wall_crossings(const Fan& f, const ToricDivisor& d,
                                         const CartierStatus& status) {
    if (!status.is_qcartier())
        throw DomainError("wall_crossings: divisor is not Q-Cartier (cone " +
                          std::to_string(status.witness_cone) + ")");
    (void)d;
    std::vector<WallCrossing> out;
    for (const Wall& w : fan_walls(f)) {
        WallCrossing wc;
        wc.cone_a = w.cone_a;
        wc.cone_b = w.cone_b;
        wc.wall_rays = w.rays;
        // lex-smallest ray of cone_b off the wall
        for (int i : f.max_cones[w.cone_b]) {
            if (std::find(w.rays.begin(), w.rays.end(), i) == w.rays.end()) {
                wc.test_ray = i;
                break;
            }
        }
        if (wc.test_ray < 0)
            throw InternalInconsistency("wall_crossings: wall without off-wall ray");
        const QVec& ma = status.rational_data[w.cone_a];
        const QVec& mb = status.rational_data[w.cone_b];
        wc.value = dot(ma, f.rays[wc.test_ray]) - dot(mb, f.rays[wc.test_ray]);
        out.push_back(std::move(wc));
    }
    return out;
}

bool is_nef_qcartier(const Fan& f, const ToricDivisor& d) {
    CartierStatus st = cartier_status(f, d);
    for (const WallCrossing& wc : wall_crossings(f, d, st))
        if (wc.value < 0) return false;
    return true;
}

QnefResult is_qnef(const Fan& f, const ToricDivisor& d) {
    check_divisor(f, d);
    if (!is_complete(f)) throw DomainError("is_qnef: fan must be complete");
    HPolyhedron pd = polytope_PD(f, d);
    for (size_t c = 0; c < f.max_cones.size(); ++c) {
        HPolyhedron local;
        local.dim = f.dim;
        for (int i : f.max_cones[c])
            local.ineqs.push_back({to_qvec(f.rays[i]), -d.coeffs[i]});
        VPolyhedron v = dual_description(local);
        for (const QVec& vertex : v.vertices)
            if (!contains(pd, vertex)) return QnefResult{false, (int)c, vertex};
    }
    return QnefResult{};
}

QCartierization qcartierize(const Fan& f, const ToricDivisor& d) {
    check_divisor(f, d);
    if (!is_complete(f)) throw DomainError("qcartierize: fan must be complete");
    VPolyhedron qd = qd_polytope(f, d);

    QCartierization out;
    out.fan_prime = refine_by_polytope(f, qd);
    if (!is_refinement_small(f, out.fan_prime)) {
        out.small = false;
        throw InternalInconsistency(
            "qcartierize: refinement by Q_D extracted a ray; expected a small modification");
    }
    out.small = true;
    out.dbar = d; // rays and their order are unchanged
    out.dbar_status = cartier_status(out.fan_prime, out.dbar);
    if (!out.dbar_status.is_qcartier())
        throw InternalInconsistency("qcartierize: strict transform is not Q-Cartier on the "
                                    "refined fan (cone " +
                                    std::to_string(out.dbar_status.witness_cone) + ")");
    out.walls = wall_crossings(out.fan_prime, out.dbar, out.dbar_status);
    for (WallCrossing& wc : out.walls) {
        int ca = containing_cone(f, out.fan_prime, wc.cone_a);
        int cb = containing_cone(f, out.fan_prime, wc.cone_b);
        wc.extracted = (ca >= 0 && ca == cb);
        if (wc.extracted && wc.value <= 0)
            throw InternalInconsistency("qcartierize: extracted wall with non-positive crossing");
    }

    if (d.is_integral() && is_globally_generated(f, d).yes) {
        // data of D-bar must be exactly the vertex set of P_D
        VPolyhedron pd_v = dual_description(polytope_PD(f, d));
        std::set<QVec> vertices(pd_v.vertices.begin(), pd_v.vertices.end());
        std::set<QVec> data(out.dbar_status.rational_data.begin(),
                            out.dbar_status.rational_data.end());
        if (vertices != data)
            throw InternalInconsistency(
                "qcartierize: vertices of P_D differ from the Cartier data of the strict "
                "transform");
        // every facet datum of Q_D lies in P_D
        HPolyhedron pd_h = polytope_PD(f, d);
        for (const auto& hs : dual_description(qd).ineqs) {
            if (hs.rhs >= 0)
                throw InternalInconsistency("qcartierize: Q_D facet not cutting the origin side");
            QVec m(f.dim);
            for (int j = 0; j < f.dim; ++j) m[j] = hs.normal[j] / (-hs.rhs);
            if (!contains(pd_h, m))
                throw InternalInconsistency("qcartierize: facet datum of Q_D outside P_D");
        }
    }
    return out;
}

namespace {

// n-subsets of the cone's rays with linearly independent generators
void independent_subsets(const Fan& f, const std::vector<int>& idx, int n,
                         std::vector<std::vector<int>>& out) {
    std::vector<int> pick;
    auto rec = [&](auto&& self, size_t start) -> void {
        if ((int)pick.size() == n) {
            ZMatrix rows;
            for (int i : pick) rows.push_back(f.rays[i]);
            if (rank_int(rows) == n) out.push_back(pick);
            return;
        }
        for (size_t t = start; t < idx.size(); ++t) {
            pick.push_back(idx[t]);
            self(self, t + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
}

} // namespace

QnefThreshold qnt(const Fan& f, const ToricDivisor& d, const ToricDivisor& a) {
    check_divisor(f, d);
    check_divisor(f, a);
    if (!is_complete(f)) throw DomainError("qnt: fan must be complete");
    CartierStatus ast = cartier_status(f, a);
    if (!ast.is_qcartier())
        throw DomainError("qnt: auxiliary divisor is not Q-Cartier (cone " +
                          std::to_string(ast.witness_cone) + ")");
    for (const WallCrossing& wc : wall_crossings(f, a, ast))
        if (wc.value <= 0)
            throw DomainError("qnt: auxiliary divisor is not ample (wall between cones " +
                              std::to_string(wc.cone_a) + " and " + std::to_string(wc.cone_b) +
                              ")");

    QnefThreshold th;
    bool have = false;
    std::map<std::pair<int, int>, Rat> table;
    for (size_t c = 0; c < f.max_cones.size(); ++c) {
        const auto& idx = f.max_cones[c];
        const QVec& ma = ast.rational_data[c]; // <ma, u_rho> = -a_rho on sigma(1)
        std::vector<std::vector<int>> bases;
        independent_subsets(f, idx, f.dim, bases);
        for (const auto& basis : bases) {
            QMatrix rows;
            QVec rhs;
            for (int i : basis) {
                rows.push_back(to_qvec(f.rays[i]));
                rhs.push_back(-d.coeffs[i]);
            }
            QVec md = solve_rational(rows, rhs).solution->x;
            // the basis carries a vertex path m(t) = md + t*ma iff it is
            // feasible inside the cone, which is t-independent there
            bool viable = true;
            for (int i : idx) {
                if (std::find(basis.begin(), basis.end(), i) != basis.end()) continue;
                if (dot(md, f.rays[i]) + d.coeffs[i] < 0) {
                    viable = false;
                    break;
                }
            }
            if (!viable) continue;
            for (size_t rix = 0; rix < f.rays.size(); ++rix) {
                if (std::find(idx.begin(), idx.end(), (int)rix) != idx.end()) continue;
                Rat alpha = dot(md, f.rays[rix]) + d.coeffs[rix];
                Rat beta = dot(ma, f.rays[rix]) + a.coeffs[rix];
                if (beta <= 0)
                    throw InternalInconsistency(
                        "qnt: ample support function not strictly convex off the cone");
                Rat t = -alpha / beta;
                auto key = std::make_pair((int)c, (int)rix);
                auto it = table.find(key);
                if (it == table.end() || it->second < t) table[key] = t;
                if (!have || t > th.value) {
                    th.value = t;
                    have = true;
                }
            }
        }
    }
    if (!have) throw InternalInconsistency("qnt: no active constraint pair found");
    for (const auto& [key, t] : table)
        th.table.push_back(QnefThreshold::Breakpoint{key.first, key.second, t});

    // sanity: q-nef just above the threshold, not q-nef just below
    Rat eps(1, 1000);
    ToricDivisor above = add_divisors(d, scale_divisor(a, th.value + eps));
    ToricDivisor below = add_divisors(d, scale_divisor(a, th.value - eps));
    if (!is_qnef(f, above).yes)
        throw InternalInconsistency("qnt: divisor not q-nef just above the threshold");
    if (is_qnef(f, below).yes)
        throw InternalInconsistency("qnt: divisor q-nef just below the threshold");
    return th;
}

GgConjectureReport check_gg_conjecture(const Fan& f, const ToricDivisor& d,
                                       const ToricDivisor& a, int m_max) {
    check_divisor(f, d);
    check_divisor(f, a);
    if (!d.is_integral()) throw DomainError("check_gg_conjecture: divisor must be integral");
    if (!is_complete(f)) throw DomainError("check_gg_conjecture: fan must be complete");
    CartierStatus ast = cartier_status(f, a);
    if (ast.kind != CartierStatus::Kind::Cartier)
        throw DomainError("check_gg_conjecture: auxiliary divisor must be Cartier");
    for (const WallCrossing& wc : wall_crossings(f, a, ast))
        if (wc.value <= 0) throw DomainError("check_gg_conjecture: auxiliary divisor not ample");
    GgConjectureReport rep;
    ToricDivisor sum = add_divisors(d, a);
    for (int m = 1; m <= m_max; ++m) {
        GgResult r = is_globally_generated(f, scale_divisor(sum, Rat(m)));
        GgConjectureReport::Row row;
        row.m = m;
        row.gg = r.yes;
        row.witness_cone = r.witness_cone;
        row.witness_generator = r.witness_generator;
        if (!r.yes) rep.all_yes = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace toridiv
