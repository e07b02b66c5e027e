#include "toridiv/polyhedron.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace toridiv {

bool operator==(const VPolyhedron& a, const VPolyhedron& b) {
    return a.dim == b.dim && a.vertices == b.vertices && a.rays == b.rays;
}

namespace {

// (normal | rhs) jointly scaled to a primitive integer row, orientation kept.
ZVec integer_row(const QVec& normal, const Rat& rhs) {
    QVec full = normal;
    full.push_back(rhs);
    Int l(1);
    for (const Rat& x : full) l = lcm(l, denominator(x));
    ZVec row(full.size());
    Int g(0);
    for (size_t i = 0; i < full.size(); ++i) {
        row[i] = numerator(full[i]) * (l / denominator(full[i]));
        g = gcd(g, row[i]);
    }
    if (g > 1)
        for (Int& x : row) x /= g;
    return row;
}

// Double description on a pointed cone {z : M z >= 0}; M must have full
// column rank d. Initial basis from the first independent rows, remaining
// rows inserted in lexicographic order.
std::vector<ZVec> dd_pointed(const ZMatrix& m, int d) {
    const int nrows = (int)m.size();
    // greedy independent row set
    std::vector<int> init;
    {
        QMatrix acc;
        for (int i = 0; i < nrows && (int)init.size() < d; ++i) {
            acc.push_back(to_qvec(m[i]));
            if (rank(acc) == (int)acc.size()) init.push_back(i);
            else acc.pop_back();
        }
    }
    if ((int)init.size() != d)
        throw InternalInconsistency("dd_pointed: matrix does not have full column rank");

    // rays of the simplicial start cone: columns of the inverse of M_init
    std::vector<ZVec> rays;
    {
        QMatrix mi(d, QVec(d));
        for (int i = 0; i < d; ++i) mi[i] = to_qvec(m[init[i]]);
        for (int j = 0; j < d; ++j) {
            QVec e(d, Rat(0));
            e[j] = 1;
            auto res = solve_rational(mi, e);
            rays.push_back(primitive_direction(res.solution->x));
        }
    }

    std::vector<int> processed = init;
    std::vector<int> rest;
    for (int i = 0; i < nrows; ++i)
        if (std::find(init.begin(), init.end(), i) == init.end()) rest.push_back(i);
    std::stable_sort(rest.begin(), rest.end(),
                     [&](int a, int b) { return lex_less(m[a], m[b]); });

    for (int row : rest) {
        std::vector<Int> vals(rays.size());
        for (size_t i = 0; i < rays.size(); ++i) vals[i] = dot(m[row], rays[i]);
        bool any_neg = std::any_of(vals.begin(), vals.end(), [](const Int& v) { return v < 0; });
        processed.push_back(row);
        if (!any_neg) continue;

        // tight processed rows per ray (ascending row order, the pair
        // intersection below relies on it)
        std::vector<int> sorted_processed = processed;
        std::sort(sorted_processed.begin(), sorted_processed.end());
        std::vector<std::vector<int>> tight(rays.size());
        for (size_t i = 0; i < rays.size(); ++i)
            for (int pr : sorted_processed)
                if (dot(m[pr], rays[i]) == 0) tight[i].push_back(pr);

        std::set<ZVec> fresh;
        for (size_t p = 0; p < rays.size(); ++p) {
            if (vals[p] <= 0) continue;
            for (size_t q = 0; q < rays.size(); ++q) {
                if (vals[q] >= 0) continue;
                std::vector<int> common;
                std::set_intersection(tight[p].begin(), tight[p].end(), tight[q].begin(),
                                      tight[q].end(), std::back_inserter(common));
                QMatrix sub;
                for (int pr : common) sub.push_back(to_qvec(m[pr]));
                if (rank(std::move(sub)) != d - 2) continue; // not a 2-face pair
                ZVec w(d);
                for (int k = 0; k < d; ++k) w[k] = vals[p] * rays[q][k] - vals[q] * rays[p][k];
                fresh.insert(primitivize(w));
            }
        }
        std::vector<ZVec> next;
        for (size_t i = 0; i < rays.size(); ++i)
            if (vals[i] >= 0) next.push_back(std::move(rays[i]));
        for (const ZVec& w : fresh) next.push_back(w);
        rays = std::move(next);
    }
    std::sort(rays.begin(), rays.end(), [](const ZVec& a, const ZVec& b) { return lex_less(a, b); });
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    return rays;
}

} // namespace

ConeDescription cone_extreme_rays(const ZMatrix& m, int dim) {
    for (const ZVec& row : m)
        if ((int)row.size() != dim) throw UsageError("cone_extreme_rays: row dimension mismatch");
    ConeDescription out;
    if (m.empty()) {
        for (int i = 0; i < dim; ++i) {
            ZVec e(dim, Int(0));
            e[i] = 1;
            out.lines.push_back(std::move(e));
        }
        return out;
    }
    out.lines = integer_kernel(m);
    const int r = dim - (int)out.lines.size();
    if (r == 0) return out;

    // column subset S with M|_S of full column rank: coordinates of a
    // complement of the lineality space
    std::vector<int> cols;
    {
        QMatrix acc; // transposed columns
        for (int j = 0; j < dim && (int)cols.size() < r; ++j) {
            QVec col(m.size());
            for (size_t i = 0; i < m.size(); ++i) col[i] = Rat(m[i][j]);
            acc.push_back(std::move(col));
            if (rank(acc) == (int)acc.size()) cols.push_back(j);
            else acc.pop_back();
        }
    }
    ZMatrix sub(m.size(), ZVec(r));
    for (size_t i = 0; i < m.size(); ++i)
        for (int j = 0; j < r; ++j) sub[i][j] = m[i][cols[j]];
    for (const ZVec& ray : dd_pointed(sub, r)) {
        ZVec full(dim, Int(0));
        for (int j = 0; j < r; ++j) full[cols[j]] = ray[j];
        out.rays.push_back(std::move(full));
    }
    std::sort(out.rays.begin(), out.rays.end(),
              [](const ZVec& a, const ZVec& b) { return lex_less(a, b); });
    return out;
}

ConeHRep cone_hrep_of_generators(const std::vector<ZVec>& generators, int dim) {
    ZMatrix rows;
    for (const ZVec& g : generators) {
        if ((int)g.size() != dim) throw UsageError("cone generators: dimension mismatch");
        rows.push_back(g);
    }
    ConeDescription dual = cone_extreme_rays(rows, dim);
    return ConeHRep{std::move(dual.rays), std::move(dual.lines)};
}

bool cone_contains(const ConeHRep& h, const QVec& x) {
    for (const ZVec& a : h.ineqs)
        if (dot(x, a) < 0) return false;
    for (const ZVec& e : h.eqs)
        if (dot(x, e) != 0) return false;
    return true;
}

bool cone_contains(const ConeHRep& h, const ZVec& x) {
    for (const ZVec& a : h.ineqs)
        if (dot(a, x) < 0) return false;
    for (const ZVec& e : h.eqs)
        if (dot(e, x) != 0) return false;
    return true;
}

bool contains(const HPolyhedron& p, const QVec& x) {
    for (const auto& h : p.ineqs)
        if (dot(h.normal, x) < h.rhs) return false;
    return true;
}

VPolyhedron dual_description(const HPolyhedron& p) {
    const int n = p.dim;
    VPolyhedron out;
    out.dim = n;
    if (!lp_is_feasible(p)) return out;

    ZMatrix rows;
    for (const auto& h : p.ineqs) {
        ZVec row = integer_row(h.normal, h.rhs);
        row[n] = -row[n]; // <a, x> - b t >= 0
        rows.push_back(std::move(row));
    }
    ZVec trow(n + 1, Int(0));
    trow[n] = 1;
    rows.push_back(std::move(trow));

    ConeDescription cd = cone_extreme_rays(rows, n + 1);
    for (const ZVec& r : cd.rays) {
        if (r[n] > 0) {
            QVec v(n);
            for (int j = 0; j < n; ++j) v[j] = make_rat(r[j], r[n]);
            out.vertices.push_back(std::move(v));
        } else {
            assert(r[n] == 0);
            ZVec dir(r.begin(), r.begin() + n);
            out.rays.push_back(primitivize(dir));
        }
    }
    for (const ZVec& l : cd.lines) {
        assert(l[n] == 0);
        ZVec dir(l.begin(), l.begin() + n);
        dir = primitivize(dir);
        ZVec neg(dir.size());
        for (size_t j = 0; j < dir.size(); ++j) neg[j] = -dir[j];
        out.rays.push_back(std::move(dir));
        out.rays.push_back(std::move(neg));
    }
    if (out.vertices.empty())
        throw InternalInconsistency("dual_description: feasible polyhedron without base point");
    std::sort(out.vertices.begin(), out.vertices.end(),
              [](const QVec& a, const QVec& b) { return lex_less(a, b); });
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
    std::sort(out.rays.begin(), out.rays.end(),
              [](const ZVec& a, const ZVec& b) { return lex_less(a, b); });
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    return out;
}

HPolyhedron dual_description(const VPolyhedron& p) {
    const int n = p.dim;
    HPolyhedron out;
    out.dim = n;
    if (p.vertices.empty()) {
        // empty set: canonical contradictory pair
        QVec e(n, Rat(0));
        e[0] = 1;
        out.ineqs.push_back({e, Rat(1)});
        QVec f(n, Rat(0));
        f[0] = -1;
        out.ineqs.push_back({f, Rat(1)});
        return out;
    }
    ZMatrix gens;
    for (const QVec& v : p.vertices) {
        // scale (v, 1) to integers jointly
        Int l = denominator_lcm(v);
        ZVec row(n + 1);
        for (int i = 0; i < n; ++i) row[i] = numerator(v[i]) * (l / denominator(v[i]));
        row[n] = l;
        gens.push_back(std::move(row));
    }
    for (const ZVec& r : p.rays) {
        ZVec row = r;
        row.push_back(Int(0));
        gens.push_back(std::move(row));
    }
    ConeDescription dual = cone_extreme_rays(gens, n + 1);
    auto push = [&](const ZVec& w) {
        QVec a(n);
        bool zero = true;
        for (int j = 0; j < n; ++j) {
            a[j] = Rat(w[j]);
            if (w[j] != 0) zero = false;
        }
        if (zero) {
            assert(w[n] > 0); // the trivial t >= 0 direction
            return;
        }
        out.ineqs.push_back({std::move(a), Rat(-w[n])});
    };
    for (const ZVec& w : dual.rays) push(w);
    for (const ZVec& w : dual.lines) {
        push(w);
        ZVec neg(w.size());
        for (size_t j = 0; j < w.size(); ++j) neg[j] = -w[j];
        push(neg);
    }
    std::sort(out.ineqs.begin(), out.ineqs.end(), [](const Halfspace& x, const Halfspace& y) {
        if (x.normal != y.normal) return lex_less(x.normal, y.normal);
        return x.rhs < y.rhs;
    });
    return out;
}

VPolyhedron polar_dual(const VPolyhedron& p) {
    if (!p.rays.empty()) throw DomainError("polar_dual: input is unbounded");
    if (p.vertices.empty()) throw DomainError("polar_dual: input is empty");
    const int n = p.dim;
    {
        QMatrix diffs;
        for (size_t i = 1; i < p.vertices.size(); ++i) {
            QVec d(n);
            for (int j = 0; j < n; ++j) d[j] = p.vertices[i][j] - p.vertices[0][j];
            diffs.push_back(std::move(d));
        }
        if (rank(std::move(diffs)) != n)
            throw DomainError("polar_dual: input is not full-dimensional");
    }
    HPolyhedron h = dual_description(p);
    for (const auto& hs : h.ineqs)
        if (hs.rhs >= 0)
            throw DomainError("polar_dual: 0 is not interior, facet direction " +
                              vec_str(hs.normal));
    HPolyhedron cut;
    cut.dim = n;
    for (const QVec& v : p.vertices) cut.ineqs.push_back({v, Rat(-1)});
    VPolyhedron out = dual_description(cut);
    if (!out.rays.empty())
        throw InternalInconsistency("polar_dual: polar of a 0-interior polytope must be bounded");
    return out;
}

// ---------------------------------------------------------------------------
// lattice points by Fourier-Motzkin cascade
// ---------------------------------------------------------------------------

namespace {

struct FMRow {
    ZVec a;
    Int b;
};

ZVec normalize_row(ZVec a, Int& b) {
    Int g = abs(b);
    for (const Int& x : a) g = gcd(g, x);
    if (g > 1) {
        for (Int& x : a) x /= g;
        b /= g;
    }
    return a;
}

} // namespace

std::vector<ZVec> lattice_points(const HPolyhedron& p) {
    const int n = p.dim;
    // bounded? (also collects nothing else; the FM cascade derives its own bounds)
    for (int i = 0; i < n; ++i) {
        for (int sgn : {1, -1}) {
            QVec obj(n, Rat(0));
            obj[i] = sgn;
            LpOutcome o = lp_minimize(obj, p);
            if (std::holds_alternative<LpInfeasible>(o)) return {};
            if (std::holds_alternative<LpUnbounded>(o))
                throw DomainError("lattice_points: polyhedron unbounded in coordinate " +
                                  std::to_string(i));
        }
    }
    std::vector<std::vector<FMRow>> level(n + 1);
    for (const auto& h : p.ineqs) {
        ZVec row = integer_row(h.normal, h.rhs);
        FMRow fr;
        fr.b = row[n];
        fr.a.assign(row.begin(), row.begin() + n);
        level[n].push_back(std::move(fr));
    }
    // eliminate coordinates n-1, ..., 1
    for (int k = n; k > 1; --k) {
        const int c = k - 1; // coordinate being eliminated
        std::set<std::pair<ZVec, Int>> seen;
        std::vector<FMRow> lower, upper, keep;
        for (const FMRow& r : level[k]) {
            if (r.a[c] > 0) lower.push_back(r);
            else if (r.a[c] < 0) upper.push_back(r);
            else keep.push_back(r);
        }
        auto add = [&](ZVec a, Int b) {
            a = normalize_row(std::move(a), b);
            if (is_zero(a)) return; // b <= 0 for feasible systems
            if (seen.insert({a, b}).second) level[k - 1].push_back({std::move(a), std::move(b)});
        };
        for (const FMRow& r : keep) add(r.a, r.b);
        for (const FMRow& lo : lower)
            for (const FMRow& up : upper) {
                ZVec a(n, Int(0));
                Int s = lo.a[c];
                Int tt = -up.a[c];
                for (int j = 0; j < n; ++j) a[j] = tt * lo.a[j] + s * up.a[j];
                add(std::move(a), tt * lo.b + s * up.b);
            }
    }

    std::vector<ZVec> out;
    ZVec x(n, Int(0));
    // rows relevant when choosing coordinate c: those of level[c+1] with a[c] != 0
    std::vector<std::vector<const FMRow*>> active(n);
    for (int c = 0; c < n; ++c)
        for (const FMRow& r : level[c + 1])
            if (r.a[c] != 0) active[c].push_back(&r);

    auto bounds = [&](int c, Int& lo, Int& hi) -> bool {
        bool has_lo = false, has_hi = false;
        for (const FMRow* r : active[c]) {
            Int rest = r->b;
            for (int j = 0; j < c; ++j) rest -= r->a[j] * x[j];
            if (r->a[c] > 0) {
                Int v = ceil_div(rest, r->a[c]);
                if (!has_lo || v > lo) lo = v;
                has_lo = true;
            } else {
                Int v = floor_div(-rest, -r->a[c]);
                if (!has_hi || v < hi) hi = v;
                has_hi = true;
            }
        }
        // boundedness was certified by LP above
        if (!has_lo || !has_hi)
            throw InternalInconsistency("lattice_points: missing bound after projection");
        return lo <= hi;
    };

    auto rec = [&](auto&& self, int c) -> void {
        Int lo, hi;
        if (!bounds(c, lo, hi)) return;
        if (c == n - 1) {
            for (Int v = lo; v <= hi; ++v) {
                x[c] = v;
                out.push_back(x);
            }
            return;
        }
        for (Int v = lo; v <= hi; ++v) {
            x[c] = v;
            self(self, c + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// ---------------------------------------------------------------------------
// cones: triangulation, Hilbert bases, semigroup membership
// ---------------------------------------------------------------------------

std::vector<std::vector<int>> triangulate_cone(const std::vector<ZVec>& extreme_rays, int dim) {
    // recursive pull triangulation from the lowest-index ray of each face
    auto rec = [&](auto&& self, const std::vector<int>& idx) -> std::vector<std::vector<int>> {
        std::vector<ZVec> sub;
        for (int i : idx) sub.push_back(extreme_rays[i]);
        int k = rank_int(sub);
        if ((int)idx.size() == k) return {idx};
        int apex = idx[0];
        ConeHRep h = cone_hrep_of_generators(sub, dim);
        std::vector<std::vector<int>> pieces;
        for (const ZVec& a : h.ineqs) {
            if (dot(a, extreme_rays[apex]) == 0) continue;
            std::vector<int> face;
            for (int i : idx)
                if (dot(a, extreme_rays[i]) == 0) face.push_back(i);
            for (auto piece : self(self, face)) {
                piece.insert(piece.begin(), apex);
                std::sort(piece.begin(), piece.end());
                pieces.push_back(std::move(piece));
            }
        }
        std::sort(pieces.begin(), pieces.end());
        pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
        return pieces;
    };
    std::vector<int> all(extreme_rays.size());
    for (size_t i = 0; i < extreme_rays.size(); ++i) all[i] = (int)i;
    return rec(rec, all);
}

bool semigroup_member(const ZVec& x, const std::vector<ZVec>& gens, const ConeHRep& cone) {
    std::map<ZVec, bool> memo;
    auto rec = [&](auto&& self, const ZVec& y) -> bool {
        if (is_zero(y)) return true;
        auto it = memo.find(y);
        if (it != memo.end()) return it->second;
        bool ok = false;
        for (const ZVec& g : gens) {
            ZVec z(y.size());
            for (size_t j = 0; j < y.size(); ++j) z[j] = y[j] - g[j];
            if (!cone_contains(cone, z)) continue;
            if (self(self, z)) {
                ok = true;
                break;
            }
        }
        memo[y] = ok;
        return ok;
    };
    if (!cone_contains(cone, x)) return false;
    return rec(rec, x);
}

std::vector<ZVec> hilbert_basis(const std::vector<ZVec>& generators, int dim) {
    if (generators.empty()) throw DomainError("hilbert_basis: no generators");
    for (const ZVec& g : generators)
        if (is_zero(g)) throw DomainError("hilbert_basis: zero generator");
    if (rank_int(generators) != dim)
        throw DomainError("hilbert_basis: cone is not full-dimensional");
    {
        HPolyhedron sep;
        sep.dim = dim;
        for (const ZVec& g : generators) sep.ineqs.push_back({to_qvec(g), Rat(1)});
        if (!lp_is_feasible(sep)) throw DomainError("hilbert_basis: cone is not pointed");
    }
    ConeHRep hrep = cone_hrep_of_generators(generators, dim);
    assert(hrep.eqs.empty());

    std::vector<ZVec> ext;
    {
        ConeDescription cd = cone_extreme_rays(hrep.ineqs, dim);
        ext = std::move(cd.rays);
    }
    std::set<ZVec> candidates(ext.begin(), ext.end());

    for (const auto& piece : triangulate_cone(ext, dim)) {
        ZMatrix s(dim, ZVec(dim)); // columns are the piece rays
        for (int j = 0; j < dim; ++j)
            for (int i = 0; i < dim; ++i) s[i][j] = ext[piece[j]][i];
        Int d = det(s);
        if (abs(d) == 1) continue; // unimodular piece adds nothing
        // adjugate: adj = det * inverse, integral
        QMatrix sq(dim);
        for (int i = 0; i < dim; ++i) sq[i] = to_qvec(s[i]);
        ZMatrix adj(dim, ZVec(dim));
        for (int j = 0; j < dim; ++j) {
            QVec e(dim, Rat(0));
            e[j] = 1;
            auto res = solve_rational(sq, e);
            for (int i = 0; i < dim; ++i) {
                Rat entry = res.solution->x[i] * Rat(d);
                assert(denominator(entry) == 1);
                adj[i][j] = numerator(entry);
            }
        }
        Int dpos = abs(d);
        if (d < 0)
            for (auto& row : adj)
                for (auto& e : row) e = -e;
        // integer bounding box of the closed parallelepiped
        ZVec lo(dim, Int(0)), hi(dim, Int(0));
        for (int i = 0; i < dim; ++i) {
            Int mn(0), mx(0);
            for (int j = 0; j < dim; ++j) {
                if (s[i][j] > 0) mx += s[i][j];
                else mn += s[i][j];
            }
            lo[i] = mn;
            hi[i] = mx;
        }
        ZVec x(dim);
        auto scan = [&](auto&& self, int c) -> void {
            if (c == dim) {
                if (is_zero(x)) return;
                for (int i = 0; i < dim; ++i) {
                    Int li(0);
                    for (int j = 0; j < dim; ++j) li += adj[i][j] * x[j];
                    if (li < 0 || li >= dpos) return; // lambda_i in [0, 1)
                }
                candidates.insert(x);
                return;
            }
            for (Int v = lo[c]; v <= hi[c]; ++v) {
                x[c] = v;
                self(self, c + 1);
            }
        };
        scan(scan, 0);
    }

    // positive grading: sum of facet normals
    ZVec w(dim, Int(0));
    for (const ZVec& a : hrep.ineqs)
        for (int i = 0; i < dim; ++i) w[i] += a[i];

    std::vector<ZVec> ordered(candidates.begin(), candidates.end());
    std::sort(ordered.begin(), ordered.end(), [&](const ZVec& a, const ZVec& b) {
        Int wa = dot(w, a), wb = dot(w, b);
        if (wa != wb) return wa < wb;
        return lex_less(a, b);
    });
    std::vector<ZVec> basis;
    for (const ZVec& c : ordered)
        if (!semigroup_member(c, basis, hrep)) basis.push_back(c);
    std::sort(basis.begin(), basis.end(), [](const ZVec& a, const ZVec& b) { return lex_less(a, b); });
    return basis;
}

} // namespace toridiv
