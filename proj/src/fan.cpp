#include "toridiv/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toridiv {

std::vector<ZVec> cone_generators(const Fan& f, int ci) {
    std::vector<ZVec> gens;
    for (int i : f.max_cones[ci]) gens.push_back(f.rays[i]);
    return gens;
}

ConeHRep cone_hrep(const Fan& f, int ci) {
    return cone_hrep_of_generators(cone_generators(f, ci), f.dim);
}

namespace {

bool cone_pointed(const std::vector<ZVec>& gens, int dim) {
    HPolyhedron sep;
    sep.dim = dim;
    for (const ZVec& g : gens) sep.ineqs.push_back({to_qvec(g), Rat(1)});
    return lp_is_feasible(sep);
}

// x in cone(gens)? Solved as feasibility of x = sum lambda_i gens_i, lambda >= 0.
bool in_cone_of(const std::vector<ZVec>& gens, const ZVec& x, int dim) {
    const int k = (int)gens.size();
    HPolyhedron region;
    region.dim = k;
    for (int j = 0; j < dim; ++j) {
        QVec row(k);
        for (int i = 0; i < k; ++i) row[i] = Rat(gens[i][j]);
        region.ineqs.push_back({row, Rat(x[j])});
        QVec neg(k);
        for (int i = 0; i < k; ++i) neg[i] = -row[i];
        region.ineqs.push_back({neg, Rat(-x[j])});
    }
    for (int i = 0; i < k; ++i) {
        QVec e(k, Rat(0));
        e[i] = 1;
        region.ineqs.push_back({e, Rat(0)});
    }
    return lp_is_feasible(region);
}

std::string cone_name(const Fan& f, int ci) {
    std::string s = "cone " + std::to_string(ci) + " {";
    for (size_t j = 0; j < f.max_cones[ci].size(); ++j)
        s += (j ? "," : "") + std::to_string(f.max_cones[ci][j]);
    return s + "}";
}

// extreme rays of sigma_a ∩ sigma_b (primitive, sorted)
std::vector<ZVec> intersection_rays(const ConeHRep& ha, const ConeHRep& hb, int dim) {
    ZMatrix rows;
    auto feed = [&](const ConeHRep& h) {
        for (const ZVec& a : h.ineqs) rows.push_back(a);
        for (const ZVec& e : h.eqs) {
            rows.push_back(e);
            ZVec neg(e.size());
            for (size_t j = 0; j < e.size(); ++j) neg[j] = -e[j];
            rows.push_back(std::move(neg));
        }
    };
    feed(ha);
    feed(hb);
    ConeDescription cd = cone_extreme_rays(rows, dim);
    // a valid fan never has a line inside a cone intersection; tolerate here,
    // validate_fan reports it via the face test
    std::vector<ZVec> out = cd.rays;
    for (const ZVec& l : cd.lines) {
        out.push_back(l);
        ZVec neg(l.size());
        for (size_t j = 0; j < l.size(); ++j) neg[j] = -l[j];
        out.push_back(std::move(neg));
    }
    std::sort(out.begin(), out.end(), [](const ZVec& a, const ZVec& b) { return lex_less(a, b); });
    return out;
}

// Is I (given by its extreme rays) a face of the cone with generators gens
// and facet description h? Face = the cone cut by all facet normals of h
// tight on I; test that every generator lying on those hyperplanes is in I.
bool is_face_of(const std::vector<ZVec>& inter_rays, const std::vector<ZVec>& gens,
                const ConeHRep& h, int dim) {
    for (const ZVec& r : inter_rays)
        if (!cone_contains(h, r)) return false; // not even contained
    std::vector<const ZVec*> tight;
    for (const ZVec& a : h.ineqs) {
        bool all_zero = true;
        for (const ZVec& r : inter_rays)
            if (dot(a, r) != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) tight.push_back(&a);
    }
    // generators on every tight hyperplane span the face; all must lie in I
    for (const ZVec& g : gens) {
        bool on_face = true;
        for (const ZVec* a : tight)
            if (dot(*a, g) != 0) {
                on_face = false;
                break;
            }
        if (!on_face) continue;
        if (!in_cone_of(inter_rays.empty() ? std::vector<ZVec>{ZVec(dim, Int(0))} : inter_rays,
                        g, dim))
            return false;
    }
    return true;
}

} // namespace

FanCheck validate_fan(const Fan& f) {
    auto fail = [](std::string reason) { return FanCheck{false, std::move(reason)}; };
    if (f.dim < 1) return fail("ambient dimension must be positive");
    if (f.rays.empty()) return fail("fan has no rays");
    for (size_t i = 0; i < f.rays.size(); ++i) {
        if ((int)f.rays[i].size() != f.dim)
            return fail("ray " + std::to_string(i) + " has wrong dimension");
        if (is_zero(f.rays[i])) return fail("ray " + std::to_string(i) + " is zero");
        if (f.rays[i] != primitivize(f.rays[i]))
            return fail("ray " + std::to_string(i) + " is not primitive");
        for (size_t j = 0; j < i; ++j)
            if (f.rays[i] == f.rays[j])
                return fail("rays " + std::to_string(j) + " and " + std::to_string(i) +
                            " coincide");
    }
    if (rank_int(f.rays) != f.dim)
        return fail("rays do not span the ambient space (torus factor rejected)");
    if (f.max_cones.empty()) return fail("fan has no maximal cones");

    std::vector<bool> used(f.rays.size(), false);
    for (size_t c = 0; c < f.max_cones.size(); ++c) {
        const auto& idx = f.max_cones[c];
        if (idx.empty()) return fail("max cone " + std::to_string(c) + " is empty");
        for (size_t j = 0; j < idx.size(); ++j) {
            if (idx[j] < 0 || idx[j] >= (int)f.rays.size())
                return fail("max cone " + std::to_string(c) + " has ray index out of range");
            if (j && idx[j] <= idx[j - 1])
                return fail("max cone " + std::to_string(c) + " indices not strictly sorted");
            used[idx[j]] = true;
        }
    }
    for (size_t i = 0; i < f.rays.size(); ++i)
        if (!used[i]) return fail("ray " + std::to_string(i) + " belongs to no max cone");

    std::vector<ConeHRep> hreps(f.max_cones.size());
    for (size_t c = 0; c < f.max_cones.size(); ++c) {
        auto gens = cone_generators(f, (int)c);
        if (!cone_pointed(gens, f.dim))
            return fail(cone_name(f, (int)c) + " is not strongly convex");
        for (size_t j = 0; j < gens.size(); ++j) {
            std::vector<ZVec> others;
            for (size_t i = 0; i < gens.size(); ++i)
                if (i != j) others.push_back(gens[i]);
            if (!others.empty() && in_cone_of(others, gens[j], f.dim))
                return fail("ray " + std::to_string(f.max_cones[c][j]) +
                            " is not an extreme generator of " + cone_name(f, (int)c));
        }
        hreps[c] = cone_hrep(f, (int)c);
    }
    for (size_t a = 0; a < f.max_cones.size(); ++a)
        for (size_t b = a + 1; b < f.max_cones.size(); ++b) {
            if (f.max_cones[a] == f.max_cones[b])
                return fail("max cones " + std::to_string(a) + " and " + std::to_string(b) +
                            " coincide");
            auto inter = intersection_rays(hreps[a], hreps[b], f.dim);
            if (!is_face_of(inter, cone_generators(f, (int)a), hreps[a], f.dim) ||
                !is_face_of(inter, cone_generators(f, (int)b), hreps[b], f.dim))
                return fail("intersection of " + cone_name(f, (int)a) + " and " +
                            cone_name(f, (int)b) + " is not a common face");
        }
    return FanCheck{};
}

void require_valid(const Fan& f) {
    FanCheck c = validate_fan(f);
    if (!c.valid) throw DomainError("invalid fan: " + c.reason);
}

namespace {

// facet key: sorted global ray indices lying on the facet
std::vector<std::vector<int>> cone_facet_keys(const Fan& f, int ci, const ConeHRep& h) {
    std::vector<std::vector<int>> keys;
    for (const ZVec& a : h.ineqs) {
        std::vector<int> key;
        for (int i : f.max_cones[ci])
            if (dot(a, f.rays[i]) == 0) key.push_back(i);
        keys.push_back(std::move(key));
    }
    return keys;
}

} // namespace

bool is_complete(const Fan& f) {
    std::map<std::vector<int>, std::vector<int>> facet_owners;
    for (size_t c = 0; c < f.max_cones.size(); ++c) {
        auto gens = cone_generators(f, (int)c);
        if (rank_int(gens) != f.dim) return false; // lower-dimensional max cone
        ConeHRep h = cone_hrep(f, (int)c);
        for (auto& key : cone_facet_keys(f, (int)c, h)) facet_owners[key].push_back((int)c);
    }
    for (const auto& [key, owners] : facet_owners)
        if (owners.size() != 2) return false;
    // facet-graph connectivity
    const int n = (int)f.max_cones.size();
    std::vector<int> comp(n, -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    std::multimap<int, int> adj;
    for (const auto& [key, owners] : facet_owners) {
        adj.insert({owners[0], owners[1]});
        adj.insert({owners[1], owners[0]});
    }
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        auto [lo, hi] = adj.equal_range(c);
        for (auto it = lo; it != hi; ++it)
            if (comp[it->second] < 0) {
                comp[it->second] = 0;
                stack.push_back(it->second);
            }
    }
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

std::vector<int> locate(const Fan& f, const QVec& u) {
    if ((int)u.size() != f.dim) throw DomainError("locate: dimension mismatch");
    std::vector<int> out;
    for (size_t c = 0; c < f.max_cones.size(); ++c)
        if (cone_contains(cone_hrep(f, (int)c), u)) out.push_back((int)c);
    return out;
}

std::vector<int> locate(const Fan& f, const ZVec& u) { return locate(f, to_qvec(u)); }

std::vector<Wall> fan_walls(const Fan& f) {
    std::map<std::vector<int>, std::vector<int>> facet_owners;
    for (size_t c = 0; c < f.max_cones.size(); ++c) {
        ConeHRep h = cone_hrep(f, (int)c);
        for (auto& key : cone_facet_keys(f, (int)c, h)) facet_owners[key].push_back((int)c);
    }
    std::vector<Wall> out;
    for (const auto& [key, owners] : facet_owners)
        if (owners.size() == 2) out.push_back(Wall{owners[0], owners[1], key});
    return out;
}

Fan refine_by_polytope(const Fan& f, const VPolyhedron& q) {
    require_valid(f);
    if (!q.rays.empty()) throw DomainError("refine_by_polytope: polytope is unbounded");
    if (q.vertices.empty()) throw DomainError("refine_by_polytope: polytope is empty");
    HPolyhedron qh = dual_description(q);
    if ((int)q.vertices.size() <= f.dim)
        throw DomainError("refine_by_polytope: polytope is not full-dimensional");
    for (const auto& hs : qh.ineqs) {
        if (hs.rhs >= 0)
            throw DomainError("refine_by_polytope: 0 not interior to the polytope (direction " +
                              vec_str(hs.normal) + ")");
    }
    {
        QMatrix diffs;
        for (size_t i = 1; i < q.vertices.size(); ++i) {
            QVec d(f.dim);
            for (int j = 0; j < f.dim; ++j) d[j] = q.vertices[i][j] - q.vertices[0][j];
            diffs.push_back(std::move(d));
        }
        if (rank(std::move(diffs)) != f.dim)
            throw DomainError("refine_by_polytope: polytope is not full-dimensional");
    }

    // cones over the facets of q
    std::vector<ConeHRep> facet_cones;
    for (const auto& hs : qh.ineqs) {
        std::vector<ZVec> gens;
        for (const QVec& v : q.vertices)
            if (dot(hs.normal, v) == hs.rhs) gens.push_back(primitive_direction(v));
        facet_cones.push_back(cone_hrep_of_generators(gens, f.dim));
    }

    std::set<std::vector<ZVec>> piece_keys;
    std::vector<std::vector<ZVec>> pieces;
    for (size_t c = 0; c < f.max_cones.size(); ++c) {
        ConeHRep sigma = cone_hrep(f, (int)c);
        for (const ConeHRep& fc : facet_cones) {
            ZMatrix rows;
            for (const ZVec& a : sigma.ineqs) rows.push_back(a);
            for (const ZVec& a : fc.ineqs) rows.push_back(a);
            auto feed_eqs = [&](const ZMatrix& eqs) {
                for (const ZVec& e : eqs) {
                    rows.push_back(e);
                    ZVec neg(e.size());
                    for (size_t j = 0; j < e.size(); ++j) neg[j] = -e[j];
                    rows.push_back(std::move(neg));
                }
            };
            feed_eqs(sigma.eqs);
            feed_eqs(fc.eqs);
            ConeDescription cd = cone_extreme_rays(rows, f.dim);
            if (!cd.lines.empty())
                throw InternalInconsistency("refine_by_polytope: piece with lineality");
            if (rank_int(cd.rays) != f.dim) continue; // lower-dimensional piece
            if (piece_keys.insert(cd.rays).second) pieces.push_back(cd.rays);
        }
    }

    Fan out;
    out.dim = f.dim;
    out.rays = f.rays;
    std::map<ZVec, int> ray_index;
    for (size_t i = 0; i < f.rays.size(); ++i) ray_index[f.rays[i]] = (int)i;
    std::vector<ZVec> new_rays;
    for (const auto& piece : pieces)
        for (const ZVec& r : piece)
            if (!ray_index.count(r)) new_rays.push_back(r);
    std::sort(new_rays.begin(), new_rays.end(),
              [](const ZVec& a, const ZVec& b) { return lex_less(a, b); });
    new_rays.erase(std::unique(new_rays.begin(), new_rays.end()), new_rays.end());
    for (const ZVec& r : new_rays) {
        ray_index[r] = (int)out.rays.size();
        out.rays.push_back(r);
    }
    for (const auto& piece : pieces) {
        std::vector<int> idx;
        for (const ZVec& r : piece) idx.push_back(ray_index.at(r));
        std::sort(idx.begin(), idx.end());
        out.max_cones.push_back(std::move(idx));
    }
    std::sort(out.max_cones.begin(), out.max_cones.end());
    out.max_cones.erase(std::unique(out.max_cones.begin(), out.max_cones.end()),
                        out.max_cones.end());
    {
        FanCheck c = validate_fan(out);
        if (!c.valid)
            throw InternalInconsistency("refine_by_polytope produced an invalid fan: " + c.reason);
    }
    return out;
}

int containing_cone(const Fan& coarse, const Fan& fine, int ci) {
    auto gens = cone_generators(fine, ci);
    for (size_t c = 0; c < coarse.max_cones.size(); ++c) {
        ConeHRep h = cone_hrep(coarse, (int)c);
        bool all = true;
        for (const ZVec& g : gens)
            if (!cone_contains(h, g)) {
                all = false;
                break;
            }
        if (all) return (int)c;
    }
    return -1;
}

bool is_refinement_small(const Fan& f, const Fan& f2) {
    for (size_t c = 0; c < f2.max_cones.size(); ++c)
        if (containing_cone(f, f2, (int)c) < 0)
            throw UsageError("is_refinement_small: second fan does not refine the first (cone " +
                             std::to_string(c) + ")");
    std::set<ZVec> a(f.rays.begin(), f.rays.end());
    std::set<ZVec> b(f2.rays.begin(), f2.rays.end());
    return a == b;
}

} // namespace toridiv
