#include "toridiv/divisor.hpp"

#include <algorithm>
#include <set>

namespace toridiv {

ToricDivisor scale_divisor(const ToricDivisor& d, const Rat& factor) {
    ToricDivisor out;
    out.coeffs.reserve(d.coeffs.size());
    for (const Rat& c : d.coeffs) out.coeffs.push_back(c * factor);
    return out;
}

ToricDivisor add_divisors(const ToricDivisor& a, const ToricDivisor& b) {
    if (a.coeffs.size() != b.coeffs.size())
        throw DomainError("divisor sum: coefficient counts differ");
    ToricDivisor out;
    out.coeffs.reserve(a.coeffs.size());
    for (size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs.push_back(a.coeffs[i] + b.coeffs[i]);
    return out;
}

ToricDivisor canonical_divisor(const Fan& f) {
    return ToricDivisor{QVec(f.rays.size(), Rat(-1))};
}

void check_divisor(const Fan& f, const ToricDivisor& d) {
    if (d.coeffs.size() != f.rays.size())
        throw DomainError("divisor has " + std::to_string(d.coeffs.size()) +
                          " coefficients for a fan with " + std::to_string(f.rays.size()) +
                          " rays");
}

HPolyhedron polytope_PD(const Fan& f, const ToricDivisor& d) {
    check_divisor(f, d);
    HPolyhedron p;
    p.dim = f.dim;
    for (size_t i = 0; i < f.rays.size(); ++i)
        p.ineqs.push_back({to_qvec(f.rays[i]), -d.coeffs[i]});
    return p;
}

CartierStatus cartier_status(const Fan& f, const ToricDivisor& d) {
    check_divisor(f, d);
    CartierStatus st;
    st.kind = CartierStatus::Kind::Cartier;
    std::vector<Int> cone_index;
    for (size_t c = 0; c < f.max_cones.size(); ++c) {
        ZMatrix a;
        QVec b;
        for (int i : f.max_cones[c]) {
            a.push_back(f.rays[i]);
            b.push_back(-d.coeffs[i]);
        }
        auto scaled = minimal_integral_scaling(a, b); // smallest k with <m,u> = -k d solvable in M
        if (!scaled) {
            st.kind = CartierStatus::Kind::NotQCartier;
            st.witness_cone = (int)c;
            st.index = 0;
            st.data.clear();
            st.rational_data.clear();
            return st;
        }
        cone_index.push_back(scaled->k);
        QVec rat(f.dim);
        for (int j = 0; j < f.dim; ++j) rat[j] = make_rat(scaled->x[j], scaled->k);
        st.rational_data.push_back(std::move(rat));
    }
    Int k(1);
    for (const Int& ki : cone_index) k = lcm(k, ki);
    st.index = k;
    if (k != 1) st.kind = CartierStatus::Kind::QCartier;
    for (const QVec& rat : st.rational_data) {
        ZVec m(f.dim);
        for (int j = 0; j < f.dim; ++j) {
            Rat e = rat[j] * Rat(k);
            if (denominator(e) != 1)
                throw InternalInconsistency("cartier_status: scaled data not integral");
            m[j] = numerator(e);
        }
        st.data.push_back(std::move(m));
    }
    return st;
}

std::vector<ZVec> dual_cone_hilbert_basis(const Fan& f, int ci) {
    auto gens = cone_generators(f, ci);
    if (rank_int(gens) != f.dim)
        throw DomainError("dual cone Hilbert basis needs a full-dimensional cone");
    // sigma_dual = {m : <m, u> >= 0 for u in sigma(1)}; its extreme rays come
    // out of the double description of that inequality system
    ConeDescription cd = cone_extreme_rays(gens, f.dim);
    return hilbert_basis(cd.rays, f.dim);
}

LocalModule local_generators_with_hb(const Fan& f, const ToricDivisor& d, int ci,
                                     const std::vector<ZVec>& dual_hb) {
    check_divisor(f, d);
    if (!d.is_integral()) throw DomainError("local_generators: divisor must be integral");
    auto gens = cone_generators(f, ci);
    if (rank_int(gens) != f.dim)
        throw DomainError("local_generators: cone is not full-dimensional");

    const auto& idx = f.max_cones[ci];
    const int r = (int)idx.size();
    // module constraints <m, u_rho> >= -d_rho over sigma(1)
    auto in_module = [&](const ZVec& m) {
        for (int t = 0; t < r; ++t)
            if (Rat(dot(f.rays[idx[t]], m)) < -d.coeffs[idx[t]]) return false;
        return true;
    };

    // candidate box: slack_rho in [0, B_rho], B_rho = max_h <h, u_rho>
    HPolyhedron box;
    box.dim = f.dim;
    for (int t = 0; t < r; ++t) {
        const ZVec& u = f.rays[idx[t]];
        Int bound(0);
        for (const ZVec& h : dual_hb) bound = std::max(bound, dot(h, u));
        QVec nu = to_qvec(u);
        box.ineqs.push_back({nu, -d.coeffs[idx[t]]});
        QVec neg(nu.size());
        for (size_t j = 0; j < nu.size(); ++j) neg[j] = -nu[j];
        box.ineqs.push_back({neg, d.coeffs[idx[t]] - Rat(bound)});
    }
    std::vector<ZVec> candidates = lattice_points(box);

    ConeHRep dual_hrep; // sigma_dual: <m, u_rho> >= 0
    for (int t = 0; t < r; ++t) dual_hrep.ineqs.push_back(f.rays[idx[t]]);

    LocalModule mod;
    mod.cone = ci;
    for (const ZVec& m : candidates) {
        bool reducible = false;
        for (const ZVec& h : dual_hb) {
            ZVec diff(m.size());
            for (size_t j = 0; j < m.size(); ++j) diff[j] = m[j] - h[j];
            if (in_module(diff)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) mod.generators.push_back(m);
    }
    std::sort(mod.generators.begin(), mod.generators.end(),
              [](const ZVec& a, const ZVec& b) { return lex_less(a, b); });

    // verification pass: every module point with total slack <= 2 * the largest
    // candidate total slack must decompose as generator + semigroup element
    Rat max_slack(0);
    for (const ZVec& m : mod.generators) {
        Rat s(0);
        for (int t = 0; t < r; ++t) s += Rat(dot(f.rays[idx[t]], m)) + d.coeffs[idx[t]];
        max_slack = std::max(max_slack, s);
    }
    HPolyhedron region;
    region.dim = f.dim;
    QVec slack_sum(f.dim, Rat(0));
    Rat slack_base(0);
    for (int t = 0; t < r; ++t) {
        const ZVec& u = f.rays[idx[t]];
        region.ineqs.push_back({to_qvec(u), -d.coeffs[idx[t]]});
        for (int j = 0; j < f.dim; ++j) slack_sum[j] += Rat(u[j]);
        slack_base += d.coeffs[idx[t]];
    }
    // sum of slacks <= 2 * max_slack, i.e. <-sum u_rho, m> >= sum d_rho - 2 max_slack
    QVec neg(slack_sum.size());
    for (size_t j = 0; j < slack_sum.size(); ++j) neg[j] = -slack_sum[j];
    region.ineqs.push_back({neg, slack_base - Rat(2) * max_slack});
    for (const ZVec& m : lattice_points(region)) {
        bool expressible = false;
        for (const ZVec& g : mod.generators) {
            ZVec diff(m.size());
            for (size_t j = 0; j < m.size(); ++j) diff[j] = m[j] - g[j];
            if (!cone_contains(dual_hrep, diff)) continue;
            if (semigroup_member(diff, dual_hb, dual_hrep)) {
                expressible = true;
                break;
            }
        }
        if (!expressible)
            throw InternalInconsistency("local_generators: enumeration incomplete at " +
                                        vec_str(m));
    }

    // simplicial bound: generator count <= lattice index of the ray sublattice
    if (r == f.dim) {
        ZMatrix sq(r);
        for (int t = 0; t < r; ++t) sq[t] = f.rays[idx[t]];
        Int index = abs(det(sq));
        if (Int((long)mod.generators.size()) > index)
            throw InternalInconsistency("local_generators: simplicial generator bound violated");
    }
    return mod;
}

LocalModule local_generators(const Fan& f, const ToricDivisor& d, int ci) {
    return local_generators_with_hb(f, d, ci, dual_cone_hilbert_basis(f, ci));
}

GgResult is_globally_generated(const Fan& f, const ToricDivisor& d) {
    check_divisor(f, d);
    if (!d.is_integral()) throw DomainError("is_globally_generated: divisor must be integral");
    if (!is_complete(f)) throw DomainError("is_globally_generated: fan must be complete");
    HPolyhedron pd = polytope_PD(f, d);
    for (size_t c = 0; c < f.max_cones.size(); ++c) {
        LocalModule mod = local_generators(f, d, (int)c);
        for (const ZVec& g : mod.generators)
            if (!contains(pd, to_qvec(g))) return GgResult{false, (int)c, g};
    }
    return GgResult{};
}

std::vector<ZVec> global_sections(const Fan& f, const ToricDivisor& d) {
    check_divisor(f, d);
    if (!d.is_integral()) throw DomainError("global_sections: divisor must be integral");
    if (!is_complete(f)) throw DomainError("global_sections: fan must be complete");
    return lattice_points(polytope_PD(f, d));
}

std::vector<Int> section_hilbert_function(const Fan& f, const ToricDivisor& d, int m_max) {
    check_divisor(f, d);
    if (!d.is_integral())
        throw DomainError("section_hilbert_function: divisor must be integral");
    if (!is_complete(f)) throw DomainError("section_hilbert_function: fan must be complete");
    if (m_max < 0) throw UsageError("section_hilbert_function: m_max must be >= 0");
    std::vector<Int> counts;
    for (int m = 0; m <= m_max; ++m) {
        ToricDivisor md = scale_divisor(d, Rat(m));
        counts.push_back(Int((long)lattice_points(polytope_PD(f, md)).size()));
    }
    return counts;
}

} // namespace toridiv
