#include "toridiv/mld.hpp"

#include <algorithm>

namespace toridiv {

namespace {

// min{<m, u> : <m, u_rho> >= d_rho, rho in sigma(1)} for one containing cone
LpOptimal pullback_lp(const Fan& f, const ToricDivisor& d, const ZVec& u, int ci) {
    HPolyhedron region;
    region.dim = f.dim;
    for (int i : f.max_cones[ci])
        region.ineqs.push_back({to_qvec(f.rays[i]), d.coeffs[i]});
    LpOutcome o = lp_minimize(to_qvec(u), region);
    if (std::holds_alternative<LpUnbounded>(o))
        throw InternalInconsistency("pullback LP unbounded for a query inside the cone");
    if (std::holds_alternative<LpInfeasible>(o))
        throw InternalInconsistency("pullback LP infeasible on a full-dimensional cone");
    return std::get<LpOptimal>(std::move(o));
}

} // namespace

PullbackResult dfh_pullback(const Fan& f, const ToricDivisor& d,
                            const std::vector<ZVec>& queries) {
    check_divisor(f, d);
    PullbackResult out;
    for (const ZVec& u : queries) {
        if ((int)u.size() != f.dim) throw DomainError("pullback query has wrong dimension");
        if (is_zero(u) || u != primitivize(u))
            throw DomainError("pullback query " + vec_str(u) + " is not primitive");
        std::vector<int> cones = locate(f, u);
        if (cones.empty())
            throw DomainError("pullback query " + vec_str(u) + " is outside the fan support");
        PullbackEntry e;
        e.query = u;
        e.cone = cones[0];
        LpOptimal first = pullback_lp(f, d, u, cones[0]);
        for (size_t t = 1; t < cones.size(); ++t) {
            LpOptimal other = pullback_lp(f, d, u, cones[t]);
            if (other.value != first.value)
                throw InternalInconsistency("pullback coefficient depends on the containing cone");
        }
        e.coefficient = first.value;
        e.optimizer = std::move(first.point);
        out.entries.push_back(std::move(e));
    }
    return out;
}

Rat finite_level_valuation(const Fan& f, const ToricDivisor& d, const ZVec& u, int k) {
    check_divisor(f, d);
    if (!d.is_integral()) throw DomainError("finite_level_valuation: divisor must be integral");
    if (k < 1) throw UsageError("finite_level_valuation: level must be positive");
    std::vector<int> cones = locate(f, u);
    if (cones.empty())
        throw DomainError("finite_level_valuation: query outside the fan support");
    // module of -kD on the containing cone: {m : <m, u_rho> >= k d_rho}
    ToricDivisor neg = scale_divisor(d, Rat(-k));
    LocalModule mod = local_generators(f, neg, cones[0]);
    bool any = false;
    Rat best(0);
    for (const ZVec& g : mod.generators) {
        Rat v = Rat(dot(g, u));
        if (!any || v < best) {
            best = v;
            any = true;
        }
    }
    if (!any) throw InternalInconsistency("finite_level_valuation: empty local module");
    return best / Rat(k);
}

RelativeCanonicalValue relative_canonical(const Fan& f, const ZVec& u) {
    if ((int)u.size() != f.dim) throw DomainError("relative_canonical: dimension mismatch");
    if (is_zero(u) || u != primitivize(u))
        throw DomainError("relative_canonical: " + vec_str(u) + " is not primitive");
    ToricDivisor kx = canonical_divisor(f);            // all coefficients -1
    ToricDivisor minus_kx = scale_divisor(kx, Rat(-1)); // all +1
    RelativeCanonicalValue out;
    out.u = u;
    Rat plus_lp = dfh_pullback(f, minus_kx, {u}).entries[0].coefficient;
    Rat minus_lp = dfh_pullback(f, kx, {u}).entries[0].coefficient;
    out.val_plus = Rat(-1) + plus_lp;
    out.val_minus = Rat(-1) - minus_lp;
    if (out.val_plus < out.val_minus)
        throw InternalInconsistency("relative_canonical: val+ < val- at " + vec_str(u));
    out.exceptional = std::find(f.rays.begin(), f.rays.end(), u) == f.rays.end();
    return out;
}

BoundaryLp boundary_inf_valuation(const Fan& f, const QVec& objective) {
    if (f.max_cones.size() != 1)
        throw DomainError("boundary_inf_valuation: needs a single-max-cone affine fan");
    if ((int)objective.size() != f.dim)
        throw DomainError("boundary_inf_valuation: objective dimension mismatch");
    HPolyhedron region;
    region.dim = f.dim;
    for (const ZVec& ray : f.rays) {
        QVec nu = to_qvec(ray);
        region.ineqs.push_back({nu, Rat(1)}); // <m, u_i> >= 1
        QVec neg(nu.size());
        for (size_t j = 0; j < nu.size(); ++j) neg[j] = -nu[j];
        region.ineqs.push_back({neg, Rat(-2)}); // <m, u_i> <= 2
    }
    LpOutcome o = lp_minimize(objective, region);
    BoundaryLp out;
    if (std::holds_alternative<LpUnbounded>(o)) {
        out.bounded = false;
        return out;
    }
    if (std::holds_alternative<LpInfeasible>(o))
        throw DomainError("boundary_inf_valuation: no boundary exists (constraints infeasible)");
    LpOptimal opt = std::get<LpOptimal>(std::move(o));
    out.value = std::move(opt.value);
    out.optimizer = std::move(opt.point);
    return out;
}

MldReport mld_search(const Fan& f, int bound, MldKind which) {
    if (bound < 1) throw UsageError("mld_search: bound must be positive");
    MldReport rep;
    rep.bound = bound;
    rep.which = which;
    ZVec u(f.dim, Int(0));
    auto consider = [&](const ZVec& v) {
        if (is_zero(v)) return;
        if (v != primitivize(v)) return;
        if (locate(f, v).empty()) return;
        RelativeCanonicalValue rc = relative_canonical(f, v);
        rep.rows.push_back(MldReport::Row{v, rc.val_plus, rc.val_minus, rc.exceptional});
        const Rat& val = (which == MldKind::Plus) ? rc.val_plus : rc.val_minus;
        if (!rep.any || val < rep.min_all) {
            rep.any = true;
            rep.min_all = val;
            rep.argmin_all = v;
        }
        if (rc.exceptional && (!rep.any_exceptional || val < rep.min_exceptional)) {
            rep.any_exceptional = true;
            rep.min_exceptional = val;
            rep.argmin_exceptional = v;
        }
    };
    auto rec = [&](auto&& self, int c) -> void {
        if (c == f.dim) {
            consider(u);
            return;
        }
        for (long v = -bound; v <= bound; ++v) {
            u[c] = v;
            self(self, c + 1);
        }
    };
    rec(rec, 0);
    return rep;
}

Fan acc_family_fan(long a) {
    if (a < 1) throw DomainError("acc_family_fan: parameter must be a positive integer");
    Fan f;
    f.dim = 3;
    f.rays = {ZVec{2, -1, 0}, ZVec{2, 0, 1}, ZVec{1, 1, 1}, ZVec{Int(a), 1, 0}};
    f.max_cones = {{0, 1, 2, 3}};
    FanCheck c = validate_fan(f);
    if (!c.valid) throw InternalInconsistency("acc_family_fan: " + c.reason);
    return f;
}

ZVec acc_family_ue() { return ZVec{5, 0, 2}; }

std::vector<AccRow> acc_family(const std::vector<long>& a_values) {
    std::vector<AccRow> rows;
    const ZVec ue = acc_family_ue();
    for (long a : a_values) {
        Fan f = acc_family_fan(a);
        ToricDivisor kx = canonical_divisor(f);
        CartierStatus st = cartier_status(f, kx);
        if (st.is_qcartier())
            throw InternalInconsistency(
                "acc_family: the canonical divisor of the family member is Q-Cartier");
        AccRow row;
        row.a = a;
        QVec obj = to_qvec(ue);
        row.boundary_lp = boundary_inf_valuation(f, obj).value;
        QVec literal = obj;
        literal[f.dim - 1] = -literal[f.dim - 1];
        row.boundary_lp_literal = boundary_inf_valuation(f, literal).value;
        row.defn_lp = dfh_pullback(f, scale_divisor(kx, Rat(-1)), {ue}).entries[0].coefficient;
        row.val_plus = row.defn_lp - 1;
        row.closed_form = make_rat(Int(4 * a + 5), Int(a + 2));
        rows.push_back(std::move(row));
    }
    return rows;
}

AccLimits acc_family_limits() {
    // rays u_1, u_2, u_3 of the family; the a-row degenerates to x = 0 in the
    // two-sided system (ax + y <= 2 forces x <= 4/a) and to x >= 0 one-sided
    const std::vector<ZVec> rays = {ZVec{2, -1, 0}, ZVec{2, 0, 1}, ZVec{1, 1, 1}};
    const ZVec ue = acc_family_ue();
    AccLimits out;

    HPolyhedron boundary;
    boundary.dim = 3;
    for (const ZVec& u : rays) {
        QVec nu = to_qvec(u);
        boundary.ineqs.push_back({nu, Rat(1)});
        QVec neg(nu.size());
        for (size_t j = 0; j < nu.size(); ++j) neg[j] = -nu[j];
        boundary.ineqs.push_back({neg, Rat(-2)});
    }
    QVec ex{Rat(1), Rat(0), Rat(0)};
    QVec nex{Rat(-1), Rat(0), Rat(0)};
    boundary.ineqs.push_back({ex, Rat(0)});
    boundary.ineqs.push_back({nex, Rat(0)});

    QVec obj = to_qvec(ue);
    out.boundary_lp = std::get<LpOptimal>(lp_minimize(obj, boundary)).value;
    QVec literal = obj;
    literal[2] = -literal[2];
    out.boundary_lp_literal = std::get<LpOptimal>(lp_minimize(literal, boundary)).value;

    HPolyhedron defn;
    defn.dim = 3;
    for (const ZVec& u : rays) defn.ineqs.push_back({to_qvec(u), Rat(1)});
    defn.ineqs.push_back({ex, Rat(0)});
    out.defn_lp = std::get<LpOptimal>(lp_minimize(obj, defn)).value;
    return out;
}

} // namespace toridiv
