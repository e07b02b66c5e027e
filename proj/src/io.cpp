#include "toridiv/io.hpp"

#include <fstream>

namespace toridiv {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw UsageError("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

json rat_to_json(const Rat& r) { return rat_str(r); }

Rat rat_from_json(const json& j) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    throw UsageError("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

namespace {

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        Rat r = parse_rat(j.get<std::string>());
        if (denominator(r) != 1) throw UsageError("expected an integer, got " + j.dump());
        return numerator(r);
    }
    throw UsageError("expected an integer, got " + j.dump());
}

ZVec zvec_from_json(const json& j) {
    if (!j.is_array()) throw UsageError("expected an array of integers, got " + j.dump());
    ZVec v;
    for (const auto& e : j) v.push_back(int_from_json(e));
    return v;
}

json zvec_to_json(const ZVec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(x.str());
    return a;
}

QVec qvec_from_json(const json& j) {
    if (!j.is_array()) throw UsageError("expected an array of rationals, got " + j.dump());
    QVec v;
    for (const auto& e : j) v.push_back(rat_from_json(e));
    return v;
}

json qvec_to_json(const QVec& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(rat_str(x));
    return a;
}

} // namespace

json fan_to_json(const Fan& f) {
    json j;
    j["dim"] = f.dim;
    json rays = json::array();
    for (const ZVec& r : f.rays) {
        json row = json::array();
        for (const Int& x : r) {
            if (x >= Int(std::numeric_limits<long long>::min()) &&
                x <= Int(std::numeric_limits<long long>::max()))
                row.push_back((long long)x);
            else
                row.push_back(x.str());
        }
        rays.push_back(std::move(row));
    }
    j["rays"] = std::move(rays);
    j["max_cones"] = f.max_cones;
    return j;
}

Fan fan_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("rays") || !j.contains("max_cones"))
        throw UsageError("fan JSON needs fields dim, rays, max_cones");
    Fan f;
    if (!j["dim"].is_number_integer()) throw UsageError("fan dim must be an integer");
    f.dim = j["dim"].get<int>();
    for (const auto& r : j["rays"]) f.rays.push_back(zvec_from_json(r));
    for (const auto& c : j["max_cones"]) {
        if (!c.is_array()) throw UsageError("max_cones entries must be arrays of ray indices");
        std::vector<int> idx;
        for (const auto& e : c) {
            if (!e.is_number_integer()) throw UsageError("ray indices must be integers");
            idx.push_back(e.get<int>());
        }
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        f.max_cones.push_back(std::move(idx));
    }
    return f;
}

json divisor_to_json(const ToricDivisor& d) {
    json j;
    j["coeffs"] = qvec_to_json(d.coeffs);
    return j;
}

ToricDivisor divisor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coeffs"))
        throw UsageError("divisor JSON needs field coeffs");
    return ToricDivisor{qvec_from_json(j["coeffs"])};
}

json hpoly_to_json(const HPolyhedron& p) {
    json j;
    j["dim"] = p.dim;
    json rows = json::array();
    for (const auto& h : p.ineqs) {
        json row;
        row["normal"] = qvec_to_json(h.normal);
        row["rhs"] = rat_str(h.rhs);
        rows.push_back(std::move(row));
    }
    j["inequalities"] = std::move(rows);
    return j;
}

HPolyhedron hpoly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("inequalities"))
        throw UsageError("H-polyhedron JSON needs fields dim, inequalities");
    HPolyhedron p;
    p.dim = j["dim"].get<int>();
    for (const auto& row : j["inequalities"]) {
        if (!row.contains("normal") || !row.contains("rhs"))
            throw UsageError("inequality needs normal and rhs");
        Halfspace h{qvec_from_json(row["normal"]), rat_from_json(row["rhs"])};
        if ((int)h.normal.size() != p.dim) throw UsageError("inequality normal has wrong length");
        if (is_zero(h.normal)) throw UsageError("inequality normal must be nonzero");
        p.ineqs.push_back(std::move(h));
    }
    return p;
}

json vpoly_to_json(const VPolyhedron& p) {
    json j;
    j["dim"] = p.dim;
    json vs = json::array();
    for (const QVec& v : p.vertices) vs.push_back(qvec_to_json(v));
    j["vertices"] = std::move(vs);
    json rs = json::array();
    for (const ZVec& r : p.rays) rs.push_back(zvec_to_json(r));
    j["rays"] = std::move(rs);
    return j;
}

VPolyhedron vpoly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
        throw UsageError("V-polyhedron JSON needs fields dim, vertices");
    VPolyhedron p;
    p.dim = j["dim"].get<int>();
    for (const auto& v : j["vertices"]) p.vertices.push_back(qvec_from_json(v));
    if (j.contains("rays"))
        for (const auto& r : j["rays"]) p.rays.push_back(zvec_from_json(r));
    return p;
}

json cartier_status_to_json(const CartierStatus& st) {
    json j;
    switch (st.kind) {
        case CartierStatus::Kind::Cartier: j["variant"] = "Cartier"; break;
        case CartierStatus::Kind::QCartier: j["variant"] = "QCartier"; break;
        case CartierStatus::Kind::NotQCartier: j["variant"] = "NotQCartier"; break;
    }
    if (st.is_qcartier()) {
        j["index"] = st.index.str();
        json data = json::array();
        for (const ZVec& m : st.data) data.push_back(zvec_to_json(m));
        j["data"] = std::move(data);
        json rat = json::array();
        for (const QVec& m : st.rational_data) rat.push_back(qvec_to_json(m));
        j["rational_data"] = std::move(rat);
    } else {
        j["witness_cone"] = st.witness_cone;
    }
    return j;
}

json qcartierization_to_json(const QCartierization& qc) {
    json j;
    j["fan_prime"] = fan_to_json(qc.fan_prime);
    j["dbar"] = divisor_to_json(qc.dbar);
    j["dbar_status"] = cartier_status_to_json(qc.dbar_status);
    j["small"] = qc.small;
    json walls = json::array();
    for (const WallCrossing& w : qc.walls) {
        json wj;
        wj["cones"] = json::array({w.cone_a, w.cone_b});
        wj["wall_rays"] = w.wall_rays;
        wj["test_ray"] = w.test_ray;
        wj["value"] = rat_str(w.value);
        wj["extracted"] = w.extracted;
        walls.push_back(std::move(wj));
    }
    j["walls"] = std::move(walls);
    return j;
}

std::vector<ZVec> queries_from_json(const json& j, int dim) {
    const json* arr = nullptr;
    if (j.is_array()) arr = &j;
    else if (j.is_object() && j.contains("queries")) arr = &j["queries"];
    else throw UsageError("queries JSON must be an array or {\"queries\": [...]}");
    std::vector<ZVec> out;
    for (const auto& q : *arr) {
        ZVec v = zvec_from_json(q);
        if ((int)v.size() != dim) throw UsageError("query vector has wrong dimension");
        out.push_back(std::move(v));
    }
    return out;
}

std::string rat_decimal(const Rat& r, int digits) {
    Int num = numerator(r);
    Int den = denominator(r);
    bool neg = num < 0;
    if (neg) num = -num;
    Int whole = num / den;
    Int rem = num % den;
    std::string s = (neg ? "-" : "") + whole.str();
    if (digits > 0) {
        s += ".";
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            Int digit = rem / den;
            s += digit.str();
            rem %= den;
        }
    }
    return s;
}

} // namespace toridiv
