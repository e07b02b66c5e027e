#include "toridiv/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace toridiv {

// ---------------------------------------------------------------------------
// scalars and vectors
// ---------------------------------------------------------------------------

Rat make_rat(Int num, Int den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Rat r(num);
    r /= Rat(den);
    return r;
}

Rat parse_rat(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    // normalize U+2212 minus to ASCII
    for (size_t i = 0; i < text.size();) {
        if (i + 2 < text.size() && (unsigned char)text[i] == 0xE2 &&
            (unsigned char)text[i + 1] == 0x88 && (unsigned char)text[i + 2] == 0x92) {
            s.push_back('-');
            i += 3;
        } else {
            s.push_back(text[i]);
            ++i;
        }
    }
    bool neg = false;
    size_t pos = 0;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        neg = (s[pos] == '-');
        ++pos;
    }
    auto take_digits = [&](size_t& p) -> std::string {
        size_t start = p;
        while (p < s.size() && s[p] >= '0' && s[p] <= '9') ++p;
        return s.substr(start, p - start);
    };
    std::string num_digits = take_digits(pos);
    if (num_digits.empty()) throw UsageError("malformed rational '" + std::string(text) + "'");
    Int num(num_digits);
    Int den(1);
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::string den_digits = take_digits(pos);
        if (den_digits.empty()) throw UsageError("malformed rational '" + std::string(text) + "'");
        den = Int(den_digits);
        if (den == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
    }
    if (pos != s.size()) throw UsageError("malformed rational '" + std::string(text) + "'");
    if (neg) num = -num;
    return make_rat(num, den);
}

std::string rat_str(const Rat& value) { return value.str(); }

Rat dot(const QVec& m, const QVec& u) {
    if (m.size() != u.size()) throw DomainError("pairing of vectors with mismatched length");
    Rat acc(0);
    for (size_t i = 0; i < m.size(); ++i) acc += m[i] * u[i];
    return acc;
}

Rat dot(const QVec& m, const ZVec& u) {
    if (m.size() != u.size()) throw DomainError("pairing of vectors with mismatched length");
    Rat acc(0);
    for (size_t i = 0; i < m.size(); ++i) acc += m[i] * Rat(u[i]);
    return acc;
}

Int dot(const ZVec& m, const ZVec& u) {
    if (m.size() != u.size()) throw DomainError("pairing of vectors with mismatched length");
    Int acc(0);
    for (size_t i = 0; i < m.size(); ++i) acc += m[i] * u[i];
    return acc;
}

QVec to_qvec(const ZVec& v) {
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

ZVec to_zvec(const QVec& v) {
    ZVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (denominator(v[i]) != 1) throw DomainError("vector entry " + v[i].str() + " is not integral");
        out[i] = numerator(v[i]);
    }
    return out;
}

bool is_zero(const ZVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool is_zero(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

ZVec primitivize(const ZVec& u) {
    if (is_zero(u)) throw DomainError("primitivize of the zero vector");
    Int g(0);
    for (const Int& x : u) g = gcd(g, x);
    ZVec out(u.size());
    for (size_t i = 0; i < u.size(); ++i) out[i] = u[i] / g;
    return out;
}

ZVec primitive_direction(const QVec& v) {
    if (is_zero(v)) throw DomainError("primitive direction of the zero vector");
    Int l(1);
    for (const Rat& x : v) l = lcm(l, denominator(x));
    ZVec scaled(v.size());
    for (size_t i = 0; i < v.size(); ++i) scaled[i] = numerator(v[i]) * (l / denominator(v[i]));
    return primitivize(scaled);
}

Int floor_div(const Int& a, const Int& b) {
    assert(b > 0);
    Int q = a / b;
    if (a % b != 0 && a < 0) q -= 1;
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    assert(b > 0);
    Int q = a / b;
    if (a % b != 0 && a > 0) q += 1;
    return q;
}

Int rat_floor(const Rat& q) { return floor_div(numerator(q), denominator(q)); }

Int rat_ceil(const Rat& q) { return ceil_div(numerator(q), denominator(q)); }

Int denominator_lcm(const QVec& v) {
    Int l(1);
    for (const Rat& x : v) l = lcm(l, denominator(x));
    return l;
}

bool lex_less(const ZVec& a, const ZVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_less(const QVec& a, const QVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string vec_str(const ZVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string vec_str(const QVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// rational elimination
// ---------------------------------------------------------------------------

LinearSolveResult solve_rational(const QMatrix& a, const QVec& b) {
    const size_t m = a.size();
    const size_t n = m ? a[0].size() : b.size() ? 0 : 0;
    for (const QVec& row : a)
        if (row.size() != n) throw UsageError("solve_rational: ragged matrix");
    if (b.size() != m) throw UsageError("solve_rational: rhs length mismatch");

    QMatrix work = a;
    QVec rhs = b;
    // row-operation tracker: work = trans * a, rhs = trans * b
    QMatrix trans(m, QVec(m, Rat(0)));
    for (size_t i = 0; i < m; ++i) trans[i][i] = 1;

    std::vector<int> pivot_col_of_row;
    std::vector<int> pivot_row_of_col(n, -1);
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t pr = row;
        while (pr < m && work[pr][col] == 0) ++pr; // first nonzero pivot
        if (pr == m) continue;
        std::swap(work[pr], work[row]);
        std::swap(trans[pr], trans[row]);
        std::swap(rhs[pr], rhs[row]);
        Rat inv = Rat(1) / work[row][col];
        for (size_t j = 0; j < n; ++j) work[row][j] *= inv;
        for (size_t j = 0; j < m; ++j) trans[row][j] *= inv;
        rhs[row] *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || work[i][col] == 0) continue;
            Rat f = work[i][col];
            for (size_t j = 0; j < n; ++j) work[i][j] -= f * work[row][j];
            for (size_t j = 0; j < m; ++j) trans[i][j] -= f * trans[row][j];
            rhs[i] -= f * rhs[row];
        }
        pivot_col_of_row.push_back((int)col);
        pivot_row_of_col[col] = (int)row;
        ++row;
    }
    // consistency
    for (size_t i = row; i < m; ++i) {
        if (rhs[i] != 0) {
            LinearSolveResult res;
            res.certificate = trans[i];
            return res;
        }
    }
    LinearSolution sol;
    sol.x.assign(n, Rat(0));
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r) sol.x[pivot_col_of_row[r]] = rhs[r];
    for (size_t col = 0; col < n; ++col) {
        if (pivot_row_of_col[col] >= 0) continue;
        QVec k(n, Rat(0));
        k[col] = 1;
        for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
            k[pivot_col_of_row[r]] = -work[r][col];
        sol.kernel.push_back(std::move(k));
    }
    LinearSolveResult res;
    res.solution = std::move(sol);
    return res;
}

int rank(QMatrix a) {
    const size_t m = a.size();
    if (m == 0) return 0;
    const size_t n = a[0].size();
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t pr = row;
        while (pr < m && a[pr][col] == 0) ++pr;
        if (pr == m) continue;
        std::swap(a[pr], a[row]);
        for (size_t i = row + 1; i < m; ++i) {
            if (a[i][col] == 0) continue;
            Rat f = a[i][col] / a[row][col];
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
        }
        ++row;
    }
    return (int)row;
}

int rank_int(const ZMatrix& a) {
    QMatrix q(a.size());
    for (size_t i = 0; i < a.size(); ++i) q[i] = to_qvec(a[i]);
    return rank(std::move(q));
}

std::vector<ZVec> integer_kernel(const ZMatrix& a) {
    if (a.empty()) return {};
    QMatrix q(a.size());
    for (size_t i = 0; i < a.size(); ++i) q[i] = to_qvec(a[i]);
    auto res = solve_rational(q, QVec(a.size(), Rat(0)));
    std::vector<ZVec> out;
    for (const QVec& k : res.solution->kernel) out.push_back(primitive_direction(k));
    return out;
}

Int det(const ZMatrix& a) {
    const size_t n = a.size();
    for (const ZVec& row : a)
        if (row.size() != n) throw UsageError("det: non-square matrix");
    QMatrix w(n);
    for (size_t i = 0; i < n; ++i) w[i] = to_qvec(a[i]);
    Rat d(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pr = col;
        while (pr < n && w[pr][col] == 0) ++pr;
        if (pr == n) return Int(0);
        if (pr != col) {
            std::swap(w[pr], w[col]);
            d = -d;
        }
        d *= w[col][col];
        for (size_t i = col + 1; i < n; ++i) {
            if (w[i][col] == 0) continue;
            Rat f = w[i][col] / w[col][col];
            for (size_t j = col; j < n; ++j) w[i][j] -= f * w[col][j];
        }
    }
    assert(denominator(d) == 1);
    return numerator(d);
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

ZMatrix identity_matrix(int n) {
    ZMatrix id(n, ZVec(n, Int(0)));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

ZMatrix multiply(const ZMatrix& a, const ZMatrix& b) {
    const size_t m = a.size();
    const size_t k = b.size();
    const size_t n = k ? b[0].size() : 0;
    ZMatrix c(m, ZVec(n, Int(0)));
    for (size_t i = 0; i < m; ++i) {
        if (a[i].size() != k) throw UsageError("multiply: dimension mismatch");
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    }
    return c;
}

SmithNormalForm smith_normal_form(const ZMatrix& a) {
    const int m = (int)a.size();
    const int n = m ? (int)a[0].size() : 0;
    for (const ZVec& row : a)
        if ((int)row.size() != n) throw UsageError("smith_normal_form: ragged matrix");

    ZMatrix s = a;
    ZMatrix u = identity_matrix(m);
    ZMatrix v = identity_matrix(n);

    auto row_sub = [&](int dst, int src, const Int& q) { // row dst -= q * row src
        for (int j = 0; j < n; ++j) s[dst][j] -= q * s[src][j];
        for (int j = 0; j < m; ++j) u[dst][j] -= q * u[src][j];
    };
    auto col_sub = [&](int dst, int src, const Int& q) { // col dst -= q * col src
        for (int i = 0; i < m; ++i) s[i][dst] -= q * s[i][src];
        for (int i = 0; i < n; ++i) v[i][dst] -= q * v[i][src];
    };

    const int steps = std::min(m, n);
    for (int t = 0; t < steps; ++t) {
        for (;;) {
            // smallest-magnitude nonzero pivot in the remaining block
            int pi = -1, pj = -1;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j)
                    if (s[i][j] != 0 &&
                        (pi < 0 || abs(s[i][j]) < abs(s[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) { t = steps; break; } // remaining block is zero
            if (pi != t) {
                std::swap(s[pi], s[t]);
                std::swap(u[pi], u[t]);
            }
            if (pj != t) {
                for (int i = 0; i < m; ++i) std::swap(s[i][pj], s[i][t]);
                for (int i = 0; i < n; ++i) std::swap(v[i][pj], v[i][t]);
            }
            bool dirty = false;
            for (int i = t + 1; i < m; ++i) {
                if (s[i][t] == 0) continue;
                row_sub(i, t, s[i][t] / s[t][t]);
                if (s[i][t] != 0) dirty = true;
            }
            for (int j = t + 1; j < n; ++j) {
                if (s[t][j] == 0) continue;
                col_sub(j, t, s[t][j] / s[t][t]);
                if (s[t][j] != 0) dirty = true;
            }
            if (dirty) continue;
            bool cleared = true;
            for (int i = t + 1; i < m && cleared; ++i) cleared = (s[i][t] == 0);
            for (int j = t + 1; j < n && cleared; ++j) cleared = (s[t][j] == 0);
            if (!cleared) continue;
            // enforce divisibility of the remaining block by the pivot
            int bad_row = -1;
            for (int i = t + 1; i < m && bad_row < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (s[i][j] % s[t][t] != 0) {
                        bad_row = i;
                        break;
                    }
            if (bad_row >= 0) {
                row_sub(t, bad_row, Int(-1)); // row t += row bad_row
                continue;
            }
            break;
        }
        if (t >= steps) break;
    }
    for (int t = 0; t < steps; ++t) {
        if (s[t][t] < 0) {
            for (int j = 0; j < n; ++j) s[t][j] = -s[t][j];
            for (int j = 0; j < m; ++j) u[t][j] = -u[t][j];
        }
    }

    // verification: U A V = S, transforms unimodular, divisibility chain
    if (multiply(multiply(u, a), v) != s)
        throw InternalInconsistency("smith_normal_form: U*A*V != S");
    if (abs(det(u)) != 1 || abs(det(v)) != 1)
        throw InternalInconsistency("smith_normal_form: transform not unimodular");
    for (int t = 0; t + 1 < steps; ++t)
        if (s[t][t] != 0 && s[t + 1][t + 1] != 0 && s[t + 1][t + 1] % s[t][t] != 0)
            throw InternalInconsistency("smith_normal_form: divisibility chain violated");

    return SmithNormalForm{std::move(u), std::move(s), std::move(v)};
}

std::optional<IntegerScaledSolution> minimal_integral_scaling(const ZMatrix& a, const QVec& b) {
    const int m = (int)a.size();
    const int n = m ? (int)a[0].size() : 0;
    if ((int)b.size() != m) throw UsageError("minimal_integral_scaling: rhs length mismatch");
    SmithNormalForm snf = smith_normal_form(a);
    // c = U b
    QVec c(m, Rat(0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) c[i] += Rat(snf.u[i][j]) * b[j];
    const int r = std::min(m, n);
    Int k(1);
    for (int i = 0; i < m; ++i) {
        Int si = (i < r) ? snf.s[i][i] : Int(0);
        if (si == 0) {
            if (c[i] != 0) return std::nullopt; // rationally inconsistent
            continue;
        }
        Rat ratio = c[i] / Rat(si);
        k = lcm(k, denominator(ratio));
    }
    // y_i = k c_i / s_i, x = V y
    ZVec y(n, Int(0));
    for (int i = 0; i < r; ++i) {
        if (snf.s[i][i] == 0) continue;
        Rat yi = Rat(k) * c[i] / Rat(snf.s[i][i]);
        assert(denominator(yi) == 1);
        y[i] = numerator(yi);
    }
    ZVec x(n, Int(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x[i] += snf.v[i][j] * y[j];
    return IntegerScaledSolution{k, std::move(x)};
}

} // namespace toridiv
