#pragma once

// Exact rational and integer linear algebra: Gaussian elimination with
// first-nonzero pivoting, kernel bases, inconsistency certificates, and
// Smith normal form with verified unimodular transforms.

#include <optional>
#include <vector>

#include "toridiv/rational.hpp"

namespace toridiv {

struct LinearSolution {
    QVec x;                    // one particular solution, A x = b exactly
    std::vector<QVec> kernel;  // basis of {v : A v = 0}
};

struct LinearSolveResult {
    // Either a solution with kernel basis, or a certificate row combination
    // y with y*A = 0 and y*b != 0.
    std::optional<LinearSolution> solution;
    QVec certificate;
    bool consistent() const { return solution.has_value(); }
};

LinearSolveResult solve_rational(const QMatrix& a, const QVec& b);

int rank(QMatrix a);
int rank_int(const ZMatrix& a);

// Basis of the rational kernel of an integer matrix, as primitive integer vectors.
std::vector<ZVec> integer_kernel(const ZMatrix& a);

// Determinant of a square integer matrix (fraction-free not required at this scale).
Int det(const ZMatrix& a);

struct SmithNormalForm {
    ZMatrix u; // rows x rows, |det| = 1
    ZMatrix s; // diagonal, d_i | d_{i+1}
    ZMatrix v; // cols x cols, |det| = 1
};

// U*A*V = S, verified by re-multiplication and determinant checks before returning.
SmithNormalForm smith_normal_form(const ZMatrix& a);

// Smallest k >= 1 such that A x = k*b has an integer solution x, together with
// one such solution; nullopt if A x = b is rationally inconsistent.
struct IntegerScaledSolution {
    Int k;
    ZVec x; // A x = k b
};
std::optional<IntegerScaledSolution> minimal_integral_scaling(const ZMatrix& a, const QVec& b);

ZMatrix multiply(const ZMatrix& a, const ZMatrix& b);
ZMatrix identity_matrix(int n);

} // namespace toridiv
