#pragma once

// Torus-invariant Weil divisors: section polytopes, Cartier data, local
// section-module generators, global sections, global generation, section-ring
// Hilbert functions.

#include <optional>

#include "toridiv/fan.hpp"

namespace toridiv {

struct ToricDivisor {
    QVec coeffs; // d_rho, one per fan ray, in ray order

    bool is_integral() const {
        for (const Rat& d : coeffs)
            if (denominator(d) != 1) return false;
        return true;
    }
};

ToricDivisor scale_divisor(const ToricDivisor& d, const Rat& factor);
ToricDivisor add_divisors(const ToricDivisor& a, const ToricDivisor& b);
// The canonical representative K_X = -sum D_rho.
ToricDivisor canonical_divisor(const Fan& f);

void check_divisor(const Fan& f, const ToricDivisor& d); // ray count match

// P_D = {m : <m, u_rho> >= -d_rho for every ray}.
HPolyhedron polytope_PD(const Fan& f, const ToricDivisor& d);

struct CartierStatus {
    enum class Kind { Cartier, QCartier, NotQCartier } kind;
    Int index = 1;                   // smallest k >= 1 with k*D Cartier (1 for Cartier)
    std::vector<ZVec> data;          // Cartier data of index*D, one per max cone
    std::vector<QVec> rational_data; // data / index (per-cone solutions for D itself)
    int witness_cone = -1;           // inconsistent cone for NotQCartier

    bool is_qcartier() const { return kind != Kind::NotQCartier; }
};

CartierStatus cartier_status(const Fan& f, const ToricDivisor& d);

struct LocalModule {
    int cone = -1;
    std::vector<ZVec> generators; // minimal, lex sorted
};

// Minimal generators of {m : <m, u_rho> >= -d_rho, rho in sigma(1)} as a
// module over the semigroup sigma_dual cap M. Requires sigma full-dimensional
// and d integral. Generation is verified against a bounded enumeration before
// returning; failure raises InternalInconsistency.
LocalModule local_generators(const Fan& f, const ToricDivisor& d, int ci);
// Same, with the Hilbert basis of sigma_dual supplied by the caller.
LocalModule local_generators_with_hb(const Fan& f, const ToricDivisor& d, int ci,
                                     const std::vector<ZVec>& dual_hb);

std::vector<ZVec> dual_cone_hilbert_basis(const Fan& f, int ci);

struct GgResult {
    bool yes = true;
    int witness_cone = -1;
    ZVec witness_generator; // local generator outside P_D when yes == false
};

// Requires a complete fan and integral d.
GgResult is_globally_generated(const Fan& f, const ToricDivisor& d);

// Lattice points of P_D, lex sorted. Requires a complete fan and integral d.
std::vector<ZVec> global_sections(const Fan& f, const ToricDivisor& d);

// h^0(X, O(mD)) for m = 0..m_max.
std::vector<Int> section_hilbert_function(const Fan& f, const ToricDivisor& d, int m_max);

} // namespace toridiv
