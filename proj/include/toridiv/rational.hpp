#pragma once

// Exact arbitrary-precision scalars and vectors. Everything downstream is
// built on these; no floating point is used anywhere in the library.

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "toridiv/errors.hpp"

namespace toridiv {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Lattice-side vectors (ray generators u, lattice points m) and their
// rational-span counterparts. By convention the first argument of dot()
// lives on the M side and the second on the N side, matching <m, u>.
using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;

using ZMatrix = std::vector<ZVec>;
using QMatrix = std::vector<QVec>;

// Safe construction: denominator sign is normalized, zero denominator rejected.
Rat make_rat(Int num, Int den);

// Accepts "p", "p/q", optional leading '-' or U+2212 minus. Throws UsageError
// on malformed text (including zero denominators).
Rat parse_rat(std::string_view text);

std::string rat_str(const Rat& value);

Rat dot(const QVec& m, const QVec& u);
Rat dot(const QVec& m, const ZVec& u);
Int dot(const ZVec& m, const ZVec& u);

QVec to_qvec(const ZVec& v);
// Requires every entry integral; throws DomainError otherwise.
ZVec to_zvec(const QVec& v);

bool is_zero(const ZVec& v);
bool is_zero(const QVec& v);

// Divides a nonzero integer vector by the gcd of its entries (sign preserved).
// Zero vector is a DomainError.
ZVec primitivize(const ZVec& u);

// Scales a rational vector to its primitive integer representative
// (same direction). Zero vector is a DomainError.
ZVec primitive_direction(const QVec& v);

Int floor_div(const Int& a, const Int& b); // b > 0
Int ceil_div(const Int& a, const Int& b);  // b > 0
Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

// lcm of the denominators of the entries (1 for the empty vector).
Int denominator_lcm(const QVec& v);

bool lex_less(const ZVec& a, const ZVec& b);
bool lex_less(const QVec& a, const QVec& b);

std::string vec_str(const ZVec& v);
std::string vec_str(const QVec& v);

} // namespace toridiv
