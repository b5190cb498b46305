#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "charvar/cvpoints.hpp"

namespace charvar::dynamics {

using u64 = std::uint64_t;
using cvpoints::CVPoint;
using cvpoints::Stratum;
using qpoly::Int;
using qpoly::Rat;

// r x r integer matrix acting on exponent vectors by v -> Mv.
using IntMat = std::vector<std::vector<long long>>;

// Fixed generating set of GL_r(Z): transvection I+E_12, r-cycle, swap of the
// first two coordinates, and diag(-1,1,...,1). For r = 1 only the sign flip.
// BFS closure under these equals closure under the generated group (each
// generator has finite order mod every modulus).
std::vector<IntMat> out_generators(int r);

IntMat identity_mat(int r);

// Exact integer determinant (Bareiss).
Int det_int(const IntMat& m);

// Applies M to every exponent vector of the point (both Split3 columns) mod
// the torus modulus and canonicalizes. Throws std::invalid_argument when
// det M is not +-1 mod the modulus (not a GL_r(Z) image). Preserves the
// stratum label and the content invariant.
CVPoint act(const IntMat& M, const CVPoint& p, u64 q);

inline constexpr u64 kDefaultOrbitWork = 50'000'000;

// BFS closure under the generator set; deterministic. Optionally collects
// the orbit's canonical elements (sorted).
u64 orbit_size(const CVPoint& p, u64 q, u64 max_orbit = kDefaultOrbitWork,
               std::vector<CVPoint>* elements = nullptr);

struct OrbitRecord {
  CVPoint representative;  // first orbit element in enumeration order
  u64 size = 0;
  Stratum stratum{};
  u64 content = 0;
};

struct OrbitReport {
  int n = 0, r = 0;
  u64 q = 0;
  Int total;  // equals the E-polynomial value
  std::vector<OrbitRecord> orbits;
  // stratum -> (orbit size -> number of orbits of that size)
  std::map<Stratum, std::map<u64, u64>> sizes_by_stratum;
  u64 max_orbit = 0;
  Rat max_ratio;  // max_orbit / total, exact
};

// Visits every canonical point once; verifies that each orbit has a single
// stratum label and constant content (throws std::logic_error otherwise).
OrbitReport orbit_census(int n, int r, u64 q, u64 max_work = kDefaultOrbitWork);

struct RatioRow {
  u64 q = 0;
  Int total;
  u64 max_orbit = 0;
  Rat ratio;
};

std::vector<RatioRow> ratio_table(int n, int r, const std::vector<u64>& qs,
                                  u64 max_work = kDefaultOrbitWork);

// Asymptotic comparison constants: n=2 (central 0, reducible 1/2,
// irreducible 1/2); n=3 (central 0, repeating/reducible 1/6 as the basefield
// family, partially reducible 1/2, irreducible 1/3).
Rat stratum_limit_bound(int n, Stratum s);

// True iff every orbit element keeps the representation tag and the content
// invariant gcd(coords, modulus) of the starting point.
bool verify_subgroup_containment(const CVPoint& p, u64 q, u64 max_orbit = kDefaultOrbitWork);

// Orbit of a raw vector in (Z/m)^r under the generator set, no fold applied.
// From a standard basis vector this reaches exactly the primitive vectors.
std::vector<std::vector<u64>> raw_orbit(const std::vector<u64>& start, u64 m,
                                        u64 max_orbit = kDefaultOrbitWork);

// Jordan totient J_r(m) = m^r prod_{p | m} (1 - p^{-r}): the number of
// primitive vectors in (Z/m)^r.
Int jordan_totient(int r, u64 m);

}  // namespace charvar::dynamics
