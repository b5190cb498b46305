#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "charvar/numutil.hpp"
#include "charvar/qpoly.hpp"

namespace charvar::cvpoints {

using u64 = std::uint64_t;
using qpoly::Int;

// Torus type of an F_q-point of X_{Z^r}(SL_n), n = 2 or 3.
//   Split2      v in (Z/(q-1))^r, folded by v ~ -v
//   NonSplit2   v in (Z/(q+1))^r, folded by v ~ -v, some coordinate not 2-torsion
//   Split3      column triple {u, v, -u-v} over Z/(q-1), folded by S_3
//   PartSplit3  w in (Z/(q^2-1))^r, folded by w ~ qw, some coordinate != 0 mod q+1
//   NonSplit3   v in (Z/(q^2+q+1))^r, folded by v ~ qv, some coordinate not
//               gcd(3,q-1)-torsion
enum class Tag { Split2, NonSplit2, Split3, PartSplit3, NonSplit3 };

enum class Stratum { Central, Repeating, Reducible, PartiallyReducible, Irreducible };

const char* tag_name(Tag t);
const char* stratum_name(Stratum s);
std::vector<Stratum> strata_for(int n);
std::vector<Tag> tags_for(int n);
int tag_n(Tag t);

/// Canonical exponent-vector representative of one character-variety point.
/// Stored form is the fold-orbit minimum under lexicographic comparison of
/// least-residue coordinate sequences (Split3: minimum over the six column
/// orderings).
struct CVPoint {
  Tag tag;
  std::vector<u64> u;
  std::vector<u64> v;  // second Split3 column; empty for all other tags

  size_t rank() const { return u.size(); }
  bool operator==(const CVPoint& o) const = default;
  bool operator<(const CVPoint& o) const;
};

u64 torus_modulus(Tag t, u64 q);

// Fold-orbit minimum; reduces coordinates mod the torus modulus first.
// Idempotent, constant on fold orbits.
CVPoint canonical(const CVPoint& raw, u64 q);

// True iff the (canonicalized) coordinates satisfy the tag's membership side
// condition (non-centrality for NonSplit2/NonSplit3, a genuinely quadratic
// coordinate for PartSplit3).
bool is_valid(const CVPoint& p, u64 q);

// Canonicalize and validate; throws std::invalid_argument on a side-condition
// violation or a malformed point.
CVPoint make_point(Tag t, u64 q, std::vector<u64> u, std::vector<u64> v = {});

Stratum classify_stratum(const CVPoint& p, u64 q);

// gcd of all coordinates with the torus modulus; a GL_r(Z)-orbit invariant.
u64 content(const CVPoint& p, u64 q);

// Deterministic integer key (tag + base-m digits); requires the coordinate
// space to fit in 64 bits.
u64 encode(const CVPoint& p, u64 q);

// Closed-form per-stratum point counts. With z3 = gcd(3,q-1), z2 = gcd(2,q-1):
//   n=3: Central z3^r; Repeating (q-1)^r - z3^r;
//        Reducible (q-1)^{2r}/6 - (q-1)^r/2 + z3^r/3;
//        PartiallyReducible ((q^2-1)^r - (q-1)^r)/2;
//        Irreducible ((q^2+q+1)^r - z3^r)/3
//   n=2: Central z2^r; Reducible ((q-1)^r - z2^r)/2; Irreducible ((q+1)^r - z2^r)/2
Int stratum_count_formula(int n, int r, u64 q, Stratum s);

// The same counts as quasi-polynomials in q (cases keyed on q mod 3 for n=3,
// parity for n=2).
qpoly::QuasiPolynomial stratum_count_qpoly(int n, int r, Stratum s);

// E-polynomial: ((q+1)^r + (q-1)^r)/2 for n=2;
// (q-1)^{2r}/6 + (q^2-1)^r/2 + (q^2+q+1)^r/3 for n=3.
qpoly::QuasiPolynomial epoly(int n, int r);
Int epoly_eval(int n, int r, u64 q);

// E-polynomial at q=1: 2^{r-1} for n=2, 3^{r-1} for n=3.
Int euler_char(int n, int r);

inline constexpr u64 kDefaultPointWork = 50'000'000;

// Emits every canonical point exactly once, in a fixed deterministic order.
// Total emitted equals epoly_eval(n, r, q).
void enumerate_points(int n, int r, u64 q, const std::function<void(const CVPoint&)>& fn,
                      u64 max_work = kDefaultPointWork);

u64 stratum_count_enumerated(int n, int r, u64 q, Stratum s, u64 max_work = kDefaultPointWork);

// All strata in one enumeration pass, ordered as strata_for(n).
std::vector<std::pair<Stratum, u64>> strata_counts_enumerated(int n, int r, u64 q,
                                                              u64 max_work = kDefaultPointWork);

}  // namespace charvar::cvpoints
