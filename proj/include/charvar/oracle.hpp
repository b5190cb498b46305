#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "charvar/cvpoints.hpp"
#include "charvar/ffield.hpp"

namespace charvar::oracle {

using u64 = std::uint64_t;
using cvpoints::CVPoint;
using cvpoints::Stratum;
using ffield::Elem;
using ffield::FieldCtx;
using ffield::Poly;

// n x n matrix over F_q, n = 2 or 3, row major; unused slots stay zero.
struct Mat {
  int n = 0;
  std::array<Elem, 9> e{};

  Elem& at(int i, int j) { return e[static_cast<size_t>(i * n + j)]; }
  Elem at(int i, int j) const { return e[static_cast<size_t>(i * n + j)]; }
  bool operator==(const Mat& o) const = default;
};

using MatTuple = std::vector<Mat>;

enum class Group { SL, GL };

Mat mat_identity(int n);
Mat mat_scalar(int n, Elem c);
bool is_scalar(const Mat& a);
Mat mat_mul(const FieldCtx& F, const Mat& a, const Mat& b);
Mat mat_add_scalar(const FieldCtx& F, const Mat& a, Elem c);  // a + c*I
Mat mat_pow(const FieldCtx& F, Mat a, u64 e);
Mat mat_inv(const FieldCtx& F, const Mat& a);
Elem mat_det(const FieldCtx& F, const Mat& a);
bool mat_commute(const FieldCtx& F, const Mat& a, const Mat& b);
// Companion matrix of a monic polynomial of degree 2 or 3.
Mat companion(const FieldCtx& F, const Poly& f);
// Multiplicative order; a must be invertible and the order must divide bound.
u64 mat_order(const FieldCtx& F, const Mat& a, u64 bound);

// Monic degree-n characteristic polynomial; constant term (-1)^n det(a).
Poly charpoly(const FieldCtx& F, const Mat& a);

// Minimal polynomial via Krylov linear algebra on I, a, a^2, ..., a^n.
Poly min_poly(const FieldCtx& F, const Mat& a);

// True iff the minimal polynomial is squarefree (derivative zero counts as
// not squarefree for degree >= 1).
bool is_semisimple(const FieldCtx& F, const Mat& a);

u64 group_order(int n, u64 q, Group g);

inline constexpr u64 kDefaultOracleWork = 50'000'000;

// Cached full element list; guarded by q^(n^2) <= max_work.
const std::vector<Mat>& group_elements(const FieldCtx& F, int n, Group g,
                                       u64 max_work = kDefaultOracleWork);

// Exact simultaneous-centralizer order by scanning the group element list.
u64 centralizer_order(const FieldCtx& F, const MatTuple& tuple, Group g,
                      u64 max_work = kDefaultOracleWork);

// Emits every r-tuple of pairwise commuting semisimple SL_n(F_q) matrices
// exactly once: first entries range over all semisimple elements, later ones
// over the semisimple part of the prefix centralizer.
void enumerate_commuting_semisimple(const FieldCtx& F, int n, int r,
                                    const std::function<void(const MatTuple&)>& fn,
                                    u64 max_work = kDefaultOracleWork);

struct CensusClass {
  MatTuple representative;  // minimal tuple key in the orbit
  u64 orbit_size = 0;       // GL_n(F_q)-conjugation orbit
  u64 sl_centralizer_order = 0;
  u64 gl_centralizer_order = 0;
  Stratum stratum{};        // from the centralizer-order table
  CVPoint point;            // point_of_tuple(representative)
};

struct GitCensus {
  int n = 0, r = 0;
  u64 q = 0;
  u64 tuple_total = 0;  // commuting semisimple tuples seen
  std::vector<CensusClass> classes;
  std::map<Stratum, u64> class_counts;
};

// Orbit census under GL_n(F_q)-conjugation: BFS with a fixed small generating
// set, dedup by canonical tuple encoding. Class strata are assigned from the
// SL-centralizer order table:
//   n=3:  |SL_3|: central, q(q-1)(q^2-1): repeating, (q-1)^2: reducible,
//         q^2-1: partially reducible, q^2+q+1: irreducible
//   n=2:  |SL_2|: central, q-1: reducible, q+1: irreducible
GitCensus git_census(const FieldCtx& F, int n, int r, u64 max_work = kDefaultOracleWork);

// Table lookup; verifies the expected orders are pairwise distinct for this q
// and throws std::domain_error if the order is not in the table.
Stratum stratum_from_sl_centralizer(int n, u64 q, u64 order);

// Number of distinct realizations of the diagonal tuple under the rational
// Weyl fold: Split3 counts its distinct column orderings (1, 3 or 6);
// NonSplit3 points have Galois fold orbit 3, PartSplit3 points 2.
int weyl_perm_count(const CVPoint& p, u64 q);

// Canonical matrix-tuple realization of a point: diagonal powers of the field
// generator for split tags, powers of the norm-one companion torus otherwise.
MatTuple realize(const FieldCtx& F, const CVPoint& p);

// Inverse of realize on canonical points; constant on conjugation orbits.
// Uses baby-step/giant-step discrete logs in the identified torus.
CVPoint point_of_tuple(const FieldCtx& F, const MatTuple& tuple);

u64 encode_tuple(const MatTuple& t, u64 q);

}  // namespace charvar::oracle
