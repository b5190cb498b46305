#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "charvar/ffield.hpp"

namespace charvar::polycount {

using u64 = std::uint64_t;
using ffield::FieldCtx;
using ffield::Poly;

// Root structure of a monic cubic with constant term -1 over F_q.
// The five tags partition all such cubics.
enum class CubicClass { TripleRoot, DoubleRoot, ThreeDistinct, OneRootQuadratic, Irreducible };

const char* cubic_class_name(CubicClass c);

struct CubicCensus {
  u64 q = 0;
  u64 triple_root = 0;
  u64 double_root = 0;
  u64 three_distinct = 0;
  u64 one_root_quadratic = 0;
  u64 irreducible = 0;

  u64 total() const { return triple_root + double_root + three_distinct + one_root_quadratic + irreducible; }
  u64 operator[](CubicClass c) const;
  bool operator==(const CubicCensus& o) const = default;
};

// f monic, deg 3, f(0) = -1.
CubicClass classify_cubic(const FieldCtx& F, const Poly& f);

// Closed-form census. With z = gcd(3, q-1):
//   (z, q-1-z, ((q-1)(q-2)-2(q-1-z))/6, (q^2-q)/2, remainder to q^2).
// q must be a prime power.
CubicCensus count_cubics_formula(u64 q);

// Brute force over all (s,t) in F_q^2.
CubicCensus count_cubics_enumerated(const FieldCtx& F, u64 max_polys = 1000000);

// (q^2-q)/2, q a prime power.
u64 count_irred_quadratics(u64 q);

u64 count_irred_quadratics_enumerated(const FieldCtx& F);

// gcd(n, q-1) for n in {2,3}.
u64 roots_of_unity_count(u64 q, unsigned n);

}  // namespace charvar::polycount
