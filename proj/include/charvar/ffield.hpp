#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "charvar/numutil.hpp"

namespace charvar::ffield {

using u64 = std::uint64_t;

// Field elements are indices in [0, q). The index encodes the residue's
// coefficient vector in base p, constant term in the lowest digit, so index
// order equals lexicographic order on coefficient sequences written
// highest-degree-first. Index 0 is zero, index 1 is one.
using Elem = u64;

// Dense polynomial over F_q: element indices, ascending degree, no trailing
// zero coefficients (the zero polynomial has an empty vector).
struct Poly {
  std::vector<Elem> c;

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Elem lead() const { return c.back(); }
  Elem coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<size_t>(i)] : 0;
  }
  bool operator==(const Poly& o) const { return c == o.c; }
};

Poly poly_from(std::vector<Elem> coeffs);  // trims trailing zeros

/// An instantiated finite field F_q, q = p^k, with the lexicographically
/// least monic irreducible modulus of degree k over F_p (modulus x for k=1).
/// Immutable after construction; all operations are pure.
class FieldCtx {
 public:
  u64 p() const { return p_; }
  unsigned k() const { return k_; }
  u64 q() const { return q_; }
  const std::vector<u64>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;              // throws std::domain_error on a = 0
  Elem pow(Elem a, long long e) const; // negative e requires a != 0

  // Least t >= 1 with a^t = 1; divides q-1. Throws on a = 0.
  u64 elem_order(Elem a) const;

  // Least element (in enumeration order) of multiplicative order q-1.
  Elem generator() const { return generator_; }

  // Decode an index into base-p coefficients, ascending degree (size k).
  std::vector<u64> coeffs_of(Elem a) const;
  Elem elem_from_coeffs(const std::vector<u64>& coeffs) const;

  std::string elem_str(Elem a) const;

  friend FieldCtx make_field(u64 p, unsigned k, u64 max_q);

 private:
  FieldCtx() = default;
  Elem mul_slow(Elem a, Elem b) const;

  u64 p_ = 0, q_ = 0;
  unsigned k_ = 0;
  std::vector<u64> modulus_;  // ascending coefficients over F_p, size k+1, monic
  Elem generator_ = 0;
  std::vector<Elem> mul_table_;  // q*q when q <= table limit, else empty
  std::vector<Elem> inv_table_;
};

inline constexpr u64 kDefaultMaxQ = 1u << 20;
inline constexpr u64 kRootScanLimit = 10000;  // exhaustive root scan up to here

// p prime, 1 <= k <= 6, p^k <= max_q. Deterministic: repeated calls yield
// identical moduli and element enumeration order.
FieldCtx make_field(u64 p, unsigned k, u64 max_q = kDefaultMaxQ);

Poly poly_add(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_sub(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_mul(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_scale(const FieldCtx& F, Elem s, const Poly& a);
// Euclidean division; divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_mod(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_gcd(const FieldCtx& F, Poly a, Poly b);  // monic (or zero)
Poly poly_deriv(const FieldCtx& F, const Poly& a);
Elem poly_eval(const FieldCtx& F, const Poly& a, Elem x);
// base^e mod m, m nonconstant.
Poly poly_pow_mod(const FieldCtx& F, const Poly& base, u64 e, const Poly& m);

// x^d + (lower coefficients from the given vector, ascending).
Poly monic_with(const FieldCtx& F, unsigned d, const std::vector<Elem>& lower);

// Every root in F_q with multiplicity, ascending by element index.
// deg f in {1,2,3}, f monic. Exhaustive scan for q <= kRootScanLimit,
// Frobenius-gcd splitting beyond.
std::vector<Elem> poly_roots(const FieldCtx& F, const Poly& f);

// deg f in {2,3}, f monic: true iff f has no root in F_q.
bool is_irreducible(const FieldCtx& F, const Poly& f);

// Least-lex monic irreducible f of degree d in {2,3} whose companion matrix
// has multiplicative order q^d - 1 (x generates (F_q[x]/f)^x). Deterministic.
Poly find_primitive_poly(const FieldCtx& F, unsigned d);

// Discrete log: least e in [0, order) with base^e = target, where base has
// the given multiplicative order. Baby-step/giant-step. Throws if absent.
u64 dlog(const FieldCtx& F, Elem base, Elem target, u64 order);

}  // namespace charvar::ffield
