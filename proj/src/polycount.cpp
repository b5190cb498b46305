#include "charvar/polycount.hpp"

#include <numeric>
#include <stdexcept>

namespace charvar::polycount {

using ffield::Elem;

const char* cubic_class_name(CubicClass c) {
  switch (c) {
    case CubicClass::TripleRoot: return "triple_root";
    case CubicClass::DoubleRoot: return "double_root";
    case CubicClass::ThreeDistinct: return "three_distinct";
    case CubicClass::OneRootQuadratic: return "one_root_quadratic";
    case CubicClass::Irreducible: return "irreducible";
  }
  return "?";
}

u64 CubicCensus::operator[](CubicClass c) const {
  switch (c) {
    case CubicClass::TripleRoot: return triple_root;
    case CubicClass::DoubleRoot: return double_root;
    case CubicClass::ThreeDistinct: return three_distinct;
    case CubicClass::OneRootQuadratic: return one_root_quadratic;
    case CubicClass::Irreducible: return irreducible;
  }
  return 0;
}

CubicClass classify_cubic(const FieldCtx& F, const Poly& f) {
  if (f.deg() != 3 || f.lead() != 1 || f.coeff(0) != F.neg(1))
    throw std::invalid_argument("classify_cubic: need a monic cubic with constant term -1");
  auto roots = ffield::poly_roots(F, f);
  switch (roots.size()) {
    case 0: return CubicClass::Irreducible;
    case 1: return CubicClass::OneRootQuadratic;
    case 3:
      if (roots[0] == roots[2]) return CubicClass::TripleRoot;
      if (roots[0] == roots[1] || roots[1] == roots[2]) return CubicClass::DoubleRoot;
      return CubicClass::ThreeDistinct;
    default:
      throw std::logic_error("cubic with two roots counted with multiplicity");
  }
}

CubicCensus count_cubics_formula(u64 q) {
  if (!num::prime_power(q)) throw std::invalid_argument("q is not a prime power");
  u64 z = std::gcd<u64, u64>(3, q - 1);
  CubicCensus c;
  c.q = q;
  c.triple_root = z;
  c.double_root = q - 1 - z;
  c.three_distinct = ((q - 1) * (q - 2) - 2 * (q - 1 - z)) / 6;
  c.one_root_quadratic = (q * q - q) / 2;
  c.irreducible = q * q - c.triple_root - c.double_root - c.three_distinct - c.one_root_quadratic;
  return c;
}

CubicCensus count_cubics_enumerated(const FieldCtx& F, u64 max_polys) {
  u64 q = F.q();
  if (q * q > max_polys) throw WorkBoundExceeded("enumeration bound exceeded");
  CubicCensus c;
  c.q = q;
  Elem minus_one = F.neg(1);
  for (Elem s = 0; s < q; ++s) {
    for (Elem t = 0; t < q; ++t) {
      Poly f{{minus_one, t, s, 1}};  // x^3 + s x^2 + t x - 1
      switch (classify_cubic(F, f)) {
        case CubicClass::TripleRoot: ++c.triple_root; break;
        case CubicClass::DoubleRoot: ++c.double_root; break;
        case CubicClass::ThreeDistinct: ++c.three_distinct; break;
        case CubicClass::OneRootQuadratic: ++c.one_root_quadratic; break;
        case CubicClass::Irreducible: ++c.irreducible; break;
      }
    }
  }
  return c;
}

u64 count_irred_quadratics(u64 q) {
  if (!num::prime_power(q)) throw std::invalid_argument("q is not a prime power");
  return (q * q - q) / 2;
}

u64 count_irred_quadratics_enumerated(const FieldCtx& F) {
  u64 q = F.q();
  u64 n = 0;
  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b)
      if (ffield::is_irreducible(F, ffield::Poly{{b, a, 1}})) ++n;
  return n;
}

u64 roots_of_unity_count(u64 q, unsigned n) {
  if (!num::prime_power(q)) throw std::invalid_argument("q is not a prime power");
  if (n != 2 && n != 3) throw std::invalid_argument("n must be 2 or 3");
  return std::gcd<u64, u64>(n, q - 1);
}

}  // namespace charvar::polycount
