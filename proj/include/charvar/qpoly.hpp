#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace charvar::qpoly {

using u64 = std::uint64_t;
using Int = mpz_class;
using Rat = mpq_class;

// Dense polynomial in q with exact rational coefficients, ascending degree.
struct Polynomial {
  std::vector<Rat> c;

  int deg() const { return static_cast<int>(c.size()) - 1; }
  Rat coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<size_t>(i)] : Rat(0);
  }
  Rat eval(const Rat& q) const;
  bool operator==(const Polynomial& o) const;
};

Polynomial poly_const(const Rat& v);
Polynomial poly_linear(const Rat& a, const Rat& b);  // a*q + b
Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rat& s, const Polynomial& a);
Polynomial poly_pow(const Polynomial& a, unsigned e);
std::string poly_str(const Polynomial& a);

/// A count polynomial in q whose coefficients depend on a congruence class
/// of q. Cases share one modulus and their residues partition it, so every
/// prime power matches exactly one case.
class QuasiPolynomial {
 public:
  struct Case {
    unsigned modulus;
    std::vector<unsigned> residues;
    Polynomial poly;
  };

  // Single unconditional case.
  explicit QuasiPolynomial(Polynomial p);
  explicit QuasiPolynomial(std::vector<Case> cases);

  const std::vector<Case>& cases() const { return cases_; }
  const Polynomial& case_for(u64 q) const;

  // Exact evaluation; throws std::logic_error if the value is not an integer.
  Int eval(u64 q) const;

  std::string str() const;

 private:
  std::vector<Case> cases_;
};

// Exact n^e as mpz.
Int int_pow(const Int& base, unsigned e);

// Rational -> integer, throwing if the denominator is not 1.
Int to_int(const Rat& v);

}  // namespace charvar::qpoly
