#include "charvar/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace charvar::qpoly {

namespace {
void trim(std::vector<Rat>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

Rat Polynomial::eval(const Rat& q) const {
  Rat r = 0;
  for (size_t i = c.size(); i-- > 0;) r = r * q + c[i];
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const { return c == o.c; }

Polynomial poly_const(const Rat& v) {
  Polynomial p{{v}};
  trim(p.c);
  return p;
}

Polynomial poly_linear(const Rat& a, const Rat& b) {
  Polynomial p{{b, a}};
  trim(p.c);
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  trim(r.c);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + Rat(-1) * b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.c.empty() || b.c.empty()) return Polynomial{};
  Polynomial r;
  r.c.resize(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  trim(r.c);
  return r;
}

Polynomial operator*(const Rat& s, const Polynomial& a) {
  Polynomial r = a;
  for (auto& x : r.c) x *= s;
  trim(r.c);
  return r;
}

Polynomial poly_pow(const Polynomial& a, unsigned e) {
  Polynomial r = poly_const(1);
  for (unsigned i = 0; i < e; ++i) r = r * a;
  return r;
}

std::string poly_str(const Polynomial& a) {
  if (a.c.empty()) return "0";
  std::string s;
  for (size_t i = a.c.size(); i-- > 0;) {
    if (a.c[i] == 0) continue;
    if (!s.empty()) s += (a.c[i] > 0 ? " + " : " - ");
    else if (a.c[i] < 0) s += "-";
    Rat v = abs(a.c[i]);
    if (v != 1 || i == 0) s += v.get_str();
    if (i >= 1) {
      if (v != 1) s += "*";
      s += "q";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

QuasiPolynomial::QuasiPolynomial(Polynomial p) {
  cases_.push_back(Case{1, {0}, std::move(p)});
}

QuasiPolynomial::QuasiPolynomial(std::vector<Case> cases) : cases_(std::move(cases)) {
  if (cases_.empty()) throw std::invalid_argument("quasi-polynomial needs at least one case");
  unsigned m = cases_[0].modulus;
  std::vector<bool> seen(m, false);
  for (const auto& cs : cases_) {
    if (cs.modulus != m) throw std::invalid_argument("quasi-polynomial cases must share a modulus");
    for (unsigned r : cs.residues) {
      if (r >= m || seen[r]) throw std::invalid_argument("quasi-polynomial residues must partition the modulus");
      seen[r] = true;
    }
  }
  for (bool b : seen)
    if (!b) throw std::invalid_argument("quasi-polynomial residues must partition the modulus");
}

const Polynomial& QuasiPolynomial::case_for(u64 q) const {
  unsigned res = static_cast<unsigned>(q % cases_[0].modulus);
  for (const auto& cs : cases_)
    for (unsigned r : cs.residues)
      if (r == res) return cs.poly;
  throw std::logic_error("no quasi-polynomial case matched");
}

Int QuasiPolynomial::eval(u64 q) const {
  Rat v = case_for(q).eval(Rat(Int(q)));
  return to_int(v);
}

std::string QuasiPolynomial::str() const {
  if (cases_.size() == 1) return poly_str(cases_[0].poly);
  std::string s;
  for (const auto& cs : cases_) {
    if (!s.empty()) s += " ; ";
    s += "q mod " + std::to_string(cs.modulus) + " in {";
    for (size_t i = 0; i < cs.residues.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(cs.residues[i]);
    }
    s += "}: " + poly_str(cs.poly);
  }
  return s;
}

Int int_pow(const Int& base, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int to_int(const Rat& v) {
  Rat c = v;
  c.canonicalize();
  if (c.get_den() != 1) throw std::logic_error("expected an integer value, got " + c.get_str());
  return c.get_num();
}

}  // namespace charvar::qpoly
