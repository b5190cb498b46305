#include "charvar/cvpoints.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace charvar::cvpoints {

using qpoly::Polynomial;
using qpoly::QuasiPolynomial;
using qpoly::Rat;
using qpoly::poly_linear;
using qpoly::poly_pow;

const char* tag_name(Tag t) {
  switch (t) {
    case Tag::Split2: return "split2";
    case Tag::NonSplit2: return "nonsplit2";
    case Tag::Split3: return "split3";
    case Tag::PartSplit3: return "partsplit3";
    case Tag::NonSplit3: return "nonsplit3";
  }
  return "?";
}

const char* stratum_name(Stratum s) {
  switch (s) {
    case Stratum::Central: return "central";
    case Stratum::Repeating: return "repeating";
    case Stratum::Reducible: return "reducible";
    case Stratum::PartiallyReducible: return "partially_reducible";
    case Stratum::Irreducible: return "irreducible";
  }
  return "?";
}

std::vector<Stratum> strata_for(int n) {
  if (n == 2) return {Stratum::Central, Stratum::Reducible, Stratum::Irreducible};
  if (n == 3)
    return {Stratum::Central, Stratum::Repeating, Stratum::Reducible, Stratum::PartiallyReducible,
            Stratum::Irreducible};
  throw std::invalid_argument("n must be 2 or 3");
}

std::vector<Tag> tags_for(int n) {
  if (n == 2) return {Tag::Split2, Tag::NonSplit2};
  if (n == 3) return {Tag::Split3, Tag::PartSplit3, Tag::NonSplit3};
  throw std::invalid_argument("n must be 2 or 3");
}

int tag_n(Tag t) { return (t == Tag::Split2 || t == Tag::NonSplit2) ? 2 : 3; }

u64 torus_modulus(Tag t, u64 q) {
  switch (t) {
    case Tag::Split2:
    case Tag::Split3: return q - 1;
    case Tag::NonSplit2: return q + 1;
    case Tag::PartSplit3: return q * q - 1;
    case Tag::NonSplit3: return q * q + q + 1;
  }
  throw std::invalid_argument("bad tag");
}

bool CVPoint::operator<(const CVPoint& o) const {
  if (tag != o.tag) return tag < o.tag;
  if (u != o.u) return u < o.u;
  return v < o.v;
}

namespace {

std::vector<u64> reduce_vec(std::vector<u64> w, u64 m) {
  for (auto& x : w) x %= m;
  return w;
}

std::vector<u64> neg_vec(const std::vector<u64>& w, u64 m) {
  std::vector<u64> out(w.size());
  for (size_t i = 0; i < w.size(); ++i) out[i] = (m - w[i]) % m;
  return out;
}

std::vector<u64> scale_vec(const std::vector<u64>& w, u64 s, u64 m) {
  std::vector<u64> out(w.size());
  for (size_t i = 0; i < w.size(); ++i) out[i] = num::mul_mod(w[i], s, m);
  return out;
}

std::vector<u64> third_column(const std::vector<u64>& u, const std::vector<u64>& v, u64 m) {
  std::vector<u64> w(u.size());
  for (size_t i = 0; i < u.size(); ++i) w[i] = (2 * m - u[i] - v[i]) % m;
  return w;
}

}  // namespace

CVPoint canonical(const CVPoint& raw, u64 q) {
  u64 m = torus_modulus(raw.tag, q);
  CVPoint p{raw.tag, reduce_vec(raw.u, m), {}};
  switch (raw.tag) {
    case Tag::Split2:
    case Tag::NonSplit2: {
      p.u = std::min(p.u, neg_vec(p.u, m));
      return p;
    }
    case Tag::PartSplit3: {
      p.u = std::min(p.u, scale_vec(p.u, q % m, m));
      return p;
    }
    case Tag::NonSplit3: {
      auto a = scale_vec(p.u, q % m, m);
      auto b = scale_vec(a, q % m, m);
      p.u = std::min({p.u, a, b});
      return p;
    }
    case Tag::Split3: {
      if (raw.v.size() != raw.u.size()) throw std::invalid_argument("Split3 needs two vectors of equal rank");
      std::vector<u64> c[3] = {p.u, reduce_vec(raw.v, m), {}};
      c[2] = third_column(c[0], c[1], m);
      bool first = true;
      std::pair<std::vector<u64>, std::vector<u64>> best;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;
          auto cand = std::make_pair(c[i], c[j]);
          if (first || cand < best) {
            best = std::move(cand);
            first = false;
          }
        }
      p.u = std::move(best.first);
      p.v = std::move(best.second);
      return p;
    }
  }
  throw std::invalid_argument("bad tag");
}

bool is_valid(const CVPoint& p, u64 q) {
  u64 m = torus_modulus(p.tag, q);
  switch (p.tag) {
    case Tag::Split2:
      return p.v.empty();
    case Tag::Split3:
      return p.v.size() == p.u.size();
    case Tag::NonSplit2: {
      for (u64 x : p.u)
        if ((2 * (x % m)) % m != 0) return true;
      return false;
    }
    case Tag::PartSplit3: {
      for (u64 x : p.u)
        if ((x % m) % (q + 1) != 0) return true;
      return false;
    }
    case Tag::NonSplit3: {
      u64 z3 = std::gcd<u64, u64>(3, q - 1);
      for (u64 x : p.u)
        if (num::mul_mod(x % m, z3, m) != 0) return true;
      return false;
    }
  }
  return false;
}

CVPoint make_point(Tag t, u64 q, std::vector<u64> u, std::vector<u64> v) {
  if (u.empty()) throw std::invalid_argument("rank must be at least 1");
  if (t != Tag::Split3 && !v.empty()) throw std::invalid_argument("second vector only valid for Split3");
  CVPoint p = canonical(CVPoint{t, std::move(u), std::move(v)}, q);
  if (!is_valid(p, q)) throw std::invalid_argument("point violates its torus side condition");
  return p;
}

Stratum classify_stratum(const CVPoint& p, u64 q) {
  u64 m = torus_modulus(p.tag, q);
  switch (p.tag) {
    case Tag::NonSplit2:
    case Tag::NonSplit3: return Stratum::Irreducible;
    case Tag::PartSplit3: return Stratum::PartiallyReducible;
    case Tag::Split2: {
      for (u64 x : p.u)
        if ((2 * x) % m != 0) return Stratum::Reducible;
      return Stratum::Central;
    }
    case Tag::Split3: {
      auto w = third_column(p.u, p.v, m);
      bool uv = p.u == p.v, uw = p.u == w, vw = p.v == w;
      if (uv && uw) return Stratum::Central;
      if (uv || uw || vw) return Stratum::Repeating;
      return Stratum::Reducible;
    }
  }
  throw std::invalid_argument("bad tag");
}

u64 content(const CVPoint& p, u64 q) {
  u64 g = torus_modulus(p.tag, q);
  for (u64 x : p.u) g = std::gcd(g, x);
  for (u64 x : p.v) g = std::gcd(g, x);
  return g;
}

u64 encode(const CVPoint& p, u64 q) {
  u64 m = torus_modulus(p.tag, q);
  u64 key = 0;
  auto push = [&](u64 digit) {
    if (key > (UINT64_MAX - digit) / m) throw std::overflow_error("point key overflow");
    key = key * m + digit;
  };
  for (u64 x : p.u) push(x);
  for (u64 x : p.v) push(x);
  if (key > (UINT64_MAX - static_cast<u64>(p.tag)) / 5) throw std::overflow_error("point key overflow");
  return key * 5 + static_cast<u64>(p.tag);
}

namespace {

void check_nr(int n, int r) {
  if (n != 2 && n != 3) throw std::invalid_argument("n must be 2 or 3");
  if (r < 1) throw std::invalid_argument("r must be at least 1");
}

Int zpow(u64 base, int e) { return qpoly::int_pow(Int(static_cast<unsigned long>(base)), static_cast<unsigned>(e)); }

}  // namespace

Int stratum_count_formula(int n, int r, u64 q, Stratum s) {
  check_nr(n, r);
  if (!num::prime_power(q)) throw std::invalid_argument("q is not a prime power");
  u64 z3 = std::gcd<u64, u64>(3, q - 1);
  u64 z2 = std::gcd<u64, u64>(2, q - 1);
  Rat qm1 = Rat(Int(q - 1)), qp1 = Rat(Int(q + 1));
  auto rpow = [&](const Rat& b, int e) {
    Rat out = 1;
    for (int i = 0; i < e; ++i) out *= b;
    return out;
  };
  if (n == 2) {
    switch (s) {
      case Stratum::Central: return zpow(z2, r);
      case Stratum::Reducible: return qpoly::to_int((rpow(qm1, r) - Rat(zpow(z2, r))) / 2);
      case Stratum::Irreducible: return qpoly::to_int((rpow(qp1, r) - Rat(zpow(z2, r))) / 2);
      default: throw std::invalid_argument("stratum not defined for n=2");
    }
  }
  Rat m2 = Rat(Int(q * q - 1)), m3 = Rat(Int(q * q + q + 1));
  switch (s) {
    case Stratum::Central: return zpow(z3, r);
    case Stratum::Repeating: return qpoly::to_int(rpow(qm1, r) - Rat(zpow(z3, r)));
    case Stratum::Reducible:
      return qpoly::to_int(rpow(qm1, 2 * r) / 6 - rpow(qm1, r) / 2 + Rat(zpow(z3, r)) / 3);
    case Stratum::PartiallyReducible: return qpoly::to_int((rpow(m2, r) - rpow(qm1, r)) / 2);
    case Stratum::Irreducible: return qpoly::to_int((rpow(m3, r) - Rat(zpow(z3, r))) / 3);
  }
  throw std::invalid_argument("bad stratum");
}

namespace {

// Stratum count polynomial for a fixed value of the unity count z = gcd(n,q-1).
Polynomial stratum_case_poly(int n, int r, Stratum s, u64 z) {
  Polynomial qm1 = poly_linear(1, -1);
  Polynomial qp1 = poly_linear(1, 1);
  Rat zr(qpoly::int_pow(Int(static_cast<unsigned long>(z)), static_cast<unsigned>(r)));
  if (n == 2) {
    switch (s) {
      case Stratum::Central: return qpoly::poly_const(zr);
      case Stratum::Reducible: return Rat(1, 2) * (poly_pow(qm1, r) - qpoly::poly_const(zr));
      case Stratum::Irreducible: return Rat(1, 2) * (poly_pow(qp1, r) - qpoly::poly_const(zr));
      default: throw std::invalid_argument("stratum not defined for n=2");
    }
  }
  Polynomial m2 = qm1 * qp1;                       // q^2-1
  Polynomial m3{{Rat(1), Rat(1), Rat(1)}};         // q^2+q+1
  switch (s) {
    case Stratum::Central: return qpoly::poly_const(zr);
    case Stratum::Repeating: return poly_pow(qm1, r) - qpoly::poly_const(zr);
    case Stratum::Reducible:
      return Rat(1, 6) * poly_pow(qm1, 2 * r) - Rat(1, 2) * poly_pow(qm1, r) +
             qpoly::poly_const(zr / 3);
    case Stratum::PartiallyReducible: return Rat(1, 2) * (poly_pow(m2, r) - poly_pow(qm1, r));
    case Stratum::Irreducible: return Rat(1, 3) * (poly_pow(m3, r) - qpoly::poly_const(zr));
  }
  throw std::invalid_argument("bad stratum");
}

}  // namespace

QuasiPolynomial stratum_count_qpoly(int n, int r, Stratum s) {
  check_nr(n, r);
  if (n == 2) {
    // z2 = 2 exactly when q is odd
    return QuasiPolynomial(std::vector<QuasiPolynomial::Case>{
        {2, {1}, stratum_case_poly(2, r, s, 2)},
        {2, {0}, stratum_case_poly(2, r, s, 1)},
    });
  }
  // z3 = 3 exactly when q = 1 mod 3
  return QuasiPolynomial(std::vector<QuasiPolynomial::Case>{
      {3, {1}, stratum_case_poly(3, r, s, 3)},
      {3, {0, 2}, stratum_case_poly(3, r, s, 1)},
  });
}

QuasiPolynomial epoly(int n, int r) {
  check_nr(n, r);
  Polynomial qm1 = poly_linear(1, -1);
  Polynomial qp1 = poly_linear(1, 1);
  if (n == 2) {
    return QuasiPolynomial(Rat(1, 2) * (poly_pow(qp1, r) + poly_pow(qm1, r)));
  }
  Polynomial m2 = qm1 * qp1;
  Polynomial m3{{Rat(1), Rat(1), Rat(1)}};
  return QuasiPolynomial(Rat(1, 6) * poly_pow(qm1, 2 * r) + Rat(1, 2) * poly_pow(m2, r) +
                         Rat(1, 3) * poly_pow(m3, r));
}

Int epoly_eval(int n, int r, u64 q) {
  if (!num::prime_power(q)) throw std::invalid_argument("q is not a prime power");
  return epoly(n, r).eval(q);
}

Int euler_char(int n, int r) { return epoly(n, r).eval(1); }

namespace {

// Streams all digit vectors of length d over Z/m in ascending odometer order.
template <typename Fn>
void visit_vectors(u64 m, int d, Fn&& fn) {
  std::vector<u64> digits(static_cast<size_t>(d), 0);
  for (;;) {
    fn(digits);
    int i = 0;
    while (i < d && ++digits[static_cast<size_t>(i)] == m) digits[static_cast<size_t>(i++)] = 0;
    if (i == d) return;
  }
}

}  // namespace

void enumerate_points(int n, int r, u64 q, const std::function<void(const CVPoint&)>& fn, u64 max_work) {
  check_nr(n, r);
  if (!num::prime_power(q)) throw std::invalid_argument("q is not a prime power");
  u64 work = 0;
  for (Tag t : tags_for(n)) {
    u64 m = torus_modulus(t, q);
    int d = (t == Tag::Split3) ? 2 * r : r;
    u64 raw = num::checked_pow(m, static_cast<unsigned>(d));
    work += raw;
    if (raw > max_work || work > max_work)
      throw WorkBoundExceeded("point enumeration work bound exceeded");
  }
  for (Tag t : tags_for(n)) {
    u64 m = torus_modulus(t, q);
    int d = (t == Tag::Split3) ? 2 * r : r;
    visit_vectors(m, d, [&](const std::vector<u64>& digits) {
      CVPoint p{t, {}, {}};
      if (t == Tag::Split3) {
        p.u.assign(digits.begin(), digits.begin() + r);
        p.v.assign(digits.begin() + r, digits.end());
      } else {
        p.u = digits;
      }
      if (!is_valid(p, q)) return;
      if (!(canonical(p, q) == p)) return;
      fn(p);
    });
  }
}

u64 stratum_count_enumerated(int n, int r, u64 q, Stratum s, u64 max_work) {
  u64 count = 0;
  enumerate_points(n, r, q, [&](const CVPoint& p) {
    if (classify_stratum(p, q) == s) ++count;
  }, max_work);
  return count;
}

std::vector<std::pair<Stratum, u64>> strata_counts_enumerated(int n, int r, u64 q, u64 max_work) {
  auto strata = strata_for(n);
  std::vector<std::pair<Stratum, u64>> out;
  for (Stratum s : strata) out.emplace_back(s, 0);
  enumerate_points(n, r, q, [&](const CVPoint& p) {
    Stratum s = classify_stratum(p, q);
    for (auto& [st, count] : out)
      if (st == s) ++count;
  }, max_work);
  return out;
}

}  // namespace charvar::cvpoints
