#include "charvar/ffield.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace charvar::ffield {

namespace {

constexpr u64 kTableLimit = 256;

void trim(std::vector<Elem>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

Poly poly_from(std::vector<Elem> coeffs) {
  trim(coeffs);
  return Poly{std::move(coeffs)};
}

std::vector<u64> FieldCtx::coeffs_of(Elem a) const {
  std::vector<u64> out(k_);
  for (unsigned i = 0; i < k_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

Elem FieldCtx::elem_from_coeffs(const std::vector<u64>& coeffs) const {
  if (coeffs.size() > k_) throw std::invalid_argument("coefficient vector longer than k");
  Elem a = 0;
  for (size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw std::invalid_argument("coefficient not reduced mod p");
    a = a * p_ + coeffs[i];
  }
  return a;
}

Elem FieldCtx::add(Elem a, Elem b) const {
  if (k_ == 1) return (a + b) % p_;
  Elem r = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

Elem FieldCtx::neg(Elem a) const {
  if (k_ == 1) return (p_ - a) % p_;
  Elem r = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return r;
}

Elem FieldCtx::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FieldCtx::mul_slow(Elem a, Elem b) const {
  if (k_ == 1) return (a * b) % p_;
  auto ca = coeffs_of(a), cb = coeffs_of(b);
  std::vector<u64> prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (ca[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  }
  // reduce mod the monic modulus
  for (size_t d = prod.size(); d-- > k_;) {
    u64 lead = prod[d];
    if (lead == 0) continue;
    prod[d] = 0;
    for (unsigned i = 0; i < k_; ++i) {
      u64 m = modulus_[i];
      if (m == 0) continue;
      u64& slot = prod[d - k_ + i];
      slot = (slot + (p_ - m % p_) % p_ * lead) % p_;
    }
  }
  prod.resize(k_);
  return elem_from_coeffs(prod);
}

Elem FieldCtx::mul(Elem a, Elem b) const {
  if (!mul_table_.empty()) return mul_table_[a * q_ + b];
  return mul_slow(a, b);
}

Elem FieldCtx::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inversion of zero");
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, static_cast<long long>(q_) - 2);
}

Elem FieldCtx::pow(Elem a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Elem r = 1, base = a;
  unsigned long long ue = static_cast<unsigned long long>(e);
  while (ue) {
    if (ue & 1) r = mul(r, base);
    base = mul(base, base);
    ue >>= 1;
  }
  return r;
}

u64 FieldCtx::elem_order(Elem a) const {
  if (a == 0) throw std::domain_error("order of zero");
  u64 t = q_ - 1;
  for (auto& [prime, exp] : num::factorize(q_ - 1)) {
    for (unsigned i = 0; i < exp; ++i) {
      if (pow(a, static_cast<long long>(t / prime)) == 1)
        t /= prime;
      else
        break;
    }
  }
  return t;
}

std::string FieldCtx::elem_str(Elem a) const {
  if (k_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  auto c = coeffs_of(a);
  std::string s;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (c[i] != 1 || i == 0) s += std::to_string(c[i]);
    if (i >= 1) {
      if (c[i] != 1) s += "*";
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

namespace {

// Irreducibility over the prime field for the modulus search. Root check
// suffices for degree <= 3; Rabin's criterion covers 4 <= k <= 6.
bool irreducible_over_prime(const FieldCtx& Fp, const Poly& f, unsigned k) {
  if (k <= 3) {
    for (u64 x = 0; x < Fp.p(); ++x)
      if (poly_eval(Fp, f, x) == 0) return false;
    if (k <= 1) return true;
    if (k == 3) return true;
    return true;  // k == 2: rootless quadratic is irreducible
  }
  const Poly X = poly_from({0, 1});
  auto frob = [&](unsigned d) {  // x^(p^d) mod f
    Poly r = X;
    for (unsigned i = 0; i < d; ++i) r = poly_pow_mod(Fp, r, Fp.p(), f);
    return r;
  };
  if (!(frob(k) == poly_mod(Fp, X, f))) return false;
  for (u64 ell : num::prime_divisors(k)) {
    Poly g = poly_gcd(Fp, poly_sub(Fp, frob(k / static_cast<unsigned>(ell)), X), f);
    if (g.deg() > 0) return false;
  }
  return true;
}

}  // namespace

FieldCtx make_field(u64 p, unsigned k, u64 max_q) {
  if (!num::is_prime(p)) throw std::invalid_argument("p is not prime");
  if (k < 1 || k > 6) throw std::invalid_argument("extension degree k out of range [1,6]");
  u64 q = num::checked_pow(p, k);
  if (q > max_q) throw std::invalid_argument("q exceeds the configured work bound");

  FieldCtx F;
  F.p_ = p;
  F.k_ = k;
  F.q_ = q;
  if (k == 1) {
    F.modulus_ = {0, 1};  // convention: prime field, modulus x
  } else {
    FieldCtx Fp = make_field(p, 1, max_q);
    // Candidate index order is lexicographic on (a_{k-1},...,a_0).
    for (u64 idx = 0;; ++idx) {
      if (idx >= q) throw std::logic_error("no irreducible modulus found");
      std::vector<Elem> lower(k);
      u64 t = idx;
      for (unsigned i = 0; i < k; ++i) {
        lower[i] = t % p;
        t /= p;
      }
      Poly f = monic_with(Fp, k, lower);
      if (irreducible_over_prime(Fp, f, k)) {
        F.modulus_.assign(f.c.begin(), f.c.end());
        break;
      }
    }
  }

  if (q <= kTableLimit) {
    F.mul_table_.resize(q * q);
    for (u64 a = 0; a < q; ++a)
      for (u64 b = a; b < q; ++b) {
        Elem m = F.mul_slow(a, b);
        F.mul_table_[a * q + b] = m;
        F.mul_table_[b * q + a] = m;
      }
    F.inv_table_.assign(q, 0);
    for (u64 a = 1; a < q; ++a) {
      if (F.inv_table_[a]) continue;
      Elem ia = F.pow(a, static_cast<long long>(q) - 2);
      F.inv_table_[a] = ia;
      F.inv_table_[ia] = a;
    }
  }

  for (Elem a = 1; a < q; ++a) {
    if (F.elem_order(a) == q - 1) {
      F.generator_ = a;
      break;
    }
  }
  return F;
}

Poly poly_add(const FieldCtx& F, const Poly& a, const Poly& b) {
  std::vector<Elem> c(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return poly_from(std::move(c));
}

Poly poly_sub(const FieldCtx& F, const Poly& a, const Poly& b) {
  std::vector<Elem> c(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return poly_from(std::move(c));
}

Poly poly_mul(const FieldCtx& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  std::vector<Elem> c(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a.c[i], b.c[j]));
  }
  return poly_from(std::move(c));
}

Poly poly_scale(const FieldCtx& F, Elem s, const Poly& a) {
  std::vector<Elem> c(a.c);
  for (auto& x : c) x = F.mul(s, x);
  return poly_from(std::move(c));
}

std::pair<Poly, Poly> poly_divmod(const FieldCtx& F, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly rem = a;
  if (a.deg() < b.deg()) return {Poly{}, rem};
  std::vector<Elem> quo(static_cast<size_t>(a.deg() - b.deg() + 1), 0);
  Elem ilead = F.inv(b.lead());
  while (rem.deg() >= b.deg()) {
    int shift = rem.deg() - b.deg();
    Elem fac = F.mul(rem.lead(), ilead);
    quo[static_cast<size_t>(shift)] = fac;
    std::vector<Elem> c(rem.c);
    for (size_t i = 0; i < b.c.size(); ++i) {
      size_t pos = i + static_cast<size_t>(shift);
      c[pos] = F.sub(c[pos], F.mul(fac, b.c[i]));
    }
    rem = poly_from(std::move(c));
  }
  return {poly_from(std::move(quo)), rem};
}

Poly poly_mod(const FieldCtx& F, const Poly& a, const Poly& b) { return poly_divmod(F, a, b).second; }

Poly poly_gcd(const FieldCtx& F, Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && a.lead() != 1) a = poly_scale(F, F.inv(a.lead()), a);
  return a;
}

Poly poly_deriv(const FieldCtx& F, const Poly& a) {
  if (a.deg() < 1) return Poly{};
  std::vector<Elem> c(static_cast<size_t>(a.deg()), 0);
  for (int i = 1; i <= a.deg(); ++i) {
    Elem m = static_cast<Elem>(static_cast<u64>(i) % F.p());
    // i*a_i means repeated addition of a_i, i.e. multiply by (i mod p) as field scalar
    c[static_cast<size_t>(i - 1)] = F.mul(m, a.c[static_cast<size_t>(i)]);
  }
  return poly_from(std::move(c));
}

Elem poly_eval(const FieldCtx& F, const Poly& a, Elem x) {
  Elem r = 0;
  for (size_t i = a.c.size(); i-- > 0;) r = F.add(F.mul(r, x), a.c[i]);
  return r;
}

Poly poly_pow_mod(const FieldCtx& F, const Poly& base, u64 e, const Poly& m) {
  if (m.deg() < 1) throw std::invalid_argument("pow_mod modulus must be nonconstant");
  Poly r = poly_from({1});
  Poly b = poly_mod(F, base, m);
  while (e) {
    if (e & 1) r = poly_mod(F, poly_mul(F, r, b), m);
    b = poly_mod(F, poly_mul(F, b, b), m);
    e >>= 1;
  }
  return r;
}

Poly monic_with(const FieldCtx&, unsigned d, const std::vector<Elem>& lower) {
  std::vector<Elem> c(d + 1, 0);
  for (size_t i = 0; i < lower.size() && i < d; ++i) c[i] = lower[i];
  c[d] = 1;
  return Poly{std::move(c)};
}

namespace {

// Splits a monic product of distinct linear factors into its roots.
// Deterministic: separator candidates are tried in enumeration order.
// Only reached for odd q (even q never exceeds the scan limit).
void split_linear(const FieldCtx& F, const Poly& g, std::vector<Elem>& out) {
  if (g.deg() <= 0) return;
  if (g.deg() == 1) {
    out.push_back(F.neg(g.c[0]));
    return;
  }
  const Poly one = poly_from({1});
  for (Elem c = 0; c < F.q(); ++c) {
    Poly shifted = poly_from({c, 1});  // x + c
    Poly pw = poly_pow_mod(F, shifted, (F.q() - 1) / 2, g);
    Poly s = poly_gcd(F, poly_sub(F, pw, one), g);
    if (s.deg() > 0 && s.deg() < g.deg()) {
      split_linear(F, s, out);
      split_linear(F, poly_divmod(F, g, s).first, out);
      return;
    }
  }
  throw std::logic_error("equal-degree split failed");
}

}  // namespace

std::vector<Elem> poly_roots(const FieldCtx& F, const Poly& f) {
  if (f.deg() < 1 || f.deg() > 3) throw std::invalid_argument("poly_roots: degree must be 1..3");
  if (f.lead() != 1) throw std::invalid_argument("poly_roots: polynomial must be monic");

  std::vector<Elem> distinct;
  if (F.q() <= kRootScanLimit) {
    for (Elem x = 0; x < F.q(); ++x)
      if (poly_eval(F, f, x) == 0) distinct.push_back(x);
  } else {
    const Poly X = poly_from({0, 1});
    Poly xq = poly_pow_mod(F, X, F.q(), f);
    Poly g = poly_gcd(F, poly_sub(F, xq, X), f);
    split_linear(F, g, distinct);
  }

  std::vector<Elem> out;
  Poly rest = f;
  for (Elem a : distinct) {
    Poly lin = poly_from({F.neg(a), 1});
    while (rest.deg() >= 1 && poly_eval(F, rest, a) == 0) {
      out.push_back(a);
      rest = poly_divmod(F, rest, lin).first;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_irreducible(const FieldCtx& F, const Poly& f) {
  if (f.deg() != 2 && f.deg() != 3) throw std::invalid_argument("is_irreducible: degree must be 2 or 3");
  if (f.lead() != 1) throw std::invalid_argument("is_irreducible: polynomial must be monic");
  if (F.q() <= kRootScanLimit) {
    for (Elem x = 0; x < F.q(); ++x)
      if (poly_eval(F, f, x) == 0) return false;
    return true;
  }
  const Poly X = poly_from({0, 1});
  Poly xq = poly_pow_mod(F, X, F.q(), f);
  return poly_gcd(F, poly_sub(F, xq, X), f).deg() == 0;
}

Poly find_primitive_poly(const FieldCtx& F, unsigned d) {
  if (d != 2 && d != 3) throw std::invalid_argument("find_primitive_poly: d must be 2 or 3");
  u64 n = num::checked_pow(F.q(), d) - 1;
  auto primes = num::prime_divisors(n);
  const Poly X = poly_from({0, 1});
  const Poly one = poly_from({1});
  u64 total = num::checked_pow(F.q(), d);
  for (u64 idx = 0; idx < total; ++idx) {
    std::vector<Elem> lower(d);
    u64 t = idx;
    for (unsigned i = 0; i < d; ++i) {
      lower[i] = t % F.q();
      t /= F.q();
    }
    Poly f = monic_with(F, d, lower);
    if (!is_irreducible(F, f)) continue;
    bool primitive = true;
    for (u64 ell : primes) {
      if (poly_pow_mod(F, X, n / ell, f) == one) {
        primitive = false;
        break;
      }
    }
    if (primitive) return f;
  }
  throw std::logic_error("no primitive polynomial found");
}

u64 dlog(const FieldCtx& F, Elem base, Elem target, u64 order) {
  u64 m = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(order))));
  if (m == 0) m = 1;
  std::unordered_map<Elem, u64> baby;
  Elem cur = 1;
  for (u64 j = 0; j < m; ++j) {
    baby.emplace(cur, j);
    cur = F.mul(cur, base);
  }
  Elem giant = F.pow(base, -static_cast<long long>(m));
  Elem gamma = target;
  for (u64 i = 0; i * m <= order; ++i) {
    auto it = baby.find(gamma);
    if (it != baby.end()) {
      u64 e = i * m + it->second;
      if (e < order) return e;
    }
    gamma = F.mul(gamma, giant);
  }
  throw std::domain_error("discrete log does not exist");
}

}  // namespace charvar::ffield
