#include "charvar/dynamics.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace charvar::dynamics {

std::vector<IntMat> out_generators(int r) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  auto ident = identity_mat(r);
  std::vector<IntMat> gens;
  if (r == 1) {
    gens.push_back(IntMat{{-1}});  // GL_1(Z) = {+-1}
    return gens;
  }
  IntMat t = ident;
  t[0][1] = 1;
  gens.push_back(t);
  IntMat p(static_cast<size_t>(r), std::vector<long long>(static_cast<size_t>(r), 0));
  for (int i = 0; i < r; ++i) p[static_cast<size_t>((i + 1) % r)][static_cast<size_t>(i)] = 1;
  gens.push_back(p);
  IntMat s = ident;
  s[0][0] = s[1][1] = 0;
  s[0][1] = s[1][0] = 1;
  gens.push_back(s);
  IntMat nm = ident;
  nm[0][0] = -1;
  gens.push_back(nm);
  return gens;
}

IntMat identity_mat(int r) {
  IntMat m(static_cast<size_t>(r), std::vector<long long>(static_cast<size_t>(r), 0));
  for (int i = 0; i < r; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return m;
}

Int det_int(const IntMat& m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

namespace {

std::vector<std::vector<u64>> reduce_mat(const IntMat& M, u64 m) {
  size_t r = M.size();
  std::vector<std::vector<u64>> out(r, std::vector<u64>(r));
  for (size_t i = 0; i < r; ++i) {
    if (M[i].size() != r) throw std::invalid_argument("matrix is not square");
    for (size_t j = 0; j < r; ++j) {
      long long v = M[i][j] % static_cast<long long>(m);
      if (v < 0) v += static_cast<long long>(m);
      out[i][j] = static_cast<u64>(v);
    }
  }
  return out;
}

std::vector<u64> apply_mod(const std::vector<std::vector<u64>>& M, const std::vector<u64>& v, u64 m) {
  std::vector<u64> out(v.size(), 0);
  for (size_t i = 0; i < v.size(); ++i) {
    u64 acc = 0;
    for (size_t j = 0; j < v.size(); ++j) acc = (acc + num::mul_mod(M[i][j], v[j], m)) % m;
    out[i] = acc;
  }
  return out;
}

}  // namespace

CVPoint act(const IntMat& M, const CVPoint& p, u64 q) {
  if (M.size() != p.rank()) throw std::invalid_argument("matrix rank does not match the point");
  u64 m = cvpoints::torus_modulus(p.tag, q);
  Int d = det_int(M) % Int(static_cast<unsigned long>(m));
  if (d < 0) d += Int(static_cast<unsigned long>(m));
  if (!(d == Int(1) % Int(static_cast<unsigned long>(m)) ||
        d == Int(static_cast<unsigned long>(m - 1) % m)))
    throw std::invalid_argument("determinant is not +-1 mod the modulus: not a GL_r(Z) image");
  auto Mm = reduce_mat(M, m);
  CVPoint img{p.tag, apply_mod(Mm, p.u, m), {}};
  if (p.tag == cvpoints::Tag::Split3) img.v = apply_mod(Mm, p.v, m);
  return cvpoints::canonical(img, q);
}

u64 orbit_size(const CVPoint& p, u64 q, u64 max_orbit, std::vector<CVPoint>* elements) {
  CVPoint start = cvpoints::canonical(p, q);
  auto gens = out_generators(static_cast<int>(p.rank()));
  std::unordered_set<u64> seen{cvpoints::encode(start, q)};
  std::deque<CVPoint> queue{start};
  if (elements) elements->assign(1, start);
  while (!queue.empty()) {
    CVPoint cur = std::move(queue.front());
    queue.pop_front();
    for (const IntMat& g : gens) {
      CVPoint img = act(g, cur, q);
      if (seen.insert(cvpoints::encode(img, q)).second) {
        if (seen.size() > max_orbit) throw WorkBoundExceeded("orbit size guard exceeded");
        if (elements) elements->push_back(img);
        queue.push_back(std::move(img));
      }
    }
  }
  if (elements) std::sort(elements->begin(), elements->end());
  return seen.size();
}

OrbitReport orbit_census(int n, int r, u64 q, u64 max_work) {
  OrbitReport report;
  report.n = n;
  report.r = r;
  report.q = q;
  report.total = cvpoints::epoly_eval(n, r, q);
  auto gens = out_generators(r);

  std::unordered_set<u64> visited;
  cvpoints::enumerate_points(n, r, q, [&](const CVPoint& p) {
    u64 key = cvpoints::encode(p, q);
    if (visited.count(key)) return;

    OrbitRecord rec;
    rec.representative = p;
    rec.stratum = cvpoints::classify_stratum(p, q);
    rec.content = cvpoints::content(p, q);

    std::unordered_set<u64> orbit{key};
    std::deque<CVPoint> queue{p};
    while (!queue.empty()) {
      CVPoint cur = std::move(queue.front());
      queue.pop_front();
      for (const IntMat& g : gens) {
        CVPoint img = act(g, cur, q);
        if (orbit.insert(cvpoints::encode(img, q)).second) {
          if (cvpoints::classify_stratum(img, q) != rec.stratum)
            throw std::logic_error("orbit crosses a stratum boundary");
          if (cvpoints::content(img, q) != rec.content)
            throw std::logic_error("orbit content is not constant");
          queue.push_back(std::move(img));
        }
      }
    }
    rec.size = orbit.size();
    for (u64 k : orbit) visited.insert(k);
    report.sizes_by_stratum[rec.stratum][rec.size]++;
    report.max_orbit = std::max(report.max_orbit, rec.size);
    report.orbits.push_back(std::move(rec));
  }, max_work);

  report.max_ratio = Rat(Int(report.max_orbit)) / Rat(report.total);
  report.max_ratio.canonicalize();
  return report;
}

std::vector<RatioRow> ratio_table(int n, int r, const std::vector<u64>& qs, u64 max_work) {
  std::vector<RatioRow> rows;
  for (u64 q : qs) {
    OrbitReport rep = orbit_census(n, r, q, max_work);
    rows.push_back(RatioRow{q, rep.total, rep.max_orbit, rep.max_ratio});
  }
  return rows;
}

Rat stratum_limit_bound(int n, Stratum s) {
  if (n == 2) {
    switch (s) {
      case Stratum::Central: return Rat(0);
      case Stratum::Reducible: return Rat(1, 2);
      case Stratum::Irreducible: return Rat(1, 2);
      default: throw std::invalid_argument("stratum not defined for n=2");
    }
  }
  if (n == 3) {
    switch (s) {
      case Stratum::Central: return Rat(0);
      case Stratum::Repeating:
      case Stratum::Reducible: return Rat(1, 6);  // basefield family
      case Stratum::PartiallyReducible: return Rat(1, 2);
      case Stratum::Irreducible: return Rat(1, 3);
    }
  }
  throw std::invalid_argument("n must be 2 or 3");
}

bool verify_subgroup_containment(const CVPoint& p, u64 q, u64 max_orbit) {
  CVPoint start = cvpoints::canonical(p, q);
  u64 c = cvpoints::content(start, q);
  std::vector<CVPoint> elements;
  orbit_size(start, q, max_orbit, &elements);
  for (const CVPoint& x : elements) {
    if (x.tag != start.tag) return false;
    if (cvpoints::content(x, q) != c) return false;
  }
  return true;
}

std::vector<std::vector<u64>> raw_orbit(const std::vector<u64>& start, u64 m, u64 max_orbit) {
  if (start.empty()) throw std::invalid_argument("empty vector");
  auto gens = out_generators(static_cast<int>(start.size()));
  std::vector<std::vector<std::vector<u64>>> reduced;
  for (const IntMat& g : gens) reduced.push_back(reduce_mat(g, m));

  auto key_of = [&](const std::vector<u64>& v) {
    u64 k = 0;
    for (u64 x : v) k = k * m + x;
    return k;
  };
  std::vector<u64> s0(start);
  for (auto& x : s0) x %= m;
  std::unordered_set<u64> seen{key_of(s0)};
  std::deque<std::vector<u64>> queue{s0};
  std::vector<std::vector<u64>> out{s0};
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : reduced) {
      auto img = apply_mod(g, cur, m);
      if (seen.insert(key_of(img)).second) {
        if (seen.size() > max_orbit) throw WorkBoundExceeded("orbit size guard exceeded");
        out.push_back(img);
        queue.push_back(std::move(img));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int jordan_totient(int r, u64 m) {
  if (r < 1 || m < 1) throw std::invalid_argument("jordan_totient needs r, m >= 1");
  Int result = qpoly::int_pow(Int(static_cast<unsigned long>(m)), static_cast<unsigned>(r));
  for (u64 p : num::prime_divisors(m)) {
    Int pr = qpoly::int_pow(Int(static_cast<unsigned long>(p)), static_cast<unsigned>(r));
    result /= pr;
    result *= pr - 1;
  }
  return result;
}

}  // namespace charvar::dynamics
