#include "charvar/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace charvar::oracle {

using ffield::poly_from;

Mat mat_identity(int n) {
  Mat m;
  m.n = n;
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat mat_scalar(int n, Elem c) {
  Mat m;
  m.n = n;
  for (int i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

bool is_scalar(const Mat& a) {
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      if (i == j ? a.at(i, j) != a.at(0, 0) : a.at(i, j) != 0) return false;
    }
  return true;
}

Mat mat_mul(const FieldCtx& F, const Mat& a, const Mat& b) {
  Mat c;
  c.n = a.n;
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      Elem s = 0;
      for (int k = 0; k < a.n; ++k) s = F.add(s, F.mul(a.at(i, k), b.at(k, j)));
      c.at(i, j) = s;
    }
  return c;
}

Mat mat_add_scalar(const FieldCtx& F, const Mat& a, Elem c) {
  Mat m = a;
  for (int i = 0; i < a.n; ++i) m.at(i, i) = F.add(m.at(i, i), c);
  return m;
}

Mat mat_pow(const FieldCtx& F, Mat a, u64 e) {
  Mat r = mat_identity(a.n);
  while (e) {
    if (e & 1) r = mat_mul(F, r, a);
    a = mat_mul(F, a, a);
    e >>= 1;
  }
  return r;
}

Elem mat_det(const FieldCtx& F, const Mat& a) {
  if (a.n == 2) return F.sub(F.mul(a.at(0, 0), a.at(1, 1)), F.mul(a.at(0, 1), a.at(1, 0)));
  Elem d = 0;
  d = F.mul(a.at(0, 0), F.sub(F.mul(a.at(1, 1), a.at(2, 2)), F.mul(a.at(1, 2), a.at(2, 1))));
  d = F.sub(d, F.mul(a.at(0, 1), F.sub(F.mul(a.at(1, 0), a.at(2, 2)), F.mul(a.at(1, 2), a.at(2, 0)))));
  d = F.add(d, F.mul(a.at(0, 2), F.sub(F.mul(a.at(1, 0), a.at(2, 1)), F.mul(a.at(1, 1), a.at(2, 0)))));
  return d;
}

Mat mat_inv(const FieldCtx& F, const Mat& a) {
  Elem det = mat_det(F, a);
  Elem idet = F.inv(det);
  Mat r;
  r.n = a.n;
  if (a.n == 2) {
    r.at(0, 0) = F.mul(idet, a.at(1, 1));
    r.at(0, 1) = F.mul(idet, F.neg(a.at(0, 1)));
    r.at(1, 0) = F.mul(idet, F.neg(a.at(1, 0)));
    r.at(1, 1) = F.mul(idet, a.at(0, 0));
    return r;
  }
  auto cof = [&](int i, int j) {
    int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
    return F.sub(F.mul(a.at(r0, c0), a.at(r1, c1)), F.mul(a.at(r0, c1), a.at(r1, c0)));
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.at(j, i) = F.mul(idet, cof(i, j));
  return r;
}

bool mat_commute(const FieldCtx& F, const Mat& a, const Mat& b) {
  return mat_mul(F, a, b) == mat_mul(F, b, a);
}

Mat companion(const FieldCtx& F, const Poly& f) {
  int d = f.deg();
  if ((d != 2 && d != 3) || f.lead() != 1) throw std::invalid_argument("companion: monic degree 2 or 3");
  Mat c;
  c.n = d;
  for (int i = 0; i + 1 < d; ++i) c.at(i + 1, i) = 1;
  for (int i = 0; i < d; ++i) c.at(i, d - 1) = F.neg(f.coeff(i));
  return c;
}

u64 mat_order(const FieldCtx& F, const Mat& a, u64 bound) {
  Mat id = mat_identity(a.n);
  Mat cur = a;
  for (u64 t = 1; t <= bound; ++t) {
    if (cur == id) return t;
    cur = mat_mul(F, cur, a);
  }
  throw std::domain_error("matrix order exceeds bound");
}

Poly charpoly(const FieldCtx& F, const Mat& a) {
  if (a.n == 2) {
    Elem tr = F.add(a.at(0, 0), a.at(1, 1));
    return poly_from({mat_det(F, a), F.neg(tr), 1});
  }
  Elem tr = F.add(F.add(a.at(0, 0), a.at(1, 1)), a.at(2, 2));
  Elem s2 = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      s2 = F.add(s2, F.sub(F.mul(a.at(i, i), a.at(j, j)), F.mul(a.at(i, j), a.at(j, i))));
  return poly_from({F.neg(mat_det(F, a)), s2, F.neg(tr), 1});
}

Poly min_poly(const FieldCtx& F, const Mat& a) {
  const int n = a.n;
  const int dim = n * n;
  struct Row {
    std::vector<Elem> vec;
    std::vector<Elem> comb;
    int pivot;
  };
  std::vector<Row> rows;
  Mat power = mat_identity(n);
  for (int j = 0;; ++j) {
    std::vector<Elem> vec(power.e.begin(), power.e.begin() + dim);
    std::vector<Elem> comb(static_cast<size_t>(j + 1), 0);
    comb[static_cast<size_t>(j)] = 1;
    for (const Row& row : rows) {
      Elem f = vec[static_cast<size_t>(row.pivot)];
      if (f == 0) continue;
      for (int t = 0; t < dim; ++t) vec[static_cast<size_t>(t)] = F.sub(vec[static_cast<size_t>(t)], F.mul(f, row.vec[static_cast<size_t>(t)]));
      for (size_t t = 0; t < row.comb.size(); ++t) comb[t] = F.sub(comb[t], F.mul(f, row.comb[t]));
    }
    int pivot = -1;
    for (int t = 0; t < dim; ++t)
      if (vec[static_cast<size_t>(t)] != 0) {
        pivot = t;
        break;
      }
    if (pivot < 0) return poly_from(std::move(comb));  // monic degree j by construction
    if (j == n) throw std::logic_error("minimal polynomial exceeds matrix size");
    Elem s = F.inv(vec[static_cast<size_t>(pivot)]);
    for (auto& x : vec) x = F.mul(s, x);
    for (auto& x : comb) x = F.mul(s, x);
    rows.push_back(Row{std::move(vec), std::move(comb), pivot});
    power = mat_mul(F, power, a);
  }
}

bool is_semisimple(const FieldCtx& F, const Mat& a) {
  Poly m = min_poly(F, a);
  Poly d = ffield::poly_deriv(F, m);
  if (d.is_zero()) return false;  // char-p corner: m' = 0 means a repeated factor
  return ffield::poly_gcd(F, m, d).deg() == 0;
}

u64 group_order(int n, u64 q, Group g) {
  u64 qn = num::checked_pow(q, static_cast<unsigned>(n));
  u64 out = 1;
  u64 qi = 1;
  for (int i = 0; i < n; ++i) {
    out *= qn - qi;
    qi *= q;
  }
  return g == Group::GL ? out : out / (q - 1);
}

const std::vector<Mat>& group_elements(const FieldCtx& F, int n, Group g, u64 max_work) {
  static std::map<std::tuple<u64, int, Group>, std::vector<Mat>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(F.q(), n, g);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  u64 total = num::checked_pow(F.q(), static_cast<unsigned>(n * n));
  if (total > max_work) throw WorkBoundExceeded("group scan work bound exceeded");
  std::vector<Mat> out;
  out.reserve(group_order(n, F.q(), g));
  Mat m;
  m.n = n;
  const int dim = n * n;
  for (u64 idx = 0; idx < total; ++idx) {
    u64 t = idx;
    for (int i = 0; i < dim; ++i) {
      m.e[static_cast<size_t>(i)] = t % F.q();
      t /= F.q();
    }
    Elem d = mat_det(F, m);
    if (g == Group::SL ? d == 1 : d != 0) out.push_back(m);
  }
  return cache.emplace(key, std::move(out)).first->second;
}

u64 centralizer_order(const FieldCtx& F, const MatTuple& tuple, Group g, u64 max_work) {
  if (tuple.empty()) throw std::invalid_argument("empty tuple");
  const auto& elems = group_elements(F, tuple[0].n, g, max_work);
  u64 count = 0;
  for (const Mat& x : elems) {
    bool ok = true;
    for (const Mat& a : tuple)
      if (!mat_commute(F, x, a)) {
        ok = false;
        break;
      }
    if (ok) ++count;
  }
  return count;
}

namespace {

void check_feasible(const FieldCtx& F, int n, int r, u64 max_work) {
  if (n != 2 && n != 3) throw std::invalid_argument("n must be 2 or 3");
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  u64 scan = num::checked_pow(F.q(), static_cast<unsigned>(n * n));
  if (scan > max_work) throw WorkBoundExceeded("oracle work bound exceeded");
  if (r >= 2) {
    u64 ss_est = num::checked_pow(F.q(), static_cast<unsigned>(n * n - 1));
    if (ss_est > max_work / ss_est) throw WorkBoundExceeded("oracle work bound exceeded");
  }
}

void extend_tuple(const FieldCtx& F, int r, MatTuple& tuple, const std::vector<Mat>& candidates,
                  const std::function<void(const MatTuple&)>& fn) {
  for (const Mat& a : candidates) {
    tuple.push_back(a);
    if (static_cast<int>(tuple.size()) == r) {
      fn(tuple);
    } else if (is_scalar(a)) {
      extend_tuple(F, r, tuple, candidates, fn);
    } else {
      std::vector<Mat> next;
      for (const Mat& b : candidates)
        if (mat_commute(F, a, b)) next.push_back(b);
      extend_tuple(F, r, tuple, next, fn);
    }
    tuple.pop_back();
  }
}

}  // namespace

void enumerate_commuting_semisimple(const FieldCtx& F, int n, int r,
                                    const std::function<void(const MatTuple&)>& fn, u64 max_work) {
  check_feasible(F, n, r, max_work);
  const auto& sl = group_elements(F, n, Group::SL, max_work);
  std::vector<Mat> ss;
  for (const Mat& a : sl)
    if (is_semisimple(F, a)) ss.push_back(a);
  MatTuple tuple;
  tuple.reserve(static_cast<size_t>(r));
  extend_tuple(F, r, tuple, ss, fn);
}

u64 encode_tuple(const MatTuple& t, u64 q) {
  u64 key = 0;
  for (const Mat& m : t) {
    for (int i = 0; i < m.n * m.n; ++i) {
      u64 d = m.e[static_cast<size_t>(i)];
      if (key > (UINT64_MAX - d) / q) throw std::overflow_error("tuple key overflow");
      key = key * q + d;
    }
  }
  return key;
}

Stratum stratum_from_sl_centralizer(int n, u64 q, u64 order) {
  std::vector<std::pair<u64, Stratum>> table;
  if (n == 2) {
    table = {{group_order(2, q, Group::SL), Stratum::Central},
             {q - 1, Stratum::Reducible},
             {q + 1, Stratum::Irreducible}};
  } else {
    table = {{group_order(3, q, Group::SL), Stratum::Central},
             {q * (q - 1) * (q * q - 1), Stratum::Repeating},
             {(q - 1) * (q - 1), Stratum::Reducible},
             {q * q - 1, Stratum::PartiallyReducible},
             {q * q + q + 1, Stratum::Irreducible}};
  }
  for (size_t i = 0; i < table.size(); ++i)
    for (size_t j = i + 1; j < table.size(); ++j)
      if (table[i].first == table[j].first)
        throw std::logic_error("centralizer-order table degenerate at this q");
  for (auto& [o, s] : table)
    if (o == order) return s;
  throw std::domain_error("centralizer order " + std::to_string(order) +
                          " not in the stratum table (non-semisimple leak?)");
}

GitCensus git_census(const FieldCtx& F, int n, int r, u64 max_work) {
  check_feasible(F, n, r, max_work);
  const u64 q = F.q();

  // Conjugation generators: a transvection, a cycle, and diag(g,1,..,1);
  // together they generate GL_n(F_q).
  std::vector<Mat> gens;
  {
    Mat t = mat_identity(n);
    t.at(0, 1) = 1;
    gens.push_back(t);
    Mat p;
    p.n = n;
    for (int i = 0; i < n; ++i) p.at((i + 1) % n, i) = 1;
    gens.push_back(p);
    Mat d = mat_identity(n);
    d.at(0, 0) = F.generator();
    gens.push_back(d);
  }
  std::vector<Mat> gens_inv;
  for (const Mat& g : gens) gens_inv.push_back(mat_inv(F, g));

  GitCensus census;
  census.n = n;
  census.r = r;
  census.q = q;

  std::unordered_set<u64> visited;
  enumerate_commuting_semisimple(F, n, r, [&](const MatTuple& tuple) {
    ++census.tuple_total;
    u64 key = encode_tuple(tuple, q);
    if (visited.count(key)) return;

    std::unordered_set<u64> orbit{key};
    std::deque<MatTuple> queue{tuple};
    u64 min_key = key;
    MatTuple min_tuple = tuple;
    while (!queue.empty()) {
      MatTuple cur = std::move(queue.front());
      queue.pop_front();
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        MatTuple img;
        img.reserve(cur.size());
        for (const Mat& a : cur) img.push_back(mat_mul(F, mat_mul(F, gens[gi], a), gens_inv[gi]));
        u64 k2 = encode_tuple(img, q);
        if (orbit.insert(k2).second) {
          if (k2 < min_key) {
            min_key = k2;
            min_tuple = img;
          }
          queue.push_back(std::move(img));
        }
      }
    }
    for (u64 k : orbit) visited.insert(k);

    CensusClass cls;
    cls.representative = min_tuple;
    cls.orbit_size = orbit.size();
    cls.sl_centralizer_order = centralizer_order(F, min_tuple, Group::SL, max_work);
    cls.gl_centralizer_order = centralizer_order(F, min_tuple, Group::GL, max_work);
    cls.stratum = stratum_from_sl_centralizer(n, q, cls.sl_centralizer_order);
    cls.point = point_of_tuple(F, min_tuple);
    census.class_counts[cls.stratum]++;
    census.classes.push_back(std::move(cls));
  }, max_work);

  return census;
}

int weyl_perm_count(const CVPoint& p, u64 q) {
  using cvpoints::Tag;
  switch (p.tag) {
    case Tag::Split3: {
      u64 m = cvpoints::torus_modulus(p.tag, q);
      std::vector<u64> w(p.u.size());
      for (size_t i = 0; i < p.u.size(); ++i) w[i] = (2 * m - p.u[i] - p.v[i]) % m;
      std::vector<std::pair<std::vector<u64>, std::vector<u64>>> perms;
      const std::vector<u64>* c[3] = {&p.u, &p.v, &w};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;
          perms.emplace_back(*c[i], *c[j]);
        }
      std::sort(perms.begin(), perms.end());
      perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
      return static_cast<int>(perms.size());
    }
    case Tag::NonSplit3: return 3;   // Galois fold orbit of a non-central point
    case Tag::PartSplit3: return 2;  // quadratic Galois fold
    default: throw std::invalid_argument("weyl_perm_count needs an n=3 point");
  }
}

namespace {

// Column vectors of V span; solve sum_m x_m col_m = target. Throws when the
// system is inconsistent.
std::vector<Elem> solve_columns(const FieldCtx& F, const std::vector<std::vector<Elem>>& cols,
                                const std::vector<Elem>& target) {
  size_t nrows = target.size(), ncols = cols.size();
  std::vector<std::vector<Elem>> m(nrows, std::vector<Elem>(ncols + 1, 0));
  for (size_t i = 0; i < nrows; ++i) {
    for (size_t j = 0; j < ncols; ++j) m[i][j] = cols[j][i];
    m[i][ncols] = target[i];
  }
  std::vector<int> pivot_of_col(ncols, -1);
  size_t rank = 0;
  for (size_t col = 0; col < ncols && rank < nrows; ++col) {
    size_t sel = rank;
    while (sel < nrows && m[sel][col] == 0) ++sel;
    if (sel == nrows) continue;
    std::swap(m[sel], m[rank]);
    Elem s = F.inv(m[rank][col]);
    for (auto& x : m[rank]) x = F.mul(s, x);
    for (size_t i = 0; i < nrows; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      Elem f = m[i][col];
      for (size_t j = 0; j <= ncols; ++j) m[i][j] = F.sub(m[i][j], F.mul(f, m[rank][j]));
    }
    pivot_of_col[col] = static_cast<int>(rank);
    ++rank;
  }
  for (size_t i = rank; i < nrows; ++i)
    if (m[i][ncols] != 0) throw std::domain_error("inconsistent linear system");
  std::vector<Elem> x(ncols, 0);
  for (size_t col = 0; col < ncols; ++col)
    if (pivot_of_col[col] >= 0) x[col] = m[static_cast<size_t>(pivot_of_col[col])][ncols];
  return x;
}

// Nullspace basis of the stacked rows (each row length n).
std::vector<std::vector<Elem>> nullspace(const FieldCtx& F, std::vector<std::vector<Elem>> rows, int n) {
  size_t rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < n && rank < rows.size(); ++col) {
    size_t sel = rank;
    while (sel < rows.size() && rows[sel][static_cast<size_t>(col)] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[rank]);
    Elem s = F.inv(rows[rank][static_cast<size_t>(col)]);
    for (auto& x : rows[rank]) x = F.mul(s, x);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][static_cast<size_t>(col)] == 0) continue;
      Elem f = rows[i][static_cast<size_t>(col)];
      for (int j = 0; j < n; ++j)
        rows[i][static_cast<size_t>(j)] = F.sub(rows[i][static_cast<size_t>(j)], F.mul(f, rows[rank][static_cast<size_t>(j)]));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<Elem>> basis;
  for (int freec = 0; freec < n; ++freec) {
    if (is_pivot[static_cast<size_t>(freec)]) continue;
    std::vector<Elem> v(static_cast<size_t>(n), 0);
    v[static_cast<size_t>(freec)] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i)
      v[static_cast<size_t>(pivot_col[i])] = F.neg(rows[i][static_cast<size_t>(freec)]);
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat mat_poly_eval(const FieldCtx& F, const Poly& h, const Mat& a) {
  Mat r = mat_scalar(a.n, 0);
  for (size_t i = h.c.size(); i-- > 0;) {
    r = mat_mul(F, r, a);
    r = mat_add_scalar(F, r, h.c[i]);
  }
  return r;
}

u64 mat_dlog(const FieldCtx& F, const Mat& base, const Mat& target, u64 order, u64 q) {
  u64 m = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(order))));
  if (m == 0) m = 1;
  std::unordered_map<u64, u64> baby;
  Mat cur = mat_identity(base.n);
  for (u64 j = 0; j < m; ++j) {
    baby.emplace(encode_tuple({cur}, q), j);
    cur = mat_mul(F, cur, base);
  }
  Mat giant = mat_pow(F, base, (order - m % order) % order);  // base^{-m}
  Mat gamma = target;
  for (u64 i = 0; i * m <= order; ++i) {
    auto it = baby.find(encode_tuple({gamma}, q));
    if (it != baby.end()) return (i * m + it->second) % order;
    gamma = mat_mul(F, gamma, giant);
  }
  throw std::domain_error("matrix discrete log failed (torus misidentification?)");
}

// Conjugator with P a P^{-1} = b for cyclic a, b sharing an irreducible
// charpoly of full degree: map the Krylov basis of a to that of b.
Mat krylov_conjugator(const FieldCtx& F, const Mat& a, const Mat& b) {
  int n = a.n;
  auto krylov = [&](const Mat& x) {
    Mat basis;
    basis.n = n;
    std::vector<Elem> vec(static_cast<size_t>(n), 0);
    vec[0] = 1;
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) basis.at(i, j) = vec[static_cast<size_t>(i)];
      std::vector<Elem> nxt(static_cast<size_t>(n), 0);
      for (int i = 0; i < n; ++i) {
        Elem s = 0;
        for (int k2 = 0; k2 < n; ++k2) s = F.add(s, F.mul(x.at(i, k2), vec[static_cast<size_t>(k2)]));
        nxt[static_cast<size_t>(i)] = s;
      }
      vec = std::move(nxt);
    }
    return basis;
  };
  Mat U = krylov(a), V = krylov(b);
  return mat_mul(F, V, mat_inv(F, U));
}

}  // namespace

MatTuple realize(const FieldCtx& F, const CVPoint& p) {
  using cvpoints::Tag;
  const u64 q = F.q();
  MatTuple out;
  switch (p.tag) {
    case Tag::Split2: {
      Elem g = F.generator();
      for (u64 e : p.u) {
        Mat m;
        m.n = 2;
        m.at(0, 0) = F.pow(g, static_cast<long long>(e));
        m.at(1, 1) = F.pow(g, -static_cast<long long>(e));
        out.push_back(m);
      }
      return out;
    }
    case Tag::Split3: {
      Elem g = F.generator();
      for (size_t i = 0; i < p.u.size(); ++i) {
        Mat m;
        m.n = 3;
        m.at(0, 0) = F.pow(g, static_cast<long long>(p.u[i]));
        m.at(1, 1) = F.pow(g, static_cast<long long>(p.v[i]));
        m.at(2, 2) = F.inv(F.mul(m.at(0, 0), m.at(1, 1)));
        out.push_back(m);
      }
      return out;
    }
    case Tag::NonSplit2: {
      Mat c = companion(F, ffield::find_primitive_poly(F, 2));
      Mat t = mat_pow(F, c, q - 1);  // norm-one torus generator, order q+1
      for (u64 e : p.u) out.push_back(mat_pow(F, t, e));
      return out;
    }
    case Tag::NonSplit3: {
      Mat c = companion(F, ffield::find_primitive_poly(F, 3));
      Mat t = mat_pow(F, c, q - 1);  // order q^2+q+1
      for (u64 e : p.u) out.push_back(mat_pow(F, t, e));
      return out;
    }
    case Tag::PartSplit3: {
      Mat b = companion(F, ffield::find_primitive_poly(F, 2));  // order q^2-1
      for (u64 e : p.u) {
        Mat bw = mat_pow(F, b, e);
        Mat m;
        m.n = 3;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) m.at(i, j) = bw.at(i, j);
        m.at(2, 2) = F.inv(mat_det(F, bw));  // determinant-compensating entry
        out.push_back(m);
      }
      return out;
    }
  }
  throw std::invalid_argument("bad tag");
}

CVPoint point_of_tuple(const FieldCtx& F, const MatTuple& tuple) {
  using cvpoints::Tag;
  if (tuple.empty()) throw std::invalid_argument("empty tuple");
  const u64 q = F.q();
  const int n = tuple[0].n;
  for (const Mat& a : tuple) {
    if (a.n != n) throw std::invalid_argument("mixed matrix sizes");
    if (mat_det(F, a) != 1) throw std::invalid_argument("tuple entries must lie in SL");
    if (!is_semisimple(F, a)) throw std::domain_error("tuple entry is not semisimple");
  }

  std::vector<Poly> chars;
  chars.reserve(tuple.size());
  for (const Mat& a : tuple) chars.push_back(charpoly(F, a));

  // torus type from the characteristic polynomial factorization shapes
  int irred_at = -1, partial_at = -1;
  std::vector<std::vector<Elem>> roots(tuple.size());
  for (size_t i = 0; i < tuple.size(); ++i) {
    roots[i] = ffield::poly_roots(F, chars[i]);
    if (roots[i].empty() && irred_at < 0) irred_at = static_cast<int>(i);
    if (n == 3 && roots[i].size() == 1 && partial_at < 0) partial_at = static_cast<int>(i);
  }

  if (irred_at >= 0) {
    // nonsplit torus: conjugate onto the standard companion torus and take logs
    u64 order = (n == 2) ? q + 1 : q * q + q + 1;
    Mat c = companion(F, ffield::find_primitive_poly(F, static_cast<unsigned>(n)));
    Mat t = mat_pow(F, c, q - 1);
    const Mat& a = tuple[static_cast<size_t>(irred_at)];
    u64 e = 0;
    bool found = false;
    Mat te = mat_identity(n);
    for (u64 cand = 0; cand < order; ++cand) {
      if (cand > 0) te = mat_mul(F, te, t);
      if (cand > 0 && charpoly(F, te) == chars[static_cast<size_t>(irred_at)]) {
        e = cand;
        found = true;
        break;
      }
    }
    if (!found) throw std::domain_error("irreducible charpoly not found in the standard torus");
    Mat target = mat_pow(F, t, e);
    Mat pconj = krylov_conjugator(F, a, target);
    Mat pinv = mat_inv(F, pconj);
    std::vector<u64> v;
    for (const Mat& x : tuple) {
      Mat y = mat_mul(F, mat_mul(F, pconj, x), pinv);
      v.push_back(mat_dlog(F, t, y, order, q));
    }
    return cvpoints::make_point(n == 2 ? Tag::NonSplit2 : Tag::NonSplit3, q, std::move(v));
  }

  if (partial_at >= 0) {
    // partially reducible: restrict to the invariant plane of the quadratic factor
    const Mat& a = tuple[static_cast<size_t>(partial_at)];
    Elem root = roots[static_cast<size_t>(partial_at)][0];
    Poly lin = poly_from({F.neg(root), 1});
    Poly h = ffield::poly_divmod(F, chars[static_cast<size_t>(partial_at)], lin).first;
    Mat ha = mat_poly_eval(F, h, a);
    std::vector<std::vector<Elem>> hrows(3, std::vector<Elem>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) hrows[static_cast<size_t>(i)][static_cast<size_t>(j)] = ha.at(i, j);
    auto plane = nullspace(F, hrows, 3);
    if (plane.size() != 2) throw std::domain_error("quadratic factor plane is not 2-dimensional");

    auto restrict_to_plane = [&](const Mat& x) {
      Mat rm;
      rm.n = 2;
      for (int col = 0; col < 2; ++col) {
        std::vector<Elem> img(3, 0);
        for (int i = 0; i < 3; ++i) {
          Elem s = 0;
          for (int j = 0; j < 3; ++j) s = F.add(s, F.mul(x.at(i, j), plane[static_cast<size_t>(col)][static_cast<size_t>(j)]));
          img[static_cast<size_t>(i)] = s;
        }
        auto coords = solve_columns(F, plane, img);
        rm.at(0, col) = coords[0];
        rm.at(1, col) = coords[1];
      }
      return rm;
    };

    Mat b = companion(F, ffield::find_primitive_poly(F, 2));
    u64 order = q * q - 1;
    Mat ra = restrict_to_plane(a);
    Poly rchar = charpoly(F, ra);
    u64 e = 0;
    bool found = false;
    Mat be = mat_identity(2);
    for (u64 cand = 0; cand < order; ++cand) {
      if (cand > 0) be = mat_mul(F, be, b);
      if (cand > 0 && charpoly(F, be) == rchar) {
        e = cand;
        found = true;
        break;
      }
    }
    if (!found) throw std::domain_error("quadratic charpoly not found in the GL_2 torus");
    Mat pconj = krylov_conjugator(F, ra, mat_pow(F, b, e));
    Mat pinv = mat_inv(F, pconj);
    std::vector<u64> w;
    for (const Mat& x : tuple) {
      Mat y = mat_mul(F, mat_mul(F, pconj, restrict_to_plane(x)), pinv);
      w.push_back(mat_dlog(F, b, y, order, q));
    }
    return cvpoints::make_point(Tag::PartSplit3, q, std::move(w));
  }

  // split: all eigenvalues rational; find the joint eigenspace columns
  std::vector<std::vector<Elem>> distinct(tuple.size());
  for (size_t i = 0; i < tuple.size(); ++i) {
    distinct[i] = roots[i];
    distinct[i].erase(std::unique(distinct[i].begin(), distinct[i].end()), distinct[i].end());
  }
  std::vector<std::vector<Elem>> columns;  // eigenvalue vectors, with multiplicity
  std::vector<size_t> pick(tuple.size(), 0);
  for (;;) {
    std::vector<std::vector<Elem>> stacked;
    for (size_t i = 0; i < tuple.size(); ++i) {
      Mat shifted = mat_add_scalar(F, tuple[i], F.neg(distinct[i][pick[i]]));
      for (int row = 0; row < n; ++row) {
        std::vector<Elem> rvec(static_cast<size_t>(n));
        for (int col = 0; col < n; ++col) rvec[static_cast<size_t>(col)] = shifted.at(row, col);
        stacked.push_back(std::move(rvec));
      }
    }
    size_t dim = nullspace(F, std::move(stacked), n).size();
    if (dim > 0) {
      std::vector<Elem> colvec(tuple.size());
      for (size_t i = 0; i < tuple.size(); ++i) colvec[i] = distinct[i][pick[i]];
      for (size_t d = 0; d < dim; ++d) columns.push_back(colvec);
    }
    size_t i = 0;
    while (i < pick.size() && ++pick[i] == distinct[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  if (static_cast<int>(columns.size()) != n)
    throw std::domain_error("joint eigenspaces do not fill the space (non-commuting tuple?)");

  Elem g = F.generator();
  auto dlogs = [&](const std::vector<Elem>& col) {
    std::vector<u64> out(col.size());
    for (size_t i = 0; i < col.size(); ++i) out[i] = ffield::dlog(F, g, col[i], q - 1);
    return out;
  };
  if (n == 2) return cvpoints::make_point(Tag::Split2, q, dlogs(columns[0]));
  return cvpoints::make_point(Tag::Split3, q, dlogs(columns[0]), dlogs(columns[1]));
}

}  // namespace charvar::oracle
