#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "charvar/cvpoints.hpp"
#include "charvar/oracle.hpp"

#include <map>
#include <random>

using namespace charvar;
using namespace charvar::cvpoints;
using qpoly::Int;

TEST_CASE("canonical examples") {
  // NonSplit2 v=(3,0), q=3: modulus 4, fold v ~ -v
  CVPoint a = canonical(CVPoint{Tag::NonSplit2, {3, 0}, {}}, 3);
  CHECK(a.u == std::vector<u64>{1, 0});

  // Split3 (u,v)=((2),(1)) over q=4: columns {2,1,0} mod 3, minimum ordering (0),(1)
  CVPoint b = canonical(CVPoint{Tag::Split3, {2}, {1}}, 4);
  CHECK(b.u == std::vector<u64>{0});
  CHECK(b.v == std::vector<u64>{1});

  // PartSplit3 w=(5), q=2: modulus 3, w=2 folds to min{2, 2*2 mod 3} = 1
  CVPoint c = canonical(CVPoint{Tag::PartSplit3, {5}, {}}, 2);
  CHECK(c.u == std::vector<u64>{1});
}

TEST_CASE("canonical is idempotent and constant on fold orbits") {
  std::mt19937 rng(20240811);
  for (u64 q : {3ull, 4ull, 5ull, 7ull}) {
    for (int r : {1, 2, 3}) {
      for (Tag t : {Tag::Split2, Tag::NonSplit2, Tag::Split3, Tag::PartSplit3, Tag::NonSplit3}) {
        u64 m = torus_modulus(t, q);
        for (int trial = 0; trial < 50; ++trial) {
          std::vector<u64> u(static_cast<size_t>(r)), v;
          for (auto& x : u) x = rng() % m;
          if (t == Tag::Split3) {
            v.resize(static_cast<size_t>(r));
            for (auto& x : v) x = rng() % m;
          }
          CVPoint raw{t, u, v};
          CVPoint c1 = canonical(raw, q);
          CHECK(canonical(c1, q) == c1);

          // apply a random fold element, canonical form must not move
          CVPoint folded = raw;
          switch (t) {
            case Tag::Split2:
            case Tag::NonSplit2: {
              for (auto& x : folded.u) x = (m - x) % m;
              break;
            }
            case Tag::PartSplit3: {
              for (auto& x : folded.u) x = (x * (q % m)) % m;
              break;
            }
            case Tag::NonSplit3: {
              u64 s = (trial % 2) ? q % m : (q * q) % m;
              for (auto& x : folded.u) x = num::mul_mod(x, s, m);
              break;
            }
            case Tag::Split3: {
              // swap two columns, or rotate all three
              std::vector<u64> w(folded.u.size());
              for (size_t i = 0; i < w.size(); ++i) w[i] = (2 * m - folded.u[i] - folded.v[i]) % m;
              if (trial % 2) {
                folded.u.swap(folded.v);
              } else {
                folded.u = folded.v;
                folded.v = w;
              }
              break;
            }
          }
          CHECK(canonical(folded, q) == c1);
        }
      }
    }
  }
}

TEST_CASE("side conditions reject central vectors") {
  CHECK_THROWS_AS(make_point(Tag::NonSplit2, 3, {2, 0}), std::invalid_argument);  // both 2-torsion mod 4
  CHECK_THROWS_AS(make_point(Tag::NonSplit2, 3, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(make_point(Tag::PartSplit3, 2, {0}), std::invalid_argument);
  CHECK_NOTHROW(make_point(Tag::NonSplit2, 3, {1, 0}));
  // q=4: z3 = 3, modulus 21, 3-torsion residues {0,7,14}
  CHECK_THROWS_AS(make_point(Tag::NonSplit3, 4, {7, 14}), std::invalid_argument);
  CHECK_NOTHROW(make_point(Tag::NonSplit3, 4, {1, 0}));
}

TEST_CASE("classify_stratum examples") {
  CHECK(classify_stratum(CVPoint{Tag::Split3, {0, 0}, {0, 0}}, 5) == Stratum::Central);
  // columns {u, u, -2u} with 3u != 0 over q=7 (modulus 6)
  CVPoint rep = canonical(CVPoint{Tag::Split3, {1}, {1}}, 7);
  CHECK(classify_stratum(rep, 7) == Stratum::Repeating);
  CHECK(classify_stratum(CVPoint{Tag::NonSplit3, {1}, {}}, 2) == Stratum::Irreducible);
  CHECK(classify_stratum(canonical(CVPoint{Tag::Split3, {1}, {2}}, 7), 7) == Stratum::Reducible);
  // n=2 central: all coordinates self-inverse
  CHECK(classify_stratum(CVPoint{Tag::Split2, {0, 2}, {}}, 5) == Stratum::Central);
  CHECK(classify_stratum(CVPoint{Tag::Split2, {1, 0}, {}}, 5) == Stratum::Reducible);
}

TEST_CASE("stratum_count_formula examples") {
  CHECK(stratum_count_formula(3, 1, 2, Stratum::Irreducible) == 2);
  CHECK(stratum_count_formula(3, 2, 2, Stratum::PartiallyReducible) == 4);
  CHECK(stratum_count_formula(2, 2, 3, Stratum::Irreducible) == 6);
  CHECK(stratum_count_formula(2, 2, 3, Stratum::Central) == 4);
  CHECK_THROWS_AS(stratum_count_formula(2, 2, 6, Stratum::Central), std::invalid_argument);
  CHECK_THROWS_AS(stratum_count_formula(4, 1, 2, Stratum::Central), std::invalid_argument);
}

TEST_CASE("epoly spot values and euler characteristics") {
  CHECK(epoly_eval(2, 2, 3) == 10);
  CHECK(epoly_eval(3, 2, 2) == 21);
  CHECK(epoly_eval(3, 1, 3) == 9);
  CHECK(euler_char(2, 2) == 2);
  CHECK(euler_char(3, 2) == 3);
  CHECK(euler_char(2, 1) == 1);
  for (int r = 1; r <= 5; ++r) {
    CHECK(euler_char(2, r) == qpoly::int_pow(Int(2), static_cast<unsigned>(r - 1)));
    CHECK(euler_char(3, r) == qpoly::int_pow(Int(3), static_cast<unsigned>(r - 1)));
  }
}

TEST_CASE("enumerated counts match the formulas on the small grid") {
  for (int r = 1; r <= 3; ++r) {
    for (u64 q : num::prime_powers_upto(9)) {
      auto counts = strata_counts_enumerated(2, r, q);
      Int total = 0;
      for (auto& [s, c] : counts) {
        CHECK(Int(static_cast<unsigned long>(c)) == stratum_count_formula(2, r, q, s));
        total += static_cast<unsigned long>(c);
      }
      CHECK(total == epoly_eval(2, r, q));
    }
  }
  for (int r = 1; r <= 2; ++r) {
    for (u64 q : num::prime_powers_upto(5)) {
      auto counts = strata_counts_enumerated(3, r, q);
      Int total = 0;
      for (auto& [s, c] : counts) {
        CHECK(Int(static_cast<unsigned long>(c)) == stratum_count_formula(3, r, q, s));
        total += static_cast<unsigned long>(c);
      }
      CHECK(total == epoly_eval(3, r, q));
    }
  }
  // spot example: per-stratum counts at (3, 1, q=2) are (1, 0, 0, 1, 2)
  auto c312 = strata_counts_enumerated(3, 1, 2);
  CHECK(c312[0].second == 1);
  CHECK(c312[1].second == 0);
  CHECK(c312[2].second == 0);
  CHECK(c312[3].second == 1);
  CHECK(c312[4].second == 2);
  CHECK(stratum_count_enumerated(2, 2, 3, Stratum::Central) == 4);
  CHECK(stratum_count_enumerated(3, 2, 2, Stratum::Irreducible) == 16);
}

TEST_CASE("enumerate_points emits each point once, totals match") {
  for (auto [n, r, q] : {std::tuple<int, int, u64>{2, 1, 3}, {3, 1, 2}, {2, 2, 2}, {3, 2, 3}}) {
    std::map<std::vector<u64>, int> seen;
    u64 count = 0;
    enumerate_points(n, r, q, [&](const CVPoint& p) {
      CHECK(canonical(p, q) == p);
      CHECK(is_valid(p, q));
      ++count;
      std::vector<u64> key{static_cast<u64>(p.tag)};
      key.insert(key.end(), p.u.begin(), p.u.end());
      key.insert(key.end(), p.v.begin(), p.v.end());
      seen[key]++;
      CHECK(seen[key] == 1);
    });
    CHECK(Int(count) == epoly_eval(n, r, q));
  }
}

TEST_CASE("quasi-polynomial cases agree with direct evaluation") {
  for (int n : {2, 3}) {
    for (int r : {1, 2, 3}) {
      auto ep = epoly(n, r);
      for (u64 q : num::prime_powers_upto(100)) {
        Int total = 0;
        for (auto s : strata_for(n)) {
          Int direct = stratum_count_formula(n, r, q, s);
          CHECK(stratum_count_qpoly(n, r, s).eval(q) == direct);
          total += direct;
        }
        CHECK(ep.eval(q) == total);
      }
    }
  }
}

TEST_CASE("integrality of every formula for prime powers up to 10^4") {
  auto qs = num::prime_powers_upto(10000);
  for (int n : {2, 3}) {
    for (int r : {1, 2, 3}) {
      for (u64 q : qs) {
        for (auto s : strata_for(n)) {
          CHECK_NOTHROW(stratum_count_formula(n, r, q, s));  // throws if non-integral
        }
        CHECK_NOTHROW(epoly_eval(n, r, q));
      }
    }
  }
}

TEST_CASE("n=2 even q central count needs no separate code path") {
  for (u64 q : {2ull, 4ull, 8ull}) {
    for (int r : {1, 2, 3}) {
      CHECK(stratum_count_formula(2, r, q, Stratum::Central) == 1);
      CHECK(stratum_count_enumerated(2, r, q, Stratum::Central) == 1);
    }
  }
}

TEST_CASE("weyl permutation counts are consistent with fold orbit sizes") {
  // Burnside: summing the number of distinct column orderings over canonical
  // Split3 points recovers the raw tuple count (q-1)^(2r)
  for (u64 q : {3ull, 4ull, 5ull, 7ull}) {
    for (int r : {1, 2}) {
      u64 m = q - 1;
      u64 sum = 0, raw = num::checked_pow(m, static_cast<unsigned>(2 * r));
      enumerate_points(3, r, q, [&](const CVPoint& p) {
        if (p.tag != Tag::Split3) return;
        int wc = oracle::weyl_perm_count(p, q);
        CHECK((wc == 1 || wc == 3 || wc == 6));
        Stratum s = classify_stratum(p, q);
        if (s == Stratum::Central) CHECK(wc == 1);
        if (s == Stratum::Repeating) CHECK(wc == 3);
        if (s == Stratum::Reducible) CHECK(wc == 6);  // misaligned repeats included
        sum += static_cast<u64>(wc);
      });
      CHECK(sum == raw);
    }
  }
}

TEST_CASE("content is a fold invariant") {
  CHECK(content(CVPoint{Tag::NonSplit2, {2, 0}, {}}, 3) == 2);
  CHECK(content(CVPoint{Tag::NonSplit2, {1, 0}, {}}, 3) == 1);
  CHECK(content(CVPoint{Tag::Split3, {2}, {4}}, 7) == 2);
}

TEST_CASE("work bound guards enumeration") {
  CHECK_THROWS_AS(enumerate_points(3, 2, 31, [](const CVPoint&) {}, 1000), WorkBoundExceeded);
}
