#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "charvar/oracle.hpp"

#include <random>
#include <set>

using namespace charvar;
using namespace charvar::oracle;
using cvpoints::Stratum;
using cvpoints::Tag;
using ffield::make_field;
using ffield::poly_from;

namespace {

ffield::FieldCtx field_of(u64 q) {
  auto pk = num::prime_power(q).value();
  return make_field(pk.first, pk.second);
}

Mat from_rows(int n, std::initializer_list<ffield::Elem> vals) {
  Mat m;
  m.n = n;
  int i = 0;
  for (auto v : vals) m.e[static_cast<size_t>(i++)] = v;
  return m;
}

}  // namespace

TEST_CASE("charpoly examples") {
  auto F2 = make_field(2, 1);
  CHECK(charpoly(F2, mat_identity(3)) == poly_from({1, 1, 1, 1}));  // (x-1)^3 mod 2

  Mat c = companion(F2, poly_from({1, 1, 0, 1}));
  CHECK(charpoly(F2, c) == poly_from({1, 1, 0, 1}));  // companion identity

  auto F5 = make_field(5, 1);
  Mat d = from_rows(2, {2, 0, 0, 3});
  CHECK(charpoly(F5, d) == poly_from({1, 0, 1}));  // (x-2)(x-3) = x^2+1 mod 5
}

TEST_CASE("minimal polynomial and semisimplicity") {
  auto F3 = make_field(3, 1);
  CHECK(is_semisimple(F3, mat_identity(2)));
  CHECK(min_poly(F3, mat_identity(2)) == poly_from({2, 1}));  // x - 1

  Mat jordan = from_rows(2, {1, 1, 0, 1});
  CHECK(min_poly(F3, jordan).deg() == 2);  // (x-1)^2
  CHECK_FALSE(is_semisimple(F3, jordan));

  auto F2 = make_field(2, 1);
  Mat c = companion(F2, poly_from({1, 1, 0, 1}));
  CHECK(is_semisimple(F2, c));

  // char-p corner: the swap matrix is unipotent in characteristic 2
  Mat swap2 = from_rows(2, {0, 1, 1, 0});
  CHECK_FALSE(is_semisimple(F2, swap2));
  CHECK(is_semisimple(F3, from_rows(2, {0, 1, 1, 0})));
}

TEST_CASE("centralizer orders") {
  auto F3 = make_field(3, 1);
  CHECK(group_order(2, 3, Group::SL) == 24);
  CHECK(centralizer_order(F3, {mat_identity(2)}, Group::SL) == 24);

  Mat c = companion(F3, poly_from({2, 1, 1}));  // primitive quadratic x^2+x+2
  CHECK(centralizer_order(F3, {c}, Group::SL) == 4);   // q+1
  CHECK(centralizer_order(F3, {c}, Group::GL) == 8);   // q^2-1

  auto F2 = make_field(2, 1);
  Mat c3 = companion(F2, poly_from({1, 1, 0, 1}));
  CHECK(centralizer_order(F2, {c3}, Group::SL) == 7);  // (q^3-1)/(q-1)
  CHECK(mat_order(F2, c3, 8) == 7);
}

TEST_CASE("semisimple enumeration counts") {
  auto F2 = make_field(2, 1);
  u64 count = 0;
  enumerate_commuting_semisimple(F2, 2, 1, [&](const MatTuple& t) {
    CHECK(t.size() == 1);
    CHECK(is_semisimple(F2, t[0]));
    ++count;
  });
  // identity plus the two elements of order 3 (SL_2(F_2) has three
  // non-identity unipotents, all excluded)
  CHECK(count == 3);

  auto F3 = make_field(3, 1);
  u64 pairs = 0;
  enumerate_commuting_semisimple(F3, 2, 2, [&](const MatTuple& t) {
    CHECK(mat_commute(F3, t[0], t[1]));
    ++pairs;
  });
  // cross-check below against the census orbit sizes
  GitCensus census = git_census(F3, 2, 2);
  u64 orbit_sum = 0;
  for (const auto& cls : census.classes) orbit_sum += cls.orbit_size;
  CHECK(orbit_sum == pairs);
  CHECK(census.tuple_total == pairs);
}

TEST_CASE("git census matches the closed-form counts") {
  auto F3 = make_field(3, 1);
  GitCensus c223 = git_census(F3, 2, 2);
  CHECK(c223.class_counts[Stratum::Central] == 4);
  CHECK(c223.class_counts[Stratum::Reducible] == 0);
  CHECK(c223.class_counts[Stratum::Irreducible] == 6);

  auto F2 = make_field(2, 1);
  GitCensus c312 = git_census(F2, 3, 1);
  CHECK(c312.class_counts[Stratum::Central] == 1);
  CHECK(c312.class_counts[Stratum::Repeating] == 0);
  CHECK(c312.class_counts[Stratum::Reducible] == 0);
  CHECK(c312.class_counts[Stratum::PartiallyReducible] == 1);
  CHECK(c312.class_counts[Stratum::Irreducible] == 2);

  GitCensus c322 = git_census(F2, 3, 2);
  CHECK(c322.classes.size() == 21);
}

TEST_CASE("git census over extension fields") {
  for (auto [q, r] : {std::pair<u64, int>{4, 1}, {4, 2}, {8, 1}, {9, 1}}) {
    auto F = field_of(q);
    GitCensus census = git_census(F, 2, r);
    for (auto s : cvpoints::strata_for(2)) {
      u64 got = census.class_counts.count(s) ? census.class_counts.at(s) : 0;
      CHECK(qpoly::Int(static_cast<unsigned long>(got)) ==
            cvpoints::stratum_count_formula(2, r, q, s));
    }
  }
}

TEST_CASE("orbit-stabilizer identity per census class") {
  for (auto [n, q, r] : {std::tuple<int, u64, int>{2, 2, 2}, {2, 3, 2}, {3, 2, 2}}) {
    auto F = field_of(q);
    GitCensus census = git_census(F, n, r);
    u64 gl = group_order(n, q, Group::GL);
    for (const auto& cls : census.classes) {
      CHECK(cls.orbit_size * cls.gl_centralizer_order == gl);
    }
  }
}

TEST_CASE("stabilizer table rejects unknown orders") {
  CHECK(stratum_from_sl_centralizer(2, 3, 4) == Stratum::Irreducible);
  CHECK(stratum_from_sl_centralizer(3, 2, 168) == Stratum::Central);
  CHECK_THROWS_AS(stratum_from_sl_centralizer(2, 3, 5), std::domain_error);
}

TEST_CASE("weyl_perm_count on split3 points") {
  CHECK(weyl_perm_count(cvpoints::canonical({Tag::Split3, {0}, {0}}, 7), 7) == 1);
  CHECK(weyl_perm_count(cvpoints::canonical({Tag::Split3, {1}, {1}}, 7), 7) == 3);  // {u,u,-2u}
  CHECK(weyl_perm_count(cvpoints::canonical({Tag::Split3, {1}, {2}}, 7), 7) == 6);
  CHECK(weyl_perm_count(cvpoints::make_point(Tag::NonSplit3, 2, {1}), 2) == 3);
  CHECK(weyl_perm_count(cvpoints::make_point(Tag::PartSplit3, 2, {1}), 2) == 2);
  CHECK_THROWS_AS(weyl_perm_count(cvpoints::make_point(Tag::NonSplit2, 3, {1}), 3),
                  std::invalid_argument);
}

TEST_CASE("realize examples") {
  auto F5 = make_field(5, 1);
  MatTuple t = realize(F5, cvpoints::make_point(Tag::Split2, 5, {1}));
  CHECK(t[0] == from_rows(2, {2, 0, 0, 3}));  // diag(2, 2^-1), generator 2
  CHECK(mat_det(F5, t[0]) == 1);
  CHECK(charpoly(F5, t[0]) == poly_from({1, 0, 1}));  // x^2+1

  auto F2 = make_field(2, 1);
  MatTuple ns = realize(F2, cvpoints::make_point(Tag::NonSplit3, 2, {1}));
  CHECK(ns[0] == companion(F2, poly_from({1, 1, 0, 1})));
  CHECK(mat_order(F2, ns[0], 8) == 7);  // q^2+q+1
  CHECK(ffield::is_irreducible(F2, charpoly(F2, ns[0])));

  // identity tuple from the zero split vector
  MatTuple id2 = realize(F5, cvpoints::canonical({Tag::Split2, {0, 0}, {}}, 5));
  CHECK(id2[0] == mat_identity(2));
  CHECK(id2[1] == mat_identity(2));
}

TEST_CASE("point_of_tuple inverts realize") {
  // n=2 for every q <= 9, r <= 2; n=3 at q in {2,3}, r = 1
  for (u64 q : num::prime_powers_upto(9)) {
    auto F = field_of(q);
    for (int r = 1; r <= 2; ++r) {
      cvpoints::enumerate_points(2, r, q, [&](const cvpoints::CVPoint& p) {
        CHECK(point_of_tuple(F, realize(F, p)) == p);
      });
    }
  }
  for (u64 q : {2ull, 3ull}) {
    auto F = field_of(q);
    cvpoints::enumerate_points(3, 1, q, [&](const cvpoints::CVPoint& p) {
      CHECK(point_of_tuple(F, realize(F, p)) == p);
    });
  }
}

TEST_CASE("round trip covers mixed coordinates at r=2") {
  // tuples mixing central, partially reducible and irreducible entries
  for (u64 q : {2ull, 3ull, 4ull}) {
    auto F = field_of(q);
    cvpoints::enumerate_points(3, 2, q, [&](const cvpoints::CVPoint& p) {
      CHECK(point_of_tuple(F, realize(F, p)) == p);
    });
  }
}

TEST_CASE("point_of_tuple is constant on conjugation orbits") {
  std::mt19937 rng(987654);
  for (auto [n, q] : {std::pair<int, u64>{2, 3}, {2, 5}, {3, 2}, {3, 3}}) {
    auto F = field_of(q);
    const auto& gl = group_elements(F, n, Group::GL);
    int r = (n == 2) ? 2 : 1;
    cvpoints::enumerate_points(n, r, q, [&](const cvpoints::CVPoint& p) {
      MatTuple t = realize(F, p);
      for (int trial = 0; trial < 3; ++trial) {
        const Mat& g = gl[rng() % gl.size()];
        Mat gi = mat_inv(F, g);
        MatTuple conj;
        for (const Mat& a : t) conj.push_back(mat_mul(F, mat_mul(F, g, a), gi));
        CHECK(point_of_tuple(F, conj) == p);
      }
    });
  }
}

TEST_CASE("census strata agree with the exponent model via point_of_tuple") {
  for (auto [n, q, r] : {std::tuple<int, u64, int>{2, 3, 2}, {3, 2, 2}, {3, 3, 1}}) {
    auto F = field_of(q);
    GitCensus census = git_census(F, n, r);
    for (const auto& cls : census.classes) {
      CHECK(cvpoints::classify_stratum(cls.point, q) == cls.stratum);
    }
    // distinct classes map to distinct points
    std::set<std::tuple<cvpoints::Tag, std::vector<u64>, std::vector<u64>>> pts;
    for (const auto& cls : census.classes) pts.insert({cls.point.tag, cls.point.u, cls.point.v});
    CHECK(pts.size() == census.classes.size());
  }
}

TEST_CASE("commuting-structure lemmas hold across census classes") {
  for (auto [n, q, r] : {std::tuple<int, u64, int>{2, 3, 2}, {2, 5, 2}, {3, 2, 2}, {3, 3, 2}}) {
    auto F = field_of(q);
    GitCensus census = git_census(F, n, r);
    u64 norm_one = (num::checked_pow(q, static_cast<unsigned>(n)) - 1) / (q - 1);
    for (const auto& cls : census.classes) {
      bool has_irred = false, has_partial = false;
      for (const Mat& a : cls.representative) {
        auto roots = ffield::poly_roots(F, charpoly(F, a));
        if (roots.empty()) has_irred = true;
        if (n == 3 && roots.size() == 1) has_partial = true;
      }
      if (has_irred) {
        // a coordinate with irreducible charpoly pins the centralizer order
        CHECK(cls.sl_centralizer_order == norm_one);
        // and every other coordinate is central or irreducible
        for (const Mat& a : cls.representative) {
          auto roots = ffield::poly_roots(F, charpoly(F, a));
          CHECK((is_scalar(a) || roots.empty()));
        }
      }
      if (has_partial) {
        // partially reducible coordinate: others are partial or linear x repeated
        for (const Mat& a : cls.representative) {
          auto roots = ffield::poly_roots(F, charpoly(F, a));
          bool partial = roots.size() == 1;
          bool lin_repeated = roots.size() == 3 && (roots[0] == roots[1] || roots[1] == roots[2]);
          CHECK((partial || lin_repeated));
        }
      }
    }
  }
}

TEST_CASE("work bound guards the oracle") {
  auto F5 = make_field(5, 1);
  CHECK_THROWS_AS(git_census(F5, 3, 2), WorkBoundExceeded);
  auto F4 = make_field(2, 2);
  CHECK_THROWS_AS(git_census(F4, 3, 2), WorkBoundExceeded);
}
