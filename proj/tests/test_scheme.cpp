#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"
#include "terwb/classes.hpp"

using namespace terwb;

namespace {

bool has_axiom(const SchemeValidation& v, Axiom a) {
  for (const auto& x : v.violations)
    if (x.axiom == a) return true;
  return false;
}

}  // namespace

TEST_SUITE_BEGIN("scheme core");

TEST_CASE("cycle(4) intersection data") {
  auto s = cycle_scheme(4);
  CHECK(s.n() == 4);
  CHECK(s.d() == 2);
  CHECK(s.data().valency == std::vector<std::size_t>{1, 2, 1});
  CHECK(s.p(1, 1, 0) == 2);
  CHECK(s.p(1, 1, 2) == 2);
  CHECK(s.p(1, 1, 1) == 0);
  CHECK(s.p(1, 2, 1) == 1);
  CHECK(s.converse(1) == 1);
  CHECK(s.neighbourhood(0, 1) == std::vector<Vertex>{1, 3});
  CHECK(s.data().complex_product({1}, {1}) == std::vector<Relation>{0, 2});
  CHECK(valencies(s).k == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("intersection numbers agree with brute-force counts on the catalog") {
  for (const auto& e : catalog()) {
    auto table = support::relation_matrix(e.scheme);
    const auto d = e.scheme.d();
    for (std::size_t i = 0; i <= d; ++i)
      for (std::size_t j = 0; j <= d; ++j)
        for (std::size_t l = 0; l <= d; ++l)
          REQUIRE(static_cast<long long>(e.scheme.p(i, j, l)) ==
                  support::intersection_number(table, static_cast<long long>(i), static_cast<long long>(j),
                                               static_cast<long long>(l)));
  }
}

TEST_CASE("axiom violations carry witnesses") {
  SUBCASE("S1: diagonal not relation 0") {
    auto v = validate_scheme({{0, 1}, {1, 1}});
    CHECK_FALSE(v.ok());
    CHECK(has_axiom(v, Axiom::s1));
    CHECK_FALSE(v.scheme);
  }
  SUBCASE("S2: converse of R_1 is not a relation") {
    auto v = validate_scheme({{0, 1, 2}, {1, 0, 2}, {2, 1, 0}});
    CHECK(has_axiom(v, Axiom::s2));
    REQUIRE_FALSE(v.violations.empty());
    CHECK_FALSE(v.violations.front().witness.empty());
  }
  SUBCASE("S3: the path 0-1-2 is not coherent") {
    auto v = validate_scheme({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
    CHECK(has_axiom(v, Axiom::s3));
  }
  SUBCASE("shape, range and empty relations") {
    CHECK(has_axiom(validate_scheme({{0, 1}, {1}}), Axiom::shape));
    CHECK(has_axiom(validate_scheme({}), Axiom::shape));
    CHECK(has_axiom(validate_scheme({{0, -1}, {-1, 0}}), Axiom::range));
    CHECK(has_axiom(validate_scheme({{0, 2}, {2, 0}}), Axiom::nonempty));
  }
  CHECK_THROWS_AS(make_scheme({{0, 1}, {1, 1}}), SchemeError);
}

TEST_CASE("classification") {
  CHECK(classify(thin_from_group(cyclic_group(3))).kind == SchemeKind::thin);
  CHECK(classify(cycle_scheme(6)).kind == SchemeKind::quasi_thin);
  auto k4 = make_scheme({{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}});
  auto cls = classify(k4);
  CHECK(cls.kind == SchemeKind::neither);
  CHECK(cls.by_valency.at(3) == std::vector<Relation>{1});
  CHECK_FALSE(is_quasi_thin(k4));
  CHECK_THROWS_AS(bad_pairs(k4.data()), NotQuasiThinError);
  CHECK_THROWS_AS(class_data(k4), NotQuasiThinError);
}

TEST_CASE("valency identities hold on the catalog and detect corrupted data") {
  for (const auto& e : catalog()) {
    auto rep = check_valency_identities(e.scheme);
    CHECK_MESSAGE(rep.passed, e.name << ": " << rep.failure);
    CHECK(rep.checks > 0);
  }
  auto data = cycle_scheme(5).data();
  data.p.at(1, 1, 0) = 1;
  CHECK_FALSE(check_valency_identities(data).passed);
}

TEST_CASE("class data of small cycles") {
  auto c4 = class_data(cycle_scheme(4));
  CHECK(c4.a1 == std::vector<Relation>{0, 2});
  CHECK(c4.a2 == std::vector<Relation>{1});
  CHECK(c4.r_set == std::set<RelationPair>{{1, 1}});
  CHECK(c4.s_set.empty());
  CHECK(c4.r() == 1);
  CHECK(c4.members(0) == std::vector<Relation>{0, 1, 2});
  CHECK(c4.d_set(0) == std::vector<Relation>{0, 2});
  CHECK(c4.d_set(1) == std::vector<Relation>{1});

  auto c5 = class_data(cycle_scheme(5));
  CHECK(c5.a1 == std::vector<Relation>{0});
  CHECK(c5.r_set.size() == 4);
  CHECK(c5.r() == 1);
  CHECK(c5.classes[0] == std::vector<Relation>{1, 2});

  auto c8 = class_data(cycle_scheme(8));
  CHECK(c8.a1 == std::vector<Relation>{0, 4});
  CHECK(c8.classes == std::vector<std::vector<Relation>>{{1, 2, 3}});
  CHECK(c8.r_set.size() == 9);
  CHECK(c8.class_of[2] == 1);
  CHECK(c8.class_of[4] == 0);
}

TEST_CASE("thin schemes have no valency-2 relations") {
  auto c = class_data(thin_from_group(klein_group()));
  CHECK(c.a2.empty());
  CHECK(c.r() == 0);
  CHECK(c.a1.size() == 4);
}

TEST_CASE("wreath products Z2 wr Zm give r = m - 1 classes and no bad pairs") {
  for (std::size_t m = 2; m <= 5; ++m) {
    auto s = schurian_from_permgroup(2 * m, wreath_generators(m));
    auto c = class_data(s);
    CHECK(c.r() == m - 1);
    CHECK(c.s_set.empty());
    CHECK(c.r_set.size() + c.s_set.size() + (s.d() + 1) * (s.d() + 1) == m - 1 + (m + 1) * (m + 1));
  }
}

TEST_CASE("R and S agree with brute-force complex products") {
  for (const auto& e : catalog()) {
    if (e.kind == SchemeKind::neither) continue;
    auto c = class_data(e.scheme);
    auto table = support::relation_matrix(e.scheme);
    std::size_t d = e.scheme.d();
    CHECK(c.r_set.size() + c.s_set.size() + (d + 1) * (d + 1) == support::combinatorial_dim(table, d));
    for (auto [i, j] : c.r_set)
      CHECK(support::complex_product_size(table, static_cast<long long>(e.scheme.converse(i)),
                                          static_cast<long long>(j)) == 2);
  }
}

TEST_CASE("property: relabelled schemes keep their invariants") {
  for (int trial = 0; trial < 120; ++trial) {
    const auto& cat = catalog();
    const auto& e = cat[support::uniform(0, cat.size() - 1)];
    auto s = support::relabel(e.scheme);
    CHECK(check_valency_identities(s).passed);
    CHECK(classify(s).kind == e.kind);
    auto k1 = s.data().valency, k2 = e.scheme.data().valency;
    std::sort(k1.begin(), k1.end());
    std::sort(k2.begin(), k2.end());
    CHECK(k1 == k2);
    if (e.kind != SchemeKind::neither) {
      auto c1 = class_data(s), c2 = class_data(e.scheme);
      CHECK(c1.r() == c2.r());
      CHECK(c1.r_set.size() == c2.r_set.size());
      CHECK(c1.s_set.size() == c2.s_set.size());
    }
  }
}

TEST_CASE("property: valency identities on random orbital schemes") {
  for (int trial = 0; trial < 150; ++trial) {
    auto s = trial % 2 ? support::random_schurian(7) : support::random_metacyclic(12);
    auto rep = check_valency_identities(s);
    CHECK_MESSAGE(rep.passed, rep.failure);
    auto table = support::relation_matrix(s);
    auto i = support::uniform(0, s.d()), j = support::uniform(0, s.d()), l = support::uniform(0, s.d());
    CHECK(static_cast<long long>(s.p(i, j, l)) ==
          support::intersection_number(table, static_cast<long long>(i), static_cast<long long>(j),
                                       static_cast<long long>(l)));
    CHECK(s.data().product_size(i, j) ==
          support::complex_product_size(table, static_cast<long long>(i), static_cast<long long>(j)));
  }
}

namespace {

/// Hand-written data on relations 0 (valency 1), 1 and 2 (valency 2); not a scheme.
IntersectionData synthetic_data(bool symmetric) {
  IntersectionData data;
  data.d = 2;
  data.valency = {1, 2, 2};
  data.involution = {0, 1, 2};
  data.p = IntersectionTensor(2);
  for (Relation j = 0; j <= 2; ++j) {
    data.p.at(0, j, j) = 1;
    data.p.at(j, 0, j) = 1;
  }
  data.p.at(1, 1, 0) = 2;  // |R_1 R_1| = 1
  data.p.at(2, 2, 0) = 2;  // |R_2 R_2| = 2
  data.p.at(2, 2, 1) = 1;
  data.p.at(1, 2, 2) = 1;  // edge 1 -> 2, |R_1 R_2| = 1
  if (symmetric) data.p.at(2, 1, 2) = 1;  // |R_2 R_1| = 1
  return data;
}

}  // namespace

TEST_CASE("bad pairs on synthetic intersection data") {
  auto c = class_data(synthetic_data(true));
  CHECK(bad_pairs(synthetic_data(true)) == std::set<RelationPair>{{1, 1}, {1, 2}, {2, 1}});
  CHECK(c.r_set == std::set<RelationPair>{{2, 2}});
  CHECK(c.s_set.size() == 3);
  REQUIRE(c.r() == 1);
  CHECK(c.classes[0] == std::vector<Relation>{1, 2});

  // (1,2) is a bad pair but nothing relates 2 back to 1
  CHECK(bad_pairs(synthetic_data(false)).count({1, 2}) == 1);
  CHECK_THROWS_WITH_AS(class_data(synthetic_data(false)), doctest::Contains("not symmetric"), ClassDataError);
}

TEST_SUITE_END();
