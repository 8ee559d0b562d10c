#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"
#include "terwb/classes.hpp"
#include "terwb/homology.hpp"

using namespace terwb;

namespace {

const PrimeField f2(2), f3(3);
const RationalField q;

template <class F>
struct Setup {
  ClassData c;
  StructuredBasis<F> b;
  MultiplicationTable<F> mt;
};

template <class F>
Setup<F> setup(const Scheme& s, const F& field) {
  auto c = class_data(s);
  auto b = structured_basis(s, 0, field, c);
  auto mt = multiplication_table(b, s, field);
  return {std::move(c), std::move(b), std::move(mt)};
}

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<std::size_t> cover_dims(const Resolution& r) {
  std::vector<std::size_t> out;
  for (const auto& s : r.steps) out.push_back(s.cover_dim);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("basic homology");

TEST_CASE("primitive idempotents") {
  auto st = setup(cycle_scheme(4), f2);
  auto e = primitive_idempotents(st.b, st.c, 4, f2);
  CHECK(e.report.passed());
  std::vector<BasisLabel> labels;
  for (auto k : e.indices) labels.push_back(st.b.labels[k]);
  CHECK(labels == std::vector<BasisLabel>{{0, 0, 0}, {0, 2, 2}, {1, 1, 1}});
  CHECK(e.block == std::vector<std::size_t>{0, 0, 1});

  auto thin = setup(find_catalog("thin-C2")->scheme, f2);
  CHECK(primitive_idempotents(thin.b, thin.c, 2, f2).indices.size() == 2);
}

TEST_CASE("projective classification of cycle(4) over GF(2)") {
  auto st = setup(cycle_scheme(4), f2);
  auto pc = projective_classification(st.mt.algebra, st.b, st.c);
  CHECK_MESSAGE(pc.report.passed(), pc.report.first_failure()->name);
  CHECK(pc.classes == 2);
  CHECK(pc.homdims == std::vector<std::vector<std::size_t>>{{1, 1}, {1, 2}});
}

TEST_CASE("projective classification on every non-thin catalog scheme") {
  for (const auto& e : catalog()) {
    if (e.kind == SchemeKind::neither) continue;
    auto st = setup(e.scheme, f2);
    auto pc = projective_classification(st.mt.algebra, st.b, st.c);
    CHECK_MESSAGE(pc.report.passed(), e.name);
    CHECK(pc.classes == st.c.r() + 1);
  }
}

TEST_CASE("Lambda(r) presentations") {
  for (std::size_t r = 0; r <= 4; ++r) {
    auto l = lambda_algebra(r, f2);
    CHECK(l.dim() == r * r + 3 * r + 1);
    CHECK(check_basic_presentation(l).passed());
    CHECK(radical_index(l) == (r == 0 ? 1u : 3u));
    auto cartan = cartan_matrix(l);
    for (std::size_t u = 0; u <= r; ++u)
      for (std::size_t v = 0; v <= r; ++v) CHECK(cartan[u][v] == (u == v && u > 0 ? 2u : 1u));
  }
  auto l1 = lambda_algebra(1, f2);
  CHECK(l1.labels() == std::vector<std::string>{"e0", "e1", "a1", "b1", "g11"});
  // b1 a1 = g11 and a1 b1 = 0.
  CHECK(l1.product(3, 2) == Algebra<PrimeField>::Sparse{{4, 1}});
  CHECK(l1.product(2, 3).empty());
  auto rad = l1.coordinate_span(l1.radical);
  auto rad2 = ideal_product(rad, rad, l1.product_fn());
  CHECK(rad2 == l1.coordinate_span({4}));
}

TEST_CASE("Lambda over the rationals is associative too") {
  for (std::size_t r = 0; r <= 3; ++r) CHECK(check_associative(lambda_algebra(r, q)).passed());
}

TEST_CASE("resolution of the simples of Lambda(1)") {
  auto l = lambda_algebra(1, f2);
  // 0 -> P_1 -> P_0 -> ... : S_0 has syzygy S_1, whose syzygy is P_0.
  auto r0 = projective_resolution(l, simple_module(l, 0));
  CHECK(r0.length == 2u);
  CHECK(cover_dims(r0) == std::vector<std::size_t>{2, 3, 2});
  CHECK(r0.exact());
  CHECK(r0.minimal());
  auto r1 = projective_resolution(l, simple_module(l, 1));
  CHECK(r1.length == 1u);
  CHECK(cover_dims(r1) == std::vector<std::size_t>{3, 2});
  auto p1 = projective_module(l, 1);
  CHECK(p1.dim == 3);
  CHECK(module_socle(l, p1).size() == 1);
  CHECK(projective_resolution(l, p1).length == 0u);
}

TEST_CASE("global dimensions") {
  CHECK(global_dimension(lambda_algebra(0, f2)).value == 0u);
  for (std::size_t r = 1; r <= 4; ++r) {
    auto gl = global_dimension(lambda_algebra(r, f2)).value;
    auto star = global_dimension(star_algebra(r, f2)).value;
    CHECK(gl == 2u);
    CHECK(star == 1u);
    CHECK(*gl == 2 * *star);
  }
  CHECK(global_dimension(split_semisimple_algebra(3, q)).value == 0u);
}

TEST_CASE("dominant dimensions") {
  auto d1 = dominant_dimension(lambda_algebra(1, f2));
  CHECK(d1.value == 2u);
  CHECK_FALSE(d1.infinite);
  CHECK(dominant_dimension(lambda_algebra(2, f2)).value == 0u);
  CHECK(dominant_dimension(lambda_algebra(3, f2)).value == 0u);
  CHECK(dominant_dimension(split_semisimple_algebra(2, q)).infinite);
  // The path algebra of 1 -> 0 has dominant dimension 1.
  CHECK(dominant_dimension(star_algebra(1, f2)).value == 1u);
}

TEST_CASE("basic algebra of cycle(4) in characteristic 2") {
  auto st = setup(cycle_scheme(4), f2);
  auto basic = basic_algebra_char2(st.mt.algebra, st.b, st.c);
  CHECK(basic.report.passed());
  CHECK(basic.algebra.dim() == 5);
  CHECK(cartan_matrix(basic.algebra) == std::vector<std::vector<std::size_t>>{{1, 1}, {1, 2}});
  auto lambda = lambda_algebra(1, f2);
  CHECK(verify_iso_psi(basic.algebra, lambda, identity_map(5)).passed());
  // Swapping a1 and b1 is not multiplicative.
  CHECK_FALSE(verify_iso_psi(basic.algebra, lambda, {0, 1, 3, 2, 4}).passed());
  CHECK_FALSE(verify_iso_psi(basic.algebra, lambda_algebra(2, f2), identity_map(11)).passed());
  CHECK(global_dimension(basic.algebra).value == 2u);
  CHECK(dominant_dimension(basic.algebra).value == 2u);

  auto rr = radical_char2(st.mt.algebra, st.b, st.c, cycle_scheme(4).data().valency);
  CHECK(radical_index(basic.algebra) == rr.index);
}

TEST_CASE("Gamma matches Lambda on the non-thin catalog") {
  for (const auto& e : catalog()) {
    if (e.kind != SchemeKind::quasi_thin) continue;
    auto st = setup(e.scheme, f2);
    auto basic = basic_algebra_char2(st.mt.algebra, st.b, st.c);
    CHECK_MESSAGE(basic.report.passed(), e.name);
    const auto r = st.c.r();
    auto lambda = lambda_algebra(r, f2);
    CHECK(basic.algebra.dim() == r * r + 3 * r + 1);
    CHECK(verify_iso_psi(basic.algebra, lambda, identity_map(lambda.dim())).passed());
    CHECK(cartan_matrix(basic.algebra) == cartan_matrix(lambda));
    auto dd = dominant_dimension(basic.algebra);
    CHECK(dd.value == (r == 1 ? 2u : 0u));
  }
}

TEST_CASE("thin schemes in characteristic 2 have a one-dimensional basic algebra") {
  auto st = setup(find_catalog("thin-C2")->scheme, f2);
  auto basic = basic_algebra_char2(st.mt.algebra, st.b, st.c);
  CHECK(basic.report.passed());
  CHECK(basic.algebra.dim() == 1);
  CHECK(dominant_dimension(basic.algebra).infinite);
}

TEST_CASE("semisimple basic algebras away from characteristic 2") {
  for (const auto* name : {"cycle-4", "cycle-7", "wreath-2-3", "thin-S3"}) {
    auto st = setup(find_catalog(name)->scheme, q);
    auto basic = basic_algebra_semisimple(st.mt.algebra, st.b, st.c);
    CHECK_MESSAGE(basic.report.passed(), name);
    CHECK(basic.algebra.dim() == st.c.r() + 1);
    CHECK(center_dim(st.mt.algebra) == st.c.r() + 1);
    CHECK(global_dimension(basic.algebra).value == 0u);
    CHECK(dominant_dimension(basic.algebra).infinite);
  }
  auto st = setup(cycle_scheme(5), f2);
  CHECK_THROWS_AS(basic_algebra_semisimple(st.mt.algebra, st.b, st.c), std::invalid_argument);
}

TEST_SUITE_END();
